//! Finite abelian groups given as products of cyclic factors, their
//! elements, characters, subgroups, homomorphisms and quotients.
//!
//! A group is stored in the factor order the caller supplies; two groups are
//! equal when their factor sequences are equal. Characters of
//! `Z_{n_1} x ... x Z_{n_m}` are exponent tuples `(k_1, ..., k_m)` acting by
//! `g -> prod zeta_{n_i}^{k_i e_i}`, with values in `Q(zeta_N)` where `N` is
//! the group exponent.

mod hom;
mod quotient;
mod snf;
mod subgroup;

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;

use crate::cyclo::CycNum;
use crate::error::{Error, Result};

pub use hom::GroupHom;
pub use quotient::{quotient, Quotient};
pub use snf::smith_normal_form;
pub use subgroup::{all_subgroups, annihilator, annihilator_in_dual, AbelianElement, Subgroup};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinAbGroup {
    factors: Arc<[u64]>,
    exponent: u64,
}

impl FinAbGroup {
    /// `Z_{n_1} x ... x Z_{n_m}`; an empty list gives the trivial group.
    pub fn new(factors: &[u64]) -> Result<FinAbGroup> {
        if let Some(pos) = factors.iter().position(|&n| n == 0) {
            return Err(Error::InvalidGroup(format!("factor {pos} is zero")));
        }
        let exponent = factors.iter().fold(1u64, |acc, n| acc.lcm(n));
        Ok(FinAbGroup {
            factors: factors.into(),
            exponent,
        })
    }

    pub fn trivial() -> FinAbGroup {
        FinAbGroup::new(&[]).expect("empty product")
    }

    /// Cyclic group `Z_n`.
    pub fn cyclic(n: u64) -> Result<FinAbGroup> {
        FinAbGroup::new(&[n])
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn identity(&self) -> GroupElem {
        GroupElem {
            group: self.clone(),
            exps: vec![0; self.rank()],
        }
    }

    /// Element with the given exponents, reduced modulo each factor.
    pub fn elem(&self, exps: &[i64]) -> Result<GroupElem> {
        self.check_len(exps.len())?;
        Ok(GroupElem {
            group: self.clone(),
            exps: self.reduce(exps),
        })
    }

    /// The `i`-th cyclic generator.
    pub fn generator(&self, i: usize) -> GroupElem {
        let mut exps = vec![0; self.rank()];
        exps[i] = 1 % self.factors[i];
        GroupElem {
            group: self.clone(),
            exps,
        }
    }

    /// All elements in lexicographic order of their exponent tuples.
    pub fn elements(&self) -> Vec<GroupElem> {
        self.tuples()
            .into_iter()
            .map(|exps| GroupElem {
                group: self.clone(),
                exps,
            })
            .collect()
    }

    fn tuples(&self) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new()];
        for &n in self.factors.iter() {
            out = out
                .into_iter()
                .flat_map(|t| {
                    (0..n).map(move |e| {
                        let mut u = t.clone();
                        u.push(e);
                        u
                    })
                })
                .collect();
        }
        out
    }

    /// Direct product with the factors of `other` appended.
    pub fn direct_product(&self, other: &FinAbGroup) -> FinAbGroup {
        let factors: Vec<u64> = self.factors.iter().chain(other.factors.iter()).copied().collect();
        FinAbGroup::new(&factors).expect("positive factors")
    }

    pub fn trivial_character(&self) -> Character {
        Character {
            group: self.clone(),
            exps: vec![0; self.rank()],
        }
    }

    pub fn character(&self, exps: &[i64]) -> Result<Character> {
        self.check_len(exps.len())?;
        Ok(Character {
            group: self.clone(),
            exps: self.reduce(exps),
        })
    }

    /// The dual group: every character, trivial character first.
    pub fn dual(&self) -> Vec<Character> {
        self.tuples()
            .into_iter()
            .map(|exps| Character {
                group: self.clone(),
                exps,
            })
            .collect()
    }

    /// All subgroups, smallest first.
    pub fn subgroups(&self) -> Vec<Subgroup<GroupElem>> {
        all_subgroups(self)
    }

    /// All subgroups of the dual group.
    pub fn dual_subgroups(&self) -> Vec<Subgroup<Character>> {
        all_subgroups(self)
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.rank() {
            return Err(Error::GroupMismatch(format!(
                "expected {} exponents for {self}, got {len}",
                self.rank()
            )));
        }
        Ok(())
    }

    fn reduce(&self, exps: &[i64]) -> Vec<u64> {
        exps.iter()
            .zip(self.factors.iter())
            .map(|(&e, &n)| e.rem_euclid(n as i64) as u64)
            .collect()
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(|n| format!("Z{n}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl fmt::Debug for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinAbGroup{:?}", &*self.factors)
    }
}

/// Element of a [`FinAbGroup`], an exponent tuple reduced modulo the factors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElem {
    group: FinAbGroup,
    exps: Vec<u64>,
}

fn mismatch(a: &FinAbGroup, b: &FinAbGroup) -> Error {
    Error::GroupMismatch(format!("{a} vs {b}"))
}

impl GroupElem {
    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exps
    }

    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &GroupElem) -> Result<GroupElem> {
        if self.group != other.group {
            return Err(mismatch(&self.group, &other.group));
        }
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .zip(self.group.factors.iter())
            .map(|((a, b), n)| (a + b) % n)
            .collect();
        Ok(GroupElem {
            group: self.group.clone(),
            exps,
        })
    }

    pub fn inv(&self) -> GroupElem {
        let exps = self
            .exps
            .iter()
            .zip(self.group.factors.iter())
            .map(|(a, n)| (n - a) % n)
            .collect();
        GroupElem {
            group: self.group.clone(),
            exps,
        }
    }

    pub fn pow(&self, k: i64) -> GroupElem {
        let exps: Vec<i64> = self
            .exps
            .iter()
            .zip(self.group.factors.iter())
            .map(|(&a, &n)| ((a as i128 * k as i128).rem_euclid(n as i128)) as i64)
            .collect();
        self.group.elem(&exps).expect("same rank")
    }

    /// Order: lcm over the components of `n_i / gcd(n_i, e_i)`.
    pub fn order(&self) -> u64 {
        self.exps
            .iter()
            .zip(self.group.factors.iter())
            .fold(1u64, |acc, (&e, &n)| acc.lcm(&(n / n.gcd(&e))))
    }
}

impl std::ops::Mul for &GroupElem {
    type Output = GroupElem;
    fn mul(self, rhs: &GroupElem) -> GroupElem {
        GroupElem::mul(self, rhs).expect("elements of the same group")
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.exps.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A character of a [`FinAbGroup`], given by its exponent tuple.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    group: FinAbGroup,
    exps: Vec<u64>,
}

impl Character {
    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exps
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// The exponent `k` with `chi(g) = zeta_N^k`, `N` the group exponent.
    pub fn pairing(&self, g: &GroupElem) -> Result<u64> {
        if self.group != g.group {
            return Err(mismatch(&self.group, &g.group));
        }
        let big_n = self.group.exponent as u128;
        let mut acc: u128 = 0;
        for ((&k, &e), &n) in self.exps.iter().zip(&g.exps).zip(self.group.factors.iter()) {
            acc += (k as u128) * (e as u128) * (big_n / n as u128);
        }
        Ok((acc % big_n) as u64)
    }

    /// `chi(g)` as an exact root of unity of conductor equal to the group
    /// exponent.
    pub fn eval(&self, g: &GroupElem) -> Result<CycNum> {
        let k = self.pairing(g)?;
        Ok(CycNum::zeta_pow(self.group.exponent, k as i64))
    }

    pub fn mul(&self, other: &Character) -> Result<Character> {
        if self.group != other.group {
            return Err(mismatch(&self.group, &other.group));
        }
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .zip(self.group.factors.iter())
            .map(|((a, b), n)| (a + b) % n)
            .collect();
        Ok(Character {
            group: self.group.clone(),
            exps,
        })
    }

    pub fn inv(&self) -> Character {
        let exps = self
            .exps
            .iter()
            .zip(self.group.factors.iter())
            .map(|(a, n)| (n - a) % n)
            .collect();
        Character {
            group: self.group.clone(),
            exps,
        }
    }

    pub fn order(&self) -> u64 {
        self.exps
            .iter()
            .zip(self.group.factors.iter())
            .fold(1u64, |acc, (&e, &n)| acc.lcm(&(n / n.gcd(&e))))
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.exps.iter().map(u64::to_string).collect();
        write!(f, "chi({})", parts.join(","))
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Every abelian group of order `n` up to isomorphism, each written as a
/// product of cyclic groups of prime-power order.
pub fn abelian_groups_of_order(n: u64) -> Vec<FinAbGroup> {
    fn partitions(k: u32, max: u32) -> Vec<Vec<u32>> {
        if k == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for first in (1..=k.min(max)).rev() {
            for mut rest in partitions(k - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    assert!(n >= 1, "group order must be positive");
    let mut m = n;
    let mut prime_powers = Vec::new();
    let mut p = 2;
    while m > 1 {
        let mut k = 0;
        while m.is_multiple_of(p) {
            m /= p;
            k += 1;
        }
        if k > 0 {
            prime_powers.push((p, k));
        }
        p += 1;
    }
    let mut lists: Vec<Vec<u64>> = vec![Vec::new()];
    for (p, k) in prime_powers {
        let mut next = Vec::new();
        for list in &lists {
            for part in partitions(k, k) {
                let mut l = list.clone();
                l.extend(part.iter().map(|&e| p.pow(e)));
                next.push(l);
            }
        }
        lists = next;
    }
    lists
        .into_iter()
        .map(|l| FinAbGroup::new(&l).expect("positive factors"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_group_examples() {
        let t = FinAbGroup::new(&[]).unwrap();
        assert_eq!((t.order(), t.exponent()), (1, 1));
        let k = FinAbGroup::new(&[2, 2]).unwrap();
        assert_eq!((k.order(), k.exponent()), (4, 2));
        let z4 = FinAbGroup::new(&[4]).unwrap();
        assert_eq!((z4.order(), z4.exponent()), (4, 4));
        assert!(matches!(FinAbGroup::new(&[2, 0]), Err(Error::InvalidGroup(_))));
    }

    #[test]
    fn element_arithmetic() {
        let z4 = FinAbGroup::cyclic(4).unwrap();
        let a = z4.elem(&[1]).unwrap();
        let b = z4.elem(&[3]).unwrap();
        assert!(a.mul(&b).unwrap().is_identity());
        let k = FinAbGroup::new(&[2, 2]).unwrap();
        let x = k.elem(&[1, 1]).unwrap();
        assert_eq!(x.inv(), x);
        let z6 = FinAbGroup::cyclic(6).unwrap();
        assert_eq!(z6.elem(&[2]).unwrap().order(), 3);
        assert_eq!(z6.elem(&[-1]).unwrap().exponents(), &[5]);
        let other = FinAbGroup::cyclic(5).unwrap();
        assert!(matches!(a.mul(&other.identity()), Err(Error::GroupMismatch(_))));
    }

    #[test]
    fn character_values() {
        let z2 = FinAbGroup::cyclic(2).unwrap();
        let chi = z2.character(&[1]).unwrap();
        assert_eq!(chi.eval(&z2.elem(&[1]).unwrap()).unwrap(), CycNum::from_int(-1, 1));
        let z4 = FinAbGroup::cyclic(4).unwrap();
        let chi = z4.character(&[1]).unwrap();
        assert_eq!(chi.eval(&z4.elem(&[2]).unwrap()).unwrap(), CycNum::from_int(-1, 1));
        for g in z4.elements() {
            assert!(z4.trivial_character().eval(&g).unwrap().is_one());
        }
        let other = FinAbGroup::cyclic(3).unwrap();
        assert!(chi.eval(&other.identity()).is_err());
    }

    #[test]
    fn dual_group_listing() {
        let t = FinAbGroup::trivial();
        assert_eq!(t.dual().len(), 1);
        assert!(t.dual()[0].eval(&t.identity()).unwrap().is_one());
        let z2 = FinAbGroup::cyclic(2).unwrap();
        let d = z2.dual();
        assert!(d[0].is_trivial());
        let vals: Vec<CycNum> = z2.elements().iter().map(|g| d[1].eval(g).unwrap()).collect();
        assert_eq!(vals, vec![CycNum::one(1), CycNum::from_int(-1, 1)]);
    }

    #[test]
    fn klein_character_table_is_orthogonal() {
        // the 4x4 table of Z2 x Z2 has entries +-1; rows are orthogonal
        let k = FinAbGroup::new(&[2, 2]).unwrap();
        let table: Vec<Vec<i64>> = k
            .dual()
            .iter()
            .map(|chi| {
                k.elements()
                    .iter()
                    .map(|g| if chi.pairing(g).unwrap() == 0 { 1 } else { -1 })
                    .collect()
            })
            .collect();
        assert_eq!(
            table,
            vec![
                vec![1, 1, 1, 1],
                vec![1, -1, 1, -1],
                vec![1, 1, -1, -1],
                vec![1, -1, -1, 1]
            ]
        );
    }

    #[test]
    fn character_orthogonality() {
        for factors in [vec![6u64], vec![2, 4], vec![3, 3], vec![2, 2, 2]] {
            let g = FinAbGroup::new(&factors).unwrap();
            let dual = g.dual();
            for chi in &dual {
                for psi in &dual {
                    let mut sum = CycNum::zero(1);
                    for x in g.elements() {
                        sum = &sum + &(&chi.eval(&x).unwrap() * &psi.eval(&x).unwrap().inv().unwrap());
                    }
                    if chi == psi {
                        assert_eq!(sum, CycNum::from_int(g.order() as i64, 1));
                    } else {
                        assert!(sum.is_zero(), "{chi} vs {psi} in {g}");
                    }
                }
            }
        }
    }

    #[test]
    fn characters_separate_elements() {
        let g = FinAbGroup::new(&[2, 6]).unwrap();
        let els = g.elements();
        for (i, a) in els.iter().enumerate() {
            for b in &els[i + 1..] {
                assert!(g
                    .dual()
                    .iter()
                    .any(|chi| chi.pairing(a).unwrap() != chi.pairing(b).unwrap()));
            }
        }
    }

    #[test]
    fn character_is_multiplicative() {
        let g = FinAbGroup::new(&[4, 6]).unwrap();
        for chi in g.dual() {
            for a in g.elements() {
                for b in [g.elem(&[1, 5]).unwrap(), g.elem(&[3, 2]).unwrap()] {
                    let lhs = chi.eval(&(&a * &b)).unwrap();
                    let rhs = &chi.eval(&a).unwrap() * &chi.eval(&b).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn group_counts() {
        let counts: Vec<usize> = (1..=16).map(|n| abelian_groups_of_order(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5]);
        for n in 1..=16 {
            for g in abelian_groups_of_order(n) {
                assert_eq!(g.order(), n);
            }
        }
    }
}
