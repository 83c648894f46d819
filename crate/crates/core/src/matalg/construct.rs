use std::collections::BTreeSet;

use super::{Grading, GradingKind};
use crate::cyclo::{CycNum, Mat};
use crate::error::{Error, Result};
use crate::groups::{FinAbGroup, GroupElem, GroupHom};

/// Elementary grading: `E_ij` is homogeneous of degree `g_i^{-1} g_j`.
pub fn elementary_grading(group: &FinAbGroup, n: usize, tuple: &[GroupElem]) -> Result<Grading> {
    if n == 0 || tuple.len() != n {
        return Err(Error::InvalidTuple(format!(
            "tuple of length {} for matrices of order {n}",
            tuple.len()
        )));
    }
    if let Some(g) = tuple.iter().find(|g| g.group() != group) {
        return Err(Error::GroupMismatch(format!("{g} is not an element of {group}")));
    }
    let mut labeled = Vec::with_capacity(n * n);
    for (i, gi) in tuple.iter().enumerate() {
        let gi_inv = gi.inv();
        for (j, gj) in tuple.iter().enumerate() {
            labeled.push((&gi_inv * gj, unit_name(i, j), Mat::unit(n, i, j)));
        }
    }
    Grading::from_labeled(group, n, GradingKind::Associative, labeled)
}

pub(crate) fn unit_name(i: usize, j: usize) -> String {
    format!("E({},{})", i + 1, j + 1)
}

/// Clock and shift matrices of order `n` with `epsilon = zeta_n`:
/// `X_a = diag(eps^{n-1}, ..., eps, 1)` and `X_b` the cyclic shift with
/// ones at `(i, i+1)` and `(n-1, 0)`.
#[derive(Clone, Debug)]
pub struct EpsilonSeed {
    pub n: usize,
    pub epsilon: CycNum,
    pub x_a: Mat,
    pub x_b: Mat,
}

impl EpsilonSeed {
    pub fn new(n: usize) -> Result<EpsilonSeed> {
        if n == 0 {
            return Err(Error::InvalidOrder("matrix order must be positive".into()));
        }
        let big_n = n as u64;
        let epsilon = CycNum::zeta(big_n)?;
        let diag: Vec<CycNum> = (0..n).map(|i| CycNum::zeta_pow(big_n, (n - 1 - i) as i64)).collect();
        let x_a = Mat::diag(&diag);
        let mut shift = vec![CycNum::zero(1); n * n];
        for i in 0..n {
            shift[i * n + (i + 1) % n] = CycNum::one(1);
        }
        let x_b = Mat::from_entries(n, n, shift)?;
        Ok(EpsilonSeed { n, epsilon, x_a, x_b })
    }

    /// `X_a^i X_b^j`.
    pub fn monomial(&self, i: usize, j: usize) -> Mat {
        &self.x_a.pow(i as u32) * &self.x_b.pow(j as u32)
    }

    /// The grading group `Z_n x Z_n`, or the trivial group when `n = 1`.
    pub fn group(&self) -> FinAbGroup {
        if self.n == 1 {
            FinAbGroup::trivial()
        } else {
            FinAbGroup::new(&[self.n as u64, self.n as u64]).expect("positive order")
        }
    }

    pub fn degree(&self, i: usize, j: usize) -> GroupElem {
        let g = self.group();
        if self.n == 1 {
            g.identity()
        } else {
            g.elem(&[i as i64, j as i64]).expect("rank two")
        }
    }
}

pub(crate) fn monomial_name(i: usize, j: usize) -> String {
    let part = |s: &str, e: usize| match e {
        0 => String::new(),
        1 => s.to_string(),
        _ => format!("{s}^{e}"),
    };
    let name = format!("{}{}", part("Xa", i), part("Xb", j));
    if name.is_empty() {
        "I".to_string()
    } else {
        name
    }
}

/// The fine grading of `M_n` by `Z_n x Z_n` in which `a^i b^j` spans
/// `X_a^i X_b^j`.
pub fn epsilon_grading(n: usize) -> Result<Grading> {
    let seed = EpsilonSeed::new(n)?;
    let mut labeled = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            labeled.push((seed.degree(i, j), monomial_name(i, j), seed.monomial(i, j)));
        }
    }
    Grading::from_labeled(&seed.group(), n, GradingKind::Associative, labeled)
}

/// Tensor product graded by the direct product of the two groups.
pub fn tensor_grading(a: &Grading, b: &Grading) -> Result<Grading> {
    let (common, ia, ib) = GroupHom::product_inclusions(a.group(), b.group());
    tensor_grading_in(a, b, &common, &ia, &ib)
}

/// Tensor product graded by a common group into which both gradings embed.
/// The embedded supports may only share the identity.
pub fn tensor_grading_in(
    a: &Grading,
    b: &Grading,
    common: &FinAbGroup,
    embed_a: &GroupHom,
    embed_b: &GroupHom,
) -> Result<Grading> {
    for (g, e) in [(a, embed_a), (b, embed_b)] {
        if g.kind() == GradingKind::Lie {
            return Err(Error::KindMismatch("tensor products need associative gradings".into()));
        }
        if e.source() != g.group() || e.target() != common {
            return Err(Error::BadEmbedding(format!(
                "map {} -> {} does not fit {} -> {common}",
                e.source(),
                e.target(),
                g.group()
            )));
        }
        if !e.is_injective() {
            return Err(Error::BadEmbedding(format!("map from {} is not injective", e.source())));
        }
    }
    let sa: BTreeSet<GroupElem> = a.support().iter().map(|g| embed_a.apply(g)).collect::<Result<_>>()?;
    for h in b.support() {
        let h = embed_b.apply(&h)?;
        if !h.is_identity() && sa.contains(&h) {
            return Err(Error::SupportClash(format!("{h} lies in both supports")));
        }
    }
    let mut labeled = Vec::new();
    for g in a.support() {
        let ga = embed_a.apply(&g)?;
        let ua = a.named_basis(&g);
        for h in b.support() {
            let deg = &ga * &embed_b.apply(&h)?;
            for (nu, u) in &ua {
                for (nv, v) in b.named_basis(&h) {
                    labeled.push((deg.clone(), format!("{nu}⊗{nv}"), u.kron(&v)));
                }
            }
        }
    }
    Grading::from_labeled(common, a.n() * b.n(), GradingKind::Associative, labeled)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::Subspace;

    #[test]
    fn trivial_tuple_gives_trivial_grading() {
        let g = FinAbGroup::cyclic(3).unwrap();
        let gr = elementary_grading(&g, 3, &vec![g.identity(); 3]).unwrap();
        assert_eq!(gr.support(), vec![g.identity()]);
        assert_eq!(gr.component(&g.identity()), Subspace::full(9));
    }

    #[test]
    fn z2_tuple_dimensions() {
        let g = FinAbGroup::cyclic(2).unwrap();
        let t = [g.elem(&[0]).unwrap(), g.elem(&[0]).unwrap(), g.elem(&[1]).unwrap()];
        let gr = elementary_grading(&g, 3, &t).unwrap();
        assert_eq!(gr.dims(), vec![(g.elem(&[0]).unwrap(), 5), (g.elem(&[1]).unwrap(), 4)]);
    }

    #[test]
    fn z2_order_two_units() {
        let g = FinAbGroup::cyclic(2).unwrap();
        let one = g.elem(&[1]).unwrap();
        let gr = elementary_grading(&g, 2, &[g.identity(), one.clone()]).unwrap();
        let c1 = gr.component(&one);
        assert!(c1.contains_mat(&Mat::unit(2, 0, 1)).unwrap());
        assert!(c1.contains_mat(&Mat::unit(2, 1, 0)).unwrap());
        let c0 = gr.component(&g.identity());
        assert!(c0.contains_mat(&Mat::unit(2, 0, 0)).unwrap());
        assert!(c0.contains_mat(&Mat::unit(2, 1, 1)).unwrap());
    }

    #[test]
    fn tuple_length_checked() {
        let g = FinAbGroup::cyclic(2).unwrap();
        assert!(matches!(
            elementary_grading(&g, 3, &[g.identity()]),
            Err(Error::InvalidTuple(_))
        ));
    }

    #[test]
    fn support_of_z4_tuple() {
        let g = FinAbGroup::cyclic(4).unwrap();
        let gr = elementary_grading(&g, 2, &[g.elem(&[0]).unwrap(), g.elem(&[1]).unwrap()]).unwrap();
        let s: Vec<u64> = gr.support().iter().map(|x| x.exponents()[0]).collect();
        assert_eq!(s, vec![0, 1, 3]);
    }

    #[test]
    fn epsilon_two_matrices() {
        let seed = EpsilonSeed::new(2).unwrap();
        assert_eq!(seed.x_a, Mat::from_ints(&[&[-1, 0], &[0, 1]]));
        assert_eq!(seed.x_b, Mat::from_ints(&[&[0, 1], &[1, 0]]));
        assert_eq!(seed.monomial(1, 1), Mat::from_ints(&[&[0, -1], &[1, 0]]));
        let gr = epsilon_grading(2).unwrap();
        assert_eq!(gr.support().len(), 4);
        assert!(gr.dims().iter().all(|(_, d)| *d == 1));
    }

    #[test]
    fn epsilon_one_is_trivial() {
        let gr = epsilon_grading(1).unwrap();
        assert_eq!(gr.group(), &FinAbGroup::trivial());
        assert_eq!(gr.total_dim(), 1);
    }

    #[test]
    fn clock_shift_commutation_n3() {
        let s = EpsilonSeed::new(3).unwrap();
        let lhs = &(&s.x_a * &s.x_b) * &s.x_a.inverse().unwrap();
        assert_eq!(lhs, s.x_b.scale(&CycNum::zeta(3).unwrap()));
    }

    #[test]
    fn tensor_with_trivial_factor() {
        let t = elementary_grading(&FinAbGroup::trivial(), 1, &[FinAbGroup::trivial().identity()]).unwrap();
        let b = epsilon_grading(2).unwrap();
        let p = tensor_grading(&t, &b).unwrap();
        assert_eq!(p.n(), 2);
        assert_eq!(p.dims().len(), 4);
        let comps: Vec<_> = p.components().values().cloned().collect();
        let orig: Vec<_> = b.components().values().cloned().collect();
        assert_eq!(comps, orig);
    }

    #[test]
    fn tensor_clash_detected() {
        let e = epsilon_grading(2).unwrap();
        let g = e.group().clone();
        let id = GroupHom::identity(&g);
        assert!(matches!(
            tensor_grading_in(&e, &e, &g, &id, &id),
            Err(Error::SupportClash(_))
        ));
    }
}
