use std::fmt;

use num_integer::Integer;

use super::mat::{rref_rows, Mat};
use super::num::CycNum;
use crate::error::{Error, Result};

/// A subspace of `F^d` stored by its reduced row echelon basis.
///
/// The basis is canonical, so two subspaces are equal exactly when their
/// bases agree entry by entry.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<CycNum>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Subspace {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![CycNum::zero(1); ambient];
                v[i] = CycNum::one(1);
                v
            })
            .collect();
        Subspace {
            ambient,
            basis,
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors, canonicalized through row reduction.
    pub fn span<I>(ambient: usize, vectors: I) -> Result<Subspace>
    where
        I: IntoIterator<Item = Vec<CycNum>>,
    {
        let mut rows: Vec<Vec<CycNum>> = Vec::new();
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch(format!(
                    "vector of length {} in ambient dimension {ambient}",
                    v.len()
                )));
            }
            if v.iter().any(|x| !x.is_zero()) {
                rows.push(v);
            }
        }
        Ok(Subspace::from_rows(ambient, rows))
    }

    /// Span of flattened square matrices of order `n`.
    pub fn span_mats<'a, I>(n: usize, mats: I) -> Result<Subspace>
    where
        I: IntoIterator<Item = &'a Mat>,
    {
        Subspace::span(n * n, mats.into_iter().map(Mat::flatten))
    }

    fn from_rows(ambient: usize, mut rows: Vec<Vec<CycNum>>) -> Subspace {
        let conductor = rows.iter().flatten().fold(1u64, |acc, x| acc.lcm(&x.conductor()));
        for row in &mut rows {
            for x in row.iter_mut() {
                if x.conductor() != conductor {
                    *x = x.lift_unchecked(conductor);
                }
            }
        }
        let pivots = rref_rows(&mut rows, ambient);
        rows.truncate(pivots.len());
        Subspace {
            ambient,
            basis: rows,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<CycNum>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors reshaped as `n x n` matrices; requires `ambient = n^2`.
    pub fn basis_mats(&self, n: usize) -> Vec<Mat> {
        assert_eq!(n * n, self.ambient, "ambient dimension is not n^2");
        self.basis
            .iter()
            .map(|v| Mat::from_flat(n, v).expect("square reshape"))
            .collect()
    }

    /// Residue of `v` after eliminating the pivot coordinates.
    pub fn reduce(&self, v: &[CycNum]) -> Result<Vec<CycNum>> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in ambient dimension {}",
                v.len(),
                self.ambient
            )));
        }
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (x, y) in w.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        Ok(w)
    }

    pub fn contains(&self, v: &[CycNum]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(CycNum::is_zero))
    }

    pub fn contains_mat(&self, m: &Mat) -> Result<bool> {
        self.contains(m.entries())
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[CycNum]) -> Result<Option<Vec<CycNum>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "ambient dimensions {} and {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let rows = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(Subspace::from_rows(self.ambient, rows))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        for v in &self.basis {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Intersection through the kernel of the stacked bases: rows
    /// `[a | a]` for the basis of `self` and `[b | 0]` for `other`; after
    /// reduction the rows whose left half vanishes carry the intersection.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let d = self.ambient;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(d));
        }
        let zero = CycNum::zero(1);
        let mut rows: Vec<Vec<CycNum>> = Vec::with_capacity(self.dim() + other.dim());
        for a in &self.basis {
            let mut r = a.clone();
            r.extend(a.iter().cloned());
            rows.push(r);
        }
        for b in &other.basis {
            let mut r = b.clone();
            r.extend(std::iter::repeat_n(zero.clone(), d));
            rows.push(r);
        }
        let conductor = rows.iter().flatten().fold(1u64, |acc, x| acc.lcm(&x.conductor()));
        for row in &mut rows {
            for x in row.iter_mut() {
                if x.conductor() != conductor {
                    *x = x.lift_unchecked(conductor);
                }
            }
        }
        let pivots = rref_rows(&mut rows, 2 * d);
        let tail = pivots
            .iter()
            .enumerate()
            .filter(|(_, &p)| p >= d)
            .map(|(i, _)| rows[i][d..].to_vec());
        Subspace::span(d, tail)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Subspace(dim {} in {})", self.dim(), self.ambient)?;
        for v in &self.basis {
            let cells: Vec<String> = v.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e(d: usize, i: usize) -> Vec<CycNum> {
        let mut v = vec![CycNum::zero(1); d];
        v[i] = CycNum::one(1);
        v
    }

    fn ints(v: &[i64]) -> Vec<CycNum> {
        v.iter().map(|&x| CycNum::from_int(x, 1)).collect()
    }

    #[test]
    fn empty_span_is_zero() {
        let s = Subspace::span(4, Vec::<Vec<CycNum>>::new()).unwrap();
        assert!(s.is_zero());
        assert_eq!(s, Subspace::zero(4));
    }

    #[test]
    fn sum_with_zero() {
        let v = Subspace::span(3, vec![ints(&[1, 2, 3])]).unwrap();
        assert_eq!(v.sum(&Subspace::zero(3)).unwrap(), v);
    }

    #[test]
    fn intersect_coordinate_planes() {
        let a = Subspace::span(3, vec![e(3, 0), e(3, 1)]).unwrap();
        let b = Subspace::span(3, vec![e(3, 1), e(3, 2)]).unwrap();
        let c = a.intersect(&b).unwrap();
        assert_eq!(c, Subspace::span(3, vec![e(3, 1)]).unwrap());
    }

    #[test]
    fn intersect_skew_lines() {
        let a = Subspace::span(3, vec![ints(&[1, 1, 0]), ints(&[0, 0, 1])]).unwrap();
        let b = Subspace::span(3, vec![ints(&[1, -1, 0]), ints(&[1, 1, 1])]).unwrap();
        let c = a.intersect(&b).unwrap();
        assert_eq!(c, Subspace::span(3, vec![ints(&[1, 1, 1])]).unwrap());
    }

    #[test]
    fn canonical_for_different_bases() {
        let a = Subspace::span(3, vec![ints(&[1, 2, 0]), ints(&[0, 1, 1])]).unwrap();
        let b = Subspace::span(3, vec![ints(&[1, 3, 1]), ints(&[2, 3, -1])]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn mismatched_ambient() {
        let a = Subspace::zero(2);
        let b = Subspace::zero(3);
        assert!(matches!(a.sum(&b), Err(Error::DimensionMismatch(_))));
        assert!(matches!(a.contains(&ints(&[1])), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn coordinates_reconstruct_vector() {
        let s = Subspace::span(3, vec![ints(&[1, 2, 0]), ints(&[0, 1, 1])]).unwrap();
        let v = ints(&[2, 5, 1]);
        let c = s.coordinates(&v).unwrap().unwrap();
        let mut w = vec![CycNum::zero(1); 3];
        for (ci, b) in c.iter().zip(s.basis()) {
            for (x, y) in w.iter_mut().zip(b) {
                *x = &*x + &(ci * y);
            }
        }
        assert_eq!(w, v);
        assert!(s.coordinates(&ints(&[0, 0, 1])).unwrap().is_none());
    }

    fn arb_vecs(d: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        prop::collection::vec(prop::collection::vec(-2i64..=2, d), 0..=d)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn grassmann_formula(d in 1usize..=8, seed_a in arb_vecs(8), seed_b in arb_vecs(8)) {
            let cut = |vs: Vec<Vec<i64>>| vs.into_iter().map(|v| ints(&v[..d])).collect::<Vec<_>>();
            let a = Subspace::span(d, cut(seed_a)).unwrap();
            let b = Subspace::span(d, cut(seed_b)).unwrap();
            let s = a.sum(&b).unwrap();
            let i = a.intersect(&b).unwrap();
            prop_assert_eq!(a.dim() + b.dim(), s.dim() + i.dim());
            prop_assert!(i.is_subspace_of(&a).unwrap() && i.is_subspace_of(&b).unwrap());
        }

        #[test]
        fn span_is_canonical(vs in arb_vecs(5), mix in prop::collection::vec(-3i64..=3, 25)) {
            let base: Vec<Vec<CycNum>> = vs.iter().map(|v| ints(v)).collect();
            let a = Subspace::span(5, base.clone()).unwrap();
            // random combinations of the same generators plus the generators themselves
            let mut combos = base.clone();
            for (k, _) in base.iter().enumerate() {
                let mut w = vec![CycNum::zero(1); 5];
                for (j, v) in base.iter().enumerate() {
                    let c = CycNum::from_int(mix[(k * 5 + j) % 25], 1);
                    for (x, y) in w.iter_mut().zip(v) {
                        *x = &*x + &(&c * y);
                    }
                }
                combos.push(w);
            }
            combos.reverse();
            let b = Subspace::span(5, combos).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}
