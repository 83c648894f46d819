use std::collections::BTreeMap;

use super::Grading;
use crate::cyclo::{rref_rows, CycNum, Mat, Subspace};
use crate::error::{Error, Result};
use crate::groups::{quotient, Character, GroupElem, Subgroup};

/// Splits matrices into their homogeneous parts with respect to a fixed
/// grading. Built once from the row reduction of `[B | I]`, where the rows
/// of `B` are the component bases.
#[derive(Clone, Debug)]
pub struct Decomposer {
    grading: Grading,
    owners: Vec<GroupElem>,
    basis: Vec<Vec<CycNum>>,
    pivots: Vec<usize>,
    // rref(B) = transform * B
    transform: Vec<Vec<CycNum>>,
}

impl Decomposer {
    pub fn new(grading: &Grading) -> Result<Decomposer> {
        let nn = grading.n() * grading.n();
        let mut owners = Vec::new();
        let mut basis = Vec::new();
        for (g, v) in grading.components() {
            for b in v.basis() {
                owners.push(g.clone());
                basis.push(b.clone());
            }
        }
        let d = basis.len();
        let mut rows: Vec<Vec<CycNum>> = basis
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let mut r = b.clone();
                r.extend((0..d).map(|j| CycNum::from_int(i64::from(i == j), 1)));
                r
            })
            .collect();
        let pivots = rref_rows(&mut rows, nn + d);
        if pivots.len() < d || pivots.iter().any(|&p| p >= nn) {
            return Err(Error::DimensionMismatch(
                "grading components are not independent".into(),
            ));
        }
        let transform = rows.into_iter().map(|r| r[nn..].to_vec()).collect();
        Ok(Decomposer {
            grading: grading.clone(),
            owners,
            basis,
            pivots,
            transform,
        })
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    /// Homogeneous parts of `x`, one entry per support element (zero parts
    /// included). Fails with `NotInAlgebra` when `x` is not in the span of
    /// the components.
    pub fn decompose(&self, x: &Mat) -> Result<BTreeMap<GroupElem, Mat>> {
        let n = self.grading.n();
        if x.rows() != n || x.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix for a grading of M_{n}",
                x.rows(),
                x.cols()
            )));
        }
        let xv = x.entries();
        let d = self.basis.len();
        let mut coeffs = vec![CycNum::zero(1); d];
        for (i, &p) in self.pivots.iter().enumerate() {
            if xv[p].is_zero() {
                continue;
            }
            for (k, c) in coeffs.iter_mut().enumerate() {
                let t = &self.transform[i][k];
                if !t.is_zero() {
                    *c += &(&xv[p] * t);
                }
            }
        }
        let mut parts: BTreeMap<GroupElem, Vec<CycNum>> = self
            .grading
            .support()
            .into_iter()
            .map(|g| (g, vec![CycNum::zero(1); n * n]))
            .collect();
        for ((g, b), c) in self.owners.iter().zip(&self.basis).zip(&coeffs) {
            if c.is_zero() {
                continue;
            }
            let part = parts.get_mut(g).expect("support element");
            for (y, bv) in part.iter_mut().zip(b) {
                if !bv.is_zero() {
                    *y += &(c * bv);
                }
            }
        }
        let mut total = vec![CycNum::zero(1); n * n];
        for p in parts.values() {
            for (t, y) in total.iter_mut().zip(p) {
                *t += y;
            }
        }
        if total.as_slice() != xv {
            return Err(Error::NotInAlgebra);
        }
        parts
            .into_iter()
            .map(|(g, v)| Ok((g, Mat::from_flat(n, &v)?)))
            .collect()
    }

    /// `chi * x = sum_g chi(g) x_g`.
    pub fn chi_action(&self, chi: &Character, x: &Mat) -> Result<Mat> {
        self.check_char(chi)?;
        let n = self.grading.n();
        let mut out = Mat::zeros(n, n);
        for (g, part) in self.decompose(x)? {
            if !part.is_zero() {
                out = &out + &part.scale(&chi.eval(&g)?);
            }
        }
        Ok(out)
    }

    /// Degree-`g` part of `x` by Fourier inversion over the dual group:
    /// `x_g = |G|^{-1} sum_chi chi(g)^{-1} (chi * x)`.
    pub fn homogeneous_projection(&self, x: &Mat, g: &GroupElem) -> Result<Mat> {
        let group = self.grading.group();
        if g.group() != group {
            return Err(Error::GroupMismatch(format!("{g} is not an element of {group}")));
        }
        let parts = self.decompose(x)?;
        let n = self.grading.n();
        let mut acc = Mat::zeros(n, n);
        for chi in group.dual() {
            let weight = chi.eval(g)?.inv()?;
            for (h, part) in &parts {
                if !part.is_zero() {
                    acc = &acc + &part.scale(&(&weight * &chi.eval(h)?));
                }
            }
        }
        let inv_order = CycNum::from_int(group.order() as i64, 1).inv()?;
        Ok(acc.scale(&inv_order))
    }

    fn check_char(&self, chi: &Character) -> Result<()> {
        if chi.group() != self.grading.group() {
            return Err(Error::GroupMismatch(format!(
                "{chi} is not a character of {}",
                self.grading.group()
            )));
        }
        Ok(())
    }
}

pub fn decompose(x: &Mat, grading: &Grading) -> Result<BTreeMap<GroupElem, Mat>> {
    Decomposer::new(grading)?.decompose(x)
}

/// The dual action `chi * x`, an automorphism of the graded algebra.
pub fn chi_action(chi: &Character, x: &Mat, grading: &Grading) -> Result<Mat> {
    Decomposer::new(grading)?.chi_action(chi, x)
}

pub fn homogeneous_projection(x: &Mat, g: &GroupElem, grading: &Grading) -> Result<Mat> {
    Decomposer::new(grading)?.homogeneous_projection(x, g)
}

/// The factor grading by `G/H`: the component of a coset is the sum of the
/// components of its elements.
pub fn coarsen(grading: &Grading, h: &Subgroup<GroupElem>) -> Result<Grading> {
    let q = quotient(grading.group(), h)?;
    let labeled = grading.support().iter().all(|g| grading.labels().contains_key(g));
    if labeled {
        let mut items = Vec::new();
        for (g, l) in grading.labels() {
            let x = q.project(g)?;
            for (name, m) in l {
                items.push((x.clone(), name.clone(), m.clone()));
            }
        }
        return Grading::from_labeled(q.target(), grading.n(), grading.kind(), items);
    }
    let comps = grading
        .components()
        .iter()
        .map(|(g, v)| Ok((q.project(g)?, v.clone())))
        .collect::<Result<Vec<_>>>()?;
    Grading::new(q.target(), grading.n(), grading.kind(), comps)
}

/// Whether `v` is the direct sum of its intersections with the components.
pub fn is_graded_subspace(v: &Subspace, grading: &Grading) -> Result<bool> {
    let mut total = 0;
    for c in grading.components().values() {
        total += v.intersect(c)?.dim();
    }
    Ok(total == v.dim())
}

/// Whether `chi * v` lies in `v` for every character in `chars`.
pub fn is_invariant(v: &Subspace, grading: &Grading, chars: &[Character]) -> Result<bool> {
    let dec = Decomposer::new(grading)?;
    for b in v.basis_mats(grading.n()) {
        for chi in chars {
            if !v.contains_mat(&dec.chi_action(chi, &b)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
