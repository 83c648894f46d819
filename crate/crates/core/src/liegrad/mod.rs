//! Gradings of `sl(n)` obtained from gradings of `M_n`: restriction of an
//! associative grading (Type I), the marker construction from an involution
//! grading (Type II), explicit tensor forms, and recovery of a grading from
//! its factor by a subgroup of order 2.

mod explicit;
mod outer;

use std::collections::BTreeMap;
use std::fmt;

use crate::cyclo::{Mat, Subspace};
use crate::error::{Error, Result};
use crate::groups::GroupElem;
use crate::invol::{sym_skew_split, verify_involution_grading, Involution};
use crate::matalg::{check_grading, Grading, GradingKind, Product, VerificationReport};

pub use explicit::{
    fine_involution_grading, fine_outer, mixed_involution_grading, mixed_type2, tensor_form_grading, type1_tensor_form,
};
pub use outer::{recover_from_factor, OuterDatum};

/// The traceless matrices of order `n`.
pub fn sl_subspace(n: usize) -> Subspace {
    let mut basis = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                basis.push(Mat::unit(n, i, j));
            }
        }
    }
    for i in 1..n {
        basis.push(&Mat::unit(n, 0, 0) - &Mat::unit(n, i, i));
    }
    Subspace::span_mats(n, basis.iter()).expect("square units")
}

/// Exhaustive bracket check of a grading of `sl(n)`.
pub fn verify_lie(grading: &Grading) -> VerificationReport {
    check_grading(grading, Product::Bracket)
}

/// `L_g = R_g ∩ sl(n)`.
pub fn type1(assoc: &Grading) -> Result<Grading> {
    let n = assoc.n();
    if n < 2 {
        return Err(Error::TooSmall(format!("sl({n}) is zero")));
    }
    if assoc.kind() == GradingKind::Lie {
        return Err(Error::KindMismatch("type1 expects a grading of M_n".into()));
    }
    let sl = sl_subspace(n);
    let comps = assoc
        .components()
        .iter()
        .map(|(g, v)| Ok((g.clone(), v.intersect(&sl)?)))
        .collect::<Result<Vec<_>>>()?;
    Grading::new(assoc.group(), n, GradingKind::Lie, comps)
}

/// The grading of `sl(n)` determined by an involution grading and an element
/// `h` of order 2:
///
/// * `L_g = R_g^- (+) R_{gh}^+` for `g != h`,
/// * `L_h = R_h^- (+) (R_e^+ ∩ sl(n))`,
///
/// where `±` are the symmetric and skew parts.
pub fn type2(grading: &Grading, inv: &Involution, h: &GroupElem) -> Result<Grading> {
    let group = grading.group();
    if h.group() != group {
        return Err(Error::GroupMismatch(format!("marker {h} is not in {group}")));
    }
    if h.order() != 2 {
        return Err(Error::BadMarker(format!("{h} has order {}", h.order())));
    }
    let n = grading.n();
    if n < 2 {
        return Err(Error::TooSmall(format!("sl({n}) is zero")));
    }
    let report = verify_involution_grading(grading, inv);
    if let Some(v) = report.violations.first() {
        return Err(Error::NotInvolutionGrading(v.to_string()));
    }
    let mut plus = BTreeMap::new();
    let mut minus = BTreeMap::new();
    for (g, v) in grading.components() {
        let (p, m) = sym_skew_split(v, inv).map_err(|e| Error::NotInvolutionGrading(format!("component {g}: {e}")))?;
        plus.insert(g.clone(), p);
        minus.insert(g.clone(), m);
    }
    let e = group.identity();
    let mut comps = Vec::new();
    for (g, m) in minus {
        comps.push((g, m));
    }
    for (g, p) in plus {
        let target = &g * h;
        if g == e {
            comps.push((target, p.intersect(&sl_subspace(n))?));
        } else {
            comps.push((target, p));
        }
    }
    Grading::new(group, n, GradingKind::Lie, comps)
}

/// Integer solutions `(k, l)`, `k + l = n`, `k >= l >= 1`, of
/// `k^2 + l^2 - 1 = n(n-1)/2` and `2kl = n(n+1)/2 - 1`.
///
/// These are the dimension counts an outer automorphism of order 2 of
/// `sl(n)` inducing the dual action of a character would have to satisfy in
/// a Type I grading; a solution exists only for `n = 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Type1Obstruction {
    pub n: usize,
    pub solutions: Vec<(usize, usize)>,
}

impl Type1Obstruction {
    pub fn is_obstructed(&self) -> bool {
        self.solutions.is_empty()
    }
}

impl fmt::Display for Type1Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.solutions.is_empty() {
            write!(f, "n = {}: no solutions, obstructed", self.n)
        } else {
            let s: Vec<String> = self.solutions.iter().map(|(k, l)| format!("({k},{l})")).collect();
            write!(f, "n = {}: solutions {}", self.n, s.join(" "))
        }
    }
}

pub fn type1_obstruction(n: usize) -> Type1Obstruction {
    let nn = n as i128;
    let mut solutions = Vec::new();
    for l in 1..=n / 2 {
        let k = n - l;
        let (ki, li) = (k as i128, l as i128);
        if ki * ki + li * li - 1 == nn * (nn - 1) / 2 && 2 * ki * li == nn * (nn + 1) / 2 - 1 {
            solutions.push((k, l));
        }
    }
    Type1Obstruction { n, solutions }
}
