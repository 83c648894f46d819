//! Involutions `X* = Phi^{-1} (tX) Phi` of `M_n`, their symmetric and skew
//! parts, and gradings whose components are stable under an involution.

mod canonical;

use std::collections::BTreeMap;
use std::fmt;

use crate::cyclo::{Mat, Subspace};
use crate::error::{Error, Result};
use crate::groups::{FinAbGroup, GroupElem};
use crate::matalg::{verify_assoc, Grading, VerificationReport, Violation};

pub use canonical::{canonical_l6, elementary_involution_grading, involution_tensor, involution_tensor_in, Flavor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymKind {
    /// `tPhi = Phi`, a transpose involution.
    Symmetric,
    /// `tPhi = -Phi`, a symplectic involution.
    Skew,
}

impl SymKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SymKind::Symmetric => "symmetric",
            SymKind::Skew => "skew",
        }
    }

    pub fn parse(s: &str) -> Result<SymKind> {
        match s {
            "symmetric" => Ok(SymKind::Symmetric),
            "skew" => Ok(SymKind::Skew),
            other => Err(Error::Parse(format!("unknown symkind {other:?}"))),
        }
    }
}

/// The involution determined by a nondegenerate symmetric or skew matrix,
/// scaled so that its first nonzero entry (row-major) is 1.
#[derive(Clone, PartialEq, Eq)]
pub struct Involution {
    phi: Mat,
    phi_inv: Mat,
    symkind: SymKind,
}

impl Involution {
    pub fn new(phi: &Mat) -> Result<Involution> {
        if !phi.is_square() || phi.rows() == 0 {
            return Err(Error::DimensionMismatch(format!(
                "form matrix must be square and nonempty, got {}x{}",
                phi.rows(),
                phi.cols()
            )));
        }
        let lead = phi
            .entries()
            .iter()
            .find(|x| !x.is_zero())
            .ok_or(Error::SingularForm)?
            .clone();
        let phi = phi.scale(&lead.inv()?);
        let phi_inv = phi.inverse().map_err(|_| Error::SingularForm)?;
        let t = phi.transpose();
        let symkind = if t == phi {
            SymKind::Symmetric
        } else if t == -&phi {
            SymKind::Skew
        } else {
            return Err(Error::MixedSymmetry);
        };
        Ok(Involution { phi, phi_inv, symkind })
    }

    pub fn n(&self) -> usize {
        self.phi.rows()
    }

    pub fn phi(&self) -> &Mat {
        &self.phi
    }

    pub fn symkind(&self) -> SymKind {
        self.symkind
    }

    /// `X* = Phi^{-1} (tX) Phi`.
    pub fn apply(&self, x: &Mat) -> Result<Mat> {
        if x.rows() != self.n() || x.cols() != self.n() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix under an involution of M_{}",
                x.rows(),
                x.cols(),
                self.n()
            )));
        }
        Ok(&(&self.phi_inv * &x.transpose()) * &self.phi)
    }

    /// Involution of `M_{n m}` acting factorwise on Kronecker products.
    pub fn tensor(&self, other: &Involution) -> Involution {
        Involution::new(&self.phi.kron(&other.phi)).expect("product of nondegenerate forms")
    }

    /// Checks `(XY)* = Y* X*` and `X** = X` on all pairs of matrix units;
    /// returns the first failing pair.
    pub fn check_laws(&self) -> std::result::Result<(), (usize, usize, usize, usize)> {
        let n = self.n();
        let units: Vec<Mat> = (0..n * n).map(|k| Mat::unit(n, k / n, k % n)).collect();
        let stars: Vec<Mat> = units.iter().map(|u| self.apply(u).expect("size")).collect();
        for (a, (u, us)) in units.iter().zip(&stars).enumerate() {
            if self.apply(us).expect("size") != *u {
                return Err((a / n, a % n, a / n, a % n));
            }
            for (b, (v, vs)) in units.iter().zip(&stars).enumerate() {
                let lhs = self.apply(&(u * v)).expect("size");
                if lhs != vs * us {
                    return Err((a / n, a % n, b / n, b % n));
                }
            }
        }
        Ok(())
    }
}

/// Builds the involution of a form matrix; see [`Involution::new`].
pub fn make_involution(phi: &Mat) -> Result<Involution> {
    Involution::new(phi)
}

impl fmt::Debug for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Involution({}, phi = {:?})", self.symkind.as_str(), self.phi)
    }
}

/// Signs `beta(t)` with `X_t* = beta(t) X_t`, stored as a table over the
/// support; no multiplicativity is assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignFunction {
    group: FinAbGroup,
    values: BTreeMap<GroupElem, i8>,
}

impl SignFunction {
    pub fn new(group: &FinAbGroup, values: BTreeMap<GroupElem, i8>) -> Result<SignFunction> {
        for (g, &s) in &values {
            if g.group() != group {
                return Err(Error::GroupMismatch(format!("{g} is not an element of {group}")));
            }
            if s != 1 && s != -1 {
                return Err(Error::Parse(format!("sign {s} at {g} is not +1 or -1")));
            }
        }
        Ok(SignFunction {
            group: group.clone(),
            values,
        })
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn get(&self, t: &GroupElem) -> Option<i8> {
        self.values.get(t).copied()
    }

    pub fn values(&self) -> &BTreeMap<GroupElem, i8> {
        &self.values
    }

    pub fn support(&self) -> Vec<GroupElem> {
        self.values.keys().cloned().collect()
    }
}

/// A grading together with an involution that stabilizes its components,
/// plus the sign table of its canonical fine part when it has one.
#[derive(Clone, Debug)]
pub struct InvolutionGrading {
    pub grading: Grading,
    pub involution: Involution,
    pub sign: Option<SignFunction>,
}

impl InvolutionGrading {
    pub fn verify(&self) -> VerificationReport {
        verify_involution_grading(&self.grading, &self.involution)
    }
}

/// `V = V+ (+) V-` for an involution-stable subspace, with
/// `V+ = span(v + v*)` and `V- = span(v - v*)`.
pub fn sym_skew_split(v: &Subspace, inv: &Involution) -> Result<(Subspace, Subspace)> {
    let n = inv.n();
    if v.ambient_dim() != n * n {
        return Err(Error::DimensionMismatch(format!(
            "subspace of dimension {} under an involution of M_{n}",
            v.ambient_dim()
        )));
    }
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for b in v.basis_mats(n) {
        let s = inv.apply(&b)?;
        if !v.contains_mat(&s)? {
            return Err(Error::NotInvolutionStable);
        }
        plus.push((&b + &s).into_flat());
        minus.push((&b - &s).into_flat());
    }
    Ok((Subspace::span(n * n, plus)?, Subspace::span(n * n, minus)?))
}

/// `Some(beta)` when `x* = beta x` with `beta = +-1`.
pub(crate) fn is_eigen(inv: &Involution, x: &Mat) -> Option<i8> {
    let s = inv.apply(x).ok()?;
    if s == *x {
        Some(1)
    } else if s == -x {
        Some(-1)
    } else {
        None
    }
}

/// Exhaustive associativity check plus stability of every component under
/// the involution.
pub fn verify_involution_grading(grading: &Grading, inv: &Involution) -> VerificationReport {
    let mut report = verify_assoc(grading);
    if inv.n() != grading.n() {
        report.violations.push(Violation::FormSize {
            grading: grading.n(),
            form: inv.n(),
        });
        return report;
    }
    for (g, comp) in grading.components() {
        for (name, b) in grading.named_basis(g) {
            let s = inv.apply(&b).expect("matching size");
            if !comp.contains_mat(&s).expect("same ambient") {
                report.violations.push(Violation::NotStable {
                    g: g.clone(),
                    basis: name,
                });
            }
        }
    }
    report
}
