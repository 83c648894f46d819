use std::fmt;

use rayon::prelude::*;

use super::{Grading, GradingKind};
use crate::cyclo::{Mat, Subspace};
use crate::groups::GroupElem;

/// Which product the components must respect.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Product {
    Assoc,
    Bracket,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// The component dimensions do not add up to the algebra dimension.
    WrongTotal { expected: usize, found: usize },
    /// The components are not independent.
    NotDirect { sum_of_dims: usize, dim_of_sum: usize },
    /// A basis element of a Lie component has nonzero trace.
    NotTraceless { g: GroupElem, basis: String },
    /// `u v` (or `[u, v]`) leaves the component of `gh`.
    Escapes {
        product: Product,
        g: GroupElem,
        h: GroupElem,
        left: String,
        right: String,
    },
    /// `u*` leaves the component of `g`.
    NotStable { g: GroupElem, basis: String },
    /// The involution acts on matrices of a different order.
    FormSize { grading: usize, form: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WrongTotal { expected, found } => {
                write!(f, "component dimensions sum to {found}, expected {expected}")
            }
            Violation::NotDirect {
                sum_of_dims,
                dim_of_sum,
            } => write!(
                f,
                "components are not independent: dimensions sum to {sum_of_dims} but span {dim_of_sum}"
            ),
            Violation::NotTraceless { g, basis } => {
                write!(f, "basis element {basis} of component {g} has nonzero trace")
            }
            Violation::Escapes {
                product,
                g,
                h,
                left,
                right,
            } => {
                let gh = g * h;
                match product {
                    Product::Assoc => write!(
                        f,
                        "product {left}*{right} of components {g} and {h} is not in component {gh}"
                    ),
                    Product::Bracket => write!(
                        f,
                        "bracket [{left},{right}] of components {g} and {h} is not in component {gh}"
                    ),
                }
            }
            Violation::NotStable { g, basis } => {
                write!(f, "involution image of {basis} leaves component {g}")
            }
            Violation::FormSize { grading, form } => {
                write!(f, "involution of M_{form} applied to a grading of M_{grading}")
            }
        }
    }
}

/// Outcome of an exhaustive grading check. Violations are ordered by the
/// component pair that produced them.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checked_pairs: usize,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(mut self, other: VerificationReport) -> VerificationReport {
        self.checked_pairs += other.checked_pairs;
        self.violations.extend(other.violations);
        self
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "PASS ({} component pairs checked)", self.checked_pairs);
        }
        writeln!(f, "FAIL: {} violation(s)", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

/// Checks that the components are independent, fill the algebra, and
/// respect the product: associative product for associative and involution
/// kinds, bracket (plus tracelessness) for the Lie kind.
pub fn check_grading(grading: &Grading, product: Product) -> VerificationReport {
    let mut report = VerificationReport::default();
    let found = grading.total_dim();
    let expected = grading.expected_dim();
    if found != expected {
        report.violations.push(Violation::WrongTotal { expected, found });
    }
    let sum = grading
        .components()
        .values()
        .fold(Subspace::zero(grading.n() * grading.n()), |acc, v| {
            acc.sum(v).expect("same ambient")
        });
    if sum.dim() != found {
        report.violations.push(Violation::NotDirect {
            sum_of_dims: found,
            dim_of_sum: sum.dim(),
        });
    }
    let support = grading.support();
    let bases: Vec<Vec<(String, Mat)>> = support.iter().map(|g| grading.named_basis(g)).collect();
    if grading.kind() == GradingKind::Lie {
        for (g, basis) in support.iter().zip(&bases) {
            for (name, m) in basis {
                if !m.trace().is_zero() {
                    report.violations.push(Violation::NotTraceless {
                        g: g.clone(),
                        basis: name.clone(),
                    });
                }
            }
        }
    }
    let pairs: Vec<(usize, usize)> = (0..support.len())
        .flat_map(|a| (0..support.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| product == Product::Assoc || a <= b)
        .collect();
    report.checked_pairs = pairs.len();
    let found: Vec<Vec<Violation>> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let (g, h) = (&support[a], &support[b]);
            let target = grading.component(&(g * h));
            let mut out = Vec::new();
            for (i, (nu, u)) in bases[a].iter().enumerate() {
                for (j, (nv, v)) in bases[b].iter().enumerate() {
                    if product == Product::Bracket && a == b && j <= i {
                        continue;
                    }
                    let w = match product {
                        Product::Assoc => u * v,
                        Product::Bracket => u.bracket(v),
                    };
                    if !target.contains_mat(&w).expect("same ambient") {
                        out.push(Violation::Escapes {
                            product,
                            g: g.clone(),
                            h: h.clone(),
                            left: nu.clone(),
                            right: nv.clone(),
                        });
                    }
                }
            }
            out
        })
        .collect();
    report.violations.extend(found.into_iter().flatten());
    report
}

/// Exhaustive check of an associative grading.
pub fn verify_assoc(grading: &Grading) -> VerificationReport {
    check_grading(grading, Product::Assoc)
}

#[cfg(test)]
mod tests {
    use super::super::{elementary_grading, epsilon_grading};
    use super::*;
    use crate::groups::FinAbGroup;

    #[test]
    fn constructions_pass() {
        for n in 1..=6 {
            assert!(verify_assoc(&epsilon_grading(n).unwrap()).passed(), "eps {n}");
        }
        let g = FinAbGroup::new(&[2, 3]).unwrap();
        let t: Vec<GroupElem> = [[0, 0], [1, 2], [1, 0], [0, 1]]
            .iter()
            .map(|e| g.elem(e).unwrap())
            .collect();
        assert!(verify_assoc(&elementary_grading(&g, 4, &t).unwrap()).passed());
    }

    #[test]
    fn swapped_components_fail_with_pair() {
        // swapping a and b is a group automorphism, so swap e and a instead
        let gr = epsilon_grading(2).unwrap();
        let g = gr.group().clone();
        let e = g.identity();
        let a = g.elem(&[1, 0]).unwrap();
        let swapped: Vec<(GroupElem, Subspace)> = gr
            .components()
            .iter()
            .map(|(k, v)| {
                let k = if *k == a {
                    e.clone()
                } else if *k == e {
                    a.clone()
                } else {
                    k.clone()
                };
                (k, v.clone())
            })
            .collect();
        let bad = Grading::new(&g, 2, GradingKind::Associative, swapped).unwrap();
        let rep = verify_assoc(&bad);
        assert!(!rep.passed());
        // X_a now sits in the identity component and X_a^2 = I is not a multiple of X_a
        assert!(rep.violations.iter().any(|v| matches!(
            v,
            Violation::Escapes { g, h, .. } if g.is_identity() && h.is_identity()
        )));
    }

    #[test]
    fn missing_component_reports_total() {
        let gr = epsilon_grading(2).unwrap();
        let g = gr.group().clone();
        let comps: Vec<_> = gr
            .components()
            .iter()
            .filter(|(k, _)| !k.is_identity())
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        let bad = Grading::new(&g, 2, GradingKind::Associative, comps).unwrap();
        let rep = verify_assoc(&bad);
        assert!(rep
            .violations
            .contains(&Violation::WrongTotal { expected: 4, found: 3 }));
    }
}
