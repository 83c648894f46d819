use super::snf::smith_normal_form;
use super::{FinAbGroup, GroupElem, Subgroup};
use crate::error::{Error, Result};

/// `G / H` in invariant-factor form together with the projection `G -> G/H`.
#[derive(Clone, Debug)]
pub struct Quotient {
    source: FinAbGroup,
    kernel: Subgroup<GroupElem>,
    target: FinAbGroup,
    // column transform of the relation lattice and the columns that survive
    transform: Vec<Vec<i128>>,
    kept: Vec<(usize, u64)>,
}

/// Builds `G / H` from the Smith normal form of the lattice spanned by
/// `n_i e_i` and the generators of `H`.
pub fn quotient(group: &FinAbGroup, h: &Subgroup<GroupElem>) -> Result<Quotient> {
    if h.group() != group {
        return Err(Error::GroupMismatch(format!(
            "subgroup of {} used with {group}",
            h.group()
        )));
    }
    let m = group.rank();
    let mut rows: Vec<Vec<i128>> = Vec::new();
    for (i, &n) in group.factors().iter().enumerate() {
        let mut r = vec![0; m];
        r[i] = n as i128;
        rows.push(r);
    }
    for g in h.generators() {
        rows.push(g.exponents().iter().map(|&e| e as i128).collect());
    }
    let snf = smith_normal_form(&rows, m);
    let kept: Vec<(usize, u64)> = snf
        .diagonal
        .iter()
        .enumerate()
        .filter(|(_, &d)| d > 1)
        .map(|(k, &d)| (k, d as u64))
        .collect();
    let factors: Vec<u64> = kept.iter().map(|&(_, d)| d).collect();
    Ok(Quotient {
        source: group.clone(),
        kernel: h.clone(),
        target: FinAbGroup::new(&factors)?,
        transform: snf.col_transform,
        kept,
    })
}

impl Quotient {
    pub fn source(&self) -> &FinAbGroup {
        &self.source
    }

    pub fn kernel(&self) -> &Subgroup<GroupElem> {
        &self.kernel
    }

    pub fn target(&self) -> &FinAbGroup {
        &self.target
    }

    /// Image of `g` in `G / H`: coordinates of `g V` reduced modulo the
    /// invariant factors.
    pub fn project(&self, g: &GroupElem) -> Result<GroupElem> {
        if g.group() != &self.source {
            return Err(Error::GroupMismatch(format!(
                "{g} is not an element of {}",
                self.source
            )));
        }
        let exps: Vec<i64> = self
            .kept
            .iter()
            .map(|&(k, d)| {
                let s: i128 = g
                    .exponents()
                    .iter()
                    .zip(&self.transform)
                    .map(|(&e, row)| e as i128 * row[k])
                    .sum();
                s.rem_euclid(d as i128) as i64
            })
            .collect();
        self.target.elem(&exps)
    }
}

#[cfg(test)]
mod tests {
    use super::super::abelian_groups_of_order;
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn z4_mod_order_two() {
        let z4 = FinAbGroup::cyclic(4).unwrap();
        let h = Subgroup::generated(&z4, &[z4.elem(&[2]).unwrap()]).unwrap();
        let q = quotient(&z4, &h).unwrap();
        assert_eq!(q.target().factors(), &[2]);
        // cosets {0,2} and {1,3}
        let a = q.project(&z4.elem(&[1]).unwrap()).unwrap();
        assert_eq!(a.order(), 2);
        assert_eq!(q.project(&z4.elem(&[3]).unwrap()).unwrap(), a);
        assert!(q.project(&z4.elem(&[2]).unwrap()).unwrap().is_identity());
    }

    #[test]
    fn trivial_and_full_quotients() {
        let g = FinAbGroup::new(&[2, 3]).unwrap();
        let q = quotient(&g, &Subgroup::trivial(&g)).unwrap();
        assert_eq!(q.target().order(), 6);
        let images: BTreeSet<GroupElem> = g.elements().iter().map(|x| q.project(x).unwrap()).collect();
        assert_eq!(images.len(), 6);
        let q = quotient(&g, &Subgroup::whole(&g)).unwrap();
        assert_eq!(q.target(), &FinAbGroup::trivial());
    }

    #[test]
    fn projection_is_surjective_hom_with_kernel_h() {
        for n in [4u64, 8, 12, 16] {
            for g in abelian_groups_of_order(n) {
                for h in g.subgroups() {
                    let q = quotient(&g, &h).unwrap();
                    assert_eq!(q.target().order() * h.order(), g.order());
                    let els = g.elements();
                    let images: BTreeSet<GroupElem> = els.iter().map(|x| q.project(x).unwrap()).collect();
                    assert_eq!(images.len() as u64, q.target().order());
                    for x in &els {
                        let px = q.project(x).unwrap();
                        assert_eq!(px.is_identity(), h.contains(x));
                        for y in els.iter().step_by(3) {
                            assert_eq!(q.project(&(x * y)).unwrap(), &px * &q.project(y).unwrap());
                        }
                    }
                }
            }
        }
    }
}
