use std::collections::BTreeMap;
use std::fmt;

use crate::cyclo::{CycNum, Mat, Subspace};
use crate::error::{Error, Result};
use crate::groups::{Character, GroupElem, Quotient};
use crate::matalg::{Decomposer, Grading, GradingKind};

/// An antiautomorphism datum `X -> -Phi^{-1} (tX) Phi` of `sl(n)` paired
/// with a character `phi` and an element `h` of order 2 with
/// `phi(h) = -1`. The form is scaled so that its first nonzero entry is 1.
#[derive(Clone, PartialEq, Eq)]
pub struct OuterDatum {
    h: GroupElem,
    phi: Character,
    form: Mat,
    form_inv: Mat,
}

fn check_marker(h: &GroupElem, phi: &Character) -> Result<()> {
    if h.group() != phi.group() {
        return Err(Error::GroupMismatch(format!(
            "marker in {} with a character of {}",
            h.group(),
            phi.group()
        )));
    }
    if h.order() != 2 {
        return Err(Error::BadMarker(format!("{h} has order {}", h.order())));
    }
    let val = phi.eval(h)?;
    if val != CycNum::from_int(-1, 1) {
        return Err(Error::BadMarker(format!("{phi} takes the value {val} at {h}")));
    }
    Ok(())
}

impl OuterDatum {
    pub fn new(h: &GroupElem, phi: &Character, form: &Mat) -> Result<OuterDatum> {
        check_marker(h, phi)?;
        if !form.is_square() || form.rows() == 0 {
            return Err(Error::DimensionMismatch("form must be square and nonempty".into()));
        }
        let lead = form
            .entries()
            .iter()
            .find(|x| !x.is_zero())
            .ok_or(Error::SingularForm)?
            .clone();
        let form = form.scale(&lead.inv()?);
        let form_inv = form.inverse().map_err(|_| Error::SingularForm)?;
        Ok(OuterDatum {
            h: h.clone(),
            phi: phi.clone(),
            form,
            form_inv,
        })
    }

    /// Solves `phi * X = -Phi^{-1} (tX) Phi` for `Phi` on a Lie generating set
    /// of `sl(n)` and checks the result on a full basis. Fails with
    /// `NotOuter` when the dual action of `phi` is not of this form.
    pub fn from_dual_action(grading: &Grading, h: &GroupElem, phi: &Character) -> Result<OuterDatum> {
        if grading.kind() != GradingKind::Lie {
            return Err(Error::KindMismatch("outer data need a grading of sl(n)".into()));
        }
        let n = grading.n();
        if n < 2 {
            return Err(Error::TooSmall(format!("sl({n}) is zero")));
        }
        check_marker(h, phi)?;
        let dec = Decomposer::new(grading)?;
        let nn = n * n;
        let mut rows: Vec<CycNum> = Vec::new();
        let mut count = 0;
        for i in 0..n - 1 {
            for x in [Mat::unit(n, i, i + 1), Mat::unit(n, i + 1, i)] {
                let a = dec.chi_action(phi, &x)?;
                // (Phi A + tX Phi)_{rc} = 0
                for r in 0..n {
                    for c in 0..n {
                        let mut row = vec![CycNum::zero(1); nn];
                        for k in 0..n {
                            row[r * n + k] += a.get(k, c);
                            row[k * n + c] += x.get(k, r);
                        }
                        rows.extend(row);
                        count += 1;
                    }
                }
            }
        }
        let system = Mat::from_entries(count, nn, rows)?;
        let kernel = system.kernel();
        if kernel.len() != 1 {
            return Err(Error::NotOuter(format!(
                "solution space of the form equation has dimension {}",
                kernel.len()
            )));
        }
        let form = Mat::from_flat(n, &kernel[0])?;
        let datum = OuterDatum::new(h, phi, &form).map_err(|e| match e {
            Error::SingularForm => Error::NotOuter("solution form is singular".into()),
            other => other,
        })?;
        for x in crate::liegrad::sl_subspace(n).basis_mats(n) {
            if datum.apply(&x)? != dec.chi_action(phi, &x)? {
                return Err(Error::NotOuter("form does not reproduce the dual action".into()));
            }
        }
        Ok(datum)
    }

    pub fn h(&self) -> &GroupElem {
        &self.h
    }

    pub fn phi(&self) -> &Character {
        &self.phi
    }

    pub fn form(&self) -> &Mat {
        &self.form
    }

    pub fn n(&self) -> usize {
        self.form.rows()
    }

    /// `X -> -Phi^{-1} (tX) Phi`.
    pub fn apply(&self, x: &Mat) -> Result<Mat> {
        if x.rows() != self.n() || x.cols() != self.n() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix under a form of order {}",
                x.rows(),
                x.cols(),
                self.n()
            )));
        }
        Ok(-&(&(&self.form_inv * &x.transpose()) * &self.form))
    }

    /// Checks `f(XY) = -f(Y) f(X)` on all pairs of matrix units.
    pub fn check_antihomomorphism(&self) -> bool {
        let n = self.n();
        let units: Vec<Mat> = (0..n * n).map(|k| Mat::unit(n, k / n, k % n)).collect();
        let images: Vec<Mat> = units.iter().map(|u| self.apply(u).expect("size")).collect();
        for (u, fu) in units.iter().zip(&images) {
            for (v, fv) in units.iter().zip(&images) {
                if self.apply(&(u * v)).expect("size") != -&(fv * fu) {
                    return false;
                }
            }
        }
        true
    }

    /// [`recover_from_factor`] with this datum as the action.
    pub fn recover(&self, factor: &Grading, quotient: &Quotient) -> Result<Grading> {
        recover_from_factor(factor, quotient, &self.phi, &|x: &Mat| self.apply(x))
    }
}

impl fmt::Debug for OuterDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OuterDatum(h = {}, {}, form = {:?})", self.h, self.phi, self.form)
    }
}

/// Refines a grading by `G/H`, `H = {e, h}`, to a grading by `G` using an
/// action that plays the role of the dual action of `phi`: for `a` over the
/// coset `ā`,
///
/// `L_a = { X + phi(a)^{-1} f(X) : X in L_ā }`.
///
/// Requires `phi(h) = -1`, each factor component stable under `f`, and
/// `f^2 = phi(a)^2` on `L_ā`.
pub fn recover_from_factor(
    factor: &Grading,
    quotient: &Quotient,
    phi: &Character,
    action: &dyn Fn(&Mat) -> Result<Mat>,
) -> Result<Grading> {
    let big = quotient.source();
    if factor.group() != quotient.target() {
        return Err(Error::GroupMismatch(format!(
            "factor graded by {}, quotient is {}",
            factor.group(),
            quotient.target()
        )));
    }
    if phi.group() != big {
        return Err(Error::GroupMismatch(format!("{phi} is not a character of {big}")));
    }
    let kernel = quotient.kernel();
    if kernel.order() != 2 {
        return Err(Error::BadMarker(format!("kernel has order {}", kernel.order())));
    }
    let h = kernel
        .elements()
        .iter()
        .find(|g| !g.is_identity())
        .expect("order two")
        .clone();
    if phi.eval(&h)? != CycNum::from_int(-1, 1) {
        return Err(Error::BadMarker(format!("{phi} does not take -1 at {h}")));
    }
    let n = factor.n();
    let mut lift: BTreeMap<GroupElem, GroupElem> = BTreeMap::new();
    for a in big.elements() {
        lift.entry(quotient.project(&a)?).or_insert(a);
    }
    let mut comps = Vec::new();
    for (bar, v) in factor.components() {
        let a = &lift[bar];
        let pa = phi.eval(a)?;
        let pa_inv = pa.inv()?;
        let sq = &pa * &pa;
        let mut up = Vec::new();
        let mut down = Vec::new();
        for x in v.basis_mats(n) {
            let y = action(&x)?;
            if !v.contains_mat(&y)? {
                return Err(Error::NotStable(format!("component {bar}")));
            }
            if action(&y)? != x.scale(&sq) {
                return Err(Error::BadSquare(format!("component {bar}")));
            }
            let y = y.scale(&pa_inv);
            up.push(&x + &y);
            down.push(&x - &y);
        }
        comps.push((a.clone(), Subspace::span_mats(n, up.iter())?));
        comps.push((a * &h, Subspace::span_mats(n, down.iter())?));
    }
    Grading::new(big, n, factor.kind(), comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{quotient, FinAbGroup, GroupHom, Subgroup};
    use crate::liegrad::{fine_involution_grading, fine_outer, type1, type2, verify_lie};
    use crate::matalg::{coarsen, epsilon_grading};

    fn marker_setup(case: u8) -> (Grading, GroupElem, Character, crate::invol::InvolutionGrading) {
        // Fine group in the first two factors, marker in the third.
        let g = FinAbGroup::new(&[2, 2, 2]).unwrap();
        let z22 = FinAbGroup::new(&[2, 2]).unwrap();
        let emb = GroupHom::new(&z22, &g, vec![g.generator(0), g.generator(1)]).unwrap();
        let h = g.generator(2);
        let l = fine_outer(&[case], &g, &h, &emb).unwrap();
        let phi = g.character(&[0, 0, 1]).unwrap();
        let ig = fine_involution_grading(&[case], &g, &emb).unwrap();
        (l, h, phi, ig)
    }

    #[test]
    fn dual_action_is_minus_involution_for_marker_factor() {
        for case in 1..=4 {
            let (l, h, phi, ig) = marker_setup(case);
            let d = OuterDatum::from_dual_action(&l, &h, &phi).unwrap();
            assert!(d.check_antihomomorphism());
            for x in crate::liegrad::sl_subspace(2).basis_mats(2) {
                let minus_star = -&ig.involution.apply(&x).unwrap();
                assert_eq!(d.apply(&x).unwrap(), minus_star);
            }
        }
    }

    #[test]
    fn recovery_round_trip() {
        for case in 1..=4 {
            let (l, h, phi, _) = marker_setup(case);
            let sub = Subgroup::generated(l.group(), std::slice::from_ref(&h)).unwrap();
            let q = quotient(l.group(), &sub).unwrap();
            let factor = coarsen(&l, &sub).unwrap();
            let d = OuterDatum::from_dual_action(&l, &h, &phi).unwrap();
            let back = d.recover(&factor, &q).unwrap();
            assert!(back.same_components(&l), "case {case}");
        }
    }

    #[test]
    fn recovery_with_h_inside_fine_group() {
        let t = FinAbGroup::new(&[2, 2, 2, 2]).unwrap();
        let id = GroupHom::identity(&t);
        let h = t.generator(0);
        let ig = fine_involution_grading(&[1, 3], &t, &id).unwrap();
        let l = type2(&ig.grading, &ig.involution, &h).unwrap();
        assert!(verify_lie(&l).passed());
        let phi = t.character(&[1, 0, 0, 0]).unwrap();
        let d = OuterDatum::from_dual_action(&l, &h, &phi).unwrap();
        let sub = Subgroup::generated(&t, std::slice::from_ref(&h)).unwrap();
        let q = quotient(&t, &sub).unwrap();
        let back = d.recover(&coarsen(&l, &sub).unwrap(), &q).unwrap();
        assert!(back.same_components(&l));
    }

    #[test]
    fn inner_dual_action_is_rejected() {
        // Type I gradings of sl(3): every character acts by an inner automorphism.
        let l = type1(&epsilon_grading(3).unwrap()).unwrap();
        let g = l.group().clone();
        let phi = g.character(&[1, 0]).unwrap();
        let h = g.elem(&[1, 0]).unwrap();
        assert!(matches!(
            OuterDatum::from_dual_action(&l, &h, &phi),
            Err(Error::BadMarker(_))
        ));
        let g2 = FinAbGroup::new(&[3, 3, 2]).unwrap();
        let push = GroupHom::new(&g, &g2, vec![g2.generator(0), g2.generator(1)]).unwrap();
        let l2 = l.push_forward(&push).unwrap();
        let phi2 = g2.character(&[1, 0, 1]).unwrap();
        assert!(matches!(
            OuterDatum::from_dual_action(&l2, &g2.generator(2), &phi2),
            Err(Error::NotOuter(_))
        ));
    }

    #[test]
    fn recovery_errors() {
        let (l, h, phi, _) = marker_setup(2);
        let sub = Subgroup::generated(l.group(), std::slice::from_ref(&h)).unwrap();
        let q = quotient(l.group(), &sub).unwrap();
        let factor = coarsen(&l, &sub).unwrap();
        let id = |x: &Mat| Ok(x.clone());
        let bad_phi = l.group().character(&[1, 0, 0]).unwrap();
        assert!(matches!(
            recover_from_factor(&factor, &q, &bad_phi, &id),
            Err(Error::BadMarker(_))
        ));
        let wrong_square = |x: &Mat| Ok(x.scale(&CycNum::from_int(2, 1)));
        assert!(matches!(
            recover_from_factor(&factor, &q, &phi, &wrong_square),
            Err(Error::BadSquare(_))
        ));
        let escape = |_: &Mat| Ok(Mat::unit(2, 0, 1));
        let e = recover_from_factor(&factor, &q, &phi, &escape);
        assert!(matches!(e, Err(Error::NotStable(_))));
        let big = Subgroup::generated(l.group(), &[h, l.group().generator(0)]).unwrap();
        let q4 = quotient(l.group(), &big).unwrap();
        let f4 = coarsen(&l, &big).unwrap();
        assert!(matches!(
            recover_from_factor(&f4, &q4, &phi, &id),
            Err(Error::BadMarker(_))
        ));
    }
}
