use std::collections::BTreeSet;

use super::sl_subspace;
use crate::cyclo::Mat;
use crate::error::{Error, Result};
use crate::groups::{FinAbGroup, GroupElem, GroupHom};
use crate::invol::{canonical_l6, involution_tensor_in, sym_skew_split, InvolutionGrading, SignFunction};
use crate::matalg::{elementary_grading, monomial_name, EpsilonSeed, Grading, GradingKind};

/// One basis element `X_t` of a tensor product of fine gradings.
struct FineElem {
    t: GroupElem,
    image: GroupElem,
    name: String,
    mat: Mat,
}

/// Enumerates `X_t = X_{t_1} ⊗ ... ⊗ X_{t_k}` over the source of
/// `embedding`, which must be `Z_{n_1}^2 x ... x Z_{n_k}^2`.
fn fine_elems(orders: &[usize], embedding: &GroupHom) -> Result<Vec<FineElem>> {
    let expected: Vec<u64> = orders.iter().flat_map(|&n| [n as u64, n as u64]).collect();
    if let Some(&n) = orders.iter().find(|&&n| n < 2) {
        return Err(Error::InvalidOrder(format!("fine factor of order {n}")));
    }
    let source = embedding.source();
    if source.factors() != expected.as_slice() {
        return Err(Error::BadEmbedding(format!(
            "source {source} does not match fine factors of orders {orders:?}"
        )));
    }
    let seeds = orders
        .iter()
        .map(|&n| EpsilonSeed::new(n))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for t in source.elements() {
        let ex = t.exponents();
        let mut mat = Mat::identity(1);
        let mut names = Vec::new();
        for (s, seed) in seeds.iter().enumerate() {
            let (i, j) = (ex[2 * s] as usize, ex[2 * s + 1] as usize);
            mat = mat.kron(&seed.monomial(i, j));
            names.push(monomial_name(i, j));
        }
        let name = if names.is_empty() {
            "I".to_string()
        } else {
            names.join("⊗")
        };
        out.push(FineElem {
            image: embedding.apply(&t)?,
            t,
            name,
            mat,
        });
    }
    Ok(out)
}

fn check_tuple(group: &FinAbGroup, tuple: &[GroupElem]) -> Result<()> {
    if tuple.is_empty() {
        return Err(Error::InvalidTuple("empty tuple".into()));
    }
    if let Some(g) = tuple.iter().find(|g| g.group() != group) {
        return Err(Error::GroupMismatch(format!("{g} is not an element of {group}")));
    }
    Ok(())
}

fn check_target(group: &FinAbGroup, embedding: &GroupHom) -> Result<()> {
    if embedding.target() != group {
        return Err(Error::BadEmbedding(format!(
            "embedding lands in {}, expected {group}",
            embedding.target()
        )));
    }
    Ok(())
}

/// The associative grading `Gamma(tuple) ⊗ Gamma(n_1) ⊗ ... ⊗ Gamma(n_k)` of
/// `M_{pq}` inside `group`, where the fine factors are placed by
/// `embedding` from `Z_{n_1}^2 x ... x Z_{n_k}^2`.
pub fn tensor_form_grading(
    group: &FinAbGroup,
    tuple: &[GroupElem],
    orders: &[usize],
    embedding: &GroupHom,
) -> Result<Grading> {
    check_tuple(group, tuple)?;
    check_target(group, embedding)?;
    let p = tuple.len();
    let elem = elementary_grading(group, p, tuple)?;
    let fine = fine_elems(orders, embedding)?;
    let q = fine[0].mat.rows();
    let mut items = Vec::new();
    for (g, basis) in elem.labels() {
        for (yname, y) in basis {
            for f in &fine {
                items.push((g * &f.image, format!("{yname}⊗{}", f.name), y.kron(&f.mat)));
            }
        }
    }
    Grading::from_labeled(group, p * q, GradingKind::Associative, items)
}

/// The restriction of [`tensor_form_grading`] to `sl(pq)`, written out
/// directly. The component of `g` is spanned by
///
/// * `E_ij ⊗ X_t` with `i != j` and `g_i^{-1} g_j t = g`,
/// * `(E_11 - E_ii) ⊗ X_t` with `t = g`, `1 < i <= p`,
/// * `E_11 ⊗ X_t` with `t = g != e`.
pub fn type1_tensor_form(
    group: &FinAbGroup,
    tuple: &[GroupElem],
    orders: &[usize],
    embedding: &GroupHom,
) -> Result<Grading> {
    check_tuple(group, tuple)?;
    check_target(group, embedding)?;
    let p = tuple.len();
    let fine = fine_elems(orders, embedding)?;
    let q = fine[0].mat.rows();
    if p * q < 2 {
        return Err(Error::TooSmall("sl(1) is zero".into()));
    }
    let mut items = Vec::new();
    for f in &fine {
        for i in 0..p {
            for j in 0..p {
                if i == j {
                    continue;
                }
                let deg = &(&tuple[i].inv() * &tuple[j]) * &f.image;
                let name = format!("E({},{})⊗{}", i + 1, j + 1, f.name);
                items.push((deg, name, Mat::unit(p, i, j).kron(&f.mat)));
            }
        }
        for i in 1..p {
            let d = &Mat::unit(p, 0, 0) - &Mat::unit(p, i, i);
            let name = format!("(E(1,1)-E({},{}))⊗{}", i + 1, i + 1, f.name);
            items.push((f.image.clone(), name, d.kron(&f.mat)));
        }
        if !f.t.is_identity() {
            let name = format!("E(1,1)⊗{}", f.name);
            items.push((f.image.clone(), name, Mat::unit(p, 0, 0).kron(&f.mat)));
        }
    }
    Grading::from_labeled(group, p * q, GradingKind::Lie, items)
}

fn split_embedding(embedding: &GroupHom, k: usize) -> Result<Vec<GroupHom>> {
    let z22 = FinAbGroup::new(&[2, 2])?;
    let images = embedding.images();
    (0..k)
        .map(|s| {
            GroupHom::new(
                &z22,
                embedding.target(),
                vec![images[2 * s].clone(), images[2 * s + 1].clone()],
            )
        })
        .collect()
}

fn l6_parts(cases: &[u8]) -> Result<Vec<InvolutionGrading>> {
    cases.iter().map(|&c| canonical_l6(c)).collect()
}

/// The fine involution grading `L6(c_1) ⊗ ... ⊗ L6(c_k)` of `M_{2^k}`,
/// placed in `group` by `embedding` from `(Z_2 x Z_2)^k`.
pub fn fine_involution_grading(cases: &[u8], group: &FinAbGroup, embedding: &GroupHom) -> Result<InvolutionGrading> {
    if cases.is_empty() {
        return Err(Error::InvalidOrder("no fine factors".into()));
    }
    check_target(group, embedding)?;
    let parts = l6_parts(cases)?;
    fine_elems(&vec![2; cases.len()], embedding)?;
    let embeds = split_embedding(embedding, cases.len())?;
    involution_tensor_in(&parts, group, &embeds)
}

/// `(t, X_t, beta(t))` over `(Z_2 x Z_2)^k` for the product of the given
/// cases.
fn signed_fine(cases: &[u8], embedding: &GroupHom) -> Result<Vec<(FineElem, i8)>> {
    let parts = l6_parts(cases)?;
    let signs: Vec<&SignFunction> = parts
        .iter()
        .map(|p| p.sign.as_ref().expect("canonical cases carry signs"))
        .collect();
    let fine = fine_elems(&vec![2; cases.len()], embedding)?;
    let mut out = Vec::with_capacity(fine.len());
    for f in fine {
        let ex = f.t.exponents();
        let mut beta = 1i8;
        for (s, sf) in signs.iter().enumerate() {
            let local = sf.group().elem(&[ex[2 * s] as i64, ex[2 * s + 1] as i64])?;
            beta *= sf.get(&local).expect("full support");
        }
        out.push((f, beta));
    }
    Ok(out)
}

fn check_marker(group: &FinAbGroup, h: &GroupElem) -> Result<()> {
    if h.group() != group {
        return Err(Error::GroupMismatch(format!("marker {h} is not in {group}")));
    }
    if h.order() != 2 {
        return Err(Error::BadMarker(format!("{h} has order {}", h.order())));
    }
    Ok(())
}

/// The fine Type II grading of `sl(2^k)` attached to `L6(c_1) ⊗ ... ⊗
/// L6(c_k)` and a marker `h` of order 2:
///
/// * `X_t` lies in `L_t` when `beta(t) = -1`,
/// * `X_t` lies in `L_{th}` when `beta(t) = +1` and `t != e`.
///
/// This covers both `h` outside the image of the fine group and `h` inside
/// it; in the latter case `L_h` contains `X_h` exactly when `beta(h) = -1`.
pub fn fine_outer(cases: &[u8], group: &FinAbGroup, h: &GroupElem, embedding: &GroupHom) -> Result<Grading> {
    if cases.is_empty() {
        return Err(Error::InvalidOrder("no fine factors".into()));
    }
    check_target(group, embedding)?;
    check_marker(group, h)?;
    if !embedding.is_injective() {
        return Err(Error::BadEmbedding("fine group must embed injectively".into()));
    }
    let signed = signed_fine(cases, embedding)?;
    let n = 1usize << cases.len();
    let mut items = Vec::new();
    for (f, beta) in signed {
        if beta == -1 {
            items.push((f.image, f.name, f.mat));
        } else if !f.t.is_identity() {
            items.push((&f.image * h, f.name, f.mat));
        }
    }
    Grading::from_labeled(group, n, GradingKind::Lie, items)
}

/// The Type II grading of `sl(pq)` attached to an elementary involution
/// grading `A` of `M_p` and the fine involution grading `B` of `M_q` given by
/// `cases`, with `supp A ∩ supp B = {e}`. Basis elements are `Y ⊗ X_t` with
/// `Y` homogeneous and `Y* = ±Y`:
///
/// * when `Y* = -beta(t) Y` it lies in `L_{deg Y · t}`,
/// * when `Y* = beta(t) Y` it lies in `L_{deg Y · t · h}`, and for
///   `deg Y = t = e` only traceless `Y` are used.
///
/// Either part may be absent; the missing factor is `M_1`.
pub fn mixed_type2(
    elementary: Option<&InvolutionGrading>,
    cases: &[u8],
    group: &FinAbGroup,
    h: &GroupElem,
    embedding: &GroupHom,
) -> Result<Grading> {
    if elementary.is_none() && cases.is_empty() {
        return Err(Error::InvalidOrder("no tensor factors".into()));
    }
    check_target(group, embedding)?;
    check_marker(group, h)?;
    let signed = if cases.is_empty() {
        fine_elems(&[], embedding)?.into_iter().map(|f| (f, 1)).collect()
    } else {
        signed_fine(cases, embedding)?
    };

    // (degree, sign, name, Y), with the traceless restriction applied where
    // it is needed.
    let mut ys: Vec<(GroupElem, i8, String, Mat)> = Vec::new();
    let mut ys_traceless: Vec<(String, Mat)> = Vec::new();
    let p = match elementary {
        None => {
            ys.push((group.identity(), 1, "1".to_string(), Mat::identity(1)));
            1
        }
        Some(a) => {
            if a.grading.group() != group {
                return Err(Error::GroupMismatch(format!(
                    "elementary part is graded by {}, expected {group}",
                    a.grading.group()
                )));
            }
            let p = a.grading.n();
            let image: BTreeSet<GroupElem> = signed.iter().map(|(f, _)| f.image.clone()).collect();
            if let Some(g) = a
                .grading
                .support()
                .into_iter()
                .find(|g| !g.is_identity() && image.contains(g))
            {
                return Err(Error::SupportClash(format!(
                    "{g} lies in both the elementary and the fine support"
                )));
            }
            for (g, v) in a.grading.components() {
                let (plus, minus) = sym_skew_split(v, &a.involution)?;
                for (k, y) in plus.basis_mats(p).into_iter().enumerate() {
                    ys.push((g.clone(), 1, format!("{g}+#{k}"), y));
                }
                for (k, y) in minus.basis_mats(p).into_iter().enumerate() {
                    ys.push((g.clone(), -1, format!("{g}-#{k}"), y));
                }
                if g.is_identity() {
                    let t = plus.intersect(&sl_subspace(p))?;
                    for (k, y) in t.basis_mats(p).into_iter().enumerate() {
                        ys_traceless.push((format!("{g}+0#{k}"), y));
                    }
                }
            }
            p
        }
    };
    let q = signed[0].0.mat.rows();
    if p * q < 2 {
        return Err(Error::TooSmall("sl(1) is zero".into()));
    }
    let mut items = Vec::new();
    for (f, beta) in &signed {
        for (g, s, yname, y) in &ys {
            let deg = g * &f.image;
            let name = format!("{yname}⊗{}", f.name);
            if s * beta == -1 {
                items.push((deg, name, y.kron(&f.mat)));
            } else if !(g.is_identity() && f.t.is_identity()) {
                items.push((&deg * h, name, y.kron(&f.mat)));
            }
        }
        if f.t.is_identity() && *beta == 1 {
            for (yname, y) in &ys_traceless {
                items.push((h.clone(), format!("{yname}⊗{}", f.name), y.kron(&f.mat)));
            }
        }
    }
    Grading::from_labeled(group, p * q, GradingKind::Lie, items)
}

/// Involution grading `A ⊗ B` matching [`mixed_type2`], for cross-checks.
pub fn mixed_involution_grading(
    elementary: Option<&InvolutionGrading>,
    cases: &[u8],
    group: &FinAbGroup,
    embedding: &GroupHom,
) -> Result<InvolutionGrading> {
    let mut parts = Vec::new();
    let mut embeds = Vec::new();
    if let Some(a) = elementary {
        parts.push(a.clone());
        embeds.push(GroupHom::identity(group));
    }
    if !cases.is_empty() {
        parts.extend(l6_parts(cases)?);
        embeds.extend(split_embedding(embedding, cases.len())?);
    }
    involution_tensor_in(&parts, group, &embeds)
}

#[cfg(test)]
mod tests {
    use super::super::{type1, type2, verify_lie};
    use super::*;
    use crate::invol::{elementary_involution_grading, Flavor};

    fn z2k(k: usize) -> FinAbGroup {
        FinAbGroup::new(&vec![2; 2 * k]).unwrap()
    }

    #[test]
    fn type1_tensor_form_matches_restriction() {
        let g = FinAbGroup::new(&[3, 2, 2]).unwrap();
        let tuple = [g.identity(), g.elem(&[1, 0, 0]).unwrap()];
        let emb = GroupHom::new(
            &z2k(1),
            &g,
            vec![g.elem(&[0, 1, 0]).unwrap(), g.elem(&[0, 0, 1]).unwrap()],
        )
        .unwrap();
        let r = tensor_form_grading(&g, &tuple, &[2], &emb).unwrap();
        let explicit = type1_tensor_form(&g, &tuple, &[2], &emb).unwrap();
        let restricted = type1(&r).unwrap();
        assert!(explicit.same_components(&restricted));
        assert!(verify_lie(&explicit).passed());
    }

    #[test]
    fn identity_tensor_xt_is_needed() {
        // I ⊗ X_t with t != e is traceless and homogeneous of degree t.
        let g = FinAbGroup::new(&[2, 2]).unwrap();
        let tuple = [g.identity(), g.identity()];
        let emb = GroupHom::identity(&g);
        let explicit = type1_tensor_form(&g, &tuple, &[2], &emb).unwrap();
        assert_eq!(explicit.total_dim(), 15);
        let a = g.elem(&[1, 0]).unwrap();
        let xa = EpsilonSeed::new(2).unwrap().x_a;
        assert!(explicit
            .component(&a)
            .contains_mat(&Mat::identity(2).kron(&xa))
            .unwrap());
    }

    #[test]
    fn fine_outer_matches_type2_both_cases() {
        for cases in [vec![1u8], vec![2], vec![3], vec![4], vec![1, 3], vec![2, 4]] {
            let k = cases.len();
            // h outside the fine group
            let g = FinAbGroup::new(&[vec![2; 2 * k], vec![2]].concat()).unwrap();
            let images = (0..2 * k).map(|i| g.generator(i)).collect();
            let emb = GroupHom::new(&z2k(k), &g, images).unwrap();
            let h = g.generator(2 * k);
            let ig = fine_involution_grading(&cases, &g, &emb).unwrap();
            let want = type2(&ig.grading, &ig.involution, &h).unwrap();
            let got = fine_outer(&cases, &g, &h, &emb).unwrap();
            assert!(got.same_components(&want), "cases {cases:?} outside");
            // h inside
            let t = z2k(k);
            for h in t.elements().into_iter().filter(|x| x.order() == 2) {
                let id = GroupHom::identity(&t);
                let ig = fine_involution_grading(&cases, &t, &id).unwrap();
                let want = type2(&ig.grading, &ig.involution, &h).unwrap();
                let got = fine_outer(&cases, &t, &h, &id).unwrap();
                assert!(got.same_components(&want), "cases {cases:?} h = {h}");
                assert!(verify_lie(&got).passed());
            }
        }
    }

    #[test]
    fn mixed_matches_type2() {
        let g = FinAbGroup::new(&[4, 2, 2, 2]).unwrap();
        let a = g.elem(&[1, 0, 0, 0]).unwrap();
        let tuple = [g.identity(), a.clone(), a.pow(2), a.clone()];
        let elem = elementary_involution_grading(&g, &tuple, Flavor::Symplectic).unwrap();
        let emb = GroupHom::new(&z2k(1), &g, vec![g.generator(1), g.generator(2)]).unwrap();
        for case in 1..=4u8 {
            for h in [g.generator(3), g.generator(1), a.pow(2)] {
                let ig = mixed_involution_grading(Some(&elem), &[case], &g, &emb).unwrap();
                let want = type2(&ig.grading, &ig.involution, &h).unwrap();
                let got = mixed_type2(Some(&elem), &[case], &g, &h, &emb).unwrap();
                assert!(got.same_components(&want), "case {case} h = {h}");
            }
        }
    }

    #[test]
    fn mixed_without_fine_part() {
        let g = FinAbGroup::new(&[2, 2]).unwrap();
        let a = g.generator(0);
        let tuple = [g.identity(), a.clone(), g.identity()];
        let elem = elementary_involution_grading(&g, &tuple, Flavor::Transpose { pairs: 0 }).unwrap();
        let triv = FinAbGroup::trivial();
        let emb = GroupHom::new(&triv, &g, vec![]).unwrap();
        let h = g.generator(1);
        let got = mixed_type2(Some(&elem), &[], &g, &h, &emb).unwrap();
        let want = type2(&elem.grading, &elem.involution, &h).unwrap();
        assert!(got.same_components(&want));
    }

    #[test]
    fn support_clash_rejected() {
        let g = FinAbGroup::new(&[2, 2]).unwrap();
        let a = g.generator(0);
        let tuple = [g.identity(), a.clone()];
        let elem = elementary_involution_grading(&g, &tuple, Flavor::Transpose { pairs: 0 });
        let elem = elem.unwrap();
        let emb = GroupHom::identity(&g);
        assert!(matches!(
            mixed_type2(Some(&elem), &[3], &g, &a, &emb),
            Err(Error::SupportClash(_))
        ));
    }

    #[test]
    fn fine_outer_errors() {
        let g = z2k(1);
        let id = GroupHom::identity(&g);
        assert!(matches!(
            fine_outer(&[], &g, &g.generator(0), &id),
            Err(Error::InvalidOrder(_))
        ));
        assert!(matches!(
            fine_outer(&[5], &g, &g.generator(0), &id),
            Err(Error::InvalidCase(_))
        ));
        assert!(matches!(
            fine_outer(&[1], &g, &g.identity(), &id),
            Err(Error::BadMarker(_))
        ));
        let collapse = GroupHom::new(&g, &g, vec![g.generator(0), g.generator(0)]).unwrap();
        assert!(matches!(
            fine_outer(&[1], &g, &g.generator(0), &collapse),
            Err(Error::BadEmbedding(_))
        ));
    }
}
