use std::collections::BTreeMap;

use super::{is_eigen, Involution, InvolutionGrading, SignFunction};
use crate::cyclo::{CycNum, Mat};
use crate::error::{Error, Result};
use crate::groups::{FinAbGroup, GroupElem, GroupHom};
use crate::matalg::{elementary_grading, epsilon_grading, tensor_grading_in, GradingKind};

/// The four involutions of `M_2` compatible with its `Z2 x Z2` grading by
/// `I, X_a, X_b, X_a X_b`:
///
/// 1. `Phi = [[0,1],[-1,0]]` (symplectic)
/// 2. `Phi = [[0,1],[1,0]]`
/// 3. `Phi = I`
/// 4. `Phi = diag(1,-1)`
pub fn canonical_l6(case: u8) -> Result<InvolutionGrading> {
    let phi = match case {
        1 => Mat::from_ints(&[&[0, 1], &[-1, 0]]),
        2 => Mat::from_ints(&[&[0, 1], &[1, 0]]),
        3 => Mat::identity(2),
        4 => Mat::from_ints(&[&[1, 0], &[0, -1]]),
        _ => return Err(Error::InvalidCase(format!("case {case} is not in 1..4"))),
    };
    let involution = Involution::new(&phi)?;
    let grading = epsilon_grading(2)?.with_kind(GradingKind::Involution);
    let mut values = BTreeMap::new();
    for (t, basis) in grading.labels() {
        let beta = is_eigen(&involution, &basis[0].1).expect("fine component is stable");
        values.insert(t.clone(), beta);
    }
    let sign = SignFunction::new(grading.group(), values)?;
    Ok(InvolutionGrading {
        grading,
        involution,
        sign: Some(sign),
    })
}

/// Shape of the form for an elementary involution grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    /// `Phi = diag(I_m, [[0, I_l], [I_l, 0]])` with `l = pairs`; the tuple
    /// must satisfy `g_1^2 = ... = g_m^2 = g_{m+1} g_{m+l+1} = ...`.
    Transpose { pairs: usize },
    /// `Phi = [[0, I_k], [-I_k, 0]]`; the tuple must satisfy
    /// `g_1 g_{k+1} = ... = g_k g_{2k}`.
    Symplectic,
}

fn block_form(n: usize, flavor: Flavor) -> Mat {
    let mut entries = vec![CycNum::zero(1); n * n];
    match flavor {
        Flavor::Transpose { pairs: l } => {
            let m = n - 2 * l;
            for i in 0..m {
                entries[i * n + i] = CycNum::one(1);
            }
            for i in 0..l {
                entries[(m + i) * n + m + l + i] = CycNum::one(1);
                entries[(m + l + i) * n + m + i] = CycNum::one(1);
            }
        }
        Flavor::Symplectic => {
            let k = n / 2;
            for i in 0..k {
                entries[i * n + k + i] = CycNum::one(1);
                entries[(k + i) * n + i] = CycNum::from_int(-1, 1);
            }
        }
    }
    Mat::from_entries(n, n, entries).expect("square")
}

/// Elementary grading by `tuple` together with the block involution of the
/// requested flavor; the tuple constraint is checked exactly.
pub fn elementary_involution_grading(
    group: &FinAbGroup,
    tuple: &[GroupElem],
    flavor: Flavor,
) -> Result<InvolutionGrading> {
    let n = tuple.len();
    if n == 0 {
        return Err(Error::InvalidTuple("empty tuple".into()));
    }
    let products: Vec<GroupElem> = match flavor {
        Flavor::Transpose { pairs: l } => {
            if 2 * l > n {
                return Err(Error::IncompatibleTuple(format!(
                    "{l} pairs do not fit in a tuple of length {n}"
                )));
            }
            let m = n - 2 * l;
            let mut p: Vec<GroupElem> = tuple[..m].iter().map(|g| g * g).collect();
            p.extend((0..l).map(|i| &tuple[m + i] * &tuple[m + l + i]));
            p
        }
        Flavor::Symplectic => {
            if !n.is_multiple_of(2) {
                return Err(Error::InvalidOrder(format!(
                    "symplectic forms need even order, got {n}"
                )));
            }
            let k = n / 2;
            (0..k).map(|i| &tuple[i] * &tuple[k + i]).collect()
        }
    };
    if let Some(g) = tuple.iter().find(|g| g.group() != group) {
        return Err(Error::GroupMismatch(format!("{g} is not an element of {group}")));
    }
    if let Some(pos) = products.iter().position(|p| *p != products[0]) {
        return Err(Error::IncompatibleTuple(format!(
            "constraint product {pos} is {} but product 0 is {}",
            products[pos], products[0]
        )));
    }
    let grading = elementary_grading(group, n, tuple)?.with_kind(GradingKind::Involution);
    let involution = Involution::new(&block_form(n, flavor))?;
    Ok(InvolutionGrading {
        grading,
        involution,
        sign: None,
    })
}

/// Tensor product of involution gradings graded by the direct product of
/// their groups.
pub fn involution_tensor(parts: &[InvolutionGrading]) -> Result<InvolutionGrading> {
    let Some(first) = parts.first() else {
        return Err(Error::InvalidOrder("no tensor factors".into()));
    };
    let mut common = first.grading.group().clone();
    for p in &parts[1..] {
        common = common.direct_product(p.grading.group());
    }
    let mut offset = 0;
    let mut embeds = Vec::with_capacity(parts.len());
    for p in parts {
        let g = p.grading.group();
        let images = (0..g.rank()).map(|i| common.generator(offset + i)).collect();
        embeds.push(GroupHom::new(g, &common, images)?);
        offset += g.rank();
    }
    involution_tensor_in(parts, &common, &embeds)
}

/// Tensor product inside a common group. The form of the product is the
/// Kronecker product of the forms, and the sign of a pure tensor of fine
/// basis elements is the product of the factor signs.
pub fn involution_tensor_in(
    parts: &[InvolutionGrading],
    common: &FinAbGroup,
    embeds: &[GroupHom],
) -> Result<InvolutionGrading> {
    if parts.is_empty() || parts.len() != embeds.len() {
        return Err(Error::BadEmbedding(format!(
            "{} factors with {} embeddings",
            parts.len(),
            embeds.len()
        )));
    }
    let id = GroupHom::identity(common);
    let mut grading = parts[0].grading.push_forward(&embeds[0])?;
    let mut involution = parts[0].involution.clone();
    for (p, e) in parts.iter().zip(embeds).skip(1) {
        grading = tensor_grading_in(&grading, &p.grading, common, &id, e)?;
        involution = involution.tensor(&p.involution);
    }
    let mut signs: Option<BTreeMap<GroupElem, i8>> = None;
    for (p, e) in parts.iter().zip(embeds) {
        let Some(s) = &p.sign else { continue };
        let mut next = BTreeMap::new();
        let prev = signs.take().unwrap_or_else(|| BTreeMap::from([(common.identity(), 1)]));
        for (t0, b0) in &prev {
            for (t1, b1) in s.values() {
                let t = t0 * &e.apply(t1)?;
                let b = b0 * b1;
                if let Some(old) = next.insert(t.clone(), b) {
                    if old != b {
                        return Err(Error::SupportClash(format!("sign of {t} is ambiguous in the product")));
                    }
                }
            }
        }
        signs = Some(next);
    }
    let sign = signs.map(|v| SignFunction::new(common, v)).transpose()?;
    Ok(InvolutionGrading {
        grading: grading.with_kind(GradingKind::Involution),
        involution,
        sign,
    })
}
