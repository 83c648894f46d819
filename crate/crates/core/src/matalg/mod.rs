//! Group gradings of the matrix algebra `M_n`: construction, verification,
//! coarsening and the dual-group action.

mod action;
mod construct;
mod verify;

use std::collections::BTreeMap;
use std::fmt;

use crate::cyclo::{Mat, Subspace};
use crate::error::{Error, Result};
use crate::groups::{FinAbGroup, GroupElem, GroupHom};

pub use action::{
    chi_action, coarsen, decompose, homogeneous_projection, is_graded_subspace, is_invariant, Decomposer,
};
pub(crate) use construct::monomial_name;
pub use construct::{elementary_grading, epsilon_grading, tensor_grading, tensor_grading_in, EpsilonSeed};
pub use verify::{check_grading, verify_assoc, Product, VerificationReport, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GradingKind {
    Associative,
    Lie,
    Involution,
}

impl GradingKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GradingKind::Associative => "associative",
            GradingKind::Lie => "lie",
            GradingKind::Involution => "involution",
        }
    }

    pub fn parse(s: &str) -> Result<GradingKind> {
        match s {
            "associative" => Ok(GradingKind::Associative),
            "lie" => Ok(GradingKind::Lie),
            "involution" => Ok(GradingKind::Involution),
            other => Err(Error::Parse(format!("unknown grading kind {other:?}"))),
        }
    }
}

impl fmt::Display for GradingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A decomposition of `M_n` (or of `sl(n)` for the Lie kind) into subspaces
/// indexed by group elements. Only nonzero components are stored.
#[derive(Clone)]
pub struct Grading {
    group: FinAbGroup,
    n: usize,
    kind: GradingKind,
    components: BTreeMap<GroupElem, Subspace>,
    labels: BTreeMap<GroupElem, Vec<(String, Mat)>>,
}

impl Grading {
    /// Assembles a grading without checking the grading laws; use
    /// [`verify_assoc`] or the Lie verifier for that.
    pub fn new(
        group: &FinAbGroup,
        n: usize,
        kind: GradingKind,
        components: impl IntoIterator<Item = (GroupElem, Subspace)>,
    ) -> Result<Grading> {
        let mut map: BTreeMap<GroupElem, Subspace> = BTreeMap::new();
        for (g, v) in components {
            if g.group() != group {
                return Err(Error::GroupMismatch(format!("{g} is not an element of {group}")));
            }
            if v.ambient_dim() != n * n {
                return Err(Error::DimensionMismatch(format!(
                    "component {g} lives in dimension {}, expected {}",
                    v.ambient_dim(),
                    n * n
                )));
            }
            if v.is_zero() {
                continue;
            }
            let merged = match map.remove(&g) {
                Some(old) => old.sum(&v)?,
                None => v,
            };
            map.insert(g, merged);
        }
        Ok(Grading {
            group: group.clone(),
            n,
            kind,
            components: map,
            labels: BTreeMap::new(),
        })
    }

    /// Builds the grading spanned by named homogeneous matrices.
    pub fn from_labeled(
        group: &FinAbGroup,
        n: usize,
        kind: GradingKind,
        labeled: Vec<(GroupElem, String, Mat)>,
    ) -> Result<Grading> {
        let mut by_elem: BTreeMap<GroupElem, Vec<(String, Mat)>> = BTreeMap::new();
        for (g, name, m) in labeled {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch(format!(
                    "basis matrix {name} is {}x{}, expected {n}x{n}",
                    m.rows(),
                    m.cols()
                )));
            }
            by_elem.entry(g).or_default().push((name, m));
        }
        let comps = by_elem
            .iter()
            .map(|(g, l)| Ok((g.clone(), Subspace::span_mats(n, l.iter().map(|(_, m)| m))?)))
            .collect::<Result<Vec<_>>>()?;
        let mut grading = Grading::new(group, n, kind, comps)?;
        by_elem.retain(|g, _| grading.components.contains_key(g));
        grading.labels = by_elem;
        Ok(grading)
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> GradingKind {
        self.kind
    }

    pub fn with_kind(mut self, kind: GradingKind) -> Grading {
        self.kind = kind;
        self
    }

    pub fn components(&self) -> &BTreeMap<GroupElem, Subspace> {
        &self.components
    }

    /// The component of `g`, zero outside the support.
    pub fn component(&self, g: &GroupElem) -> Subspace {
        self.components
            .get(g)
            .cloned()
            .unwrap_or_else(|| Subspace::zero(self.n * self.n))
    }

    pub fn support(&self) -> Vec<GroupElem> {
        self.components.keys().cloned().collect()
    }

    pub fn dims(&self) -> Vec<(GroupElem, usize)> {
        self.components.iter().map(|(g, v)| (g.clone(), v.dim())).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.components.values().map(Subspace::dim).sum()
    }

    /// The dimension the components must add up to.
    pub fn expected_dim(&self) -> usize {
        match self.kind {
            GradingKind::Lie => self.n * self.n - 1,
            _ => self.n * self.n,
        }
    }

    pub fn labels(&self) -> &BTreeMap<GroupElem, Vec<(String, Mat)>> {
        &self.labels
    }

    /// Basis of the component of `g`: the named basis when one was given,
    /// otherwise the canonical row-reduced basis.
    pub fn basis(&self, g: &GroupElem) -> Vec<Mat> {
        if let Some(l) = self.labels.get(g) {
            return l.iter().map(|(_, m)| m.clone()).collect();
        }
        match self.components.get(g) {
            Some(v) => v.basis_mats(self.n),
            None => Vec::new(),
        }
    }

    /// Basis of the component of `g` with display names; unnamed canonical
    /// basis vectors are called `g#k`.
    pub fn named_basis(&self, g: &GroupElem) -> Vec<(String, Mat)> {
        match self.labels.get(g) {
            Some(l) => l.clone(),
            None => self
                .basis(g)
                .into_iter()
                .enumerate()
                .map(|(k, m)| (format!("{g}#{k}"), m))
                .collect(),
        }
    }

    /// Canonical bases only, ignoring display names.
    pub fn without_labels(mut self) -> Grading {
        self.labels.clear();
        self
    }

    /// Pushes the grading forward along a homomorphism of groups; for an
    /// injective map this is a relabeling, otherwise components merge.
    pub fn push_forward(&self, hom: &GroupHom) -> Result<Grading> {
        if hom.source() != &self.group {
            return Err(Error::GroupMismatch(format!(
                "map from {} applied to a grading by {}",
                hom.source(),
                self.group
            )));
        }
        let comps = self
            .components
            .iter()
            .map(|(g, v)| Ok((hom.apply(g)?, v.clone())))
            .collect::<Result<Vec<_>>>()?;
        let mut out = Grading::new(hom.target(), self.n, self.kind, comps)?;
        if hom.is_injective() {
            for (g, l) in &self.labels {
                out.labels.insert(hom.apply(g)?, l.clone());
            }
        }
        Ok(out)
    }

    /// Same components, compared as subspaces; kind and labels ignored.
    pub fn same_components(&self, other: &Grading) -> bool {
        self.group == other.group && self.n == other.n && self.components == other.components
    }
}

impl PartialEq for Grading {
    fn eq(&self, other: &Grading) -> bool {
        self.same_components(other) && self.kind == other.kind
    }
}

impl Eq for Grading {}

impl fmt::Debug for Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Grading of M_{} by {} ({}), {} components",
            self.n,
            self.group,
            self.kind,
            self.components.len()
        )?;
        for (g, v) in &self.components {
            writeln!(f, "  {g}: dim {}", v.dim())?;
        }
        Ok(())
    }
}
