use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use super::{Character, FinAbGroup, GroupElem};
use crate::error::{Error, Result};

/// Elements that can generate subgroups: group elements and characters.
pub trait AbelianElement: Clone + Ord + fmt::Debug {
    fn parent(&self) -> &FinAbGroup;
    fn neutral(group: &FinAbGroup) -> Self;
    fn all(group: &FinAbGroup) -> Vec<Self>;
    /// Product of two elements known to share a parent.
    fn op(&self, other: &Self) -> Self;
}

impl AbelianElement for GroupElem {
    fn parent(&self) -> &FinAbGroup {
        self.group()
    }
    fn neutral(group: &FinAbGroup) -> Self {
        group.identity()
    }
    fn all(group: &FinAbGroup) -> Vec<Self> {
        group.elements()
    }
    fn op(&self, other: &Self) -> Self {
        self * other
    }
}

impl AbelianElement for Character {
    fn parent(&self) -> &FinAbGroup {
        self.group()
    }
    fn neutral(group: &FinAbGroup) -> Self {
        group.trivial_character()
    }
    fn all(group: &FinAbGroup) -> Vec<Self> {
        group.dual()
    }
    fn op(&self, other: &Self) -> Self {
        self.mul(other).expect("characters of the same group")
    }
}

/// A subgroup of `G` (or of the dual of `G`) with its elements listed in
/// sorted order.
#[derive(Clone)]
pub struct Subgroup<E> {
    group: FinAbGroup,
    generators: Vec<E>,
    elements: Vec<E>,
}

impl<E: AbelianElement> Subgroup<E> {
    /// Closure of `gens` under multiplication.
    pub fn generated(group: &FinAbGroup, gens: &[E]) -> Result<Subgroup<E>> {
        for g in gens {
            if g.parent() != group {
                return Err(Error::GroupMismatch(format!(
                    "generator {g:?} does not belong to {group}"
                )));
            }
        }
        let mut seen: BTreeSet<E> = BTreeSet::new();
        let id = E::neutral(group);
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = x.op(g);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        Ok(Subgroup {
            group: group.clone(),
            generators: gens.to_vec(),
            elements: seen.into_iter().collect(),
        })
    }

    /// Subgroup from a set already known to be closed; a small generating
    /// set is picked greedily.
    fn from_closed(group: &FinAbGroup, elements: Vec<E>) -> Subgroup<E> {
        let mut gens: Vec<E> = Vec::new();
        let mut current = Subgroup::generated(group, &[]).expect("no generators");
        for x in &elements {
            if !current.contains(x) {
                gens.push(x.clone());
                current = Subgroup::generated(group, &gens).expect("same group");
            }
        }
        debug_assert_eq!(current.elements, elements);
        current
    }

    pub fn whole(group: &FinAbGroup) -> Subgroup<E> {
        Subgroup::from_closed(group, E::all(group))
    }

    pub fn trivial(group: &FinAbGroup) -> Subgroup<E> {
        Subgroup::generated(group, &[]).expect("no generators")
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn contains(&self, x: &E) -> bool {
        self.elements.binary_search(x).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup<E>) -> bool {
        self.elements.iter().all(|x| other.contains(x))
    }
}

// Equality ignores the generating set.
impl<E: PartialEq> PartialEq for Subgroup<E> {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.elements == other.elements
    }
}

impl<E: Eq> Eq for Subgroup<E> {}

impl<E: fmt::Debug> fmt::Debug for Subgroup<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.elements)
    }
}

/// Every subgroup of `G` (elements) or of its dual (characters), ordered by
/// size and then by element list.
pub fn all_subgroups<E: AbelianElement>(group: &FinAbGroup) -> Vec<Subgroup<E>> {
    let all = E::all(group);
    let mut found: BTreeSet<(usize, Vec<E>)> = BTreeSet::new();
    let start: Subgroup<E> = Subgroup::trivial(group);
    found.insert((1, start.elements.clone()));
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        for x in &all {
            if s.contains(x) {
                continue;
            }
            let mut gens = s.generators.clone();
            gens.push(x.clone());
            let t = Subgroup::generated(group, &gens).expect("same group");
            if found.insert((t.elements.len(), t.elements.clone())) {
                queue.push_back(t);
            }
        }
    }
    found
        .into_iter()
        .map(|(_, els)| Subgroup::from_closed(group, els))
        .collect()
}

/// `{g in G : chi(g) = 1 for every chi in chars}`; this is the annihilator
/// of the subgroup the characters generate.
pub fn annihilator(group: &FinAbGroup, chars: &[Character]) -> Result<Subgroup<GroupElem>> {
    for chi in chars {
        if chi.group() != group {
            return Err(Error::GroupMismatch(format!("{chi} is not a character of {group}")));
        }
    }
    let mut els = Vec::new();
    for g in group.elements() {
        if chars.iter().all(|chi| chi.pairing(&g).expect("checked") == 0) {
            els.push(g);
        }
    }
    Ok(Subgroup::from_closed(group, els))
}

/// `{chi : chi(g) = 1 for every g in elems}`, the mirrored annihilator in the
/// dual group.
pub fn annihilator_in_dual(group: &FinAbGroup, elems: &[GroupElem]) -> Result<Subgroup<Character>> {
    for g in elems {
        if g.group() != group {
            return Err(Error::GroupMismatch(format!("{g} is not an element of {group}")));
        }
    }
    let mut chars = Vec::new();
    for chi in group.dual() {
        if elems.iter().all(|g| chi.pairing(g).expect("checked") == 0) {
            chars.push(chi);
        }
    }
    Ok(Subgroup::from_closed(group, chars))
}

impl Subgroup<Character> {
    /// `Lambda^perp` inside `G`.
    pub fn annihilator(&self) -> Subgroup<GroupElem> {
        annihilator(&self.group, &self.elements).expect("characters of the parent group")
    }
}

impl Subgroup<GroupElem> {
    /// `H^perp` inside the dual of `G`.
    pub fn annihilator(&self) -> Subgroup<Character> {
        annihilator_in_dual(&self.group, &self.elements).expect("elements of the parent group")
    }
}

#[cfg(test)]
mod tests {
    use super::super::abelian_groups_of_order;
    use super::*;

    #[test]
    fn generated_examples() {
        let z4 = FinAbGroup::cyclic(4).unwrap();
        let s: Subgroup<GroupElem> = Subgroup::generated(&z4, &[]).unwrap();
        assert_eq!(s.elements(), &[z4.identity()]);
        let s = Subgroup::generated(&z4, &[z4.elem(&[2]).unwrap()]).unwrap();
        assert_eq!(s.elements(), &[z4.elem(&[0]).unwrap(), z4.elem(&[2]).unwrap()]);
        let k = FinAbGroup::new(&[2, 2]).unwrap();
        let s = Subgroup::generated(&k, &[k.elem(&[1, 0]).unwrap(), k.elem(&[0, 1]).unwrap()]).unwrap();
        assert_eq!(s.order(), 4);
        let other = FinAbGroup::cyclic(3).unwrap();
        assert!(matches!(
            Subgroup::generated(&z4, &[other.identity()]),
            Err(Error::GroupMismatch(_))
        ));
    }

    #[test]
    fn annihilator_examples() {
        let z4 = FinAbGroup::cyclic(4).unwrap();
        let full: Subgroup<Character> = Subgroup::whole(&z4);
        assert_eq!(full.annihilator().elements(), &[z4.identity()]);
        let triv: Subgroup<Character> = Subgroup::trivial(&z4);
        assert_eq!(triv.annihilator().order(), 4);
        // chi(a) = zeta_4, so chi^2(a^k) = (-1)^k vanishes exactly on {e, a^2}
        let chi2 = z4.character(&[1]).unwrap().mul(&z4.character(&[1]).unwrap()).unwrap();
        let lam = Subgroup::generated(&z4, &[chi2]).unwrap();
        assert_eq!(lam.annihilator().elements(), &[z4.identity(), z4.elem(&[2]).unwrap()]);
    }

    #[test]
    fn subgroup_counts() {
        // Z2xZ2 has 5 subgroups, Z4 has 3, Z2xZ4 has 8, Z2^3 has 16
        for (factors, count) in [(vec![2u64, 2], 5), (vec![4], 3), (vec![2, 4], 8), (vec![2, 2, 2], 16)] {
            let g = FinAbGroup::new(&factors).unwrap();
            assert_eq!(g.subgroups().len(), count, "{g}");
            assert_eq!(g.dual_subgroups().len(), count, "{g}");
        }
    }

    #[test]
    fn duality_sweep() {
        for n in 1..=16 {
            for g in abelian_groups_of_order(n) {
                for lam in g.dual_subgroups() {
                    assert_eq!(lam.order() * lam.annihilator().order(), g.order());
                }
                for h in g.subgroups() {
                    assert_eq!(h.order() * h.annihilator().order(), g.order());
                }
            }
        }
    }

    #[test]
    fn double_annihilator_all_subsets() {
        for n in 1..=12 {
            for g in abelian_groups_of_order(n) {
                let els = g.elements();
                for mask in 0u32..(1 << els.len()) {
                    let s: Vec<GroupElem> = els
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, x)| x.clone())
                        .collect();
                    let perp = annihilator_in_dual(&g, &s).unwrap();
                    let back = perp.annihilator();
                    let gen = Subgroup::generated(&g, &s).unwrap();
                    assert_eq!(back.elements(), gen.elements());
                }
            }
        }
    }
}
