use std::collections::BTreeSet;

use super::{FinAbGroup, GroupElem};
use crate::error::{Error, Result};

/// A homomorphism fixed by the images of the cyclic generators of the
/// source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source: FinAbGroup,
    target: FinAbGroup,
    images: Vec<GroupElem>,
}

impl GroupHom {
    /// Fails with `BadEmbedding` unless each image has order dividing the
    /// corresponding factor of the source.
    pub fn new(source: &FinAbGroup, target: &FinAbGroup, images: Vec<GroupElem>) -> Result<GroupHom> {
        if images.len() != source.rank() {
            return Err(Error::BadEmbedding(format!(
                "{} generator images for a group of rank {}",
                images.len(),
                source.rank()
            )));
        }
        for (i, (img, &n)) in images.iter().zip(source.factors()).enumerate() {
            if img.group() != target {
                return Err(Error::BadEmbedding(format!("image {i} is not in {target}")));
            }
            if n % img.order() != 0 {
                return Err(Error::BadEmbedding(format!(
                    "image {img} of generator {i} has order {} not dividing {n}",
                    img.order()
                )));
            }
        }
        Ok(GroupHom {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    pub fn identity(group: &FinAbGroup) -> GroupHom {
        let images = (0..group.rank()).map(|i| group.generator(i)).collect();
        GroupHom::new(group, group, images).expect("generators")
    }

    /// The two coordinate inclusions into `A x B`.
    pub fn product_inclusions(a: &FinAbGroup, b: &FinAbGroup) -> (FinAbGroup, GroupHom, GroupHom) {
        let p = a.direct_product(b);
        let left = (0..a.rank()).map(|i| p.generator(i)).collect();
        let right = (0..b.rank()).map(|i| p.generator(a.rank() + i)).collect();
        let ia = GroupHom::new(a, &p, left).expect("coordinate inclusion");
        let ib = GroupHom::new(b, &p, right).expect("coordinate inclusion");
        (p, ia, ib)
    }

    pub fn source(&self) -> &FinAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FinAbGroup {
        &self.target
    }

    pub fn images(&self) -> &[GroupElem] {
        &self.images
    }

    pub fn apply(&self, g: &GroupElem) -> Result<GroupElem> {
        if g.group() != &self.source {
            return Err(Error::GroupMismatch(format!(
                "{g} is not an element of {}",
                self.source
            )));
        }
        let mut out = self.target.identity();
        for (&e, img) in g.exponents().iter().zip(&self.images) {
            out = &out * &img.pow(e as i64);
        }
        Ok(out)
    }

    pub fn is_injective(&self) -> bool {
        let images: BTreeSet<GroupElem> = self
            .source
            .elements()
            .iter()
            .map(|g| self.apply(g).expect("source element"))
            .collect();
        images.len() as u64 == self.source.order()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inclusions_into_product() {
        let a = FinAbGroup::cyclic(2).unwrap();
        let b = FinAbGroup::cyclic(3).unwrap();
        let (p, ia, ib) = GroupHom::product_inclusions(&a, &b);
        assert_eq!(p.factors(), &[2, 3]);
        assert!(ia.is_injective() && ib.is_injective());
        assert_eq!(ib.apply(&b.elem(&[2]).unwrap()).unwrap(), p.elem(&[0, 2]).unwrap());
    }

    #[test]
    fn rejects_bad_images() {
        let z2 = FinAbGroup::cyclic(2).unwrap();
        let z4 = FinAbGroup::cyclic(4).unwrap();
        assert!(matches!(
            GroupHom::new(&z2, &z4, vec![z4.elem(&[1]).unwrap()]),
            Err(Error::BadEmbedding(_))
        ));
        let h = GroupHom::new(&z2, &z4, vec![z4.elem(&[2]).unwrap()]).unwrap();
        assert!(h.is_injective());
        let collapse = GroupHom::new(&z4, &z2, vec![z2.elem(&[1]).unwrap()]).unwrap();
        assert!(!collapse.is_injective());
        assert!(collapse.apply(&z4.elem(&[2]).unwrap()).unwrap().is_identity());
    }
}
