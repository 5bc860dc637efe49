use std::fmt;

use super::{generated_subgroup, Elem, Group, Subgroup};
use crate::error::{Error, Result};

/// A total map between two groups, given by the image of every source element.
#[derive(Clone)]
pub struct GroupMap {
    source: Group,
    target: Group,
    images: Vec<u32>,
}

impl fmt::Debug for GroupMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupMap")
            .field("source", &self.source.name())
            .field("target", &self.target.name())
            .finish()
    }
}

/// Checks `f(x*s) = f(x)*f(s)` for every `x` and every generator `s` of the
/// source. By induction on word length this is equivalent to the full
/// homomorphism law.
fn check_hom(source: &Group, target: &Group, images: &[u32]) -> Result<()> {
    if images.len() != source.order() {
        return Err(Error::NotAHomomorphism(format!(
            "{} images for a group of order {}",
            images.len(),
            source.order()
        )));
    }
    if images[0] != 0 {
        return Err(Error::NotAHomomorphism("identity not mapped to identity".into()));
    }
    for (x, &fx) in images.iter().enumerate() {
        if fx as usize >= target.order() {
            return Err(Error::NotAHomomorphism(format!("image {fx} of {x} out of range")));
        }
    }
    for &s in source.generators() {
        let fs = images[s] as usize;
        for x in source.elements() {
            if images[source.mul(x, s)] as usize != target.mul(images[x] as usize, fs) {
                return Err(Error::NotAHomomorphism(format!("fails at ({x}, {s})")));
            }
        }
    }
    Ok(())
}

impl GroupMap {
    pub fn new(source: &Group, target: &Group, images: Vec<usize>) -> Result<GroupMap> {
        let images: Vec<u32> = images.into_iter().map(|x| x as u32).collect();
        check_hom(source, target, &images)?;
        Ok(GroupMap { source: source.clone(), target: target.clone(), images })
    }

    pub(crate) fn new_unchecked(source: &Group, target: &Group, images: Vec<u32>) -> GroupMap {
        GroupMap { source: source.clone(), target: target.clone(), images }
    }

    pub fn source(&self) -> &Group {
        &self.source
    }

    pub fn target(&self) -> &Group {
        &self.target
    }

    #[inline]
    pub fn image(&self, x: Elem) -> Elem {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Full `|G|^2` check of the homomorphism law.
    pub fn verify_exhaustive(&self) -> bool {
        let (s, t) = (&self.source, &self.target);
        s.elements().all(|x| {
            s.elements()
                .all(|y| self.image(s.mul(x, y)) == t.mul(self.image(x), self.image(y)))
        })
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.order() != self.target.order() {
            return false;
        }
        let mut seen = vec![false; self.target.order()];
        self.images.iter().all(|&y| !std::mem::replace(&mut seen[y as usize], true))
    }

    pub fn kernel(&self) -> Subgroup {
        let members: Vec<Elem> = self.source.elements().filter(|&x| self.images[x] == 0).collect();
        Subgroup::from_members(&self.source, &members).expect("kernel is a subgroup")
    }

    pub fn image_subgroup(&self) -> Subgroup {
        let gens: Vec<Elem> = self.source.generators().iter().map(|&s| self.image(s)).collect();
        generated_subgroup(&self.target, &gens)
    }
}

/// A bijective endomorphism, stored as its image sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism(Vec<u32>);

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Automorphism{:?}", self.0)
    }
}

impl Automorphism {
    pub fn identity(order: usize) -> Automorphism {
        Automorphism((0..order as u32).collect())
    }

    /// Validates that `images` is a bijective endomorphism of `g`.
    pub fn new(g: &Group, images: Vec<usize>) -> Result<Automorphism> {
        let images: Vec<u32> = images.into_iter().map(|x| x as u32).collect();
        check_hom(g, g, &images)?;
        let a = Automorphism(images);
        if !a.is_permutation() {
            return Err(Error::NotAHomomorphism("map is not bijective".into()));
        }
        Ok(a)
    }

    pub(crate) fn from_raw(images: Vec<u32>) -> Automorphism {
        Automorphism(images)
    }

    /// Conjugation `x -> g^-1 x g`.
    pub fn inner(g: &Group, t: Elem) -> Automorphism {
        Automorphism(g.elements().map(|x| g.conj(x, t) as u32).collect())
    }

    /// `x -> x^-1`; an automorphism only for abelian groups.
    pub fn inversion(g: &Group) -> Result<Automorphism> {
        Automorphism::new(g, g.elements().map(|x| g.inv(x)).collect())
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.0[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Apply `self`, then `other`.
    pub fn then(&self, other: &Automorphism) -> Automorphism {
        Automorphism(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Automorphism {
        let mut inv = vec![0u32; self.0.len()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        Automorphism(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(x, &y)| x as u32 == y)
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.0.len()];
        self.0.iter().all(|&y| (y as usize) < seen.len() && !std::mem::replace(&mut seen[y as usize], true))
    }

    /// Order as a permutation: lcm of cycle lengths.
    pub fn order(&self) -> usize {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut ord = 1usize;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            ord = num_integer::lcm(ord, len);
        }
        ord
    }

    pub fn pow(&self, e: usize) -> Automorphism {
        let mut acc = Automorphism::identity(self.0.len());
        for _ in 0..e {
            acc = acc.then(self);
        }
        acc
    }

    pub fn as_map(&self, g: &Group) -> GroupMap {
        GroupMap::new_unchecked(g, g, self.0.clone())
    }

    /// Full check on the table: bijective and multiplicative for all pairs.
    pub fn verify_on(&self, g: &Group) -> bool {
        self.0.len() == g.order() && self.is_permutation() && self.as_map(g).verify_exhaustive()
    }
}

/// A right action of `acting` on `acted` by automorphisms:
/// `a^b = maps[b](a)` and `a^(b1 b2) = (a^b1)^b2`.
#[derive(Clone)]
pub struct ActionSpec {
    acting: Group,
    acted: Group,
    maps: Vec<Automorphism>,
}

impl fmt::Debug for ActionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ActionSpec")
            .field("acting", &self.acting.name())
            .field("acted", &self.acted.name())
            .finish()
    }
}

impl ActionSpec {
    pub fn new(acting: &Group, acted: &Group, maps: Vec<Automorphism>) -> Result<ActionSpec> {
        if maps.len() != acting.order() {
            return Err(Error::NotAnAction(format!(
                "{} maps for an acting group of order {}",
                maps.len(),
                acting.order()
            )));
        }
        for (b, m) in maps.iter().enumerate() {
            if m.len() != acted.order() || !m.is_permutation() {
                return Err(Error::NotAnAction(format!("map of {b} is not a permutation")));
            }
            check_hom(acted, acted, m.images())
                .map_err(|_| Error::NotAnAction(format!("map of {b} is not an automorphism")))?;
        }
        if !maps[0].is_identity() {
            return Err(Error::NotAnAction("identity acts nontrivially".into()));
        }
        // checking maps[b*s] = maps[b] then maps[s] for generators s suffices
        for &s in acting.generators() {
            for b in acting.elements() {
                if maps[acting.mul(b, s)] != maps[b].then(&maps[s]) {
                    return Err(Error::NotAnAction(format!("product law fails at ({b}, {s})")));
                }
            }
        }
        Ok(ActionSpec { acting: acting.clone(), acted: acted.clone(), maps })
    }

    pub fn trivial(acting: &Group, acted: &Group) -> ActionSpec {
        ActionSpec {
            acting: acting.clone(),
            acted: acted.clone(),
            maps: vec![Automorphism::identity(acted.order()); acting.order()],
        }
    }

    /// Extends images of some acting elements to the whole acting group and
    /// validates the result.
    pub fn from_generator_images(
        acting: &Group,
        acted: &Group,
        images: &[(Elem, Automorphism)],
    ) -> Result<ActionSpec> {
        let mut maps: Vec<Option<Automorphism>> = vec![None; acting.order()];
        maps[0] = Some(Automorphism::identity(acted.order()));
        let mut queue = vec![0];
        let mut i = 0;
        while i < queue.len() {
            let b = queue[i];
            i += 1;
            for (s, ms) in images {
                let bs = acting.mul(b, *s);
                if maps[bs].is_none() {
                    maps[bs] = Some(maps[b].as_ref().expect("visited").then(ms));
                    queue.push(bs);
                }
            }
        }
        if queue.len() != acting.order() {
            return Err(Error::NotAnAction("given elements do not generate the acting group".into()));
        }
        let maps = maps.into_iter().map(|m| m.expect("all reached")).collect();
        ActionSpec::new(acting, acted, maps)
    }

    pub fn acting(&self) -> &Group {
        &self.acting
    }

    pub fn acted(&self) -> &Group {
        &self.acted
    }

    pub fn maps(&self) -> &[Automorphism] {
        &self.maps
    }

    /// `a^b`.
    #[inline]
    pub fn act(&self, a: Elem, b: Elem) -> Elem {
        self.maps[b].apply(a)
    }

    pub fn is_trivial(&self) -> bool {
        self.maps.iter().all(Automorphism::is_identity)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::cyclic;

    #[test]
    fn automorphism_of_c7() {
        let g = cyclic(7).unwrap();
        let sq = Automorphism::new(&g, g.elements().map(|x| (2 * x) % 7).collect()).unwrap();
        assert_eq!(sq.order(), 3);
        assert!(sq.then(&sq.inverse()).is_identity());
        assert!(sq.verify_on(&g));
    }

    #[test]
    fn non_hom_rejected() {
        let g = cyclic(4).unwrap();
        assert!(Automorphism::new(&g, vec![0, 2, 1, 3]).is_err());
    }

    #[test]
    fn action_product_law() {
        let a = cyclic(7).unwrap();
        let b = cyclic(3).unwrap();
        let sq = Automorphism::new(&a, a.elements().map(|x| (2 * x) % 7).collect()).unwrap();
        let act = ActionSpec::from_generator_images(&b, &a, &[(1, sq.clone())]).unwrap();
        assert_eq!(act.maps()[2], sq.then(&sq));
        let bad = vec![Automorphism::identity(7), sq.clone(), sq];
        assert!(ActionSpec::new(&b, &a, bad).is_err());
    }
}
