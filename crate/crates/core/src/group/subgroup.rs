use std::fmt;

use super::{Elem, Group};
use crate::error::{Error, Result};

/// A subgroup of a parent [`Group`], stored as a sorted member list plus a
/// membership mask.
#[derive(Clone)]
pub struct Subgroup {
    parent: Group,
    members: Vec<Elem>,
    generators: Vec<Elem>,
    mask: Vec<bool>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("parent", &self.parent.name())
            .field("order", &self.members.len())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && self.parent == other.parent
    }
}

impl Eq for Subgroup {}

/// Extends `members` (closed under the earlier generators, flagged in `mask`)
/// to the closure under `gens`.
pub(crate) fn close(g: &Group, gens: &[Elem], mask: &mut [bool], mut members: Vec<Elem>) -> Vec<Elem> {
    let mut i = 0;
    while i < members.len() {
        let m = members[i];
        for &s in gens {
            let x = g.mul(m, s);
            if !mask[x] {
                mask[x] = true;
                members.push(x);
            }
        }
        i += 1;
    }
    members
}

/// Smallest subgroup containing `gens`.
pub fn generated_subgroup(g: &Group, gens: &[Elem]) -> Subgroup {
    let mut generators: Vec<Elem> = Vec::new();
    for &x in gens {
        assert!(x < g.order(), "element {x} out of range for order {}", g.order());
        if !generators.contains(&x) {
            generators.push(x);
        }
    }
    let mut mask = vec![false; g.order()];
    mask[0] = true;
    let mut members = close(g, &generators, &mut mask, vec![0]);
    members.sort_unstable();
    Subgroup::assemble(g.clone(), members, generators, mask)
}

impl Subgroup {
    fn assemble(parent: Group, members: Vec<Elem>, generators: Vec<Elem>, mask: Vec<bool>) -> Subgroup {
        assert_eq!(
            parent.order() % members.len(),
            0,
            "subgroup order {} does not divide {}",
            members.len(),
            parent.order()
        );
        Subgroup { parent, members, generators, mask }
    }

    pub fn trivial(g: &Group) -> Subgroup {
        generated_subgroup(g, &[])
    }

    pub fn whole(g: &Group) -> Subgroup {
        let mask = vec![true; g.order()];
        Subgroup::assemble(g.clone(), g.elements().collect(), g.generators().to_vec(), mask)
    }

    /// Builds a subgroup from an explicit member set, checking closure.
    pub fn from_members(g: &Group, members: &[Elem]) -> Result<Subgroup> {
        let mut mask = vec![false; g.order()];
        for &x in members {
            if x >= g.order() {
                return Err(Error::NotASubgroup(format!("element {x} out of range")));
            }
            mask[x] = true;
        }
        if !mask[0] {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        let mut sorted: Vec<Elem> = (0..g.order()).filter(|&x| mask[x]).collect();
        for &a in &sorted {
            if !mask[g.inv(a)] {
                return Err(Error::NotASubgroup(format!("inverse of {a} missing")));
            }
        }
        let candidate = Subgroup { parent: g.clone(), members: std::mem::take(&mut sorted), generators: Vec::new(), mask };
        let gens = candidate.small_generating_set();
        for &a in &candidate.members {
            for &s in &gens {
                if !candidate.mask[g.mul(a, s)] {
                    return Err(Error::NotASubgroup(format!("{a}*{s} escapes the set")));
                }
            }
        }
        if g.order() % candidate.members.len() != 0 {
            return Err(Error::NotASubgroup("order does not divide the group order".into()));
        }
        Ok(Subgroup { generators: gens, ..candidate })
    }

    /// Generators chosen greedily from the members, largest order first.
    fn small_generating_set(&self) -> Vec<Elem> {
        let g = &self.parent;
        let orders = g.element_orders();
        let mut by_order: Vec<Elem> = self.members.iter().copied().filter(|&x| x != 0).collect();
        by_order.sort_by(|&a, &b| orders[b].cmp(&orders[a]).then(a.cmp(&b)));
        let mut gens = Vec::new();
        let mut mask = vec![false; g.order()];
        mask[0] = true;
        let mut got = vec![0];
        for x in by_order {
            if mask[x] {
                continue;
            }
            gens.push(x);
            got = close(g, &gens, &mut mask, got);
            if got.len() >= self.members.len() {
                break;
            }
        }
        gens
    }

    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.mask[x]
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.parent.order()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.members.len()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn is_normal(&self) -> bool {
        let g = &self.parent;
        g.generators()
            .iter()
            .all(|&t| self.generators.iter().all(|&h| self.contains(g.conj(h, t))))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.parent;
        let gens = &self.generators;
        gens.iter().all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    /// `t^-1 H t`.
    pub fn conjugate(&self, t: Elem) -> Subgroup {
        let g = &self.parent;
        let gens: Vec<Elem> = self.generators.iter().map(|&h| g.conj(h, t)).collect();
        generated_subgroup(g, &gens)
    }

    pub fn normalizer(&self) -> Subgroup {
        let g = &self.parent;
        let members: Vec<Elem> = g
            .elements()
            .filter(|&t| self.generators.iter().all(|&h| self.contains(g.conj(h, t))))
            .collect();
        Subgroup::from_members(g, &members).expect("normalizer is a subgroup")
    }

    pub fn centralizer(&self) -> Subgroup {
        let g = &self.parent;
        let members: Vec<Elem> = g
            .elements()
            .filter(|&t| self.generators.iter().all(|&h| g.mul(h, t) == g.mul(t, h)))
            .collect();
        Subgroup::from_members(g, &members).expect("centralizer is a subgroup")
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let members: Vec<Elem> = self.members.iter().copied().filter(|&x| other.contains(x)).collect();
        Subgroup::from_members(&self.parent, &members).expect("intersection is a subgroup")
    }

    /// Subgroup generated by both.
    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let mut gens = self.generators.clone();
        gens.extend_from_slice(&other.generators);
        generated_subgroup(&self.parent, &gens)
    }

    /// The subgroup as a group in its own right, relabelled `0..order` in
    /// member order, together with the embedding into the parent.
    pub fn as_group(&self, name: impl Into<String>) -> (Group, Vec<Elem>) {
        let g = &self.parent;
        let mut local = vec![usize::MAX; g.order()];
        for (i, &x) in self.members.iter().enumerate() {
            local[x] = i;
        }
        let members = &self.members;
        let sub = Group::from_fn(members.len(), name, |a, b| local[g.mul(members[a], members[b])])
            .expect("subgroup table is a group");
        (sub, members.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, symmetric};

    #[test]
    fn empty_generators_give_trivial() {
        let g = cyclic(6).unwrap();
        assert!(generated_subgroup(&g, &[]).is_trivial());
    }

    #[test]
    fn order_two_in_c6() {
        let g = cyclic(6).unwrap();
        assert_eq!(generated_subgroup(&g, &[3]).order(), 2);
    }

    #[test]
    fn two_transpositions_generate_s3() {
        let s3 = symmetric(3).unwrap();
        let transpositions: Vec<Elem> = s3.elements().filter(|&x| s3.element_order(x) == 2).collect();
        assert_eq!(transpositions.len(), 3);
        let h = generated_subgroup(&s3, &transpositions[..2]);
        assert!(h.is_whole());
    }

    #[test]
    fn from_members_rejects_non_closed_set() {
        let g = cyclic(6).unwrap();
        assert!(Subgroup::from_members(&g, &[0, 1]).is_err());
        assert_eq!(Subgroup::from_members(&g, &[0, 2, 4]).unwrap().order(), 3);
    }

    #[test]
    fn normalizer_of_transposition_subgroup() {
        let s3 = symmetric(3).unwrap();
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        let h = generated_subgroup(&s3, &[t]);
        assert!(!h.is_normal());
        assert_eq!(h.normalizer().order(), 2);
    }
}
