//! Subgroup structure: center, derived subgroup, Sylow subgroups,
//! complements, normal subgroups and characteristic subgroups.

use std::collections::HashSet;
use std::ops::ControlFlow;

use crate::abelian::abelian_invariants;
use crate::arith::{factorize, is_prime_power};
use crate::aut::{dfs, AutGroup, PartialHom};
use crate::error::{Error, Result};
use crate::group::{generated_subgroup, quotient, subgroup_closure, Elem, Group, Subgroup};

pub const DEFAULT_COMPLEMENT_BUDGET: u64 = 10_000_000;

pub fn center(g: &Group) -> Subgroup {
    let gens = g.generators();
    let members: Vec<Elem> = g
        .elements()
        .filter(|&z| gens.iter().all(|&s| g.mul(z, s) == g.mul(s, z)))
        .collect();
    Subgroup::from_members(g, &members).expect("center is a subgroup")
}

/// Subgroup generated by all commutators `[x, y]`.
pub fn derived_subgroup(g: &Group) -> Subgroup {
    let n = g.order();
    let mut mask = vec![false; n];
    mask[0] = true;
    let mut members = vec![0];
    let mut gens: Vec<Elem> = Vec::new();
    for x in g.elements() {
        for y in g.elements() {
            let c = g.commutator(x, y);
            if !mask[c] {
                gens.push(c);
                members = subgroup_closure(g, &gens, &mut mask, members);
            }
        }
    }
    generated_subgroup(g, &gens)
}

#[derive(Debug, Clone)]
pub struct SylowReport {
    pub p: u64,
    pub subgroup: Subgroup,
    pub conjugate_count: usize,
    pub is_normal: bool,
}

/// A Sylow `p`-subgroup found by normalizer ascent, with its number of conjugates.
pub fn sylow(g: &Group, p: u64) -> Result<SylowReport> {
    let n = g.order();
    let pu = p as usize;
    if p < 2 || n % pu != 0 || factorize(p).len() != 1 || factorize(p)[0].1 != 1 {
        return Err(Error::PrimeDoesNotDivide { p, order: n });
    }
    let mut full = 1usize;
    while n % (full * pu) == 0 {
        full *= pu;
    }
    let orders = g.element_orders();
    let is_p_power = |k: usize| is_prime_power(k as u64).map_or(k == 1, |(q, _)| q == p);
    let start = g
        .elements()
        .filter(|&x| is_p_power(orders[x] as usize))
        .max_by(|&a, &b| orders[a].cmp(&orders[b]).then(b.cmp(&a)))
        .expect("identity is a p-element");
    let mut pgrp = generated_subgroup(g, &[start]);
    while pgrp.order() < full {
        let norm = pgrp.normalizer();
        let y = norm
            .members()
            .iter()
            .copied()
            .find(|&y| !pgrp.contains(y) && pgrp.contains(g.pow(y, p as i64)))
            .expect("a p-subgroup that is not Sylow grows inside its normalizer");
        let mut gens = pgrp.generators().to_vec();
        gens.push(y);
        pgrp = generated_subgroup(g, &gens);
    }

    // orbit of the member set under conjugation
    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    seen.insert(pgrp.members().to_vec());
    let mut queue = vec![pgrp.clone()];
    while let Some(h) = queue.pop() {
        for &t in g.generators() {
            let c = h.conjugate(t);
            if seen.insert(c.members().to_vec()) {
                queue.push(c);
            }
        }
    }
    let conjugate_count = seen.len();
    Ok(SylowReport { p, subgroup: pgrp, conjugate_count, is_normal: conjugate_count == 1 })
}

#[derive(Debug, Clone)]
pub enum ComplementSearch {
    Found(Subgroup),
    /// The search finished without finding a complement.
    ProvenAbsent,
    /// The node budget ran out first; nothing is known.
    BudgetExhausted { nodes: u64 },
}

impl ComplementSearch {
    pub fn found(&self) -> Option<&Subgroup> {
        match self {
            ComplementSearch::Found(h) => Some(h),
            _ => None,
        }
    }
}

/// Searches for `H` with `H ∩ N = 1` and `NH = G`.
///
/// Such an `H` is the image of a homomorphic section of `G -> G/N`. The
/// search picks generators `q_i` of `G/N` and backtracks over the images
/// `s(q_i)` inside the cosets `q_i`, extending the partial section by closure
/// and pruning as soon as it stops being a homomorphism.
pub fn find_complement(g: &Group, n: &Subgroup, budget: u64) -> Result<ComplementSearch> {
    let (q, proj) = quotient(g, n)?;
    if n.is_trivial() {
        return Ok(ComplementSearch::Found(Subgroup::whole(g)));
    }
    if n.is_whole() {
        return Ok(ComplementSearch::Found(Subgroup::trivial(g)));
    }
    let qgens = q.generators().to_vec();
    let mut cosets: Vec<Vec<Elem>> = vec![Vec::new(); q.order()];
    for x in g.elements() {
        cosets[proj.image(x)].push(x);
    }
    let candidates: Vec<Vec<Elem>> = qgens.iter().map(|&c| cosets[c].clone()).collect();
    let mut st = PartialHom::between(&q, g, &qgens, budget);
    let mut found: Option<Vec<Elem>> = None;
    let flow = dfs(&mut st, &candidates, &mut |img| {
        found = Some(qgens.iter().map(|&c| img[c] as usize).collect());
        ControlFlow::Break(())
    });
    match flow {
        Err(Error::BudgetExceeded { .. }) => {
            return Ok(ComplementSearch::BudgetExhausted { nodes: st.counters.nodes_visited })
        }
        Err(e) => return Err(e),
        Ok(_) => {}
    }
    Ok(match found {
        Some(gens) => {
            let h = generated_subgroup(g, &gens);
            debug_assert_eq!(h.order(), q.order());
            ComplementSearch::Found(h)
        }
        None => ComplementSearch::ProvenAbsent,
    })
}

/// Every normal subgroup, as joins of normal closures of conjugacy classes.
/// Sorted by order, then members. Fails if more than `limit` are found.
pub fn normal_subgroups(g: &Group, limit: usize) -> Result<Vec<Subgroup>> {
    let classes = g.classes().members();
    let mut minimal: Vec<Subgroup> = Vec::new();
    let mut keys: HashSet<Vec<Elem>> = HashSet::new();
    for class in &classes {
        let s = generated_subgroup(g, class);
        if keys.insert(s.members().to_vec()) {
            minimal.push(s);
        }
    }
    let mut all: Vec<Subgroup> = minimal.clone();
    let mut i = 0;
    while i < all.len() {
        for c in &minimal {
            if c.is_subset_of(&all[i]) {
                continue;
            }
            let j = all[i].join(c);
            if keys.insert(j.members().to_vec()) {
                all.push(j);
                if all.len() > limit {
                    return Err(Error::BudgetExceeded { budget: limit as u64 });
                }
            }
        }
        i += 1;
    }
    all.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members().cmp(b.members())));
    Ok(all)
}

/// A nontrivial elementary abelian subgroup invariant under `aut`.
///
/// Every characteristic subgroup contains `<x^Aut>` for each of its elements,
/// so the minimal ones are among the subgroups generated by single Aut-orbits.
/// Ties go to the smallest prime, then the smallest order, then the smallest
/// member list.
pub fn characteristic_elementary_abelian(g: &Group, aut: &AutGroup) -> Result<Subgroup> {
    if g.order() == 1 {
        return Err(Error::TrivialGroup);
    }
    if g.order() % 2 == 0 {
        return Err(Error::NotOddOrder);
    }
    let mut best: Option<(u64, usize, Subgroup)> = None;
    for orbit in aut.element_orbits() {
        if orbit[0] == 0 {
            continue;
        }
        let s = generated_subgroup(g, &orbit);
        let Some((p, _)) = is_prime_power(s.order() as u64) else { continue };
        let elementary = s.members().iter().all(|&x| x == 0 || g.element_order(x) as u64 == p);
        if !elementary || !s.is_abelian() {
            continue;
        }
        let better = match &best {
            None => true,
            Some((bp, bo, bs)) => (p, s.order(), s.members()) < (*bp, *bo, bs.members()),
        };
        if better {
            best = Some((p, s.order(), s));
        }
    }
    let (_, _, s) = best.ok_or_else(|| {
        Error::CertificateInvalid("no characteristic elementary abelian subgroup found".into())
    })?;
    if !aut.is_invariant(&s) {
        return Err(Error::CertificateInvalid("orbit-generated subgroup not invariant".into()));
    }
    Ok(s)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralQuotientProfile {
    pub quotient_order: usize,
    /// `G/Z` has prime-power order greater than one.
    pub is_p_group: bool,
    pub abelian: bool,
    /// Exponents `a_1 >= a_2 >= ...` with `G/Z = prod C_{p^a_i}`, when `G/Z`
    /// is a nontrivial abelian p-group.
    pub invariant_exponents: Option<Vec<u32>>,
    /// `r >= 2` and `a_1 = a_2`; vacuously true when exponents are absent.
    pub rank_condition_holds: bool,
}

pub fn central_quotient_profile(g: &Group) -> CentralQuotientProfile {
    let z = center(g);
    let (q, _) = quotient(g, &z).expect("center is normal");
    let prime = is_prime_power(q.order() as u64).map(|(p, _)| p);
    let abelian = q.is_abelian();
    let invariant_exponents = match (prime, abelian) {
        (Some(p), true) => {
            let inv = abelian_invariants(&q).expect("abelian");
            let mut exps: Vec<u32> = inv
                .factors
                .iter()
                .map(|&d| is_prime_power(d as u64).map(|(pp, e)| {
                    debug_assert_eq!(pp, p);
                    e
                }).expect("p-power factor"))
                .collect();
            exps.sort_unstable_by(|a, b| b.cmp(a));
            Some(exps)
        }
        _ => None,
    };
    let rank_condition_holds = invariant_exponents
        .as_ref()
        .is_none_or(|e| e.len() >= 2 && e[0] == e[1]);
    CentralQuotientProfile {
        quotient_order: q.order(),
        is_p_group: prime.is_some(),
        abelian,
        invariant_exponents,
        rank_condition_holds,
    }
}

/// For a p-group `Q` (playing the role of `G/Z`) that is not elementary
/// abelian: its center if `Q` is nonabelian, otherwise the subgroup of
/// elements of order dividing `p`. The result is checked to be nontrivial,
/// central, invariant under `aut` and of index at least `p^2`.
pub fn central_characteristic_subgroup(q: &Group, aut: &AutGroup) -> Result<Subgroup> {
    let (p, _) = is_prime_power(q.order() as u64)
        .ok_or_else(|| Error::InvalidParameter(format!("order {} is not a prime power", q.order())))?;
    let k = if !q.is_abelian() {
        center(q)
    } else {
        if q.exponent() as u64 == p {
            return Err(Error::IsElementaryAbelian);
        }
        let low: Vec<Elem> = q.elements().filter(|&x| q.pow(x, p as i64) == 0).collect();
        Subgroup::from_members(q, &low)?
    };
    let z = center(q);
    if k.is_trivial() || !k.is_subset_of(&z) || !aut.is_invariant(&k) || (k.index() as u64) < p * p {
        return Err(Error::CertificateInvalid(format!("subgroup of order {} fails the checks", k.order())));
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::{automorphism_group, DEFAULT_BUDGET};
    use crate::group::{abelian, alternating, cyclic, extraspecial, symmetric, ActionSpec, Automorphism};
    use crate::group::semidirect_product;

    pub(crate) fn c7_c3() -> Group {
        let a = cyclic(7).unwrap();
        let b = cyclic(3).unwrap();
        let sq = Automorphism::new(&a, a.elements().map(|x| (2 * x) % 7).collect()).unwrap();
        let act = ActionSpec::from_generator_images(&b, &a, &[(1, sq)]).unwrap();
        semidirect_product(&a, &b, &act).unwrap()
    }

    #[test]
    fn centers() {
        assert!(center(&abelian(&[3, 5]).unwrap()).is_whole());
        assert!(center(&symmetric(3).unwrap()).is_trivial());
        assert_eq!(center(&extraspecial(3, true).unwrap()).order(), 3);
        assert!(center(&c7_c3()).is_trivial());
    }

    #[test]
    fn derived() {
        assert!(derived_subgroup(&cyclic(8).unwrap()).is_trivial());
        assert_eq!(derived_subgroup(&symmetric(3).unwrap()).order(), 3);
        assert_eq!(derived_subgroup(&c7_c3()).order(), 7);
        let he = extraspecial(3, true).unwrap();
        assert_eq!(derived_subgroup(&he), center(&he));
    }

    #[test]
    fn sylow_reports() {
        let r = sylow(&cyclic(12).unwrap(), 2).unwrap();
        assert_eq!((r.subgroup.order(), r.conjugate_count), (4, 1));
        let r = sylow(&alternating(4).unwrap(), 3).unwrap();
        assert_eq!((r.subgroup.order(), r.conjugate_count, r.is_normal), (3, 4, false));
        let r = sylow(&c7_c3(), 7).unwrap();
        assert!(r.is_normal);
        assert!(matches!(sylow(&cyclic(9).unwrap(), 2), Err(Error::PrimeDoesNotDivide { .. })));
    }

    #[test]
    fn complements() {
        let c6 = cyclic(6).unwrap();
        let n = generated_subgroup(&c6, &[3]);
        let h = find_complement(&c6, &n, 1000).unwrap();
        assert_eq!(h.found().unwrap().order(), 3);
        let c4 = cyclic(4).unwrap();
        let n = generated_subgroup(&c4, &[2]);
        assert!(matches!(find_complement(&c4, &n, 1000).unwrap(), ComplementSearch::ProvenAbsent));
    }

    #[test]
    fn normal_subgroup_counts() {
        assert_eq!(normal_subgroups(&symmetric(4).unwrap(), 100).unwrap().len(), 4);
        assert_eq!(normal_subgroups(&cyclic(12).unwrap(), 100).unwrap().len(), 6);
        assert_eq!(normal_subgroups(&abelian(&[3, 3]).unwrap(), 100).unwrap().len(), 6);
    }

    #[test]
    fn characteristic_ea() {
        let c9 = cyclic(9).unwrap();
        let a = automorphism_group(&c9, DEFAULT_BUDGET).unwrap();
        assert_eq!(characteristic_elementary_abelian(&c9, &a).unwrap().order(), 3);
        let g = c7_c3();
        let a = automorphism_group(&g, DEFAULT_BUDGET).unwrap();
        assert_eq!(characteristic_elementary_abelian(&g, &a).unwrap().order(), 7);
        let g = abelian(&[3, 5]).unwrap();
        let a = automorphism_group(&g, DEFAULT_BUDGET).unwrap();
        assert_eq!(characteristic_elementary_abelian(&g, &a).unwrap().order(), 3);
    }

    #[test]
    fn central_quotient_profiles() {
        let p = central_quotient_profile(&cyclic(5).unwrap());
        assert_eq!(p.quotient_order, 1);
        assert!(p.rank_condition_holds);
        let p = central_quotient_profile(&extraspecial(3, true).unwrap());
        assert_eq!(p.invariant_exponents, Some(vec![1, 1]));
        assert!(p.rank_condition_holds);
    }

    #[test]
    fn central_characteristic_cases() {
        let g = abelian(&[9, 9]).unwrap();
        let a = automorphism_group(&g, DEFAULT_BUDGET).unwrap();
        let k = central_characteristic_subgroup(&g, &a).unwrap();
        assert_eq!((k.order(), k.index()), (9, 9));
        let he = extraspecial(3, true).unwrap();
        let a = automorphism_group(&he, DEFAULT_BUDGET).unwrap();
        assert_eq!(central_characteristic_subgroup(&he, &a).unwrap().index(), 9);
        let e = abelian(&[3, 3]).unwrap();
        let a = automorphism_group(&e, DEFAULT_BUDGET).unwrap();
        assert!(matches!(central_characteristic_subgroup(&e, &a), Err(Error::IsElementaryAbelian)));
    }
}
