//! Abelian-group arithmetic and central automorphisms.

use std::collections::HashSet;
use std::ops::ControlFlow;

use num_bigint::BigUint;

use crate::arith::is_prime_power;
use crate::aut::{enumerate_restricted, AutGroup};
use crate::error::{Error, Result};
use crate::group::{generated_subgroup, quotient, Automorphism, Elem, Group, Subgroup};
use crate::structure::{center, derived_subgroup, find_complement, ComplementSearch};

/// Invariant factors `d_1 | d_2 | ... | d_k`, each at least 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub factors: Vec<usize>,
}

impl AbelianInvariants {
    pub fn order(&self) -> usize {
        self.factors.iter().product()
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }
}

/// Splits off a cyclic subgroup of maximal order (always a direct factor in
/// an abelian group) and recurses on the quotient.
pub fn abelian_invariants(g: &Group) -> Result<AbelianInvariants> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let mut factors = Vec::new();
    let mut cur = g.clone();
    while cur.order() > 1 {
        let orders = cur.element_orders();
        let x = (0..cur.order()).max_by_key(|&x| (orders[x], std::cmp::Reverse(x))).expect("nonempty");
        factors.push(orders[x] as usize);
        let c = generated_subgroup(&cur, &[x]);
        cur = quotient(&cur, &c)?.0;
    }
    factors.reverse();
    Ok(AbelianInvariants { factors })
}

/// `|Hom(A, B)| = prod gcd(d_i(A), d_j(B))`.
pub fn hom_count(a: &Group, b: &Group) -> Result<BigUint> {
    let da = abelian_invariants(a)?;
    let db = abelian_invariants(b)?;
    let mut total = BigUint::from(1u32);
    for &x in &da.factors {
        for &y in &db.factors {
            total *= BigUint::from(num_integer::gcd(x, y));
        }
    }
    Ok(total)
}

/// An internal decomposition `G = D x H` with `D` abelian and nontrivial.
#[derive(Debug, Clone)]
pub struct DirectFactor {
    pub factor: Subgroup,
    pub complement: Subgroup,
}

/// Looks for a nontrivial abelian direct factor.
///
/// Such a factor is central and splits further into cyclic factors of prime
/// power order, so it is enough to try the cyclic prime-power subgroups of
/// `Z(G)` and search for a complement to each. A complement of a central
/// subgroup is automatically normal.
pub fn abelian_direct_factor(g: &Group, budget: u64) -> Result<Option<DirectFactor>> {
    if g.order() == 1 {
        return Ok(None);
    }
    if g.is_abelian() {
        return Ok(Some(DirectFactor { factor: Subgroup::whole(g), complement: Subgroup::trivial(g) }));
    }
    let z = center(g);
    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    let mut cands: Vec<Subgroup> = Vec::new();
    for &x in z.members() {
        if x == 0 || is_prime_power(g.element_order(x) as u64).is_none() {
            continue;
        }
        let c = generated_subgroup(g, &[x]);
        if seen.insert(c.members().to_vec()) {
            cands.push(c);
        }
    }
    cands.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members().cmp(b.members())));
    let mut exhausted = false;
    for c in cands {
        match find_complement(g, &c, budget)? {
            ComplementSearch::Found(h) => return Ok(Some(DirectFactor { factor: c, complement: h })),
            ComplementSearch::ProvenAbsent => {}
            ComplementSearch::BudgetExhausted { .. } => exhausted = true,
        }
    }
    if exhausted {
        Err(Error::SearchBudgetExceeded { budget })
    } else {
        Ok(None)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralAutomorphismCount {
    /// `|Hom(G/G', Z(G))|`, only when `G` has no abelian direct factor.
    pub via_hom: Option<BigUint>,
    pub via_enumeration: BigUint,
    /// `Cent(G) ∩ Inn(G) = Z(Inn(G))`, checked as sets of maps.
    pub inner_intersection_matches: bool,
}

/// Central automorphisms `phi` (with `g^-1 (g phi)` central for all `g`)
/// counted two ways, plus the check that the central inner automorphisms are
/// exactly the center of `Inn(G)`.
pub fn central_automorphism_count(g: &Group, aut: &AutGroup, budget: u64) -> Result<CentralAutomorphismCount> {
    let z = center(g);
    let via_enumeration = if g.is_abelian() {
        aut.order().clone()
    } else {
        let base = aut.base();
        let cands: Vec<Vec<Elem>> = base
            .iter()
            .map(|&b| z.members().iter().map(|&c| g.mul(b, c)).collect())
            .collect();
        let mut count = 0u64;
        enumerate_restricted(g, base, &cands, budget, |_| {
            count += 1;
            ControlFlow::Continue(())
        })
        .map_err(|e| match e {
            Error::BudgetExceeded { budget } => Error::SearchBudgetExceeded { budget },
            e => e,
        })?;
        BigUint::from(count)
    };
    let via_hom = match abelian_direct_factor(g, budget)? {
        Some(_) => None,
        None => {
            let gp = derived_subgroup(g);
            let (ab, _) = quotient(g, &gp)?;
            let (zg, _) = z.as_group("Z");
            Some(hom_count(&ab, &zg)?)
        }
    };
    Ok(CentralAutomorphismCount {
        via_hom,
        via_enumeration,
        inner_intersection_matches: central_inner_matches_center_of_inner(g, &z),
    })
}

fn central_inner_matches_center_of_inner(g: &Group, z: &Subgroup) -> bool {
    let mut seen: HashSet<Automorphism> = HashSet::new();
    let inn: Vec<Automorphism> =
        g.elements().map(|t| Automorphism::inner(g, t)).filter(|a| seen.insert(a.clone())).collect();
    let gens: Vec<Automorphism> = g.generators().iter().map(|&t| Automorphism::inner(g, t)).collect();
    inn.iter().all(|a| {
        let central = g.elements().all(|x| z.contains(g.mul(g.inv(x), a.apply(x))));
        let commutes = gens.iter().all(|b| a.then(b) == b.then(a));
        central == commutes
    })
}
