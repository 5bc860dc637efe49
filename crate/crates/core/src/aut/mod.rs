//! Automorphism groups of table groups.
//!
//! The search fixes a greedy generating sequence `g_1, ..., g_m` of `G` and
//! looks for automorphisms as assignments of images to the `g_i`. The result
//! is kept as a stabilizer chain: level `i` stores the orbit of `g_i` under
//! the automorphisms fixing `g_1, ..., g_{i-1}`, so `|Aut(G)|` is the product
//! of the orbit lengths and elements can be produced or sifted without
//! listing the whole group.

mod fingerprint;
mod search;

use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::group::{check_cap, Automorphism, Elem, Group, Subgroup};
use crate::structure::center;

pub use fingerprint::Fingerprint;
pub use search::{enumerate_restricted, greedy_extend, greedy_generating_set, SearchCounters};
pub(crate) use search::{dfs, PartialHom};

pub const DEFAULT_BUDGET: u64 = 20_000_000;

/// Default ceiling on how many automorphisms [`AutGroup::elements`] will list.
pub const DEFAULT_ELEMENT_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes_visited: u64,
    pub pruned_by_order: u64,
    pub pruned_by_class: u64,
    pub pruned_by_hom: u64,
    pub wall_time: Duration,
}

#[derive(Debug, Clone)]
struct Level {
    /// Orbit points in discovery order; `orbit[0]` is the base point.
    orbit: Vec<Elem>,
    /// Position of each element in `orbit`, or `u32::MAX`.
    position: Vec<u32>,
    /// Schreier tree: `(parent position, strong generator index)` per point.
    tree: Vec<(u32, u32)>,
}

impl Level {
    fn new(n: usize, point: Elem) -> Level {
        let mut position = vec![u32::MAX; n];
        position[point] = 0;
        Level { orbit: vec![point], position, tree: vec![(u32::MAX, u32::MAX)] }
    }

    fn contains(&self, x: Elem) -> bool {
        self.position[x] != u32::MAX
    }

    fn extend(&mut self, gens: &[Automorphism], usable: &[usize]) {
        let mut i = 0;
        while i < self.orbit.len() {
            let x = self.orbit[i];
            for &k in usable {
                let y = gens[k].apply(x);
                if self.position[y] == u32::MAX {
                    self.position[y] = self.orbit.len() as u32;
                    self.orbit.push(y);
                    self.tree.push((i as u32, k as u32));
                }
            }
            i += 1;
        }
    }
}

/// `Aut(G)` as a stabilizer chain over a generating sequence of `G`.
#[derive(Debug, Clone)]
pub struct AutGroup {
    parent: Group,
    base: Vec<Elem>,
    levels: Vec<Level>,
    generators: Vec<Automorphism>,
    /// Deepest level each strong generator was found at.
    generator_level: Vec<usize>,
    order: BigUint,
    stats: SearchStats,
}

/// Computes the full automorphism group, aborting if more than `budget`
/// search nodes are needed.
pub fn automorphism_group(g: &Group, budget: u64) -> Result<AutGroup> {
    check_cap(g.order())?;
    let start = Instant::now();
    let n = g.order();
    let base = greedy_generating_set(g);
    let m = base.len();
    let fp = Fingerprint::new(g);
    let orders = g.element_orders();

    let mut stats = SearchStats::default();
    let mut candidates: Vec<Vec<Elem>> = Vec::with_capacity(m);
    for &b in &base {
        let same_order = g.elements().filter(|&x| orders[x] == orders[b]).count() as u64;
        let matching = fp.matching(b);
        stats.pruned_by_order += n as u64 - same_order;
        stats.pruned_by_class += same_order - matching.len() as u64;
        candidates.push(matching);
    }

    let mut levels: Vec<Level> = base.iter().map(|&b| Level::new(n, b)).collect();
    let mut generators: Vec<Automorphism> = Vec::new();
    let mut generator_level: Vec<usize> = Vec::new();
    let mut counters = SearchCounters::default();

    for i in (0..m).rev() {
        // candidate lists for a witness: identity on base[..i], then free
        let mut cand: Vec<Vec<Elem>> = base[..i].iter().map(|&b| vec![b]).collect();
        cand.push(Vec::new());
        cand.extend(candidates[i + 1..].iter().cloned());
        // Images of base[i] known to admit no witness. Closed under the
        // generators found so far, which all fix base[..i].
        let mut failed = vec![false; n];
        for &x in &candidates[i] {
            if levels[i].contains(x) || failed[x] {
                continue;
            }
            cand[i] = vec![x];
            let remaining = budget.saturating_sub(counters.nodes_visited);
            let mut st = PartialHom::new(g, &base, remaining);
            let mut found: Option<Vec<u32>> = None;
            let flow = dfs(&mut st, &cand, &mut |img| {
                found = Some(img.to_vec());
                ControlFlow::Break(())
            });
            accumulate(&mut counters, &st.counters);
            if let Err(Error::BudgetExceeded { .. }) = flow {
                return Err(Error::BudgetExceeded { budget });
            }
            let _ = flow?;
            if let Some(img) = found {
                generators.push(Automorphism::from_raw(img));
                generator_level.push(i);
                let usable: Vec<usize> = (0..generators.len()).collect();
                levels[i].extend(&generators, &usable);
            } else {
                failed[x] = true;
                let mut stack = vec![x];
                while let Some(y) = stack.pop() {
                    for phi in &generators {
                        let z = phi.apply(y);
                        if !failed[z] {
                            failed[z] = true;
                            stack.push(z);
                        }
                    }
                }
            }
        }
    }

    let order = levels.iter().fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()));
    stats.nodes_visited = counters.nodes_visited;
    stats.pruned_by_hom = counters.pruned_by_hom;
    stats.wall_time = start.elapsed();
    Ok(AutGroup { parent: g.clone(), base, levels, generators, generator_level, order, stats })
}

fn accumulate(total: &mut SearchCounters, part: &SearchCounters) {
    total.nodes_visited += part.nodes_visited;
    total.pruned_by_order += part.pruned_by_order;
    total.pruned_by_class += part.pruned_by_class;
    total.pruned_by_hom += part.pruned_by_hom;
}

impl AutGroup {
    pub fn parent(&self) -> &Group {
        &self.parent
    }

    /// The generating sequence of `G` the chain is built over.
    pub fn base(&self) -> &[Elem] {
        &self.base
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn order_is_odd(&self) -> bool {
        self.order.is_odd()
    }

    /// Strong generators; together they generate the whole group.
    pub fn generators(&self) -> &[Automorphism] {
        &self.generators
    }

    pub fn stats(&self) -> &SearchStats {
        &self.stats
    }

    /// Orbit lengths of the chain, from the first base point down.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Transversal element at `level` sending the base point to `orbit[pos]`.
    fn transversal(&self, level: usize, mut pos: usize) -> Automorphism {
        let lv = &self.levels[level];
        let mut word = Vec::new();
        while pos != 0 {
            let (parent, k) = lv.tree[pos];
            word.push(k as usize);
            pos = parent as usize;
        }
        let mut t = Automorphism::identity(self.parent.order());
        for &k in word.iter().rev() {
            t = t.then(&self.generators[k]);
        }
        t
    }

    /// Membership test by sifting through the chain.
    pub fn contains(&self, phi: &Automorphism) -> bool {
        if phi.len() != self.parent.order() {
            return false;
        }
        let mut cur = phi.clone();
        for (i, lv) in self.levels.iter().enumerate() {
            let y = cur.apply(self.base[i]);
            let pos = lv.position[y];
            if pos == u32::MAX {
                return false;
            }
            cur = cur.then(&self.transversal(i, pos as usize).inverse());
        }
        cur.is_identity()
    }

    /// All automorphisms, sorted by image sequence. Fails with
    /// `BudgetExceeded` if there are more than `limit`.
    pub fn elements(&self, limit: usize) -> Result<Vec<Automorphism>> {
        if self.order > BigUint::from(limit) {
            return Err(Error::BudgetExceeded { budget: limit as u64 });
        }
        let n = self.parent.order();
        let transversals: Vec<Vec<Automorphism>> = (0..self.levels.len())
            .map(|i| (0..self.levels[i].orbit.len()).map(|p| self.transversal(i, p)).collect())
            .collect();
        let mut out = vec![Automorphism::identity(n)];
        // phi = t_{m-1} then ... then t_0
        for level in transversals.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.len());
            for a in &out {
                for t in level {
                    next.push(a.then(t));
                }
            }
            out = next;
        }
        out.sort();
        Ok(out)
    }

    /// Aut-orbits on the elements of `G`, each sorted, ordered by smallest member.
    pub fn element_orbits(&self) -> Vec<Vec<Elem>> {
        let n = self.parent.order();
        let mut label = vec![usize::MAX; n];
        let mut orbits = Vec::new();
        for x in 0..n {
            if label[x] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            label[x] = id;
            let mut orbit = vec![x];
            let mut i = 0;
            while i < orbit.len() {
                for a in &self.generators {
                    let y = a.apply(orbit[i]);
                    if label[y] == usize::MAX {
                        label[y] = id;
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    /// Orbit label of every element, consistent with [`AutGroup::element_orbits`].
    pub fn orbit_labels(&self) -> Vec<usize> {
        let mut label = vec![0; self.parent.order()];
        for (id, orbit) in self.element_orbits().iter().enumerate() {
            for &x in orbit {
                label[x] = id;
            }
        }
        label
    }

    /// An automorphism sending `x` to `y`, if one exists.
    pub fn find_mapping(&self, x: Elem, y: Elem) -> Option<Automorphism> {
        let n = self.parent.order();
        let mut via: Vec<Option<(Elem, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[x] = true;
        let mut queue = vec![x];
        let mut i = 0;
        while i < queue.len() {
            let u = queue[i];
            if u == y {
                let mut word = Vec::new();
                let mut cur = y;
                while cur != x {
                    let (prev, k) = via[cur].expect("tree edge");
                    word.push(k);
                    cur = prev;
                }
                let mut a = Automorphism::identity(n);
                for &k in word.iter().rev() {
                    a = a.then(&self.generators[k]);
                }
                return Some(a);
            }
            for (k, a) in self.generators.iter().enumerate() {
                let v = a.apply(u);
                if !seen[v] {
                    seen[v] = true;
                    via[v] = Some((u, k));
                    queue.push(v);
                }
            }
            i += 1;
        }
        None
    }

    /// True when `s` is invariant under every automorphism.
    pub fn is_invariant(&self, s: &Subgroup) -> bool {
        self.generators.iter().all(|a| s.generators().iter().all(|&x| s.contains(a.apply(x))))
    }

    /// Strong generators that were found while fixing the first `level` base points.
    pub fn stabilizer_generators(&self, level: usize) -> Vec<&Automorphism> {
        self.generators
            .iter()
            .zip(&self.generator_level)
            .filter(|(_, &l)| l >= level)
            .map(|(a, _)| a)
            .collect()
    }
}

/// `Inn(G)` as distinct conjugation maps, one per coset of the center.
#[derive(Debug, Clone)]
pub struct InnerAutomorphisms {
    pub maps: Vec<Automorphism>,
    /// `representatives[k]` is an element `g` with `maps[k] = I_g`.
    pub representatives: Vec<Elem>,
    /// The kernel of `g -> I_g`, i.e. the center.
    pub kernel: Subgroup,
}

pub fn inner_automorphisms(g: &Group) -> InnerAutomorphisms {
    let z = center(g);
    let mut covered = vec![false; g.order()];
    let mut maps = Vec::new();
    let mut representatives = Vec::new();
    for t in g.elements() {
        if covered[t] {
            continue;
        }
        for &c in z.members() {
            covered[g.mul(t, c)] = true;
        }
        maps.push(Automorphism::inner(g, t));
        representatives.push(t);
    }
    InnerAutomorphisms { maps, representatives, kernel: z }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NiReport {
    pub aut_order_odd: bool,
    pub no_inversion: bool,
    /// The trivial group satisfies both flags vacuously and is not counted as N.I.
    pub trivial: bool,
}

impl NiReport {
    pub fn is_ni(&self) -> bool {
        !self.trivial && self.no_inversion
    }
}

/// Reads both N.I. flags from a complete automorphism group. For odd-order
/// groups the flags must agree; disagreement is reported as an error.
pub fn is_ni(g: &Group, aut: &AutGroup) -> Result<NiReport> {
    let labels = aut.orbit_labels();
    let no_inversion = g.elements().skip(1).all(|x| labels[x] != labels[g.inv(x)]);
    let report = NiReport { aut_order_odd: aut.order_is_odd(), no_inversion, trivial: g.order() == 1 };
    if g.order() % 2 == 1 && report.aut_order_odd != report.no_inversion {
        return Err(Error::CertificateInvalid(format!(
            "odd-order group with |Aut| parity {} but no_inversion {}",
            if report.aut_order_odd { "odd" } else { "even" },
            no_inversion
        )));
    }
    Ok(report)
}

pub fn is_characteristic(s: &Subgroup, aut: &AutGroup) -> bool {
    aut.is_invariant(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{abelian, cyclic, extraspecial, generated_subgroup, symmetric};
    use crate::structure::derived_subgroup;

    fn aut_order(g: &Group) -> u64 {
        let a = automorphism_group(g, DEFAULT_BUDGET).unwrap();
        a.order().try_into().unwrap()
    }

    #[test]
    fn aut_c9_is_6() {
        assert_eq!(aut_order(&cyclic(9).unwrap()), 6);
    }

    #[test]
    fn aut_c3xc3_is_gl23() {
        assert_eq!(aut_order(&abelian(&[3, 3]).unwrap()), 48);
    }

    #[test]
    fn aut_s3_all_inner() {
        let g = symmetric(3).unwrap();
        let a = automorphism_group(&g, DEFAULT_BUDGET).unwrap();
        assert_eq!(aut_order(&g), 6);
        for m in inner_automorphisms(&g).maps {
            assert!(a.contains(&m));
        }
    }

    #[test]
    fn aut_trivial_group() {
        let g = Group::trivial();
        let a = automorphism_group(&g, 10).unwrap();
        assert_eq!(a.order(), &BigUint::from(1u32));
        let r = is_ni(&g, &a).unwrap();
        assert!(r.aut_order_odd && r.no_inversion && r.trivial && !r.is_ni());
    }

    #[test]
    fn elements_sorted_and_closed() {
        let g = abelian(&[2, 4]).unwrap();
        let a = automorphism_group(&g, DEFAULT_BUDGET).unwrap();
        let els = a.elements(100).unwrap();
        assert_eq!(els.len(), 8);
        assert!(els.windows(2).all(|w| w[0] < w[1]));
        for x in &els {
            assert!(x.verify_on(&g));
            for y in &els {
                assert!(els.binary_search(&x.then(y)).is_ok());
            }
        }
    }

    #[test]
    fn inner_counts() {
        assert_eq!(inner_automorphisms(&cyclic(5).unwrap()).maps.len(), 1);
        assert_eq!(inner_automorphisms(&symmetric(3).unwrap()).maps.len(), 6);
        assert_eq!(inner_automorphisms(&extraspecial(3, true).unwrap()).maps.len(), 9);
    }

    #[test]
    fn ni_flags_for_c3_and_s3() {
        for g in [cyclic(3).unwrap(), symmetric(3).unwrap()] {
            let a = automorphism_group(&g, DEFAULT_BUDGET).unwrap();
            let r = is_ni(&g, &a).unwrap();
            assert!(!r.aut_order_odd && !r.no_inversion);
        }
    }

    #[test]
    fn characteristic_checks() {
        let g = abelian(&[3, 3]).unwrap();
        let a = automorphism_group(&g, DEFAULT_BUDGET).unwrap();
        let factor = generated_subgroup(&g, &[1]);
        assert!(!is_characteristic(&factor, &a));
        let s4 = symmetric(4).unwrap();
        let a4 = automorphism_group(&s4, DEFAULT_BUDGET).unwrap();
        assert!(is_characteristic(&derived_subgroup(&s4), &a4));
        assert!(is_characteristic(&center(&s4), &a4));
    }

    #[test]
    fn find_mapping_and_sift() {
        let g = cyclic(7).unwrap();
        let a = automorphism_group(&g, DEFAULT_BUDGET).unwrap();
        let phi = a.find_mapping(1, 3).unwrap();
        assert_eq!(phi.apply(1), 3);
        assert!(a.contains(&phi));
        let not_hom = Automorphism::from_raw(vec![0, 2, 1, 3, 4, 5, 6]);
        assert!(!a.contains(&not_hom));
    }
}
