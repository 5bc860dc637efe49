//! Backtracking over generator images with incremental homomorphism checks.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::group::{subgroup_closure, Elem, Group};

const UNSET: u32 = u32::MAX;

/// Greedy generating set: repeatedly add the element whose closure with the
/// current subgroup is largest, ties going to the smallest index.
pub fn greedy_generating_set(g: &Group) -> Vec<Elem> {
    greedy_extend(g, &[])
}

/// Extends `start` to a generating set of `g` with the same greedy rule.
pub fn greedy_extend(g: &Group, start: &[Elem]) -> Vec<Elem> {
    let n = g.order();
    let mut gens: Vec<Elem> = Vec::new();
    let mut mask = vec![false; n];
    mask[0] = true;
    let mut members = vec![0];
    for &s in start {
        if !mask[s] {
            gens.push(s);
            members = subgroup_closure(g, &gens, &mut mask, members);
        }
    }
    let orders = g.element_orders();
    while members.len() < n {
        let mut tested = vec![false; n];
        let mut best: Option<(usize, Elem)> = None;
        let mut trial = gens.clone();
        trial.push(0);
        for x in 0..n {
            if mask[x] || tested[x] {
                continue;
            }
            // x^k with k a unit mod ord(x) generates the same cyclic group
            let ord = orders[x] as usize;
            let mut y = x;
            for k in 1..=ord {
                if num_integer::gcd(k, ord) == 1 {
                    tested[y] = true;
                }
                y = g.mul(y, x);
            }
            *trial.last_mut().expect("nonempty") = x;
            let mut m2 = mask.clone();
            let size = subgroup_closure(g, &trial, &mut m2, members.clone()).len();
            if best.is_none_or(|(s, _)| size > s) {
                best = Some((size, x));
            }
        }
        let (_, x) = best.expect("some element outside the subgroup");
        gens.push(x);
        members = subgroup_closure(g, &gens, &mut mask, members);
    }
    gens
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchCounters {
    pub nodes_visited: u64,
    pub pruned_by_order: u64,
    pub pruned_by_class: u64,
    pub pruned_by_hom: u64,
}

/// A partial injective homomorphism `source -> target` defined on
/// `<base[0..level]>`, extended one generator at a time.
pub(crate) struct PartialHom<'a> {
    g: &'a Group,
    target: &'a Group,
    base: &'a [Elem],
    img: Vec<u32>,
    used: Vec<bool>,
    assigned: Vec<Elem>,
    marks: Vec<usize>,
    gen_img: Vec<Elem>,
    pub counters: SearchCounters,
    budget: u64,
}

impl<'a> PartialHom<'a> {
    pub fn new(g: &'a Group, base: &'a [Elem], budget: u64) -> Self {
        Self::between(g, g, base, budget)
    }

    pub fn between(g: &'a Group, target: &'a Group, base: &'a [Elem], budget: u64) -> Self {
        let mut img = vec![UNSET; g.order()];
        let mut used = vec![false; target.order()];
        img[0] = 0;
        used[0] = true;
        PartialHom {
            g,
            target,
            base,
            img,
            used,
            assigned: vec![0],
            marks: Vec::new(),
            gen_img: Vec::new(),
            counters: SearchCounters::default(),
            budget,
        }
    }

    pub fn level(&self) -> usize {
        self.marks.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.img
    }

    pub fn is_complete(&self) -> bool {
        self.assigned.len() == self.g.order()
    }

    fn tick(&mut self) -> Result<()> {
        self.counters.nodes_visited += 1;
        if self.counters.nodes_visited > self.budget {
            Err(Error::BudgetExceeded { budget: self.budget })
        } else {
            Ok(())
        }
    }

    #[inline]
    fn assign(&mut self, e: Elem, v: Elem) -> bool {
        let cur = self.img[e];
        if cur == UNSET {
            if self.used[v] {
                return false;
            }
            self.img[e] = v as u32;
            self.used[v] = true;
            self.assigned.push(e);
            true
        } else {
            cur as usize == v
        }
    }

    /// Sends the next base element to `x` and extends by closure. Returns
    /// `Ok(false)` (with the state unchanged) if that is inconsistent with a
    /// injective homomorphism.
    pub fn push(&mut self, x: Elem) -> Result<bool> {
        self.tick()?;
        let j = self.marks.len();
        let gj = self.base[j];
        let g = self.g;
        let t = self.target;
        let mark = self.assigned.len();
        self.marks.push(mark);
        self.gen_img.push(x);
        let mut ok = true;
        for idx in 0..mark {
            let h = self.assigned[idx];
            let v = t.mul(self.img[h] as usize, x);
            if !self.assign(g.mul(h, gj), v) {
                ok = false;
                break;
            }
        }
        let mut k = mark;
        while ok && k < self.assigned.len() {
            let h = self.assigned[k];
            let ih = self.img[h] as usize;
            for s in 0..=j {
                let v = t.mul(ih, self.gen_img[s]);
                if !self.assign(g.mul(h, self.base[s]), v) {
                    ok = false;
                    break;
                }
            }
            k += 1;
        }
        if !ok {
            self.counters.pruned_by_hom += 1;
            self.pop();
        }
        Ok(ok)
    }

    pub fn pop(&mut self) {
        let mark = self.marks.pop().expect("level to pop");
        self.gen_img.pop();
        for &e in &self.assigned[mark..] {
            self.used[self.img[e] as usize] = false;
            self.img[e] = UNSET;
        }
        self.assigned.truncate(mark);
    }
}

/// Visits every automorphism `phi` of `g` with `phi(base[j])` in
/// `candidates[j]`, in lexicographic order of the candidate choices. `base`
/// must generate `g`.
pub fn enumerate_restricted(
    g: &Group,
    base: &[Elem],
    candidates: &[Vec<Elem>],
    budget: u64,
    mut visit: impl FnMut(&[u32]) -> ControlFlow<()>,
) -> Result<SearchCounters> {
    assert_eq!(base.len(), candidates.len());
    let mut st = PartialHom::new(g, base, budget);
    let _ = dfs(&mut st, candidates, &mut visit)?;
    Ok(st.counters)
}

pub(crate) fn dfs(
    st: &mut PartialHom<'_>,
    candidates: &[Vec<Elem>],
    visit: &mut dyn FnMut(&[u32]) -> ControlFlow<()>,
) -> Result<ControlFlow<()>> {
    let j = st.level();
    if j == candidates.len() {
        if st.is_complete() {
            return Ok(visit(st.images()));
        }
        return Ok(ControlFlow::Continue(()));
    }
    for &x in &candidates[j] {
        if st.push(x)? {
            let flow = dfs(st, candidates, visit)?;
            st.pop();
            if flow.is_break() {
                return Ok(flow);
            }
        }
    }
    Ok(ControlFlow::Continue(()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{abelian, cyclic, symmetric};

    #[test]
    fn greedy_set_for_cyclic_is_one_element() {
        let g = cyclic(12).unwrap();
        let gens = greedy_generating_set(&g);
        assert_eq!(gens, vec![1]);
    }

    #[test]
    fn greedy_set_generates() {
        for g in [abelian(&[3, 3, 3]).unwrap(), symmetric(4).unwrap()] {
            let gens = greedy_generating_set(&g);
            assert!(crate::group::generated_subgroup(&g, &gens).is_whole());
        }
    }

    #[test]
    fn restricted_enumeration_counts_aut_c9() {
        let g = cyclic(9).unwrap();
        let base = greedy_generating_set(&g);
        let all: Vec<Elem> = g.elements().collect();
        let mut count = 0;
        enumerate_restricted(&g, &base, &[all], 1_000, |_| {
            count += 1;
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(count, 6);
    }

    #[test]
    fn budget_is_enforced() {
        let g = abelian(&[3, 3]).unwrap();
        let base = greedy_generating_set(&g);
        let all: Vec<Elem> = g.elements().collect();
        let r = enumerate_restricted(&g, &base, &[all.clone(), all], 5, |_| ControlFlow::Continue(()));
        assert!(matches!(r, Err(Error::BudgetExceeded { budget: 5 })));
    }
}
