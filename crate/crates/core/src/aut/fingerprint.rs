use std::collections::HashMap;

use crate::arith::factorize;
use crate::group::{Elem, Group};
use crate::structure::derived_subgroup;

/// Per-element invariant that every automorphism preserves: element order,
/// conjugacy class size, membership in the derived subgroup, the number of
/// `p`-th roots for each prime `p` dividing `|G|`, and the class sizes of the
/// powers `x^d` for the proper divisors `d` of the order.
#[derive(Debug, Clone)]
pub struct Fingerprint {
    ids: Vec<u32>,
    vectors: Vec<Vec<u32>>,
}

impl Fingerprint {
    pub fn new(g: &Group) -> Fingerprint {
        let classes = g.classes();
        let orders = g.element_orders();
        let mut table: HashMap<Vec<u32>, u32> = HashMap::new();
        let mut vectors = Vec::new();
        let mut ids = Vec::with_capacity(g.order());
        let derived = derived_subgroup(g);
        let primes: Vec<u64> = factorize(g.order() as u64).into_iter().map(|(p, _)| p).collect();
        let roots: Vec<Vec<u32>> = primes
            .iter()
            .map(|&p| {
                let mut count = vec![0u32; g.order()];
                for y in g.elements() {
                    count[g.pow(y, p as i64)] += 1;
                }
                count
            })
            .collect();
        for x in g.elements() {
            let ord = orders[x] as usize;
            let mut v = vec![ord as u32, classes.class_size(x) as u32, derived.contains(x) as u32];
            v.extend(roots.iter().map(|r| r[x]));
            for d in 2..ord {
                if ord % d == 0 {
                    v.push(classes.class_size(g.pow(x, d as i64)) as u32);
                }
            }
            let next = table.len() as u32;
            let id = *table.entry(v.clone()).or_insert_with(|| {
                vectors.push(v);
                next
            });
            ids.push(id);
        }
        Fingerprint { ids, vectors }
    }

    #[inline]
    pub fn id(&self, x: Elem) -> u32 {
        self.ids[x]
    }

    /// The invariant vector `(order, class size, power class sizes...)`.
    pub fn vector(&self, x: Elem) -> &[u32] {
        &self.vectors[self.ids[x] as usize]
    }

    /// Elements sharing `x`'s fingerprint, ascending.
    pub fn matching(&self, x: Elem) -> Vec<Elem> {
        let id = self.ids[x];
        (0..self.ids.len()).filter(|&y| self.ids[y] == id).collect()
    }

    pub fn distinct(&self) -> usize {
        self.vectors.len()
    }
}
