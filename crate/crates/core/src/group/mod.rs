//! Finite groups stored as dense Cayley tables.
//!
//! Elements are the indices `0..order`, with `0` always the identity. A
//! [`Group`] is immutable and cheap to clone; subgroups and maps hold clones
//! of their parent.

mod construct;
mod map;
mod subgroup;

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result, TableDefect};

pub use construct::{
    abelian, cyclic, dicyclic, dihedral, direct_product, extraspecial, heisenberg, permutation_group,
    quotient, semidirect_product, symmetric, alternating,
};
pub use map::{ActionSpec, Automorphism, GroupMap};
pub use subgroup::{generated_subgroup, Subgroup};
pub(crate) use subgroup::close as subgroup_closure;

/// Element index inside a group.
pub type Elem = usize;

pub const DEFAULT_ORDER_CAP: usize = 4096;

/// Orders up to this size get an exhaustive associativity check.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 512;

const SAMPLED_TRIPLES: usize = 100_000;

static ORDER_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_ORDER_CAP);

/// Largest group order constructors and the automorphism search accept.
pub fn order_cap() -> usize {
    ORDER_CAP.load(Ordering::Relaxed)
}

pub fn set_order_cap(cap: usize) {
    ORDER_CAP.store(cap.max(1), Ordering::Relaxed);
}

/// Environment variable read by [`order_cap_from_env`].
pub const CAP_ENV: &str = "ODDAUT_CAP";

/// Applies `ODDAUT_CAP` if it is set, returning the value.
pub fn order_cap_from_env() -> Result<Option<usize>> {
    match std::env::var(CAP_ENV) {
        Ok(v) => {
            let cap = v
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidParameter(format!("{CAP_ENV}={v} is not a positive integer")))?;
            set_order_cap(cap);
            Ok(Some(cap))
        }
        Err(_) => Ok(None),
    }
}

pub(crate) fn check_cap(order: usize) -> Result<()> {
    let cap = order_cap();
    if order > cap {
        Err(Error::OrderCapExceeded { order, cap })
    } else {
        Ok(())
    }
}

/// Which associativity check ran when the table was accepted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssociativityCheck {
    Exhaustive,
    Sampled { triples: usize },
}

/// Conjugacy class data, computed once per group.
#[derive(Debug, Clone)]
pub struct ConjugacyClasses {
    /// Class id of every element; ids are assigned in order of the smallest member.
    pub class_of: Vec<u32>,
    /// Size of each class, indexed by class id.
    pub sizes: Vec<u32>,
}

impl ConjugacyClasses {
    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    pub fn class_size(&self, x: Elem) -> usize {
        self.sizes[self.class_of[x] as usize] as usize
    }

    /// Members of every class, in ascending element order.
    pub fn members(&self) -> Vec<Vec<Elem>> {
        let mut out = vec![Vec::new(); self.sizes.len()];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c as usize].push(x);
        }
        out
    }
}

struct Inner {
    name: String,
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    associativity: AssociativityCheck,
    orders: OnceLock<Vec<u32>>,
    classes: OnceLock<ConjugacyClasses>,
    generators: OnceLock<Vec<Elem>>,
}

#[derive(Clone)]
pub struct Group {
    inner: Arc<Inner>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.inner.name)
            .field("order", &self.inner.order)
            .finish()
    }
}

impl PartialEq for Group {
    /// Two groups are equal when their tables are identical; names are ignored.
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.table == other.inner.table
    }
}

impl Eq for Group {}

impl Group {
    /// Validates a square table and builds a group from it.
    ///
    /// If the identity sits at some index `e != 0`, labels `0` and `e` are
    /// swapped so that the identity ends up at index 0. Errors report indices
    /// in the caller's original labelling.
    pub fn from_cayley_table(rows: &[Vec<usize>], name: impl Into<String>) -> Result<Group> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotAGroup(TableDefect::Empty));
        }
        let mut table = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(TableDefect::NotSquare {
                    row: r,
                    len: row.len(),
                    expected: n,
                }));
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::NotAGroup(TableDefect::EntryOutOfRange { row: r, col: c, value: v }));
                }
                table.push(v as u32);
            }
        }
        Self::from_flat(n, table, name.into())
    }

    /// Builds a group of order `n` from a product function on `0..n`.
    pub(crate) fn from_fn(
        n: usize,
        name: impl Into<String>,
        mut product: impl FnMut(usize, usize) -> usize,
    ) -> Result<Group> {
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let v = product(a, b);
                if v >= n {
                    return Err(Error::NotAGroup(TableDefect::EntryOutOfRange { row: a, col: b, value: v }));
                }
                table.push(v as u32);
            }
        }
        Self::from_flat(n, table, name.into())
    }

    fn from_flat(n: usize, mut table: Vec<u32>, name: String) -> Result<Group> {
        if n == 0 {
            return Err(Error::NotAGroup(TableDefect::Empty));
        }
        check_latin(n, &table)?;

        let identity = (0..n)
            .find(|&e| (0..n).all(|h| table[e * n + h] as usize == h))
            .ok_or(Error::NotAGroup(TableDefect::NoIdentity))?;
        if (0..n).any(|g| table[g * n + identity] as usize != g) {
            return Err(Error::NotAGroup(TableDefect::NoIdentity));
        }
        // swap labels 0 <-> identity; the swap is its own inverse
        let relabel = |x: usize| -> usize {
            if x == 0 {
                identity
            } else if x == identity {
                0
            } else {
                x
            }
        };
        if identity != 0 {
            let old = table.clone();
            for a in 0..n {
                for b in 0..n {
                    table[relabel(a) * n + relabel(b)] = relabel(old[a * n + b] as usize) as u32;
                }
            }
        }

        let mut inverse = vec![0u32; n];
        for g in 0..n {
            let x = (0..n)
                .find(|&x| table[g * n + x] == 0)
                .ok_or(Error::NotAGroup(TableDefect::NoInverse { element: relabel(g) }))?;
            if table[x * n + g] != 0 {
                return Err(Error::NotAGroup(TableDefect::NoInverse { element: relabel(g) }));
            }
            inverse[g] = x as u32;
        }

        let associativity = check_associativity(n, &table)
            .map_err(|(a, b, c)| {
                Error::NotAGroup(TableDefect::NotAssociative { a: relabel(a), b: relabel(b), c: relabel(c) })
            })?;

        Ok(Group {
            inner: Arc::new(Inner {
                name,
                order: n,
                table,
                inverse,
                associativity,
                orders: OnceLock::new(),
                classes: OnceLock::new(),
                generators: OnceLock::new(),
            }),
        })
    }

    pub fn trivial() -> Group {
        Self::from_flat(1, vec![0], "C1".into()).expect("trivial table")
    }

    /// Same table under a different name.
    pub fn renamed(&self, name: impl Into<String>) -> Group {
        Group {
            inner: Arc::new(Inner {
                name: name.into(),
                order: self.inner.order,
                table: self.inner.table.clone(),
                inverse: self.inner.inverse.clone(),
                associativity: self.inner.associativity,
                orders: OnceLock::new(),
                classes: OnceLock::new(),
                generators: OnceLock::new(),
            }),
        }
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    pub fn associativity_check(&self) -> AssociativityCheck {
        self.inner.associativity
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.inner.order
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.inner.table[a * self.inner.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inner.inverse[a] as usize
    }

    /// Row `a` of the table: `row(a)[b] = a * b`.
    pub fn row(&self, a: Elem) -> &[u32] {
        let n = self.inner.order;
        &self.inner.table[a * n..(a + 1) * n]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.elements()
            .map(|a| self.row(a).iter().map(|&x| x as usize).collect())
            .collect()
    }

    /// `a^e`, negative exponents allowed.
    pub fn pow(&self, a: Elem, e: i64) -> Elem {
        let ord = self.element_order(a) as i64;
        let mut e = e.rem_euclid(ord);
        let mut base = a;
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[x, g] = x^-1 g^-1 x g`.
    #[inline]
    pub fn commutator(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(x), self.inv(g)), self.mul(x, g))
    }

    pub fn element_orders(&self) -> &[u32] {
        self.inner.orders.get_or_init(|| {
            let n = self.order();
            let mut orders = vec![0u32; n];
            orders[0] = 1;
            for g in 1..n {
                if orders[g] != 0 {
                    continue;
                }
                let mut k = 1u32;
                let mut x = g;
                while x != 0 {
                    x = self.mul(x, g);
                    k += 1;
                }
                orders[g] = k;
            }
            orders
        })
    }

    pub fn element_order(&self, a: Elem) -> usize {
        self.element_orders()[a] as usize
    }

    pub fn exponent(&self) -> usize {
        self.element_orders()
            .iter()
            .fold(1usize, |acc, &o| num_integer::lcm(acc, o as usize))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// A deterministic generating set: repeatedly adds the smallest element
    /// not yet generated, taking elements of large order first.
    pub fn generators(&self) -> &[Elem] {
        self.inner.generators.get_or_init(|| {
            let orders = self.element_orders();
            let mut by_order: Vec<Elem> = self.elements().skip(1).collect();
            by_order.sort_by(|&a, &b| orders[b].cmp(&orders[a]).then(a.cmp(&b)));
            let mut gens = Vec::new();
            let mut mask = vec![false; self.order()];
            mask[0] = true;
            let mut members = vec![0];
            for x in by_order {
                if mask[x] {
                    continue;
                }
                gens.push(x);
                members = subgroup::close(self, &gens, &mut mask, members);
                if members.len() == self.order() {
                    break;
                }
            }
            gens
        })
    }

    pub fn classes(&self) -> &ConjugacyClasses {
        self.inner.classes.get_or_init(|| {
            let n = self.order();
            let gens = self.generators().to_vec();
            let mut class_of = vec![u32::MAX; n];
            let mut sizes = Vec::new();
            for x in 0..n {
                if class_of[x] != u32::MAX {
                    continue;
                }
                let id = sizes.len() as u32;
                class_of[x] = id;
                let mut stack = vec![x];
                let mut size = 1u32;
                while let Some(y) = stack.pop() {
                    for &g in &gens {
                        let z = self.conj(y, g);
                        if class_of[z] == u32::MAX {
                            class_of[z] = id;
                            size += 1;
                            stack.push(z);
                        }
                    }
                }
                sizes.push(size);
            }
            ConjugacyClasses { class_of, sizes }
        })
    }

    /// True when the two tables are identical entry for entry.
    pub fn same_table(&self, other: &Group) -> bool {
        self.inner.table == other.inner.table
    }
}

fn check_latin(n: usize, table: &[u32]) -> Result<()> {
    let mut stamp = vec![usize::MAX; n];
    for r in 0..n {
        for c in 0..n {
            let v = table[r * n + c] as usize;
            if v >= n {
                return Err(Error::NotAGroup(TableDefect::EntryOutOfRange { row: r, col: c, value: v }));
            }
            if stamp[v] == r {
                return Err(Error::NotAGroup(TableDefect::RowNotPermutation { row: r }));
            }
            stamp[v] = r;
        }
    }
    stamp.iter_mut().for_each(|s| *s = usize::MAX);
    for c in 0..n {
        for r in 0..n {
            let v = table[r * n + c] as usize;
            if stamp[v] == c {
                return Err(Error::NotAGroup(TableDefect::ColumnNotPermutation { col: c }));
            }
            stamp[v] = c;
        }
    }
    Ok(())
}

fn check_associativity(n: usize, t: &[u32]) -> std::result::Result<AssociativityCheck, (usize, usize, usize)> {
    let m = |a: usize, b: usize| t[a * n + b] as usize;
    if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
        for a in 0..n {
            for b in 0..n {
                let ab = m(a, b);
                let row_ab = &t[ab * n..(ab + 1) * n];
                let row_b = &t[b * n..(b + 1) * n];
                for c in 0..n {
                    if row_ab[c] as usize != m(a, row_b[c] as usize) {
                        return Err((a, b, c));
                    }
                }
            }
        }
        Ok(AssociativityCheck::Exhaustive)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x0dda_u64);
        for _ in 0..SAMPLED_TRIPLES {
            let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            if m(m(a, b), c) != m(a, m(b, c)) {
                return Err((a, b, c));
            }
        }
        Ok(AssociativityCheck::Sampled { triples: SAMPLED_TRIPLES })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_table() {
        let g = Group::from_cayley_table(&[vec![0]], "T").unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.associativity_check(), AssociativityCheck::Exhaustive);
    }

    #[test]
    fn cyclic_three_from_table() {
        let rows: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a + b) % 3).collect()).collect();
        let g = Group::from_cayley_table(&rows, "C3").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.element_order(1), 3);
        assert_eq!(g.inv(1), 2);
    }

    #[test]
    fn row_not_permutation() {
        let err = Group::from_cayley_table(&[vec![0, 1], vec![1, 1]], "bad").unwrap_err();
        assert!(matches!(err, Error::NotAGroup(TableDefect::RowNotPermutation { row: 1 })));
    }

    #[test]
    fn identity_relabelled_to_zero() {
        // C2 with identity stored at index 1
        let g = Group::from_cayley_table(&[vec![1, 0], vec![0, 1]], "C2").unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.mul(1, 1), 0);
    }

    #[test]
    fn non_associative_latin_square_rejected() {
        // a Latin square with identity 0 that is not a group (order 5 loop)
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = Group::from_cayley_table(&rows, "loop").unwrap_err();
        assert!(matches!(err, Error::NotAGroup(TableDefect::NotAssociative { .. })), "{err}");
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let g = cyclic(7).unwrap();
        assert_eq!(g.pow(3, -1), g.inv(3));
        assert_eq!(g.pow(3, 7), 0);
        assert_eq!(g.pow(2, 3), 6);
    }
}
