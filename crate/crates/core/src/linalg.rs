//! Matrices over prime fields, acting on row vectors (`v -> v M`).

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigUint;

use crate::arith::{is_prime, is_prime_power, mod_inverse};
use crate::error::{Error, Result};

/// Largest number of vectors the exhaustive subspace searches will walk.
const EXHAUSTIVE_VECTOR_LIMIT: u64 = 2_000_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpMatrix {
    p: u64,
    n: usize,
    entries: Vec<u64>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}{:?}", self.p, self.rows())
    }
}

impl fmt::Display for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(u64::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}] mod {}", rows.join(","), self.p)
    }
}

pub type Vector = Vec<u64>;

fn reduce(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

impl FpMatrix {
    /// Row-major entries, reduced mod `p`.
    pub fn new(p: u64, n: usize, entries: &[i64]) -> Result<FpMatrix> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        if n == 0 || entries.len() != n * n {
            return Err(Error::InvalidParameter(format!("{} entries for dimension {n}", entries.len())));
        }
        Ok(FpMatrix { p, n, entries: entries.iter().map(|&x| reduce(x, p)).collect() })
    }

    pub fn from_rows(p: u64, rows: &[Vec<i64>]) -> Result<FpMatrix> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidParameter("rows of unequal length".into()));
        }
        let flat: Vec<i64> = rows.iter().flatten().copied().collect();
        FpMatrix::new(p, n, &flat)
    }

    pub fn identity(p: u64, n: usize) -> FpMatrix {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        FpMatrix { p, n, entries }
    }

    /// Companion form: `e_i -> e_{i+1}` for `i < n`, `e_n -> sum k_j e_j`.
    pub fn companion(p: u64, k: &[i64]) -> Result<FpMatrix> {
        let n = k.len();
        let mut e = vec![0i64; n * n];
        for i in 0..n.saturating_sub(1) {
            e[i * n + i + 1] = 1;
        }
        for (j, &kj) in k.iter().enumerate() {
            e[(n - 1) * n + j] = kj;
        }
        FpMatrix::new(p, n, &e)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.entries.chunks(self.n).map(<[u64]>::to_vec).collect()
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.p, self.n), (other.p, other.n));
        let n = self.n;
        let mut entries = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] = (entries[i * n + j] + a * other.entries[k * n + j]) % self.p;
                }
            }
        }
        FpMatrix { p: self.p, n, entries }
    }

    pub fn sub(&self, other: &FpMatrix) -> FpMatrix {
        let p = self.p;
        let entries = self.entries.iter().zip(&other.entries).map(|(&a, &b)| (a + p - b) % p).collect();
        FpMatrix { p, n: self.n, entries }
    }

    pub fn pow(&self, mut e: u64) -> FpMatrix {
        let mut base = self.clone();
        let mut acc = FpMatrix::identity(self.p, self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == FpMatrix::identity(self.p, self.n)
    }

    /// `v M` for a row vector `v`.
    pub fn apply(&self, v: &[u64]) -> Vector {
        let n = self.n;
        let mut out = vec![0u64; n];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for j in 0..n {
                out[j] = (out[j] + a * self.entries[k * n + j]) % self.p;
            }
        }
        out
    }

    pub fn det(&self) -> u64 {
        let p = self.p;
        let n = self.n;
        let mut m = self.entries.clone();
        let mut det = 1u64;
        for c in 0..n {
            let Some(r) = (c..n).find(|&r| m[r * n + c] != 0) else { return 0 };
            if r != c {
                for j in 0..n {
                    m.swap(r * n + j, c * n + j);
                }
                det = (p - det) % p;
            }
            let piv = m[c * n + c];
            det = det * piv % p;
            let inv = mod_inverse(piv as i64, p as i64).expect("nonzero pivot") as u64;
            for r2 in c + 1..n {
                let f = m[r2 * n + c] * inv % p;
                if f == 0 {
                    continue;
                }
                for j in c..n {
                    m[r2 * n + j] = (m[r2 * n + j] + p * p - f * m[c * n + j] % p) % p;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<FpMatrix> {
        let p = self.p;
        let n = self.n;
        let mut a = self.entries.clone();
        let mut b = FpMatrix::identity(p, n).entries;
        for c in 0..n {
            let r = (c..n).find(|&r| a[r * n + c] != 0).ok_or(Error::NotInvertible)?;
            for j in 0..n {
                a.swap(r * n + j, c * n + j);
                b.swap(r * n + j, c * n + j);
            }
            let inv = mod_inverse(a[c * n + c] as i64, p as i64).expect("nonzero pivot") as u64;
            for j in 0..n {
                a[c * n + j] = a[c * n + j] * inv % p;
                b[c * n + j] = b[c * n + j] * inv % p;
            }
            for r2 in 0..n {
                if r2 == c {
                    continue;
                }
                let f = a[r2 * n + c];
                if f == 0 {
                    continue;
                }
                for j in 0..n {
                    a[r2 * n + j] = (a[r2 * n + j] + p - f * a[c * n + j] % p) % p;
                    b[r2 * n + j] = (b[r2 * n + j] + p - f * b[c * n + j] % p) % p;
                }
            }
        }
        Ok(FpMatrix { p, n, entries: b })
    }
}

/// `|GL(n, q)| = prod_{i<n} (q^n - q^i)`.
pub fn gl_order(n: u32, q: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidParameter("dimension must be at least 1".into()));
    }
    if is_prime_power(q).is_none() {
        return Err(Error::InvalidParameter(format!("{q} is not a prime power")));
    }
    let q = BigUint::from(q);
    let qn = q.pow(n);
    Ok((0..n).fold(BigUint::from(1u32), |acc, i| acc * (&qn - q.pow(i))))
}

/// Least `k >= 1` with `M^k = I`.
pub fn matrix_order(m: &FpMatrix) -> Result<u64> {
    if m.det() == 0 {
        return Err(Error::NotInvertible);
    }
    let bound = gl_order(m.dim() as u32, m.p())?;
    let id = FpMatrix::identity(m.p(), m.dim());
    let mut x = m.clone();
    let mut k = 1u64;
    while x != id {
        x = x.mul(m);
        k += 1;
        if BigUint::from(k) > bound {
            unreachable!("order exceeds |GL|");
        }
    }
    Ok(k)
}

/// Closure of invertible matrices under multiplication, sorted.
pub fn matrix_group(gens: &[FpMatrix], p: u64, n: usize, limit: usize) -> Result<Vec<FpMatrix>> {
    let id = FpMatrix::identity(p, n);
    let mut seen: HashSet<FpMatrix> = HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut i = 0;
    while i < out.len() {
        for g in gens {
            let x = out[i].mul(g);
            if seen.insert(x.clone()) {
                out.push(x);
                if out.len() > limit {
                    return Err(Error::BudgetExceeded { budget: limit as u64 });
                }
            }
        }
        i += 1;
    }
    out.sort();
    Ok(out)
}

/// Row-reduced basis of the span of `vectors`.
pub fn row_reduce(p: u64, vectors: &[Vector]) -> Vec<Vector> {
    let mut rows: Vec<Vector> = vectors.to_vec();
    let Some(n) = rows.first().map(Vec::len) else { return rows };
    let mut r = 0;
    for c in 0..n {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, piv);
        let inv = mod_inverse(rows[r][c] as i64, p as i64).expect("nonzero") as u64;
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..n {
                    rows[i][j] = (rows[i][j] + p - f * rows[r][j] % p) % p;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

pub fn rank(p: u64, vectors: &[Vector]) -> usize {
    row_reduce(p, vectors).len()
}

/// Coordinates of `v` in the basis `basis` (rows), if `v` lies in the span.
pub fn coordinates(p: u64, basis: &[Vector], v: &[u64]) -> Option<Vec<u64>> {
    let k = basis.len();
    let n = v.len();
    // solve c * B = v: augmented system on columns
    let mut aug: Vec<Vec<u64>> = (0..n)
        .map(|j| {
            let mut row: Vec<u64> = basis.iter().map(|b| b[j]).collect();
            row.push(v[j]);
            row
        })
        .collect();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..k {
        let Some(piv) = (r..n).find(|&i| aug[i][c] != 0) else { continue };
        aug.swap(r, piv);
        let inv = mod_inverse(aug[r][c] as i64, p as i64).expect("nonzero") as u64;
        for x in aug[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..n {
            if i != r && aug[i][c] != 0 {
                let f = aug[i][c];
                for j in 0..=k {
                    aug[i][j] = (aug[i][j] + p - f * aug[r][j] % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if aug[r..].iter().any(|row| row[k] != 0) {
        return None;
    }
    let mut out = vec![0u64; k];
    for (i, &c) in pivots.iter().enumerate() {
        out[c] = aug[i][k];
    }
    Some(out)
}

/// Smallest subspace containing `v` and invariant under `gens`.
pub fn cyclic_span(p: u64, gens: &[FpMatrix], v: &[u64]) -> Vec<Vector> {
    let mut basis = row_reduce(p, &[v.to_vec()]);
    let mut frontier = vec![v.to_vec()];
    while let Some(w) = frontier.pop() {
        for g in gens {
            let x = g.apply(&w);
            if coordinates(p, &basis, &x).is_none() {
                let mut b = basis.clone();
                b.push(x.clone());
                basis = row_reduce(p, &b);
                frontier.push(x);
            }
        }
    }
    basis
}

/// Calls `f` on one representative of each line in the span of `basis`
/// (the first nonzero coordinate is 1).
fn for_each_line(p: u64, basis: &[Vector], mut f: impl FnMut(&[u64]) -> bool) -> bool {
    let d = basis.len();
    let n = basis.first().map_or(0, Vec::len);
    for lead in 0..d {
        let free = d - lead - 1;
        let count = p.pow(free as u32);
        for code in 0..count {
            let mut coeffs = vec![0u64; d];
            coeffs[lead] = 1;
            let mut c = code;
            for slot in coeffs.iter_mut().skip(lead + 1) {
                *slot = c % p;
                c /= p;
            }
            let mut v = vec![0u64; n];
            for (a, b) in coeffs.iter().zip(basis) {
                for j in 0..n {
                    v[j] = (v[j] + a * b[j]) % p;
                }
            }
            if !f(&v) {
                return false;
            }
        }
    }
    true
}

fn line_count(p: u64, d: usize) -> u64 {
    (0..d as u32).map(|i| p.pow(i)).sum()
}

#[derive(Debug, Clone)]
pub struct Block {
    /// Basis vectors in ambient coordinates.
    pub basis: Vec<Vector>,
    pub dim: usize,
    /// Every input matrix acts as the identity on the block.
    pub trivial: bool,
    /// Restriction of each input matrix to the block, in the block basis.
    pub restricted: Vec<FpMatrix>,
    /// Index into [`BlockDecomposition::group`] of an element whose
    /// restriction generates the whole restricted group.
    pub generator: usize,
    /// Order of the restricted group.
    pub restricted_group_order: usize,
    /// No proper nonzero invariant subspace, verified by walking every line.
    pub irreducible_certified: bool,
}

#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    pub p: u64,
    pub n: usize,
    pub blocks: Vec<Block>,
    /// Rows are the block bases in order; `P M P^-1` is block diagonal.
    pub change_of_basis: FpMatrix,
    /// The matrix group generated by the inputs, sorted.
    pub group: Vec<FpMatrix>,
}

/// Restriction of `m` to an invariant subspace, in the given basis.
pub fn restrict(m: &FpMatrix, basis: &[Vector]) -> FpMatrix {
    let p = m.p();
    let rows: Vec<Vec<i64>> = basis
        .iter()
        .map(|b| {
            coordinates(p, basis, &m.apply(b))
                .expect("subspace is invariant")
                .into_iter()
                .map(|x| x as i64)
                .collect()
        })
        .collect();
    FpMatrix::from_rows(p, &rows).expect("square restriction")
}

/// Complete reduction of a commuting family of invertible matrices whose
/// group has order prime to `p`.
pub fn decompose(mats: &[FpMatrix]) -> Result<BlockDecomposition> {
    let first = mats.first().ok_or_else(|| Error::InvalidParameter("no matrices".into()))?;
    let (p, n) = (first.p(), first.dim());
    if mats.iter().any(|m| m.p() != p || m.dim() != n) {
        return Err(Error::InvalidParameter("matrices of different shape".into()));
    }
    for m in mats {
        if matrix_order(m)? % p == 0 {
            return Err(Error::NotCoprime { p });
        }
    }
    for (i, a) in mats.iter().enumerate() {
        for b in &mats[i + 1..] {
            if a.mul(b) != b.mul(a) {
                return Err(Error::NotCommuting);
            }
        }
    }
    let group = matrix_group(mats, p, n, 1_000_000)?;
    if group.len() as u64 % p == 0 {
        return Err(Error::NotCoprime { p });
    }
    let inverses: Vec<FpMatrix> = group.iter().map(|h| h.inverse().expect("invertible")).collect();
    let h_inv = mod_inverse((group.len() as u64 % p) as i64, p as i64).expect("coprime") as u64;

    let mut remaining: Vec<Vector> = (0..n)
        .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut bases: Vec<Vec<Vector>> = Vec::new();
    while !remaining.is_empty() {
        let d = remaining.len();
        if line_count(p, d) > EXHAUSTIVE_VECTOR_LIMIT {
            return Err(Error::InvalidParameter(format!("dimension {d} over F_{p} is too large")));
        }
        let mut best: Option<Vec<Vector>> = None;
        for_each_line(p, &remaining, |v| {
            let span = cyclic_span(p, mats, v);
            if best.as_ref().is_none_or(|b| span.len() < b.len()) {
                let done = span.len() == 1;
                best = Some(span);
                return !done;
            }
            true
        });
        let w = best.expect("nonzero subspace has a line");
        if w.len() == d {
            bases.push(remaining.clone());
            break;
        }
        // extend w to a basis of the remaining space
        let mut full = w.clone();
        let mut extra: Vec<Vector> = Vec::new();
        for r in &remaining {
            let mut t = full.clone();
            t.push(r.clone());
            if rank(p, &t) > full.len() {
                full.push(r.clone());
                extra.push(r.clone());
            }
        }
        let project = |y: &[u64]| -> Vector {
            let c = coordinates(p, &full, y).expect("inside the remaining space");
            let mut out = vec![0u64; n];
            for (a, b) in c.iter().take(w.len()).zip(&w) {
                for j in 0..n {
                    out[j] = (out[j] + a * b[j]) % p;
                }
            }
            out
        };
        // averaged projection commutes with the group; its kernel is an
        // invariant complement to w
        let complement: Vec<Vector> = extra
            .iter()
            .map(|u| {
                let mut avg = vec![0u64; n];
                for (h, hi) in group.iter().zip(&inverses) {
                    let t = hi.apply(&project(&h.apply(u)));
                    for j in 0..n {
                        avg[j] = (avg[j] + t[j]) % p;
                    }
                }
                (0..n).map(|j| (u[j] + p - avg[j] * h_inv % p) % p).collect()
            })
            .collect();
        bases.push(w);
        remaining = complement;
    }

    let mut blocks = Vec::new();
    for basis in bases {
        let restricted: Vec<FpMatrix> = mats.iter().map(|m| restrict(m, &basis)).collect();
        let trivial = restricted.iter().all(FpMatrix::is_identity);
        let rgroup: BTreeSet<FpMatrix> = group.iter().map(|h| restrict(h, &basis)).collect();
        let generator = group
            .iter()
            .position(|h| matrix_order(&restrict(h, &basis)).expect("invertible") as usize == rgroup.len())
            .ok_or_else(|| Error::CertificateInvalid("block action is not cyclic".into()))?;
        let irreducible_certified = line_count(p, basis.len()) <= EXHAUSTIVE_VECTOR_LIMIT
            && for_each_line(p, &basis, |v| cyclic_span(p, mats, v).len() == basis.len());
        blocks.push(Block {
            dim: basis.len(),
            basis,
            trivial,
            restricted,
            generator,
            restricted_group_order: rgroup.len(),
            irreducible_certified,
        });
    }
    let rows: Vec<Vec<i64>> =
        blocks.iter().flat_map(|b| b.basis.iter().map(|v| v.iter().map(|&x| x as i64).collect())).collect();
    let change_of_basis = FpMatrix::from_rows(p, &rows)?;
    Ok(BlockDecomposition { p, n, blocks, change_of_basis, group })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicBasis {
    /// `alpha_1 = v`, `alpha_{i+1} = alpha_i M`.
    pub basis: Vec<Vector>,
    /// `alpha_n M = sum k_j alpha_j`.
    pub k: Vec<u64>,
}

impl CyclicBasis {
    pub fn k_sum(&self, p: u64) -> u64 {
        self.k.iter().sum::<u64>() % p
    }
}

/// A basis of `block` in which `m` acts in companion form.
pub fn cyclic_basis(m: &FpMatrix, block: &[Vector]) -> Result<CyclicBasis> {
    let p = m.p();
    let d = block.len();
    let v = block.first().ok_or(Error::NotIrreducible)?.clone();
    let mut basis = vec![v];
    for _ in 1..d {
        let next = m.apply(basis.last().expect("nonempty"));
        basis.push(next);
    }
    if rank(p, &basis) < d {
        return Err(Error::NotIrreducible);
    }
    let last = m.apply(&basis[d - 1]);
    let k = coordinates(p, &basis, &last).ok_or(Error::NotIrreducible)?;
    let cb = CyclicBasis { basis, k };
    if cb.k_sum(p) == 1 {
        return Err(Error::ConditionViolated { p });
    }
    Ok(cb)
}

/// Solves `c R = t` over `Z/q` with `q` a power of the prime `p`, where the
/// rows of `R` are linearly independent mod `p`. Returns `None` if the system
/// is inconsistent or a unit pivot is missing.
pub fn solve_left_mod(rows: &[Vec<u64>], target: &[u64], q: u64, p: u64) -> Option<Vec<u64>> {
    let k = rows.len();
    let n = target.len();
    // transpose: n equations in k unknowns, augmented with the target
    let mut m: Vec<Vec<u64>> = (0..n)
        .map(|j| {
            let mut r: Vec<u64> = rows.iter().map(|row| row[j] % q).collect();
            r.push(target[j] % q);
            r
        })
        .collect();
    let mut pivots = Vec::with_capacity(k);
    let mut r = 0;
    for c in 0..k {
        let piv = (r..n).find(|&i| m[i][c] % p != 0)?;
        m.swap(r, piv);
        let inv = mod_inverse(m[r][c] as i64, q as i64)? as u64;
        for x in m[r].iter_mut() {
            *x = *x * inv % q;
        }
        for i in 0..n {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..=k {
                    m[i][j] = (m[i][j] + q * q - f * m[r][j] % q) % q;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| row[k] != 0) {
        return None;
    }
    let mut out = vec![0u64; k];
    for (i, &c) in pivots.iter().enumerate() {
        out[c] = m[i][k];
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: u64, rows: &[&[i64]]) -> FpMatrix {
        FpMatrix::from_rows(p, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn gl_orders() {
        assert_eq!(gl_order(1, 7).unwrap(), BigUint::from(6u32));
        assert_eq!(gl_order(2, 3).unwrap(), BigUint::from(48u32));
        assert_eq!(gl_order(3, 3).unwrap(), BigUint::from(11232u32));
        assert!(gl_order(2, 6).is_err());
    }

    #[test]
    fn matrix_orders() {
        assert_eq!(matrix_order(&FpMatrix::identity(3, 2)).unwrap(), 1);
        assert_eq!(matrix_order(&m(3, &[&[0, 1], &[-1, 0]])).unwrap(), 4);
        assert_eq!(matrix_order(&m(3, &[&[1, 1], &[0, 1]])).unwrap(), 3);
        assert!(matches!(matrix_order(&m(3, &[&[1, 1], &[1, 1]])), Err(Error::NotInvertible)));
    }

    #[test]
    fn inverse_and_det() {
        let a = m(5, &[&[2, 1], &[1, 1]]);
        assert!(a.mul(&a.inverse().unwrap()).is_identity());
        assert_eq!(a.det(), 1);
    }

    #[test]
    fn decompose_identity() {
        let d = decompose(&[FpMatrix::identity(3, 2)]).unwrap();
        assert_eq!(d.blocks.len(), 2);
        assert!(d.blocks.iter().all(|b| b.trivial && b.dim == 1));
    }

    #[test]
    fn decompose_irreducible_rotation() {
        let d = decompose(&[m(3, &[&[0, 1], &[-1, 0]])]).unwrap();
        assert_eq!(d.blocks.len(), 1);
        assert_eq!(d.blocks[0].dim, 2);
        assert!(d.blocks[0].irreducible_certified);
    }

    #[test]
    fn decompose_diagonal() {
        let d = decompose(&[m(5, &[&[1, 0], &[0, 2]])]).unwrap();
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.blocks.iter().filter(|b| b.trivial).count(), 1);
    }

    #[test]
    fn decompose_rejects_p_elements() {
        assert!(matches!(decompose(&[m(3, &[&[1, 1], &[0, 1]])]), Err(Error::NotCoprime { p: 3 })));
    }

    #[test]
    fn cyclic_basis_of_rotation() {
        let r = m(3, &[&[0, 1], &[-1, 0]]);
        let cb = cyclic_basis(&r, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(cb.k, vec![2, 0]);
        assert_eq!(cb.k_sum(3), 2);
    }

    #[test]
    fn solve_mod_prime_power() {
        // rows (1,0), (1,1) mod 25; target 3*(1,0) + 7*(1,1) = (10, 7)
        let c = solve_left_mod(&[vec![1, 0], vec![1, 1]], &[10, 7], 25, 5).unwrap();
        assert_eq!(c, vec![3, 7]);
        assert!(solve_left_mod(&[vec![5, 0]], &[1, 0], 25, 5).is_none());
    }

    #[test]
    fn companion_det_identity_small() {
        let c = FpMatrix::companion(7, &[1, 1]).unwrap();
        let d = c.sub(&FpMatrix::identity(7, 2)).det();
        assert_eq!(d, 6);
    }
}
