use std::collections::HashMap;

use super::{check_cap, ActionSpec, Elem, Group, GroupMap, Subgroup};
use crate::error::{Error, Result};

pub fn cyclic(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::InvalidParameter("cyclic group of order 0".into()));
    }
    check_cap(n)?;
    Group::from_fn(n, format!("C{n}"), |a, b| (a + b) % n)
}

/// Direct product of cyclic groups of the given orders. Element index is the
/// mixed-radix number with the first factor most significant, so
/// `abelian(&[m, n])` has the same table as `direct_product(C_m, C_n)`.
pub fn abelian(factors: &[usize]) -> Result<Group> {
    if let Some(&bad) = factors.iter().find(|&&d| d < 2) {
        return Err(Error::InvalidParameter(format!("invariant factor {bad} is below 2")));
    }
    let order = factors
        .iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(d))
        .ok_or_else(|| Error::InvalidParameter("order overflows".into()))?;
    check_cap(order)?;
    if factors.is_empty() {
        return Ok(Group::trivial());
    }
    let name = factors.iter().map(|d| format!("C{d}")).collect::<Vec<_>>().join("x");
    let digits = |mut x: usize| -> Vec<usize> {
        let mut out = vec![0; factors.len()];
        for (i, &d) in factors.iter().enumerate().rev() {
            out[i] = x % d;
            x /= d;
        }
        out
    };
    let coords: Vec<Vec<usize>> = (0..order).map(digits).collect();
    Group::from_fn(order, name, |a, b| {
        coords[a]
            .iter()
            .zip(&coords[b])
            .zip(factors)
            .fold(0, |acc, ((&x, &y), &d)| acc * d + (x + y) % d)
    })
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Extraspecial group of order `p^3` for an odd prime `p`.
///
/// With `exponent_p` set this is the Heisenberg group of upper unitriangular
/// 3x3 matrices over F_p, elements `(x, y, z)` at index `x p^2 + y p + z` with
/// `(x,y,z)(x',y',z') = (x+x', y+y', z+z'+x y')`. Otherwise it is
/// `C_{p^2} ⋊ C_p` with the generator acting as `a -> a^(1+p)`.
pub fn extraspecial(p: usize, exponent_p: bool) -> Result<Group> {
    if p % 2 == 0 || !is_prime(p as u64) {
        return Err(Error::InvalidParameter(format!("{p} is not an odd prime")));
    }
    let n = p * p * p;
    check_cap(n)?;
    if exponent_p {
        let split = |e: usize| (e / (p * p), (e / p) % p, e % p);
        Group::from_fn(n, format!("He{p}"), |a, b| {
            let (x, y, z) = split(a);
            let (u, v, w) = split(b);
            ((x + u) % p) * p * p + ((y + v) % p) * p + (z + w + x * v) % p
        })
    } else {
        // index a * p + t for a in Z/p^2, t in Z/p; (a,t)(b,s) = (a + b(1+p)^-t, t+s)
        let q = p * p;
        let pow_inv = |t: usize| -> usize {
            // (1+p)^-t = 1 - t p mod p^2
            (1 + (p - t % p) * p) % q
        };
        Group::from_fn(n, format!("M{p}"), |x, y| {
            let (a, t) = (x / p, x % p);
            let (b, s) = (y / p, y % p);
            ((a + b * pow_inv(t)) % q) * p + (t + s) % p
        })
    }
}

/// Extraspecial group of order `p^(1+2k)` and exponent `p`. Elements are
/// `(x_1, y_1, ..., x_k, y_k, z)` read as base-`p` digits, most significant
/// first, with `z'' = z + z' + sum x_i y_i'`. For `k = 1` the table equals
/// `extraspecial(p, true)`.
pub fn heisenberg(p: usize, k: usize) -> Result<Group> {
    if p % 2 == 0 || !is_prime(p as u64) {
        return Err(Error::InvalidParameter(format!("{p} is not an odd prime")));
    }
    if k == 0 {
        return Err(Error::InvalidParameter("heisenberg needs k >= 1".into()));
    }
    let len = 2 * k + 1;
    let n = (p as u64)
        .checked_pow(len as u32)
        .filter(|&n| n <= usize::MAX as u64)
        .ok_or_else(|| Error::InvalidParameter("order overflows".into()))? as usize;
    check_cap(n)?;
    let digits = |mut e: usize| -> Vec<usize> {
        let mut d = vec![0; len];
        for i in (0..len).rev() {
            d[i] = e % p;
            e /= p;
        }
        d
    };
    let name = if k == 1 { format!("He{p}") } else { format!("{p}^(1+{})", 2 * k) };
    Group::from_fn(n, name, |a, b| {
        let (u, v) = (digits(a), digits(b));
        let mut out = 0;
        for i in 0..len - 1 {
            out = out * p + (u[i] + v[i]) % p;
        }
        let c: usize = (0..k).map(|i| u[2 * i] * v[2 * i + 1]).sum();
        out * p + (u[len - 1] + v[len - 1] + c) % p
    })
}

/// Dihedral group of order `2n`, elements `r^i s^j` at index `i + n j`.
pub fn dihedral(n: usize) -> Result<Group> {
    if n < 1 {
        return Err(Error::InvalidParameter("dihedral needs n >= 1".into()));
    }
    check_cap(2 * n)?;
    Group::from_fn(2 * n, format!("D{}", 2 * n), |a, b| {
        let (i, j) = (a % n, a / n);
        let (k, l) = (b % n, b / n);
        // s r^k = r^-k s
        let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
        rot + n * ((j + l) % 2)
    })
}

/// Dicyclic group of order `4n`, elements `a^i x^j` at index `i + 2n j`,
/// with `x^2 = a^n` and `x^-1 a x = a^-1`. `dicyclic(2)` is the quaternion group.
pub fn dicyclic(n: usize) -> Result<Group> {
    if n < 1 {
        return Err(Error::InvalidParameter("dicyclic needs n >= 1".into()));
    }
    let m = 2 * n;
    check_cap(2 * m)?;
    Group::from_fn(2 * m, format!("Dic{}", 4 * n), |a, b| {
        let (i, j) = (a % m, a / m);
        let (k, l) = (b % m, b / m);
        match (j, l) {
            (0, _) => (i + k) % m + m * l,
            (_, 0) => (i + m - k) % m + m,
            _ => (i + m - k + n) % m,
        }
    })
}

/// Closes a set of permutations of `0..degree` under composition. Elements
/// are sorted lexicographically by image list; `x * y` applies `x` first.
pub fn permutation_group(degree: usize, gens: &[Vec<usize>], name: impl Into<String>) -> Result<Group> {
    for g in gens {
        let mut seen = vec![false; degree];
        if g.len() != degree || g.iter().any(|&x| x >= degree || std::mem::replace(&mut seen[x], true)) {
            return Err(Error::InvalidParameter(format!("{g:?} is not a permutation of degree {degree}")));
        }
    }
    let identity: Vec<usize> = (0..degree).collect();
    let mut perms = vec![identity.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
    let mut i = 0;
    while i < perms.len() {
        for g in gens {
            let p: Vec<usize> = perms[i].iter().map(|&x| g[x]).collect();
            if !index.contains_key(&p) {
                index.insert(p.clone(), perms.len());
                perms.push(p);
                check_cap(perms.len())?;
            }
        }
        i += 1;
    }
    perms.sort();
    let index: HashMap<&[usize], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let n = perms.len();
    Group::from_fn(n, name, |a, b| {
        let prod: Vec<usize> = perms[a].iter().map(|&x| perms[b][x]).collect();
        index[prod.as_slice()]
    })
}

pub fn symmetric(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::InvalidParameter("symmetric group of degree 0".into()));
    }
    let mut gens = Vec::new();
    if n >= 2 {
        let mut t: Vec<usize> = (0..n).collect();
        t.swap(0, 1);
        gens.push(t);
        gens.push((0..n).map(|i| (i + 1) % n).collect());
    }
    permutation_group(n, &gens, format!("S{n}"))
}

pub fn alternating(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::InvalidParameter("alternating group of degree 0".into()));
    }
    // 3-cycles (0 1 i) generate A_n
    let gens: Vec<Vec<usize>> = (2..n)
        .map(|i| {
            let mut p: Vec<usize> = (0..n).collect();
            p[0] = 1;
            p[1] = i;
            p[i] = 0;
            p
        })
        .collect();
    permutation_group(n, &gens, format!("A{n}"))
}

/// `G x H` with `(g, h)` at index `g |H| + h`.
pub fn direct_product(g: &Group, h: &Group) -> Result<Group> {
    let m = h.order();
    let order = g.order().checked_mul(m).ok_or_else(|| Error::InvalidParameter("order overflows".into()))?;
    check_cap(order)?;
    Group::from_fn(order, format!("{}x{}", g.name(), h.name()), |x, y| {
        g.mul(x / m, y / m) * m + h.mul(x % m, y % m)
    })
}

/// `A ⋊ B` on pairs `(a, b)` at index `a |B| + b`, with product
/// `(a1, b1)(a2, b2) = (a1 · a2^(b1^-1), b1 b2)` where `a^b = action.act(a, b)`.
///
/// With this convention conjugating the embedded `(a, 1)` by the embedded
/// `(1, b)` gives `(1,b)^-1 (a,1) (1,b) = (a^b, 1)`, so the action is
/// recovered as conjugation `b^-1 a b`. With the trivial action the table
/// equals that of [`direct_product`].
pub fn semidirect_product(a: &Group, b: &Group, action: &ActionSpec) -> Result<Group> {
    if action.acting() != b || action.acted() != a {
        return Err(Error::NotAnAction("action does not match the factors".into()));
    }
    let m = b.order();
    let order = a.order().checked_mul(m).ok_or_else(|| Error::InvalidParameter("order overflows".into()))?;
    check_cap(order)?;
    Group::from_fn(order, format!("{}:{}", a.name(), b.name()), |x, y| {
        let (a1, b1) = (x / m, x % m);
        let (a2, b2) = (y / m, y % m);
        a.mul(a1, action.act(a2, b.inv(b1))) * m + b.mul(b1, b2)
    })
}

/// `G/N` on cosets, labelled in order of their smallest member (so `N` is 0),
/// together with the projection.
pub fn quotient(g: &Group, n: &Subgroup) -> Result<(Group, GroupMap)> {
    if n.parent() != g {
        return Err(Error::NotASubgroup("subgroup of a different group".into()));
    }
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let mut label = vec![usize::MAX; g.order()];
    let mut reps: Vec<Elem> = Vec::new();
    for x in g.elements() {
        if label[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &k in n.members() {
            label[g.mul(x, k)] = id;
        }
    }
    let q = Group::from_fn(reps.len(), format!("{}/{}", g.name(), n.order()), |i, j| {
        label[g.mul(reps[i], reps[j])]
    })?;
    let images: Vec<u32> = label.iter().map(|&l| l as u32).collect();
    let proj = GroupMap::new_unchecked(g, &q, images);
    Ok((q, proj))
}
