//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigUint;
use oddaut::Group;

pub fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count()
}

/// `|GL(n, p)|` from the product formula.
pub fn gl_formula(n: u32, p: u64) -> BigUint {
    let q = BigUint::from(p);
    let qn = q.pow(n);
    (0..n).fold(BigUint::from(1u32), |acc, i| acc * (&qn - q.pow(i)))
}

/// Counts automorphisms by assigning an image to every element in turn,
/// rejecting as soon as an assigned product disagrees.
pub fn brute_force_aut_count(g: &Group) -> u64 {
    fn go(g: &Group, img: &mut [usize], used: &mut [bool], x: usize) -> u64 {
        let n = g.order();
        if x == n {
            return 1;
        }
        let mut total = 0;
        for y in 1..n {
            if used[y] || g.element_order(y) != g.element_order(x) {
                continue;
            }
            img[x] = y;
            let consistent = (0..=x).all(|u| {
                (0..=x).all(|v| {
                    let w = g.mul(u, v);
                    w > x || g.mul(img[u], img[v]) == img[w]
                })
            });
            if consistent {
                used[y] = true;
                total += go(g, img, used, x + 1);
                used[y] = false;
            }
        }
        total
    }
    let n = g.order();
    let mut img = vec![0; n];
    let mut used = vec![false; n];
    used[0] = true;
    go(g, &mut img, &mut used, 1)
}

/// Bijective, multiplicative on every pair, squares to the identity and is
/// not the identity.
pub fn is_involution(g: &Group, img: &[u32]) -> bool {
    let n = g.order();
    let mut seen = vec![false; n];
    for &y in img {
        if std::mem::replace(&mut seen[y as usize], true) {
            return false;
        }
    }
    for x in 0..n {
        for y in 0..n {
            if img[g.mul(x, y)] as usize != g.mul(img[x] as usize, img[y] as usize) {
                return false;
            }
        }
    }
    (0..n).all(|x| img[img[x] as usize] as usize == x) && (0..n).any(|x| img[x] as usize != x)
}

/// Every group of order at most 12 up to isomorphism.
pub const ORDER_AT_MOST_12: [&str; 24] = [
    "trivial",
    "cyclic:2",
    "cyclic:3",
    "cyclic:4",
    "abelian:2,2",
    "cyclic:5",
    "cyclic:6",
    "dihedral:3",
    "cyclic:7",
    "cyclic:8",
    "abelian:4,2",
    "abelian:2,2,2",
    "dihedral:4",
    "dicyclic:2",
    "cyclic:9",
    "abelian:3,3",
    "cyclic:10",
    "dihedral:5",
    "cyclic:11",
    "cyclic:12",
    "abelian:6,2",
    "alternating:4",
    "dihedral:6",
    "dicyclic:3",
];
