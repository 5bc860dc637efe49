//! Group specifications and the built-in catalogs.
//!
//! Grammar:
//!
//! ```text
//! spec   := "trivial" | "cyclic:" n | "abelian:" n ("," n)*
//!         | "extraspecial:" p ":" exp [":" k] | "dihedral:" n | "dicyclic:" n
//!         | "symmetric:" n | "alternating:" n | "exceptional"
//!         | "direct:(" spec ")x(" spec ")"
//!         | "sdp:(" spec ")x(" spec "):" action
//! action := "matrix=" m "," d ("," int)+ | "power=" int
//! ```
//!
//! In `sdp` the second factor must be cyclic; its generator acts on the first
//! factor. `matrix=p,d,...` with `p` prime is lifted to an automorphism
//! inducing that matrix on the Frattini quotient; a prime power modulus acts
//! linearly on a homocyclic abelian group. `power=r` is `x -> x^r`.

use std::fmt;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::extend::{lift_matrix, linear_automorphism};
use crate::group::{
    abelian, alternating, cyclic, dicyclic, dihedral, direct_product, extraspecial, heisenberg, permutation_group,
    semidirect_product, symmetric, ActionSpec, Automorphism, Group, Subgroup,
};
use crate::linalg::FpMatrix;

const LIFT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Action {
    Matrix { modulus: u64, dim: usize, entries: Vec<i64> },
    Power(i64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Trivial,
    Cyclic(usize),
    Abelian(Vec<usize>),
    Extraspecial { p: usize, exponent: usize, rank: usize },
    Dihedral(usize),
    Dicyclic(usize),
    Symmetric(usize),
    Alternating(usize),
    Exceptional,
    Direct(Box<GroupSpec>, Box<GroupSpec>),
    Semidirect(Box<GroupSpec>, Box<GroupSpec>, Action),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        match self {
            GroupSpec::Trivial => write!(f, "trivial"),
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Abelian(v) => write!(f, "abelian:{}", list(v)),
            GroupSpec::Extraspecial { p, exponent, rank } => {
                write!(f, "extraspecial:{p}:{exponent}")?;
                if *rank != 1 {
                    write!(f, ":{rank}")?;
                }
                Ok(())
            }
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Dicyclic(n) => write!(f, "dicyclic:{n}"),
            GroupSpec::Symmetric(n) => write!(f, "symmetric:{n}"),
            GroupSpec::Alternating(n) => write!(f, "alternating:{n}"),
            GroupSpec::Exceptional => write!(f, "exceptional"),
            GroupSpec::Direct(a, b) => write!(f, "direct:({a})x({b})"),
            GroupSpec::Semidirect(a, b, act) => {
                write!(f, "sdp:({a})x({b}):")?;
                match act {
                    Action::Matrix { modulus, dim, entries } => {
                        let e: Vec<String> = entries.iter().map(i64::to_string).collect();
                        write!(f, "matrix={modulus},{dim},{}", e.join(","))
                    }
                    Action::Power(r) => write!(f, "power={r}"),
                }
            }
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { line: 1, column: self.pos + 1, message: msg.into() })
    }

    fn eat(&mut self, lit: &str) -> bool {
        if self.s[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        if self.eat(lit) {
            Ok(())
        } else {
            self.err(format!("expected '{lit}'"))
        }
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.pos;
        if self.pos < self.s.len() && self.s[self.pos] == b'-' {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
        text.parse().or_else(|_| {
            self.pos = start;
            self.err("expected an integer")
        })
    }

    fn natural(&mut self) -> Result<usize> {
        let start = self.pos;
        let v = self.int()?;
        usize::try_from(v).or_else(|_| {
            self.pos = start;
            self.err("expected a nonnegative integer")
        })
    }

    fn ints(&mut self) -> Result<Vec<i64>> {
        let mut v = vec![self.int()?];
        while self.eat(",") {
            v.push(self.int()?);
        }
        Ok(v)
    }

    fn pair(&mut self) -> Result<(GroupSpec, GroupSpec)> {
        self.expect("(")?;
        let a = self.spec()?;
        self.expect(")x(")?;
        let b = self.spec()?;
        self.expect(")")?;
        Ok((a, b))
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        let start = self.pos;
        if self.eat("trivial") {
            return Ok(GroupSpec::Trivial);
        }
        if self.eat("exceptional") {
            return Ok(GroupSpec::Exceptional);
        }
        if self.eat("cyclic:") {
            return Ok(GroupSpec::Cyclic(self.natural()?));
        }
        if self.eat("abelian:") {
            let mut v = vec![self.natural()?];
            while self.eat(",") {
                v.push(self.natural()?);
            }
            return Ok(GroupSpec::Abelian(v));
        }
        if self.eat("extraspecial:") {
            let p = self.natural()?;
            self.expect(":")?;
            let exponent = self.natural()?;
            let rank = if self.eat(":") { self.natural()? } else { 1 };
            return Ok(GroupSpec::Extraspecial { p, exponent, rank });
        }
        for (kw, f) in [
            ("dihedral:", GroupSpec::Dihedral as fn(usize) -> GroupSpec),
            ("dicyclic:", GroupSpec::Dicyclic),
            ("symmetric:", GroupSpec::Symmetric),
            ("alternating:", GroupSpec::Alternating),
        ] {
            if self.eat(kw) {
                return Ok(f(self.natural()?));
            }
        }
        if self.eat("direct:") {
            let (a, b) = self.pair()?;
            return Ok(GroupSpec::Direct(Box::new(a), Box::new(b)));
        }
        if self.eat("sdp:") {
            let (a, b) = self.pair()?;
            self.expect(":")?;
            let act = if self.eat("matrix=") {
                let at = self.pos;
                let v = self.ints()?;
                if v.len() < 3 || v[0] < 2 || v[1] < 1 {
                    self.pos = at;
                    return self.err("matrix needs modulus, dimension and entries");
                }
                let (modulus, dim) = (v[0] as u64, v[1] as usize);
                if v.len() - 2 != dim * dim {
                    self.pos = at;
                    return self.err(format!("expected {} entries, found {}", dim * dim, v.len() - 2));
                }
                Action::Matrix { modulus, dim, entries: v[2..].to_vec() }
            } else if self.eat("power=") {
                Action::Power(self.int()?)
            } else {
                return self.err("expected 'matrix=' or 'power='");
            };
            return Ok(GroupSpec::Semidirect(Box::new(a), Box::new(b), act));
        }
        self.pos = start;
        self.err("unknown group spec")
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupSpec> {
        let mut p = Parser { s: s.trim().as_bytes(), pos: 0 };
        let spec = p.spec()?;
        if p.pos != p.s.len() {
            return p.err("trailing input");
        }
        Ok(spec)
    }
}

impl GroupSpec {
    pub fn parse(s: &str) -> Result<GroupSpec> {
        s.parse()
    }

    pub fn build(&self) -> Result<Group> {
        match self {
            GroupSpec::Trivial => Ok(Group::trivial()),
            GroupSpec::Cyclic(n) => cyclic(*n),
            GroupSpec::Abelian(v) => abelian(v),
            GroupSpec::Extraspecial { p, exponent, rank } => {
                if *exponent == *p {
                    heisenberg(*p, *rank)
                } else if *exponent == p * p && *rank == 1 {
                    extraspecial(*p, false)
                } else {
                    Err(Error::InvalidParameter(format!("no extraspecial group with p = {p}, exponent {exponent}, rank {rank}")))
                }
            }
            GroupSpec::Dihedral(n) => dihedral(*n),
            GroupSpec::Dicyclic(n) => dicyclic(*n),
            GroupSpec::Symmetric(n) => symmetric(*n),
            GroupSpec::Alternating(n) => alternating(*n),
            GroupSpec::Exceptional => exceptional_group(),
            GroupSpec::Direct(a, b) => direct_product(&a.build()?, &b.build()?),
            GroupSpec::Semidirect(a, b, act) => {
                let (ga, gb) = (a.build()?, b.build()?);
                let gen = gb
                    .elements()
                    .find(|&x| gb.element_order(x) == gb.order())
                    .ok_or_else(|| Error::InvalidParameter("acting factor must be cyclic".into()))?;
                let f = match act {
                    Action::Power(r) => {
                        Automorphism::new(&ga, ga.elements().map(|x| ga.pow(x, *r)).collect()).map_err(|_| {
                            Error::NotAnAction(format!("x -> x^{r} is not an automorphism of {}", ga.name()))
                        })?
                    }
                    Action::Matrix { modulus, dim, entries } => {
                        if is_prime(*modulus) {
                            lift_matrix(&ga, &FpMatrix::new(*modulus, *dim, entries)?, LIFT_BUDGET)?
                        } else {
                            let rows: Vec<Vec<i64>> = entries.chunks(*dim).map(<[i64]>::to_vec).collect();
                            linear_automorphism(&ga, *modulus as usize, &rows)?
                        }
                    }
                };
                if !f.pow(gb.order()).is_identity() {
                    return Err(Error::NotAnAction(format!(
                        "automorphism of order {} does not divide {}",
                        f.order(),
                        gb.order()
                    )));
                }
                let action = ActionSpec::from_generator_images(&gb, &ga, &[(gen, f)])?;
                semidirect_product(&ga, &gb, &action)
            }
        }
    }

    /// The order of the group, computed without building it.
    pub fn order(&self) -> Option<usize> {
        let fact = |n: usize| (1..=n).try_fold(1usize, |a, k| a.checked_mul(k));
        match self {
            GroupSpec::Trivial => Some(1),
            GroupSpec::Cyclic(n) => Some(*n),
            GroupSpec::Abelian(v) => v.iter().try_fold(1usize, |a, &d| a.checked_mul(d)),
            GroupSpec::Extraspecial { p, rank, .. } => p.checked_pow(2 * *rank as u32 + 1),
            GroupSpec::Dihedral(n) => n.checked_mul(2),
            GroupSpec::Dicyclic(n) => n.checked_mul(4),
            GroupSpec::Symmetric(n) => fact(*n),
            GroupSpec::Alternating(n) => fact(*n).map(|f| if *n >= 2 { f / 2 } else { f }),
            GroupSpec::Exceptional => Some(1053),
            GroupSpec::Direct(a, b) | GroupSpec::Semidirect(a, b, _) => a.order()?.checked_mul(b.order()?),
        }
    }

    /// Orders of the two factors of a direct or semidirect product.
    pub fn factor_orders(&self) -> Option<(usize, usize)> {
        match self {
            GroupSpec::Direct(a, b) | GroupSpec::Semidirect(a, b, _) => Some((a.order()?, b.order()?)),
            _ => None,
        }
    }
}

/// The factors of a product built with element index `a |B| + b`: the
/// normal factor `{(a, 1)}` and the complement `{(1, b)}`.
pub fn product_factors(g: &Group, order_a: usize, order_b: usize) -> Result<(Subgroup, Subgroup)> {
    if order_a * order_b != g.order() {
        return Err(Error::InvalidParameter("factor orders do not match".into()));
    }
    let a: Vec<usize> = (0..order_a).map(|x| x * order_b).collect();
    let b: Vec<usize> = (0..order_b).collect();
    Ok((Subgroup::from_members(g, &a)?, Subgroup::from_members(g, &b)?))
}

/// Multiplication in `F_27 = F_3[t]/(t^3 - t - 1)`, elements as base-3 digit
/// triples `c_0 + 3 c_1 + 9 c_2`.
fn f27_mul(x: usize, y: usize) -> usize {
    let dx = [x % 3, x / 3 % 3, x / 9];
    let dy = [y % 3, y / 3 % 3, y / 9];
    let mut c = [0usize; 5];
    for i in 0..3 {
        for j in 0..3 {
            c[i + j] += dx[i] * dy[j];
        }
    }
    // t^4 = t^2 + t, t^3 = t + 1
    c[2] += c[4];
    c[1] += c[4];
    c[1] += c[3];
    c[0] += c[3];
    c[0] % 3 + 3 * (c[1] % 3) + 9 * (c[2] % 3)
}

fn f27_add(x: usize, y: usize) -> usize {
    (x % 3 + y % 3) % 3 + 3 * ((x / 3 % 3 + y / 3 % 3) % 3) + 9 * ((x / 9 + y / 9) % 3)
}

/// `F_27 ⋊ (C_13 ⋊ C_3)`: the affine maps `x -> a x^(3^j) + b` with `a` of
/// order dividing 13. The normal subgroup is elementary abelian of order 27
/// and the complement is nonabelian of order 39.
pub fn exceptional_group() -> Result<Group> {
    let order = |a: usize| {
        let mut k = 1;
        let mut y = a;
        while y != 1 {
            y = f27_mul(y, a);
            k += 1;
        }
        k
    };
    let omega = (2..27).find(|&a| order(a) == 13).expect("F_27^* is cyclic of order 26");
    let translate: Vec<usize> = (0..27).map(|x| f27_add(x, 1)).collect();
    let scale: Vec<usize> = (0..27).map(|x| f27_mul(omega, x)).collect();
    let frob: Vec<usize> = (0..27).map(|x| f27_mul(x, f27_mul(x, x))).collect();
    permutation_group(27, &[translate, scale, frob], "C3^3:(C13:C3)")
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub spec: GroupSpec,
}

impl CatalogEntry {
    fn new(name: impl Into<String>, spec: &str) -> CatalogEntry {
        CatalogEntry { name: name.into(), spec: spec.parse().expect("built-in spec") }
    }

    pub fn build(&self) -> Result<Group> {
        Ok(self.spec.build()?.renamed(self.name.clone()))
    }
}

fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every abelian group of order `n` up to isomorphism, as elementary-divisor
/// lists (primes ascending, exponents descending).
pub fn abelian_groups_of_order(n: u64) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    for (p, e) in crate::arith::factorize(n) {
        let mut next = Vec::new();
        for prefix in &out {
            for part in partitions(e, e) {
                let mut v = prefix.clone();
                v.extend(part.iter().map(|&k| p.pow(k) as usize));
                next.push(v);
            }
        }
        out = next;
    }
    out
}

fn abelian_entry(factors: &[usize]) -> CatalogEntry {
    let name = factors.iter().map(|d| format!("C{d}")).collect::<Vec<_>>().join("x");
    let list = factors.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    CatalogEntry::new(name, &format!("abelian:{list}"))
}

const ODD_NONABELIAN: &[(&str, &str)] = &[
    ("C7:C3", "sdp:(cyclic:7)x(cyclic:3):power=2"),
    ("He3", "extraspecial:3:3"),
    ("M3", "extraspecial:3:9"),
    ("C13:C3", "sdp:(cyclic:13)x(cyclic:3):power=3"),
    ("C11:C5", "sdp:(cyclic:11)x(cyclic:5):power=3"),
    ("C19:C3", "sdp:(cyclic:19)x(cyclic:3):power=7"),
    ("C3x(C7:C3)", "direct:(cyclic:3)x(sdp:(cyclic:7)x(cyclic:3):power=2)"),
    ("C7:C9", "sdp:(cyclic:7)x(cyclic:9):power=2"),
    ("(C5xC5):C3", "sdp:(abelian:5,5)x(cyclic:3):matrix=5,2,0,1,-1,-1"),
    ("He3xC3", "direct:(extraspecial:3:3)x(cyclic:3)"),
    ("M3xC3", "direct:(extraspecial:3:9)x(cyclic:3)"),
    ("C9:C9", "sdp:(cyclic:9)x(cyclic:9):power=4"),
    ("C3wrC3", "sdp:(abelian:3,3,3)x(cyclic:3):matrix=3,3,0,1,0,0,0,1,1,0,0"),
    ("(C3xC3):C9", "sdp:(abelian:3,3)x(cyclic:9):matrix=3,2,1,1,0,1"),
    ("C27:C3", "sdp:(cyclic:27)x(cyclic:3):power=10"),
    ("C31:C3", "sdp:(cyclic:31)x(cyclic:3):power=5"),
    ("C5x(C7:C3)", "direct:(cyclic:5)x(sdp:(cyclic:7)x(cyclic:3):power=2)"),
    ("C37:C3", "sdp:(cyclic:37)x(cyclic:3):power=10"),
    ("C3x(C13:C3)", "direct:(cyclic:3)x(sdp:(cyclic:13)x(cyclic:3):power=3)"),
    ("He5", "extraspecial:5:5"),
    ("M5", "extraspecial:5:25"),
    ("C43:C3", "sdp:(cyclic:43)x(cyclic:3):power=6"),
    ("He3xC5", "direct:(extraspecial:3:3)x(cyclic:5)"),
    ("(C7xC7):C3", "sdp:(abelian:7,7)x(cyclic:3):matrix=7,2,2,0,0,4"),
    ("C7x(C7:C3)", "sdp:(abelian:7,7)x(cyclic:3):matrix=7,2,2,0,0,1"),
    ("C31:C5", "sdp:(cyclic:31)x(cyclic:5):power=2"),
    ("C3x(C11:C5)", "direct:(cyclic:3)x(sdp:(cyclic:11)x(cyclic:5):power=3)"),
    ("C19:C9", "sdp:(cyclic:19)x(cyclic:9):power=4"),
    ("C9x(C7:C3)", "direct:(cyclic:9)x(sdp:(cyclic:7)x(cyclic:3):power=2)"),
    ("C3xC3x(C7:C3)", "direct:(abelian:3,3)x(sdp:(cyclic:7)x(cyclic:3):power=2)"),
    ("C7:C27", "sdp:(cyclic:7)x(cyclic:27):power=2"),
    ("C5x(C13:C3)", "direct:(cyclic:5)x(sdp:(cyclic:13)x(cyclic:3):power=3)"),
    ("C67:C3", "sdp:(cyclic:67)x(cyclic:3):power=29"),
    ("C29:C7", "sdp:(cyclic:29)x(cyclic:7):power=7"),
    ("C41:C5", "sdp:(cyclic:41)x(cyclic:5):power=10"),
    ("C73:C3", "sdp:(cyclic:73)x(cyclic:3):power=8"),
    ("C3x((C5xC5):C3)", "direct:(cyclic:3)x(sdp:(abelian:5,5)x(cyclic:3):matrix=5,2,0,1,-1,-1)"),
    ("(C5xC5):C9", "sdp:(abelian:5,5)x(cyclic:9):matrix=5,2,0,1,-1,-1"),
    ("He3xC9", "direct:(extraspecial:3:3)x(cyclic:9)"),
    ("He3xC3xC3", "direct:(extraspecial:3:3)x(abelian:3,3)"),
    ("M3xC9", "direct:(extraspecial:3:9)x(cyclic:9)"),
    ("C3wrC3xC3", "direct:(sdp:(abelian:3,3,3)x(cyclic:3):matrix=3,3,0,1,0,0,0,1,1,0,0)x(cyclic:3)"),
    ("C27:C9", "sdp:(cyclic:27)x(cyclic:9):power=10"),
    ("C3^4:C3", "sdp:(abelian:3,3,3,3)x(cyclic:3):matrix=3,4,1,1,0,0,0,1,0,0,0,0,1,1,0,0,0,1"),
    ("3^(1+4)", "extraspecial:3:3:2"),
];

/// Odd-order groups of order at most `max_order`: every abelian group and a
/// fixed list of nonabelian constructions. Not a census up to isomorphism.
pub fn odd_catalog(max_order: usize) -> Vec<CatalogEntry> {
    let mut out: Vec<(usize, CatalogEntry)> = Vec::new();
    for n in (3..=max_order as u64).step_by(2) {
        for f in abelian_groups_of_order(n) {
            out.push((n as usize, abelian_entry(&f)));
        }
    }
    for &(name, spec) in ODD_NONABELIAN {
        let e = CatalogEntry::new(name, spec);
        if let Some(n) = e.spec.order().filter(|&n| n <= max_order) {
            out.push((n, e));
        }
    }
    out.sort_by(|(x, a), (y, b)| x.cmp(y).then_with(|| a.name.cmp(&b.name)));
    out.into_iter().map(|(_, e)| e).collect()
}

/// A mixed catalog of small groups for the property sweeps: all abelian
/// groups of order at most 30 and assorted nonabelian ones.
pub fn test_catalog() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for n in 2..=30 {
        for f in abelian_groups_of_order(n) {
            out.push(abelian_entry(&f));
        }
    }
    for (name, spec) in [
        ("S3", "symmetric:3"),
        ("D8", "dihedral:4"),
        ("Q8", "dicyclic:2"),
        ("D10", "dihedral:5"),
        ("A4", "alternating:4"),
        ("D12", "dihedral:6"),
        ("Dic12", "dicyclic:3"),
        ("D14", "dihedral:7"),
        ("D16", "dihedral:8"),
        ("C3xS3", "direct:(cyclic:3)x(symmetric:3)"),
        ("S4", "symmetric:4"),
        ("C7:C3", "sdp:(cyclic:7)x(cyclic:3):power=2"),
        ("He3", "extraspecial:3:3"),
        ("M3", "extraspecial:3:9"),
        ("C5:C4", "sdp:(cyclic:5)x(cyclic:4):power=2"),
        ("C3:C4", "sdp:(cyclic:3)x(cyclic:4):power=2"),
        ("C2xA4", "direct:(cyclic:2)x(alternating:4)"),
        ("He3:C2", "sdp:(extraspecial:3:3)x(cyclic:2):matrix=3,2,-1,0,0,-1"),
        ("C13:C3", "sdp:(cyclic:13)x(cyclic:3):power=3"),
        ("(C3xC3):C4", "sdp:(abelian:3,3)x(cyclic:4):matrix=3,2,0,1,-1,0"),
    ] {
        out.push(CatalogEntry::new(name, spec));
    }
    out
}

/// A test instance `G = A B` for the involution construction.
#[derive(Debug, Clone)]
pub struct ExtensionInstance {
    pub name: String,
    pub spec: GroupSpec,
}

impl ExtensionInstance {
    /// The group and its two factors.
    pub fn build(&self) -> Result<(Group, Subgroup, Subgroup)> {
        let g = self.spec.build()?.renamed(self.name.clone());
        let (na, nb) = self.spec.factor_orders().ok_or_else(|| Error::InvalidParameter("not a product".into()))?;
        let (a, b) = product_factors(&g, na, nb)?;
        Ok((g, a, b))
    }
}

pub fn extension_instances() -> Vec<ExtensionInstance> {
    [
        ("(C25xC25):C3", "sdp:(abelian:25,25)x(cyclic:3):matrix=25,2,0,1,-1,-1"),
        ("He3:C4", "sdp:(extraspecial:3:3)x(cyclic:4):matrix=3,2,0,1,-1,0"),
        ("He3:C2", "sdp:(extraspecial:3:3)x(cyclic:2):matrix=3,2,-1,0,0,-1"),
        ("He3:C8", "sdp:(extraspecial:3:3)x(cyclic:8):matrix=3,2,0,1,-1,0"),
        ("C3^4:C4 two blocks", "sdp:(abelian:3,3,3,3)x(cyclic:4):matrix=3,4,0,1,0,0,-1,0,0,0,0,0,0,1,0,0,-1,0"),
        ("C3^4:C4 with fixed part", "sdp:(abelian:3,3,3,3)x(cyclic:4):matrix=3,4,0,1,0,0,-1,0,0,0,0,0,1,0,0,0,0,1"),
        ("C7:C3", "sdp:(cyclic:7)x(cyclic:3):power=2"),
        ("He5:C4", "sdp:(extraspecial:5:5)x(cyclic:4):matrix=5,2,2,0,0,3"),
        ("C9x(He3:C2)", "sdp:(direct:(extraspecial:3:3)x(cyclic:9))x(cyclic:2):matrix=3,3,1,0,0,0,-1,0,0,0,-1"),
        ("3^(1+4):C4", "sdp:(extraspecial:3:3:2)x(cyclic:4):matrix=3,4,0,1,0,0,-1,0,0,0,0,0,1,0,0,0,0,1"),
    ]
    .into_iter()
    .map(|(name, spec)| ExtensionInstance { name: name.into(), spec: spec.parse().expect("built-in spec") })
    .collect()
}
