//! Extending automorphisms of a normal subgroup to involutions of the whole
//! group.
//!
//! The setting is `G = AB` with `A` a normal `p`-subgroup (`p` odd) of class at
//! most 2, `Z = Z(G)`, `A/(Z ∩ A)` homocyclic, `B/(Z ∩ B)` abelian of order
//! prime to `p` and `A ∩ B <= Z`. The involution is built on `A` block by
//! block and then extended to `G` by letting it fix `B` pointwise.

use crate::arith::{is_prime_power, mod_inverse};
use crate::error::{Error, Result};
use crate::group::{generated_subgroup, ActionSpec, Automorphism, Elem, Group, Subgroup};
use crate::linalg::{cyclic_basis, decompose, solve_left_mod, BlockDecomposition, FpMatrix};
use crate::structure::{center, derived_subgroup};

/// Above this many candidate tuples the uniqueness sweep in [`solve_zeta`]
/// only runs over the last coordinate.
const FULL_SWEEP_LIMIT: usize = 200_000;

/// Largest `|Z ∩ A|` for which [`solve_zeta`] checks uniqueness exhaustively.
pub const EXHAUSTIVE_CENTER_LIMIT: usize = 125;

#[derive(Debug, Clone)]
pub struct ExtensionProblem {
    pub g: Group,
    pub a: Subgroup,
    pub b: Subgroup,
    pub z: Subgroup,
}

impl ExtensionProblem {
    pub fn new(g: &Group, a: Subgroup, b: Subgroup) -> Result<ExtensionProblem> {
        if !a.is_normal() {
            return Err(Error::NotNormal);
        }
        if a.order() * b.order() / a.intersection(&b).order() != g.order() {
            return Err(Error::HypothesisViolated("G is not the product AB".into()));
        }
        Ok(ExtensionProblem { g: g.clone(), a, b, z: center(g) })
    }

    pub fn from_generators(g: &Group, a_gens: &[Elem], b_gens: &[Elem]) -> Result<ExtensionProblem> {
        for &x in a_gens.iter().chain(b_gens) {
            if x >= g.order() {
                return Err(Error::InvalidParameter(format!("element {x} out of range")));
            }
        }
        ExtensionProblem::new(g, generated_subgroup(g, a_gens), generated_subgroup(g, b_gens))
    }

    pub fn za(&self) -> Subgroup {
        self.z.intersection(&self.a)
    }
}

/// The conjugation action of `B` on `A/(Z ∩ A) = (Z/q)^r` in a fixed basis.
#[derive(Debug, Clone)]
pub struct Representation {
    pub p: u64,
    /// Exponent `q = p^e` of `A/(Z ∩ A)`.
    pub q: u64,
    pub e: u32,
    pub za: Subgroup,
    /// Elements of `A` whose cosets form a basis.
    pub basis: Vec<Elem>,
    coords: Vec<Vec<u64>>,
}

impl Representation {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates mod `q` of the coset of `x` (`x` in `A`).
    pub fn coordinates(&self, x: Elem) -> &[u64] {
        &self.coords[x]
    }

    /// Rows are the coordinates of `b^-1 beta_i b`, mod `q`.
    pub fn matrix_mod_q(&self, g: &Group, b: Elem) -> Vec<Vec<u64>> {
        self.basis.iter().map(|&x| self.coords[g.conj(x, b)].clone()).collect()
    }

    pub fn matrix_mod_p(&self, g: &Group, b: Elem) -> FpMatrix {
        let rows: Vec<Vec<i64>> = self
            .matrix_mod_q(g, b)
            .into_iter()
            .map(|r| r.into_iter().map(|x| (x % self.p) as i64).collect())
            .collect();
        FpMatrix::from_rows(self.p, &rows).expect("square")
    }

    /// The element `beta_1^{c_1} ... beta_r^{c_r}`.
    pub fn lift(&self, g: &Group, c: &[u64]) -> Elem {
        word(g, &self.basis, c)
    }
}

pub(crate) fn word(g: &Group, basis: &[Elem], c: &[u64]) -> Elem {
    basis.iter().zip(c).fold(0, |acc, (&x, &k)| g.mul(acc, g.pow(x, k as i64)))
}

/// Checks the hypotheses and computes the action of `B` on `A/(Z ∩ A)`,
/// together with the conjugation action of `B` on `A` as an [`ActionSpec`].
pub fn induced_action(problem: &ExtensionProblem) -> Result<(Representation, ActionSpec)> {
    let g = &problem.g;
    let (a, b, z) = (&problem.a, &problem.b, &problem.z);
    let (p, _) = is_prime_power(a.order() as u64)
        .ok_or_else(|| Error::HypothesisViolated(format!("|A| = {} is not a prime power", a.order())))?;
    if p == 2 {
        return Err(Error::HypothesisViolated("p must be odd".into()));
    }
    let (ag, aemb) = a.as_group("A");
    let ad = derived_subgroup(&ag);
    let az = center(&ag);
    if !ad.is_subset_of(&az) {
        return Err(Error::HypothesisViolated("A has class greater than 2".into()));
    }
    if !a.intersection(b).is_subset_of(z) {
        return Err(Error::HypothesisViolated("A ∩ B is not central".into()));
    }
    for &x in b.generators() {
        for &y in b.generators() {
            if !z.contains(g.commutator(x, y)) {
                return Err(Error::HypothesisViolated("B/(Z ∩ B) is not abelian".into()));
            }
        }
    }
    let zb = z.intersection(b);
    if b.order() / zb.order() % p as usize == 0 {
        return Err(Error::ActionNotCoprime(format!("p = {p} divides |B/(Z ∩ B)| = {}", b.order() / zb.order())));
    }
    let za = z.intersection(a);
    for &x in a.generators() {
        for &y in a.generators() {
            if !za.contains(g.commutator(x, y)) {
                return Err(Error::NotElementaryAbelian("A/(Z ∩ A) is not abelian".into()));
            }
        }
    }
    let rel_order = |x: Elem| -> u64 {
        let mut k = 1;
        let mut y = x;
        while !za.contains(y) {
            y = g.mul(y, x);
            k += 1;
        }
        k
    };
    let q = a.members().iter().map(|&x| rel_order(x)).max().unwrap_or(1);
    let e = if q == 1 { 0 } else { is_prime_power(q).map(|(_, e)| e).expect("p-group") };

    // greedy basis of the homocyclic quotient
    let mut basis: Vec<Elem> = Vec::new();
    let mut span = za.clone();
    while span.order() < a.order() {
        let next = a.members().iter().copied().find(|&x| {
            if rel_order(x) != q {
                return false;
            }
            let mut gens = span.generators().to_vec();
            gens.push(x);
            generated_subgroup(g, &gens).order() == span.order() * q as usize
        });
        let Some(x) = next else {
            return Err(Error::NotElementaryAbelian("A/(Z ∩ A) is not homocyclic".into()));
        };
        basis.push(x);
        let mut gens = span.generators().to_vec();
        gens.push(x);
        span = generated_subgroup(g, &gens);
    }
    let r = basis.len();
    let mut coords: Vec<Vec<u64>> = vec![Vec::new(); g.order()];
    let mut c = vec![0u64; r];
    loop {
        let w = word(g, &basis, &c);
        for &t in za.members() {
            coords[g.mul(w, t)] = c.clone();
        }
        let mut i = 0;
        while i < r {
            c[i] += 1;
            if c[i] < q {
                break;
            }
            c[i] = 0;
            i += 1;
        }
        if i == r {
            break;
        }
    }
    let rep = Representation { p, q, e, za, basis, coords };

    let (bg, bemb) = b.as_group("B");
    let mut local = vec![usize::MAX; g.order()];
    for (i, &x) in aemb.iter().enumerate() {
        local[x] = i;
    }
    let maps: Vec<Automorphism> = bemb
        .iter()
        .map(|&t| Automorphism::new(&ag, aemb.iter().map(|&x| local[g.conj(x, t)]).collect()))
        .collect::<Result<_>>()?;
    let action = ActionSpec::new(&bg, &ag, maps)?;
    Ok((rep, action))
}

/// Scales a block basis by a central `sigma` so that every member has order
/// dividing `q`. Returns the new basis and `sigma`; `sigma = 1` when the
/// basis already qualifies.
///
/// With `alpha_d^b = z prod alpha_j^{k_j}`, all `alpha_j^q` agree and
/// `sigma = z^{-e'}` with `e' (1 - sum k) = 1` works; an exhaustive search
/// over `Z ∩ A` is the fallback.
pub fn normalize_basis(g: &Group, za: &Subgroup, q: u64, alphas: &[Elem], z: Elem, k: &[u64]) -> Result<(Vec<Elem>, Elem)> {
    let ok = |s: Elem| alphas.iter().all(|&x| g.pow(g.mul(s, x), q as i64) == 0);
    let m = za.members().iter().map(|&x| g.element_order(x) as i64).max().unwrap_or(1);
    let ksum: i64 = k.iter().map(|&x| x as i64).sum();
    let mut sigma = ok(0).then_some(0);
    if sigma.is_none() {
        if let Some(ep) = mod_inverse((1 - ksum).rem_euclid(m.max(1)), m.max(1)) {
            let s = g.pow(z, -ep);
            if ok(s) {
                sigma = Some(s);
            }
        }
    }
    if sigma.is_none() {
        sigma = za.members().iter().copied().find(|&s| ok(s));
    }
    let s = sigma.ok_or_else(|| Error::NoCentralSolution("no central scalar gives order q".into()))?;
    Ok((alphas.iter().map(|&x| g.mul(s, x)).collect(), s))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaSolution {
    pub zeta: Vec<Elem>,
    /// Number of solutions found by the exhaustive sweep, when it ran.
    pub exhaustive_count: Option<usize>,
}

/// Solves, in the abelian group `Z ∩ A`,
///
/// `zeta_j zeta_{j+1}^-1 = z_j^2` for `j < d` and
/// `zeta_1^{-k_1} ... zeta_{d-1}^{-k_{d-1}} zeta_d^{1-k_d} = z_d^2`
///
/// by back substitution. When `|Z ∩ A| <= 125` the solution count is also
/// checked by brute force.
pub fn solve_zeta(g: &Group, za: &Subgroup, k: &[i64], zs: &[Elem]) -> Result<ZetaSolution> {
    let d = k.len();
    if d == 0 || zs.len() != d {
        return Err(Error::InvalidParameter("k and z must have the same positive length".into()));
    }
    if zs.iter().any(|&x| !za.contains(x)) {
        return Err(Error::NoCentralSolution("constants are not central".into()));
    }
    let m = za.members().iter().map(|&x| g.element_order(x) as i64).max().unwrap_or(1);
    let sq = |x: Elem| g.mul(x, x);
    let chain = |last: Elem| -> Vec<Elem> {
        // zeta_j = z_j^2 zeta_{j+1}
        let mut zeta = vec![0; d];
        zeta[d - 1] = last;
        for j in (0..d - 1).rev() {
            zeta[j] = g.mul(sq(zs[j]), zeta[j + 1]);
        }
        zeta
    };
    let lhs = |zeta: &[Elem]| -> Elem {
        let mut acc = g.pow(zeta[d - 1], 1 - k[d - 1]);
        for j in 0..d - 1 {
            acc = g.mul(acc, g.pow(zeta[j], -k[j]));
        }
        acc
    };
    let satisfies = |zeta: &[Elem]| -> bool {
        (0..d - 1).all(|j| g.mul(zeta[j], g.inv(zeta[j + 1])) == sq(zs[j])) && lhs(zeta) == sq(zs[d - 1])
    };
    // with zeta_d = 1 the chain gives the constant part; the last equation
    // is then (1 - sum k) zeta_d = rhs additively
    let base = chain(0);
    let rhs = g.mul(sq(zs[d - 1]), g.inv(lhs(&base)));
    let ksum: i64 = k.iter().sum();
    let inv = mod_inverse((1 - ksum).rem_euclid(m.max(1)), m.max(1));
    let zeta = inv.map(|e| {
        let last = g.pow(rhs, e);
        chain(last)
    });
    let exhaustive_count = (za.order() <= EXHAUSTIVE_CENTER_LIMIT).then(|| {
        let full = (za.order() as f64).powi(d as i32) <= FULL_SWEEP_LIMIT as f64;
        if full {
            let mut count = 0;
            let mut idx = vec![0usize; d];
            loop {
                let cand: Vec<Elem> = idx.iter().map(|&i| za.members()[i]).collect();
                if satisfies(&cand) {
                    count += 1;
                }
                let mut i = 0;
                while i < d {
                    idx[i] += 1;
                    if idx[i] < za.order() {
                        break;
                    }
                    idx[i] = 0;
                    i += 1;
                }
                if i == d {
                    break count;
                }
            }
        } else {
            za.members().iter().filter(|&&t| satisfies(&chain(t))).count()
        }
    });
    match (zeta, exhaustive_count) {
        (_, Some(c)) if c > 1 => Err(Error::NonUniqueSolution { count: c }),
        (_, Some(0)) => Err(Error::NoSolution),
        (Some(z), _) if satisfies(&z) => Ok(ZetaSolution { zeta: z, exhaustive_count }),
        _ => Err(Error::NoSolution),
    }
}

/// One nontrivial block of the construction.
#[derive(Debug, Clone)]
pub struct BlockData {
    /// The element `b_i` of `B` acting in companion form on the block.
    pub acting: Elem,
    /// Normalized basis `a_1, ..., a_d`, each of order dividing `q`.
    pub basis: Vec<Elem>,
    pub sigma: Elem,
    /// `a_d^{b_i} = z prod a_j^{k_j}` with `k_j` taken mod `q`.
    pub k: Vec<u64>,
    /// Central constants `z_j` of the linear system solved by [`solve_zeta`].
    pub z: Vec<Elem>,
    pub zeta: Vec<Elem>,
    pub exhaustive_count: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct InvolutionCertificate {
    pub automorphism: Automorphism,
    /// The restriction to `A`, indexed by positions in `A.members()`.
    pub on_a: Automorphism,
    pub blocks: Vec<BlockData>,
    /// Representatives of the trivial blocks; fixed by the involution.
    pub fixed: Vec<Elem>,
    pub decomposition: BlockDecomposition,
}

/// Builds an involution of `G` that inverts `A/(Z ∩ A)` on the nontrivial
/// blocks and fixes `Z` and `B` pointwise.
pub fn build_involution(problem: &ExtensionProblem) -> Result<InvolutionCertificate> {
    let g = &problem.g;
    let (rep, _) = induced_action(problem)?;
    let za = rep.za.clone();
    let (p, q) = (rep.p, rep.q);
    if rep.rank() == 0 {
        return Err(Error::TrivialAction);
    }
    let bgens: Vec<Elem> = problem.b.generators().to_vec();
    let mats: Vec<FpMatrix> = bgens.iter().map(|&b| rep.matrix_mod_p(g, b)).collect();
    if mats.iter().all(FpMatrix::is_identity) {
        return Err(Error::TrivialAction);
    }
    let dec = decompose(&mats)?;
    if rep.e > 1 && !(dec.blocks.len() == 1 && !dec.blocks[0].trivial) {
        return Err(Error::HypothesisViolated(
            "A/(Z ∩ A) has exponent above p and the action is not irreducible".into(),
        ));
    }
    let lift = |v: &[u64]| rep.lift(g, v);

    let mut blocks: Vec<BlockData> = Vec::new();
    let mut fixed: Vec<Elem> = Vec::new();
    for block in &dec.blocks {
        if block.trivial {
            fixed.extend(block.basis.iter().map(|v| lift(v)));
            continue;
        }
        let target = &dec.group[block.generator];
        let bi = problem
            .b
            .members()
            .iter()
            .copied()
            .find(|&b| rep.matrix_mod_p(g, b) == *target)
            .expect("matrix group is generated by B");
        let m = rep.matrix_mod_p(g, bi);
        cyclic_basis(&m, &block.basis)?;
        let d = block.dim;
        let mut alphas = vec![lift(&block.basis[0])];
        for _ in 1..d {
            let last = *alphas.last().expect("nonempty");
            alphas.push(g.conj(last, bi));
        }
        let image = g.conj(alphas[d - 1], bi);
        let rows: Vec<Vec<u64>> = alphas.iter().map(|&x| rep.coordinates(x).to_vec()).collect();
        let k = solve_left_mod(&rows, rep.coordinates(image), q, p)
            .ok_or_else(|| Error::CertificateInvalid("block is not invariant".into()))?;
        let z = g.mul(image, g.inv(word(g, &alphas, &k)));
        if !za.contains(z) {
            return Err(Error::CertificateInvalid("companion relation leaves Z ∩ A".into()));
        }
        let (basis, sigma) = normalize_basis(g, &za, q, &alphas, z, &k)?;
        blocks.push(BlockData {
            acting: bi,
            basis,
            sigma,
            k,
            z: Vec::new(),
            zeta: Vec::new(),
            exhaustive_count: None,
        });
    }

    // elements of trivial blocks commute with those of nontrivial ones
    for &f in &fixed {
        for blk in &blocks {
            if blk.basis.iter().any(|&x| g.commutator(f, x) != 0) {
                return Err(Error::CertificateInvalid("trivial block does not commute".into()));
            }
        }
    }

    let us: Vec<Elem> = blocks.iter().flat_map(|b| b.basis.iter().copied()).chain(fixed.iter().copied()).collect();
    let nontrivial = us.len() - fixed.len();
    let urows: Vec<Vec<u64>> = us.iter().map(|&x| rep.coordinates(x).to_vec()).collect();
    let nf = NormalForm::new(g, &problem.a, &rep, &us, &urows)?;

    let base_images: Vec<Elem> =
        us.iter().enumerate().map(|(i, &u)| if i < nontrivial { g.inv(u) } else { u }).collect();
    let phi1 = |x: Elem| nf.evaluate(g, x, &base_images);
    let mut offset = 0;
    let m = za.members().iter().map(|&x| g.element_order(x) as i64).max().unwrap_or(1);
    let mut images = base_images.clone();
    for blk in &mut blocks {
        let bi = blk.acting;
        let mut zs = Vec::new();
        for &u in &blk.basis {
            let w = g.mul(g.inv(phi1(g.conj(u, bi))), g.conj(phi1(u), bi));
            if !za.contains(w) {
                return Err(Error::CertificateInvalid("defect is not central".into()));
            }
            zs.push(g.pow(g.inv(w), (m + 1) / 2));
        }
        let k: Vec<i64> = blk.k.iter().map(|&x| x as i64).collect();
        let sol = solve_zeta(g, &za, &k, &zs)?;
        for (j, &t) in sol.zeta.iter().enumerate() {
            images[offset + j] = g.mul(t, g.inv(blk.basis[j]));
        }
        offset += blk.basis.len();
        blk.z = zs;
        blk.zeta = sol.zeta;
        blk.exhaustive_count = sol.exhaustive_count;
    }

    let members = problem.a.members();
    let mut local = vec![usize::MAX; g.order()];
    for (i, &x) in members.iter().enumerate() {
        local[x] = i;
    }
    let on_a_global: Vec<Elem> = members.iter().map(|&x| nf.evaluate(g, x, &images)).collect();
    let (ag, _) = problem.a.as_group("A");
    let on_a = Automorphism::new(&ag, on_a_global.iter().map(|&y| local[y]).collect())
        .map_err(|_| Error::CertificateInvalid("map on A is not an automorphism".into()))?;
    if on_a.order() != 2 {
        return Err(Error::CertificateInvalid(format!("map on A has order {}", on_a.order())));
    }
    if za.members().iter().any(|&x| on_a_global[local[x]] != x) {
        return Err(Error::CertificateInvalid("Z ∩ A is not fixed".into()));
    }
    let automorphism = extend_fixing_complement(g, &problem.a, &problem.b, &on_a)?;
    if problem.z.members().iter().any(|&x| automorphism.apply(x) != x) {
        return Err(Error::CertificateInvalid("Z is not fixed".into()));
    }
    Ok(InvolutionCertificate { automorphism, on_a, blocks, fixed, decomposition: dec })
}

struct NormalForm {
    q: u64,
    p: u64,
    rows: Vec<Vec<u64>>,
    coords: Vec<Vec<u64>>,
    us: Vec<Elem>,
}

impl NormalForm {
    fn new(g: &Group, a: &Subgroup, rep: &Representation, us: &[Elem], rows: &[Vec<u64>]) -> Result<NormalForm> {
        let mut coords = vec![Vec::new(); g.order()];
        for &x in a.members() {
            coords[x] = solve_left_mod(rows, rep.coordinates(x), rep.q, rep.p)
                .ok_or_else(|| Error::CertificateInvalid("block bases do not span A/(Z ∩ A)".into()))?;
        }
        Ok(NormalForm { q: rep.q, p: rep.p, rows: rows.to_vec(), coords, us: us.to_vec() })
    }

    /// Writes `x = t u_1^{c_1} ... u_n^{c_n}` with `t` central and returns
    /// `t v_1^{c_1} ... v_n^{c_n}`.
    fn evaluate(&self, g: &Group, x: Elem, images: &[Elem]) -> Elem {
        let c = &self.coords[x];
        debug_assert_eq!(c.len(), self.rows.len());
        debug_assert!(self.q % self.p == 0);
        let t = g.mul(x, g.inv(word(g, &self.us, c)));
        g.mul(t, word(g, images, c))
    }
}

/// The automorphism of `A` sending `gens[i]` to `images[i]`, indexed by
/// positions in `A.members()`.
pub fn automorphism_from_images(a: &Subgroup, gens: &[Elem], images: &[Elem]) -> Result<Automorphism> {
    let g = a.parent();
    if gens.len() != images.len() {
        return Err(Error::InvalidParameter("generator and image lists differ in length".into()));
    }
    if let Some(&x) = gens.iter().chain(images).find(|&&x| !a.contains(x)) {
        return Err(Error::InvalidParameter(format!("element {x} is not in A")));
    }
    if generated_subgroup(g, gens).order() != a.order() {
        return Err(Error::InvalidParameter("generators do not generate A".into()));
    }
    let mut img = vec![usize::MAX; g.order()];
    img[0] = 0;
    let mut queue = vec![0];
    while let Some(x) = queue.pop() {
        for (&s, &t) in gens.iter().zip(images) {
            let (y, v) = (g.mul(x, s), g.mul(img[x], t));
            if img[y] == usize::MAX {
                img[y] = v;
                queue.push(y);
            } else if img[y] != v {
                return Err(Error::NotAHomomorphism("generator images".into()));
            }
        }
    }
    let members = a.members();
    let mut local = vec![usize::MAX; g.order()];
    for (i, &x) in members.iter().enumerate() {
        local[x] = i;
    }
    let (sub, _) = a.as_group("A");
    let on_a: Vec<usize> = members.iter().map(|&x| local[img[x]]).collect();
    Automorphism::new(&sub, on_a).map_err(|_| Error::NotAHomomorphism("generator images".into()))
}

/// Extends an automorphism of the normal subgroup `A` to `G = AB` by
/// `ab -> (a phi) b`. `phi` is indexed by positions in `A.members()`; it must
/// be trivial on `A ∩ B` and commute with conjugation by every element of `B`.
pub fn extend_fixing_complement(g: &Group, a: &Subgroup, b: &Subgroup, phi: &Automorphism) -> Result<Automorphism> {
    let members = a.members();
    if phi.len() != members.len() {
        return Err(Error::InvalidParameter("map does not match |A|".into()));
    }
    if !a.is_normal() {
        return Err(Error::NotNormal);
    }
    let mut local = vec![usize::MAX; g.order()];
    for (i, &x) in members.iter().enumerate() {
        local[x] = i;
    }
    let image = |x: Elem| members[phi.apply(local[x])];
    if a.intersection(b).members().iter().any(|&x| image(x) != x) {
        return Err(Error::NotTrivialOnIntersection);
    }
    for &t in b.generators() {
        if members.iter().any(|&x| image(g.conj(x, t)) != g.conj(image(x), t)) {
            return Err(Error::DoesNotCommuteWithAction);
        }
    }
    let mut out = vec![usize::MAX; g.order()];
    for &t in b.members() {
        for &x in members {
            let y = g.mul(x, t);
            let v = g.mul(image(x), t);
            if out[y] == usize::MAX {
                out[y] = v;
            } else if out[y] != v {
                return Err(Error::NotWellDefined);
            }
        }
    }
    if out.contains(&usize::MAX) {
        return Err(Error::HypothesisViolated("G is not the product AB".into()));
    }
    Automorphism::new(g, out).map_err(|_| Error::NotAHomomorphism("extended map".into()))
}

/// Extends inversion on an abelian normal subgroup `A` with a complement
/// `B` to an involution of `G`.
pub fn extend_inversion(g: &Group, a: &Subgroup, b: &Subgroup) -> Result<Automorphism> {
    if !a.is_abelian() {
        return Err(Error::NotAbelian);
    }
    if !a.intersection(b).is_trivial() {
        return Err(Error::HypothesisViolated("A ∩ B is not trivial".into()));
    }
    if a.order() * b.order() != g.order() {
        return Err(Error::HypothesisViolated("G is not the product AB".into()));
    }
    if a.members().iter().all(|&x| g.element_order(x) <= 2) {
        return Err(Error::ExponentTwo);
    }
    let (ag, _) = a.as_group("A");
    let inv = Automorphism::inversion(&ag)?;
    extend_fixing_complement(g, a, b, &inv)
}

/// Checks a certificate against `G` from scratch: automorphism of order 2,
/// fixing `Z(G)` and `B` pointwise and mapping `A` onto itself as recorded.
pub fn verify_certificate(problem: &ExtensionProblem, cert: &InvolutionCertificate) -> Result<()> {
    let g = &problem.g;
    let f = &cert.automorphism;
    let fail = |m: &str| Err(Error::CertificateInvalid(m.into()));
    if !f.verify_on(g) {
        return fail("not an automorphism");
    }
    if f.order() != 2 {
        return fail("order is not 2");
    }
    if problem.z.members().iter().any(|&x| f.apply(x) != x) || problem.b.members().iter().any(|&x| f.apply(x) != x) {
        return fail("Z or B is not fixed");
    }
    let members = problem.a.members();
    for (i, &x) in members.iter().enumerate() {
        if f.apply(x) != members[cert.on_a.apply(i)] {
            return fail("restriction to A disagrees");
        }
    }
    for blk in &cert.blocks {
        for (&x, &t) in blk.basis.iter().zip(&blk.zeta) {
            if f.apply(x) != g.mul(t, g.inv(x)) {
                return fail("basis element not mapped to zeta a^-1");
            }
        }
    }
    if cert.fixed.iter().any(|&x| f.apply(x) != x) {
        return fail("trivial block moved");
    }
    Ok(())
}

/// The Frattini subgroup `Φ(A) = A^p A'` of a `p`-group and elements whose
/// cosets form a basis of `A/Φ(A)`.
pub fn frattini_basis(a: &Group) -> Result<(Subgroup, Vec<Elem>)> {
    let (p, _) = is_prime_power(a.order() as u64)
        .ok_or_else(|| Error::InvalidParameter(format!("order {} is not a prime power", a.order())))?;
    let mut gens: Vec<Elem> = a.elements().map(|x| a.pow(x, p as i64)).collect();
    gens.extend(derived_subgroup(a).generators());
    gens.sort_unstable();
    gens.dedup();
    let phi = generated_subgroup(a, &gens);
    let mut basis = Vec::new();
    let mut span = phi.clone();
    for x in a.elements() {
        if span.order() == a.order() {
            break;
        }
        if span.contains(x) {
            continue;
        }
        let mut g = span.generators().to_vec();
        g.push(x);
        span = generated_subgroup(a, &g);
        basis.push(x);
    }
    Ok((phi, basis))
}

/// An automorphism of the `p`-group `A` inducing `m` on `A/Φ(A)` (in the
/// basis of [`frattini_basis`]) whose order equals the order of `m`.
pub fn lift_matrix(a: &Group, m: &FpMatrix, budget: u64) -> Result<Automorphism> {
    let (phi, basis) = frattini_basis(a)?;
    let p = m.p();
    if a.order() > 1 && is_prime_power(a.order() as u64).map(|(q, _)| q) != Some(p) {
        return Err(Error::InvalidParameter(format!("|A| = {} is not a power of {p}", a.order())));
    }
    if basis.len() != m.dim() {
        return Err(Error::InvalidParameter(format!(
            "matrix has dimension {} but A/Φ(A) has rank {}",
            m.dim(),
            basis.len()
        )));
    }
    let target = crate::linalg::matrix_order(m)? as usize;
    let cands: Vec<Vec<Elem>> = (0..basis.len())
        .map(|i| {
            let w = word(a, &basis, m.row(i));
            phi.members().iter().map(|&t| a.mul(w, t)).collect()
        })
        .collect();
    let mut found = None;
    crate::aut::enumerate_restricted(a, &basis, &cands, budget, |img| {
        let f = Automorphism::from_raw(img.to_vec());
        if f.order() == target {
            found = Some(f);
            std::ops::ControlFlow::Break(())
        } else {
            std::ops::ControlFlow::Continue(())
        }
    })?;
    found.ok_or_else(|| Error::InvalidParameter(format!("no automorphism of order {target} lifts the matrix")))
}

/// The automorphism `v -> v M` of `abelian(&[q; n])`, with `M` given by its
/// rows over `Z/q`.
pub fn linear_automorphism(a: &Group, q: usize, rows: &[Vec<i64>]) -> Result<Automorphism> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) || q.checked_pow(n as u32) != Some(a.order()) {
        return Err(Error::InvalidParameter("matrix does not match the group".into()));
    }
    let qi = q as i64;
    let images = (0..a.order())
        .map(|x| {
            let mut c = vec![0i64; n];
            let mut y = x;
            for i in (0..n).rev() {
                c[i] = (y % q) as i64;
                y /= q;
            }
            (0..n).fold(0usize, |acc, j| {
                let v = (0..n).map(|i| c[i] * rows[i][j]).sum::<i64>().rem_euclid(qi);
                acc * q + v as usize
            })
        })
        .collect();
    Automorphism::new(a, images)
}
