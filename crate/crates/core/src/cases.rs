//! Arithmetic case analysis for odd automorphism-group orders below `3^7`,
//! with an audit trail for every decision, plus property sweeps over a group
//! catalog.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rayon::prelude::*;

use crate::abelian::{abelian_direct_factor, abelian_invariants, central_automorphism_count, hom_count};
use crate::arith::{divisors, factorize, is_prime_power, valuation};
use crate::aut::{automorphism_group, AutGroup};
use crate::error::{Error, Result};
use crate::group::{quotient, Automorphism, Elem, Group, Subgroup};
use crate::linalg::gl_order;
use crate::structure::{
    center, central_characteristic_subgroup, central_quotient_profile, characteristic_elementary_abelian,
    derived_subgroup, find_complement, normal_subgroups, sylow, ComplementSearch,
};

pub const GOLDEN_AUT_ORDERS: &str = include_str!("../golden/aut_orders.txt");
pub const GOLDEN_QUOTIENT_ORDERS: &str = include_str!("../golden/quotient_orders.txt");
pub const GOLDEN_TABLE: &str = include_str!("../golden/table.txt");
pub const GOLDEN_OMITTED: &str = include_str!("../golden/omitted.txt");

pub const AUT_BOUND: u64 = 2187;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberProfile {
    pub n: u64,
    pub factorization: Vec<(u64, u32)>,
    pub big_omega: u32,
    pub small_omega: usize,
}

impl NumberProfile {
    pub fn primes(&self) -> Vec<u64> {
        self.factorization.iter().map(|&(p, _)| p).collect()
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factorization.iter().find(|&&(q, _)| q == p).map_or(0, |&(_, e)| e)
    }
}

pub fn number_profile(n: u64) -> Result<NumberProfile> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let factorization = factorize(n);
    Ok(NumberProfile {
        n,
        big_omega: factorization.iter().map(|&(_, e)| e).sum(),
        small_omega: factorization.len(),
        factorization,
    })
}

/// A named filter rule and the fact it encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rule {
    pub id: &'static str,
    pub statement: &'static str,
}

pub const R1_ODD: Rule = Rule { id: "R1", statement: "an automorphism group of odd order has odd order" };
pub const R2_OMEGA: Rule = Rule {
    id: "R2",
    statement: "if Ω(|Aut(G)|) <= 4 then |Aut(G)| is even (cited classification of small cases)",
};
pub const R3_NOT_P_GROUP: Rule = Rule {
    id: "R3",
    statement: "an odd-order Aut(G) below 3^7 is not a p-group: G/Z would be a p-group, G nilpotent, \
                and odd p-groups with p-group automorphism groups have |Aut| >= 3^7 or p^6",
};
pub const Q0_DIVIDES: Rule = Rule {
    id: "Q0",
    statement: "G/Z embeds in Aut(G), so |G/Z| > 1 divides a surviving automorphism-group order",
};
pub const Q1_NOT_P_GROUP: Rule = Rule {
    id: "Q1",
    statement: "if G/Z is a p-group then G is nilpotent and Aut(G) is the product of the Sylow \
                automorphism groups, which the p-group bound rules out below 3^7",
};
pub const Q2_NOT_SQUAREFREE: Rule = Rule {
    id: "Q2",
    statement: "a group of squarefree order has a normal Sylow subgroup of prime order; its \
                preimage gives a normal abelian Sylow subgroup of G, complemented, so inversion extends",
};
pub const Q3_NO_FORCED_PRIME: Rule = Rule {
    id: "Q3",
    statement: "if p exactly divides |G/Z| and n_p = 1 is forced by n_p = 1 mod p, n_p | |G/Z|/p, \
                then G has a normal abelian Sylow p-subgroup with a complement and inversion extends",
};
pub const T1_SYLOW_COUNT: Rule = Rule {
    id: "T1",
    statement: "n_p = 1 mod p and n_p divides the p'-part of |G/Z|; if 1 is the only such divisor \
                the Sylow p-subgroup is normal",
};
pub const T2_ELEMENT_COUNT: Rule = Rule {
    id: "T2",
    statement: "no normal subgroup of prime order q forces at least min{m > 1 : m | |G/Z|/q, m = 1 mod q} \
                Sylow q-subgroups; the elements left over cannot hold two Sylow p-subgroups of order P \
                (which need 2P - P/p elements)",
};
pub const T3_CHARACTERISTIC: Rule = Rule {
    id: "T3",
    statement: "an odd-order group has a characteristic elementary abelian subgroup; descend through \
                such subgroups, discarding branches where a prime-order Sylow becomes normal, until \
                some full Sylow subgroup is forced normal",
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Reject,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditEntry {
    pub rule: Rule,
    pub verdict: Verdict,
    pub justification: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateOrder {
    pub profile: NumberProfile,
    pub audit: Vec<AuditEntry>,
}

impl CandidateOrder {
    pub fn n(&self) -> u64 {
        self.profile.n
    }

    pub fn survives(&self) -> bool {
        self.audit.iter().all(|a| a.verdict == Verdict::Pass)
    }
}

fn entry(rule: Rule, pass: bool, justification: String) -> AuditEntry {
    AuditEntry { rule, verdict: if pass { Verdict::Pass } else { Verdict::Reject }, justification }
}

/// Runs the automorphism-order rules on one `n`, stopping at the first
/// rejection.
pub fn audit_aut_order(n: u64) -> Result<CandidateOrder> {
    let profile = number_profile(n)?;
    let mut audit = vec![entry(R1_ODD, n % 2 == 1, format!("{n} is {}", if n % 2 == 1 { "odd" } else { "even" }))];
    if n % 2 == 1 {
        let om = profile.big_omega;
        audit.push(entry(R2_OMEGA, om >= 5, format!("Ω({n}) = {om}")));
        if om >= 5 {
            let pp = is_prime_power(n);
            audit.push(entry(
                R3_NOT_P_GROUP,
                pp.is_none(),
                match pp {
                    Some((p, e)) => format!("{n} = {p}^{e}"),
                    None => format!("{n} has {} distinct primes", profile.small_omega),
                },
            ));
        }
    }
    Ok(CandidateOrder { profile, audit })
}

/// The surviving orders `1 < n < bound`, ascending.
pub fn candidate_aut_orders(bound: u64) -> Vec<CandidateOrder> {
    (2..bound).map(|n| audit_aut_order(n).expect("positive")).filter(CandidateOrder::survives).collect()
}

/// `n_p = 1` is forced for a group of order `k`: no divisor `m > 1` of the
/// `p'`-part of `k` is `1 mod p`.
pub fn sylow_forced(k: u64, p: u64) -> bool {
    let m = k / p.pow(valuation(k, p));
    !divisors(m).into_iter().any(|x| x > 1 && x % p == 1)
}

pub fn audit_quotient_order(d: u64, aut_orders: &[u64]) -> Result<CandidateOrder> {
    let profile = number_profile(d)?;
    let host = aut_orders.iter().find(|&&n| d > 1 && n % d == 0);
    let mut audit = vec![entry(
        Q0_DIVIDES,
        host.is_some(),
        match host {
            Some(n) => format!("{d} divides {n}"),
            None => format!("{d} divides no candidate"),
        },
    )];
    if host.is_none() {
        return Ok(CandidateOrder { profile, audit });
    }
    let pp = is_prime_power(d);
    audit.push(entry(Q1_NOT_P_GROUP, pp.is_none(), match pp {
        Some((p, e)) => format!("{d} = {p}^{e}"),
        None => format!("{d} is not a prime power"),
    }));
    if pp.is_some() {
        return Ok(CandidateOrder { profile, audit });
    }
    let squarefree = profile.factorization.iter().all(|&(_, e)| e == 1);
    audit.push(entry(Q2_NOT_SQUAREFREE, !squarefree, format!("{d} is {}squarefree", if squarefree { "" } else { "not " })));
    if squarefree {
        return Ok(CandidateOrder { profile, audit });
    }
    let forced: Vec<u64> =
        profile.factorization.iter().filter(|&&(p, e)| e == 1 && sylow_forced(d, p)).map(|&(p, _)| p).collect();
    audit.push(entry(
        Q3_NO_FORCED_PRIME,
        forced.is_empty(),
        if forced.is_empty() {
            "no prime-order Sylow subgroup is forced normal".into()
        } else {
            format!("n_{} = 1 is forced", forced[0])
        },
    ));
    Ok(CandidateOrder { profile, audit })
}

/// All divisors of the automorphism candidates that survive the quotient
/// rules, ascending.
pub fn candidate_quotient_orders(aut: &[CandidateOrder]) -> Vec<CandidateOrder> {
    let hosts: Vec<u64> = aut.iter().map(CandidateOrder::n).collect();
    let ds: BTreeSet<u64> = hosts.iter().flat_map(|&n| divisors(n)).filter(|&d| d > 1).collect();
    ds.into_iter()
        .map(|d| audit_quotient_order(d, &hosts).expect("positive"))
        .filter(CandidateOrder::survives)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub i: u32,
    pub p: u64,
    pub quotient_orders: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// The Sylow `p`-subgroup, of order `p^i`, is forced normal.
    Normal { i: u32, p: u64, rule: Rule, justification: String },
    /// One of several Sylow subgroups is normal, but not a fixed one.
    Ambiguous { options: Vec<(u32, u64)> },
    /// Either some Sylow subgroup is normal or a descent ends without one.
    Exceptional { options: Vec<(u32, u64)> },
}

fn direct_rule(d: u64) -> Vec<(u32, u64)> {
    factorize(d).into_iter().filter(|&(p, e)| e >= 2 && sylow_forced(d, p)).map(|(p, e)| (e, p)).collect()
}

fn element_count_rule(d: u64) -> Vec<(u32, u64, String)> {
    let f = factorize(d);
    let mut out = Vec::new();
    for &(q, e) in &f {
        if e != 1 {
            continue;
        }
        let Some(nq) = divisors(d / q).into_iter().find(|&x| x > 1 && x % q == 1) else { continue };
        let rest = d - nq * (q - 1);
        for &(p, ep) in &f {
            if p == q || ep < 2 {
                continue;
            }
            let big = p.pow(ep);
            if rest < 2 * big - big / p {
                out.push((ep, p, format!(
                    "n_{q} >= {nq} leaves {rest} elements, fewer than {} needed for two Sylow {p}-subgroups",
                    2 * big - big / p
                )));
            }
        }
    }
    out
}

#[derive(Debug, Default)]
struct Descent {
    found: BTreeSet<(u32, u64)>,
    unresolved: bool,
}

/// Walks chains `1 < K_1 < K_2 < ...` of orders of characteristic subgroups,
/// each step a prime-power extension. A prime `r` whose Sylow subgroup is
/// forced normal in `K` with the full `r`-part of `d` gives a normal Sylow
/// subgroup of `G/Z`; for a prime-order Sylow that is excluded by assumption,
/// so the branch dies.
fn explore(d: u64, excluded: &BTreeSet<u64>, k: u64, out: &mut Descent, seen: &mut HashSet<u64>) {
    if !seen.insert(k) {
        return;
    }
    let rest = d / k;
    for (q, e) in factorize(rest) {
        for j in 1..=e {
            let kk = k * q.pow(j);
            let mut dead = false;
            let mut hits = Vec::new();
            for (r, _) in factorize(kk) {
                if sylow_forced(kk, r) && valuation(kk, r) == valuation(d, r) {
                    if excluded.contains(&r) {
                        dead = true;
                    } else {
                        hits.push((valuation(d, r), r));
                    }
                }
            }
            if dead {
                continue;
            }
            if !hits.is_empty() {
                out.found.extend(hits);
                continue;
            }
            if kk == d {
                out.unresolved = true;
                continue;
            }
            explore(d, excluded, kk, out, seen);
        }
    }
}

pub fn classify_quotient_order(d: u64) -> Classification {
    let direct = direct_rule(d);
    if let Some(&(i, p)) = direct.first() {
        return Classification::Normal {
            i,
            p,
            rule: T1_SYLOW_COUNT,
            justification: format!("the only divisor of {} that is 1 mod {p} is 1", d / p.pow(i)),
        };
    }
    if let Some((i, p, why)) = element_count_rule(d).into_iter().next() {
        return Classification::Normal { i, p, rule: T2_ELEMENT_COUNT, justification: why };
    }
    let excluded: BTreeSet<u64> = factorize(d).into_iter().filter(|&(_, e)| e == 1).map(|(p, _)| p).collect();
    let mut out = Descent::default();
    explore(d, &excluded, 1, &mut out, &mut HashSet::new());
    let options: Vec<(u32, u64)> = out.found.iter().copied().collect();
    match (options.len(), out.unresolved) {
        (1, false) => {
            let (i, p) = options[0];
            Classification::Normal {
                i,
                p,
                rule: T3_CHARACTERISTIC,
                justification: format!("every descent ends with the Sylow {p}-subgroup normal"),
            }
        }
        (n, _) if n >= 2 => Classification::Ambiguous { options },
        _ => Classification::Exceptional { options },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylowTable {
    pub rows: Vec<TableRow>,
    /// Orders not placed in the table, with the reason.
    pub omitted: Vec<(u64, Classification)>,
    /// Per placed order, the rule and justification used.
    pub audit: Vec<(u64, Classification)>,
}

/// Places each quotient order in the row `(i, p)` of its forced normal Sylow
/// subgroup. Rows are sorted by `(i, p)`, orders within a row by rule and then
/// size.
pub fn normal_sylow_table(quotients: &[CandidateOrder]) -> SylowTable {
    let mut by_row: BTreeMap<(u32, u64), Vec<(&'static str, u64)>> = BTreeMap::new();
    let mut omitted = Vec::new();
    let mut audit = Vec::new();
    for c in quotients {
        let d = c.n();
        let cls = classify_quotient_order(d);
        match &cls {
            Classification::Normal { i, p, rule, .. } => {
                by_row.entry((*i, *p)).or_default().push((rule.id, d));
                audit.push((d, cls));
            }
            _ => omitted.push((d, cls)),
        }
    }
    let rows = by_row
        .into_iter()
        .map(|((i, p), mut v)| {
            v.sort_unstable();
            TableRow { i, p, quotient_orders: v.into_iter().map(|(_, d)| d).collect() }
        })
        .collect();
    SylowTable { rows, omitted, audit }
}

fn parse_numbers(text: &str) -> Vec<u64> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .filter_map(|l| l.parse().ok())
        .collect()
}

pub fn golden_aut_orders() -> Vec<u64> {
    parse_numbers(GOLDEN_AUT_ORDERS)
}

pub fn golden_quotient_orders() -> Vec<u64> {
    parse_numbers(GOLDEN_QUOTIENT_ORDERS)
}

pub fn golden_omitted() -> Vec<u64> {
    parse_numbers(GOLDEN_OMITTED)
}

pub fn golden_table() -> Vec<TableRow> {
    GOLDEN_TABLE
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let v: Vec<u64> = l.split_whitespace().map(|x| x.parse().expect("golden table")).collect();
            TableRow { i: v[0] as u32, p: v[1], quotient_orders: v[2..].to_vec() }
        })
        .collect()
}

/// Set comparison of a derived list against golden data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListDiff {
    pub expected: usize,
    pub matched: usize,
    pub missing: Vec<u64>,
    pub extra: Vec<u64>,
}

impl ListDiff {
    pub fn new(derived: &[u64], golden: &[u64]) -> ListDiff {
        let d: BTreeSet<u64> = derived.iter().copied().collect();
        let g: BTreeSet<u64> = golden.iter().copied().collect();
        ListDiff {
            expected: g.len(),
            matched: d.intersection(&g).count(),
            missing: g.difference(&d).copied().collect(),
            extra: d.difference(&g).copied().collect(),
        }
    }

    pub fn is_match(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }

    pub fn into_result(self, what: &str) -> Result<ListDiff> {
        if self.is_match() {
            Ok(self)
        } else {
            Err(Error::RuleSetIncomplete(format!("{what}: missing {:?}, extra {:?}", self.missing, self.extra)))
        }
    }
}

/// Compares derived rows with the golden table as sets of `(i, p, order)`.
pub fn table_diff(derived: &[TableRow], golden: &[TableRow]) -> (usize, Vec<String>) {
    let flat = |rows: &[TableRow]| -> BTreeSet<(u32, u64, u64)> {
        rows.iter().flat_map(|r| r.quotient_orders.iter().map(move |&d| (r.i, r.p, d))).collect()
    };
    let (d, g) = (flat(derived), flat(golden));
    let mut problems: Vec<String> =
        g.difference(&d).map(|(i, p, n)| format!("missing {n} in row ({i}, {p})")).collect();
    problems.extend(d.difference(&g).map(|(i, p, n)| format!("unexpected {n} in row ({i}, {p})")));
    (d.intersection(&g).count(), problems)
}

/// A divisibility fact about orders used when reducing the table cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderFact {
    pub statement: String,
    pub holds: bool,
}

/// `5 ∤ |GL(i,3)|` for `i < 4`, `3 ∤ |GL(1,5)|`, `13 ∤ |GL(2,3)|`, and
/// `3 ∥ |Aut(C25 x C25)|`.
pub fn reduction_facts(aut_c25_squared: &num_bigint::BigUint) -> Result<Vec<OrderFact>> {
    let divides = |p: u32, n: &num_bigint::BigUint| (n % p) == num_bigint::BigUint::from(0u32);
    let mut facts = Vec::new();
    for i in 1..4 {
        let o = gl_order(i, 3)?;
        facts.push(OrderFact { statement: format!("5 does not divide |GL({i},3)| = {o}"), holds: !divides(5, &o) });
    }
    let o = gl_order(1, 5)?;
    facts.push(OrderFact { statement: format!("3 does not divide |GL(1,5)| = {o}"), holds: !divides(3, &o) });
    let o = gl_order(2, 3)?;
    facts.push(OrderFact { statement: format!("13 does not divide |GL(2,3)| = {o}"), holds: !divides(13, &o) });
    let a = aut_c25_squared;
    facts.push(OrderFact {
        statement: format!("3 exactly divides |Aut(C25 x C25)| = {a}"),
        holds: divides(3, a) && !divides(9, a),
    });
    Ok(facts)
}

/// `|G/Z| = 3^4 * 13`, `G/Z` centerless, `3 | |G/G'|`, and `G` has a normal
/// elementary abelian subgroup of order 27 with a nonabelian complement of
/// order 39.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionalShape {
    pub quotient_order: usize,
    pub quotient_centerless: bool,
    pub three_divides_abelianization: bool,
    pub split: Option<(Subgroup, Subgroup)>,
}

impl ExceptionalShape {
    pub fn holds(&self) -> bool {
        self.quotient_order == 1053 && self.quotient_centerless && self.three_divides_abelianization && self.split.is_some()
    }
}

pub fn exceptional_shape(g: &Group, budget: u64) -> Result<ExceptionalShape> {
    let z = center(g);
    let (q, _) = quotient(g, &z)?;
    let quotient_centerless = center(&q).is_trivial();
    let three_divides_abelianization = (g.order() / derived_subgroup(g).order()) % 3 == 0;
    let mut split = None;
    if q.order() == 1053 {
        for n in normal_subgroups(g, 100_000)? {
            if n.order() != 27 || !n.is_abelian() || n.members().iter().any(|&x| x != 0 && g.element_order(x) != 3) {
                continue;
            }
            if let ComplementSearch::Found(b) = find_complement(g, &n, budget)? {
                if b.order() == 39 && !b.is_abelian() {
                    split = Some((n, b));
                    break;
                }
            }
        }
    }
    Ok(ExceptionalShape { quotient_order: q.order(), quotient_centerless, three_divides_abelianization, split })
}

pub fn is_exceptional_shape(g: &Group, budget: u64) -> Result<bool> {
    Ok(exceptional_shape(g, budget)?.holds())
}

/// Property sweeps run on each catalog group, each with a brute-force oracle.
pub const SUITES: [&str; 6] =
    ["center-of-inner", "central-count", "central-quotient", "coprime-trivial", "sylow", "char-elementary"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    NotApplicable(String),
    Fail(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub group: String,
    pub suite: &'static str,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, Default)]
pub struct SuiteReport {
    pub results: Vec<SuiteResult>,
}

impl SuiteReport {
    pub fn failures(&self) -> Vec<&SuiteResult> {
        self.results.iter().filter(|r| matches!(r.outcome, Outcome::Fail(_))).collect()
    }

    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }
}

/// Limits on the more expensive oracles.
#[derive(Debug, Clone, Copy)]
pub struct SuiteLimits {
    pub aut_budget: u64,
    pub aut_elements: usize,
    pub normal_subgroups: usize,
}

impl Default for SuiteLimits {
    fn default() -> Self {
        SuiteLimits { aut_budget: crate::aut::DEFAULT_BUDGET, aut_elements: 20_000, normal_subgroups: 10_000 }
    }
}

/// Runs every suite on every group in parallel. Results are sorted by group
/// position and suite.
pub fn run_property_suites(catalog: &[(String, Group)], limits: SuiteLimits) -> SuiteReport {
    let mut results: Vec<(usize, usize, SuiteResult)> = catalog
        .par_iter()
        .enumerate()
        .flat_map_iter(|(gi, (name, g))| {
            let aut = automorphism_group(g, limits.aut_budget);
            SUITES
                .iter()
                .enumerate()
                .map(|(si, &suite)| {
                    let outcome = match &aut {
                        Ok(a) => run_suite(suite, g, a, limits),
                        Err(e) => Outcome::Fail(format!("automorphism group: {e}")),
                    };
                    (gi, si, SuiteResult { group: name.clone(), suite, outcome })
                })
                .collect::<Vec<_>>()
        })
        .collect();
    results.sort_by_key(|(gi, si, _)| (*gi, *si));
    SuiteReport { results: results.into_iter().map(|(_, _, r)| r).collect() }
}

pub fn run_suite(suite: &str, g: &Group, aut: &AutGroup, limits: SuiteLimits) -> Outcome {
    let r = match suite {
        "center-of-inner" => suite_center_of_inner(g),
        "central-count" => suite_central_count(g, aut, limits),
        "central-quotient" => suite_central_quotient(g, limits),
        "coprime-trivial" => suite_coprime_trivial(g, aut, limits),
        "sylow" => suite_sylow(g, limits),
        "char-elementary" => suite_char_elementary(g, aut),
        other => Err(Error::InvalidParameter(format!("unknown suite {other}"))),
    };
    r.unwrap_or_else(|e| Outcome::Fail(e.to_string()))
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<Outcome> {
    Ok(if cond { Outcome::Pass } else { Outcome::Fail(msg()) })
}

/// Central inner automorphisms are exactly the center of `Inn(G)`, which has
/// the order of `Z(G/Z)`.
fn suite_center_of_inner(g: &Group) -> Result<Outcome> {
    let z = center(g);
    let mut seen = HashSet::new();
    let inn: Vec<Automorphism> =
        g.elements().map(|t| Automorphism::inner(g, t)).filter(|a| seen.insert(a.clone())).collect();
    let central: BTreeSet<&Automorphism> =
        inn.iter().filter(|a| g.elements().all(|x| z.contains(g.mul(g.inv(x), a.apply(x))))).collect();
    let commuting: BTreeSet<&Automorphism> =
        inn.iter().filter(|a| inn.iter().all(|b| a.then(b) == b.then(a))).collect();
    let (q, _) = quotient(g, &z)?;
    let zq = center(&q).order();
    check(central == commuting && central.len() == zq, || {
        format!("central {}, center of Inn {}, |Z(G/Z)| {zq}", central.len(), commuting.len())
    })
}

/// Without an abelian direct factor, `|Cent(G)| = |Hom(G/G', Z)|`; the
/// central automorphisms are counted by enumeration.
fn suite_central_count(g: &Group, aut: &AutGroup, limits: SuiteLimits) -> Result<Outcome> {
    if abelian_direct_factor(g, limits.aut_budget)?.is_some() {
        return Ok(Outcome::NotApplicable("abelian direct factor".into()));
    }
    let c = central_automorphism_count(g, aut, limits.aut_budget)?;
    let gp = derived_subgroup(g);
    let (ab, _) = quotient(g, &gp)?;
    let (zg, _) = center(g).as_group("Z");
    let h = hom_count(&ab, &zg)?;
    check(c.via_enumeration == h, || format!("enumerated {} central, Hom count {h}", c.via_enumeration))
}

/// `G/Z` a p-group: if abelian its two largest invariant exponents agree; if
/// not elementary abelian it has a central characteristic subgroup of index
/// at least `p^2`.
fn suite_central_quotient(g: &Group, limits: SuiteLimits) -> Result<Outcome> {
    let prof = central_quotient_profile(g);
    if !prof.is_p_group {
        return Ok(Outcome::NotApplicable("G/Z is not a nontrivial p-group".into()));
    }
    let z = center(g);
    let (q, _) = quotient(g, &z)?;
    let (p, _) = is_prime_power(q.order() as u64).expect("p-group");
    if q.is_abelian() {
        let inv = abelian_invariants(&q)?;
        let mut f = inv.factors.clone();
        f.sort_unstable_by(|a, b| b.cmp(a));
        if !(f.len() >= 2 && f[0] == f[1]) || !prof.rank_condition_holds {
            return Ok(Outcome::Fail(format!("invariants {f:?}")));
        }
        if q.exponent() as u64 == p {
            return Ok(Outcome::Pass);
        }
    }
    let qa = automorphism_group(&q, limits.aut_budget)?;
    let k = central_characteristic_subgroup(&q, &qa)?;
    let zq = center(&q);
    let invariant = qa.elements(limits.aut_elements).map_or(qa.is_invariant(&k), |els| {
        els.iter().all(|f| k.members().iter().all(|&x| k.contains(f.apply(x))))
    });
    check(!k.is_trivial() && k.is_subset_of(&zq) && invariant && k.index() as u64 >= p * p, || {
        format!("subgroup of order {} in G/Z of order {}", k.order(), q.order())
    })
}

/// An automorphism of order prime to `|G|` acting trivially on a normal `N`
/// and on `G/N` is the identity.
fn suite_coprime_trivial(g: &Group, aut: &AutGroup, limits: SuiteLimits) -> Result<Outcome> {
    let Ok(els) = aut.elements(limits.aut_elements) else {
        return Ok(Outcome::NotApplicable("automorphism group too large to enumerate".into()));
    };
    let coprime: Vec<&Automorphism> =
        els.iter().filter(|f| num_integer::gcd(f.order(), g.order()) == 1 && !f.is_identity()).collect();
    if coprime.is_empty() {
        return Ok(Outcome::Pass);
    }
    let normals = normal_subgroups(g, limits.normal_subgroups)?;
    for n in &normals {
        for f in &coprime {
            let on_n = n.members().iter().all(|&x| f.apply(x) == x);
            let on_quot = g.elements().all(|x| n.contains(g.mul(g.inv(x), f.apply(x))));
            if on_n && on_quot {
                return Ok(Outcome::Fail(format!("nontrivial automorphism trivial on N of order {}", n.order())));
            }
        }
    }
    Ok(Outcome::Pass)
}

/// Sylow conjugate counts are `1 mod p` (counted by conjugating), and a
/// normal Sylow subgroup has a complement.
fn suite_sylow(g: &Group, limits: SuiteLimits) -> Result<Outcome> {
    for (p, _) in factorize(g.order() as u64) {
        let rep = sylow(g, p)?;
        let conj: BTreeSet<Vec<Elem>> = g.elements().map(|t| rep.subgroup.conjugate(t).members().to_vec()).collect();
        if conj.len() != rep.conjugate_count || conj.len() as u64 % p != 1 % p {
            return Ok(Outcome::Fail(format!("p = {p}: {} conjugates, reported {}", conj.len(), rep.conjugate_count)));
        }
        if rep.is_normal {
            match find_complement(g, &rep.subgroup, limits.aut_budget)? {
                ComplementSearch::Found(h) => {
                    if h.order() * rep.subgroup.order() != g.order() || !h.intersection(&rep.subgroup).is_trivial() {
                        return Ok(Outcome::Fail(format!("p = {p}: bad complement")));
                    }
                }
                other => return Ok(Outcome::Fail(format!("p = {p}: normal Sylow without complement ({other:?})"))),
            }
        }
    }
    Ok(Outcome::Pass)
}

/// Odd-order groups have a characteristic elementary abelian subgroup.
fn suite_char_elementary(g: &Group, aut: &AutGroup) -> Result<Outcome> {
    if g.order() % 2 == 0 || g.order() == 1 {
        return Ok(Outcome::NotApplicable("order is even or one".into()));
    }
    let s = characteristic_elementary_abelian(g, aut)?;
    let p = is_prime_power(s.order() as u64).map(|(p, _)| p);
    let elementary = p.is_some_and(|p| s.is_abelian() && s.members().iter().all(|&x| x == 0 || g.element_order(x) as u64 == p));
    let invariant = aut.generators().iter().all(|f| s.members().iter().all(|&x| s.contains(f.apply(x))));
    check(elementary && invariant, || format!("subgroup of order {} fails", s.order()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profiles() {
        let p = number_profile(1).unwrap();
        assert_eq!((p.big_omega, p.small_omega), (0, 0));
        let p = number_profile(1215).unwrap();
        assert_eq!((p.big_omega, p.small_omega), (6, 2));
        let p = number_profile(1053).unwrap();
        assert_eq!((p.big_omega, p.small_omega, p.primes()), (5, 2, vec![3, 13]));
    }

    #[test]
    fn aut_rules() {
        assert!(audit_aut_order(1215).unwrap().survives());
        let c = audit_aut_order(243).unwrap();
        assert_eq!(c.audit.last().unwrap().rule.id, "R3");
        assert!(!c.survives());
        let c = audit_aut_order(135).unwrap();
        assert_eq!(c.audit.last().unwrap().rule.id, "R2");
        assert!(!c.survives());
    }

    #[test]
    fn golden_lists() {
        let aut = candidate_aut_orders(AUT_BOUND);
        let a: Vec<u64> = aut.iter().map(CandidateOrder::n).collect();
        assert!(ListDiff::new(&a, &golden_aut_orders()).is_match());
        let q = candidate_quotient_orders(&aut);
        let qs: Vec<u64> = q.iter().map(CandidateOrder::n).collect();
        assert!(ListDiff::new(&qs, &golden_quotient_orders()).is_match());
        let t = normal_sylow_table(&q);
        assert_eq!(t.rows, golden_table());
        let om: Vec<u64> = t.omitted.iter().map(|(d, _)| *d).collect();
        assert!(ListDiff::new(&om, &golden_omitted()).is_match());
        assert!(matches!(t.omitted.iter().find(|(d, _)| *d == 1053).unwrap().1, Classification::Exceptional { .. }));
    }

    #[test]
    fn omitted_orders() {
        assert_eq!(classify_quotient_order(1575), Classification::Ambiguous { options: vec![(2, 3), (2, 5)] });
        assert_eq!(classify_quotient_order(2025), Classification::Ambiguous { options: vec![(2, 5), (4, 3)] });
        assert!(matches!(classify_quotient_order(1053), Classification::Exceptional { .. }));
    }

    #[test]
    fn quotient_rules() {
        let hosts: Vec<u64> = golden_aut_orders();
        // 45 = 3^2 * 5: the Sylow 5-subgroup count divides 9 and is 1 mod 5
        let c = audit_quotient_order(45, &hosts).unwrap();
        assert_eq!(c.audit.last().unwrap().rule.id, "Q3");
        assert!(!c.survives());
        assert!(audit_quotient_order(75, &hosts).unwrap().survives());
        assert!(audit_quotient_order(1053, &hosts).unwrap().survives());
    }

    #[test]
    fn facts() {
        let f = reduction_facts(&num_bigint::BigUint::from(300_000u32)).unwrap();
        assert!(f.iter().all(|x| x.holds));
    }
}
