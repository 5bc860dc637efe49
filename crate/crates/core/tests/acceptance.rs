//! Acceptance run: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use oddaut::aut::{automorphism_group, is_ni, DEFAULT_BUDGET};
use oddaut::cases::{
    candidate_aut_orders, candidate_quotient_orders, exceptional_shape, golden_aut_orders, golden_omitted,
    golden_quotient_orders, golden_table, normal_sylow_table, run_property_suites, table_diff, ListDiff, SuiteLimits,
    AUT_BOUND,
};
use oddaut::catalog::{exceptional_group, extension_instances, odd_catalog, test_catalog, GroupSpec};
use oddaut::extend::{build_involution, verify_certificate, ExtensionProblem, EXHAUSTIVE_CENTER_LIMIT};
use oddaut::format::{parse_group_str, write_group_file, write_group_string};
use oddaut::group::{abelian, cyclic};
use oddaut::scan::{scan_dir, ScanOptions};
use oddaut::structure::center;
use oddaut::Group;

mod common;
use common::{brute_force_aut_count, euler_phi, gl_formula, is_involution, ORDER_AT_MOST_12};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("took {t:.2?}, limit {limit:?}"))
}

fn golden_match() -> Check {
    let start = Instant::now();
    let aut = candidate_aut_orders(AUT_BOUND);
    let quot = candidate_quotient_orders(&aut);
    let table = normal_sylow_table(&quot);
    let survivors = |v: &[oddaut::cases::CandidateOrder]| v.iter().filter(|c| c.survives()).map(|c| c.n()).collect::<Vec<_>>();
    let a = ListDiff::new(&survivors(&aut), &golden_aut_orders());
    let q = ListDiff::new(&survivors(&quot), &golden_quotient_orders());
    let golden = golden_table();
    let (placed, problems) = table_diff(&table.rows, &golden);
    let omitted: Vec<u64> = table.omitted.iter().map(|(d, _)| *d).collect();
    let om = ListDiff::new(&omitted, &golden_omitted());
    within(start, Duration::from_secs(1))?;
    ensure(a.is_match() && a.expected == 19, || format!("aut orders: {a:?}"))?;
    ensure(q.is_match() && q.expected == 21, || format!("quotient orders: {q:?}"))?;
    ensure(problems.is_empty() && table.rows.len() == 8 && placed == 18, || format!("table: {problems:?}"))?;
    ensure(om.is_match() && placed + om.matched == 21, || format!("omitted: {om:?}"))?;
    Ok(format!("19/19 and 21/21 orders, 8 rows with 18 placements, omitted {omitted:?}"))
}

fn aut_oracles() -> Check {
    let start = Instant::now();
    for n in 1..=50 {
        let a = automorphism_group(&cyclic(n).map_err(|e| e.to_string())?, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        ensure(*a.order() == BigUint::from(euler_phi(n)), || format!("|Aut(C{n})| = {}", a.order()))?;
    }
    for (p, k) in [(2u64, 2u32), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3), (3, 4), (5, 3)] {
        let g = abelian(&vec![p as usize; k as usize]).map_err(|e| e.to_string())?;
        let a = automorphism_group(&g, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        ensure(*a.order() == gl_formula(k, p), || format!("|Aut(C{p}^{k})| = {}", a.order()))?;
    }
    for s in ORDER_AT_MOST_12 {
        let g = GroupSpec::parse(s).and_then(|x| x.build()).map_err(|e| e.to_string())?;
        let a = automorphism_group(&g, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        let brute = brute_force_aut_count(&g);
        ensure(*a.order() == BigUint::from(brute), || format!("{s}: engine {} brute force {brute}", a.order()))?;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("phi(n) for n <= 50, 8 GL orders, {} groups of order <= 12", ORDER_AT_MOST_12.len()))
}

fn ni_sweep() -> Check {
    let start = Instant::now();
    let entries = odd_catalog(243);
    for e in &entries {
        let g = e.build().map_err(|x| x.to_string())?;
        let aut = automorphism_group(&g, DEFAULT_BUDGET).map_err(|x| format!("{}: {x}", e.name))?;
        let ni = is_ni(&g, &aut).map_err(|x| format!("{}: {x}", e.name))?;
        ensure(ni.aut_order_odd == ni.no_inversion, || format!("{}: flags disagree", e.name))?;
        ensure(!ni.aut_order_odd, || format!("{}: |Aut| = {} is odd", e.name, aut.order()))?;
    }
    within(start, Duration::from_secs(600))?;
    Ok(format!("{} odd-order catalog groups, all with |Aut| even", entries.len()))
}

fn involution_suite() -> Check {
    let mut done = Vec::new();
    for inst in extension_instances() {
        let start = Instant::now();
        let (g, a, b) = inst.build().map_err(|e| format!("{}: {e}", inst.name))?;
        let prob = ExtensionProblem::new(&g, a, b).map_err(|e| format!("{}: {e}", inst.name))?;
        let cert = build_involution(&prob).map_err(|e| format!("{}: {e}", inst.name))?;
        verify_certificate(&prob, &cert).map_err(|e| format!("{}: {e}", inst.name))?;
        let phi = &cert.automorphism;
        ensure(is_involution(&g, phi.images()), || format!("{}: not an involution", inst.name))?;
        ensure(center(&g).members().iter().all(|&x| phi.apply(x) == x), || format!("{}: moves the center", inst.name))?;
        ensure(prob.a.members().iter().all(|&x| prob.a.contains(phi.apply(x))), || format!("{}: A not preserved", inst.name))?;
        if g.order() <= 243 {
            let aut = automorphism_group(&g, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            ensure(!aut.order_is_odd(), || format!("{}: engine reports odd |Aut|", inst.name))?;
        }
        within(start, Duration::from_secs(60)).map_err(|e| format!("{}: {e}", inst.name))?;
        done.push(inst.name);
    }
    for needed in ["(C25xC25):C3", "He3:C2", "He3:C4", "C3^4:C4 two blocks"] {
        ensure(done.iter().any(|n| n == needed), || format!("missing instance {needed}"))?;
    }
    Ok(format!("{} instances verified exhaustively", done.len()))
}

fn property_suites() -> Check {
    let start = Instant::now();
    let groups: Vec<(String, Group)> = test_catalog()
        .iter()
        .map(|e| e.build().map(|g| (e.name.clone(), g)))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    ensure(groups.len() >= 40, || format!("only {} groups", groups.len()))?;
    let report = run_property_suites(&groups, SuiteLimits::default());
    let failures = report.failures();
    ensure(failures.is_empty(), || format!("{} failures, first {:?}", failures.len(), failures[0]))?;
    within(start, Duration::from_secs(300))?;
    Ok(format!("{} checks on {} groups", report.results.len(), groups.len()))
}

fn zeta_uniqueness() -> Check {
    let mut blocks = 0;
    for inst in extension_instances() {
        let (g, a, b) = inst.build().map_err(|e| e.to_string())?;
        let prob = ExtensionProblem::new(&g, a.clone(), b.clone()).map_err(|e| e.to_string())?;
        if prob.za().order() > EXHAUSTIVE_CENTER_LIMIT {
            continue;
        }
        // the given complement and its conjugates by generators of A
        let mut complements = vec![b.clone()];
        complements.extend(a.generators().iter().map(|&t| b.conjugate(t)));
        for c in complements {
            let prob = ExtensionProblem::new(&g, a.clone(), c).map_err(|e| e.to_string())?;
            let cert = build_involution(&prob).map_err(|e| format!("{}: {e}", inst.name))?;
            for blk in &cert.blocks {
                ensure(blk.exhaustive_count == Some(1), || format!("{}: count {:?}", inst.name, blk.exhaustive_count))?;
                blocks += 1;
            }
        }
    }
    Ok(format!("{blocks} blocks, each with exactly one central solution"))
}

fn determinism() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut files = 0;
    for e in odd_catalog(243) {
        let g = e.build().map_err(|x| x.to_string())?;
        let spec = e.spec.to_string();
        let text = write_group_string(&g, Some(&spec));
        let back = parse_group_str(&text).map_err(|x| format!("{}: {x}", e.name))?;
        ensure(back.group.same_table(&g) && write_group_string(&back.group, Some(&spec)) == text, || {
            format!("{}: round trip differs", e.name)
        })?;
        write_group_file(dir.path().join(format!("{files:04}.cay")), &g, Some(&spec)).map_err(|x| x.to_string())?;
        files += 1;
    }
    let cached = ScanOptions { odd_only: true, cache: Some(dir.path().join("cache")), ..Default::default() };
    let untimed = ScanOptions { odd_only: true, timing: false, jobs: 3, ..Default::default() };
    let mut runs = Vec::new();
    for opts in [&cached, &cached, &untimed, &untimed] {
        let mut out = Vec::new();
        scan_dir(dir.path(), opts, &mut out).map_err(|e| e.to_string())?;
        runs.push(out);
    }
    ensure(runs[0] == runs[1], || "cached scans differ".into())?;
    ensure(runs[2] == runs[3], || "untimed scans differ".into())?;
    Ok(format!("{files} files round-trip, repeated scans byte-identical"))
}

fn exceptional_experiment() -> Check {
    let start = Instant::now();
    let g = exceptional_group().map_err(|e| e.to_string())?;
    let shape = exceptional_shape(&g, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    ensure(shape.holds(), || format!("shape not matched: {shape:?}"))?;
    let aut = automorphism_group(&g, DEFAULT_BUDGET).map_err(|e| format!("no parity within budget: {e}"))?;
    let parity = if aut.order_is_odd() { "odd" } else { "even" };
    Ok(format!(
        "{} of order {}: |Aut| = {} ({parity}), computed in {:.2?}",
        g.name(),
        g.order(),
        aut.order(),
        start.elapsed()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("case-analysis golden match", golden_match),
        ("automorphism oracles", aut_oracles),
        ("N.I. equivalence sweep", ni_sweep),
        ("constructive involutions", involution_suite),
        ("property suites", property_suites),
        ("central solution uniqueness", zeta_uniqueness),
        ("determinism and round trip", determinism),
        ("exceptional-shape experiment", exceptional_experiment),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
