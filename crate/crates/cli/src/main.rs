use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use oddaut::abelian::abelian_invariants;
use oddaut::arith::factorize;
use oddaut::aut::{automorphism_group, is_ni, DEFAULT_BUDGET};
use oddaut::cases::{
    candidate_aut_orders, candidate_quotient_orders, golden_aut_orders, golden_omitted, golden_quotient_orders,
    golden_table, normal_sylow_table, Classification, run_property_suites, table_diff, ListDiff, Outcome, SuiteLimits, SUITES,
};
use oddaut::catalog::{odd_catalog, test_catalog, GroupSpec};
use oddaut::extend::{
    automorphism_from_images, build_involution, extend_fixing_complement, extend_inversion, verify_certificate,
    ExtensionProblem,
};
use oddaut::format::{parse_group_file, write_group_file, GroupFile};
use oddaut::group::{generated_subgroup, order_cap_from_env, set_order_cap, AssociativityCheck};
use oddaut::scan::{scan_dir, ScanOptions};
use oddaut::structure::{center, central_quotient_profile, derived_subgroup, sylow};
use oddaut::{Elem, Error, Group};

#[derive(Parser)]
#[command(name = "oddaut", version, about = "Finite groups, automorphism parity and involution construction")]
struct Cli {
    /// Largest group order accepted (overrides ODDAUT_CAP).
    #[arg(long, global = true)]
    cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print structural invariants of a group file.
    Analyze { file: PathBuf },
    /// Compute |Aut(G)| and the N.I. flags.
    Aut {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Analyze every group file below a directory.
    Scan {
        dir: PathBuf,
        #[arg(long)]
        odd_only: bool,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Cache directory; defaults to `<out>.cache`.
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long, conflicts_with = "cache")]
        no_cache: bool,
        /// Write `-` instead of measured wall times.
        #[arg(long)]
        no_timing: bool,
    },
    /// Compare derived order lists and the Sylow table with the stored
    /// reference data, and run the property suites.
    VerifyGolden {
        #[arg(long)]
        lists: bool,
        #[arg(long)]
        table: bool,
        #[arg(long, alias = "lemmas")]
        suites: bool,
    },
    /// Build an automorphism of order 2 from a normal subgroup and a complement.
    Extend {
        file: PathBuf,
        /// Generators of the normal subgroup A, comma separated.
        #[arg(long)]
        normal: String,
        /// Generators of the subgroup B with G = AB.
        #[arg(long)]
        complement: String,
        #[arg(long, value_enum, default_value_t = Mode::Involution)]
        mode: Mode,
        /// For `fixing`: images of the normal generators.
        #[arg(long)]
        images: Option<String>,
        /// Print the image of every element.
        #[arg(long)]
        show_map: bool,
    },
    /// Build a group from a spec and write it as a group file.
    Make {
        spec: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the built-in odd-order catalog as group files.
    Catalog {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 243)]
        max_order: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    /// Invert the nontrivial blocks of A modulo its center.
    Involution,
    /// Invert an abelian A and fix the complement.
    Inversion,
    /// Extend given generator images on A, fixing B.
    Fixing,
}

/// A failure with its exit code: 2 validation, 3 budget, 4 golden mismatch.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } | Error::SearchBudgetExceeded { .. } => 3,
            Error::RuleSetIncomplete(_) => 4,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

type Out = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Out {
    order_cap_from_env()?;
    if let Some(cap) = cli.cap {
        set_order_cap(cap);
    }
    match cli.command {
        Command::Analyze { file } => analyze(&file),
        Command::Aut { file, budget } => aut(&file, budget),
        Command::Scan { dir, odd_only, jobs, out, budget, cache, no_cache, no_timing } => {
            let cache = if no_cache {
                None
            } else {
                Some(cache.unwrap_or_else(|| {
                    let mut s = out.clone().into_os_string();
                    s.push(".cache");
                    PathBuf::from(s)
                }))
            };
            let opts = ScanOptions { budget, odd_only, jobs, cache, timing: !no_timing };
            scan(&dir, &out, &opts)
        }
        Command::VerifyGolden { lists, table, suites } => {
            let all = !(lists || table || suites);
            verify_golden(lists || all, table || all, suites || all)
        }
        Command::Extend { file, normal, complement, mode, images, show_map } => {
            extend(&file, &normal, &complement, mode, images.as_deref(), show_map)
        }
        Command::Make { spec, out } => make(&spec, &out),
        Command::Catalog { out, max_order } => catalog(&out, max_order),
    }
}

fn load(path: &Path) -> Result<GroupFile, Failure> {
    parse_group_file(path).map_err(|e| fail(2, format!("{}: {e}", path.display())))
}

fn analyze(file: &Path) -> Out {
    let f = load(file)?;
    let g = &f.group;
    let n = g.order();
    let mut s = String::new();
    let _ = writeln!(s, "name\t{}", g.name());
    if let Some(spec) = &f.spec {
        let _ = writeln!(s, "spec\t{spec}");
    }
    let _ = writeln!(s, "order\t{n}");
    let assoc = match g.associativity_check() {
        AssociativityCheck::Exhaustive => "exhaustive".to_string(),
        AssociativityCheck::Sampled { triples } => format!("sampled ({triples} triples)"),
    };
    let _ = writeln!(s, "associativity\t{assoc}");
    let _ = writeln!(s, "exponent\t{}", g.exponent());
    let _ = writeln!(s, "abelian\t{}", g.is_abelian());
    if g.is_abelian() {
        let inv = abelian_invariants(g)?;
        let _ = writeln!(s, "invariant_factors\t{:?}", inv.factors);
    }
    let _ = writeln!(s, "classes\t{}", g.classes().count());
    let _ = writeln!(s, "center\t{}", center(g).order());
    let _ = writeln!(s, "derived\t{}", derived_subgroup(g).order());
    let prof = central_quotient_profile(g);
    let _ = writeln!(
        s,
        "central_quotient\torder={} p_group={} abelian={} exponents={} rank_condition={}",
        prof.quotient_order,
        prof.is_p_group,
        prof.abelian,
        prof.invariant_exponents.as_ref().map_or("-".into(), |e| format!("{e:?}")),
        prof.rank_condition_holds
    );
    for (p, _) in factorize(n as u64) {
        let r = sylow(g, p)?;
        let _ = writeln!(
            s,
            "sylow_{p}\torder={} conjugates={} normal={}",
            r.subgroup.order(),
            r.conjugate_count,
            r.is_normal
        );
    }
    print!("{s}");
    Ok(())
}

fn aut(file: &Path, budget: u64) -> Out {
    let f = load(file)?;
    let g = &f.group;
    let a = automorphism_group(g, budget)?;
    let ni = is_ni(g, &a)?;
    let st = a.stats();
    println!("name\t{}", g.name());
    println!("order\t{}", g.order());
    println!("|Aut|\t{}", a.order());
    println!("parity\t{}", if a.order_is_odd() { "odd" } else { "even" });
    println!("aut_order_odd\t{}", ni.aut_order_odd);
    println!("no_inversion\t{}", ni.no_inversion);
    println!("NI\t{}", ni.is_ni());
    println!("generators\t{}", a.generators().len());
    println!(
        "search\tnodes={} pruned_order={} pruned_class={} pruned_hom={} ms={}",
        st.nodes_visited,
        st.pruned_by_order,
        st.pruned_by_class,
        st.pruned_by_hom,
        st.wall_time.as_millis()
    );
    Ok(())
}

fn scan(dir: &Path, out: &Path, opts: &ScanOptions) -> Out {
    let mut w = BufWriter::new(File::create(out)?);
    let summary = scan_dir(dir, opts, &mut w)?;
    w.flush()?;
    eprintln!(
        "{} group files under {}: {} records, {} skipped (even order), {} from cache, {} over budget, {} errors",
        summary.files,
        dir.display(),
        summary.records,
        summary.skipped_even,
        summary.cache_hits,
        summary.budget_exhausted,
        summary.errors.len()
    );
    for (path, msg) in &summary.errors {
        eprintln!("{}: {msg}", path.display());
    }
    if !summary.errors.is_empty() {
        return Err(fail(2, format!("{} files could not be analyzed", summary.errors.len())));
    }
    if summary.budget_exhausted > 0 {
        return Err(fail(3, format!("{} groups exceeded the search budget", summary.budget_exhausted)));
    }
    Ok(())
}

fn verify_golden(lists: bool, table: bool, suites: bool) -> Out {
    let mut ok = true;
    let aut = candidate_aut_orders(oddaut::cases::AUT_BOUND);
    let quot = candidate_quotient_orders(&aut);
    if lists {
        let survivors = |v: &[oddaut::cases::CandidateOrder]| v.iter().filter(|c| c.survives()).map(|c| c.n()).collect::<Vec<_>>();
        let a = ListDiff::new(&survivors(&aut), &golden_aut_orders());
        let q = ListDiff::new(&survivors(&quot), &golden_quotient_orders());
        println!("{}/{} match, {}/{} match", a.matched, a.expected, q.matched, q.expected);
        for (what, d) in [("aut orders", &a), ("quotient orders", &q)] {
            if !d.is_match() {
                ok = false;
                println!("{what}: missing {:?}, extra {:?}", d.missing, d.extra);
            }
        }
    }
    if table {
        let t = normal_sylow_table(&quot);
        let golden = golden_table();
        let (matched, problems) = table_diff(&t.rows, &golden);
        let omitted: Vec<u64> = t.omitted.iter().map(|(d, _)| *d).collect();
        let om = ListDiff::new(&omitted, &golden_omitted());
        let total: usize = golden.iter().map(|r| r.quotient_orders.len()).sum();
        println!(
            "table: {} rows, {matched}/{total} placements match, omitted {}/{} match",
            t.rows.len(),
            om.matched,
            om.expected
        );
        for p in &problems {
            println!("  {p}");
        }
        for (d, c) in &t.omitted {
            let kind = match c {
                Classification::Ambiguous { .. } => "ambiguous",
                Classification::Exceptional { .. } => "exceptional",
                Classification::Normal { .. } => "normal",
            };
            println!("  omitted {d}: {kind}");
        }
        if !problems.is_empty() || !om.is_match() {
            ok = false;
        }
    }
    if suites {
        let groups: Vec<(String, Group)> =
            test_catalog().iter().map(|e| e.build().map(|g| (e.name.clone(), g))).collect::<Result<_, _>>()?;
        let report = run_property_suites(&groups, SuiteLimits::default());
        for suite in SUITES {
            let rs: Vec<_> = report.results.iter().filter(|r| r.suite == suite).collect();
            let pass = rs.iter().filter(|r| r.outcome == Outcome::Pass).count();
            let na = rs.iter().filter(|r| matches!(r.outcome, Outcome::NotApplicable(_))).count();
            let failed = rs.len() - pass - na;
            println!("{suite}: {pass} pass, {na} not applicable, {failed} fail");
        }
        for r in report.failures() {
            if let Outcome::Fail(m) = &r.outcome {
                println!("  {} {}: {m}", r.suite, r.group);
            }
        }
        ok &= report.passed();
    }
    if ok {
        Ok(())
    } else {
        Err(fail(4, "derived data differs from the reference"))
    }
}

fn parse_elems(s: &str, g: &Group) -> Result<Vec<Elem>, Failure> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let x: Elem = t.trim().parse().map_err(|_| fail(2, format!("`{t}` is not an element index")))?;
            if x >= g.order() {
                return Err(fail(2, format!("element {x} is out of range")));
            }
            Ok(x)
        })
        .collect()
}

fn extend(file: &Path, normal: &str, complement: &str, mode: Mode, images: Option<&str>, show_map: bool) -> Out {
    let f = load(file)?;
    let g = &f.group;
    let a_gens = parse_elems(normal, g)?;
    let b_gens = parse_elems(complement, g)?;
    let a = generated_subgroup(g, &a_gens);
    let b = generated_subgroup(g, &b_gens);
    println!("|G| = {}, |A| = {}, |B| = {}", g.order(), a.order(), b.order());
    let map = match mode {
        Mode::Involution => {
            let prob = ExtensionProblem::new(g, a, b)?;
            let cert = build_involution(&prob)?;
            verify_certificate(&prob, &cert)?;
            println!("blocks\t{} nontrivial, {} fixed representatives", cert.blocks.len(), cert.fixed.len());
            for (i, blk) in cert.blocks.iter().enumerate() {
                println!(
                    "block {i}\tacting={} basis={:?} k={:?} sigma={} z={:?} zeta={:?} exhaustive={}",
                    blk.acting,
                    blk.basis,
                    blk.k,
                    blk.sigma,
                    blk.z,
                    blk.zeta,
                    blk.exhaustive_count.map_or("-".into(), |c| c.to_string())
                );
            }
            cert.automorphism
        }
        Mode::Inversion => extend_inversion(g, &a, &b)?,
        Mode::Fixing => {
            let images = images.ok_or_else(|| fail(2, "--images is required for --mode fixing"))?;
            let phi = automorphism_from_images(&a, &a_gens, &parse_elems(images, g)?)?;
            extend_fixing_complement(g, &a, &b, &phi)?
        }
    };
    if !map.verify_on(g) {
        return Err(fail(2, "constructed map failed exhaustive verification"));
    }
    let z = center(g);
    let fixes_z = z.members().iter().all(|&x| map.apply(x) == x);
    println!("automorphism\torder={} fixes_center={} verified=true", map.order(), fixes_z);
    if show_map {
        let imgs: Vec<String> = map.images().iter().map(|x| x.to_string()).collect();
        println!("map\t{}", imgs.join(" "));
    }
    Ok(())
}

fn make(spec: &str, out: &Path) -> Out {
    let s = GroupSpec::parse(spec)?;
    let g = s.build()?;
    let canonical = s.to_string();
    write_group_file(out, &g, Some(&canonical))?;
    println!("wrote {} (order {}) to {}", g.name(), g.order(), out.display());
    Ok(())
}

fn file_stem(order: usize, name: &str) -> String {
    let clean: String = name.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
    format!("{order:04}_{clean}")
}

fn catalog(out: &Path, max_order: usize) -> Out {
    std::fs::create_dir_all(out)?;
    let entries = odd_catalog(max_order);
    let mut index = String::from(
        "# Odd-order groups built from constructors: abelian groups by partition,\n\
         # extraspecial groups and listed semidirect products. Not a census.\n\
         #file\torder\tname\tspec\n",
    );
    let mut used = std::collections::HashSet::new();
    for e in &entries {
        let g = e.build()?;
        let mut stem = file_stem(g.order(), &e.name);
        let mut k = 2;
        while !used.insert(stem.clone()) {
            stem = format!("{}_{k}", file_stem(g.order(), &e.name));
            k += 1;
        }
        let file = format!("{stem}.cay");
        write_group_file(out.join(&file), &g, Some(&e.spec.to_string()))?;
        let _ = writeln!(index, "{file}\t{}\t{}\t{}", g.order(), e.name, e.spec);
    }
    std::fs::write(out.join("index.tsv"), index)?;
    println!("wrote {} groups of odd order at most {max_order} to {}", entries.len(), out.display());
    Ok(())
}
