use std::path::Path;

use assert_cmd::Command;

fn oddaut() -> Command {
    let mut c = Command::cargo_bin("oddaut").unwrap();
    c.env_remove("ODDAUT_CAP");
    c
}

fn stdout(c: &mut Command) -> String {
    let out = c.output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn make(dir: &Path, spec: &str, file: &str) -> std::path::PathBuf {
    let path = dir.join(file);
    oddaut().args(["make", spec, "--out"]).arg(&path).assert().success();
    path
}

/// Comma-separated indices `a * |B|` for every `a` in `A`, the embedded
/// normal factor of a semidirect product.
fn embedded(order_a: usize, order_b: usize) -> String {
    (0..order_a).map(|a| (a * order_b).to_string()).collect::<Vec<_>>().join(",")
}

#[test]
fn cyclic_nine_has_six_automorphisms() {
    let dir = tempfile::tempdir().unwrap();
    let f = make(dir.path(), "cyclic:9", "c9.cay");
    let out = stdout(oddaut().arg("aut").arg(&f));
    assert!(out.contains("|Aut|\t6\n"), "{out}");
    assert!(out.contains("parity\teven\n"));
    assert!(out.contains("NI\tfalse\n"));
}

#[test]
fn golden_lists_and_table() {
    let out = stdout(oddaut().args(["verify-golden", "--lists"]));
    assert_eq!(out.lines().next(), Some("19/19 match, 21/21 match"));
    let out = stdout(oddaut().args(["verify-golden", "--table"]));
    assert!(out.starts_with("table: 8 rows, 18/18 placements match, omitted 3/3 match"), "{out}");
    assert!(out.contains("omitted 1053: exceptional"));
}

#[test]
fn analyze_reports_invariants() {
    let dir = tempfile::tempdir().unwrap();
    let f = make(dir.path(), "extraspecial:3:3", "he3.cay");
    let out = stdout(oddaut().arg("analyze").arg(&f));
    for line in ["order\t27", "center\t3", "derived\t3", "abelian\tfalse", "sylow_3\torder=27 conjugates=1 normal=true"] {
        assert!(out.lines().any(|l| l == line), "missing {line:?} in\n{out}");
    }
}

#[test]
fn validation_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    oddaut().args(["make", "cyclic:", "--out"]).arg(dir.path().join("x.cay")).assert().code(2);
    let bad = dir.path().join("bad.cay");
    std::fs::write(&bad, "cay 1\nname X\norder 2\n0 1\n1 q\n").unwrap();
    let out = oddaut().arg("aut").arg(&bad).assert().code(2).get_output().stderr.clone();
    assert!(String::from_utf8_lossy(&out).contains("line 5, column 3"));
    std::fs::write(&bad, "cay 1\nname X\norder 2\n0 1\n0 1\n").unwrap();
    oddaut().arg("analyze").arg(&bad).assert().code(2);
}

#[test]
fn budget_exhaustion_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let f = make(dir.path(), "extraspecial:3:3", "he3.cay");
    oddaut().args(["aut", "--budget", "1"]).arg(&f).assert().code(3);
}

#[test]
fn cap_flag_overrides_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c9.cay");
    oddaut().env("ODDAUT_CAP", "8").args(["make", "cyclic:9", "--out"]).arg(&out).assert().code(2);
    oddaut().env("ODDAUT_CAP", "8").args(["--cap", "16", "make", "cyclic:9", "--out"]).arg(&out).assert().success();
    oddaut().env("ODDAUT_CAP", "8").arg("aut").arg(&out).assert().code(2);
}

#[test]
fn extend_modes() {
    let dir = tempfile::tempdir().unwrap();
    let he = make(dir.path(), "sdp:(extraspecial:3:3)x(cyclic:4):matrix=3,2,0,1,-1,0", "he3c4.cay");
    let out = stdout(oddaut().arg("extend").arg(&he).args(["--normal", &embedded(27, 4), "--complement", "1"]));
    assert!(out.contains("automorphism\torder=2 fixes_center=true verified=true"), "{out}");
    assert!(out.contains("exhaustive=1"));

    let f = make(dir.path(), "sdp:(cyclic:7)x(cyclic:3):power=2", "c7c3.cay");
    let out = stdout(oddaut().arg("extend").arg(&f).args(["--normal", "3", "--complement", "1", "--mode", "inversion"]));
    assert!(out.contains("order=2"), "{out}");
    // inversion on C7 given by generator images
    let out = stdout(
        oddaut()
            .arg("extend")
            .arg(&f)
            .args(["--normal", "3", "--complement", "1", "--mode", "fixing", "--images", "18", "--show-map"]),
    );
    assert!(out.contains("order=2"), "{out}");
    // the trivial map is not an automorphism of A
    oddaut()
        .arg("extend")
        .arg(&f)
        .args(["--normal", "3", "--complement", "1", "--mode", "fixing", "--images", "0"])
        .assert()
        .code(2);
    // the complement factor is not normal
    oddaut().arg("extend").arg(&he).args(["--normal", "1", "--complement", "0"]).assert().code(2);
}

#[test]
fn catalog_scan_is_even_and_repeatable() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path().join("cat");
    oddaut().arg("catalog").arg("--out").arg(&cat).assert().success();
    let index = std::fs::read_to_string(cat.join("index.tsv")).unwrap();
    assert!(index.contains("Not a census"));
    let r1 = dir.path().join("r1.tsv");
    let r2 = dir.path().join("r2.tsv");
    let cache = dir.path().join("cache");
    oddaut().arg("scan").arg(&cat).args(["--odd-only", "--jobs", "4", "--cache"]).arg(&cache).arg("--out").arg(&r1).assert().success();
    oddaut().arg("scan").arg(&cat).args(["--odd-only", "--jobs", "2", "--cache"]).arg(&cache).arg("--out").arg(&r2).assert().success();
    let (a, b) = (std::fs::read(&r1).unwrap(), std::fs::read(&r2).unwrap());
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    let records: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert!(records.len() > 150);
    assert!(records.iter().all(|l| l.split('\t').nth(5) == Some("even")));
}
