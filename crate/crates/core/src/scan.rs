//! Batch analysis of a directory of group files into tab-separated records.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::mpsc;
use std::time::Instant;

use num_bigint::BigUint;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::aut::{automorphism_group, is_ni, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::format::{parse_group_str, EXTENSION};
use crate::group::Group;
use crate::structure::{center, derived_subgroup};

pub const HEADER: &str = "#name\torder\tcenter\tderived\taut_order\taut_parity\tni_status\tspec\twall_time_ms";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    Unknown,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
            Parity::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NiStatus {
    Ni,
    NotNi,
    Trivial,
    /// The automorphism search ran out of budget.
    Unknown,
}

impl fmt::Display for NiStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NiStatus::Ni => "NI",
            NiStatus::NotNi => "not-NI",
            NiStatus::Trivial => "trivial",
            NiStatus::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRecord {
    pub name: String,
    pub order: usize,
    pub center: usize,
    pub derived: usize,
    pub aut_order: Option<BigUint>,
    pub aut_parity: Parity,
    pub ni_status: NiStatus,
    pub spec: Option<String>,
    pub wall_time_ms: Option<u64>,
}

fn clean(s: &str) -> String {
    s.replace(['\t', '\n', '\r'], " ")
}

impl ScanRecord {
    pub fn to_line(&self) -> String {
        let opt = |o: Option<String>| o.unwrap_or_else(|| "-".into());
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            clean(&self.name),
            self.order,
            self.center,
            self.derived,
            self.aut_order.as_ref().map_or("?".into(), |o| o.to_string()),
            self.aut_parity,
            self.ni_status,
            opt(self.spec.as_deref().map(clean)),
            opt(self.wall_time_ms.map(|t| t.to_string())),
        )
    }

    pub fn parse_line(line: &str) -> Result<ScanRecord> {
        let bad = |column: usize, what: &str| Error::Parse { line: 1, column, message: format!("bad {what}") };
        let f: Vec<&str> = line.split('\t').collect();
        if f.len() != 9 {
            return Err(Error::Parse { line: 1, column: 1, message: format!("expected 9 fields, found {}", f.len()) });
        }
        let num = |i: usize, what: &str| f[i].parse::<usize>().map_err(|_| bad(i + 1, what));
        let aut_order = match f[4] {
            "?" => None,
            s => Some(s.parse::<BigUint>().map_err(|_| bad(5, "aut_order"))?),
        };
        let aut_parity = match f[5] {
            "even" => Parity::Even,
            "odd" => Parity::Odd,
            "unknown" => Parity::Unknown,
            _ => return Err(bad(6, "aut_parity")),
        };
        let ni_status = match f[6] {
            "NI" => NiStatus::Ni,
            "not-NI" => NiStatus::NotNi,
            "trivial" => NiStatus::Trivial,
            "unknown" => NiStatus::Unknown,
            _ => return Err(bad(7, "ni_status")),
        };
        Ok(ScanRecord {
            name: f[0].to_string(),
            order: num(1, "order")?,
            center: num(2, "center")?,
            derived: num(3, "derived")?,
            aut_order,
            aut_parity,
            ni_status,
            spec: (f[7] != "-").then(|| f[7].to_string()),
            wall_time_ms: match f[8] {
                "-" => None,
                s => Some(s.parse().map_err(|_| bad(9, "wall_time_ms"))?),
            },
        })
    }

    /// Parity and N.I. status agree with the stored order.
    pub fn is_consistent(&self) -> bool {
        let parity_ok = match (&self.aut_order, self.aut_parity) {
            (Some(o), Parity::Even) => !o.bit(0),
            (Some(o), Parity::Odd) => o.bit(0),
            (None, Parity::Unknown) => true,
            _ => false,
        };
        let ni_ok = match self.ni_status {
            NiStatus::Unknown => self.aut_parity == Parity::Unknown,
            NiStatus::Trivial => self.order == 1,
            // For even order an odd |Aut| is impossible only when G has an
            // involution; the status comes from the inversion test either way.
            NiStatus::Ni => self.order % 2 == 0 || self.aut_parity == Parity::Odd,
            NiStatus::NotNi => self.order % 2 == 0 || self.aut_parity == Parity::Even,
        };
        parity_ok && ni_ok
    }
}

/// Computes a record for one group. Running out of budget is not an error;
/// the record carries unknown parity instead.
pub fn analyze(g: &Group, spec: Option<&str>, budget: u64) -> Result<ScanRecord> {
    let start = Instant::now();
    let z = center(g).order();
    let d = derived_subgroup(g).order();
    let (aut_order, aut_parity, ni_status) = match automorphism_group(g, budget) {
        Ok(aut) => {
            let ni = is_ni(g, &aut)?;
            let status = if ni.trivial {
                NiStatus::Trivial
            } else if ni.is_ni() {
                NiStatus::Ni
            } else {
                NiStatus::NotNi
            };
            let parity = if aut.order_is_odd() { Parity::Odd } else { Parity::Even };
            (Some(aut.order().clone()), parity, status)
        }
        Err(Error::BudgetExceeded { .. }) | Err(Error::SearchBudgetExceeded { .. }) => (None, Parity::Unknown, NiStatus::Unknown),
        Err(e) => return Err(e),
    };
    Ok(ScanRecord {
        name: g.name().to_string(),
        order: g.order(),
        center: z,
        derived: d,
        aut_order,
        aut_parity,
        ni_status,
        spec: spec.map(str::to_string),
        wall_time_ms: Some(start.elapsed().as_millis() as u64),
    })
}

#[derive(Debug, Clone)]
pub struct ScanOptions {
    pub budget: u64,
    pub odd_only: bool,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    /// Directory of cached records keyed by file digest and budget.
    pub cache: Option<PathBuf>,
    /// Emit measured wall times; when false the column is `-`.
    pub timing: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { budget: DEFAULT_BUDGET, odd_only: false, jobs: 0, cache: None, timing: true }
    }
}

#[derive(Debug, Clone, Default)]
pub struct ScanSummary {
    pub files: usize,
    pub records: usize,
    pub skipped_even: usize,
    pub cache_hits: usize,
    pub budget_exhausted: usize,
    pub errors: Vec<(PathBuf, String)>,
}

/// All `*.cay` files below `dir`, sorted by path.
pub fn group_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        for entry in std::fs::read_dir(&d)? {
            let path = entry?.path();
            if path.is_dir() {
                stack.push(path);
            } else if path.extension().is_some_and(|e| e == EXTENSION) {
                out.push(path);
            }
        }
    }
    out.sort();
    Ok(out)
}

pub fn cache_key(contents: &[u8], budget: u64) -> String {
    let mut h = Sha256::new();
    h.update(contents);
    h.update(format!("\0budget={budget}").as_bytes());
    hex::encode(h.finalize())
}

enum Job {
    Record(ScanRecord, bool),
    Skipped,
    Failed(String),
}

fn process(path: &Path, opts: &ScanOptions) -> Job {
    let run = || -> Result<Job> {
        let bytes = std::fs::read(path)?;
        let key = cache_key(&bytes, opts.budget);
        let cached = opts.cache.as_ref().map(|c| c.join(format!("{key}.tsv")));
        if let Some(rec) = cached
            .as_ref()
            .and_then(|c| std::fs::read_to_string(c).ok())
            .and_then(|s| ScanRecord::parse_line(s.trim_end_matches('\n')).ok())
        {
            if opts.odd_only && rec.order % 2 == 0 {
                return Ok(Job::Skipped);
            }
            return Ok(Job::Record(rec, true));
        }
        let text = std::str::from_utf8(&bytes)
            .map_err(|e| Error::Parse { line: 1, column: 1, message: e.to_string() })?;
        let file = parse_group_str(text)?;
        if opts.odd_only && file.group.order() % 2 == 0 {
            return Ok(Job::Skipped);
        }
        let rec = analyze(&file.group, file.spec.as_deref(), opts.budget)?;
        if let Some(c) = cached {
            // A failed cache write only costs a recomputation next time.
            let tmp = c.with_extension(format!("tmp{}", std::process::id()));
            if std::fs::write(&tmp, rec.to_line() + "\n").is_ok() {
                let _ = std::fs::rename(&tmp, &c);
            }
        }
        Ok(Job::Record(rec, false))
    };
    run().unwrap_or_else(|e| Job::Failed(e.to_string()))
}

/// Scans every group file under `dir`, writing the header and then one
/// record per group in path order as soon as all earlier paths are done.
pub fn scan_dir<W: Write>(dir: &Path, opts: &ScanOptions, out: &mut W) -> Result<ScanSummary> {
    let files = group_files(dir)?;
    if let Some(c) = &opts.cache {
        std::fs::create_dir_all(c)?;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(e.to_string()))?;
    let mut summary = ScanSummary { files: files.len(), ..Default::default() };
    writeln!(out, "{HEADER}")?;

    let (tx, rx) = mpsc::channel::<(usize, Job)>();
    std::thread::scope(|s| -> Result<()> {
        let files = &files;
        s.spawn(move || {
            pool.install(|| {
                files.par_iter().enumerate().for_each_with(tx, |tx, (i, path)| {
                    let _ = tx.send((i, process(path, opts)));
                });
            });
        });
        let mut pending = BTreeMap::new();
        let mut next = 0;
        for (i, job) in rx {
            pending.insert(i, job);
            while let Some(job) = pending.remove(&next) {
                match job {
                    Job::Record(mut rec, hit) => {
                        if !opts.timing {
                            rec.wall_time_ms = None;
                        }
                        summary.records += 1;
                        summary.cache_hits += hit as usize;
                        summary.budget_exhausted += (rec.aut_parity == Parity::Unknown) as usize;
                        writeln!(out, "{}", rec.to_line())?;
                    }
                    Job::Skipped => summary.skipped_even += 1,
                    Job::Failed(msg) => summary.errors.push((files[next].clone(), msg)),
                }
                next += 1;
            }
        }
        Ok(())
    })?;
    out.flush()?;
    Ok(summary)
}

/// Parses a scan report, skipping `#` lines.
pub fn read_report(text: &str) -> Result<Vec<ScanRecord>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.starts_with('#') && !l.is_empty())
        .map(|(i, l)| {
            ScanRecord::parse_line(l).map_err(|e| match e {
                Error::Parse { column, message, .. } => Error::Parse { line: i + 1, column, message },
                other => other,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::write_group_file;
    use crate::group::{cyclic, extraspecial, symmetric};

    #[test]
    fn record_line_round_trip() {
        let rec = analyze(&cyclic(9).unwrap(), Some("cyclic:9"), DEFAULT_BUDGET).unwrap();
        assert_eq!(rec.aut_order, Some(BigUint::from(6u32)));
        assert_eq!(rec.aut_parity, Parity::Even);
        assert_eq!(rec.ni_status, NiStatus::NotNi);
        assert!(rec.is_consistent());
        assert_eq!(ScanRecord::parse_line(&rec.to_line()).unwrap(), rec);
    }

    #[test]
    fn exhausted_budget() {
        let rec = analyze(&extraspecial(3, true).unwrap(), None, 1).unwrap();
        assert_eq!(rec.aut_parity, Parity::Unknown);
        assert_eq!(rec.to_line().split('\t').nth(4), Some("?"));
        assert!(rec.is_consistent());
    }

    #[test]
    fn directory_scan() {
        let dir = tempfile::tempdir().unwrap();
        write_group_file(dir.path().join("a.cay"), &cyclic(5).unwrap(), Some("cyclic:5")).unwrap();
        write_group_file(dir.path().join("b.cay"), &symmetric(3).unwrap(), None).unwrap();
        std::fs::create_dir(dir.path().join("sub")).unwrap();
        write_group_file(dir.path().join("sub/c.cay"), &extraspecial(3, false).unwrap(), None).unwrap();
        std::fs::write(dir.path().join("bad.cay"), "cay 1\nname X\norder 2\n0 0\n1 1\n").unwrap();
        let opts = ScanOptions {
            odd_only: true,
            jobs: 2,
            cache: Some(dir.path().join("cache")),
            ..Default::default()
        };
        let mut first = Vec::new();
        let s1 = scan_dir(dir.path(), &opts, &mut first).unwrap();
        assert_eq!((s1.files, s1.records, s1.skipped_even, s1.errors.len()), (4, 2, 1, 1));
        let mut second = Vec::new();
        let s2 = scan_dir(dir.path(), &opts, &mut second).unwrap();
        assert_eq!(s2.cache_hits, 2);
        assert_eq!(first, second);
        let recs = read_report(std::str::from_utf8(&first).unwrap()).unwrap();
        assert_eq!(recs[0].name, "C5");
        assert_eq!(recs[1].order, 27);
    }
}
