//! One line per acceptance criterion at (ell, y, z) = (5, 1, 2).
//!
//! Exits nonzero when any criterion fails.

use f4quant::verify::{self, CheckRecord, Report, Status, Suite, SuiteConfig};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

struct Criterion {
    id: u32,
    title: &'static str,
    suites: &'static [Suite],
}

const CRITERIA: [Criterion; 14] = [
    Criterion {
        id: 1,
        title: "root data invariants",
        suites: &[Suite::Rootdata],
    },
    Criterion {
        id: 2,
        title: "straightening table over Q(r,s)",
        suites: &[Suite::Table],
    },
    Criterion {
        id: 3,
        title: "golden vectors and multi-factorizations",
        suites: &[Suite::Golden, Suite::Multifactor],
    },
    Criterion {
        id: 4,
        title: "associativity of all i<j<k triples",
        suites: &[Suite::Associativity],
    },
    Criterion {
        id: 5,
        title: "free-algebra oracle to height 6",
        suites: &[Suite::Oracle],
    },
    Criterion {
        id: 6,
        title: "adjoint nilpotency, cap 12",
        suites: &[Suite::Nilpotency],
    },
    Criterion {
        id: 7,
        title: "defining relations, tau, adjoint Serre",
        suites: &[Suite::Serre, Suite::Cross],
    },
    Criterion {
        id: 8,
        title: "centrality of ell-th powers, height <= 6",
        suites: &[Suite::Centrality],
    },
    Criterion {
        id: 9,
        title: "Hopf axioms and Hopf ideal desk checks",
        suites: &[Suite::HopfAxioms, Suite::HopfIdeal],
    },
    Criterion {
        id: 10,
        title: "skew pairing",
        suites: &[Suite::Pairing],
    },
    Criterion {
        id: 11,
        title: "integrals and distinguished grouplikes",
        suites: &[Suite::Integrals, Suite::Distinguished],
    },
    Criterion {
        id: 12,
        title: "ribbon data and double determinant",
        suites: &[Suite::Ribbon, Suite::Double],
    },
    Criterion {
        id: 13,
        title: "isomorphism maps, zeta = +1 and -1",
        suites: &[Suite::Iso],
    },
    Criterion {
        id: 14,
        title: "desk-scale replacements stated explicitly",
        suites: &[Suite::Indexing],
    },
];

/// Skipped records criterion 14 must carry.
const STATED_OUT_OF_SCOPE: [&str; 3] = [
    "indexing.dimension-enumeration",
    "indexing.higher-root-ideal",
    "indexing.dual-integrals",
];

fn records<'a>(report: &'a Report, suites: &[Suite]) -> Vec<&'a CheckRecord> {
    suites
        .iter()
        .filter_map(|&s| report.suite(s))
        .flat_map(|r| &r.records)
        .collect()
}

fn judge(c: &Criterion, recs: &[&CheckRecord]) -> (bool, String) {
    let pass = recs.iter().filter(|r| r.status == Status::Pass).count();
    let fail: Vec<&str> = recs
        .iter()
        .filter(|r| r.status == Status::Fail)
        .map(|r| r.check_id.as_str())
        .collect();
    let skipped: Vec<&str> = recs
        .iter()
        .filter(|r| r.status == Status::Skipped)
        .map(|r| r.check_id.as_str())
        .collect();
    let mut ok = !recs.is_empty() && fail.is_empty();
    if c.id == 14 {
        ok &= STATED_OUT_OF_SCOPE.iter().all(|id| skipped.contains(id));
    } else {
        ok &= skipped.is_empty() || c.id == 8;
    }
    let mut detail = format!(
        "{pass} pass, {} fail, {} skipped",
        fail.len(),
        skipped.len()
    );
    if !fail.is_empty() {
        detail.push_str(&format!("; failing: {}", fail.join(" ")));
    }
    if !skipped.is_empty() {
        detail.push_str(&format!("; skipped: {}", skipped.join(" ")));
    }
    (ok, detail)
}

fn run_criterion(c: &Criterion, cache: &Path, jobs: usize) -> (bool, String, Duration) {
    let config = SuiteConfig {
        suites: c.suites.to_vec(),
        cache_path: Some(cache.to_path_buf()),
        jobs,
        ..SuiteConfig::default()
    };
    let start = Instant::now();
    let outcome = verify::run(&config);
    let elapsed = start.elapsed();
    match outcome {
        Ok(report) => {
            let (ok, detail) = judge(c, &records(&report, c.suites));
            (ok, detail, elapsed)
        }
        Err(e) => (false, format!("error: {e}"), elapsed),
    }
}

fn main() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let cache = dir.join("acceptance-table.json");
    let _ = std::fs::remove_file(&cache);
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());

    let mut failed = Vec::new();
    for c in &CRITERIA {
        let (ok, detail, elapsed) = run_criterion(c, &cache, jobs);
        println!(
            "criterion {:>2} [PRIMARY] {} {} ({:.2?}): {}",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.title,
            elapsed,
            detail
        );
        if !ok {
            failed.push(c.id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 14 criteria pass");
    } else {
        let ids: Vec<String> = failed.iter().map(u32::to_string).collect();
        println!(
            "acceptance: {} of 14 criteria fail ({})",
            failed.len(),
            ids.join(", ")
        );
        std::process::exit(1);
    }
}
