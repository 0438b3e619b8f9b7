use f4quant::verify::{run, Format, Suite, SuiteConfig};
use std::path::PathBuf;

fn config(cache: Option<PathBuf>, jobs: usize) -> SuiteConfig {
    SuiteConfig {
        suites: vec![Suite::Rootdata, Suite::Table, Suite::Serre, Suite::Ribbon],
        cache_path: cache,
        jobs,
        format: Format::Json,
        ..SuiteConfig::default()
    }
}

#[test]
fn fresh_and_cached_tables_give_identical_reports() {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("verify-runs-table.json");
    let _ = std::fs::remove_file(&path);
    let fresh = run(&config(Some(path.clone()), 1)).unwrap();
    assert!(path.exists());
    let cached = run(&config(Some(path.clone()), 1)).unwrap();
    assert_eq!(fresh.table_fingerprint, cached.table_fingerprint);
    assert_eq!(fresh.to_json(), cached.to_json());
    let uncached = run(&config(None, 1)).unwrap();
    assert_eq!(fresh.to_json(), uncached.to_json());
}

#[test]
fn stale_cache_is_rebuilt_with_a_warning() {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("verify-runs-stale.json");
    std::fs::write(&path, "{\"format_version\": 999}").unwrap();
    let report = run(&config(Some(path.clone()), 1)).unwrap();
    assert_eq!(report.warnings.len(), 1, "{:?}", report.warnings);
    assert!(report.all_passed());
    let again = run(&config(Some(path), 1)).unwrap();
    assert!(again.warnings.is_empty());
}

#[test]
fn reports_do_not_depend_on_job_count() {
    let one = run(&config(None, 1)).unwrap();
    let one_again = run(&config(None, 1)).unwrap();
    let four = run(&config(None, 4)).unwrap();
    assert_eq!(one.to_json(), one_again.to_json());
    assert_eq!(one.to_text(), four.to_text());
}

#[test]
fn duplicate_suites_run_once() {
    let cfg = SuiteConfig {
        suites: vec![Suite::Rootdata, Suite::Serre, Suite::Rootdata],
        ..SuiteConfig::default()
    };
    let report = run(&cfg).unwrap();
    let names: Vec<Suite> = report.suites.iter().map(|s| s.suite).collect();
    assert_eq!(names, vec![Suite::Rootdata, Suite::Serre]);
}
