//! Command-line front end for the verification suites.

use clap::{Parser, ValueEnum};
use f4quant::coeff::SpecParams;
use f4quant::verify::{self, Format, Suite, SuiteConfig};
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

/// Exit status when every selected check passes.
pub const EXIT_PASS: i32 = 0;
/// Exit status when at least one check fails.
pub const EXIT_FAIL: i32 = 1;
/// Exit status for rejected input (bad flags, invalid parameters, I/O).
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        }
    }
}

/// Exact verification of U_{r,s}(F4) and its restricted quotient.
///
/// Specialization parameters default to (ell, y, z) = (5, 1, 2); any of the
/// three may be overridden on its own.
#[derive(Debug, Parser)]
#[command(name = "f4verify", version)]
pub struct Cli {
    /// Order of the root of unity (odd).
    #[arg(long)]
    pub ell: Option<u32>,
    /// Exponent with r = zeta^y.
    #[arg(long)]
    pub y: Option<i64>,
    /// Exponent with s = zeta^z.
    #[arg(long)]
    pub z: Option<i64>,
    /// Comma-separated suite names, or "all".
    #[arg(long, value_delimiter = ',', default_value = "all")]
    pub suite: Vec<String>,
    /// Root height bound for the oracle and centrality sweeps.
    #[arg(long, default_value_t = 6)]
    pub max_height: u32,
    /// Straightening-table cache file; created when missing or stale.
    #[arg(long)]
    pub table_cache: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
    /// Worker threads; suites run in parallel.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Include the heavy checks (all 24 roots for centrality and Hopf
    /// axioms, integrals for ell > 5).
    #[arg(long)]
    pub extended: bool,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Parses a suite list; "all" expands to every suite.
pub fn parse_suites(names: &[String]) -> Result<Vec<Suite>, String> {
    let mut out = Vec::new();
    for n in names.iter().map(|n| n.trim()).filter(|n| !n.is_empty()) {
        if n == "all" {
            out.extend(Suite::ALL);
            continue;
        }
        match Suite::from_name(n) {
            Some(s) => out.push(s),
            None => {
                let known: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                return Err(format!("unknown suite '{n}' (known: {})", known.join(", ")));
            }
        }
    }
    if out.is_empty() {
        return Err("no suites selected".into());
    }
    Ok(out)
}

impl Cli {
    /// Builds a validated configuration; nothing heavy runs here.
    pub fn to_config(&self) -> Result<SuiteConfig, String> {
        let d = SpecParams::default();
        let spec = SpecParams::new(
            self.ell.unwrap_or(d.ell),
            self.y.unwrap_or(d.y),
            self.z.unwrap_or(d.z),
        )
        .map_err(|e| e.to_string())?;
        if self.jobs == 0 {
            return Err("--jobs must be at least 1".into());
        }
        Ok(SuiteConfig {
            suites: parse_suites(&self.suite)?,
            spec: Some(spec),
            max_height: self.max_height,
            cache_path: self.table_cache.clone(),
            format: self.format.into(),
            jobs: self.jobs,
            extended: self.extended,
        })
    }
}

/// Runs the CLI; the report goes to `out` (or `--output`), diagnostics to
/// `err`. Returns the process exit status.
pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let config = match cli.to_config() {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let start = Instant::now();
    let report = match verify::run(&config) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let elapsed = start.elapsed();
    for w in &report.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    let text = report.render(config.format);
    let written = match &cli.output {
        Some(p) => std::fs::write(p, &text).map_err(|e| format!("{}: {e}", p.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    let _ = writeln!(
        err,
        "{} passed, {} failed, {} skipped in {:.2?}",
        report.totals.pass, report.totals.fail, report.totals.skipped, elapsed
    );
    if report.all_passed() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("f4verify").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn defaults() {
        let c = cli(&[]).to_config().unwrap();
        assert_eq!(c.spec, Some(SpecParams { ell: 5, y: 1, z: 2 }));
        assert_eq!(c.suites, Suite::ALL.to_vec());
        assert_eq!(c.max_height, 6);
        assert_eq!(c.format, Format::Text);
    }

    #[test]
    fn suite_list_with_alias() {
        let c = cli(&["--suite", "lemma31,golden", "--format", "json"])
            .to_config()
            .unwrap();
        assert_eq!(c.suites, vec![Suite::Multifactor, Suite::Golden]);
        assert_eq!(c.format, Format::Json);
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(cli(&["--suite", "serre,bogus"]).to_config().is_err());
    }

    #[test]
    fn r_cubed_equal_s_cubed_is_rejected() {
        let c = cli(&["--ell", "9", "--y", "1", "--z", "4"]);
        assert!(c.to_config().is_err());
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(execute(&c, &mut out, &mut err), EXIT_USAGE);
        assert!(out.is_empty());
        assert!(String::from_utf8(err).unwrap().contains("error"));
    }

    #[test]
    fn partial_override_keeps_other_defaults() {
        let c = cli(&["--z", "3"]).to_config().unwrap();
        assert_eq!(c.spec, Some(SpecParams { ell: 5, y: 1, z: 3 }));
    }

    #[test]
    fn zero_jobs_is_rejected() {
        assert!(cli(&["--jobs", "0"]).to_config().is_err());
    }

    #[test]
    fn passing_run_exits_zero_and_is_deterministic() {
        let c = cli(&["--suite", "rootdata,serre", "--format", "json"]);
        let (mut a, mut b, mut err) = (Vec::new(), Vec::new(), Vec::new());
        assert_eq!(execute(&c, &mut a, &mut err), EXIT_PASS);
        assert_eq!(execute(&c, &mut b, &mut err), EXIT_PASS);
        assert_eq!(a, b);
        let text = String::from_utf8(a).unwrap();
        assert!(text.contains("\"table_fingerprint\""));
    }

    #[test]
    fn exit_status_tracks_failures() {
        let c = cli(&["--suite", "golden,iso", "--format", "json"]);
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = execute(&c, &mut out, &mut err);
        let report = verify::run(&c.to_config().unwrap()).unwrap();
        let expected = if report.totals.fail == 0 {
            EXIT_PASS
        } else {
            EXIT_FAIL
        };
        assert_eq!(code, expected);
        assert_eq!(out, report.to_json().into_bytes());
    }
}
