//! Named verification suites over the kernel, with deterministic reports.

mod full;
mod golden_data;
mod hopf_suites;
mod plus;

pub use golden_data::GOLDEN_GROUPS;

use crate::coeff::RatFunc2;
use crate::coeff::{CoeffError, RatField, SpecParams, SpecRing};
use crate::fullu::UAlgebra;
use crate::pbwplus::{
    build_straightening_table, PbwAlgebra, StraighteningTable, TableError, Truncation,
};
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;
use std::path::PathBuf;
use std::sync::OnceLock;
use thiserror::Error;

/// Longest witness kept in a record.
const WITNESS_LIMIT: usize = 4000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Rootdata,
    Table,
    Serre,
    Multifactor,
    Golden,
    Associativity,
    Oracle,
    Nilpotency,
    Cross,
    Centrality,
    HopfAxioms,
    HopfIdeal,
    Pairing,
    Integrals,
    Distinguished,
    Ribbon,
    Iso,
    Double,
    Indexing,
}

impl Suite {
    pub const ALL: [Suite; 19] = [
        Suite::Rootdata,
        Suite::Table,
        Suite::Serre,
        Suite::Multifactor,
        Suite::Golden,
        Suite::Associativity,
        Suite::Oracle,
        Suite::Nilpotency,
        Suite::Cross,
        Suite::Centrality,
        Suite::HopfAxioms,
        Suite::HopfIdeal,
        Suite::Pairing,
        Suite::Integrals,
        Suite::Distinguished,
        Suite::Ribbon,
        Suite::Iso,
        Suite::Double,
        Suite::Indexing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Rootdata => "rootdata",
            Suite::Table => "table",
            Suite::Serre => "serre",
            Suite::Multifactor => "multifactor",
            Suite::Golden => "golden",
            Suite::Associativity => "associativity",
            Suite::Oracle => "oracle",
            Suite::Nilpotency => "nilpotency",
            Suite::Cross => "cross",
            Suite::Centrality => "centrality",
            Suite::HopfAxioms => "hopf-axioms",
            Suite::HopfIdeal => "hopf-ideal",
            Suite::Pairing => "pairing",
            Suite::Integrals => "integrals",
            Suite::Distinguished => "distinguished",
            Suite::Ribbon => "ribbon",
            Suite::Iso => "iso",
            Suite::Double => "double",
            Suite::Indexing => "indexing",
        }
    }

    /// Parses a suite name; `lemma31` is accepted for `multifactor`.
    pub fn from_name(s: &str) -> Option<Suite> {
        if s == "lemma31" {
            return Some(Suite::Multifactor);
        }
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }

    /// Suites that run over a root-of-unity specialization.
    pub fn requires_spec(self) -> bool {
        matches!(
            self,
            Suite::Centrality
                | Suite::HopfIdeal
                | Suite::Integrals
                | Suite::Distinguished
                | Suite::Ribbon
                | Suite::Iso
                | Suite::Double
                | Suite::Indexing
        )
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub check_id: String,
    /// The statement being checked.
    pub reference: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckRecord {
    pub fn new(check_id: impl Into<String>, reference: impl Into<String>, ok: bool) -> Self {
        CheckRecord {
            check_id: check_id.into(),
            reference: reference.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness: None,
        }
    }

    pub fn skipped(
        check_id: impl Into<String>,
        reference: impl Into<String>,
        why: impl Into<String>,
    ) -> Self {
        CheckRecord {
            check_id: check_id.into(),
            reference: reference.into(),
            status: Status::Skipped,
            witness: Some(why.into()),
        }
    }

    pub fn with_witness(mut self, w: impl Into<String>) -> Self {
        let mut w: String = w.into();
        if w.len() > WITNESS_LIMIT {
            let mut cut = WITNESS_LIMIT;
            while !w.is_char_boundary(cut) {
                cut -= 1;
            }
            w.truncate(cut);
            w.push_str(" ...");
        }
        self.witness = Some(w);
        self
    }

    /// Attaches the witness only when the check failed.
    pub fn witness_on_fail(self, w: impl FnOnce() -> String) -> Self {
        if self.status == Status::Fail {
            self.with_witness(w())
        } else {
            self
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    Json,
    #[default]
    Text,
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suites: Vec<Suite>,
    pub spec: Option<SpecParams>,
    pub max_height: u32,
    pub cache_path: Option<PathBuf>,
    pub format: Format,
    pub jobs: usize,
    pub extended: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suites: Suite::ALL.to_vec(),
            spec: Some(SpecParams::default()),
            max_height: 6,
            cache_path: None,
            format: Format::Text,
            jobs: 1,
            extended: false,
        }
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("suite {0} needs specialization parameters")]
    MissingSpec(Suite),
    #[error(transparent)]
    Spec(#[from] CoeffError),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("thread pool: {0}")]
    Pool(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Parameters {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<SpecParams>,
    pub max_height: u32,
    pub extended: bool,
    pub suites: Vec<Suite>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub suite: Suite,
    pub records: Vec<CheckRecord>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.status != Status::Fail)
    }
}

/// Report of one run. Wall-clock time is kept out so that identical
/// configurations produce byte-identical output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub parameters: Parameters,
    /// FNV-1a of the straightening table's cache text.
    pub table_fingerprint: String,
    pub warnings: Vec<String>,
    pub totals: Totals,
    pub suites: Vec<SuiteResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.totals.fail == 0
    }

    pub fn suite(&self, s: Suite) -> Option<&SuiteResult> {
        self.suites.iter().find(|r| r.suite == s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let p = &self.parameters;
        match p.spec {
            Some(s) => out.push_str(&format!("parameters: {s}")),
            None => out.push_str("parameters: generic"),
        }
        out.push_str(&format!(
            ", max_height={}, extended={}\ntable fingerprint: {}\n",
            p.max_height, p.extended, self.table_fingerprint
        ));
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        for s in &self.suites {
            out.push_str(&format!("\n[{}]\n", s.suite));
            for r in &s.records {
                out.push_str(&format!(
                    "  {:<8} {:<40} {}\n",
                    r.status, r.check_id, r.reference
                ));
                if let Some(w) = &r.witness {
                    out.push_str(&format!("           {w}\n"));
                }
            }
        }
        let t = &self.totals;
        out.push_str(&format!(
            "\ntotals: {} pass, {} fail, {} skipped\n",
            t.pass, t.fail, t.skipped
        ));
        out
    }

    pub fn render(&self, f: Format) -> String {
        match f {
            Format::Json => self.to_json(),
            Format::Text => self.to_text(),
        }
    }
}

/// 64-bit FNV-1a, as hex.
pub fn fingerprint(text: &str) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in text.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{h:016x}")
}

/// Frozen data shared by all suites; algebras are built on first use.
pub struct Context {
    pub table: StraighteningTable<RatFunc2>,
    pub spec: Option<SpecParams>,
    pub max_height: u32,
    pub extended: bool,
    pbw: OnceLock<PbwAlgebra<RatField>>,
    generic: OnceLock<UAlgebra<RatField>>,
    exact: OnceLock<UAlgebra<SpecRing>>,
    restricted: OnceLock<UAlgebra<SpecRing>>,
}

impl Context {
    pub fn new(
        table: StraighteningTable<RatFunc2>,
        spec: Option<SpecParams>,
        max_height: u32,
        extended: bool,
    ) -> Self {
        Context {
            table,
            spec,
            max_height,
            extended,
            pbw: OnceLock::new(),
            generic: OnceLock::new(),
            exact: OnceLock::new(),
            restricted: OnceLock::new(),
        }
    }

    /// U⁺ over Q(r, s).
    pub fn pbw(&self) -> &PbwAlgebra<RatField> {
        self.pbw
            .get_or_init(|| PbwAlgebra::new(RatField, &self.table, Truncation::None))
    }

    /// U over Q(r, s).
    pub fn generic(&self) -> &UAlgebra<RatField> {
        self.generic.get_or_init(|| {
            UAlgebra::new(RatField, &self.table, Truncation::None).expect("generic coefficients")
        })
    }

    fn spec_or_panic(&self) -> SpecParams {
        self.spec.expect("suite requires specialization parameters")
    }

    /// U over the specialization, without truncation.
    pub fn exact(&self) -> &UAlgebra<SpecRing> {
        self.exact.get_or_init(|| {
            let s = self.spec_or_panic();
            UAlgebra::new(s.ring(), &self.table, Truncation::None).expect("valid specialization")
        })
    }

    /// The restricted quotient u.
    pub fn restricted(&self) -> &UAlgebra<SpecRing> {
        self.restricted.get_or_init(|| {
            let s = self.spec_or_panic();
            UAlgebra::new(s.ring(), &self.table, Truncation::At(s.ell))
                .expect("valid specialization")
        })
    }
}

/// Loads the table from `path` when possible, else builds (and stores) it.
pub fn obtain_table(
    path: Option<&std::path::Path>,
    warnings: &mut Vec<String>,
) -> Result<StraighteningTable<RatFunc2>, VerifyError> {
    if let Some(p) = path {
        if p.exists() {
            match StraighteningTable::load(p) {
                Ok(t) => return Ok(t),
                Err(e @ TableError::Version { .. }) | Err(e @ TableError::Format(_)) => {
                    warnings.push(format!("table cache {}: {e}; rebuilding", p.display()));
                }
                Err(e) => return Err(e.into()),
            }
        }
    }
    let t = build_straightening_table()?;
    if let Some(p) = path {
        t.store(p)?;
    }
    Ok(t)
}

fn run_suite(ctx: &Context, s: Suite) -> Vec<CheckRecord> {
    match s {
        Suite::Rootdata => plus::rootdata(ctx),
        Suite::Table => plus::table(ctx),
        Suite::Serre => full::serre(ctx),
        Suite::Multifactor => plus::multifactor(ctx),
        Suite::Golden => plus::golden(ctx),
        Suite::Associativity => plus::associativity(ctx),
        Suite::Oracle => plus::oracle(ctx),
        Suite::Nilpotency => plus::nilpotency(ctx),
        Suite::Cross => full::cross(ctx),
        Suite::Centrality => full::centrality(ctx),
        Suite::HopfAxioms => hopf_suites::axioms(ctx),
        Suite::HopfIdeal => hopf_suites::ideal(ctx),
        Suite::Pairing => hopf_suites::pairing(ctx),
        Suite::Integrals => hopf_suites::integrals(ctx),
        Suite::Distinguished => hopf_suites::distinguished(ctx),
        Suite::Ribbon => hopf_suites::ribbon(ctx),
        Suite::Iso => hopf_suites::iso(ctx),
        Suite::Double => hopf_suites::double(ctx),
        Suite::Indexing => full::indexing(ctx),
    }
}

/// Validates the configuration, obtains the table, and runs the selected
/// suites. Results are ordered as the suites were given.
pub fn run(config: &SuiteConfig) -> Result<Report, VerifyError> {
    if let Some(s) = &config.spec {
        s.validate()?;
    }
    if let Some(&s) = config.suites.iter().find(|s| s.requires_spec()) {
        if config.spec.is_none() {
            return Err(VerifyError::MissingSpec(s));
        }
    }
    let mut seen = std::collections::HashSet::new();
    let suites: Vec<Suite> = config
        .suites
        .iter()
        .copied()
        .filter(|s| seen.insert(*s))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .stack_size(1 << 30)
        .build()
        .map_err(|e| VerifyError::Pool(e.to_string()))?;
    pool.install(|| {
        let mut warnings = Vec::new();
        let table = obtain_table(config.cache_path.as_deref(), &mut warnings)?;
        let table_fingerprint = fingerprint(&table.to_cache_text());
        let ctx = Context::new(table, config.spec, config.max_height, config.extended);
        let results: Vec<SuiteResult> = suites
            .par_iter()
            .map(|&s| SuiteResult {
                suite: s,
                records: run_suite(&ctx, s),
            })
            .collect();
        let mut totals = Totals::default();
        for r in results.iter().flat_map(|s| &s.records) {
            match r.status {
                Status::Pass => totals.pass += 1,
                Status::Fail => totals.fail += 1,
                Status::Skipped => totals.skipped += 1,
            }
        }
        Ok(Report {
            parameters: Parameters {
                spec: config.spec,
                max_height: config.max_height,
                extended: config.extended,
                suites,
            },
            table_fingerprint,
            warnings,
            totals,
            suites: results,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::from_name(s.name()), Some(s));
        }
        assert_eq!(Suite::from_name("lemma31"), Some(Suite::Multifactor));
        assert_eq!(Suite::from_name("nope"), None);
    }

    #[test]
    fn fnv_reference_values() {
        assert_eq!(fingerprint(""), "cbf29ce484222325");
        assert_eq!(fingerprint("a"), "af63dc4c8601ec8c");
    }

    #[test]
    fn invalid_spec_is_rejected_before_work() {
        let cfg = SuiteConfig {
            spec: Some(SpecParams { ell: 9, y: 1, z: 4 }),
            ..SuiteConfig::default()
        };
        assert!(matches!(run(&cfg), Err(VerifyError::Spec(_))));
    }

    #[test]
    fn missing_spec_is_rejected() {
        let cfg = SuiteConfig {
            suites: vec![Suite::Ribbon],
            spec: None,
            ..SuiteConfig::default()
        };
        assert!(matches!(
            run(&cfg),
            Err(VerifyError::MissingSpec(Suite::Ribbon))
        ));
    }

    #[test]
    fn long_witness_is_cut() {
        let r = CheckRecord::new("x", "y", false).with_witness("é".repeat(3000));
        assert!(r.witness.unwrap().len() <= WITNESS_LIMIT + 4);
    }
}
