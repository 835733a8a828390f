//! Scenario registry: every claim bound to an executable check, run with no
//! early abort and reported per check.

mod scenarios;

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::catalog::Catalog;
use crate::constructions::ConstructionOutput;
use crate::error::{Error, Result};

pub use scenarios::registry;

/// Environment variable holding a comma-separated list of scenario names to skip.
pub const SKIP_ENV: &str = "NOETHERLAB_SKIP";

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub claim: String,
    pub status: Status,
    /// Value, expression or counterexample; for skipped checks, the reason.
    pub witness: String,
    pub ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScenarioReport {
    pub name: String,
    pub anchor: String,
    pub characteristics: Vec<u32>,
    pub checks: Vec<CheckResult>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Totals {
    fn add(&mut self, status: Status) {
        match status {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::Skipped => self.skipped += 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub version: String,
    /// Field characteristics exercised, ascending.
    pub characteristics: Vec<u32>,
    pub scenarios: Vec<ScenarioReport>,
    pub totals: Totals,
}

impl SuiteReport {
    pub fn new(scenarios: Vec<ScenarioReport>) -> Self {
        let mut totals = Totals::default();
        let mut characteristics: Vec<u32> = Vec::new();
        for s in &scenarios {
            for c in &s.checks {
                totals.add(c.status);
            }
            characteristics.extend(&s.characteristics);
        }
        characteristics.sort_unstable();
        characteristics.dedup();
        SuiteReport {
            version: VERSION.to_string(),
            characteristics,
            scenarios,
            totals,
        }
    }

    /// 0 iff nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.totals.fail > 0)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// The report with every timing field zeroed.
    pub fn without_timing(&self) -> SuiteReport {
        let mut r = self.clone();
        for s in &mut r.scenarios {
            for c in &mut s.checks {
                c.ms = 0.0;
            }
        }
        r
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputMode {
    Text,
    Json,
}

/// Text mode: an aligned table of checks closed by a totals line. JSON mode:
/// the report object, whose last field is `totals`.
pub fn emit_report(report: &SuiteReport, mode: OutputMode) -> String {
    let totals = format!(
        "totals: pass {} fail {} skipped {}",
        report.totals.pass, report.totals.fail, report.totals.skipped
    );
    match mode {
        OutputMode::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(report).expect("report serializes")
        ),
        OutputMode::Text => {
            let rows: Vec<[String; 5]> = report
                .scenarios
                .iter()
                .flat_map(|s| {
                    s.checks.iter().map(move |c| {
                        [
                            s.name.clone(),
                            format!("{:?}", c.status).to_uppercase(),
                            format!("{:.1}", c.ms),
                            c.claim.clone(),
                            c.witness.clone(),
                        ]
                    })
                })
                .collect();
            let header = ["scenario", "status", "ms", "claim", "witness"].map(String::from);
            let mut widths = [0usize; 4];
            for row in std::iter::once(&header).chain(&rows) {
                for (w, cell) in widths.iter_mut().zip(row.iter()) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let mut out = String::new();
            for row in std::iter::once(&header).chain(&rows) {
                for (i, w) in widths.iter().enumerate() {
                    let pad = w - row[i].chars().count();
                    if i == 2 {
                        out.push_str(&" ".repeat(pad));
                        out.push_str(&row[i]);
                    } else {
                        out.push_str(&row[i]);
                        out.push_str(&" ".repeat(pad));
                    }
                    out.push_str("  ");
                }
                out.push_str(&row[4]);
                out.push('\n');
            }
            out.push_str(&totals);
            out.push('\n');
            out
        }
    }
}

/// A named group of checks tied to one anchor in the source argument.
pub struct Scenario {
    pub name: &'static str,
    pub anchor: &'static str,
    /// Characteristics the scenario computes over; 0 is the rationals.
    pub characteristics: &'static [u32],
    pub summary: &'static str,
    pub(crate) run: fn(&Catalog, &mut Recorder),
}

/// Collects check results with their timings.
#[derive(Default)]
pub struct Recorder {
    checks: Vec<CheckResult>,
}

const MAX_WITNESS: usize = 400;

impl Recorder {
    fn push(&mut self, claim: String, holds: bool, witness: String, ms: f64) {
        let mut witness: String = witness.chars().take(MAX_WITNESS).collect();
        if !holds && witness.is_empty() {
            witness = "(no witness produced)".into();
        }
        self.checks.push(CheckResult {
            claim,
            status: if holds { Status::Pass } else { Status::Fail },
            witness,
            ms,
        });
    }

    /// Runs one check; an error counts as a failure with the error as witness.
    pub fn check(&mut self, claim: impl Into<String>, f: impl FnOnce() -> Result<(bool, String)>) {
        let start = Instant::now();
        let (holds, witness) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
        self.push(
            claim.into(),
            holds,
            witness,
            start.elapsed().as_secs_f64() * 1e3,
        );
    }

    /// A check that `compute` returns `expected`; the witness is the computed value.
    pub fn expect_eq<T: PartialEq + std::fmt::Display>(
        &mut self,
        claim: impl Into<String>,
        expected: T,
        compute: impl FnOnce() -> Result<T>,
    ) {
        self.check(claim, || {
            let got = compute()?;
            let holds = got == expected;
            Ok((
                holds,
                if holds {
                    got.to_string()
                } else {
                    format!("{got}, expected {expected}")
                },
            ))
        });
    }

    /// A check that an operation is rejected.
    pub fn expect_err<T>(&mut self, claim: impl Into<String>, f: impl FnOnce() -> Result<T>) {
        self.check(claim, || {
            Ok(match f() {
                Err(e) => (true, e.to_string()),
                Ok(_) => (false, "accepted".into()),
            })
        });
    }

    /// Every claim, relation and fact of a construction, each timed; the
    /// build time is charged to the first check.
    pub fn construction(&mut self, tag: &str, build: impl FnOnce() -> Result<ConstructionOutput>) {
        let start = Instant::now();
        let out = match build() {
            Ok(out) => out,
            Err(e) => {
                self.push(
                    format!("[{tag}] construction"),
                    false,
                    format!("error: {e}"),
                    start.elapsed().as_secs_f64() * 1e3,
                );
                return;
            }
        };
        let mut carry = start.elapsed().as_secs_f64() * 1e3;
        let mut timed = |rec: &mut Recorder, f: &dyn Fn() -> crate::constructions::Outcome| {
            let t = Instant::now();
            let o = f();
            let ms = t.elapsed().as_secs_f64() * 1e3 + std::mem::take(&mut carry);
            rec.push(format!("[{tag}] {}", o.label), o.holds, o.witness, ms);
        };
        for c in &out.claims {
            timed(self, &|| out.check_claim(c));
        }
        for r in &out.relations {
            timed(self, &|| out.check_relation(r));
        }
        for r in &out.map_relations {
            timed(self, &|| out.check_map_relation(r));
        }
        for f in &out.facts {
            timed(self, &|| crate::constructions::Outcome {
                label: f.label.clone(),
                holds: f.holds,
                witness: f.witness.clone(),
                anchor: f.anchor,
            });
        }
        for note in &out.notes {
            self.push(format!("[{tag}] note"), true, note.clone(), 0.0);
        }
    }

    pub fn into_checks(self) -> Vec<CheckResult> {
        self.checks
    }
}

fn find(name: &str) -> Result<&'static Scenario> {
    registry()
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

/// Registered scenario names containing `filter`, in lexicographic order.
pub fn list_scenarios(filter: Option<&str>) -> Vec<&'static str> {
    registry()
        .iter()
        .map(|s| s.name)
        .filter(|n| filter.is_none_or(|f| n.contains(f)))
        .collect()
}

/// Scenario names listed in [`SKIP_ENV`].
pub fn skip_list_from_env() -> Vec<String> {
    std::env::var(SKIP_ENV)
        .map(|v| {
            v.split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect()
        })
        .unwrap_or_default()
}

fn report_for(catalog: &Catalog, scenario: &Scenario, skip: &[String]) -> ScenarioReport {
    let checks = if skip.iter().any(|s| s == scenario.name) {
        vec![CheckResult {
            claim: "scenario".into(),
            status: Status::Skipped,
            witness: format!("listed in {SKIP_ENV}"),
            ms: 0.0,
        }]
    } else {
        let mut rec = Recorder::default();
        (scenario.run)(catalog, &mut rec);
        rec.into_checks()
    };
    ScenarioReport {
        name: scenario.name.into(),
        anchor: scenario.anchor.into(),
        characteristics: scenario.characteristics.to_vec(),
        checks,
    }
}

/// Every check of one scenario against the bundled catalog, honoring [`SKIP_ENV`].
pub fn run_scenario(name: &str) -> Result<Vec<CheckResult>> {
    Ok(report_for(Catalog::standard(), find(name)?, &skip_list_from_env()).checks)
}

/// One scenario against an arbitrary catalog, skipping nothing.
pub fn run_scenario_with(catalog: &Catalog, name: &str) -> Result<ScenarioReport> {
    Ok(report_for(catalog, find(name)?, &[]))
}

/// The named scenarios (all when `names` is empty) on up to `jobs` threads,
/// merged in registry order.
pub fn run_selected(
    catalog: &Catalog,
    names: &[&str],
    jobs: usize,
    skip: &[String],
) -> Result<SuiteReport> {
    for n in names {
        find(n)?;
    }
    let chosen: Vec<&Scenario> = registry()
        .iter()
        .filter(|s| names.is_empty() || names.contains(&s.name))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    let reports = pool.install(|| {
        chosen
            .par_iter()
            .map(|s| report_for(catalog, s, skip))
            .collect()
    });
    Ok(SuiteReport::new(reports))
}

/// The whole registry against the bundled catalog, honoring [`SKIP_ENV`].
pub fn run_all(jobs: usize) -> SuiteReport {
    run_selected(Catalog::standard(), &[], jobs, &skip_list_from_env())
        .expect("registry names resolve")
}

/// Registered names closest to `name` by edit distance, best first.
pub fn nearest_scenarios(name: &str, count: usize) -> Vec<&'static str> {
    let mut scored: Vec<(usize, &'static str)> = registry()
        .iter()
        .map(|s| (strsim::levenshtein(name, s.name), s.name))
        .collect();
    scored.sort();
    scored.into_iter().take(count).map(|(_, n)| n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listing() {
        assert_eq!(
            list_scenarios(Some("sec5.4")),
            [
                "sec5.4-class4",
                "sec5.4-class5",
                "sec5.4-class6and9",
                "sec5.4-determinants"
            ]
        );
        let all = list_scenarios(None);
        assert!(all.len() >= 20);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(list_scenarios(Some("zzz")).is_empty());
    }

    #[test]
    fn determinants_scenario() {
        let checks = run_scenario("sec5.4-determinants").unwrap();
        let witnesses: Vec<&str> = checks.iter().map(|c| c.witness.as_str()).collect();
        assert_eq!(witnesses, ["8", "16", "64"]);
        assert!(checks.iter().all(|c| c.status == Status::Pass));
        assert!(matches!(run_scenario("nope"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn skipping_and_totals() {
        let skip = vec!["sec5.4-determinants".to_string()];
        let r = run_selected(
            Catalog::standard(),
            &["sec5.4-determinants", "artin-schreier"],
            2,
            &skip,
        )
        .unwrap();
        // registry order, not request order
        assert_eq!(r.scenarios[0].name, "artin-schreier");
        assert_eq!(r.scenarios[1].checks[0].status, Status::Skipped);
        assert_eq!(r.totals.skipped, 1);
        assert_eq!(r.totals.pass, r.scenarios[0].checks.len());
        let text = emit_report(&r, OutputMode::Text);
        assert!(text
            .trim_end()
            .ends_with(&format!("totals: pass {} fail 0 skipped 1", r.totals.pass)));
    }

    #[test]
    fn empty_report() {
        let r = SuiteReport::new(Vec::new());
        assert_eq!(r.totals, Totals::default());
        let json = emit_report(&r, OutputMode::Json);
        let back: SuiteReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert!(json.trim_end().ends_with("\"skipped\": 0\n  }\n}"));
        assert!(emit_report(&r, OutputMode::Text).ends_with("totals: pass 0 fail 0 skipped 0\n"));
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn nearest_names() {
        assert_eq!(
            nearest_scenarios("sec5.4-determinant", 1),
            ["sec5.4-determinants"]
        );
    }
}
