//! Aggregation of per-sample identity checks into a run report.

use std::collections::HashMap;
use std::fmt::Write;

use g2lab::record::{is_informational, VerificationRecord};
use g2lab::Scalar;
use serde_json::{json, Value};

use crate::config::{Mode, RunConfig};
use crate::render::Render;

#[derive(Clone, Debug, PartialEq)]
pub struct CheckSummary {
    pub id: String,
    /// The identity being checked, as a formula.
    pub anchor: String,
    pub evaluations: usize,
    pub failures: usize,
    /// Index of the first failing sample; `None` for structural checks or no failure.
    pub first_failure: Option<u64>,
    pub max_residual: String,
    pub pass: bool,
}

impl CheckSummary {
    fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "anchor": self.anchor,
            "evaluations": self.evaluations,
            "failures": self.failures,
            "first_failure": self.first_failure,
            "max_residual": self.max_residual,
            "pass": self.pass,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub samples: usize,
    pub mode: Mode,
    pub range: i64,
    pub strict: bool,
    /// Gating checks: the run passes iff all of these pass.
    pub checks: Vec<CheckSummary>,
    /// Evaluated and reported, never gating.
    pub informational: Vec<CheckSummary>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn pass_set(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| c.pass)
            .map(|c| c.id.as_str())
            .collect()
    }

    pub fn check(&self, id: &str) -> Option<&CheckSummary> {
        self.checks
            .iter()
            .chain(&self.informational)
            .find(|c| c.id == id)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "seed": self.seed,
            "samples": self.samples,
            "mode": self.mode.to_string(),
            "range": self.range,
            "strict": self.strict,
            "passed": self.passed(),
            "checks": self.checks.iter().map(CheckSummary::to_json).collect::<Vec<_>>(),
            "informational": self.informational.iter().map(CheckSummary::to_json).collect::<Vec<_>>(),
            "notes": self.notes,
        })
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "# {} ({status})\n", self.suite);
        let _ = writeln!(
            out,
            "seed {} · samples {} · mode {} · range ±{} · strict {}\n",
            self.seed, self.samples, self.mode, self.range, self.strict
        );
        table(&mut out, "Checks", &self.checks);
        table(&mut out, "Informational", &self.informational);
        let failed: Vec<_> = self.checks.iter().filter(|c| !c.pass).collect();
        if !failed.is_empty() {
            let _ = writeln!(out, "## Failures\n");
            for c in failed {
                let _ = writeln!(out, "### {}\n\n{}\n", c.id, c.anchor);
                let _ = writeln!(
                    out,
                    "{} of {} evaluations failed; first failing sample {}; max residual {}.\n",
                    c.failures,
                    c.evaluations,
                    c.first_failure.map_or("-".to_string(), |i| i.to_string()),
                    c.max_residual
                );
            }
        }
        if !self.notes.is_empty() {
            let _ = writeln!(out, "## Notes\n");
            for n in &self.notes {
                let _ = writeln!(out, "- {n}");
            }
        }
        out
    }
}

fn table(out: &mut String, title: &str, rows: &[CheckSummary]) {
    if rows.is_empty() {
        return;
    }
    let _ = writeln!(out, "## {title}\n");
    let _ = writeln!(
        out,
        "| id | identity | evaluations | failures | max residual | status |"
    );
    let _ = writeln!(out, "|---|---|---|---|---|---|");
    for c in rows {
        let status = if c.pass { "pass" } else { "FAIL" };
        let _ = writeln!(
            out,
            "| `{}` | {} | {} | {} | {} | {status} |",
            c.id,
            c.anchor.replace('|', "\\|"),
            c.evaluations,
            c.failures,
            c.max_residual
        );
    }
    let _ = writeln!(out);
}

struct Entry<S> {
    id: &'static str,
    statement: &'static str,
    evaluations: usize,
    failures: usize,
    first_failure: Option<u64>,
    max_residual: S,
}

/// Running per-id totals, in first-seen order.
pub(crate) struct Tally<S> {
    entries: Vec<Entry<S>>,
    index: HashMap<&'static str, usize>,
}

impl<S: Scalar + Render> Tally<S> {
    pub(crate) fn new() -> Self {
        Tally {
            entries: Vec::new(),
            index: HashMap::new(),
        }
    }

    pub(crate) fn add(&mut self, record: &VerificationRecord<S>, sample: Option<u64>) {
        for check in &record.checks {
            let k = *self.index.entry(check.id).or_insert_with(|| {
                self.entries.push(Entry {
                    id: check.id,
                    statement: check.statement,
                    evaluations: 0,
                    failures: 0,
                    first_failure: None,
                    max_residual: S::zero(),
                });
                self.entries.len() - 1
            });
            let e = &mut self.entries[k];
            e.evaluations += 1;
            for r in &check.residual {
                if r.abs() > e.max_residual {
                    e.max_residual = r.abs();
                }
            }
            if !check.holds() {
                e.failures += 1;
                if e.first_failure.is_none() {
                    e.first_failure = sample;
                }
            }
        }
    }

    pub(crate) fn finish(
        self,
        suite: &str,
        cfg: &RunConfig,
        notes: Vec<String>,
    ) -> VerificationReport {
        let (mut checks, mut informational) = (Vec::new(), Vec::new());
        for e in self.entries {
            let summary = CheckSummary {
                id: e.id.to_string(),
                anchor: e.statement.to_string(),
                evaluations: e.evaluations,
                failures: e.failures,
                first_failure: e.first_failure,
                max_residual: e.max_residual.render(),
                pass: e.failures == 0,
            };
            if is_informational(e.id) {
                informational.push(summary);
            } else {
                checks.push(summary);
            }
        }
        VerificationReport {
            suite: suite.to_string(),
            seed: cfg.seed,
            samples: cfg.samples,
            mode: cfg.mode,
            range: cfg.range,
            strict: cfg.strict,
            checks,
            informational,
            notes,
        }
    }
}
