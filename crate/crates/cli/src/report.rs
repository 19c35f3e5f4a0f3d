//! Structured and plain-text check reports.
//!
//! Output is a pure function of the input complex and the resolved config:
//! verdicts are in canonical simplex order, grouped by check, and nothing
//! time- or host-dependent is recorded.

use std::fmt::Write as _;

use eulerspace_core::obstruction::{
    BOutcome, Budget, Check, ExpressionWitness, Finding, Location, ObstructionReport, SearchOutcome,
    SearchStats, StopReason, GROWTH_GUARD_BITS,
};
use eulerspace_core::Simplex;
use serde::Serialize;

use crate::format::LabeledComplex;

pub const DISCLAIMER: &str = "necessary-condition only: every check here detects obstructions to real \
algebraic realizability; passing them is not a proof of realizability, except for the dimension <= 2 \
criterion reported in the summary";

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// The resolved run configuration, echoed into every report.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub inputs: Vec<String>,
    pub format: OutputFormat,
    pub force_search: bool,
    pub seed: u64,
    pub budget: BudgetConfig,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BudgetConfig {
    pub max_depth: usize,
    pub max_functions: usize,
    pub use_p: bool,
    pub max_candidates: usize,
    pub growth_guard_bits: u64,
}

impl From<&Budget> for BudgetConfig {
    fn from(b: &Budget) -> Self {
        BudgetConfig {
            max_depth: b.max_depth,
            max_functions: b.max_functions,
            use_p: b.use_p,
            max_candidates: b.max_candidates,
            growth_guard_bits: GROWTH_GUARD_BITS,
        }
    }
}

impl BudgetConfig {
    pub fn budget(&self) -> Budget {
        Budget {
            max_depth: self.max_depth,
            max_functions: self.max_functions,
            use_p: self.use_p,
            max_candidates: self.max_candidates,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub tool_version: &'static str,
    pub complex: ComplexInfo,
    pub config: RunConfig,
    pub budget: BudgetConfig,
    pub disclaimer: &'static str,
    pub tests: Vec<TestEntry>,
    pub summary: Summary,
}

#[derive(Debug, Serialize)]
pub struct ComplexInfo {
    pub name: String,
    pub dimension: usize,
    pub f_vector: Vec<usize>,
    pub labels: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct TestEntry {
    pub test: &'static str,
    pub simplex: Vec<String>,
    pub verdict: &'static str,
    pub detail: Detail,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessEntry>,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum Detail {
    Sullivan { link_euler: i64 },
    Invariants { b_vector: [u8; 5] },
    Obstructed {},
    Search(SearchDetail),
}

#[derive(Debug, Serialize)]
pub struct SearchDetail {
    pub functions: usize,
    pub candidates: usize,
    pub depth: usize,
    pub guarded: usize,
    pub stop: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// A witness in link coordinates; `location` is a simplex of the link or `integral`.
#[derive(Debug, Serialize)]
pub struct WitnessEntry {
    pub expr: String,
    pub violation: String,
    pub location: Vec<String>,
    pub value: String,
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub checks: Vec<CheckSummary>,
    pub obstructed: bool,
    /// `Some` only for dimension <= 2, where even links are also sufficient.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub realizable_dim_le_2: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct CheckSummary {
    pub test: &'static str,
    pub passed: usize,
    pub failed: usize,
}

/// `w` was found on `geometric_link(tau)`; its location is labeled accordingly.
fn witness_entry(w: &ExpressionWitness, lc: &LabeledComplex, tau: &Simplex) -> crate::error::Result<WitnessEntry> {
    let label = lc.link_labeler(lc.complex.geometric_link(tau)?.offset);
    Ok(WitnessEntry {
        expr: w.expr.to_string(),
        violation: w.violation.to_string(),
        location: match &w.location {
            Location::Simplex(s) => s.vertices().iter().map(|v| label(*v)).collect(),
            Location::Integral => vec!["integral".into()],
        },
        value: w.value.to_string(),
    })
}

fn search_detail(stats: &SearchStats) -> SearchDetail {
    let note = match stats.stop {
        StopReason::Witness | StopReason::Saturated => None,
        _ => Some("no violation within budget; not exhaustive".to_string()),
    };
    SearchDetail {
        functions: stats.functions,
        candidates: stats.candidates,
        depth: stats.depth,
        guarded: stats.guarded,
        stop: stats.stop.as_str(),
        note,
    }
}

impl Report {
    pub fn build(lc: &LabeledComplex, obstruction: &ObstructionReport, config: RunConfig) -> crate::error::Result<Self> {
        let mut tests = Vec::with_capacity(obstruction.verdicts.len());
        for v in &obstruction.verdicts {
            let passed = v.passed();
            let (detail, witness) = match &v.finding {
                Finding::Sullivan { link_euler } => (Detail::Sullivan { link_euler: *link_euler }, None),
                Finding::Dim3(BOutcome::Vector(b)) => (Detail::Invariants { b_vector: b.components() }, None),
                Finding::Dim3(BOutcome::Obstructed(w)) => {
                    (Detail::Obstructed {}, Some(witness_entry(w, lc, &v.simplex)?))
                }
                Finding::Search(outcome) => {
                    let witness = match outcome {
                        SearchOutcome::Witness { witness, .. } => {
                            Some(witness_entry(witness, lc, &v.simplex)?)
                        }
                        SearchOutcome::Pass(_) => None,
                    };
                    (Detail::Search(search_detail(outcome.stats())), witness)
                }
            };
            tests.push(TestEntry {
                test: v.check.name(),
                simplex: lc.label_simplex(&v.simplex),
                verdict: if passed { "pass" } else { "fail" },
                detail,
                witness,
            });
        }
        let checks = [Check::Sullivan, Check::Dim3, Check::Dim4Search]
            .into_iter()
            .filter(|c| obstruction.of_check(*c).next().is_some())
            .map(|c| {
                let (passed, failed) = obstruction.tally(c);
                CheckSummary { test: c.name(), passed, failed }
            })
            .collect();
        let k = &lc.complex;
        Ok(Report {
            tool_version: TOOL_VERSION,
            complex: ComplexInfo {
                name: lc.name.clone(),
                dimension: k.dim().unwrap_or(0),
                f_vector: k.f_vector(),
                labels: lc.labels.clone(),
            },
            budget: config.budget,
            config,
            disclaimer: DISCLAIMER,
            tests,
            summary: Summary {
                checks,
                obstructed: !obstruction.passed(),
                realizable_dim_le_2: obstruction.realizable_low_dim,
            },
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Plain-text table, one row per verdict.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let c = &self.complex;
        let _ = writeln!(out, "complex {} (dim {}, f-vector {:?})", c.name, c.dimension, c.f_vector);
        let b = &self.budget;
        let _ = writeln!(
            out,
            "budget: depth {}, functions {}, P {}, candidates {}, growth guard 2^{}",
            b.max_depth,
            b.max_functions,
            if b.use_p { "on" } else { "off" },
            b.max_candidates,
            b.growth_guard_bits
        );
        let _ = writeln!(out, "{:<12} {:<16} {:<7} detail", "test", "simplex", "verdict");
        for t in &self.tests {
            let detail = match &t.detail {
                Detail::Sullivan { link_euler } => format!("chi(link) = {link_euler}"),
                Detail::Invariants { b_vector } => format!(
                    "b = ({})",
                    b_vector.iter().map(u8::to_string).collect::<Vec<_>>().join(",")
                ),
                Detail::Obstructed {} => "b undefined".into(),
                Detail::Search(s) => {
                    let mut d = format!("{} functions, depth {}, stop {}", s.functions, s.depth, s.stop);
                    if let Some(n) = &s.note {
                        d = format!("{d}; {n}");
                    }
                    d
                }
            };
            let detail = match &t.witness {
                Some(w) => format!(
                    "{detail}; witness {} has {} {} at {}",
                    w.expr,
                    w.violation,
                    w.value,
                    w.location.join(" ")
                ),
                None => detail,
            };
            let _ = writeln!(out, "{:<12} {:<16} {:<7} {}", t.test, t.simplex.join(" "), t.verdict, detail);
        }
        for s in &self.summary.checks {
            let _ = writeln!(out, "{}: {} passed, {} failed", s.test, s.passed, s.failed);
        }
        if let Some(r) = self.summary.realizable_dim_le_2 {
            let _ = writeln!(
                out,
                "{}",
                if r { "realizable (dim <= 2 criterion)" } else { "not realizable (dim <= 2 criterion)" }
            );
        }
        let _ = writeln!(out, "result: {}", if self.summary.obstructed { "obstruction found" } else { "no obstruction found" });
        let _ = writeln!(out, "note: {}", self.disclaimer);
        out
    }
}
