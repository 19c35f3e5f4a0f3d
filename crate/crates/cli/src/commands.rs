//! Command implementations. Each returns its exit code and stdout text so the
//! binary and the tests share one code path.

use std::path::Path;
use std::sync::Arc;

use eulerspace_core::obstruction::{
    b_vector, bonnard_bounds, dim3_check, dim4_local_search, sullivan_check, BOutcome, BoundQuery, Check, Finding,
    ObstructionReport, SimplexVerdict,
};
use eulerspace_core::{corpus, ConstructibleFunction};
use rayon::prelude::*;
use serde_json::json;

use crate::error::{CliError, Result};
use crate::format::{self, LabeledComplex};
use crate::props;
use crate::report::{OutputFormat, Report, RunConfig};

pub const EXIT_OK: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_OBSTRUCTION: u8 = 2;

/// Largest input dimension `check` accepts.
pub const MAX_CHECK_DIM: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout }
    }
}

fn count_phrase(dim: usize, n: usize) -> String {
    let (one, many) = match dim {
        0 => ("vertex", "vertices".to_string()),
        1 => ("edge", "edges".to_string()),
        2 => ("triangle", "triangles".to_string()),
        3 => ("tetrahedron", "tetrahedra".to_string()),
        d => return format!("{n} {d}-{}", if n == 1 { "simplex" } else { "simplices" }),
    };
    if n == 1 {
        format!("1 {one}")
    } else {
        format!("{n} {many}")
    }
}

pub fn validate(path: &Path) -> Result<Outcome> {
    let lc = LabeledComplex::read(path)?;
    let counts: Vec<String> = lc.complex.f_vector().iter().enumerate().map(|(d, n)| count_phrase(d, *n)).collect();
    Ok(Outcome::ok(format!("{}\n", counts.join(", "))))
}

/// All checks that apply to `lc` under `config`, in report order.
pub fn run_checks(lc: &LabeledComplex, config: &RunConfig) -> Result<ObstructionReport> {
    let k = &lc.complex;
    let dim = k.dim().unwrap_or(0);
    if dim > MAX_CHECK_DIM {
        return Err(CliError::Usage(format!(
            "{}: dimension {dim} exceeds the supported maximum {MAX_CHECK_DIM}",
            lc.name
        )));
    }
    let mut report = sullivan_check(k);
    if dim <= 3 {
        report.extend(dim3_check(k)?);
    }
    if dim == 4 || config.force_search {
        let budget = config.budget.budget();
        let verdicts = k
            .simplices()
            .par_iter()
            .map(|tau| {
                Ok(SimplexVerdict {
                    check: Check::Dim4Search,
                    simplex: tau.clone(),
                    finding: Finding::Search(dim4_local_search(k, tau, &budget)?),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        report.extend(ObstructionReport { verdicts, realizable_low_dim: None });
    }
    Ok(report)
}

pub fn check(path: &Path, config: RunConfig) -> Result<Outcome> {
    let lc = LabeledComplex::read(path)?;
    let obstruction = run_checks(&lc, &config)?;
    let report = Report::build(&lc, &obstruction, config.clone())?;
    let stdout = match config.format {
        OutputFormat::Structured => report.to_json(),
        OutputFormat::Text => report.to_text(),
    };
    let code = if report.summary.obstructed { EXIT_OBSTRUCTION } else { EXIT_OK };
    Ok(Outcome { code, stdout })
}

pub fn invariants(path: &Path, format: OutputFormat) -> Result<Outcome> {
    let lc = LabeledComplex::read(path)?;
    let outcome = b_vector(&lc.complex)?;
    let (code, text, value) = match &outcome {
        BOutcome::Vector(b) => (EXIT_OK, format!("{b}"), json!({ "b_vector": b.components() })),
        BOutcome::Obstructed(w) => {
            let location = match &w.location {
                eulerspace_core::obstruction::Location::Simplex(s) => lc.label_simplex(s).join(" "),
                eulerspace_core::obstruction::Location::Integral => "integral".into(),
            };
            let text = format!("undefined: {} has {} {} at {location}", w.expr, w.violation, w.value);
            let value = json!({
                "witness": {
                    "expr": w.expr.to_string(),
                    "violation": w.violation.to_string(),
                    "location": location,
                    "value": w.value.to_string(),
                }
            });
            (EXIT_OBSTRUCTION, text, value)
        }
    };
    let stdout = match format {
        OutputFormat::Text => format!("{text}\n"),
        OutputFormat::Structured => {
            let doc = json!({ "complex": lc.name, "invariants": value });
            format!("{}\n", serde_json::to_string_pretty(&doc)?)
        }
    };
    Ok(Outcome { code, stdout })
}

pub fn integrate(complex: &Path, function: &Path) -> Result<Outcome> {
    let lc = LabeledComplex::read(complex)?;
    let f = format::read_function(function, &lc)?;
    Ok(Outcome::ok(format!("{}\n", f.euler_integral())))
}

/// Writes the link of a point in the simplex spanned by `labels` to `out`,
/// or returns it as stdout when `out` is `None`.
pub fn link(complex: &Path, labels: &[String], out: Option<&Path>) -> Result<Outcome> {
    let lc = LabeledComplex::read(complex)?;
    let tau = lc.simplex_from_labels(labels)?;
    if !lc.complex.contains(&tau) {
        return Err(CliError::Usage(format!("{} is not a simplex of {}", labels.join(" "), lc.name)));
    }
    let text = lc.geometric_link(&tau)?.to_text();
    match out {
        Some(p) => {
            write_file(p, &text)?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(text)),
    }
}

pub fn bounds(d: i64, k: u64, delta: i64) -> Result<Outcome> {
    let b = bonnard_bounds(BoundQuery { d, k, delta })?;
    Ok(Outcome::ok(format!("N={} N'={}\n", b.generic, b.complete)))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn corpus_label(base: &str, v: usize) -> String {
    match base {
        "theta" if v < 5 => ["a", "b", "c", "d", "e"][v].to_string(),
        "square" if v < 25 => corpus::SquareWindow::label(v),
        _ => v.to_string(),
    }
}

/// The shipped corpus as `(file name, contents)`, in a fixed order.
pub fn corpus_files() -> Result<Vec<(String, String)>> {
    let mut files = Vec::new();
    for (name, k) in corpus::standard() {
        let base = name.trim_start_matches("cone_").trim_start_matches("susp_");
        let lc = LabeledComplex::from_complex(name.clone(), &k, |v| corpus_label(base, v))?;
        files.push((format!("{name}.cx"), lc.to_text()));
    }
    let window = corpus::SquareWindow::new();
    let lc = LabeledComplex::from_complex("square", &window.complex, corpus::SquareWindow::label)?;
    let quadrant: Vec<_> = window
        .quadrant()
        .iter()
        .map(|s| {
            let labels: Vec<String> = s.vertices().iter().map(|v| corpus::SquareWindow::label(*v)).collect();
            lc.simplex_from_labels(&labels)
        })
        .collect::<Result<_>>()?;
    let q = ConstructibleFunction::indicator(Arc::clone(&lc.complex), quadrant.iter())?;
    files.push(("quadrant.cf".into(), format::function_to_text(&q, &lc)));
    Ok(files)
}

pub fn write_corpus(dir: &Path) -> Result<Outcome> {
    std::fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.to_path_buf(), source })?;
    let mut listing = String::new();
    for (name, text) in corpus_files()? {
        write_file(&dir.join(&name), &text)?;
        listing.push_str(&name);
        listing.push('\n');
    }
    Ok(Outcome::ok(listing))
}

pub fn property_suite(seed: u64, cases: usize) -> Result<Outcome> {
    if cases == 0 {
        return Err(CliError::Usage("--cases must be positive".into()));
    }
    let results = props::run_suite(seed, cases);
    let mut out = format!("seed {seed}, {cases} cases per identity\n");
    for r in &results {
        match &r.failure {
            None => out.push_str(&format!("PASS {}\n", r.name)),
            Some((case, msg)) => out.push_str(&format!("FAIL {} (case {case}): {msg}\n", r.name)),
        }
    }
    let code = if results.iter().all(|r| r.failure.is_none()) { EXIT_OK } else { EXIT_ERROR };
    Ok(Outcome { code, stdout: out })
}
