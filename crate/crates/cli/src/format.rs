//! Complex and function files.
//!
//! Complex, text form:
//!
//! ```text
//! complex v=3
//! a b
//! b c
//! ```
//!
//! Function, text form (`p` or `p/2^k`; omitted simplices are 0):
//!
//! ```text
//! function over=path3
//! a : 1
//! a b : -3/2^1
//! ```
//!
//! Both also accept a JSON object (detected by a leading `{`). Lines starting
//! with `#` and blank lines are ignored.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use eulerspace_core::{ConstructibleFunction, Dyadic, Simplex, SimplicialComplex};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// A complex with dense vertex ids and the label of each id.
#[derive(Debug, Clone)]
pub struct LabeledComplex {
    pub name: String,
    pub labels: Vec<String>,
    pub complex: Arc<SimplicialComplex>,
}

#[derive(Deserialize)]
struct ComplexDoc {
    #[serde(default)]
    name: Option<String>,
    facets: Vec<Vec<LabelToken>>,
}

#[derive(Deserialize, Serialize)]
#[serde(untagged)]
enum LabelToken {
    Int(u64),
    Str(String),
}

impl LabelToken {
    fn into_string(self) -> String {
        match self {
            LabelToken::Int(n) => n.to_string(),
            LabelToken::Str(s) => s,
        }
    }
}

/// Sorts labels numerically when all are nonnegative integers, otherwise as strings.
fn order_labels(labels: BTreeSet<String>) -> Vec<String> {
    let mut v: Vec<String> = labels.into_iter().collect();
    if v.iter().all(|l| l.parse::<u64>().is_ok()) {
        v.sort_by_key(|l| l.parse::<u64>().unwrap());
    }
    v
}

fn meaningful_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

impl LabeledComplex {
    /// Builds from labeled facets, assigning ids in label order. Line 0 means
    /// the facet came from a structured document.
    pub fn from_labeled_facets(name: impl Into<String>, facets: &[(usize, Vec<String>)]) -> Result<Self> {
        let labels = order_labels(facets.iter().flat_map(|(_, f)| f.iter().cloned()).collect());
        let ids: BTreeMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let mut simplices = Vec::with_capacity(facets.len());
        for (line, f) in facets {
            let err = |message: String| match line {
                0 => CliError::Usage(message),
                n => CliError::parse(*n, message),
            };
            let mut seen = BTreeSet::new();
            if let Some(l) = f.iter().find(|l| !seen.insert(l.as_str())) {
                return Err(err(format!("facet `{}` repeats vertex {l}", f.join(" "))));
            }
            let verts: Vec<usize> = f.iter().map(|l| ids[l.as_str()]).collect();
            simplices.push(Simplex::new(verts).map_err(|e| err(e.to_string()))?);
        }
        if simplices.is_empty() {
            return Err(eulerspace_core::Error::EmptyComplex.into());
        }
        Ok(LabeledComplex {
            name: name.into(),
            labels,
            complex: Arc::new(SimplicialComplex::closure(simplices)),
        })
    }

    /// Labels the vertices of `k` with `label(v)` and re-ids them in label order.
    pub fn from_complex(name: impl Into<String>, k: &SimplicialComplex, label: impl Fn(usize) -> String) -> Result<Self> {
        let facets: Vec<(usize, Vec<String>)> = k
            .facets()
            .iter()
            .map(|f| (0, f.vertices().iter().map(|v| label(*v)).collect()))
            .collect();
        Self::from_labeled_facets(name, &facets)
    }

    pub fn parse(text: &str, default_name: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            let doc: ComplexDoc = serde_json::from_str(text)?;
            let facets: Vec<(usize, Vec<String>)> = doc
                .facets
                .into_iter()
                .map(|f| (0, f.into_iter().map(LabelToken::into_string).collect()))
                .collect();
            let name = doc.name.unwrap_or_else(|| default_name.to_string());
            return Self::from_labeled_facets(name, &facets);
        }
        let mut lines = meaningful_lines(text);
        let (hline, header) = lines
            .next()
            .ok_or_else(|| CliError::parse(1, "empty file: expected header `complex v=<n>`"))?;
        let declared = header
            .strip_prefix("complex")
            .map(str::trim)
            .and_then(|rest| rest.strip_prefix("v="))
            .and_then(|n| n.trim().parse::<usize>().ok())
            .ok_or_else(|| CliError::parse(hline, format!("expected header `complex v=<n>`, found {header:?}")))?;
        let facets: Vec<(usize, Vec<String>)> = lines
            .map(|(n, l)| (n, l.split_whitespace().map(String::from).collect()))
            .collect();
        let lc = Self::from_labeled_facets(default_name, &facets).map_err(|e| match e {
            CliError::Core(eulerspace_core::Error::EmptyComplex) => {
                CliError::parse(hline, "empty complex: no facets")
            }
            other => other,
        })?;
        if lc.labels.len() != declared {
            return Err(CliError::parse(
                hline,
                format!("header declares {declared} vertices, facets use {}", lc.labels.len()),
            ));
        }
        Ok(lc)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = read_text(path)?;
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("complex");
        Self::parse(&text, stem)
    }

    /// Canonical text form: facets in canonical simplex order.
    pub fn to_text(&self) -> String {
        let mut out = format!("complex v={}\n", self.complex.vertex_count());
        for f in self.complex.facets() {
            let line: Vec<&str> = f.vertices().iter().map(|v| self.labels[*v].as_str()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }

    pub fn label_simplex(&self, s: &Simplex) -> Vec<String> {
        s.vertices().iter().map(|v| self.labels[*v].clone()).collect()
    }

    pub fn simplex_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Simplex> {
        let verts = labels
            .iter()
            .map(|l| {
                self.labels
                    .iter()
                    .position(|x| x == l.as_ref())
                    .ok_or_else(|| CliError::Usage(format!("unknown vertex label {:?}", l.as_ref())))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Simplex::new(verts)?)
    }

    /// Labels for the vertices of `complex.geometric_link(tau)`: boundary-sphere
    /// vertices become `@0, @1, …` (more `@`s if a label already starts with
    /// one); link vertices keep their labels.
    pub fn link_labeler(&self, offset: usize) -> impl Fn(usize) -> String + '_ {
        let mut prefix = String::from("@");
        while self.labels.iter().any(|l| l.starts_with(&prefix)) {
            prefix.push('@');
        }
        move |v| {
            if v < offset {
                format!("{prefix}{v}")
            } else {
                self.labels[v - offset].clone()
            }
        }
    }

    /// The link of a point in `tau`, labeled by [`Self::link_labeler`].
    pub fn geometric_link(&self, tau: &Simplex) -> Result<LabeledComplex> {
        let g = self.complex.geometric_link(tau)?;
        let label = self.link_labeler(g.offset);
        let name = format!("{}_link_{}", self.name, self.label_simplex(tau).join("-"));
        if g.complex.is_empty() {
            return Ok(LabeledComplex { name, labels: Vec::new(), complex: Arc::new(SimplicialComplex::empty()) });
        }
        Self::from_complex(name, &g.complex, label)
    }
}

pub(crate) fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

#[derive(Deserialize)]
struct FunctionDoc {
    complex: String,
    #[serde(default)]
    values: Vec<FunctionEntry>,
    #[serde(default)]
    default: Option<String>,
}

#[derive(Deserialize)]
struct FunctionEntry {
    simplex: Vec<LabelToken>,
    value: String,
}

/// Reads a function over `lc`. The header must name `lc`.
pub fn parse_function(text: &str, lc: &LabeledComplex) -> Result<ConstructibleFunction> {
    let mut entries: Vec<(usize, Vec<String>, String)> = Vec::new();
    let (over, default) = if text.trim_start().starts_with('{') {
        let doc: FunctionDoc = serde_json::from_str(text)?;
        for e in doc.values {
            entries.push((0, e.simplex.into_iter().map(LabelToken::into_string).collect(), e.value));
        }
        (doc.complex, doc.default.unwrap_or_else(|| "0".into()))
    } else {
        let mut lines = meaningful_lines(text);
        let (hline, header) = lines
            .next()
            .ok_or_else(|| CliError::parse(1, "empty file: expected header `function over=<name>`"))?;
        let over = header
            .strip_prefix("function")
            .map(str::trim)
            .and_then(|r| r.strip_prefix("over="))
            .map(str::trim)
            .filter(|n| !n.is_empty())
            .ok_or_else(|| CliError::parse(hline, format!("expected header `function over=<name>`, found {header:?}")))?;
        for (n, l) in lines {
            let (lhs, rhs) = l
                .split_once(':')
                .ok_or_else(|| CliError::parse(n, "expected `<labels> : <value>`"))?;
            entries.push((n, lhs.split_whitespace().map(String::from).collect(), rhs.trim().to_string()));
        }
        (over.to_string(), "0".to_string())
    };
    if over != lc.name {
        return Err(CliError::Usage(format!(
            "function is over {over:?} but the complex is {:?}",
            lc.name
        )));
    }
    let default: Dyadic = default.parse().map_err(|e: eulerspace_core::ParseDyadicError| CliError::parse(0, e.to_string()))?;
    let mut f = ConstructibleFunction::constant(Arc::clone(&lc.complex), default).into_values();
    let mut assigned = BTreeSet::new();
    for (line, labels, value) in entries {
        let s = lc
            .simplex_from_labels(&labels)
            .map_err(|e| CliError::parse(line, e.to_string()))?;
        let i = lc
            .complex
            .index_of(&s)
            .ok_or_else(|| CliError::parse(line, format!("{} is not a simplex of {}", labels.join(" "), lc.name)))?;
        if !assigned.insert(i) {
            return Err(CliError::parse(line, format!("simplex {} assigned twice", labels.join(" "))));
        }
        f[i] = value.parse().map_err(|e: eulerspace_core::ParseDyadicError| CliError::parse(line, e.to_string()))?;
    }
    Ok(ConstructibleFunction::from_values(Arc::clone(&lc.complex), f)?)
}

pub fn read_function(path: &Path, lc: &LabeledComplex) -> Result<ConstructibleFunction> {
    parse_function(&read_text(path)?, lc)
}

/// Canonical text form listing nonzero values only.
pub fn function_to_text(f: &ConstructibleFunction, lc: &LabeledComplex) -> String {
    let mut out = format!("function over={}\n", lc.name);
    for (s, v) in f.iter().filter(|(_, v)| !v.is_zero()) {
        let _ = writeln!(out, "{} : {v}", lc.label_simplex(s).join(" "));
    }
    out
}
