//! End-to-end behaviour of the `eulerspace` binary and its file formats.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::Arc;

use eulerspace::commands;
use eulerspace::format::{self, LabeledComplex};
use eulerspace_core::{corpus, ConstructibleFunction, SimplicialComplex};

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").canonicalize().unwrap()
}

/// Runs the binary from the workspace root so echoed input paths are stable.
fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_eulerspace")).args(args).current_dir(root()).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn shipped_corpus_matches_generator_and_round_trips() {
    let files = commands::corpus_files().unwrap();
    assert_eq!(files.len(), 3 * corpus::base_spaces().len() + 1);
    for (name, text) in &files {
        let shipped = std::fs::read_to_string(root().join("corpus").join(name)).unwrap();
        assert_eq!(&shipped, text, "corpus/{name} is stale; regenerate with `eulerspace corpus --out corpus`");
        if let Some(stem) = name.strip_suffix(".cx") {
            let lc = LabeledComplex::parse(text, stem).unwrap();
            assert_eq!(&lc.to_text(), text, "{name} is not canonical");
        }
    }
}

#[test]
fn corpus_files_are_the_corpus_complexes() {
    for (name, k) in corpus::standard() {
        let lc = LabeledComplex::read(&root().join(format!("corpus/{name}.cx"))).unwrap();
        assert_eq!(lc.complex.f_vector(), k.f_vector(), "{name}");
        assert_eq!(lc.complex.euler_characteristic(), k.euler_characteristic(), "{name}");
    }
}

#[test]
fn structured_and_text_forms_agree() {
    let text = std::fs::read_to_string(root().join("corpus/t2.cx")).unwrap();
    let lc = LabeledComplex::parse(&text, "t2").unwrap();
    let facets: Vec<Vec<String>> = lc.complex.facets().iter().map(|f| lc.label_simplex(f)).collect();
    let json = serde_json::json!({ "name": "t2", "facets": facets }).to_string();
    let again = LabeledComplex::parse(&json, "ignored").unwrap();
    assert_eq!(again.name, "t2");
    assert_eq!(again.to_text(), text);
}

#[test]
fn link_output_reingests_as_the_geometric_link() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["s2", "t2", "cone_rp2_6", "susp_klein", "theta"] {
        let path = root().join(format!("corpus/{name}.cx"));
        let lc = LabeledComplex::read(&path).unwrap();
        for tau in lc.complex.simplices() {
            let labels = lc.label_simplex(tau);
            let out = dir.path().join("link.cx");
            let res = commands::link(&path, &labels, Some(&out)).unwrap();
            assert_eq!(res.code, 0);
            let back = LabeledComplex::read(&out).unwrap();
            let g = lc.complex.geometric_link(tau).unwrap();
            let label = |v: usize| if v < g.offset { format!("@{v}") } else { lc.labels[v - g.offset].clone() };
            let mut expected: Vec<Vec<String>> =
                g.complex.facets().iter().map(|f| f.vertices().iter().map(|v| label(*v)).collect()).collect();
            let mut got: Vec<Vec<String>> = back.complex.facets().iter().map(|f| back.label_simplex(f)).collect();
            for f in expected.iter_mut().chain(got.iter_mut()) {
                f.sort();
            }
            expected.sort();
            got.sort();
            assert_eq!(got, expected, "{name} at {labels:?}");
            assert_eq!(back.complex.f_vector(), g.complex.f_vector());
            assert_eq!(back.to_text(), std::fs::read_to_string(&out).unwrap());
        }
    }
}

#[test]
fn link_of_theta_junction_is_three_points() {
    let (code, out, _) = run(&["link", "corpus/theta.cx", "a"]);
    assert_eq!(code, 0);
    assert_eq!(out, "complex v=3\nc\nd\ne\n");
    let (code, out, _) = run(&["link", "corpus/theta.cx", "a", "c"]);
    assert_eq!(code, 0);
    assert_eq!(out, "complex v=2\n@0\n@1\n");
}

#[test]
fn validate_reports_counts_and_rejects_malformed_input() {
    assert_eq!(run(&["validate", "corpus/theta.cx"]), (0, "5 vertices, 6 edges\n".into(), String::new()));
    let (code, out, _) = run(&["validate", "corpus/s3.cx"]);
    assert_eq!((code, out.as_str()), (0, "5 vertices, 10 edges, 10 triangles, 5 tetrahedra\n"));
    let dir = tempfile::tempdir().unwrap();
    for (name, text, needle) in [
        ("repeat.cx", "complex v=2\na b\nb b\n", "line 3"),
        ("empty.cx", "", "line 1"),
        ("header.cx", "a b\n", "line 1"),
        ("count.cx", "complex v=3\na b\n", "declares 3"),
        ("json.cx", "{\"facets\": [[1, 1]]}", "repeats vertex 1"),
    ] {
        let p = write(dir.path(), name, text);
        let (code, out, err) = run(&["validate", &p]);
        assert_eq!(code, 1, "{name}");
        assert!(out.is_empty());
        assert!(err.contains(needle), "{name}: {err}");
    }
    let (code, _, err) = run(&["validate", "corpus/missing.cx"]);
    assert_eq!(code, 1);
    assert!(err.contains("missing.cx"));
}

#[test]
fn check_exit_codes() {
    for (name, code) in [
        ("theta", 2),
        ("s1", 0),
        ("s2", 0),
        ("s3", 0),
        ("t2", 0),
        ("rp2_6", 0),
        ("segment", 2),
        ("cone_rp2_6", 2),
        ("susp_t2", 0),
        ("square", 2),
        ("cone_square", 2),
    ] {
        assert_eq!(run(&["check", &format!("corpus/{name}.cx")]).0, code, "{name}");
    }
    let dir = tempfile::tempdir().unwrap();
    let high = LabeledComplex::from_complex("d5", &SimplicialComplex::simplex_boundary(6), |v| v.to_string()).unwrap();
    let p = write(dir.path(), "d5.cx", &high.to_text());
    let (code, _, err) = run(&["check", &p]);
    assert_eq!(code, 1);
    assert!(err.contains("dimension 5"), "{err}");
    assert_eq!(run(&["check", "--depth", "x", "corpus/s1.cx"]).0, 1);
    assert_eq!(run(&["frobnicate"]).0, 1);
}

#[test]
fn cone_on_rp2_is_obstructed_at_the_apex() {
    let (code, out, _) = run(&["check", "--json", "corpus/cone_rp2_6.cx"]);
    assert_eq!(code, 2);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let apex: Vec<&serde_json::Value> = v["tests"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|t| t["simplex"] == serde_json::json!(["6"]))
        .collect();
    assert_eq!(apex.len(), 2);
    assert!(apex.iter().all(|t| t["verdict"] == "fail"));
    assert_eq!(apex[1]["detail"]["b_vector"], serde_json::json!([1, 0, 0, 0, 0]));

    // witness locations are simplices of the link file written by `link`
    let mut witnessed = 0;
    for t in v["tests"].as_array().unwrap().iter().filter(|t| t["witness"].is_object()) {
        let labels: Vec<&str> = t["simplex"].as_array().unwrap().iter().map(|l| l.as_str().unwrap()).collect();
        let mut args = vec!["link", "corpus/cone_rp2_6.cx"];
        args.extend(&labels);
        let link = LabeledComplex::parse(&run(&args).1, "link").unwrap();
        let location: Vec<String> =
            serde_json::from_value(t["witness"]["location"].clone()).unwrap();
        let s = link.simplex_from_labels(&location).unwrap();
        assert!(link.complex.contains(&s), "{labels:?}: {location:?}");
        witnessed += 1;
    }
    assert!(witnessed > 0);
}

#[test]
fn forced_search_reports_budget_and_witnesses() {
    let (code, out, _) = run(&["check", "--json", "--search", "--depth", "2", "--max-funcs", "50", "corpus/theta.cx"]);
    assert_eq!(code, 2);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["budget"]["max_depth"], 2);
    assert_eq!(v["budget"]["max_functions"], 50);
    assert_eq!(v["budget"]["growth_guard_bits"], 128);
    assert_eq!(v["config"]["force_search"], true);
    let junction = v["tests"]
        .as_array()
        .unwrap()
        .iter()
        .find(|t| t["test"] == "dim4_search" && t["simplex"] == serde_json::json!(["a"]))
        .unwrap();
    assert_eq!(junction["verdict"], "fail");
    assert_eq!(junction["witness"]["expr"], "ONE");
    assert_eq!(junction["witness"]["location"], serde_json::json!(["integral"]));
    let passing = v["tests"]
        .as_array()
        .unwrap()
        .iter()
        .find(|t| t["test"] == "dim4_search" && t["verdict"] == "pass")
        .unwrap();
    assert!(passing["detail"]["stop"].is_string());
}

#[test]
fn invariants_integrate_and_bounds() {
    assert_eq!(run(&["invariants", "corpus/rp2_6.cx"]), (0, "(1,0,0,0,0)\n".into(), String::new()));
    assert_eq!(run(&["invariants", "corpus/t2.cx"]).1, "(0,0,0,0,0)\n");
    assert_eq!(run(&["invariants", "corpus/s3.cx"]).0, 1);
    let (code, out, _) = run(&["invariants", "--json", "corpus/rp2_6.cx"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"b_vector\""));
    assert_eq!(run(&["integrate", "corpus/square.cx", "corpus/quadrant.cf"]), (0, "1\n".into(), String::new()));
    assert_eq!(run(&["bounds", "2", "2", "1"]).1, "N=5 N'=13\n");
    assert_eq!(run(&["bounds", "3", "0", "-4"]).1, "N=4 N'=4\n");
    assert_eq!(run(&["bounds", "0", "1", "0"]).0, 1);
}

#[test]
fn integrate_rejects_mismatched_functions() {
    let dir = tempfile::tempdir().unwrap();
    let other = write(dir.path(), "f.cf", "function over=s2\n0 : 1\n");
    let (code, _, err) = run(&["integrate", "corpus/square.cx", &other]);
    assert_eq!(code, 1);
    assert!(err.contains("s2"), "{err}");
}

#[test]
fn quadrant_file_is_the_closed_quadrant() {
    let lc = LabeledComplex::read(&root().join("corpus/square.cx")).unwrap();
    let q = format::read_function(&root().join("corpus/quadrant.cf"), &lc).unwrap();
    let window = corpus::SquareWindow::new();
    let members: Vec<_> = window
        .quadrant()
        .iter()
        .map(|s| {
            let labels: Vec<String> = s.vertices().iter().map(|v| corpus::SquareWindow::label(*v)).collect();
            lc.simplex_from_labels(&labels).unwrap()
        })
        .collect();
    let expected = ConstructibleFunction::indicator(Arc::clone(&lc.complex), members.iter()).unwrap();
    assert_eq!(q, expected);
    assert_eq!(members.len(), 9 + 16 + 8);
}

#[test]
fn props_command_is_seeded() {
    let a = run(&["props", "--seed", "3", "--cases", "5"]);
    assert_eq!(a.0, 0, "{}", a.1);
    assert_eq!(a, run(&["props", "--seed", "3", "--cases", "5"]));
    assert!(a.1.lines().filter(|l| l.starts_with("PASS")).count() >= 8);
    assert_eq!(run(&["props", "--cases", "0"]).0, 1);
}

#[test]
fn corpus_command_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = run(&["corpus", "--out", &dir.path().display().to_string()]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 28);
    assert!(dir.path().join("quadrant.cf").exists());
}

const GOLDEN: [(&str, &[&str]); 5] = [
    ("theta.json", &["check", "--json", "corpus/theta.cx"]),
    ("theta.txt", &["check", "corpus/theta.cx"]),
    ("cone_rp2_6.json", &["check", "--json", "corpus/cone_rp2_6.cx"]),
    ("s2.json", &["check", "--json", "corpus/s2.cx"]),
    ("s1_search.json", &["check", "--json", "--search", "--depth", "3", "--max-funcs", "200", "--no-P", "corpus/s1.cx"]),
];

/// Set `EULERSPACE_BLESS=1` to rewrite the golden files.
#[test]
fn golden_reports_are_byte_identical() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for (file, args) in GOLDEN {
        let first = run(args);
        assert_eq!(first, run(args), "{file} differs between runs");
        assert!(matches!(first.0, 0 | 2));
        let path = dir.join(file);
        if std::env::var_os("EULERSPACE_BLESS").is_some() {
            std::fs::write(&path, &first.1).unwrap();
        }
        assert_eq!(first.1, std::fs::read_to_string(&path).unwrap(), "{file}");
    }
}
