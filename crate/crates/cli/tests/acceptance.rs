//! The ten acceptance criteria, one PASS/FAIL line each.
//!
//! Run with `cargo test -p eulerspace --test acceptance`.

use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::{Duration, Instant};

use eulerspace::format::{self, LabeledComplex};
use eulerspace::props;
use eulerspace_core::corpus::{self, SquareWindow};
use eulerspace_core::obstruction::{
    b_vector, bonnard_bounds, dim3_check, dim4_local_search, divisibility_certificate, BOutcome, BoundQuery, Budget,
    Finding, InvariantVector,
};
use eulerspace_core::{ConstructibleFunction, Dyadic, Simplex, SimplicialComplex};
use eulerspace_testkit::{enumerate, oracle, random};
use serde_json::Value;

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").canonicalize().unwrap()
}

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_eulerspace")).args(args).current_dir(root()).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn read(name: &str) -> LabeledComplex {
    LabeledComplex::read(&root().join("corpus").join(name)).unwrap()
}

fn theta() {
    let (code, out) = run(&["check", "--json", "corpus/theta.cx"]);
    assert_eq!(code, 2);
    let report: Value = serde_json::from_str(&out).unwrap();
    let failing: Vec<(Value, Value)> = report["tests"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|t| t["test"] == "sullivan" && t["verdict"] == "fail")
        .map(|t| (t["simplex"].clone(), t["detail"]["link_euler"].clone()))
        .collect();
    assert_eq!(
        failing,
        [(serde_json::json!(["a"]), Value::from(3)), (serde_json::json!(["b"]), Value::from(3))]
    );
}

fn on_star(w: &SquareWindow, lc: &LabeledComplex, f: &ConstructibleFunction) -> Vec<Dyadic> {
    w.origin_star().iter().map(|s| f.value(&to_file_ids(lc, s)).unwrap().clone()).collect()
}

fn to_file_ids(lc: &LabeledComplex, s: &Simplex) -> Simplex {
    let labels: Vec<String> = s.vertices().iter().map(|v| SquareWindow::label(*v)).collect();
    lc.simplex_from_labels(&labels).unwrap()
}

fn indicator(lc: &LabeledComplex, members: &[Simplex]) -> ConstructibleFunction {
    let ids: Vec<Simplex> = members.iter().map(|s| to_file_ids(lc, s)).collect();
    ConstructibleFunction::indicator(Arc::clone(&lc.complex), ids.iter()).unwrap()
}

fn quadrant() {
    let lc = read("square.cx");
    let one_q = format::read_function(&root().join("corpus/quadrant.cf"), &lc).unwrap();
    let w = SquareWindow::new();
    let o = SquareWindow::origin();
    let (a, b) = (w.positive_x_axis(), w.positive_y_axis());
    let oab: Vec<Simplex> = [o.clone()].into_iter().chain(a.iter().cloned()).chain(b.iter().cloned()).collect();
    assert_eq!(on_star(&w, &lc, &one_q.link()), on_star(&w, &lc, &indicator(&lc, &oab)));
    assert!(!one_q.is_euler().unwrap().euler);
    assert!(one_q.scale(&Dyadic::from(2)).is_euler().unwrap().euler);
    let c = indicator(&lc, &w.x_axis());
    let prod = c.mul(&one_q.link()).unwrap();
    let verdict = prod.is_euler().unwrap();
    assert!(!verdict.euler);
    assert_eq!(verdict.witnesses[0].simplex, to_file_ids(&lc, &o));
    assert!(divisibility_certificate(&one_q.scale(&Dyadic::from(4))).unwrap().certified);
    assert_eq!(one_q.euler_integral(), Dyadic::one());
}

fn smooth_links() {
    for (name, k, factor) in [
        ("s1", corpus::sphere(1), 2),
        ("s3", corpus::sphere(3), 2),
        ("s2", corpus::sphere(2), 0),
        ("t2", corpus::torus(), 0),
        ("klein", corpus::klein_bottle(), 0),
        ("rp2_6", corpus::rp2_6(), 0),
    ] {
        let one = ConstructibleFunction::one(Arc::new(k));
        assert_eq!(one.link(), one.scale(&Dyadic::from(factor)), "{name}");
        let file = read(&format!("{name}.cx"));
        let one = ConstructibleFunction::one(Arc::clone(&file.complex));
        assert_eq!(one.link(), one.scale(&Dyadic::from(factor)), "{name}.cx");
    }
}

fn outcome(k: &SimplicialComplex) -> BOutcome {
    b_vector(&Arc::new(k.clone())).unwrap()
}

fn b_invariants() {
    let vector = |k: SimplicialComplex| match outcome(&k) {
        BOutcome::Vector(v) => v,
        BOutcome::Obstructed(w) => panic!("unexpected obstruction {w}"),
    };
    assert_eq!(vector(corpus::rp2_6()), InvariantVector { chi2: 1, b: [0; 4] });
    assert!(vector(corpus::sphere(2)).is_zero());
    assert!(vector(corpus::torus()).is_zero());
    let low: Vec<(String, SimplicialComplex)> =
        corpus::standard().into_iter().filter(|(_, k)| k.dim().unwrap() <= 2).collect();
    assert!(low.len() >= 10);
    let outcomes: Vec<BOutcome> = low.iter().map(|(_, k)| outcome(k)).collect();
    for (i, (x, kx)) in low.iter().enumerate() {
        for (j, (y, ky)) in low.iter().enumerate().skip(i) {
            let union = outcome(&kx.disjoint_union(ky));
            match (&outcomes[i], &outcomes[j], union) {
                (BOutcome::Vector(bx), BOutcome::Vector(by), BOutcome::Vector(bu)) => {
                    assert_eq!(bu, bx.plus(by), "{x} + {y}");
                    if i == j {
                        assert!(bu.is_zero(), "{x} + {x}");
                    }
                }
                (BOutcome::Vector(_), BOutcome::Vector(_), BOutcome::Obstructed(w)) => {
                    panic!("{x} + {y}: union obstructed by {w}")
                }
                (_, _, u) => assert!(!u.vanishes() && matches!(u, BOutcome::Obstructed(_)), "{x} + {y}"),
            }
        }
    }
}

fn dim3() {
    for k in [corpus::sphere(3), corpus::torus().suspension()] {
        assert!(dim3_check(&Arc::new(k)).unwrap().passed());
    }
    let cone = Arc::new(corpus::rp2_6().cone());
    let apex = Simplex::vertex(cone.vertex_bound() - 1);
    let report = dim3_check(&cone).unwrap();
    let at_apex = report.verdicts.iter().find(|v| v.simplex == apex).unwrap();
    match &at_apex.finding {
        Finding::Dim3(BOutcome::Vector(b)) => assert_eq!((b.chi2, b.b), (1, [0; 4])),
        other => panic!("{other:?}"),
    }
    let lc = read("cone_rp2_6.cx");
    let report = dim3_check(&lc.complex).unwrap();
    let apex = lc.simplex_from_labels(&["6"]).unwrap();
    assert!(report.failures().any(|v| v.simplex == apex));
}

fn property_suite() {
    let results = props::run_suite(0, 100);
    assert_eq!(results.len(), props::IDENTITIES.len());
    for r in results {
        assert!(r.cases >= 100);
        assert!(r.failure.is_none(), "{}: {:?}", r.name, r.failure);
    }
    assert_eq!((props::MAX_VERTICES, props::MAX_DIM, props::VALUE_RANGE), (8, 3, 3));
}

fn oracles() {
    for n in 0..=4 {
        let k = Arc::new(SimplicialComplex::simplex(n));
        for tau in 0..k.len() {
            let t = k.simplex_at(tau);
            let weights = oracle::small_sphere_weights(&k, tau);
            for (sigma, s) in k.simplices().iter().enumerate() {
                let expected = if sigma == tau {
                    1 - (-1i64).pow(t.dim() as u32)
                } else if t.is_face_of(s) {
                    (-1i64).pow(s.dim() as u32 + 1)
                } else {
                    0
                };
                assert_eq!(weights[sigma], expected);
            }
        }
    }
    for k in enumerate::all_complexes(5) {
        let k = Arc::new(k);
        for sigma in 0..k.len() {
            let s = k.simplex_at(sigma).clone();
            let f = ConstructibleFunction::indicator(Arc::clone(&k), [&s]).unwrap();
            assert_eq!(f.link().values(), &oracle::link_by_small_spheres(&k, f.values())[..]);
        }
    }
    let mut rng = random::rng(7);
    let targets = enumerate::all_complexes(3);
    for s in enumerate::all_complexes(4) {
        let s = Arc::new(s);
        let phi = random::function(&mut rng, &s, -3, 3);
        for t in &targets {
            for f in enumerate::all_maps(&s, &Arc::new(t.clone())) {
                assert_eq!(phi.pushforward(&f).unwrap().values(), &oracle::pushforward_by_fibers(&f, phi.values())[..]);
            }
        }
    }
}

fn search_consistency() {
    let budget = Budget::default();
    let mut searched = 0;
    for (name, k) in corpus::standard() {
        if k.dim() != Some(3) {
            continue;
        }
        for tau in k.simplices() {
            let link = k.geometric_link(tau).unwrap();
            if outcome(&link.complex).vanishes() {
                continue;
            }
            searched += 1;
            let found = dim4_local_search(&k, tau, &budget).unwrap();
            let w = found.witness().unwrap_or_else(|| panic!("{name} at {tau}: no witness"));
            assert!(w.replays_on(&link.complex), "{name} at {tau}");
            assert_eq!(dim4_local_search(&k, tau, &budget).unwrap(), found);
        }
    }
    assert!(searched > 0);
}

fn bonnard() {
    for ((d, k, delta), (n, n2)) in [((1, 1, 0), (1, 2)), ((2, 2, 1), (5, 13)), ((3, 0, -4), (4, 4))] {
        let b = bonnard_bounds(BoundQuery { d, k, delta }).unwrap();
        assert_eq!((b.generic, b.complete), (n.into(), n2.into()), "{d} {k} {delta}");
    }
    assert_eq!(run(&["bounds", "2", "2", "1"]), (0, "N=5 N'=13\n".into()));
}

fn reporting() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for (file, input) in [("theta.json", "corpus/theta.cx"), ("cone_rp2_6.json", "corpus/cone_rp2_6.cx")] {
        let first = run(&["check", "--json", "--seed", "0", input]);
        assert_eq!(first, run(&["check", "--json", "--seed", "0", input]));
        assert_eq!(first.1, std::fs::read_to_string(golden.join(file)).unwrap(), "{file}");
    }
    for (name, k) in corpus::standard() {
        let path = format!("corpus/{name}.cx");
        assert_eq!(run(&["validate", &path]).0, 0);
        if k.dim().unwrap() <= 3 {
            assert!(matches!(run(&["check", &path]).0, 0 | 2), "{name}");
        }
    }
    assert_eq!(run(&["check", "corpus/missing.cx"]).0, 1);
    assert_eq!(run(&["invariants", "corpus/s3.cx"]).0, 1);
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn()); 10] = [
        ("theta junctions flagged", Duration::from_secs(1), theta),
        ("quadrant calculus", Duration::from_secs(1), quadrant),
        ("smooth link rule", Duration::from_secs(5), smooth_links),
        ("b-invariants and additivity", Duration::from_secs(5), b_invariants),
        ("dim3 checks", Duration::from_secs(10), dim3),
        ("operator identity suite", Duration::from_secs(60), property_suite),
        ("oracle validation", Duration::MAX, oracles),
        ("search consistency", Duration::from_secs(120), search_consistency),
        ("sign-representation bounds", Duration::from_secs(1), bonnard),
        ("deterministic reports and exit codes", Duration::MAX, reporting),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(check));
        let elapsed = start.elapsed();
        let verdict = match result {
            Ok(()) if elapsed <= *limit => "PASS".to_string(),
            Ok(()) => format!("FAIL (over {:.0?} limit)", limit),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                format!("FAIL ({msg})")
            }
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("criterion {:>2} {:<40} {:>9.3}s  {verdict}", i + 1, name, elapsed.as_secs_f64());
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
