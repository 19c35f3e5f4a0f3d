//! Quadrant calculus, invariant vectors and local checks on the corpus.

use std::sync::Arc;

use eulerspace_core::corpus::{self, SquareWindow};
use eulerspace_core::obstruction::{
    b_vector, dim3_check, dim4_local_search, divisibility_certificate, sullivan_check, BOutcome,
    Budget, Finding, InvariantVector, SearchOutcome,
};
use eulerspace_core::{ConstructibleFunction, Dyadic, Simplex, SimplicialComplex};

struct Quadrant {
    window: SquareWindow,
    k: Arc<SimplicialComplex>,
    one_q: ConstructibleFunction,
}

fn quadrant() -> Quadrant {
    let window = SquareWindow::new();
    let k = Arc::new(window.complex.clone());
    let one_q = ConstructibleFunction::indicator(Arc::clone(&k), &window.quadrant()).unwrap();
    Quadrant { window, k, one_q }
}

fn on_star(w: &SquareWindow, f: &ConstructibleFunction) -> Vec<(Simplex, Dyadic)> {
    w.origin_star().into_iter().map(|s| {
        let v = f.value(&s).unwrap().clone();
        (s, v)
    }).collect()
}

#[test]
fn link_of_quadrant_on_origin_star() {
    let q = quadrant();
    let lam = q.one_q.link();
    let mut expected: Vec<&Simplex> = vec![];
    let o = SquareWindow::origin();
    let a = q.window.positive_x_axis();
    let b = q.window.positive_y_axis();
    expected.push(&o);
    expected.extend(a.iter());
    expected.extend(b.iter());
    let oab = ConstructibleFunction::indicator(Arc::clone(&q.k), expected).unwrap();
    assert_eq!(on_star(&q.window, &lam), on_star(&q.window, &oab));
    // O itself and the two open axis edges at O carry 1
    let ones = on_star(&q.window, &lam).into_iter().filter(|(_, v)| *v == Dyadic::one()).count();
    assert_eq!(ones, 3);
}

#[test]
fn euler_status_of_quadrant_multiples() {
    let q = quadrant();
    let v = q.one_q.is_euler().unwrap();
    assert!(!v.euler);
    assert!(v.witnesses.iter().any(|w| w.simplex == SquareWindow::origin()));
    let star = q.window.origin_star();
    // every witness in the star of O is O or an open axis edge
    for w in v.witnesses.iter().filter(|w| star.contains(&w.simplex)) {
        assert!(w.simplex == SquareWindow::origin() || q.window.positive_x_axis().contains(&w.simplex)
            || q.window.positive_y_axis().contains(&w.simplex));
    }
    let twice = q.one_q.scale(&Dyadic::from(2));
    assert!(twice.is_euler().unwrap().euler);
    assert_eq!(twice.half_link().unwrap(), q.one_q.link());
    let obstruction = q.one_q.half_link().unwrap_err();
    assert_eq!(obstruction.value, Dyadic::one());
}

#[test]
fn axis_times_link_is_not_euler() {
    let q = quadrant();
    let c = ConstructibleFunction::indicator(Arc::clone(&q.k), &q.window.x_axis()).unwrap();
    let prod = c.mul(&q.one_q.link()).unwrap();
    let mut oa = vec![SquareWindow::origin()];
    oa.extend(q.window.positive_x_axis());
    let expected = ConstructibleFunction::indicator(Arc::clone(&q.k), &oa).unwrap();
    assert_eq!(on_star(&q.window, &prod), on_star(&q.window, &expected));
    let v = prod.is_euler().unwrap();
    assert!(!v.euler);
    assert_eq!(v.witnesses[0].simplex, SquareWindow::origin());

    // the same function on the axis alone
    let axis = Arc::new(SimplicialComplex::closure(q.window.x_axis()));
    let on_axis = ConstructibleFunction::indicator(Arc::clone(&axis), &oa).unwrap();
    let v = on_axis.is_euler().unwrap();
    assert!(!v.euler);
    assert!(v.witnesses.iter().any(|w| w.simplex == SquareWindow::origin()));
}

#[test]
fn divisibility_certificates() {
    let q = quadrant();
    assert!(divisibility_certificate(&q.one_q.scale(&Dyadic::from(4))).unwrap().certified);
    let two = divisibility_certificate(&q.one_q.scale(&Dyadic::from(2))).unwrap();
    assert!(!two.certified);
    assert_eq!((two.dimension, two.min_valuation), (2, Some(1)));
}

#[test]
fn quadrant_window_integrates_to_one() {
    assert_eq!(quadrant().one_q.euler_integral(), Dyadic::one());
}

#[test]
fn restriction_of_quadrant_at_origin_is_closed_arc() {
    let q = quadrant();
    let r = q.one_q.restrict_to_link(&SquareWindow::origin()).unwrap();
    let support: Vec<Simplex> = r.iter().filter(|(_, v)| !v.is_zero()).map(|(s, _)| s.clone()).collect();
    let arc = SimplicialComplex::closure(support.clone());
    // closed, connected arc: 3 vertices and 2 edges
    assert_eq!(arc.simplices(), &support[..]);
    assert_eq!(arc.f_vector(), vec![3, 2]);
}

fn vector(k: SimplicialComplex) -> InvariantVector {
    match b_vector(&Arc::new(k)).unwrap() {
        BOutcome::Vector(v) => v,
        BOutcome::Obstructed(w) => panic!("unexpected obstruction {w}"),
    }
}

fn low_dim_corpus() -> Vec<(String, SimplicialComplex)> {
    corpus::standard().into_iter().filter(|(_, k)| k.dim().unwrap() <= 2).collect()
}

#[test]
fn invariant_vectors_of_surfaces() {
    assert_eq!(vector(corpus::rp2_6()), InvariantVector { chi2: 1, b: [0; 4] });
    assert!(vector(corpus::sphere(2)).is_zero());
    assert!(vector(corpus::torus()).is_zero());
}

#[test]
fn invariant_vector_is_additive() {
    let spaces = low_dim_corpus();
    for (n1, x) in &spaces {
        let bx = b_vector(&Arc::new(x.clone())).unwrap();
        let doubled = b_vector(&Arc::new(x.disjoint_union(x))).unwrap();
        if let BOutcome::Vector(v) = &doubled {
            assert!(v.is_zero(), "{n1}");
        }
        for (n2, y) in &spaces {
            let by = b_vector(&Arc::new(y.clone())).unwrap();
            let bxy = b_vector(&Arc::new(x.disjoint_union(y))).unwrap();
            match (bx.clone(), by, bxy) {
                (BOutcome::Vector(a), BOutcome::Vector(b), BOutcome::Vector(c)) => {
                    assert_eq!(a.plus(&b), c, "{n1} + {n2}")
                }
                (_, _, BOutcome::Vector(_)) => panic!("{n1} + {n2}: union cannot clear an obstruction"),
                _ => {}
            }
        }
    }
}

#[test]
fn dim3_cone_apex_matches_invariant_vector() {
    for (name, y) in low_dim_corpus().into_iter().filter(|(_, k)| k.dim() == Some(2)) {
        let apex = Simplex::vertex(y.vertex_bound());
        let cone = Arc::new(y.cone());
        let report = dim3_check(&cone).unwrap();
        let at_apex = report.verdicts.iter().find(|v| v.simplex == apex).unwrap();
        let by = b_vector(&Arc::new(y.clone())).unwrap();
        assert_eq!(at_apex.passed(), by.vanishes(), "{name}");
        assert_eq!(at_apex.finding, Finding::Dim3(by));
    }
}

#[test]
fn dim3_examples() {
    assert!(dim3_check(&Arc::new(corpus::sphere(3))).unwrap().passed());
    assert!(dim3_check(&Arc::new(corpus::torus().suspension())).unwrap().passed());
}

#[test]
fn sullivan_agrees_with_is_euler() {
    for (name, k) in corpus::standard() {
        let k = Arc::new(k);
        let r = sullivan_check(&k);
        let e = ConstructibleFunction::one(Arc::clone(&k)).is_euler().unwrap();
        assert_eq!(r.passed(), e.euler, "{name}");
        assert_eq!(r.failures().count(), e.witnesses.len(), "{name}");
    }
}

#[test]
fn search_examples() {
    let budget = Budget::default();
    let rp2_cone = corpus::rp2_6().cone();
    let apex = Simplex::vertex(6);
    let w = dim4_local_search(&rp2_cone, &apex, &budget).unwrap();
    let w = w.witness().unwrap();
    assert_eq!(w.expr.depth(), 0);
    assert_eq!(w.value, Dyadic::one());

    // a smooth point of R³ has S² as link
    let s2_cone = corpus::sphere(2).cone();
    let apex = Simplex::vertex(4);
    match dim4_local_search(&s2_cone, &apex, &budget).unwrap() {
        SearchOutcome::Pass(stats) => assert!(stats.functions > 0),
        other => panic!("{other:?}"),
    }
}
