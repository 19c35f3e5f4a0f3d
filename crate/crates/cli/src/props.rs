//! Seeded randomized suite of calculus identities.

use std::collections::BTreeMap;
use std::sync::Arc;

use eulerspace_core::{
    barycentric_subdivision, ConstructibleFunction, Dyadic, Simplex, SimplicialComplex, SimplicialMap,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random complexes have at most this many vertices and this dimension;
/// function values are integers in `-VALUE_RANGE..=VALUE_RANGE`.
pub const MAX_VERTICES: usize = 8;
pub const MAX_DIM: usize = 3;
pub const VALUE_RANGE: i64 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityResult {
    pub name: &'static str,
    pub cases: usize,
    /// Case index and a short description of the first counterexample.
    pub failure: Option<(usize, String)>,
}

pub const IDENTITIES: [&str; 8] = [
    "integral_of_link_vanishes",
    "link_squared_is_twice_link",
    "dual_is_involution",
    "link_is_integral_over_link",
    "subdivision_invariance",
    "pushforward_functoriality",
    "pushforward_commutes_with_link",
    "half_link_restriction",
];

fn random_complex(rng: &mut ChaCha8Rng, max_vertices: usize, max_dim: usize) -> SimplicialComplex {
    let n = rng.gen_range(1..=max_vertices);
    let verts: Vec<usize> = (0..n).collect();
    let facets: Vec<Simplex> = (0..rng.gen_range(1..=6))
        .map(|_| {
            let size = rng.gen_range(1..=(max_dim + 1).min(n));
            let f: Vec<usize> = verts.choose_multiple(rng, size).copied().collect();
            Simplex::new(f).expect("distinct vertices")
        })
        .collect();
    SimplicialComplex::closure(facets)
}

fn random_function(rng: &mut ChaCha8Rng, k: &Arc<SimplicialComplex>) -> ConstructibleFunction {
    let values = (0..k.len()).map(|_| Dyadic::from(rng.gen_range(-VALUE_RANGE..=VALUE_RANGE))).collect();
    ConstructibleFunction::from_values(Arc::clone(k), values).expect("one value per simplex")
}

/// A random source complex on at most `max_vertices` vertices mapped into `target`.
fn random_map(rng: &mut ChaCha8Rng, target: &Arc<SimplicialComplex>, max_vertices: usize) -> SimplicialMap {
    let tv = target.vertices();
    let n = rng.gen_range(1..=max_vertices);
    let g: Vec<usize> = (0..n).map(|_| tv[rng.gen_range(0..tv.len())]).collect();
    let all: Vec<usize> = (0..n).collect();
    let mut facets = vec![Simplex::vertex(0)];
    for _ in 0..rng.gen_range(1..=6) {
        let size = rng.gen_range(1..=n.min(MAX_DIM + 1));
        let f = Simplex::new(all.choose_multiple(rng, size).copied().collect()).expect("distinct vertices");
        let image = Simplex::from_vertex_set(f.vertices().iter().map(|v| g[*v]).collect());
        if image.is_some_and(|s| target.contains(&s)) {
            facets.push(f);
        }
    }
    let source = Arc::new(SimplicialComplex::closure(facets));
    let vm: BTreeMap<usize, usize> = source.vertices().iter().map(|v| (*v, g[*v])).collect();
    SimplicialMap::new(source, Arc::clone(target), vm).expect("images checked")
}

type Check = Result<(), String>;

fn expect_eq(lhs: &ConstructibleFunction, rhs: &ConstructibleFunction, what: &str) -> Check {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: {lhs:?} != {rhs:?}"))
    }
}

fn run_identity(name: &str, rng: &mut ChaCha8Rng) -> Check {
    let k = Arc::new(random_complex(rng, MAX_VERTICES, MAX_DIM));
    let phi = random_function(rng, &k);
    let two = Dyadic::from(2);
    match name {
        "integral_of_link_vanishes" => {
            let i = phi.link().euler_integral();
            if i.is_zero() { Ok(()) } else { Err(format!("integral of link is {i}")) }
        }
        "link_squared_is_twice_link" => expect_eq(&phi.link().link(), &phi.link().scale(&two), "link twice"),
        "dual_is_involution" => expect_eq(&phi.dual().dual(), &phi, "dual twice"),
        "link_is_integral_over_link" => {
            let link = phi.link();
            for (i, tau) in k.simplices().iter().enumerate() {
                let r = phi.restrict_to_link(tau).map_err(|e| e.to_string())?.euler_integral();
                if &r != link.value_at(i) {
                    return Err(format!("at {tau}: integral {r} but link value {}", link.value_at(i)));
                }
            }
            Ok(())
        }
        "subdivision_invariance" => {
            let sd = barycentric_subdivision(&k);
            let fine = phi.subdivide(&sd).map_err(|e| e.to_string())?;
            if fine.euler_integral() != phi.euler_integral() {
                return Err("integral changed under subdivision".into());
            }
            expect_eq(&fine.link(), &phi.link().subdivide(&sd).map_err(|e| e.to_string())?, "link of subdivision")
        }
        "pushforward_functoriality" | "pushforward_commutes_with_link" => {
            let u = Arc::new(random_complex(rng, 5, MAX_DIM));
            let g = random_map(rng, &u, 7);
            let f = random_map(rng, g.source(), MAX_VERTICES);
            let psi = random_function(rng, f.source());
            let push = |x: &ConstructibleFunction, m: &SimplicialMap| x.pushforward(m).map_err(|e| e.to_string());
            if name == "pushforward_functoriality" {
                let gf = f.then(&g).map_err(|e| e.to_string())?;
                expect_eq(&push(&psi, &gf)?, &push(&push(&psi, &f)?, &g)?, "(gf)_* vs g_* f_*")
            } else {
                expect_eq(&push(&psi.link(), &f)?, &push(&psi, &f)?.link(), "f_* link vs link f_*")
            }
        }
        "half_link_restriction" => {
            for f in [phi.clone(), phi.scale(&two)] {
                let Ok(h) = f.half_link() else { continue };
                for tau in k.simplices() {
                    let r = f.restrict_to_link(tau).map_err(|e| e.to_string())?;
                    let Ok(hr) = r.half_link() else { continue };
                    let lhs = h.restrict_to_link(tau).map_err(|e| e.to_string())?;
                    expect_eq(&lhs, &r.sub(&hr).map_err(|e| e.to_string())?, "half link restricted")?;
                }
            }
            Ok(())
        }
        other => Err(format!("unknown identity {other}")),
    }
}

/// Runs every identity on `cases` random inputs. Each (identity, case) pair
/// draws from its own stream so results do not depend on evaluation order.
pub fn run_suite(seed: u64, cases: usize) -> Vec<IdentityResult> {
    IDENTITIES
        .iter()
        .enumerate()
        .map(|(idx, name)| {
            let failure = (0..cases).find_map(|case| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(((idx as u64) << 32) | case as u64);
                run_identity(name, &mut rng).err().map(|e| (case, e))
            });
            IdentityResult { name, cases, failure }
        })
        .collect()
}
