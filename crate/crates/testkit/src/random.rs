//! Seeded random complexes, functions and maps.

use std::collections::BTreeMap;
use std::sync::Arc;

use eulerspace_core::{ConstructibleFunction, Dyadic, SimplicialComplex, SimplicialMap};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random complex on at most `max_vertices` vertices with facets of dimension at most `max_dim`.
pub fn complex(rng: &mut TestRng, max_vertices: usize, max_dim: usize) -> SimplicialComplex {
    let n = rng.gen_range(1..=max_vertices);
    let verts: Vec<usize> = (0..n).collect();
    let facets = rng.gen_range(1..=6);
    let list: Vec<Vec<usize>> = (0..facets)
        .map(|_| {
            let size = rng.gen_range(1..=(max_dim + 1).min(n));
            let mut f: Vec<usize> = verts.choose_multiple(rng, size).copied().collect();
            f.sort_unstable();
            f
        })
        .collect();
    SimplicialComplex::from_facets(list).unwrap()
}

/// Integer values drawn uniformly from `lo..=hi`.
pub fn function(rng: &mut TestRng, k: &Arc<SimplicialComplex>, lo: i64, hi: i64) -> ConstructibleFunction {
    let values = (0..k.len()).map(|_| Dyadic::from(rng.gen_range(lo..=hi))).collect();
    ConstructibleFunction::from_values(Arc::clone(k), values).unwrap()
}

/// A random source complex with a simplicial map into `target`.
pub fn map_into(rng: &mut TestRng, target: &Arc<SimplicialComplex>, max_vertices: usize) -> SimplicialMap {
    let tv = target.vertices();
    let n = rng.gen_range(1..=max_vertices);
    let g: Vec<usize> = (0..n).map(|_| tv[rng.gen_range(0..tv.len())]).collect();
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for _ in 0..rng.gen_range(1..=6) {
        let size = rng.gen_range(1..=n.min(4));
        let mut f: Vec<usize> = (0..n).collect::<Vec<_>>().choose_multiple(rng, size).copied().collect();
        f.sort_unstable();
        let mut image: Vec<usize> = f.iter().map(|v| g[*v]).collect();
        image.sort_unstable();
        image.dedup();
        let ok = eulerspace_core::Simplex::new(image).is_ok_and(|s| target.contains(&s));
        if ok {
            facets.push(f);
        }
    }
    if facets.is_empty() {
        facets.push(vec![0]);
    }
    let source = Arc::new(SimplicialComplex::from_facets(facets).unwrap());
    let vm: BTreeMap<usize, usize> = source.vertices().iter().map(|v| (*v, g[*v])).collect();
    SimplicialMap::new(source, Arc::clone(target), vm).unwrap()
}

/// `(f, g)` with `f: S → T` and `g: T → U`.
pub fn composable_pair(rng: &mut TestRng) -> (SimplicialMap, SimplicialMap) {
    let u = Arc::new(complex(rng, 5, 3));
    let g = map_into(rng, &u, 7);
    let f = map_into(rng, g.source(), 8);
    (f, g)
}
