//! Exhaustive enumeration of small complexes and simplicial maps.

use std::collections::BTreeMap;
use std::sync::Arc;

use eulerspace_core::{SimplicialComplex, SimplicialMap};

/// Every nonempty simplicial complex whose vertices lie in `0..n`.
pub fn all_complexes(n: usize) -> Vec<SimplicialComplex> {
    assert!(n <= 6, "enumeration is exponential");
    let mut subsets: Vec<u32> = (1u32..(1 << n)).collect();
    subsets.sort_by_key(|m| (m.count_ones(), *m));
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    grow(&subsets, 0, &mut chosen, &mut out);
    out.into_iter()
        .filter(|masks: &Vec<u32>| !masks.is_empty())
        .map(|masks| {
            let facets: Vec<Vec<usize>> = masks
                .iter()
                .map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect())
                .collect();
            SimplicialComplex::from_facets(facets).unwrap()
        })
        .collect()
}

fn grow(subsets: &[u32], at: usize, chosen: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if at == subsets.len() {
        out.push(chosen.clone());
        return;
    }
    let s = subsets[at];
    grow(subsets, at + 1, chosen, out);
    let faces_present = (0..32)
        .filter(|i| s & (1 << i) != 0)
        .map(|i| s & !(1 << i))
        .all(|f| f == 0 || chosen.contains(&f));
    if faces_present {
        chosen.push(s);
        grow(subsets, at + 1, chosen, out);
        chosen.pop();
    }
}

/// Every simplicial map from `source` to `target`.
pub fn all_maps(source: &Arc<SimplicialComplex>, target: &Arc<SimplicialComplex>) -> Vec<SimplicialMap> {
    let sv = source.vertices();
    let tv = target.vertices();
    let mut out = Vec::new();
    let total = tv.len().pow(sv.len() as u32);
    for code in 0..total {
        let mut c = code;
        let mut vm = BTreeMap::new();
        for &v in sv {
            vm.insert(v, tv[c % tv.len()]);
            c /= tv.len();
        }
        if let Ok(f) = SimplicialMap::new(Arc::clone(source), Arc::clone(target), vm) {
            out.push(f);
        }
    }
    out
}
