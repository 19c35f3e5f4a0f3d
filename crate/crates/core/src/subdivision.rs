use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::complex::SimplicialComplex;
use crate::simplex::Simplex;

/// Barycentric subdivision together with its carrier map.
///
/// Vertex `i` of the subdivision is the barycenter of simplex `i` (canonical
/// index) of the base complex. A subdivision simplex is a chain of base
/// simplices under strict face inclusion and is carried by its top element.
#[derive(Debug, Clone)]
pub struct Subdivision {
    pub base: Arc<SimplicialComplex>,
    pub complex: Arc<SimplicialComplex>,
    /// Base-simplex index carrying each subdivision simplex, by subdivision index.
    pub carrier: Vec<usize>,
}

pub fn barycentric_subdivision(base: &Arc<SimplicialComplex>) -> Subdivision {
    let k = base.as_ref();
    // faces[i]: proper faces of simplex i, as indices
    let faces: Vec<Vec<usize>> = (0..k.len())
        .map(|i| {
            let s = k.simplex_at(i);
            s.faces()
                .iter()
                .filter(|f| *f != s)
                .map(|f| k.index_of(f).expect("complex is downward closed"))
                .collect()
        })
        .collect();

    let mut chains = Vec::new();
    for top in 0..k.len() {
        let mut stack = alloc::vec![alloc::vec![top]];
        while let Some(chain) = stack.pop() {
            let last = *chain.last().unwrap();
            for &f in &faces[last] {
                let mut next = chain.clone();
                next.push(f);
                stack.push(next);
            }
            chains.push(Simplex::from_vertex_set(chain).unwrap());
        }
    }
    let complex = SimplicialComplex::closure(chains);
    // the largest index in a chain is its top element, as canonical order refines inclusion
    let carrier = complex
        .simplices()
        .iter()
        .map(|s| *s.vertices().last().unwrap())
        .collect();
    Subdivision { base: Arc::clone(base), complex: Arc::new(complex), carrier }
}
