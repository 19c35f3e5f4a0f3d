use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::simplex::Simplex;

/// A vertex map between two complexes, checked to send simplices onto simplices.
#[derive(Debug, Clone)]
pub struct SimplicialMap {
    source: Arc<SimplicialComplex>,
    target: Arc<SimplicialComplex>,
    vertex_map: BTreeMap<usize, usize>,
    // target index of the image of every source simplex
    images: Vec<usize>,
}

impl SimplicialMap {
    /// Validates the map: every source vertex must be mapped, and the image
    /// vertex set of each source simplex (duplicates collapsed) must be a
    /// target simplex. The first violating simplex in canonical order is reported.
    pub fn new(
        source: Arc<SimplicialComplex>,
        target: Arc<SimplicialComplex>,
        vertex_map: BTreeMap<usize, usize>,
    ) -> Result<Self> {
        let mut images = Vec::with_capacity(source.len());
        for s in source.simplices() {
            let image = s
                .vertices()
                .iter()
                .map(|v| vertex_map.get(v).copied().ok_or(Error::UnmappedVertex(*v)))
                .collect::<Result<Vec<_>>>()?;
            let idx = Simplex::from_vertex_set(image.clone())
                .and_then(|img| target.index_of(&img))
                .ok_or_else(|| Error::InvalidMap { simplex: s.clone(), image })?;
            images.push(idx);
        }
        Ok(SimplicialMap { source, target, vertex_map, images })
    }

    /// Builds a map from a function on vertex ids.
    pub fn from_fn(
        source: Arc<SimplicialComplex>,
        target: Arc<SimplicialComplex>,
        f: impl Fn(usize) -> usize,
    ) -> Result<Self> {
        let vertex_map = source.vertices().iter().map(|v| (*v, f(*v))).collect();
        Self::new(source, target, vertex_map)
    }

    pub fn identity(k: Arc<SimplicialComplex>) -> Self {
        Self::from_fn(Arc::clone(&k), k, |v| v).expect("identity is simplicial")
    }

    /// Map of `k` onto the one-point complex `{0}`.
    pub fn to_point(k: Arc<SimplicialComplex>) -> Self {
        Self::from_fn(k, Arc::new(SimplicialComplex::simplex(0)), |_| 0)
            .expect("constant map is simplicial")
    }

    pub fn source(&self) -> &Arc<SimplicialComplex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<SimplicialComplex> {
        &self.target
    }

    pub fn vertex_map(&self) -> &BTreeMap<usize, usize> {
        &self.vertex_map
    }

    /// Target index of the image of source simplex `i`.
    pub fn image_index(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SimplicialMap) -> Result<SimplicialMap> {
        if !same_complex(&self.target, &other.source) {
            return Err(Error::ComplexMismatch);
        }
        let vertex_map = self
            .vertex_map
            .iter()
            .map(|(v, w)| (*v, other.vertex_map[w]))
            .collect();
        Self::new(Arc::clone(&self.source), Arc::clone(&other.target), vertex_map)
    }
}

pub(crate) fn same_complex(a: &Arc<SimplicialComplex>, b: &Arc<SimplicialComplex>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
