use alloc::collections::{BTreeMap, BTreeSet};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::simplex::Simplex;

/// A finite, downward-closed family of simplices.
///
/// Simplices are kept in canonical order (dimension, then lexicographic) and
/// every per-simplex array in the crate is indexed by position in that order.
/// The complex is immutable once built.
#[derive(Clone)]
pub struct SimplicialComplex {
    simplices: Vec<Simplex>,
    index: BTreeMap<Simplex, usize>,
    // proper cofaces of each simplex, ascending
    cofaces: Vec<Vec<usize>>,
    vertices: Vec<usize>,
}

impl SimplicialComplex {
    /// The downward closure of `facets`. Duplicate or redundant facets are ignored.
    pub fn from_facets<I, F>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: Into<Vec<usize>>,
    {
        let mut tops = Vec::new();
        for facet in facets {
            tops.push(Simplex::new(facet.into())?);
        }
        if tops.is_empty() {
            return Err(Error::EmptyComplex);
        }
        Ok(Self::closure(tops))
    }

    /// The complex with no simplices. Only arises as a link.
    pub fn empty() -> Self {
        Self::from_closed_set(BTreeSet::new())
    }

    /// Downward closure of an arbitrary family of simplices (possibly empty).
    pub fn closure<I: IntoIterator<Item = Simplex>>(simplices: I) -> Self {
        let mut set = BTreeSet::new();
        for s in simplices {
            if set.contains(&s) {
                continue;
            }
            set.extend(s.faces());
        }
        Self::from_closed_set(set)
    }

    fn from_closed_set(set: BTreeSet<Simplex>) -> Self {
        let simplices: Vec<Simplex> = set.into_iter().collect();
        let index: BTreeMap<Simplex, usize> = simplices
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        let mut cofaces = vec![Vec::new(); simplices.len()];
        for (i, s) in simplices.iter().enumerate() {
            for face in s.faces() {
                if face != *s {
                    cofaces[index[&face]].push(i);
                }
            }
        }
        let vertices = simplices
            .iter()
            .take_while(|s| s.dim() == 0)
            .map(|s| s.vertices()[0])
            .collect();
        SimplicialComplex { simplices, index, cofaces, vertices }
    }

    /// The closed `n`-simplex on vertices `0..=n`.
    pub fn simplex(n: usize) -> Self {
        Self::closure([Simplex::from_sorted((0..=n).collect())])
    }

    /// Boundary of the `n`-simplex on vertices `0..=n`: a sphere of dimension `n - 1`.
    /// Empty for `n = 0`.
    pub fn simplex_boundary(n: usize) -> Self {
        Self::closure(Simplex::from_sorted((0..=n).collect()).boundary_faces())
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn simplex_at(&self, i: usize) -> &Simplex {
        &self.simplices[i]
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index.contains_key(s)
    }

    /// Indices of the proper cofaces of simplex `i`.
    pub fn cofaces(&self, i: usize) -> &[usize] {
        &self.cofaces[i]
    }

    /// Sorted vertex ids.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// One past the largest vertex id; zero for the empty complex.
    pub fn vertex_bound(&self) -> usize {
        self.vertices.last().map_or(0, |v| v + 1)
    }

    /// Maximal simplex dimension, `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.last().map(Simplex::dim)
    }

    /// Number of simplices in each dimension `0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dim().map_or(0, |d| d + 1)];
        for s in &self.simplices {
            f[s.dim()] += 1;
        }
        f
    }

    /// Maximal simplices in canonical order.
    pub fn facets(&self) -> Vec<Simplex> {
        self.simplices
            .iter()
            .enumerate()
            .filter(|(i, _)| self.cofaces[*i].is_empty())
            .map(|(_, s)| s.clone())
            .collect()
    }

    /// Alternating count of simplices.
    pub fn euler_characteristic(&self) -> i64 {
        self.simplices.iter().map(Simplex::sign).sum()
    }

    /// `{ σ : v ∉ σ, σ ∪ {v} ∈ K }`.
    pub fn vertex_link(&self, v: usize) -> Result<Self> {
        let s = Simplex::vertex(v);
        if !self.contains(&s) {
            return Err(Error::UnknownVertex(v));
        }
        self.simplicial_link(&s)
    }

    /// `{ σ : σ ∩ τ = ∅, σ ∪ τ ∈ K }`.
    pub fn simplicial_link(&self, tau: &Simplex) -> Result<Self> {
        let i = self.index_of(tau).ok_or_else(|| Error::UnknownSimplex(tau.clone()))?;
        let set: BTreeSet<Simplex> = self.cofaces[i]
            .iter()
            .map(|&j| {
                let rest: Vec<usize> = self.simplices[j]
                    .vertices()
                    .iter()
                    .copied()
                    .filter(|v| !tau.contains_vertex(*v))
                    .collect();
                Simplex::from_sorted(rest)
            })
            .collect();
        Ok(Self::from_closed_set(set))
    }

    /// Simplicial join. The second operand is shifted past `self.vertex_bound()`.
    pub fn join(&self, other: &SimplicialComplex) -> Join {
        let offset = self.vertex_bound();
        let mut set: BTreeSet<Simplex> = self.simplices.iter().cloned().collect();
        for rho in &other.simplices {
            let rho = rho.shifted(offset);
            for sigma in &self.simplices {
                set.insert(sigma.union(&rho));
            }
            set.insert(rho);
        }
        Join { complex: Self::from_closed_set(set), offset }
    }

    /// Disjoint union with the second operand shifted past `self.vertex_bound()`.
    pub fn disjoint_union(&self, other: &SimplicialComplex) -> Self {
        let offset = self.vertex_bound();
        let set = self
            .simplices
            .iter()
            .cloned()
            .chain(other.simplices.iter().map(|s| s.shifted(offset)))
            .collect();
        Self::from_closed_set(set)
    }

    /// Join with a point; the apex is vertex `self.vertex_bound()`.
    pub fn cone(&self) -> Self {
        self.join(&Self::simplex(0)).complex
    }

    /// Join with two points; the poles are `vertex_bound()` and `vertex_bound() + 1`.
    pub fn suspension(&self) -> Self {
        self.join(&Self::simplex_boundary(1)).complex
    }

    /// The link of a point in the open simplex `tau`: the join of the
    /// boundary of a `dim tau`-simplex with the simplicial link of `tau`.
    pub fn geometric_link(&self, tau: &Simplex) -> Result<GeometricLink> {
        let link = self.simplicial_link(tau)?;
        let sphere = Self::simplex_boundary(tau.dim());
        let join = sphere.join(&link);
        Ok(GeometricLink {
            complex: Arc::new(join.complex),
            base: tau.clone(),
            offset: join.offset,
        })
    }

    /// Applies an injective relabeling of vertex ids.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> Self {
        let set = self
            .simplices
            .iter()
            .map(|s| Simplex::new(s.vertices().iter().map(|v| map(*v)).collect()))
            .collect::<Result<BTreeSet<_>>>()
            .expect("relabeling must be injective");
        Self::from_closed_set(set)
    }

    /// Relabels vertices to `0..vertex_count` preserving order.
    pub fn compacted(&self) -> Self {
        let pos: BTreeMap<usize, usize> =
            self.vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        self.relabel(|v| pos[&v])
    }

    /// Whether every nonempty subset of every member is a member.
    pub fn is_downward_closed(&self) -> bool {
        self.simplices
            .iter()
            .all(|s| s.faces().iter().all(|f| self.contains(f)))
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.simplices == other.simplices
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("f_vector", &self.f_vector())
            .field("facets", &self.facets())
            .finish()
    }
}

/// Result of [`SimplicialComplex::join`]. Vertices of the second operand were shifted by `offset`.
#[derive(Debug, Clone)]
pub struct Join {
    pub complex: SimplicialComplex,
    pub offset: usize,
}

/// The link of a point in the open simplex `base`, as a join `∂Δ * lk(base)`.
///
/// Vertices below `offset` belong to the boundary sphere; a vertex `w >= offset`
/// is the vertex `w - offset` of the simplicial link.
#[derive(Debug, Clone)]
pub struct GeometricLink {
    pub complex: Arc<SimplicialComplex>,
    pub base: Simplex,
    pub offset: usize,
}

impl GeometricLink {
    /// Splits a link simplex into its sphere part and its simplicial-link part
    /// (ids restored to those of the ambient complex).
    pub fn split(&self, s: &Simplex) -> (Vec<usize>, Vec<usize>) {
        let (sphere, rest): (Vec<usize>, Vec<usize>) =
            s.vertices().iter().partition(|v| **v < self.offset);
        (sphere, rest.into_iter().map(|v| v - self.offset).collect())
    }

    /// The ambient simplex whose open cell contains the cone on the open link cell `s`.
    pub fn ambient_simplex(&self, s: &Simplex) -> Simplex {
        let (_, rest) = self.split(s);
        match Simplex::from_vertex_set(rest) {
            Some(r) => self.base.union(&r),
            None => self.base.clone(),
        }
    }
}
