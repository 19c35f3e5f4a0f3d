//! Exact Euler calculus of constructible functions on finite simplicial
//! complexes, and the local topological obstructions for a compact
//! polyhedron to be homeomorphic to a real algebraic set.
//!
//! Everything here is pure computation on immutable values; file formats,
//! reports and the command line live in the `eulerspace` crate.
#![no_std]

extern crate alloc;

pub mod calculus;
pub mod complex;
pub mod corpus;
pub mod dyadic;
pub mod error;
pub mod function;
pub mod map;
pub mod obstruction;
pub mod simplex;
pub mod subdivision;

pub use calculus::{EulerVerdict, ParityKind, ParityObstruction};
pub use complex::{GeometricLink, Join, SimplicialComplex};
pub use dyadic::{Dyadic, ParseDyadicError};
pub use error::{Error, Result};
pub use function::ConstructibleFunction;
pub use map::SimplicialMap;
pub use simplex::Simplex;
pub use subdivision::{barycentric_subdivision, Subdivision};
