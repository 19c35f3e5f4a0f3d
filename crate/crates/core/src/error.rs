use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::simplex::Simplex;

/// Errors raised by constructors and operators of the calculus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A top-level complex was requested with no facets.
    EmptyComplex,
    /// A facet had no vertices.
    EmptyFacet,
    /// A facet listed the same vertex twice.
    RepeatedVertex { facet: Vec<usize>, vertex: usize },
    /// A vertex id was not present in the complex.
    UnknownVertex(usize),
    /// A simplex was not present in the complex.
    UnknownSimplex(Simplex),
    /// A simplicial map sent a simplex onto a vertex set that is not a target simplex.
    InvalidMap { simplex: Simplex, image: Vec<usize> },
    /// A source vertex has no image under the vertex map.
    UnmappedVertex(usize),
    /// Two functions (or a function and a map) live on different complexes.
    ComplexMismatch,
    /// An operation that requires integer values met a fractional one.
    NonInteger { simplex: Simplex },
    /// The operation is only defined up to the given dimension.
    DimensionTooLarge { dim: usize, max: usize },
    /// Invalid argument with a short explanation.
    InvalidArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyComplex => f.write_str("empty complex"),
            Error::EmptyFacet => f.write_str("empty facet"),
            Error::RepeatedVertex { facet, vertex } => {
                write!(f, "facet {facet:?} repeats vertex {vertex}")
            }
            Error::UnknownVertex(v) => write!(f, "vertex {v} is not in the complex"),
            Error::UnknownSimplex(s) => write!(f, "simplex {s} is not in the complex"),
            Error::InvalidMap { simplex, image } => {
                write!(f, "simplex {simplex} maps to {image:?}, which is not a target simplex")
            }
            Error::UnmappedVertex(v) => write!(f, "vertex {v} has no image"),
            Error::ComplexMismatch => f.write_str("functions are defined on different complexes"),
            Error::NonInteger { simplex } => write!(f, "non-integer value on simplex {simplex}"),
            Error::DimensionTooLarge { dim, max } => {
                write!(f, "complex has dimension {dim}, at most {max} is supported")
            }
            Error::InvalidArgument(msg) => f.write_str(msg),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
