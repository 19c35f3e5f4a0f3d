//! Local obstructions to being homeomorphic to a real algebraic set.

pub mod bvector;
pub mod certificate;
pub mod checks;
pub mod expr;
pub mod report;
pub mod search;

pub use bvector::{b_expressions, b_vector, BOutcome, InvariantVector};
pub use certificate::{bonnard_bounds, divisibility_certificate, BoundQuery, DivisibilityCertificate, SignBounds};
pub use checks::{dim3_check, dim4_check, dim4_local_search, sullivan_check};
pub use expr::{Expr, ExpressionWitness, Location, Op, ViolationKind};
pub use report::{Check, Finding, ObstructionReport, SimplexVerdict};
pub use search::{closure_search, Budget, SearchOutcome, SearchStats, StopReason, GROWTH_GUARD_BITS};
