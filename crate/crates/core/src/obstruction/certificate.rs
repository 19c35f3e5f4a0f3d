use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::function::ConstructibleFunction;

/// Outcome of the divisibility test. `certified == false` is inconclusive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisibilityCertificate {
    pub certified: bool,
    /// Dimension of the underlying complex.
    pub dimension: usize,
    /// Smallest 2-adic valuation of a nonzero value; `None` for the zero function.
    pub min_valuation: Option<i64>,
}

/// Certifies algebraic constructibility when every value is divisible by
/// `2^d`, `d` the dimension of the complex.
pub fn divisibility_certificate(phi: &ConstructibleFunction) -> Result<DivisibilityCertificate> {
    if let Some(i) = phi.first_non_integer() {
        return Err(Error::NonInteger { simplex: phi.complex().simplex_at(i).clone() });
    }
    let dimension = phi.complex().dim().unwrap_or(0);
    let min_valuation = phi.values().iter().filter_map(|v| v.two_adic_valuation()).min();
    Ok(DivisibilityCertificate {
        certified: min_valuation.map_or(true, |m| m >= dimension as i64),
        dimension,
        min_valuation,
    })
}

/// Dimension `d`, half-width `k` and center `δ` of a value range `[δ-k, δ+k]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundQuery {
    pub d: i64,
    pub k: u64,
    pub delta: i64,
}

/// Upper bounds on the number of polynomial signs needed to present a
/// function with values in `[δ-k, δ+k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignBounds {
    /// Generic presentation; valid only on irreducible sets.
    pub generic: BigInt,
    /// Complete presentation.
    pub complete: BigInt,
}

pub fn bonnard_bounds(q: BoundQuery) -> Result<SignBounds> {
    if q.d <= 0 {
        return Err(Error::InvalidArgument(alloc::format!(
            "dimension must be positive, got {}",
            q.d
        )));
    }
    let pow = BigInt::from(1) << (q.d - 1) as usize;
    let k = BigInt::from(q.k);
    let abs_delta = BigInt::from(q.delta).abs();
    let (generic, complete) = if q.k % 2 == 0 {
        (&pow * &k + &abs_delta, &pow * 3 * &k + &abs_delta)
    } else {
        let k1 = k - 1;
        (
            &pow * &k1 + 1 + &abs_delta,
            &pow * 3 * &k1 + 2 * q.d + &abs_delta,
        )
    };
    Ok(SignBounds { generic, complete })
}
