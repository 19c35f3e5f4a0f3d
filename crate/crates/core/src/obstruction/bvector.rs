use alloc::sync::Arc;
use core::fmt;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::function::ConstructibleFunction;
use crate::obstruction::expr::{Expr, ExpressionWitness};

/// `(χ₂, b₁, b₂, b₃, b₄) ∈ (Z/2)⁵`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct InvariantVector {
    pub chi2: u8,
    pub b: [u8; 4],
}

impl InvariantVector {
    pub fn is_zero(&self) -> bool {
        self.chi2 == 0 && self.b == [0; 4]
    }

    pub fn components(&self) -> [u8; 5] {
        [self.chi2, self.b[0], self.b[1], self.b[2], self.b[3]]
    }

    /// Componentwise sum mod 2.
    pub fn plus(&self, other: &Self) -> Self {
        let mut b = [0; 4];
        for (i, slot) in b.iter_mut().enumerate() {
            *slot = self.b[i] ^ other.b[i];
        }
        InvariantVector { chi2: self.chi2 ^ other.chi2, b }
    }

    /// Name of the first nonzero component, if any.
    pub fn first_nonzero(&self) -> Option<&'static str> {
        const NAMES: [&str; 5] = ["chi2", "b1", "b2", "b3", "b4"];
        self.components().iter().position(|c| *c != 0).map(|i| NAMES[i])
    }
}

impl fmt::Display for InvariantVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e] = self.components();
        write!(f, "({a},{b},{c},{d},{e})")
    }
}

/// Either the invariant vector, or the parity failure met while computing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BOutcome {
    Vector(InvariantVector),
    Obstructed(ExpressionWitness),
}

impl BOutcome {
    /// True iff the vector exists and vanishes.
    pub fn vanishes(&self) -> bool {
        matches!(self, BOutcome::Vector(v) if v.is_zero())
    }
}

fn bit(f: &ConstructibleFunction) -> u8 {
    let v = f.euler_integral();
    debug_assert!(v.is_integer());
    u8::from(v.is_odd_integer())
}

/// Computes `α = Λ̃1`, `β = α² - Λ̃(α²)`, `γ = α³ - Λ̃(α³)` and the four
/// integrals `∫αβ, ∫αγ, ∫βγ, ∫αβγ` mod 2, together with `χ mod 2`.
///
/// A half-link that is not integer-valued is returned as a witness.
pub fn b_vector(k: &Arc<SimplicialComplex>) -> Result<BOutcome> {
    if let Some(d) = k.dim() {
        if d > 2 {
            return Err(Error::DimensionTooLarge { dim: d, max: 2 });
        }
    }
    let chi2 = (k.euler_characteristic().rem_euclid(2)) as u8;

    let one_e = Expr::one();
    let one = ConstructibleFunction::one(Arc::clone(k));

    // ½Λ of `f`, or the witness naming it
    let halve = |e: &Arc<Expr>, f: &ConstructibleFunction| {
        let he = Expr::half_link(e);
        let h = f.half_link_unchecked();
        match h.first_non_integer() {
            Some(_) => Err(ExpressionWitness::detect(&he, &h).expect("fractional value")),
            None => Ok(h),
        }
    };

    let alpha_e = Expr::half_link(&one_e);
    let alpha = match halve(&one_e, &one) {
        Ok(x) => x,
        Err(w) => return Ok(BOutcome::Obstructed(w)),
    };
    let sq_e = Expr::mul(&alpha_e, &alpha_e);
    let sq = alpha.mul(&alpha)?;
    let hsq = match halve(&sq_e, &sq) {
        Ok(x) => x,
        Err(w) => return Ok(BOutcome::Obstructed(w)),
    };
    let cube_e = Expr::mul(&sq_e, &alpha_e);
    let cube = sq.mul(&alpha)?;
    let hcube = match halve(&cube_e, &cube) {
        Ok(x) => x,
        Err(w) => return Ok(BOutcome::Obstructed(w)),
    };
    let beta = sq.sub(&hsq)?;
    let gamma = cube.sub(&hcube)?;

    let ab = alpha.mul(&beta)?;
    let b = [
        bit(&ab),
        bit(&alpha.mul(&gamma)?),
        bit(&beta.mul(&gamma)?),
        bit(&ab.mul(&gamma)?),
    ];
    Ok(BOutcome::Vector(InvariantVector { chi2, b }))
}

/// Expression trees for `α, β, γ, αβ, αγ, βγ, αβγ`, in that order.
pub fn b_expressions() -> [Arc<Expr>; 7] {
    let one = Expr::one();
    let alpha = Expr::half_link(&one);
    let sq = Expr::mul(&alpha, &alpha);
    let cube = Expr::mul(&sq, &alpha);
    let beta = Expr::sub(&sq, &Expr::half_link(&sq));
    let gamma = Expr::sub(&cube, &Expr::half_link(&cube));
    let ab = Expr::mul(&alpha, &beta);
    [
        Arc::clone(&alpha),
        Arc::clone(&beta),
        Arc::clone(&gamma),
        Arc::clone(&ab),
        Expr::mul(&alpha, &gamma),
        Expr::mul(&beta, &gamma),
        Expr::mul(&ab, &gamma),
    ]
}
