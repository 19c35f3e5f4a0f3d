//! The operator calculus on simplexwise-constant functions.
//!
//! For a point in the open simplex `τ`, the small sphere around it meets
//! `open τ` in a sphere of dimension `dim τ - 1` and every open coface `σ`
//! in an open cell of dimension `dim σ - 1`. Taking compactly supported Euler
//! characteristics of those pieces gives the link operator
//!
//! ```text
//! (Λφ)(τ) = (1 - (-1)^dim τ) φ(τ) + Σ_{σ ⊋ τ} (-1)^(dim σ + 1) φ(σ)
//! ```
//!
//! Pushforward along a simplicial map sums over open simplices mapping onto
//! an open target simplex; the fiber over an interior point of `σ'` inside
//! open `σ` is an open cell of dimension `dim σ - dim σ'`.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::GeometricLink;
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::function::ConstructibleFunction;
use crate::map::{same_complex, SimplicialMap};
use crate::simplex::Simplex;
use crate::subdivision::Subdivision;

/// Why a value failed the evenness test behind the half-link.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ParityKind {
    /// An odd integer.
    Odd,
    /// Not an integer at all.
    NonInteger,
}

impl fmt::Display for ParityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParityKind::Odd => "odd",
            ParityKind::NonInteger => "non-integer",
        })
    }
}

/// A simplex where `Λφ` is not an even integer, with the offending value of `Λφ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityObstruction {
    pub simplex: Simplex,
    pub value: Dyadic,
    pub kind: ParityKind,
}

impl fmt::Display for ParityObstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "link value {} ({}) at {}", self.value, self.kind, self.simplex)
    }
}

/// Outcome of the Euler test: `euler` iff `witnesses` is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerVerdict {
    pub euler: bool,
    pub witnesses: Vec<ParityObstruction>,
}

fn parity_of(value: &Dyadic) -> Option<ParityKind> {
    if value.is_even_integer() {
        None
    } else if value.is_integer() {
        Some(ParityKind::Odd)
    } else {
        Some(ParityKind::NonInteger)
    }
}

impl ConstructibleFunction {
    /// `∫ φ dχ = Σ_σ (-1)^dim σ φ(σ)`.
    pub fn euler_integral(&self) -> Dyadic {
        let (mut even, mut odd) = (Dyadic::zero(), Dyadic::zero());
        for (s, v) in self.iter() {
            if s.dim() % 2 == 0 {
                even = even + v;
            } else {
                odd = odd + v;
            }
        }
        even - odd
    }

    /// The link operator `Λ`.
    pub fn link(&self) -> ConstructibleFunction {
        let k = self.complex();
        let values = (0..k.len())
            .map(|i| {
                let (mut plus, mut minus) = (Dyadic::zero(), Dyadic::zero());
                if k.simplex_at(i).dim() % 2 == 1 {
                    plus = self.value_at(i) + self.value_at(i);
                }
                for &j in k.cofaces(i) {
                    if k.simplex_at(j).dim() % 2 == 1 {
                        plus = plus + self.value_at(j);
                    } else {
                        minus = minus + self.value_at(j);
                    }
                }
                plus - minus
            })
            .collect();
        ConstructibleFunction::from_values(Arc::clone(k), values).expect("same complex")
    }

    /// `Dφ = φ - Λφ`.
    pub fn dual(&self) -> ConstructibleFunction {
        self.zip_unchecked(&self.link(), |a, b| a - b)
    }

    /// `½Λφ` without any parity check; fractional values are kept exactly.
    pub fn half_link_unchecked(&self) -> ConstructibleFunction {
        self.link().map_values(Dyadic::half)
    }

    /// `Λ̃φ = ½Λφ`, defined when every value of `Λφ` is an even integer.
    /// Otherwise returns the first failing simplex in canonical order.
    pub fn half_link(&self) -> Result<ConstructibleFunction, ParityObstruction> {
        let link = self.link();
        if let Some((s, v, kind)) = link
            .iter()
            .find_map(|(s, v)| parity_of(v).map(|kind| (s, v, kind)))
        {
            return Err(ParityObstruction { simplex: s.clone(), value: v.clone(), kind });
        }
        Ok(link.map_values(Dyadic::half))
    }

    /// `φ - Λ̃φ`.
    pub fn complementary_half_link(&self) -> Result<ConstructibleFunction, ParityObstruction> {
        let h = self.half_link()?;
        Ok(self.zip_unchecked(&h, |a, b| a - b))
    }

    /// Whether `Λφ` is even everywhere, with every failing simplex.
    pub fn is_euler(&self) -> Result<EulerVerdict> {
        if let Some(i) = self.first_non_integer() {
            return Err(Error::NonInteger { simplex: self.complex().simplex_at(i).clone() });
        }
        let witnesses: Vec<_> = self
            .link()
            .iter()
            .filter_map(|(s, v)| {
                parity_of(v).map(|kind| ParityObstruction {
                    simplex: s.clone(),
                    value: v.clone(),
                    kind,
                })
            })
            .collect();
        Ok(EulerVerdict { euler: witnesses.is_empty(), witnesses })
    }

    /// `P(φ) = ½(φ⁴ - φ²)`.
    pub fn p_operator(&self) -> ConstructibleFunction {
        self.map_values(|v| {
            let sq = v * v;
            (&sq * &sq - sq).half()
        })
    }

    /// `(f*φ)(σ) = φ(f(σ))`.
    pub fn pullback(&self, f: &SimplicialMap) -> Result<ConstructibleFunction> {
        if !same_complex(f.target(), self.complex()) {
            return Err(Error::ComplexMismatch);
        }
        let source = f.source();
        let values = (0..source.len())
            .map(|i| self.value_at(f.image_index(i)).clone())
            .collect();
        ConstructibleFunction::from_values(Arc::clone(source), values)
    }

    /// `(f_*φ)(σ') = Σ_{f(σ) = σ'} (-1)^(dim σ - dim σ') φ(σ)`.
    pub fn pushforward(&self, f: &SimplicialMap) -> Result<ConstructibleFunction> {
        if !same_complex(f.source(), self.complex()) {
            return Err(Error::ComplexMismatch);
        }
        let target = f.target();
        let mut values = alloc::vec![Dyadic::zero(); target.len()];
        for (i, (s, v)) in self.iter().enumerate() {
            let j = f.image_index(i);
            if (s.dim() - target.simplex_at(j).dim()) % 2 == 0 {
                values[j] = &values[j] + v;
            } else {
                values[j] = &values[j] - v;
            }
        }
        ConstructibleFunction::from_values(Arc::clone(target), values)
    }

    /// `φ` restricted to the link of a point in the open simplex `tau`.
    pub fn restrict_to_link(&self, tau: &Simplex) -> Result<ConstructibleFunction> {
        let link = self.complex().geometric_link(tau)?;
        Ok(self.restrict_to(&link))
    }

    /// Restriction to an already computed link of a simplex of this complex.
    pub fn restrict_to(&self, link: &GeometricLink) -> ConstructibleFunction {
        let k = self.complex();
        ConstructibleFunction::from_fn(Arc::clone(&link.complex), |s| {
            let ambient = link.ambient_simplex(s);
            let i = k.index_of(&ambient).expect("link cells lie in the star");
            self.value_at(i).clone()
        })
    }

    /// Transport to a barycentric subdivision: each chain takes the value of its carrier.
    pub fn subdivide(&self, sd: &Subdivision) -> Result<ConstructibleFunction> {
        if !same_complex(&sd.base, self.complex()) {
            return Err(Error::ComplexMismatch);
        }
        let values = sd.carrier.iter().map(|&c| self.value_at(c).clone()).collect();
        ConstructibleFunction::from_values(Arc::clone(&sd.complex), values)
    }
}
