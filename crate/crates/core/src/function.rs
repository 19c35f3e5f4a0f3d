use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::SimplicialComplex;
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::map::same_complex;
use crate::simplex::Simplex;

/// A dyadic-valued function, constant on each open simplex of a fixed complex.
///
/// Values are stored densely in canonical simplex order.
#[derive(Clone)]
pub struct ConstructibleFunction {
    complex: Arc<SimplicialComplex>,
    values: Vec<Dyadic>,
}

impl ConstructibleFunction {
    pub fn zero(complex: Arc<SimplicialComplex>) -> Self {
        let values = alloc::vec![Dyadic::zero(); complex.len()];
        ConstructibleFunction { complex, values }
    }

    pub fn constant(complex: Arc<SimplicialComplex>, c: Dyadic) -> Self {
        let values = alloc::vec![c; complex.len()];
        ConstructibleFunction { complex, values }
    }

    /// `1_K`.
    pub fn one(complex: Arc<SimplicialComplex>) -> Self {
        Self::constant(complex, Dyadic::one())
    }

    /// Indicator of a union of open simplices.
    pub fn indicator<'a, I>(complex: Arc<SimplicialComplex>, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Simplex>,
    {
        let mut f = Self::zero(complex);
        for s in members {
            let i = f
                .complex
                .index_of(s)
                .ok_or_else(|| Error::UnknownSimplex(s.clone()))?;
            f.values[i] = Dyadic::one();
        }
        Ok(f)
    }

    /// Indicator of the closed subcomplex generated by `facets`.
    pub fn closed_indicator<'a, I>(complex: Arc<SimplicialComplex>, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Simplex>,
    {
        let sub = SimplicialComplex::closure(facets.into_iter().cloned());
        Self::indicator(complex, sub.simplices())
    }

    pub fn from_values(complex: Arc<SimplicialComplex>, values: Vec<Dyadic>) -> Result<Self> {
        if values.len() != complex.len() {
            return Err(Error::InvalidArgument(alloc::format!(
                "expected {} values, got {}",
                complex.len(),
                values.len()
            )));
        }
        Ok(ConstructibleFunction { complex, values })
    }

    pub fn from_fn(complex: Arc<SimplicialComplex>, f: impl Fn(&Simplex) -> Dyadic) -> Self {
        let values = complex.simplices().iter().map(f).collect();
        ConstructibleFunction { complex, values }
    }

    pub fn complex(&self) -> &Arc<SimplicialComplex> {
        &self.complex
    }

    pub fn values(&self) -> &[Dyadic] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Dyadic> {
        self.values
    }

    pub fn value_at(&self, i: usize) -> &Dyadic {
        &self.values[i]
    }

    pub fn value(&self, s: &Simplex) -> Result<&Dyadic> {
        self.complex
            .index_of(s)
            .map(|i| &self.values[i])
            .ok_or_else(|| Error::UnknownSimplex(s.clone()))
    }

    /// Simplex/value pairs in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&Simplex, &Dyadic)> {
        self.complex.simplices().iter().zip(&self.values)
    }

    pub fn is_integer_valued(&self) -> bool {
        self.values.iter().all(Dyadic::is_integer)
    }

    /// First simplex (canonical order) carrying a non-integer value.
    pub fn first_non_integer(&self) -> Option<usize> {
        self.values.iter().position(|v| !v.is_integer())
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Dyadic::is_zero)
    }

    pub(crate) fn check_same(&self, other: &Self) -> Result<()> {
        if same_complex(&self.complex, &other.complex) {
            Ok(())
        } else {
            Err(Error::ComplexMismatch)
        }
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&Dyadic, &Dyadic) -> Dyadic) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.zip_unchecked(other, op))
    }

    pub(crate) fn zip_unchecked(
        &self,
        other: &Self,
        op: impl Fn(&Dyadic, &Dyadic) -> Dyadic,
    ) -> Self {
        let values = self.values.iter().zip(&other.values).map(|(a, b)| op(a, b)).collect();
        ConstructibleFunction { complex: Arc::clone(&self.complex), values }
    }

    pub fn map_values(&self, op: impl Fn(&Dyadic) -> Dyadic) -> Self {
        ConstructibleFunction {
            complex: Arc::clone(&self.complex),
            values: self.values.iter().map(op).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn scale(&self, c: &Dyadic) -> Self {
        self.map_values(|v| v * c)
    }

    pub fn neg(&self) -> Self {
        self.map_values(|v| -v)
    }
}

impl PartialEq for ConstructibleFunction {
    fn eq(&self, other: &Self) -> bool {
        same_complex(&self.complex, &other.complex) && self.values == other.values
    }
}

impl Eq for ConstructibleFunction {}

impl fmt::Debug for ConstructibleFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (s, v) in self.iter().filter(|(_, v)| !v.is_zero()) {
            m.entry(s, v);
        }
        m.finish()
    }
}
