use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact number `num / 2^exp`, kept canonical: `exp == 0` or `num` odd.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: BigInt,
    exp: u32,
}

impl Dyadic {
    pub fn new(num: impl Into<BigInt>, exp: u32) -> Self {
        let mut d = Dyadic { num: num.into(), exp };
        d.normalize();
        d
    }

    pub fn zero() -> Self {
        Dyadic { num: BigInt::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        Dyadic { num: BigInt::one(), exp: 0 }
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.exp = 0;
            return;
        }
        if self.exp == 0 {
            return;
        }
        let tz = self.num.trailing_zeros().unwrap_or(0);
        let shift = tz.min(u64::from(self.exp)) as u32;
        if shift > 0 {
            self.num >>= shift;
            self.exp -= shift;
        }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.exp == 0
    }

    pub fn is_even_integer(&self) -> bool {
        self.exp == 0 && self.num.is_even()
    }

    pub fn is_odd_integer(&self) -> bool {
        self.exp == 0 && self.num.is_odd()
    }

    /// The integer value, if this is an integer.
    pub fn to_integer(&self) -> Option<&BigInt> {
        (self.exp == 0).then_some(&self.num)
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(ToPrimitive::to_i64)
    }

    /// Exact halving.
    pub fn half(&self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        let mut d = Dyadic { num: self.num.clone(), exp: self.exp + 1 };
        d.normalize();
        d
    }

    /// 2-adic valuation; `None` for zero. Negative for proper fractions.
    pub fn two_adic_valuation(&self) -> Option<i64> {
        if self.num.is_zero() {
            return None;
        }
        Some(self.num.trailing_zeros().unwrap_or(0) as i64 - i64::from(self.exp))
    }

    /// Bit length of the numerator's absolute value.
    pub fn numerator_bits(&self) -> u64 {
        self.num.bits()
    }

    pub fn abs(&self) -> Self {
        Dyadic { num: self.num.abs(), exp: self.exp }
    }

    pub fn pow(&self, e: u32) -> Self {
        Dyadic { num: num_traits::pow(self.num.clone(), e as usize), exp: self.exp * e }
    }

    fn aligned(&self, other: &Dyadic) -> (BigInt, BigInt, u32) {
        match self.exp.cmp(&other.exp) {
            Ordering::Equal => (self.num.clone(), other.num.clone(), self.exp),
            Ordering::Less => (self.num.clone() << (other.exp - self.exp), other.num.clone(), other.exp),
            Ordering::Greater => (self.num.clone(), other.num.clone() << (self.exp - other.exp), self.exp),
        }
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Dyadic { num: BigInt::from(n), exp: 0 }
    }
}

impl From<BigInt> for Dyadic {
    fn from(n: BigInt) -> Self {
        Dyadic { num: n, exp: 0 }
    }
}

impl Default for Dyadic {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add<&Dyadic> for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        if self.exp == 0 && rhs.exp == 0 {
            return Dyadic { num: &self.num + &rhs.num, exp: 0 };
        }
        let (a, b, exp) = self.aligned(rhs);
        Dyadic::new(a + b, exp)
    }
}

impl Sub<&Dyadic> for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        if self.exp == 0 && rhs.exp == 0 {
            return Dyadic { num: &self.num - &rhs.num, exp: 0 };
        }
        let (a, b, exp) = self.aligned(rhs);
        Dyadic::new(a - b, exp)
    }
}

impl Mul<&Dyadic> for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        let num = &self.num * &rhs.num;
        if self.exp == 0 && rhs.exp == 0 {
            return Dyadic { num, exp: 0 };
        }
        Dyadic::new(num, self.exp + rhs.exp)
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { num: -&self.num, exp: self.exp }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Dyadic> for Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: Dyadic) -> Dyadic {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Dyadic> for Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: &Dyadic) -> Dyadic {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { num: -self.num, exp: self.exp }
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Failure to parse a dyadic literal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDyadicError(pub String);

impl fmt::Display for ParseDyadicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid dyadic value {:?}: expected `p` or `p/2^k`", self.0)
    }
}

impl core::error::Error for ParseDyadicError {}

impl FromStr for Dyadic {
    type Err = ParseDyadicError;

    /// Accepts `p` or `p/2^k` with `p` a decimal integer and `k` a nonnegative decimal integer.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseDyadicError(s.to_string());
        let s_trim = s.trim();
        let (num, exp) = match s_trim.split_once('/') {
            None => (s_trim, 0),
            Some((p, den)) => {
                let k = den.trim().strip_prefix("2^").ok_or_else(err)?;
                if k.is_empty() || !k.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(err());
                }
                (p.trim(), k.parse::<u32>().map_err(|_| err())?)
            }
        };
        let digits = num.strip_prefix('-').unwrap_or(num);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let num: BigInt = num.parse().map_err(|_| err())?;
        Ok(Dyadic::new(num, exp))
    }
}
