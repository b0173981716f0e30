//! Exact scalars and the half-integer bookkeeping used for weights and modes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Arbitrary-precision rational number. `BigRational` keeps values in lowest
/// terms with a positive denominator, and zero is always `0/1`.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Generalized binomial coefficient `a(a-1)...(a-m+1)/m!` for any integer `a`.
///
/// Returns zero for negative `m`, so formulas can be transcribed without
/// guarding their index ranges.
pub fn binomial(a: i64, m: i64) -> Scalar {
    Scalar::from_integer(binomial_int(a, m))
}

pub fn binomial_int(a: i64, m: i64) -> BigInt {
    if m < 0 {
        return BigInt::zero();
    }
    if m == 0 {
        return BigInt::one();
    }
    if a >= 0 && a < m {
        return BigInt::zero();
    }
    // (-1)^m C(m-a-1, m) for negative tops
    if a < 0 {
        let v = binomial_int(m - a - 1, m);
        return if m % 2 == 0 { v } else { -v };
    }
    let m = m.min(a - m);
    if let Some(v) = small_binomial(a, m) {
        return BigInt::from(v);
    }
    let mut acc = BigInt::one();
    for t in 0..m {
        acc *= BigInt::from(a - t);
        acc /= BigInt::from(t + 1);
    }
    acc
}

fn small_binomial(a: i64, m: i64) -> Option<i128> {
    let mut acc: i128 = 1;
    for t in 0..m {
        acc = acc.checked_mul((a - t) as i128)?;
        acc /= (t + 1) as i128;
    }
    Some(acc)
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, t| acc * BigInt::from(t))
}

/// Renders a scalar as `n` or `n/d`.
pub fn render_scalar(c: &Scalar) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn parse_scalar(s: &str) -> Result<Scalar, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if !d.is_positive() {
                return Err(bad());
            }
            Ok(Scalar::new(n, d))
        }
        None => Ok(Scalar::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// A number in `Z/2`, stored doubled so that half-integers stay exact and
/// totally ordered. Used for weights and for weighted mode indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HalfInt {
    pub doubled: i64,
}

/// The weight of a basis symbol; always at least 1.
pub type WeightValue = HalfInt;

impl HalfInt {
    pub const fn from_doubled(doubled: i64) -> Self {
        HalfInt { doubled }
    }

    pub const fn int(n: i64) -> Self {
        HalfInt { doubled: 2 * n }
    }

    pub fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    /// The integer value, if there is one.
    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.doubled / 2)
    }

    pub fn to_scalar(self) -> Scalar {
        frac(self.doubled, 2)
    }
}

impl std::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_doubled(self.doubled + rhs.doubled)
    }
}

impl std::ops::Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_doubled(self.doubled - rhs.doubled)
    }
}

impl std::ops::Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_doubled(-self.doubled)
    }
}

impl From<i64> for HalfInt {
    fn from(n: i64) -> Self {
        HalfInt::int(n)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let q = parse_scalar(s)?;
        let doubled = q * int(2);
        if !doubled.is_integer() {
            return Err(Error::Parse(format!("`{s}` is not a multiple of 1/2")));
        }
        doubled
            .numer()
            .to_i64()
            .map(HalfInt::from_doubled)
            .ok_or_else(|| Error::Parse(format!("`{s}` out of range")))
    }
}
