//! Basis symbols `(E_{p,q})_{[i,j]}(m,n)` and the ambient matrix algebra they live in.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::WeightValue;

/// Z/2-grading of the matrix algebra `M_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Grading {
    /// Everything even; only the diagonal blocks `[0,0]`, `[1,1]` occur.
    Trivial,
    /// `k = k1 + k2`, block-diagonal units even and off-diagonal units odd.
    Split { k1: u16 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ambient {
    pub k: u16,
    pub grading: Grading,
}

impl Ambient {
    pub fn trivial(k: u16) -> Result<Self> {
        if k == 0 {
            return Err(Error::Config("matrix size k must be positive".into()));
        }
        Ok(Ambient { k, grading: Grading::Trivial })
    }

    pub fn split(k1: u16, k2: u16) -> Result<Self> {
        if k1 == 0 || k2 == 0 {
            return Err(Error::Config("block sizes k1, k2 must be positive".into()));
        }
        Ok(Ambient { k: k1 + k2, grading: Grading::Split { k1 } })
    }

    /// Parity of the matrix unit `E_{p,q}` under the grading.
    pub fn unit_parity(&self, p: u16, q: u16) -> u8 {
        match self.grading {
            Grading::Trivial => 0,
            Grading::Split { k1 } => u8::from((p <= k1) != (q <= k1)),
        }
    }

    pub fn validate(&self, key: &BasisKey) -> Result<()> {
        if key.i > 1 || key.j > 1 {
            return Err(Error::InvalidKey(format!("block indices must be 0 or 1 in {key}")));
        }
        if key.p == 0 || key.q == 0 || key.p > self.k || key.q > self.k {
            return Err(Error::InvalidKey(format!("unit indices out of 1..={} in {key}", self.k)));
        }
        if self.unit_parity(key.p, key.q) != (key.i + key.j) % 2 {
            return Err(Error::InvalidKey(format!(
                "E[{},{}] is not in A_{} under {self}",
                key.p,
                key.q,
                (key.i + key.j) % 2
            )));
        }
        Ok(())
    }

    /// All matrix units `(p,q)` with the given parity.
    pub fn units_of_parity(&self, parity: u8) -> Vec<(u16, u16)> {
        let mut out = Vec::new();
        for p in 1..=self.k {
            for q in 1..=self.k {
                if self.unit_parity(p, q) == parity {
                    out.push((p, q));
                }
            }
        }
        out
    }

    /// Every valid symbol of weight at most `max`, in canonical order.
    pub fn keys_up_to(&self, max: WeightValue) -> Vec<BasisKey> {
        let mut out = Vec::new();
        for i in 0..=1u8 {
            for j in 0..=1u8 {
                let base = BasisKey { i, j, p: 1, q: 1, m: 0, n: 0 }.weight();
                if base > max {
                    continue;
                }
                let top = ((max.doubled - base.doubled) / 2) as u32;
                for (p, q) in self.units_of_parity((i + j) % 2) {
                    for m in 0..=top {
                        for n in 0..=top - m {
                            out.push(BasisKey { i, j, p, q, m, n });
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// `max{2 dim A_0, 2 dim A_1}`, the per-weight bound on free generators.
    pub fn growth_bound(&self) -> usize {
        let even = self.units_of_parity(0).len();
        let odd = self.units_of_parity(1).len();
        2 * even.max(odd)
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.grading {
            Grading::Trivial => write!(f, "k={}", self.k),
            Grading::Split { k1 } => write!(f, "k1={},k2={}", k1, self.k - k1),
        }
    }
}

/// The symbol `(E_{p,q})_{[i,j]}(m,n)`.
///
/// Field order gives the canonical total order `(i, j, p, q, m, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BasisKey {
    pub i: u8,
    pub j: u8,
    pub p: u16,
    pub q: u16,
    pub m: u32,
    pub n: u32,
}

impl BasisKey {
    /// Builds a key, rejecting negative exponents and ungraded units.
    pub fn new(amb: &Ambient, i: u8, j: u8, p: u16, q: u16, m: i64, n: i64) -> Result<Self> {
        if m < 0 || n < 0 {
            return Err(Error::InvalidKey(format!(
                "negative exponent in E[{p},{q}]{{{i},{j}}}({m},{n})"
            )));
        }
        let key = BasisKey { i, j, p, q, m: m as u32, n: n as u32 };
        amb.validate(&key)?;
        Ok(key)
    }

    pub fn weight(&self) -> WeightValue {
        let (i, j) = (self.i as i64, self.j as i64);
        let doubled = 2 * (self.m as i64 + self.n as i64) + 2 * (1 - i) + 2 * (1 - j) + i + j;
        WeightValue::from_doubled(doubled)
    }

    pub fn parity(&self) -> u8 {
        (self.i + self.j) % 2
    }

    pub fn with_exponents(&self, m: u32, n: u32) -> Self {
        BasisKey { m, n, ..*self }
    }
}

impl fmt::Display for BasisKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E[{},{}]{{{},{}}}({},{})", self.p, self.q, self.i, self.j, self.m, self.n)
    }
}

/// `E_{a,b} E_{c,d} = delta_{b,c} E_{a,d}`.
pub fn unit_product(left: (u16, u16), right: (u16, u16)) -> Option<(u16, u16)> {
    (left.1 == right.0).then_some((left.0, right.1))
}
