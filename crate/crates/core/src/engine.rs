//! The `Y+` action on `R(A)` for matrix algebras, and its mode extractions.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::carrier::Conformal;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::key::{unit_product, Ambient, BasisKey};
use crate::laurent::Laurent;
use crate::lincomb::LinComb;
use crate::scalar::{binomial, int, HalfInt, Scalar, WeightValue};

fn delta(a: u8, b: u8) -> i64 {
    i64::from(a == b)
}

/// Calls `emit(a, key, coeff)` for every term of `Y+(u,z)v`, where `a` is the
/// generic mode index (the term sits at `z^{-a-1}`).
pub fn for_each_term(u: &BasisKey, v: &BasisKey, mut emit: impl FnMut(u32, BasisKey, Scalar)) {
    let (i1, i2, m1, m2) = (u.i, u.j, u.m as i64, u.n as i64);
    let (j1, j2, n1, n2) = (v.i, v.j, v.m as i64, v.n as i64);

    // (uv)_{[i1,j2]}(p, n2)
    if i2 == j1 {
        if let Some((row, col)) = unit_product((u.p, u.q), (v.p, v.q)) {
            let d = delta(i2, 0);
            let c1 = int(n1 * d + 1) * binomial(-n1 - 1 - d, m2);
            if !c1.is_zero() {
                let top = m1 + m2 + n1 + d;
                for p in m1..=top {
                    let key = BasisKey { i: i1, j: j2, p: row, q: col, m: p as u32, n: n2 as u32 };
                    emit((top - p) as u32, key, &c1 * binomial(p, m1));
                }
            }
        }
    }

    // (vu)_{[j1,i2]}(n1, q)
    if i1 == j2 {
        if let Some((row, col)) = unit_product((v.p, v.q), (u.p, u.q)) {
            let d = delta(i1, 0);
            let odd_odd = ((i1 + i2) * (j1 + j2)) % 2 == 1;
            let sign = if odd_odd { 1 } else { -1 };
            let c2 = int(sign * (delta(i1, 1) - (n2 + 1) * d)) * binomial(-n2 - 1 - d, m1);
            if !c2.is_zero() {
                let top = m1 + m2 + n2 + d;
                for q in m2..=top {
                    let key = BasisKey { i: j1, j: i2, p: row, q: col, m: n1 as u32, n: q as u32 };
                    emit((top - q) as u32, key, &c2 * binomial(q, m2));
                }
            }
        }
    }
}

/// `Y+(u,z)v` on two basis symbols.
pub fn y_plus_basis(ambient: Ambient, u: &BasisKey, v: &BasisKey) -> Result<Laurent<Element>> {
    ambient.validate(u)?;
    ambient.validate(v)?;
    let mut acc: BTreeMap<u32, LinComb<BasisKey>> = BTreeMap::new();
    for_each_term(u, v, |a, key, c| acc.entry(a).or_default().add_term(key, c));
    Ok(collect(ambient, acc))
}

fn collect(ambient: Ambient, acc: BTreeMap<u32, LinComb<BasisKey>>) -> Laurent<Element> {
    let mut out = Laurent::new();
    for (a, terms) in acc {
        out.insert(a, Element::from_terms(ambient, terms));
    }
    out
}

/// Bilinear extension of [`y_plus_basis`].
pub fn y_plus(u: &Element, v: &Element) -> Result<Laurent<Element>> {
    u.check_ambient(v)?;
    Ok(y_plus_unchecked(u, v))
}

fn y_plus_unchecked(u: &Element, v: &Element) -> Laurent<Element> {
    let mut acc: BTreeMap<u32, LinComb<BasisKey>> = BTreeMap::new();
    for (ku, cu) in u.terms() {
        for (kv, cv) in v.terms() {
            let cuv = cu * cv;
            for_each_term(ku, kv, |a, key, c| acc.entry(a).or_default().add_term(key, c * &cuv));
        }
    }
    collect(*u.ambient(), acc)
}

/// Only the `z^{-a-1}` coefficient, without materializing the other modes.
fn mode_unchecked(u: &Element, a: u32, v: &Element) -> Element {
    let mut acc = LinComb::new();
    for (ku, cu) in u.terms() {
        for (kv, cv) in v.terms() {
            let cuv = cu * cv;
            for_each_term(ku, kv, |b, key, c| {
                if b == a {
                    acc.add_term(key, c * &cuv)
                }
            });
        }
    }
    Element::from_terms(*u.ambient(), acc)
}

/// `u_a v`. Requires `u` to be weight-homogeneous.
pub fn generic_mode(u: &Element, a: u32, v: &Element) -> Result<Element> {
    u.check_ambient(v)?;
    u.weight()?;
    Ok(mode_unchecked(u, a, v))
}

/// Converts a weighted mode `m` of an element of weight `wt` to the generic index `wt + m - 1`.
pub fn generic_index(wt: WeightValue, m: HalfInt) -> Result<u32> {
    let a = wt + m - HalfInt::int(1);
    match a.to_int() {
        Some(a) if a >= 0 => Ok(a as u32),
        _ => Err(Error::ModeOutOfRange { mode: m.to_string(), weight: wt.to_string() }),
    }
}

/// Inverse of [`generic_index`].
pub fn weighted_index(wt: WeightValue, a: u32) -> HalfInt {
    HalfInt::int(a as i64 + 1) - wt
}

/// `u(m) v` in weighted indexing: `u(m)` maps weight `alpha` to `alpha - m`.
pub fn weighted_mode(u: &Element, m: HalfInt, v: &Element) -> Result<Element> {
    u.check_ambient(v)?;
    let Some(wt) = u.weight()? else { return Ok(Element::zero(*u.ambient())) };
    let a = generic_index(wt, m)?;
    Ok(mode_unchecked(u, a, v))
}

/// The matrix conformal algebra `R(A)` as a carrier for the generic checkers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatrixConformal {
    pub ambient: Ambient,
}

impl MatrixConformal {
    pub fn new(ambient: Ambient) -> Self {
        MatrixConformal { ambient }
    }
}

impl Conformal for MatrixConformal {
    type Elem = Element;

    fn zero(&self) -> Element {
        Element::zero(self.ambient)
    }

    fn partial(&self, e: &Element) -> Element {
        e.partial()
    }

    fn y_plus(&self, u: &Element, v: &Element) -> Laurent<Element> {
        y_plus_unchecked(u, v)
    }

    fn parity(&self, e: &Element) -> Result<Option<u8>> {
        e.parity()
    }

    fn name(&self) -> String {
        format!("R(M_{})", self.ambient)
    }

    fn mode(&self, u: &Element, a: u32, v: &Element) -> Element {
        mode_unchecked(u, a, v)
    }
}
