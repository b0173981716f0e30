//! Elements of `R(A)`: sparse rational combinations of basis symbols over a fixed ambient.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::key::{Ambient, BasisKey};
use crate::lincomb::LinComb;
use crate::scalar::{int, parse_scalar, Scalar, WeightValue};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    ambient: Ambient,
    terms: LinComb<BasisKey>,
}

impl Element {
    pub fn zero(ambient: Ambient) -> Self {
        Element { ambient, terms: LinComb::new() }
    }

    /// A single validated basis symbol.
    pub fn basis(ambient: Ambient, key: BasisKey) -> Result<Self> {
        ambient.validate(&key)?;
        Ok(Element { ambient, terms: LinComb::single(key) })
    }

    /// Builds an element from keys already known to be valid for `ambient`.
    pub fn from_terms(ambient: Ambient, terms: LinComb<BasisKey>) -> Self {
        debug_assert!(terms.keys().all(|k| ambient.validate(k).is_ok()));
        Element { ambient, terms }
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn terms(&self) -> &LinComb<BasisKey> {
        &self.terms
    }

    pub fn into_terms(self) -> LinComb<BasisKey> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, key: &BasisKey) -> Scalar {
        self.terms.coeff(key)
    }

    pub fn check_ambient(&self, other: &Element) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient.to_string(), other.ambient.to_string()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        out.terms.axpy(&Scalar::one(), &other.terms);
        Ok(out)
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        out.terms.axpy(&int(-1), &other.terms);
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element { ambient: self.ambient, terms: self.terms.scaled(c) }
    }

    /// `self += c * other`. Panics if the ambients differ.
    pub fn axpy(&mut self, c: &Scalar, other: &Element) {
        assert_eq!(self.ambient, other.ambient, "axpy across ambients");
        self.terms.axpy(c, &other.terms);
    }

    pub fn add_term(&mut self, key: BasisKey, c: Scalar) {
        debug_assert!(self.ambient.validate(&key).is_ok());
        self.terms.add_term(key, c);
    }

    /// `d u(m,n) = (m+1) u(m+1,n) + (n+1) u(m,n+1)`, extended linearly.
    pub fn partial(&self) -> Element {
        let mut out = Element::zero(self.ambient);
        for (k, c) in &self.terms {
            out.terms.add_term(k.with_exponents(k.m + 1, k.n), c * int(k.m as i64 + 1));
            out.terms.add_term(k.with_exponents(k.m, k.n + 1), c * int(k.n as i64 + 1));
        }
        out
    }

    pub fn partial_pow(&self, d: u32) -> Element {
        (0..d).fold(self.clone(), |e, _| e.partial())
    }

    /// The common weight of all keys; `None` for zero.
    pub fn weight(&self) -> Result<Option<WeightValue>> {
        let mut weights = self.terms.keys().map(BasisKey::weight);
        let Some(first) = weights.next() else { return Ok(None) };
        if weights.any(|w| w != first) {
            return Err(Error::NotHomogeneous);
        }
        Ok(Some(first))
    }

    /// The common parity of all keys; `None` for zero.
    pub fn parity(&self) -> Result<Option<u8>> {
        let mut parities = self.terms.keys().map(BasisKey::parity);
        let Some(first) = parities.next() else { return Ok(None) };
        if parities.any(|p| p != first) {
            return Err(Error::NotParityHomogeneous);
        }
        Ok(Some(first))
    }

    /// Splits into weight-homogeneous components, lowest weight first.
    pub fn by_weight(&self) -> Vec<(WeightValue, Element)> {
        let mut parts: std::collections::BTreeMap<WeightValue, Element> = Default::default();
        for (k, c) in &self.terms {
            parts
                .entry(k.weight())
                .or_insert_with(|| Element::zero(self.ambient))
                .terms
                .add_term(*k, c.clone());
        }
        parts.into_iter().collect()
    }

    pub fn render(&self) -> String {
        self.terms.render_with(|k| k.to_string())
    }

    /// Parses the text grammar `[coef*]E[p,q]{i,j}(m,n)` joined by `+`/`-`, or `0`.
    pub fn parse(ambient: Ambient, text: &str) -> Result<Element> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        if compact == "0" {
            return Ok(Element::zero(ambient));
        }
        let mut out = Element::zero(ambient);
        let bytes = compact.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            let mut sign = Scalar::one();
            match bytes[pos] {
                b'+' if pos > 0 => pos += 1,
                b'-' => {
                    sign = -sign;
                    pos += 1;
                }
                _ if pos == 0 => {}
                _ => return Err(Error::Parse(format!("expected sign at offset {pos} in `{text}`"))),
            }
            let end = bytes[pos..]
                .iter()
                .position(|&b| b == b')')
                .map(|off| pos + off + 1)
                .ok_or_else(|| Error::Parse(format!("unterminated term in `{text}`")))?;
            let (coeff, key) = parse_term(&ambient, &compact[pos..end])?;
            out.terms.add_term(key, sign * coeff);
            pos = end;
        }
        Ok(out)
    }
}

fn parse_term(ambient: &Ambient, term: &str) -> Result<(Scalar, BasisKey)> {
    let bad = || Error::Parse(format!("malformed term `{term}`"));
    let (coeff, symbol) = match term.split_once('*') {
        Some((c, s)) => (parse_scalar(c)?, s),
        None => (Scalar::one(), term),
    };
    let rest = symbol.strip_prefix("E[").ok_or_else(bad)?;
    let (pq, rest) = rest.split_once("]{").ok_or_else(bad)?;
    let (ij, rest) = rest.split_once("}(").ok_or_else(bad)?;
    let mn = rest.strip_suffix(')').ok_or_else(bad)?;
    let pair = |s: &str| -> Result<(i64, i64)> {
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
    };
    let (p, q) = pair(pq)?;
    let (i, j) = pair(ij)?;
    let (m, n) = pair(mn)?;
    let small = |x: i64, max: i64| -> Result<i64> {
        if (0..=max).contains(&x) {
            Ok(x)
        } else {
            Err(Error::InvalidKey(format!("index {x} out of range in `{term}`")))
        }
    };
    let key = BasisKey::new(
        ambient,
        small(i, 1)? as u8,
        small(j, 1)? as u8,
        small(p, u16::MAX as i64)? as u16,
        small(q, u16::MAX as i64)? as u16,
        m,
        n,
    )?;
    if coeff.is_zero() {
        return Ok((Scalar::zero(), key));
    }
    Ok((coeff, key))
}

// Operator forms panic when the ambients differ, like `axpy`.
impl std::ops::Add for Element {
    type Output = Element;
    fn add(mut self, rhs: Element) -> Element {
        self.axpy(&Scalar::one(), &rhs);
        self
    }
}

impl std::ops::Sub for Element {
    type Output = Element;
    fn sub(mut self, rhs: Element) -> Element {
        self.axpy(&int(-1), &rhs);
        self
    }
}

impl std::ops::Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&int(-1))
    }
}

impl std::ops::Mul<Element> for Scalar {
    type Output = Element;
    fn mul(self, rhs: Element) -> Element {
        rhs.scale(&self)
    }
}

impl std::ops::Mul<Element> for i64 {
    type Output = Element;
    fn mul(self, rhs: Element) -> Element {
        rhs.scale(&int(self))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Parses against the ambient inferred from the largest unit index (trivial grading).
impl FromStr for Element {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let k = s
            .split("E[")
            .skip(1)
            .filter_map(|t| t.split(']').next())
            .flat_map(|pq| pq.split(',').filter_map(|x| x.trim().parse::<u16>().ok()))
            .max()
            .unwrap_or(1);
        Element::parse(Ambient::trivial(k.max(1))?, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;

    fn amb() -> Ambient {
        Ambient::split(1, 1).unwrap()
    }

    #[test]
    fn render_parse_round_trip() {
        let text = "3/2*E[1,2]{0,1}(2,3) - E[2,2]{1,1}(0,0)";
        let e = Element::parse(amb(), text).unwrap();
        assert_eq!(e.render(), text);
        assert_eq!(Element::parse(amb(), &e.render()).unwrap(), e);
        assert_eq!(Element::parse(amb(), "0").unwrap().render(), "0");
        let neg = Element::parse(amb(), "-2*E[1,1]{0,0}(0,0)+E[1,1]{0,0}(0,0)").unwrap();
        assert_eq!(neg.render(), "-E[1,1]{0,0}(0,0)");
    }

    #[test]
    fn parse_rejects_bad_input() {
        for bad in ["", "E[1,1]{0,0}(0,0", "E[3,1]{0,0}(0,0)", "E[1,1]{0,0}(-1,0)", "2E[1,1]{0,0}(0,0)", "E[1,2]{0,0}(0,0)"] {
            assert!(Element::parse(amb(), bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn arithmetic() {
        let a = Ambient::trivial(2).unwrap();
        let e = Element::parse(a, "2*E[1,2]{0,0}(1,0)").unwrap();
        assert_eq!(e.add(&Element::zero(a)).unwrap(), e);
        assert!(e.add(&e.scale(&int(-1))).unwrap().is_zero());
        assert_eq!(e.scale(&frac(1, 2)).render(), "E[1,2]{0,0}(1,0)");
        assert!(e.add(&Element::zero(Ambient::trivial(3).unwrap())).is_err());
    }

    #[test]
    fn partial_examples() {
        let a = Ambient::trivial(1).unwrap();
        let d = Element::parse(a, "E[1,1]{0,0}(0,0)").unwrap().partial();
        assert_eq!(d.render(), "E[1,1]{0,0}(0,1) + E[1,1]{0,0}(1,0)");
        let d = Element::parse(a, "E[1,1]{1,1}(1,2)").unwrap().partial();
        assert_eq!(d.render(), "3*E[1,1]{1,1}(1,3) + 2*E[1,1]{1,1}(2,2)");
        assert!(Element::zero(a).partial().is_zero());
    }

    #[test]
    fn homogeneity() {
        let e = Element::parse(amb(), "E[1,1]{0,0}(0,0) + E[2,2]{1,1}(2,0)").unwrap();
        assert!(e.weight().is_err());
        assert_eq!(e.parity().unwrap(), Some(0));
        assert_eq!(e.by_weight().len(), 2);
    }
}
