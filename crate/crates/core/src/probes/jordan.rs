//! The homogeneous product `u(0) v` on a single weight space, compared with
//! the matrix anticommutator or commutator.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::element::Element;
use crate::engine::{generic_index, weighted_mode};
use crate::error::{Error, Result};
use crate::families::{Family, FamilyKind, FamilySpec};
use crate::key::{unit_product, BasisKey};
use crate::lincomb::LinComb;
use crate::probes::{ProbeReport, ProbeStatus};
use crate::scalar::{int, HalfInt, Scalar, WeightValue};

/// `u(0) v` in weighted indexing, i.e. the generic mode `wt(u) - 1`; it maps
/// each weight space into itself. Both inputs must have the same weight.
pub fn jordan_product(u: &Element, v: &Element) -> Result<Element> {
    let wu = u.weight()?;
    let wv = v.weight()?;
    match (wu, wv) {
        (Some(a), Some(b)) if a != b => Err(Error::WeightMismatch(a.to_string(), b.to_string())),
        (None, _) | (_, None) => Ok(Element::zero(*u.ambient())),
        (Some(w), _) => {
            generic_index(w, HalfInt::int(0))?;
            weighted_mode(u, HalfInt::int(0), v)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum JordanKind {
    /// Full matrices under the anticommutator.
    A,
    /// `gl_k` under the commutator.
    Lie,
    /// Transpose-symmetric matrices.
    B,
    /// Symplectic-symmetric matrices.
    C,
}

impl std::str::FromStr for JordanKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(JordanKind::A),
            "lie" | "gl" => Ok(JordanKind::Lie),
            "b" => Ok(JordanKind::B),
            "c" => Ok(JordanKind::C),
            _ => Err(Error::Config(format!("unknown Jordan kind `{s}` (expected A, lie, B or C)"))),
        }
    }
}

/// The family, weight space and expected scalar for each kind.
pub fn jordan_setting(kind: JordanKind, k: u16, ell: u32) -> Result<(FamilySpec, WeightValue, Scalar)> {
    let ell64 = ell as i64;
    Ok(match kind {
        JordanKind::A => (FamilySpec::matrix(k, 2 * ell + 2)?, WeightValue::int(2 * ell64 + 2), int(2 * ell64 + 1)),
        JordanKind::Lie => (FamilySpec::matrix(k, 2 * ell + 3)?, WeightValue::int(2 * ell64 + 3), int(2 * ell64 + 2)),
        JordanKind::B => (FamilySpec::trivial(FamilyKind::StarTranspose2, k)?, WeightValue::int(2), int(1)),
        JordanKind::C => (FamilySpec::trivial(FamilyKind::DaggerSymplectic2, k)?, WeightValue::int(2), int(1)),
    })
}

/// Product of two elements whose keys all share exponents `(m, n)`, computed
/// as matrices and re-attached at the same exponents.
fn matrix_product(u: &Element, v: &Element) -> Element {
    let mut out = LinComb::new();
    for (ku, cu) in u.terms() {
        for (kv, cv) in v.terms() {
            if let Some((p, q)) = unit_product((ku.p, ku.q), (kv.p, kv.q)) {
                out.add_term(BasisKey { p, q, ..*ku }, cu * cv);
            }
        }
    }
    Element::from_terms(*u.ambient(), out)
}

/// The expected product: `c (uv + vu)` for the Jordan kinds, `c (vu - uv)` for the Lie kind.
pub fn expected_product(kind: JordanKind, scalar: &Scalar, u: &Element, v: &Element) -> Element {
    let uv = matrix_product(u, v);
    let vu = matrix_product(v, u);
    let mut out = vu.scale(scalar);
    let sign = if kind == JordanKind::Lie { int(-1) } else { int(1) };
    out.axpy(&(sign * scalar), &uv);
    out
}

/// Computes the full multiplication table on the designated weight space and
/// compares it entry by entry with the expected matrix product. Also checks
/// (anti)commutativity of the table.
pub fn jordan_structure_check(kind: JordanKind, k: u16, ell: u32) -> Result<ProbeReport> {
    let (spec, w, scalar) = jordan_setting(kind, k, ell)?;
    let f = Family::build(spec)?;
    let basis = f.basis_at(w);
    let mut witnesses = Vec::new();
    let mut entries = 0;
    for u in &basis {
        for v in &basis {
            entries += 1;
            let got = jordan_product(u, v)?;
            let want = expected_product(kind, &scalar, u, v);
            if got != want {
                witnesses.push(format!("{} . {} = {} but expected {}", u.render(), v.render(), got.render(), want.render()));
            }
            let swapped = jordan_product(v, u)?;
            let mirror = if kind == JordanKind::Lie { swapped.scale(&int(-1)) } else { swapped };
            if got != mirror {
                witnesses.push(format!("{} and {} do not (anti)commute", u.render(), v.render()));
            }
            if !f.contains(&got)? {
                witnesses.push(format!("{} . {} left the weight space", u.render(), v.render()));
            }
        }
    }
    let mut params = BTreeMap::new();
    params.insert("kind".into(), format!("{kind:?}"));
    params.insert("k".into(), k.to_string());
    params.insert("ell".into(), ell.to_string());
    params.insert("scalar".into(), crate::scalar::render_scalar(&scalar));
    params.insert("entries".into(), entries.to_string());
    let mut dims = BTreeMap::new();
    dims.insert(w, [basis.len(), basis.len()]);
    let status = if witnesses.is_empty() { ProbeStatus::ReachedFullSpan } else { ProbeStatus::Violated };
    witnesses.truncate(crate::axioms::MAX_REPORTED);
    Ok(ProbeReport {
        probe: "jordan".into(),
        family: f.spec().to_string(),
        params,
        window: [w.to_string(), w.to_string()],
        status,
        dims,
        witnesses,
        iterations: entries,
        note: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::key::Ambient;

    #[test]
    fn identity_square() {
        let a = Ambient::trivial(2).unwrap();
        let e = Element::parse(a, "E[1,1]{0,0}(0,0)").unwrap();
        assert_eq!(jordan_product(&e, &e).unwrap().render(), "2*E[1,1]{0,0}(0,0)");
    }

    #[test]
    fn weight_mismatch() {
        let a = Ambient::trivial(2).unwrap();
        let e = Element::parse(a, "E[1,1]{0,0}(0,0)").unwrap();
        let f = Element::parse(a, "E[1,1]{0,0}(0,1)").unwrap();
        assert!(matches!(jordan_product(&e, &f), Err(Error::WeightMismatch(..))));
    }

    #[test]
    fn all_kinds_at_k2() {
        for (kind, ell) in [(JordanKind::A, 0), (JordanKind::A, 1), (JordanKind::Lie, 0), (JordanKind::B, 0), (JordanKind::C, 0)] {
            let r = jordan_structure_check(kind, 2, ell).unwrap();
            assert!(r.passed(), "{kind:?} {ell}: {:?}", r.witnesses);
        }
    }
}
