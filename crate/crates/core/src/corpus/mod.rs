//! Closed-form mode identities from the simplicity and generator arguments,
//! kept as data: each case evaluates its left side with `weighted_mode` over a
//! finite index range and compares exactly with the stated right side.

mod matrix_cases;
mod super_cases;

use std::cell::RefCell;

use serde::Serialize;

use crate::element::Element;
use crate::engine::weighted_mode;
use crate::error::Result;
use crate::exec::Exec;
use crate::families::{Family, FamilyKind, FamilySpec};
use crate::key::{Ambient, BasisKey};
use crate::probes::Subspace;
use crate::scalar::{render_scalar, HalfInt, Scalar};

/// The weighted mode `1/2`.
pub(crate) const HALF: HalfInt = HalfInt::from_doubled(1);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "grading", rename_all = "snake_case")]
pub enum Setting {
    Trivial { k: u16 },
    Split { k1: u16, k2: u16 },
}

impl Setting {
    pub fn ambient(self) -> Result<Ambient> {
        match self {
            Setting::Trivial { k } => Ambient::trivial(k),
            Setting::Split { k1, k2 } => Ambient::split(k1, k2),
        }
    }
}

/// One tagged identity. `anchor` is a verbatim fragment of the printed left
/// side; `reading` says how the evaluated form differs from the printed one.
pub struct Case {
    pub tag: &'static str,
    pub anchor: &'static str,
    pub setting: Setting,
    pub reading: Option<&'static str>,
    pub run: fn(&Ctx),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub tag: String,
    pub anchor: String,
    pub setting: Setting,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reading: Option<String>,
    pub instances: usize,
    pub mismatches: usize,
    pub first_mismatches: Vec<String>,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.instances > 0 && self.mismatches == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub cases: Vec<CaseReport>,
    pub instances: usize,
    pub failed: Vec<String>,
}

impl CorpusReport {
    pub fn passed(&self) -> bool {
        !self.cases.is_empty() && self.failed.is_empty()
    }
}

const KEPT_MISMATCHES: usize = 5;

/// Evaluation context of one case: builders for basis symbols and modes, and
/// the running tally. Builder failures (invalid keys, modes below the lowest
/// one) are recorded as mismatches rather than aborting the case.
pub struct Ctx {
    amb: Ambient,
    k1: u16,
    tally: RefCell<Tally>,
}

#[derive(Default)]
struct Tally {
    instances: usize,
    mismatches: usize,
    kept: Vec<String>,
}

impl Tally {
    fn fail(&mut self, msg: String) {
        self.mismatches += 1;
        if self.kept.len() < KEPT_MISMATCHES {
            self.kept.push(msg);
        }
    }
}

impl Ctx {
    fn new(setting: Setting) -> Result<Self> {
        let amb = setting.ambient()?;
        let k1 = match setting {
            Setting::Trivial { k } => k,
            Setting::Split { k1, .. } => k1,
        };
        Ok(Ctx { amb, k1, tally: RefCell::new(Tally::default()) })
    }

    pub fn k(&self) -> u16 {
        self.amb.k
    }

    /// Size of the first diagonal block; all of `k` when ungraded.
    pub fn k1(&self) -> u16 {
        self.k1
    }

    pub fn k2(&self) -> u16 {
        self.amb.k - self.k1
    }

    /// Matrix indices `1..=min(k, 2)`.
    pub fn idx(&self) -> std::ops::RangeInclusive<u16> {
        1..=self.k1.min(2)
    }

    /// Indices `1..=min(k2, 2)` of the second block, to be offset by `k1`.
    pub fn idx2(&self) -> std::ops::RangeInclusive<u16> {
        1..=self.k2().min(2)
    }

    /// `(E_{p,q})_{[i,j]}(m,n)`; a negative exponent gives zero.
    pub fn unit(&self, i: u8, j: u8, p: u16, q: u16, m: i64, n: i64) -> Element {
        if m < 0 || n < 0 {
            return self.zero();
        }
        match BasisKey::new(&self.amb, i, j, p, q, m, n).and_then(|key| Element::basis(self.amb, key)) {
            Ok(e) => e,
            Err(err) => {
                self.tally.borrow_mut().fail(format!("builder: {err}"));
                self.zero()
            }
        }
    }

    pub fn b00(&self, p: u16, q: u16, m: i64, n: i64) -> Element {
        self.unit(0, 0, p, q, m, n)
    }

    pub fn b11(&self, p: u16, q: u16, m: i64, n: i64) -> Element {
        self.unit(1, 1, p, q, m, n)
    }

    pub fn b01(&self, p: u16, q: u16, m: i64, n: i64) -> Element {
        self.unit(0, 1, p, q, m, n)
    }

    pub fn b10(&self, p: u16, q: u16, m: i64, n: i64) -> Element {
        self.unit(1, 0, p, q, m, n)
    }

    /// The identity matrix in block `[i,i]`.
    pub fn identity(&self, i: u8, m: i64, n: i64) -> Element {
        (1..=self.amb.k).fold(self.zero(), |acc, r| acc + self.unit(i, i, r, r, m, n))
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.amb)
    }

    /// `u(m) v` in weighted indexing.
    pub fn md(&self, u: &Element, m: impl Into<HalfInt>, v: &Element) -> Element {
        match weighted_mode(u, m.into(), v) {
            Ok(e) => e,
            Err(err) => {
                self.tally.borrow_mut().fail(format!("mode: {err}"));
                self.zero()
            }
        }
    }

    /// `(u(m))^times v`.
    pub fn md_pow(&self, u: &Element, m: impl Into<HalfInt>, times: u32, v: &Element) -> Element {
        let m = m.into();
        (0..times).fold(v.clone(), |acc, _| self.md(u, m, &acc))
    }

    pub fn check(&self, label: impl FnOnce() -> String, lhs: Element, rhs: Element) {
        let mut t = self.tally.borrow_mut();
        t.instances += 1;
        if lhs != rhs {
            t.fail(format!("{}: got {} expected {}", label(), lhs.render(), rhs.render()));
        }
    }

    /// Membership by witness: some element of `witnesses`, each obtained from
    /// the generators by the operations that preserve the subspace in
    /// question, is a nonzero multiple of `target`.
    pub fn check_multiple(&self, label: impl FnOnce() -> String, witnesses: &[Element], target: &Element) {
        let hit = witnesses.iter().any(|w| nonzero_multiple(w, target));
        let mut t = self.tally.borrow_mut();
        t.instances += 1;
        if !hit {
            t.fail(format!("{}: no witness is a nonzero multiple of {}", label(), target.render()));
        }
    }

    pub fn check_in(&self, label: impl FnOnce() -> String, space: &Subspace, e: &Element) {
        let mut t = self.tally.borrow_mut();
        t.instances += 1;
        if !space.contains(e) {
            t.fail(format!("{}: {} is not in the span", label(), e.render()));
        }
    }

    /// At least one of `candidates` lies in `space`.
    pub fn check_any_in(&self, label: impl FnOnce() -> String, space: &Subspace, candidates: &[Element]) {
        let mut t = self.tally.borrow_mut();
        t.instances += 1;
        if !candidates.iter().any(|e| space.contains(e)) {
            t.fail(format!("{}: none of {} candidates is in the span", label(), candidates.len()));
        }
    }

    /// The family of the given kind on this context's algebra.
    pub fn family(&self, kind: FamilyKind) -> Option<Family> {
        match FamilySpec::new(kind, self.amb).and_then(Family::build) {
            Ok(f) => Some(f),
            Err(err) => {
                self.tally.borrow_mut().fail(format!("family: {err}"));
                None
            }
        }
    }

    /// Records a failed computation that the case cannot continue past.
    pub fn fail(&self, msg: String) {
        let mut t = self.tally.borrow_mut();
        t.instances += 1;
        t.fail(msg);
    }

    pub fn check_scalar(&self, label: impl FnOnce() -> String, lhs: Scalar, rhs: Scalar) {
        let mut t = self.tally.borrow_mut();
        t.instances += 1;
        if lhs != rhs {
            t.fail(format!("{}: got {} expected {}", label(), render_scalar(&lhs), render_scalar(&rhs)));
        }
    }
}

fn nonzero_multiple(w: &Element, target: &Element) -> bool {
    let Some((key, c)) = target.terms().leading() else {
        return false;
    };
    let ratio = w.coeff(key) / c;
    !w.is_zero() && *w == target.scale(&ratio)
}

/// `1` if `a == b`, else `0`.
pub(crate) fn kron<T: PartialEq>(a: T, b: T) -> i64 {
    i64::from(a == b)
}

pub(crate) fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `(1/m!) (d/dx)^order x^a` at `x = 1`.
pub(crate) fn taylor(a: i64, order: i64, m: i64) -> Scalar {
    let falling = (0..order).fold(crate::scalar::int(1), |acc, t| acc * crate::scalar::int(a - t));
    falling / Scalar::from_integer(crate::scalar::factorial(m as u64))
}

pub fn all_cases() -> Vec<Case> {
    let mut cases = matrix_cases::cases();
    cases.extend(super_cases::cases());
    cases
}

pub fn run_case(case: &Case) -> Result<CaseReport> {
    let ctx = Ctx::new(case.setting)?;
    (case.run)(&ctx);
    let t = ctx.tally.into_inner();
    Ok(CaseReport {
        tag: case.tag.into(),
        anchor: case.anchor.into(),
        setting: case.setting,
        reading: case.reading.map(Into::into),
        instances: t.instances,
        mismatches: t.mismatches,
        first_mismatches: t.kept,
    })
}

/// Runs every case whose tag is in `tags` (all cases when `tags` is empty).
pub fn run_corpus(tags: &[String], exec: Exec) -> Result<CorpusReport> {
    let cases: Vec<Case> = all_cases().into_iter().filter(|c| tags.is_empty() || tags.iter().any(|t| t == c.tag)).collect();
    let reports = exec.map(&cases, run_case).into_iter().collect::<Result<Vec<_>>>()?;
    let instances = reports.iter().map(|r| r.instances).sum();
    let failed = reports.iter().filter(|r| !r.passed()).map(|r| r.tag.clone()).collect();
    Ok(CorpusReport { cases: reports, instances, failed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_are_unique_and_anchored() {
        let cases = all_cases();
        let mut tags: Vec<_> = cases.iter().map(|c| (c.tag, c.anchor)).collect();
        tags.sort();
        tags.dedup();
        assert_eq!(tags.len(), cases.len());
        assert!(cases.iter().all(|c| c.tag.starts_with('(') && !c.anchor.is_empty()));
    }

    #[test]
    fn taylor_matches_binomials() {
        // (1/m!) d^m x^a = C(a, m) at x = 1
        for a in -4..5 {
            for m in 0..4 {
                assert_eq!(taylor(a, m, m), crate::scalar::binomial(a, m));
            }
        }
    }
}
