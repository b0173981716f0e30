//! Free bosonic field oracle.
//!
//! Oscillators `h(r)` for `h` in a space with a nondegenerate pairing between
//! two isotropic halves, acting on the Fock space by creation (`r < 0`) and
//! contraction (`r > 0`). Quadratic fields are expanded into normal-ordered
//! oscillator pairs from their generating series, so nothing here is shared
//! with the matrix engine. The cross-check maps
//! `E_{p,q}(m,n) <-> plus_p(-m-1) minus_q(-n-1)`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::element::Element;
use crate::engine::y_plus;
use crate::error::Result;
use crate::exec::Exec;
use crate::key::{Ambient, BasisKey};
use crate::lincomb::LinComb;
use crate::scalar::{binomial, int, render_scalar, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Species {
    Plus,
    Minus,
}

/// A basis vector of the oscillator space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct OscVector {
    pub species: Species,
    pub index: u16,
}

impl OscVector {
    pub fn plus(index: u16) -> Self {
        OscVector { species: Species::Plus, index }
    }

    pub fn minus(index: u16) -> Self {
        OscVector { species: Species::Minus, index }
    }

    /// `<plus_i, minus_j> = delta_{ij}`, symmetric, both halves isotropic.
    pub fn pairing(self, other: OscVector) -> i64 {
        i64::from(self.species != other.species && self.index == other.index)
    }
}

/// The oscillator `h(-level)`: positive level creates, negative level annihilates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct OscillatorSymbol {
    pub vector: OscVector,
    pub level: i64,
}

/// Central coefficient of `[a(m), b(n)] = m <a,b> delta_{m+n,0}`.
pub fn heisenberg_bracket(a: OscVector, m: i64, b: OscVector, n: i64) -> Scalar {
    if m + n != 0 {
        return Scalar::zero();
    }
    int(m * a.pairing(b))
}

/// A Fock monomial: a sorted multiset of created oscillators `(vector, level > 0)`.
pub type Monomial = Vec<(OscVector, i64)>;

/// Finite combination of Fock monomials.
pub type FockState = LinComb<Monomial>;

/// Applies the single oscillator `h(r)`.
pub fn apply_oscillator(h: OscVector, r: i64, state: &FockState) -> FockState {
    let mut out = FockState::new();
    for (mono, c) in state {
        if r < 0 {
            let mut next = mono.clone();
            next.push((h, -r));
            next.sort();
            out.add_term(next, c.clone());
        } else if r > 0 {
            for (idx, &(v, level)) in mono.iter().enumerate() {
                let pair = h.pairing(v);
                if level == r && pair != 0 {
                    let mut next = mono.clone();
                    next.remove(idx);
                    out.add_term(next, c * int(r * pair));
                }
            }
        }
        // h(0) acts as zero on the Fock space
    }
    out
}

/// Largest level occurring in the state.
fn max_level(state: &FockState) -> i64 {
    state.keys().flat_map(|m| m.iter().map(|&(_, l)| l)).max().unwrap_or(0)
}

/// Oscillator index pairs `(r, s)` with `r + s = total` for which the
/// normal-ordered product can act nontrivially on a state of levels `<= max`:
/// at least one factor must annihilate a present level.
pub fn contributing_pairs(total: i64, max: i64) -> Vec<(i64, i64)> {
    let mut s_values: Vec<i64> = (1..=max).collect();
    s_values.extend((1..=max).map(|r| total - r));
    s_values.sort();
    s_values.dedup();
    s_values.into_iter().map(|s| (total - s, s)).collect()
}

/// The mode `(h1(-m-1) h2(-n-1))_k` of the quadratic field acting on `state`.
///
/// The field is `N[(d^m h1)(z)/m! (d^n h2)(z)/n!]`; expanding
/// `(d^m h)(z)/m! = sum_r C(-r-1, m) h(r) z^{-r-1-m}` and taking the
/// coefficient of `z^{-k-1}` leaves oscillator pairs with `r + s = k-m-n-1`,
/// annihilators moved to the right.
pub fn quadratic_mode_action(h1: OscVector, m: i64, h2: OscVector, n: i64, kmode: i64, state: &FockState) -> FockState {
    quadratic_mode_action_over(h1, m, h2, n, kmode, state, &contributing_pairs(kmode - m - n - 1, max_level(state)))
}

/// As [`quadratic_mode_action`] but summing over an explicit list of `(r, s)`.
pub fn quadratic_mode_action_over(
    h1: OscVector,
    m: i64,
    h2: OscVector,
    n: i64,
    kmode: i64,
    state: &FockState,
    pairs: &[(i64, i64)],
) -> FockState {
    let mut out = FockState::new();
    for &(r, s) in pairs {
        debug_assert_eq!(r + s, kmode - m - n - 1);
        let c = binomial(-r - 1, m) * binomial(-s - 1, n);
        if c.is_zero() {
            continue;
        }
        let image = if r < 0 {
            apply_oscillator(h1, r, &apply_oscillator(h2, s, state))
        } else {
            apply_oscillator(h2, s, &apply_oscillator(h1, r, state))
        };
        out.axpy(&c, &image);
    }
    out
}

/// `d(h1(-m) h2(-n)) = m h1(-m-1) h2(-n) + n h1(-m) h2(-n-1)`, `d(1) = 0`,
/// extended to monomials by the Leibniz rule.
pub fn oracle_partial(state: &FockState) -> FockState {
    let mut out = FockState::new();
    for (mono, c) in state {
        for idx in 0..mono.len() {
            let mut next = mono.clone();
            let level = next[idx].1;
            next[idx].1 += 1;
            next.sort();
            out.add_term(next, c * int(level));
        }
    }
    out
}

/// Scalar multiple of the vacuum plus quadratic monomials.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct QuadraticState {
    pub scalar: Scalar,
    pub quad: BTreeMap<(OscillatorSymbol, OscillatorSymbol), Scalar>,
    /// Monomials of any other length; never produced by the cross-check.
    pub other: usize,
}

impl QuadraticState {
    pub fn from_fock(state: &FockState) -> Self {
        let mut out = QuadraticState::default();
        for (mono, c) in state {
            match mono.as_slice() {
                [] => out.scalar += c,
                [(a, la), (b, lb)] => {
                    let x = OscillatorSymbol { vector: *a, level: *la };
                    let y = OscillatorSymbol { vector: *b, level: *lb };
                    let slot = out.quad.entry((x.min(y), x.max(y))).or_insert_with(Scalar::zero);
                    *slot += c;
                }
                _ => out.other += 1,
            }
        }
        out.quad.retain(|_, c| !c.is_zero());
        out
    }
}

/// `E_{p,q}(m,n) -> plus_p(-m-1) minus_q(-n-1) |0>`.
pub fn to_fock(e: &Element) -> FockState {
    let mut out = FockState::new();
    for (k, c) in e.terms() {
        let mut mono = vec![(OscVector::plus(k.p), k.m as i64 + 1), (OscVector::minus(k.q), k.n as i64 + 1)];
        mono.sort();
        out.add_term(mono, c.clone());
    }
    out
}

/// Inverse of [`to_fock`] on the quadratic part. Returns the element, the
/// discarded vacuum coefficient, and quadratic monomials with no matrix preimage.
pub fn from_fock(ambient: Ambient, state: &FockState) -> (Element, Scalar, Vec<String>) {
    let q = QuadraticState::from_fock(state);
    let mut terms = LinComb::new();
    let mut stray = Vec::new();
    for ((x, y), c) in &q.quad {
        match (x.vector.species, y.vector.species) {
            (Species::Plus, Species::Minus) => {
                let key = BasisKey { i: 0, j: 0, p: x.vector.index, q: y.vector.index, m: (x.level - 1) as u32, n: (y.level - 1) as u32 };
                terms.add_term(key, c.clone());
            }
            _ => stray.push(format!("{}*{x:?}{y:?}", render_scalar(c))),
        }
    }
    if q.other > 0 {
        stray.push(format!("{} monomials of degree other than 0 or 2", q.other));
    }
    (Element::from_terms(ambient, terms), q.scalar, stray)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Mismatch {
    pub u: String,
    pub v: String,
    pub mode: u32,
    pub oracle: String,
    pub engine: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrosscheckReport {
    pub k: u16,
    pub max_exp: u32,
    pub pairs: usize,
    pub modes_compared: usize,
    pub mismatches: usize,
    /// Number of (pair, mode) cases where the oracle produced a vacuum term.
    pub scalar_outputs: usize,
    pub first_mismatches: Vec<Mismatch>,
}

impl CrosscheckReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

fn even_keys(k: u16, max_exp: u32) -> Vec<BasisKey> {
    let mut keys = Vec::new();
    for p in 1..=k {
        for q in 1..=k {
            for m in 0..=max_exp {
                for n in 0..=max_exp {
                    keys.push(BasisKey { i: 0, j: 0, p, q, m, n });
                }
            }
        }
    }
    keys
}

/// Compares every mode of the oracle's quadratic-field action with the
/// engine's `[0,0]`-block action, for all index and exponent tuples.
pub fn crosscheck_even_sector(k: u16, max_exp: u32, exec: Exec) -> Result<CrosscheckReport> {
    let ambient = Ambient::trivial(k)?;
    let keys = even_keys(k, max_exp);
    let n = keys.len();
    let results = exec.map_range(n * n, |idx| -> Result<(usize, usize, Vec<Mismatch>)> {
        let (ku, kv) = (keys[idx / n], keys[idx % n]);
        let u = Element::from_terms(ambient, LinComb::single(ku));
        let v = Element::from_terms(ambient, LinComb::single(kv));
        let engine = y_plus(&u, &v)?;
        let state = to_fock(&v);
        // every mode beyond this is zero on both sides
        let top = (ku.m + ku.n + kv.m + kv.n + 4).max(engine.max_mode().unwrap_or(0) + 2);
        let zero = Element::zero(ambient);
        let mut bad = Vec::new();
        let mut scalars = 0;
        for a in 0..=top {
            let action = quadratic_mode_action(
                OscVector::plus(ku.p),
                ku.m as i64,
                OscVector::minus(ku.q),
                ku.n as i64,
                a as i64,
                &state,
            );
            let (oracle, scalar, stray) = from_fock(ambient, &action);
            if !scalar.is_zero() {
                scalars += 1;
            }
            let mine = engine.mode_or(a, &zero);
            if oracle != mine || !stray.is_empty() {
                let mut o = oracle.render();
                if !stray.is_empty() {
                    o.push_str(&format!(" + stray {stray:?}"));
                }
                bad.push(Mismatch { u: u.render(), v: v.render(), mode: a, oracle: o, engine: mine.render() });
            }
        }
        Ok((top as usize + 1, scalars, bad))
    });
    let mut report = CrosscheckReport {
        k,
        max_exp,
        pairs: n * n,
        modes_compared: 0,
        mismatches: 0,
        scalar_outputs: 0,
        first_mismatches: Vec::new(),
    };
    for r in results {
        let (modes, scalars, bad) = r?;
        report.modes_compared += modes;
        report.scalar_outputs += scalars;
        report.mismatches += bad.len();
        report.first_mismatches.extend(bad);
    }
    report.first_mismatches.truncate(crate::axioms::MAX_REPORTED);
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PartialCheckReport {
    pub max_exp: u32,
    pub checked: usize,
    pub mismatches: Vec<String>,
}

impl PartialCheckReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// The oracle's `d` against the engine's, through the correspondence.
pub fn oracle_partial_check(max_exp: u32) -> Result<PartialCheckReport> {
    let ambient = Ambient::trivial(1)?;
    let mut mismatches = Vec::new();
    let keys = even_keys(1, max_exp);
    for key in &keys {
        let e = Element::from_terms(ambient, LinComb::single(*key));
        let (back, scalar, stray) = from_fock(ambient, &oracle_partial(&to_fock(&e)));
        if back != e.partial() || !scalar.is_zero() || !stray.is_empty() {
            mismatches.push(format!("{}: oracle {} engine {}", e.render(), back.render(), e.partial().render()));
        }
    }
    let vacuum: FockState = LinComb::single(Vec::new());
    if !oracle_partial(&vacuum).is_zero() {
        mismatches.push("d(1) is not zero".into());
    }
    Ok(PartialCheckReport { max_exp, checked: keys.len() + 1, mismatches })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(items: &[(OscVector, i64)]) -> FockState {
        let mut m = items.to_vec();
        m.sort();
        LinComb::single(m)
    }

    #[test]
    fn brackets() {
        assert_eq!(heisenberg_bracket(OscVector::plus(1), 2, OscVector::minus(1), -2), int(2));
        assert_eq!(heisenberg_bracket(OscVector::plus(1), 2, OscVector::plus(2), -2), int(0));
        assert_eq!(heisenberg_bracket(OscVector::plus(1), 2, OscVector::minus(1), -1), int(0));
    }

    #[test]
    fn full_contraction() {
        // h1(m) h2(n) on h3(-j) h4(-k)
        let (h1, h2) = (OscVector::plus(1), OscVector::plus(2));
        let (h3, h4) = (OscVector::minus(1), OscVector::minus(2));
        let state = mono(&[(h3, 2), (h4, 3)]);
        let out = apply_oscillator(h1, 2, &apply_oscillator(h2, 3, &state));
        assert_eq!(out, LinComb::term(Vec::new(), int(6)));
    }

    #[test]
    fn single_contraction() {
        // plus_1(-1) minus_2(1) on plus_2(-1) minus_3(-1)
        let state = mono(&[(OscVector::plus(2), 1), (OscVector::minus(3), 1)]);
        let out = apply_oscillator(OscVector::plus(1), -1, &apply_oscillator(OscVector::minus(2), 1, &state));
        assert_eq!(out, mono(&[(OscVector::plus(1), 1), (OscVector::minus(3), 1)]));
        let none = apply_oscillator(OscVector::minus(1), 1, &state);
        assert!(none.is_zero());
    }

    #[test]
    fn partial_examples() {
        let s = mono(&[(OscVector::plus(1), 1), (OscVector::minus(1), 1)]);
        let d = oracle_partial(&s);
        let mut want = mono(&[(OscVector::plus(1), 2), (OscVector::minus(1), 1)]);
        want.axpy(&int(1), &mono(&[(OscVector::plus(1), 1), (OscVector::minus(1), 2)]));
        assert_eq!(d, want);
        assert!(oracle_partial(&LinComb::single(Vec::new())).is_zero());
    }

    #[test]
    fn truncation_bound_is_sound() {
        let state = mono(&[(OscVector::plus(1), 2), (OscVector::minus(1), 3)]);
        for kmode in 0..8 {
            for (m, n) in [(0, 0), (1, 2), (2, 1)] {
                let wide: Vec<(i64, i64)> =
                    (-30..30).map(|s| (kmode - m - n - 1 - s, s)).collect();
                let a = quadratic_mode_action(OscVector::plus(1), m, OscVector::minus(1), n, kmode, &state);
                let b = quadratic_mode_action_over(OscVector::plus(1), m, OscVector::minus(1), n, kmode, &state, &wide);
                assert_eq!(a, b, "k={kmode} m={m} n={n}");
            }
        }
    }

    #[test]
    fn small_crosscheck() {
        let r = crosscheck_even_sector(1, 1, Exec::Sequential).unwrap();
        assert!(r.passed(), "{:?}", r.first_mismatches);
        assert!(r.scalar_outputs > 0);
        assert!(oracle_partial_check(3).unwrap().passed());
    }
}
