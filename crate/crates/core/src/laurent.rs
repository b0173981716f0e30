//! Polynomials in `z^{-1}` without constant term, stored by generic mode index.
//!
//! The entry at index `a` is the coefficient of `z^{-a-1}`.

use std::collections::BTreeMap;

use crate::scalar::{int, Scalar};

/// Minimal vector-space interface needed by the generic conformal machinery.
pub trait Vector: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn is_zero(&self) -> bool;
    /// `self += c * other`.
    fn axpy(&mut self, c: &Scalar, other: &Self);
    fn render(&self) -> String;
}

#[derive(Clone, Debug, PartialEq)]
pub struct Laurent<E> {
    modes: BTreeMap<u32, E>,
}

impl<E> Default for Laurent<E> {
    fn default() -> Self {
        Laurent { modes: BTreeMap::new() }
    }
}

impl<E: Vector> Laurent<E> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.modes.is_empty()
    }

    /// Coefficient of `z^{-a-1}`.
    pub fn mode(&self, a: u32) -> Option<&E> {
        self.modes.get(&a)
    }

    pub fn mode_or(&self, a: u32, zero: &E) -> E {
        self.modes.get(&a).cloned().unwrap_or_else(|| zero.clone())
    }

    /// Largest `a` with a nonzero coefficient, i.e. pole order minus one.
    pub fn max_mode(&self) -> Option<u32> {
        self.modes.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &E)> {
        self.modes.iter().map(|(a, e)| (*a, e))
    }

    /// `(exponent, coefficient)` pairs with exponents `-a-1`.
    pub fn exponents(&self) -> impl Iterator<Item = (i64, &E)> {
        self.modes.iter().map(|(a, e)| (-(*a as i64) - 1, e))
    }

    /// Adds `c * e` to the coefficient of `z^{-a-1}`.
    pub fn add_at(&mut self, a: u32, c: &Scalar, e: &E, zero: &E) {
        let slot = self.modes.entry(a).or_insert_with(|| zero.clone());
        slot.axpy(c, e);
        if slot.is_zero() {
            self.modes.remove(&a);
        }
    }

    pub fn insert(&mut self, a: u32, e: E) {
        if e.is_zero() {
            self.modes.remove(&a);
        } else {
            self.modes.insert(a, e);
        }
    }

    pub fn axpy(&mut self, c: &Scalar, other: &Laurent<E>, zero: &E) {
        for (a, e) in &other.modes {
            self.add_at(*a, c, e, zero);
        }
    }

    /// Formal `d/dz`: `z^{-a-1}` goes to `-(a+1) z^{-a-2}`.
    pub fn derivative(&self, zero: &E) -> Laurent<E> {
        let mut out = Laurent::new();
        for (a, e) in &self.modes {
            out.add_at(a + 1, &int(-(*a as i64) - 1), e, zero);
        }
        out
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.exponents()
            .map(|(x, e)| format!("({})*z^{x}", e.render()))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl Vector for crate::element::Element {
    fn is_zero(&self) -> bool {
        crate::element::Element::is_zero(self)
    }
    fn axpy(&mut self, c: &Scalar, other: &Self) {
        crate::element::Element::axpy(self, c, other)
    }
    fn render(&self) -> String {
        crate::element::Element::render(self)
    }
}
