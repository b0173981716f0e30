//! Weight-graded subspaces of `R(A)` held as one echelon form per weight.

use std::collections::BTreeMap;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::key::{Ambient, BasisKey};
use crate::linalg::Echelon;
use crate::scalar::WeightValue;

/// Closed weight interval `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Window {
    pub lo: WeightValue,
    pub hi: WeightValue,
}

impl Window {
    pub fn new(lo: WeightValue, hi: WeightValue) -> Self {
        Window { lo, hi }
    }

    pub fn contains(&self, w: WeightValue) -> bool {
        self.lo <= w && w <= self.hi
    }
}

#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: Ambient,
    window: Window,
    parts: BTreeMap<WeightValue, Echelon<BasisKey>>,
}

impl Subspace {
    pub fn new(ambient: Ambient, window: Window) -> Self {
        Subspace { ambient, window, parts: BTreeMap::new() }
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    /// Inserts a weight-homogeneous element inside the window. Returns the
    /// reduced remainder if it enlarged the subspace.
    pub fn insert(&mut self, e: &Element) -> Result<Option<Element>> {
        let Some(w) = e.weight()? else { return Ok(None) };
        if !self.window.contains(w) {
            return Err(Error::WeightMismatch(w.to_string(), format!("[{}, {}]", self.window.lo, self.window.hi)));
        }
        let echelon = self.parts.entry(w).or_default();
        Ok(echelon.insert(e.terms()).map(|rem| Element::from_terms(self.ambient, rem)))
    }

    /// Exact membership; components outside the window are never members.
    pub fn contains(&self, e: &Element) -> bool {
        e.by_weight().into_iter().all(|(w, part)| {
            self.window.contains(w) && self.parts.get(&w).is_some_and(|ech| ech.contains(part.terms()))
        })
    }

    pub fn dim_at(&self, w: WeightValue) -> usize {
        self.parts.get(&w).map_or(0, Echelon::rank)
    }

    pub fn dim(&self) -> usize {
        self.parts.values().map(Echelon::rank).sum()
    }

    /// Canonical rows at one weight, normalized with leading coefficient 1.
    pub fn rows_at(&self, w: WeightValue) -> Vec<Element> {
        self.parts.get(&w).map_or_else(Vec::new, |ech| {
            ech.canonical_rows().into_iter().map(|r| Element::from_terms(self.ambient, r.clone())).collect()
        })
    }

    pub fn rows(&self) -> Vec<Element> {
        self.parts.keys().flat_map(|&w| self.rows_at(w)).collect()
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        let nonempty = |s: &Subspace| -> Vec<(WeightValue, Vec<Element>)> {
            s.parts.keys().map(|&w| (w, s.rows_at(w))).filter(|(_, r)| !r.is_empty()).collect()
        };
        self.ambient == other.ambient && nonempty(self) == nonempty(other)
    }
}
