//! Exact reduced row echelon forms over Q, with pivots chosen by key order.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::lincomb::LinComb;
use crate::scalar::Scalar;

/// A fully reduced row basis. Each row's pivot is its smallest key, has
/// coefficient 1, and appears in no other row.
#[derive(Clone, Debug, PartialEq)]
pub struct Echelon<K: Ord + Clone> {
    rows: Vec<LinComb<K>>,
    pivots: BTreeMap<K, usize>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: Vec::new(), pivots: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[LinComb<K>] {
        &self.rows
    }

    /// Rows in pivot order, which makes equal subspaces compare equal.
    pub fn canonical_rows(&self) -> Vec<&LinComb<K>> {
        self.pivots.values().map(|&i| &self.rows[i]).collect()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.pivots.keys()
    }

    /// Remainder of `v` after eliminating every pivot.
    pub fn reduce(&self, v: &LinComb<K>) -> LinComb<K> {
        let hits: Vec<(usize, Scalar)> = v
            .iter()
            .filter_map(|(k, c)| self.pivots.get(k).map(|&r| (r, c.clone())))
            .collect();
        let mut out = v.clone();
        for (r, c) in hits {
            out.axpy(&-c, &self.rows[r]);
        }
        out
    }

    pub fn contains(&self, v: &LinComb<K>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span. Returns the reduced, not yet normalized,
    /// remainder when it enlarges the span.
    pub fn insert(&mut self, v: &LinComb<K>) -> Option<LinComb<K>> {
        let rem = self.reduce(v);
        let (pivot, lead) = match rem.leading() {
            Some((k, c)) => (k.clone(), c.clone()),
            None => return None,
        };
        let row = rem.scaled(&(Scalar::one() / lead));
        for existing in &mut self.rows {
            let c = existing.coeff(&pivot);
            if !c.is_zero() {
                existing.axpy(&-c, &row);
            }
        }
        self.pivots.insert(pivot, self.rows.len());
        self.rows.push(row);
        Some(rem)
    }

    /// Coordinates of `v` in terms of the rows, if `v` is in the span.
    pub fn solve(&self, v: &LinComb<K>) -> Option<Vec<(usize, Scalar)>> {
        let coords: Vec<(usize, Scalar)> = v
            .iter()
            .filter_map(|(k, c)| self.pivots.get(k).map(|&r| (r, c.clone())))
            .collect();
        let mut check = v.clone();
        for (r, c) in &coords {
            check.axpy(&-c.clone(), &self.rows[*r]);
        }
        check.is_zero().then_some(coords)
    }
}

/// Rank of a list of vectors.
pub fn rank<K: Ord + Clone>(vectors: &[LinComb<K>]) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}
