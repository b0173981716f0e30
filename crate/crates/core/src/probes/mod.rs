//! Truncated linear-algebra probes: ideal closure, generated subalgebras,
//! homogeneous products on a weight space, and free-module structure.

pub mod freemod;
pub mod generators;
pub mod ideal;
pub mod jordan;
pub mod subspace;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::families::Family;
use crate::scalar::WeightValue;

pub use subspace::{Subspace, Window};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProbeStatus {
    ReachedFullSpan,
    /// Fixed point reached inside the window without the full span. This
    /// diagnoses the window, it does not refute anything.
    Stalled,
    Violated,
}

impl ProbeStatus {
    /// Worst of two statuses.
    pub fn combine(self, other: ProbeStatus) -> ProbeStatus {
        use ProbeStatus::*;
        match (self, other) {
            (Violated, _) | (_, Violated) => Violated,
            (Stalled, _) | (_, Stalled) => Stalled,
            _ => ReachedFullSpan,
        }
    }
}

pub const STALLED_NOTE: &str =
    "fixed point reached inside the window without the full span; widen the window or slack before drawing conclusions";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbeReport {
    pub probe: String,
    pub family: String,
    pub params: BTreeMap<String, String>,
    pub window: [String; 2],
    pub status: ProbeStatus,
    /// weight -> [reached, total], over the target weights.
    #[serde(serialize_with = "ser_weight_map")]
    pub dims: BTreeMap<WeightValue, [usize; 2]>,
    pub witnesses: Vec<String>,
    pub iterations: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ProbeReport {
    pub fn passed(&self) -> bool {
        self.status == ProbeStatus::ReachedFullSpan
    }
}

/// `[reached, total]` per target weight, and whether everything was reached.
pub(crate) fn span_dims(f: &Family, s: &Subspace, target: WeightValue) -> (BTreeMap<WeightValue, [usize; 2]>, bool) {
    let lo = s.window().lo;
    let mut dims = BTreeMap::new();
    let mut full = true;
    for w in f.weights_between(lo, target) {
        let total = f.dim_at(w);
        let reached = s.dim_at(w);
        full &= reached == total;
        dims.insert(w, [reached, total]);
    }
    (dims, full)
}

/// Serializes a weight-keyed map with string keys, in weight order.
pub(crate) fn ser_weight_map<S: serde::Serializer, V: Serialize>(
    map: &BTreeMap<WeightValue, V>,
    ser: S,
) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut m = ser.serialize_map(Some(map.len()))?;
    for (w, v) in map {
        m.serialize_entry(&w.to_string(), v)?;
    }
    m.end()
}
