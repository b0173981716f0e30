//! Sweeps over family bases: closure under all modes, and the reindexing
//! isomorphisms between the `[1,1]`-block subfamilies and the `[0,0]` family.

use serde::Serialize;

use crate::element::Element;
use crate::engine::y_plus;
use crate::error::Result;
use crate::exec::Exec;
use crate::families::{Family, FamilySpec};
use crate::key::BasisKey;
use crate::lincomb::LinComb;
use crate::scalar::{int, WeightValue};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClosureReport {
    pub family: String,
    pub max_weight: String,
    pub pairs: usize,
    pub products: usize,
    pub violations: usize,
    /// `u`, `v`, generic mode and the offending product for the first failures.
    pub witnesses: Vec<String>,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Every mode of every ordered pair of basis elements up to `max` must stay in the family.
pub fn closure_check(f: &Family, max: WeightValue, exec: Exec) -> Result<ClosureReport> {
    let basis = f.basis_up_to(max);
    let n = basis.len();
    let per_pair = exec.map_range(n * n, |idx| -> Result<(usize, Vec<String>)> {
        let (u, v) = (&basis[idx / n], &basis[idx % n]);
        let y = y_plus(u, v)?;
        let mut bad = Vec::new();
        let mut count = 0;
        for (a, e) in y.iter() {
            count += 1;
            if !f.contains(e)? {
                bad.push(format!("({})_{a} ({}) = {}", u.render(), v.render(), e.render()));
            }
        }
        Ok((count, bad))
    });
    let mut report = ClosureReport {
        family: f.spec().to_string(),
        max_weight: max.to_string(),
        pairs: n * n,
        products: 0,
        violations: 0,
        witnesses: Vec::new(),
    };
    for r in per_pair {
        let (count, bad) = r?;
        report.products += count;
        report.violations += bad.len();
        report.witnesses.extend(bad);
    }
    report.witnesses.truncate(crate::axioms::MAX_REPORTED);
    Ok(report)
}

/// Which of the two reindexings to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Correspondence {
    /// `u_{[0,0]}(j,l) -> -(l+1) u_{[1,1]}(j,l+1)`
    SecondIndex,
    /// `u_{[0,0]}(l,j) -> (l+1) u_{[1,1]}(l+1,j)`
    FirstIndex,
}

impl Correspondence {
    pub fn map_key(self, key: &BasisKey) -> (i64, BasisKey) {
        match self {
            Correspondence::SecondIndex => {
                (-(key.n as i64 + 1), BasisKey { i: 1, j: 1, n: key.n + 1, ..*key })
            }
            Correspondence::FirstIndex => (key.m as i64 + 1, BasisKey { i: 1, j: 1, m: key.m + 1, ..*key }),
        }
    }

    pub fn map(self, e: &Element) -> Element {
        let terms: LinComb<BasisKey> = e.terms().map_linear(|k| {
            let (c, image) = self.map_key(k);
            LinComb::term(image, int(c))
        });
        Element::from_terms(*e.ambient(), terms)
    }

    /// Whether the key lies in the target subspace (the shifted exponent is at least 1).
    fn in_target(self, key: &BasisKey) -> bool {
        key.i == 1 && key.j == 1 && if self == Correspondence::SecondIndex { key.n >= 1 } else { key.m >= 1 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IsoReport {
    pub k: u16,
    pub max_weight: String,
    pub correspondence: Correspondence,
    pub elements: usize,
    pub pairs: usize,
    pub violations: usize,
    pub witnesses: Vec<String>,
}

impl IsoReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Checks that a reindexing intertwines `d` and every mode, and lands in its target subspace.
pub fn boson_fermion_iso_check(k: u16, max: WeightValue, corr: Correspondence, exec: Exec) -> Result<IsoReport> {
    let source = Family::build(FamilySpec::matrix(k, 2)?)?;
    let basis = source.basis_up_to(max);
    let mut witnesses = Vec::new();
    for b in &basis {
        let image = corr.map(b);
        if !image.terms().keys().all(|key| corr.in_target(key)) {
            witnesses.push(format!("image of {} leaves the target: {}", b.render(), image.render()));
        }
        let lhs = corr.map(&b.partial());
        let rhs = image.partial();
        if lhs != rhs {
            witnesses.push(format!("d does not commute on {}: {} vs {}", b.render(), lhs.render(), rhs.render()));
        }
    }
    let n = basis.len();
    let modes = exec.map_range(n * n, |idx| -> Result<Option<String>> {
        let (u, v) = (&basis[idx / n], &basis[idx % n]);
        let src = y_plus(u, v)?;
        let dst = y_plus(&corr.map(u), &corr.map(v))?;
        let zero = Element::zero(*u.ambient());
        let top = src.max_mode().max(dst.max_mode()).unwrap_or(0);
        for a in 0..=top {
            let mapped = corr.map(&src.mode_or(a, &zero));
            let got = dst.mode_or(a, &zero);
            if mapped != got {
                return Ok(Some(format!(
                    "mode {a} of ({}, {}): mapped {} vs {}",
                    u.render(),
                    v.render(),
                    mapped.render(),
                    got.render()
                )));
            }
        }
        Ok(None)
    });
    for m in modes {
        if let Some(w) = m? {
            witnesses.push(w);
        }
    }
    let violations = witnesses.len();
    witnesses.truncate(crate::axioms::MAX_REPORTED);
    Ok(IsoReport {
        k,
        max_weight: max.to_string(),
        correspondence: corr,
        elements: n,
        pairs: n * n,
        violations,
        witnesses,
    })
}
