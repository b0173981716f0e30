//! Decomposition over the free `F[d]`-module basis `{u_{[i,j]}(0,n)}`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::element::Element;
use crate::error::Result;
use crate::families::Family;
use crate::key::BasisKey;
use crate::linalg::Echelon;
use crate::lincomb::LinComb;
use crate::scalar::{factorial, Scalar, WeightValue};

/// `e = sum c * d^power (generator)`, each generator having first exponent 0.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeDecomposition {
    pub ambient: crate::key::Ambient,
    /// `(power, generator) -> coefficient`
    pub terms: BTreeMap<(u32, BasisKey), Scalar>,
}

impl FreeDecomposition {
    /// Rebuilds the element.
    pub fn expand(&self) -> Element {
        let mut out = Element::zero(self.ambient);
        for ((d, g), c) in &self.terms {
            let base = Element::from_terms(self.ambient, LinComb::single(*g));
            out.axpy(c, &base.partial_pow(*d));
        }
        out
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|((d, g), c)| format!("{}*d^{d}({g})", crate::scalar::render_scalar(c)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// `d^m u(0,n)` has a single term with first exponent `m`, namely `m! u(m,n)`,
/// so peeling off the largest first exponent terminates with a unique answer.
pub fn free_module_decompose(e: &Element) -> FreeDecomposition {
    let amb = *e.ambient();
    let mut rest = e.clone();
    let mut terms: BTreeMap<(u32, BasisKey), Scalar> = BTreeMap::new();
    while let Some((key, c)) = rest.terms().iter().max_by_key(|(k, _)| (k.m, **k)).map(|(k, c)| (*k, c.clone())) {
        let generator = key.with_exponents(0, key.n);
        let coeff = c / Scalar::from_integer(factorial(key.m as u64));
        let image = Element::from_terms(amb, LinComb::single(generator)).partial_pow(key.m);
        rest.axpy(&-coeff.clone(), &image);
        debug_assert!(rest.coeff(&key).is_zero());
        let slot = terms.entry((key.m, generator)).or_insert_with(Scalar::zero);
        *slot += coeff;
    }
    terms.retain(|_, c| !c.is_zero());
    FreeDecomposition { ambient: amb, terms }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthRow {
    pub weight: String,
    pub dim: usize,
    pub derived: usize,
    pub new_generators: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthReport {
    pub family: String,
    pub bound: usize,
    pub rows: Vec<GrowthRow>,
    pub violations: Vec<String>,
}

impl GrowthReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Per weight, `dim - rank d(previous weight)` must not exceed the free-growth bound,
/// and `d` must keep the family inside itself.
pub fn growth_check(f: &Family, max: WeightValue) -> Result<GrowthReport> {
    let bound = f.growth_bound();
    let mut rows = Vec::new();
    let mut violations = Vec::new();
    for w in f.weights_up_to(max) {
        let prev = WeightValue::from_doubled(w.doubled - 2);
        let mut derived = Echelon::new();
        for b in f.basis_at(prev) {
            let d = b.partial();
            if !f.contains(&d)? {
                violations.push(format!("d({}) leaves the family", b.render()));
            }
            derived.insert(d.terms());
        }
        let dim = f.dim_at(w);
        let new_generators = dim - derived.rank().min(dim);
        if new_generators > bound {
            violations.push(format!("weight {w}: {new_generators} new generators exceed {bound}"));
        }
        rows.push(GrowthRow { weight: w.to_string(), dim, derived: derived.rank(), new_generators });
    }
    Ok(GrowthReport { family: f.spec().to_string(), bound, rows, violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;
    use crate::key::Ambient;

    #[test]
    fn examples() {
        let a = Ambient::trivial(1).unwrap();
        let gen = Element::parse(a, "E[1,1]{0,0}(0,3)").unwrap();
        let d = free_module_decompose(&gen);
        assert_eq!(d.terms.len(), 1);
        assert_eq!(d.expand(), gen);
        let x = Element::parse(a, "E[1,1]{0,0}(1,0)").unwrap();
        let d = free_module_decompose(&x);
        assert_eq!(d.render(), "-1*d^0(E[1,1]{0,0}(0,1)) + 1*d^1(E[1,1]{0,0}(0,0))");
        assert_eq!(d.expand(), x);
        assert!(free_module_decompose(&Element::zero(a)).terms.is_empty());
    }

    #[test]
    fn growth_small() {
        let f = Family::build(FamilySpec::matrix(2, 2).unwrap()).unwrap();
        let r = growth_check(&f, WeightValue::int(6)).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        assert_eq!(r.rows[0].new_generators, 4);
    }
}
