//! Component-form checks of the three conformal-superalgebra axioms:
//! the derivative rule, skew-symmetry and the Jacobi identity.

use serde::Serialize;

use crate::carrier::Conformal;
use crate::error::Result;
use crate::exec::Exec;
use crate::laurent::{Laurent, Vector};
use crate::scalar::{binomial, factorial, int, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Derivative,
    SkewSymmetry,
    Jacobi,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Derivative => "derivative",
            Axiom::SkewSymmetry => "skew_symmetry",
            Axiom::Jacobi => "jacobi",
        }
    }
}

/// A failed instance: the inputs, the mode indices and both sides.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub axiom: Axiom,
    pub inputs: Vec<String>,
    pub modes: Vec<u32>,
    pub lhs: String,
    pub rhs: String,
}

fn super_sign<C: Conformal>(c: &C, u: &C::Elem, v: &C::Elem) -> Result<Scalar> {
    let pu = c.parity(u)?.unwrap_or(0);
    let pv = c.parity(v)?.unwrap_or(0);
    Ok(int(if pu * pv % 2 == 1 { -1 } else { 1 }))
}

/// `Y+(du, z) v = d/dz Y+(u, z) v`.
pub fn check_derivative<C: Conformal>(c: &C, u: &C::Elem, v: &C::Elem) -> Option<Counterexample> {
    let zero = c.zero();
    let lhs = c.y_plus(&c.partial(u), v);
    let rhs = c.y_plus(u, v).derivative(&zero);
    if lhs == rhs {
        return None;
    }
    let top = lhs.max_mode().max(rhs.max_mode()).unwrap_or(0);
    let a = (0..=top).find(|&a| lhs.mode(a) != rhs.mode(a)).unwrap_or(0);
    Some(Counterexample {
        axiom: Axiom::Derivative,
        inputs: vec![u.render(), v.render()],
        modes: vec![a],
        lhs: lhs.mode_or(a, &zero).render(),
        rhs: rhs.mode_or(a, &zero).render(),
    })
}

/// `u_a v = (-1)^{ij} sum_{b >= a} (-1)^{b+1} d^{(b-a)} (v_b u) / (b-a)!` for every `a`.
///
/// Errors if `u` or `v` is not parity-homogeneous.
pub fn check_skew_symmetry<C: Conformal>(c: &C, u: &C::Elem, v: &C::Elem) -> Result<Option<Counterexample>> {
    let sign = super_sign(c, u, v)?;
    let zero = c.zero();
    let uv = c.y_plus(u, v);
    let vu = c.y_plus(v, u);
    let top = uv.max_mode().max(vu.max_mode());
    let Some(top) = top else { return Ok(None) };

    let mut rhs: Laurent<C::Elem> = Laurent::new();
    for (b, vbu) in vu.iter() {
        let mut term = vbu.clone();
        for a in (0..=b).rev() {
            let d = b - a;
            if d > 0 {
                term = c.partial(&term);
            }
            let mut coeff = sign.clone() * int(if (b + 1) % 2 == 0 { 1 } else { -1 });
            coeff /= Scalar::from_integer(factorial(d as u64));
            rhs.add_at(a, &coeff, &term, &zero);
        }
    }
    for a in 0..=top {
        if uv.mode(a) != rhs.mode(a) {
            return Ok(Some(Counterexample {
                axiom: Axiom::SkewSymmetry,
                inputs: vec![u.render(), v.render()],
                modes: vec![a],
                lhs: uv.mode_or(a, &zero).render(),
                rhs: rhs.mode_or(a, &zero).render(),
            }));
        }
    }
    Ok(None)
}

/// `u_a(v_b w) - (-1)^{ij} v_b(u_a w) = sum_c C(a,c) (u_c v)_{a+b-c} w` for one `(a, b)`.
pub fn check_jacobi<C: Conformal>(
    c: &C,
    u: &C::Elem,
    v: &C::Elem,
    w: &C::Elem,
    a: u32,
    b: u32,
) -> Result<Option<Counterexample>> {
    let sign = super_sign(c, u, v)?;
    let mut lhs = c.mode(u, a, &c.mode(v, b, w));
    lhs.axpy(&-sign, &c.mode(v, b, &c.mode(u, a, w)));
    let mut rhs = c.zero();
    for k in 0..=a {
        let ukv = c.mode(u, k, v);
        if !ukv.is_zero() {
            rhs.axpy(&binomial(a as i64, k as i64), &c.mode(&ukv, a + b - k, w));
        }
    }
    Ok((lhs != rhs).then(|| jacobi_cex(u, v, w, a, b, &lhs, &rhs)))
}

fn jacobi_cex<E: Vector>(u: &E, v: &E, w: &E, a: u32, b: u32, lhs: &E, rhs: &E) -> Counterexample {
    Counterexample {
        axiom: Axiom::Jacobi,
        inputs: vec![u.render(), v.render(), w.render()],
        modes: vec![a, b],
        lhs: lhs.render(),
        rhs: rhs.render(),
    }
}

/// The Jacobi identity for all `a <= max_a`, `b <= max_b` at once, sharing
/// the intermediate `Y+` expansions. Returns the first failure in `(a, b)` order.
pub fn check_jacobi_modes<C: Conformal>(
    c: &C,
    u: &C::Elem,
    v: &C::Elem,
    w: &C::Elem,
    max_a: u32,
    max_b: u32,
) -> Result<Option<Counterexample>> {
    let sign = super_sign(c, u, v)?;
    let zero = c.zero();
    let vw = c.y_plus(v, w);
    let uw = c.y_plus(u, w);
    let uv = c.y_plus(u, v);
    // u_a (v_b w), indexed [b] then mode a
    let u_on_vw: Vec<Laurent<C::Elem>> =
        (0..=max_b).map(|b| vw.mode(b).map(|x| c.y_plus(u, x)).unwrap_or_default()).collect();
    let v_on_uw: Vec<Laurent<C::Elem>> =
        (0..=max_a).map(|a| uw.mode(a).map(|x| c.y_plus(v, x)).unwrap_or_default()).collect();
    let ucv_on_w: Vec<Laurent<C::Elem>> =
        (0..=max_a).map(|k| uv.mode(k).map(|x| c.y_plus(x, w)).unwrap_or_default()).collect();
    for a in 0..=max_a {
        for b in 0..=max_b {
            let mut lhs = u_on_vw[b as usize].mode_or(a, &zero);
            if let Some(x) = v_on_uw[a as usize].mode(b) {
                lhs.axpy(&-sign.clone(), x);
            }
            let mut rhs = zero.clone();
            for k in 0..=a {
                if let Some(x) = ucv_on_w[k as usize].mode(a + b - k) {
                    rhs.axpy(&binomial(a as i64, k as i64), x);
                }
            }
            if lhs != rhs {
                return Ok(Some(jacobi_cex(u, v, w, a, b, &lhs, &rhs)));
            }
        }
    }
    Ok(None)
}

/// Outcome of an axiom sweep.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomReport {
    pub axiom: Axiom,
    pub checked: usize,
    pub violations: usize,
    /// The first few failures, in sweep order.
    pub counterexamples: Vec<Counterexample>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    fn from_results(axiom: Axiom, results: Vec<Result<Option<Counterexample>>>) -> Result<Self> {
        let checked = results.len();
        let mut failures = Vec::new();
        for r in results {
            if let Some(cex) = r? {
                failures.push(cex);
            }
        }
        let violations = failures.len();
        failures.truncate(MAX_REPORTED);
        Ok(AxiomReport { axiom, checked, violations, counterexamples: failures })
    }
}

pub const MAX_REPORTED: usize = 8;

pub fn sweep_derivative<C: Conformal>(c: &C, elems: &[C::Elem], exec: Exec) -> AxiomReport {
    let n = elems.len();
    let results = exec.map_range(n * n, |idx| Ok(check_derivative(c, &elems[idx / n], &elems[idx % n])));
    AxiomReport::from_results(Axiom::Derivative, results).expect("derivative check is infallible")
}

pub fn sweep_skew_symmetry<C: Conformal>(c: &C, elems: &[C::Elem], exec: Exec) -> Result<AxiomReport> {
    let n = elems.len();
    let results = exec.map_range(n * n, |idx| check_skew_symmetry(c, &elems[idx / n], &elems[idx % n]));
    AxiomReport::from_results(Axiom::SkewSymmetry, results)
}

/// Jacobi over all ordered triples and all `a <= max_a`, `b <= max_b`.
/// `checked` counts triples times mode pairs.
pub fn sweep_jacobi<C: Conformal>(
    c: &C,
    elems: &[C::Elem],
    max_a: u32,
    max_b: u32,
    exec: Exec,
) -> Result<AxiomReport> {
    let n = elems.len();
    let results = exec.map_range(n * n * n, |idx| {
        let (x, y, z) = (idx / (n * n), (idx / n) % n, idx % n);
        check_jacobi_modes(c, &elems[x], &elems[y], &elems[z], max_a, max_b)
    });
    let mut report = AxiomReport::from_results(Axiom::Jacobi, results)?;
    report.checked *= ((max_a + 1) * (max_b + 1)) as usize;
    Ok(report)
}

/// Runs all three sweeps; Jacobi uses its own (usually smaller) element list.
pub fn full_suite<C: Conformal>(
    c: &C,
    pair_elems: &[C::Elem],
    triple_elems: &[C::Elem],
    max_a: u32,
    max_b: u32,
    exec: Exec,
) -> Result<Vec<AxiomReport>> {
    Ok(vec![
        sweep_derivative(c, pair_elems, exec),
        sweep_skew_symmetry(c, pair_elems, exec)?,
        sweep_jacobi(c, triple_elems, max_a, max_b, exec)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::Element;
    use crate::engine::MatrixConformal;
    use crate::key::Ambient;

    #[test]
    fn simple_pairs_pass() {
        let a = Ambient::trivial(2).unwrap();
        let c = MatrixConformal::new(a);
        let u = Element::parse(a, "E[1,1]{0,0}(0,0)").unwrap();
        assert!(check_derivative(&c, &u, &u).is_none());
        assert!(check_derivative(&c, &c.zero(), &u).is_none());
        assert!(check_skew_symmetry(&c, &u, &u).unwrap().is_none());
        assert!(check_jacobi(&c, &u, &u, &u, 1, 1).unwrap().is_none());
    }

    #[test]
    fn odd_pair_uses_sign() {
        let a = Ambient::split(1, 1).unwrap();
        let c = MatrixConformal::new(a);
        let u = Element::parse(a, "E[1,2]{0,1}(0,0)").unwrap();
        let v = Element::parse(a, "E[2,1]{1,0}(0,0)").unwrap();
        assert!(check_skew_symmetry(&c, &u, &v).unwrap().is_none());
        assert!(check_jacobi_modes(&c, &u, &v, &u, 2, 2).unwrap().is_none());
    }

    #[test]
    fn mixed_parity_is_rejected() {
        let a = Ambient::split(1, 1).unwrap();
        let c = MatrixConformal::new(a);
        let mixed = Element::parse(a, "E[1,2]{0,1}(0,0) + E[1,1]{0,0}(0,0)").unwrap();
        assert!(check_skew_symmetry(&c, &mixed, &mixed).is_err());
    }

    #[test]
    fn batched_jacobi_matches_single() {
        let a = Ambient::trivial(2).unwrap();
        let c = MatrixConformal::new(a);
        let u = Element::parse(a, "E[1,2]{0,0}(1,0)").unwrap();
        let v = Element::parse(a, "E[2,1]{1,1}(0,1)").unwrap();
        let w = Element::parse(a, "E[1,1]{0,0}(0,1) + E[2,2]{0,0}(1,0)").unwrap();
        assert!(check_jacobi_modes(&c, &u, &v, &w, 3, 3).unwrap().is_none());
        for x in 0..3 {
            for y in 0..3 {
                assert!(check_jacobi(&c, &u, &v, &w, x, y).unwrap().is_none());
            }
        }
    }

    #[test]
    fn a_broken_carrier_is_caught() {
        // a deliberately wrong Y+ (sign flipped on one pole) must be detected
        struct Broken(MatrixConformal);
        impl Conformal for Broken {
            type Elem = Element;
            fn zero(&self) -> Element {
                self.0.zero()
            }
            fn partial(&self, e: &Element) -> Element {
                e.partial()
            }
            fn y_plus(&self, u: &Element, v: &Element) -> Laurent<Element> {
                let mut y = self.0.y_plus(u, v);
                if let Some(top) = y.mode(1).cloned() {
                    y.insert(1, top.scale(&int(-1)));
                }
                y
            }
            fn parity(&self, e: &Element) -> Result<Option<u8>> {
                e.parity()
            }
            fn name(&self) -> String {
                "broken".into()
            }
        }
        let a = Ambient::trivial(1).unwrap();
        let c = Broken(MatrixConformal::new(a));
        let u = Element::parse(a, "E[1,1]{0,0}(0,0)").unwrap();
        let cex = check_skew_symmetry(&c, &u, &u).unwrap().expect("must fail");
        assert_eq!(cex.axiom, Axiom::SkewSymmetry);
        assert!(check_derivative(&c, &u, &u).is_some());
    }
}
