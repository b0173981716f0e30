//! The named subalgebras of `R(A)`, their weight-graded canonical bases and
//! membership tests.

pub mod checks;
pub mod involution;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use serde::Serialize;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::key::{Ambient, BasisKey, Grading};
use crate::linalg::Echelon;
use crate::lincomb::LinComb;
use crate::scalar::{int, WeightValue};

pub use involution::Involution;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilyKind {
    /// `ell = 1`: the `[1,1]` block with all exponents. `ell >= 2`: the
    /// `[0,0]` block with second exponent at least `ell - 2`.
    MatrixConformal { ell: u32 },
    /// Transpose-fixed part of the `ell = 1` family.
    StarTranspose1,
    /// Transpose-fixed part of the `ell = 2` family.
    StarTranspose2,
    /// Symplectic-fixed part of the `ell = 1` family (even `k`).
    DaggerSymplectic1,
    /// Symplectic-fixed part of the `ell = 2` family (even `k`).
    DaggerSymplectic2,
    /// Block-compatible keys of the split algebra with second exponent at least `ell`.
    SuperMatrix { ell: u32 },
    /// Transpose-fixed part of `SuperMatrix { ell: 0 }`.
    SuperStar,
    /// Graded-symplectic-fixed part of `SuperMatrix { ell: 0 }` (even `k1`, `k2`).
    SuperDagger,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub ambient: Ambient,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, ambient: Ambient) -> Result<Self> {
        let spec = FamilySpec { kind, ambient };
        spec.validate()?;
        Ok(spec)
    }

    pub fn matrix(k: u16, ell: u32) -> Result<Self> {
        Self::new(FamilyKind::MatrixConformal { ell }, Ambient::trivial(k)?)
    }

    pub fn trivial(kind: FamilyKind, k: u16) -> Result<Self> {
        Self::new(kind, Ambient::trivial(k)?)
    }

    pub fn split(kind: FamilyKind, k1: u16, k2: u16) -> Result<Self> {
        Self::new(kind, Ambient::split(k1, k2)?)
    }

    pub fn is_super(&self) -> bool {
        matches!(
            self.kind,
            FamilyKind::SuperMatrix { .. } | FamilyKind::SuperStar | FamilyKind::SuperDagger
        )
    }

    fn validate(&self) -> Result<()> {
        let split = matches!(self.ambient.grading, Grading::Split { .. });
        if self.is_super() != split {
            return Err(Error::InvalidFamily(format!(
                "{} needs a {} grading",
                self.selector(),
                if self.is_super() { "split" } else { "trivial" }
            )));
        }
        match self.kind {
            FamilyKind::MatrixConformal { ell: 0 } => {
                Err(Error::InvalidFamily("the matrix family index starts at 1".into()))
            }
            FamilyKind::DaggerSymplectic1 | FamilyKind::DaggerSymplectic2 | FamilyKind::SuperDagger => {
                Involution::symplectic(&self.ambient).map(|_| ())
            }
            _ => Ok(()),
        }
    }

    /// The CLI selector string, e.g. `rkk:2` or `superdagger`.
    pub fn selector(&self) -> String {
        match self.kind {
            FamilyKind::MatrixConformal { ell } => format!("rkk:{ell}"),
            FamilyKind::StarTranspose1 => "star1".into(),
            FamilyKind::StarTranspose2 => "star2".into(),
            FamilyKind::DaggerSymplectic1 => "dagger1".into(),
            FamilyKind::DaggerSymplectic2 => "dagger2".into(),
            FamilyKind::SuperMatrix { ell } => format!("super:{ell}"),
            FamilyKind::SuperStar => "superstar".into(),
            FamilyKind::SuperDagger => "superdagger".into(),
        }
    }

    /// Parses a selector together with its size parameters.
    pub fn parse(selector: &str, k: Option<u16>, k1: Option<u16>, k2: Option<u16>) -> Result<Self> {
        let (name, arg) = match selector.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (selector, None),
        };
        let ell = || -> Result<u32> {
            arg.ok_or_else(|| Error::Config(format!("family `{name}` needs an index, e.g. `{name}:1`")))?
                .parse()
                .map_err(|_| Error::Config(format!("bad family index in `{selector}`")))
        };
        let no_arg = || -> Result<()> {
            match arg {
                Some(_) => Err(Error::Config(format!("family `{name}` takes no index"))),
                None => Ok(()),
            }
        };
        let kind = match name {
            "rkk" => FamilyKind::MatrixConformal { ell: ell()? },
            "super" => FamilyKind::SuperMatrix { ell: ell()? },
            "star1" => no_arg().map(|_| FamilyKind::StarTranspose1)?,
            "star2" => no_arg().map(|_| FamilyKind::StarTranspose2)?,
            "dagger1" => no_arg().map(|_| FamilyKind::DaggerSymplectic1)?,
            "dagger2" => no_arg().map(|_| FamilyKind::DaggerSymplectic2)?,
            "superstar" => no_arg().map(|_| FamilyKind::SuperStar)?,
            "superdagger" => no_arg().map(|_| FamilyKind::SuperDagger)?,
            other => return Err(Error::Config(format!("unknown family `{other}`"))),
        };
        let probe = FamilySpec { kind, ambient: Ambient { k: 1, grading: Grading::Trivial } };
        let ambient = if probe.is_super() {
            match (k1, k2) {
                (Some(a), Some(b)) => Ambient::split(a, b)?,
                _ => return Err(Error::Config(format!("family `{name}` needs --k1 and --k2"))),
            }
        } else {
            Ambient::trivial(k.ok_or_else(|| Error::Config(format!("family `{name}` needs --k")))?)?
        };
        Self::new(kind, ambient)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.selector(), self.ambient)
    }
}

/// One block `[i,j]` and the matrix units allowed in it.
#[derive(Clone, Debug)]
struct Block {
    i: u8,
    j: u8,
    units: Vec<(u16, u16)>,
}

impl Block {
    /// Twice the weight of `E_{[i,j]}(0,0)`.
    fn base_weight_doubled(&self) -> i64 {
        let (i, j) = (self.i as i64, self.j as i64);
        2 * (1 - i) + 2 * (1 - j) + i + j
    }
}

/// The canonical basis at one weight together with its echelon form.
#[derive(Debug)]
pub struct WeightSpace {
    pub weight: WeightValue,
    pub basis: Vec<Element>,
    pub echelon: Echelon<BasisKey>,
}

/// A family with lazily built, cached per-weight bases.
#[derive(Debug)]
pub struct Family {
    spec: FamilySpec,
    blocks: Vec<Block>,
    min_n: u32,
    involution: Option<Involution>,
    cache: RwLock<BTreeMap<WeightValue, Arc<WeightSpace>>>,
}

impl Family {
    pub fn build(spec: FamilySpec) -> Result<Self> {
        spec.validate()?;
        let amb = spec.ambient;
        let all_units = |parity: u8| amb.units_of_parity(parity);
        let diag = |i: u8| Block { i, j: i, units: all_units(0) };
        let split_blocks = || -> Vec<Block> {
            let Grading::Split { k1 } = amb.grading else { unreachable!("validated") };
            let side = |x: u16| u8::from(x > k1);
            let mut blocks: Vec<Block> = [(0, 0), (0, 1), (1, 0), (1, 1)]
                .into_iter()
                .map(|(i, j)| Block { i, j, units: Vec::new() })
                .collect();
            for p in 1..=amb.k {
                for q in 1..=amb.k {
                    let idx = (2 * side(p) + side(q)) as usize;
                    blocks[idx].units.push((p, q));
                }
            }
            blocks
        };
        let (blocks, min_n, involution) = match spec.kind {
            FamilyKind::MatrixConformal { ell: 1 } => (vec![diag(1)], 0, None),
            FamilyKind::MatrixConformal { ell } => (vec![diag(0)], ell - 2, None),
            FamilyKind::StarTranspose1 => (vec![diag(1)], 0, Some(Involution::Transpose)),
            FamilyKind::StarTranspose2 => (vec![diag(0)], 0, Some(Involution::Transpose)),
            FamilyKind::DaggerSymplectic1 => (vec![diag(1)], 0, Some(Involution::symplectic(&amb)?)),
            FamilyKind::DaggerSymplectic2 => (vec![diag(0)], 0, Some(Involution::symplectic(&amb)?)),
            FamilyKind::SuperMatrix { ell } => (split_blocks(), ell, None),
            FamilyKind::SuperStar => (split_blocks(), 0, Some(Involution::Transpose)),
            FamilyKind::SuperDagger => (split_blocks(), 0, Some(Involution::symplectic(&amb)?)),
        };
        Ok(Family { spec, blocks, min_n, involution, cache: RwLock::new(BTreeMap::new()) })
    }

    pub fn spec(&self) -> &FamilySpec {
        &self.spec
    }

    pub fn ambient(&self) -> Ambient {
        self.spec.ambient
    }

    pub fn involution(&self) -> Option<&Involution> {
        self.involution.as_ref()
    }

    /// Keys of the underlying (unsymmetrized) family at a weight.
    pub fn raw_keys_at(&self, w: WeightValue) -> Vec<BasisKey> {
        let mut out = Vec::new();
        for block in &self.blocks {
            let rem = w.doubled - block.base_weight_doubled();
            if rem < 0 || rem % 2 != 0 {
                continue;
            }
            let total = (rem / 2) as u32;
            for &(p, q) in &block.units {
                for n in self.min_n..=total {
                    out.push(BasisKey { i: block.i, j: block.j, p, q, m: total - n, n });
                }
            }
        }
        out.sort();
        out
    }

    /// Whether a key belongs to the underlying (unsymmetrized) family.
    pub fn raw_contains(&self, key: &BasisKey) -> bool {
        key.n >= self.min_n
            && self
                .blocks
                .iter()
                .any(|b| b.i == key.i && b.j == key.j && b.units.contains(&(key.p, key.q)))
    }

    fn build_weight(&self, w: WeightValue) -> WeightSpace {
        let amb = self.ambient();
        let mut basis = Vec::new();
        for key in self.raw_keys_at(w) {
            let elem = match &self.involution {
                None => Element::from_terms(amb, LinComb::single(key)),
                Some(inv) => {
                    let (sign, image) = inv.fixed_point_partner(&key).expect("family units lie in the involution blocks");
                    if image < key {
                        continue;
                    }
                    if image == key && sign < 0 {
                        continue;
                    }
                    // a self-paired unit is its own fixed point; keep it unscaled
                    let mut terms = LinComb::single(key);
                    if image != key {
                        terms.add_term(image, int(sign as i64));
                    }
                    Element::from_terms(amb, terms)
                }
            };
            basis.push(elem);
        }
        let mut echelon = Echelon::new();
        for b in &basis {
            echelon.insert(b.terms());
        }
        debug_assert_eq!(echelon.rank(), basis.len());
        WeightSpace { weight: w, basis, echelon }
    }

    pub fn weight_space(&self, w: WeightValue) -> Arc<WeightSpace> {
        if let Some(ws) = self.cache.read().expect("cache lock").get(&w) {
            return ws.clone();
        }
        let built = Arc::new(self.build_weight(w));
        self.cache.write().expect("cache lock").entry(w).or_insert(built).clone()
    }

    pub fn basis_at(&self, w: WeightValue) -> Vec<Element> {
        self.weight_space(w).basis.clone()
    }

    pub fn dim_at(&self, w: WeightValue) -> usize {
        self.weight_space(w).basis.len()
    }

    /// Weights in `[1, max]` (steps of 1/2) with a nonzero basis.
    pub fn weights_up_to(&self, max: WeightValue) -> Vec<WeightValue> {
        self.weights_between(WeightValue::int(1), max)
    }

    pub fn weights_between(&self, lo: WeightValue, hi: WeightValue) -> Vec<WeightValue> {
        (lo.doubled.max(2)..=hi.doubled)
            .map(WeightValue::from_doubled)
            .filter(|&w| self.dim_at(w) > 0)
            .collect()
    }

    pub fn min_weight(&self) -> WeightValue {
        let d = self
            .blocks
            .iter()
            .filter(|b| !b.units.is_empty())
            .map(|b| b.base_weight_doubled() + 2 * self.min_n as i64)
            .min()
            .expect("every family has a nonempty block");
        // symmetrization never empties a weight entirely, but check anyway
        let mut w = WeightValue::from_doubled(d);
        while self.dim_at(w) == 0 {
            w = WeightValue::from_doubled(w.doubled + 1);
        }
        w
    }

    pub fn basis_up_to(&self, max: WeightValue) -> Vec<Element> {
        self.weights_up_to(max).into_iter().flat_map(|w| self.basis_at(w)).collect()
    }

    /// Exact membership, weight by weight.
    pub fn contains(&self, e: &Element) -> Result<bool> {
        if *e.ambient() != self.ambient() {
            return Err(Error::AmbientMismatch(e.ambient().to_string(), self.ambient().to_string()));
        }
        for (w, part) in e.by_weight() {
            if !self.weight_space(w).echelon.contains(part.terms()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn require(&self, e: &Element) -> Result<()> {
        if self.contains(e)? {
            Ok(())
        } else {
            Err(Error::NotInFamily { family: self.spec.to_string(), element: e.render() })
        }
    }

    /// Free-growth bound on generators per weight.
    pub fn growth_bound(&self) -> usize {
        self.ambient().growth_bound()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(d: i64) -> WeightValue {
        WeightValue::from_doubled(d)
    }

    fn render_all(v: &[Element]) -> Vec<String> {
        v.iter().map(Element::render).collect()
    }

    #[test]
    fn w_infinity_dimensions() {
        let f = Family::build(FamilySpec::matrix(1, 2).unwrap()).unwrap();
        for n in 2..8 {
            assert_eq!(f.dim_at(WeightValue::int(n)), (n - 1) as usize);
        }
        assert_eq!(f.min_weight(), WeightValue::int(2));
        let f1 = Family::build(FamilySpec::matrix(1, 1).unwrap()).unwrap();
        assert_eq!(f1.min_weight(), WeightValue::int(1));
        let f3 = Family::build(FamilySpec::matrix(1, 3).unwrap()).unwrap();
        assert_eq!(f3.min_weight(), WeightValue::int(3));
    }

    #[test]
    fn star2_weight_two() {
        let f = Family::build(FamilySpec::trivial(FamilyKind::StarTranspose2, 2).unwrap()).unwrap();
        assert_eq!(
            render_all(&f.basis_at(WeightValue::int(2))),
            ["E[1,1]{0,0}(0,0)", "E[1,2]{0,0}(0,0) + E[2,1]{0,0}(0,0)", "E[2,2]{0,0}(0,0)"]
        );
    }

    #[test]
    fn super_lowest_odd_weight() {
        let f = Family::build(FamilySpec::split(FamilyKind::SuperMatrix { ell: 0 }, 1, 1).unwrap()).unwrap();
        assert_eq!(render_all(&f.basis_at(w(3))), ["E[1,2]{0,1}(0,0)", "E[2,1]{1,0}(0,0)"]);
        assert_eq!(render_all(&f.basis_at(w(2))), ["E[2,2]{1,1}(0,0)"]);
    }

    #[test]
    fn membership_examples() {
        let a = Ambient::trivial(2).unwrap();
        let star = Family::build(FamilySpec::trivial(FamilyKind::StarTranspose2, 2).unwrap()).unwrap();
        assert!(!star.contains(&Element::parse(a, "E[1,2]{0,0}(0,0)").unwrap()).unwrap());
        assert!(star.contains(&Element::parse(a, "E[1,2]{0,0}(1,0) + E[2,1]{0,0}(0,1)").unwrap()).unwrap());
        let a1 = Ambient::trivial(1).unwrap();
        let r3 = Family::build(FamilySpec::matrix(1, 3).unwrap()).unwrap();
        assert!(!r3.contains(&Element::parse(a1, "E[1,1]{0,0}(0,0)").unwrap()).unwrap());
        assert!(r3.contains(&Element::parse(a1, "E[1,1]{0,0}(3,1)").unwrap()).unwrap());
        for b in star.basis_up_to(WeightValue::int(4)) {
            assert!(star.contains(&b).unwrap());
        }
    }

    #[test]
    fn parameter_validation() {
        assert!(FamilySpec::matrix(2, 0).is_err());
        assert!(FamilySpec::trivial(FamilyKind::DaggerSymplectic1, 3).is_err());
        assert!(FamilySpec::split(FamilyKind::SuperDagger, 2, 1).is_err());
        assert!(FamilySpec::trivial(FamilyKind::SuperStar, 2).is_err());
        assert!(FamilySpec::parse("rkk:2", Some(2), None, None).is_ok());
        assert!(FamilySpec::parse("rkk", Some(2), None, None).is_err());
        assert!(FamilySpec::parse("super:0", None, Some(1), Some(1)).is_ok());
        assert!(FamilySpec::parse("superstar", Some(2), None, None).is_err());
        assert!(FamilySpec::parse("nope", Some(2), None, None).is_err());
    }

    #[test]
    fn dagger1_drops_vanishing_self_pairs() {
        // sigma_2 fixes E_{1,2} up to sign -1, and the [1,1] block sign is -1, so
        // E_{1,2}(m,m) pairs with +E_{1,2}(m,m) and survives
        let f = Family::build(FamilySpec::trivial(FamilyKind::DaggerSymplectic1, 2).unwrap()).unwrap();
        let b = render_all(&f.basis_at(WeightValue::int(1)));
        assert_eq!(b, ["E[1,1]{1,1}(0,0) - E[2,2]{1,1}(0,0)", "E[1,2]{1,1}(0,0)", "E[2,1]{1,1}(0,0)"]);
    }
}
