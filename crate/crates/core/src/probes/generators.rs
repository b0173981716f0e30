//! Subalgebras generated by a set, and the designated generating sets of each family.

use std::collections::{BTreeMap, VecDeque};

use crate::element::Element;
use crate::engine::y_plus;
use crate::error::{Error, Result};
use crate::families::{Family, FamilyKind};
use crate::key::Grading;
use crate::probes::{span_dims, ProbeReport, ProbeStatus, Subspace, Window, STALLED_NOTE};
use crate::scalar::{HalfInt, WeightValue};

#[derive(Clone, Debug)]
pub struct Generated {
    pub subspace: Subspace,
    pub iterations: usize,
}

fn absorb(sub: &mut Subspace, queue: &mut VecDeque<Element>, e: &Element) -> Result<()> {
    let window = sub.window();
    for (w, part) in e.by_weight() {
        if window.contains(w) {
            if let Some(rem) = sub.insert(&part)? {
                queue.push_back(rem);
            }
        }
    }
    Ok(())
}

/// Least subspace of the window containing `gens` and closed under every
/// mode of its own elements: each new direction is multiplied on both sides
/// by every direction found so far, itself included.
pub fn generated_subalgebra(f: &Family, gens: &[Element], window: Window) -> Result<Generated> {
    generated_subalgebra_until(f, gens, window, None)
}

/// As [`generated_subalgebra`], stopping once every weight up to `target` is fully spanned.
pub fn generated_subalgebra_until(
    f: &Family,
    gens: &[Element],
    window: Window,
    target: Option<WeightValue>,
) -> Result<Generated> {
    for g in gens {
        f.require(g)?;
    }
    let mut sub = Subspace::new(f.ambient(), window);
    let mut queue = VecDeque::new();
    for g in gens {
        for (w, part) in g.by_weight() {
            if !window.contains(w) {
                return Err(Error::WeightMismatch(w.to_string(), format!("[{}, {}]", window.lo, window.hi)));
            }
            if let Some(rem) = sub.insert(&part)? {
                queue.push_back(rem);
            }
        }
    }
    let mut found: Vec<Element> = Vec::new();
    let mut iterations = 0;
    while let Some(r) = queue.pop_front() {
        if target.is_some_and(|t| span_dims(f, &sub, t).1) {
            break;
        }
        iterations += 1;
        found.push(r.clone());
        for s in &found {
            for (_, e) in y_plus(&r, s)?.iter() {
                absorb(&mut sub, &mut queue, e)?;
            }
            if s != &r {
                for (_, e) in y_plus(s, &r)?.iter() {
                    absorb(&mut sub, &mut queue, e)?;
                }
            }
        }
    }
    Ok(Generated { subspace: sub, iterations })
}

/// The designated generating set of this family and
/// size, together with a short label for reports.
pub fn designated_generators(f: &Family) -> Result<(String, Vec<Element>)> {
    let spec = f.spec();
    let amb = spec.ambient;
    let k = amb.k;
    let parse = |items: &[&str]| -> Result<Vec<Element>> { items.iter().map(|s| Element::parse(amb, s)).collect() };
    let space = |w: WeightValue, label: &str| -> (String, Vec<Element>) { (label.to_string(), f.basis_at(w)) };
    let two = WeightValue::int(2);
    let three_halves = WeightValue::from_doubled(3);
    Ok(match spec.kind {
        FamilyKind::MatrixConformal { ell: 1 } if k == 1 => {
            ("pair (1,0), (0,2) in block [1,1]".into(), parse(&["E[1,1]{1,1}(1,0)", "E[1,1]{1,1}(0,2)"])?)
        }
        FamilyKind::MatrixConformal { ell: 1 } => space(two, "weight-2 space"),
        FamilyKind::MatrixConformal { ell } if k == 1 => {
            let (a, b) = (ell - 2, ell - 1);
            ("pair (0,ell-2), (0,ell-1)".into(), parse(&[&format!("E[1,1]{{0,0}}(0,{a})"), &format!("E[1,1]{{0,0}}(0,{b})")])?)
        }
        FamilyKind::MatrixConformal { ell } => space(WeightValue::int(ell as i64), "lowest weight space"),
        FamilyKind::StarTranspose1 if k == 1 => (
            "antisymmetric pair at weights 2 and 4".into(),
            parse(&["E[1,1]{1,1}(1,0) - E[1,1]{1,1}(0,1)", "E[1,1]{1,1}(3,0) - E[1,1]{1,1}(0,3)"])?,
        ),
        FamilyKind::StarTranspose1 => space(two, "weight-2 space"),
        FamilyKind::StarTranspose2 if k == 1 => {
            ("identity and (1,1)".into(), parse(&["E[1,1]{0,0}(0,0)", "E[1,1]{0,0}(1,1)"])?)
        }
        FamilyKind::StarTranspose2 => space(two, "weight-2 space"),
        FamilyKind::DaggerSymplectic1 if k == 2 => (
            "three elements at weights 3 and 2".into(),
            parse(&[
                "E[1,2]{1,1}(2,0) + E[1,2]{1,1}(0,2)",
                "E[2,1]{1,1}(2,0) + E[2,1]{1,1}(0,2)",
                "E[1,1]{1,1}(0,1) - E[2,2]{1,1}(1,0)",
            ])?,
        ),
        FamilyKind::DaggerSymplectic1 => space(two, "weight-2 space"),
        FamilyKind::DaggerSymplectic2 if k == 2 => (
            "identity and two off-diagonal differences".into(),
            parse(&[
                "E[1,1]{0,0}(0,0) + E[2,2]{0,0}(0,0)",
                "E[1,2]{0,0}(1,0) - E[1,2]{0,0}(0,1)",
                "E[2,1]{0,0}(1,0) - E[2,1]{0,0}(0,1)",
            ])?,
        ),
        FamilyKind::DaggerSymplectic2 => space(two, "weight-2 space"),
        FamilyKind::SuperMatrix { ell } if k == 2 => (
            "two odd elements and one [1,1] element".into(),
            parse(&[
                &format!("E[1,2]{{0,1}}(0,{ell})"),
                &format!("E[2,1]{{1,0}}(0,{ell})"),
                &format!("E[2,2]{{1,1}}(0,{})", ell + 1),
            ])?,
        ),
        FamilyKind::SuperMatrix { ell } => {
            space(WeightValue::from_doubled(2 * ell as i64 + 3), "lowest odd weight space")
        }
        FamilyKind::SuperStar if k == 2 => (
            "odd sum and [1,1] difference".into(),
            parse(&["E[1,2]{0,1}(0,0) + E[2,1]{1,0}(0,0)", "E[2,2]{1,1}(0,1) - E[2,2]{1,1}(1,0)"])?,
        ),
        FamilyKind::SuperStar => space(three_halves, "weight-3/2 space"),
        FamilyKind::SuperDagger if k == 4 => {
            let Grading::Split { k1 } = amb.grading else { unreachable!("validated") };
            let (a, b) = (k1 + 1, k1 + 2);
            let mut gens = f.basis_at(three_halves);
            gens.extend(parse(&[&format!("E[{a},{a}]{{1,1}}(0,1) - E[{b},{b}]{{1,1}}(1,0)")])?);
            ("weight-3/2 space plus a [1,1] difference".into(), gens)
        }
        FamilyKind::SuperDagger => space(three_halves, "weight-3/2 space"),
    })
}

#[derive(Clone, Debug)]
pub struct GeneratorConfig {
    pub max_weight: WeightValue,
    /// Extra room above `max_weight`, in whole weight units.
    pub slack: u32,
}

/// Builds the designated generating set and checks it spans the family up to `max_weight`.
pub fn generator_probe(f: &Family, cfg: &GeneratorConfig) -> Result<ProbeReport> {
    let (label, gens) = designated_generators(f)?;
    let lo = f.min_weight();
    let window = Window::new(lo, cfg.max_weight + HalfInt::int(cfg.slack as i64));
    let generated = generated_subalgebra_until(f, &gens, window, Some(cfg.max_weight))?;
    let (dims, full) = span_dims(f, &generated.subspace, cfg.max_weight);
    let status = if full { ProbeStatus::ReachedFullSpan } else { ProbeStatus::Stalled };
    let mut witnesses = Vec::new();
    if !full {
        for (w, [reached, total]) in &dims {
            if reached < total {
                witnesses.push(format!("weight {w}: {reached} of {total}"));
            }
        }
    }
    let mut params = BTreeMap::new();
    params.insert("max_weight".into(), cfg.max_weight.to_string());
    params.insert("slack".into(), cfg.slack.to_string());
    params.insert("generating_set".into(), label);
    params.insert("generators".into(), gens.iter().map(Element::render).collect::<Vec<_>>().join("; "));
    Ok(ProbeReport {
        probe: "generators".into(),
        family: f.spec().to_string(),
        params,
        window: [window.lo.to_string(), window.hi.to_string()],
        status,
        dims,
        witnesses,
        iterations: generated.iterations,
        note: (!full).then(|| STALLED_NOTE.to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;

    #[test]
    fn full_basis_generates_everything() {
        let f = Family::build(FamilySpec::matrix(1, 2).unwrap()).unwrap();
        let top = WeightValue::int(4);
        let gens = f.basis_up_to(top);
        let g = generated_subalgebra(&f, &gens, Window::new(WeightValue::int(2), top)).unwrap();
        assert_eq!(g.subspace.dim(), gens.len());
        for x in &gens {
            assert!(g.subspace.contains(x));
        }
    }

    #[test]
    fn designated_sets_lie_in_their_families() {
        let specs = [
            FamilySpec::matrix(1, 1),
            FamilySpec::matrix(1, 3),
            FamilySpec::trivial(FamilyKind::StarTranspose1, 1),
            FamilySpec::trivial(FamilyKind::StarTranspose2, 1),
            FamilySpec::trivial(FamilyKind::DaggerSymplectic1, 2),
            FamilySpec::trivial(FamilyKind::DaggerSymplectic2, 2),
            FamilySpec::split(FamilyKind::SuperMatrix { ell: 1 }, 1, 1),
            FamilySpec::split(FamilyKind::SuperStar, 1, 1),
            FamilySpec::split(FamilyKind::SuperDagger, 2, 2),
        ];
        for spec in specs {
            let f = Family::build(spec.unwrap()).unwrap();
            let (_, gens) = designated_generators(&f).unwrap();
            assert!(!gens.is_empty());
            for g in gens {
                assert!(f.contains(&g).unwrap(), "{} not in {}", g.render(), f.spec());
            }
        }
    }
}
