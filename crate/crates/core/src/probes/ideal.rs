//! Ideal closure inside a weight window, and the simplicity probe built on it.

use std::collections::{BTreeMap, VecDeque};

use crate::element::Element;
use crate::engine::y_plus;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::families::Family;
use crate::probes::{span_dims, ProbeReport, ProbeStatus, Subspace, Window, STALLED_NOTE};
use crate::scalar::{HalfInt, WeightValue};

#[derive(Clone, Debug)]
pub struct Closure {
    pub subspace: Subspace,
    /// Number of new directions that were expanded.
    pub iterations: usize,
}

fn check_inputs(f: &Family, elems: &[Element], window: Window) -> Result<()> {
    for e in elems {
        f.require(e)?;
        for (w, _) in e.by_weight() {
            if !window.contains(w) {
                return Err(Error::WeightMismatch(w.to_string(), format!("[{}, {}]", window.lo, window.hi)));
            }
        }
    }
    Ok(())
}

/// Inserts every weight component of `e` that falls in the window, queueing new directions.
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

fn target_reached(f: &Family, sub: &Subspace, target: Option<WeightValue>) -> bool {
    target.is_some_and(|t| span_dims(f, sub, t).1)
}

/// Least subspace of the window containing `seeds` and closed under `d` and
/// under every mode of every family basis element in the window, acting on
/// either side. Images leaving the window are dropped.
pub fn ideal_closure(f: &Family, seeds: &[Element], window: Window) -> Result<Closure> {
    ideal_closure_until(f, seeds, window, None)
}

/// As [`ideal_closure`], stopping early once every weight up to `target` is fully spanned.
pub fn ideal_closure_until(
    f: &Family,
    seeds: &[Element],
    window: Window,
    target: Option<WeightValue>,
) -> Result<Closure> {
    check_inputs(f, seeds, window)?;
    let actors = f.basis_up_to(window.hi);
    let mut sub = Subspace::new(f.ambient(), window);
    let mut queue = VecDeque::new();
    for s in seeds {
        absorb(&mut sub, &mut queue, s)?;
    }
    let mut iterations = 0;
    while let Some(r) = queue.pop_front() {
        if target_reached(f, &sub, target) {
            break;
        }
        iterations += 1;
        absorb(&mut sub, &mut queue, &r.partial())?;
        for b in &actors {
            for (_, e) in y_plus(b, &r)?.iter() {
                absorb(&mut sub, &mut queue, e)?;
            }
            for (_, e) in y_plus(&r, b)?.iter() {
                absorb(&mut sub, &mut queue, e)?;
            }
        }
    }
    Ok(Closure { subspace: sub, iterations })
}

/// Re-applies every closure operation to the rows of `sub` and lists images
/// that escaped it. Empty for a genuine fixed point.
pub fn verify_ideal_closed(f: &Family, sub: &Subspace) -> Result<Vec<String>> {
    let window = sub.window();
    let actors = f.basis_up_to(window.hi);
    let mut escaped = Vec::new();
    let mut check = |label: &str, e: &Element| {
        for (w, part) in e.by_weight() {
            if window.contains(w) && !sub.contains(&part) {
                escaped.push(format!("{label}: {}", part.render()));
            }
        }
    };
    for r in sub.rows() {
        check(&format!("d({})", r.render()), &r.partial());
        for b in &actors {
            for (a, e) in y_plus(b, &r)?.iter() {
                check(&format!("({})_{a}({})", b.render(), r.render()), e);
            }
            for (a, e) in y_plus(&r, b)?.iter() {
                check(&format!("({})_{a}({})", r.render(), b.render()), e);
            }
        }
    }
    Ok(escaped)
}

#[derive(Clone, Debug)]
pub struct SimplicityConfig {
    /// Every basis element up to this weight must be reached.
    pub max_weight: WeightValue,
    /// Extra room above `max_weight`, in whole weight units.
    pub slack: u32,
    /// Seeds are all basis elements up to this weight; default is the minimal weight plus one.
    pub seed_max: Option<WeightValue>,
    pub exec: Exec,
}

impl SimplicityConfig {
    pub fn new(max_weight: WeightValue, slack: u32) -> Self {
        SimplicityConfig { max_weight, slack, seed_max: None, exec: Exec::default() }
    }
}

/// Runs the ideal closure from every low-weight basis element; passes when
/// each one reaches the full span up to `max_weight`.
pub fn simplicity_probe(f: &Family, cfg: &SimplicityConfig) -> Result<ProbeReport> {
    let lo = f.min_weight();
    if cfg.max_weight < lo + HalfInt::int(1) {
        return Err(Error::Config(format!(
            "max weight {} must be at least the minimal weight {} plus one",
            cfg.max_weight, lo
        )));
    }
    let window = Window::new(lo, cfg.max_weight + HalfInt::int(cfg.slack as i64));
    let seed_max = cfg.seed_max.unwrap_or(lo + HalfInt::int(1));
    let seeds = f.basis_up_to(seed_max);
    let runs = cfg.exec.map(&seeds, |s| -> Result<(Closure, Vec<String>)> {
        let c = ideal_closure_until(f, std::slice::from_ref(s), window, Some(cfg.max_weight))?;
        let outside: Vec<String> = c
            .subspace
            .rows()
            .into_iter()
            .filter_map(|r| match f.contains(&r) {
                Ok(true) => None,
                _ => Some(r.render()),
            })
            .collect();
        Ok((c, outside))
    });

    let mut status = ProbeStatus::ReachedFullSpan;
    let mut dims: BTreeMap<WeightValue, [usize; 2]> = BTreeMap::new();
    let mut witnesses = Vec::new();
    let mut iterations = 0;
    for (seed, run) in seeds.iter().zip(runs) {
        let (closure, outside) = run?;
        iterations += closure.iterations;
        let (seed_dims, full) = span_dims(f, &closure.subspace, cfg.max_weight);
        for (w, [reached, total]) in seed_dims {
            let slot = dims.entry(w).or_insert([reached, total]);
            slot[0] = slot[0].min(reached);
        }
        if !outside.is_empty() {
            status = status.combine(ProbeStatus::Violated);
            witnesses.extend(outside.into_iter().map(|e| format!("seed {}: left the family: {e}", seed.render())));
        } else if !full {
            status = status.combine(ProbeStatus::Stalled);
            witnesses.push(format!("seed {}: stalled", seed.render()));
        }
    }

    let mut params = BTreeMap::new();
    params.insert("max_weight".into(), cfg.max_weight.to_string());
    params.insert("slack".into(), cfg.slack.to_string());
    params.insert("seed_max".into(), seed_max.to_string());
    params.insert("seeds".into(), seeds.len().to_string());
    Ok(ProbeReport {
        probe: "simplicity".into(),
        family: f.spec().to_string(),
        params,
        window: [window.lo.to_string(), window.hi.to_string()],
        status,
        dims,
        witnesses,
        iterations,
        note: (status == ProbeStatus::Stalled).then(|| STALLED_NOTE.to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;

    #[test]
    fn w_infinity_seed_reaches_weight_three() {
        let f = Family::build(FamilySpec::matrix(1, 2).unwrap()).unwrap();
        let amb = f.ambient();
        let seed = Element::parse(amb, "E[1,1]{0,0}(0,0)").unwrap();
        let win = Window::new(WeightValue::int(2), WeightValue::int(6));
        let c = ideal_closure(&f, &[seed], win).unwrap();
        for s in ["E[1,1]{0,0}(0,1)", "E[1,1]{0,0}(1,0)"] {
            assert!(c.subspace.contains(&Element::parse(amb, s).unwrap()), "{s}");
        }
        assert!(verify_ideal_closed(&f, &c.subspace).unwrap().is_empty());
    }

    #[test]
    fn seeds_outside_family_are_rejected() {
        let f = Family::build(FamilySpec::matrix(1, 3).unwrap()).unwrap();
        let seed = Element::parse(f.ambient(), "E[1,1]{0,0}(0,0)").unwrap();
        let win = Window::new(WeightValue::int(2), WeightValue::int(5));
        assert!(matches!(ideal_closure(&f, &[seed], win), Err(Error::NotInFamily { .. })));
    }

    #[test]
    fn small_probe_passes() {
        let f = Family::build(FamilySpec::matrix(1, 2).unwrap()).unwrap();
        let r = simplicity_probe(&f, &SimplicityConfig::new(WeightValue::int(4), 1)).unwrap();
        assert_eq!(r.status, ProbeStatus::ReachedFullSpan, "{r:?}");
    }
}
