//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use confal::axioms::full_suite;
use confal::classical::axiom_fixture_run;
use confal::corpus::{all_cases, run_corpus};
use confal::engine::MatrixConformal;
use confal::exec::Exec;
use confal::families::checks::{boson_fermion_iso_check, Correspondence};
use confal::families::{Family, FamilySpec};
use confal::oracle::crosscheck_even_sector;
use confal::probes::freemod::{free_module_decompose, growth_check};
use confal::probes::generators::{generator_probe, GeneratorConfig};
use confal::probes::ideal::{simplicity_probe, SimplicityConfig};
use confal::probes::jordan::{jordan_setting, jordan_structure_check, JordanKind};
use confal::scalar::{frac, int};
use confal::{Ambient, Element, HalfInt, Result};

type Outcome = Result<Vec<String>>;

struct Criterion {
    id: u8,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn w(x: i64) -> HalfInt {
    HalfInt::int(x)
}

fn family(sel: &str, k: Option<u16>, k1: Option<u16>, k2: Option<u16>) -> Family {
    Family::build(FamilySpec::parse(sel, k, k1, k2).expect("valid selector")).expect("valid family")
}

fn basis(amb: Ambient, max: HalfInt) -> Vec<Element> {
    amb.keys_up_to(max).into_iter().map(|key| Element::basis(amb, key).unwrap()).collect()
}

fn axioms() -> Outcome {
    let runs = [
        (Ambient::trivial(1)?, w(4), w(3), 4),
        (Ambient::trivial(2)?, w(4), w(3), 4),
        (Ambient::split(1, 1)?, w(3), HalfInt::from_doubled(5), 3),
    ];
    let mut failures = Vec::new();
    for (amb, pair_max, triple_max, modes) in runs {
        let suite = full_suite(&MatrixConformal::new(amb), &basis(amb, pair_max), &basis(amb, triple_max), modes, modes, Exec::Parallel)?;
        for r in suite.iter().filter(|r| !r.passed()) {
            failures.push(format!("R[{amb}] {:?}: {} violations", r.axiom, r.violations));
        }
    }
    Ok(failures)
}

fn oracle() -> Outcome {
    let mut failures = Vec::new();
    for k in [1, 2] {
        let r = crosscheck_even_sector(k, 3, Exec::Parallel)?;
        if !r.passed() {
            failures.push(format!("k={k}: {} mismatches", r.mismatches));
        }
    }
    Ok(failures)
}

/// Tags the corpus must cover, expanded from their ranges.
fn required_tags() -> Vec<String> {
    let ranges: [(u8, u32, u32); 12] = [
        (3, 7, 7),
        (3, 17, 19),
        (3, 21, 22),
        (3, 27, 27),
        (3, 37, 41),
        (3, 47, 48),
        (3, 52, 62),
        (3, 67, 74),
        (4, 13, 21),
        (4, 30, 38),
        (4, 47, 55),
        (4, 65, 87),
    ];
    let mut tags: Vec<String> =
        ranges.iter().flat_map(|&(s, a, b)| (a..=b).map(move |n| format!("({s}.{n})"))).collect();
    tags.sort();
    tags.dedup();
    tags
}

fn corpus() -> Outcome {
    let present: Vec<&str> = all_cases().iter().map(|c| c.tag).collect();
    let mut failures: Vec<String> =
        required_tags().into_iter().filter(|t| !present.contains(&t.as_str())).map(|t| format!("{t} missing")).collect();
    let r = run_corpus(&[], Exec::Parallel)?;
    failures.extend(r.failed.iter().map(|t| format!("{t} failed")));
    Ok(failures)
}

fn simplicity() -> Outcome {
    let families = [
        family("rkk:1", Some(1), None, None),
        family("rkk:2", Some(1), None, None),
        family("rkk:2", Some(2), None, None),
        family("star1", Some(2), None, None),
        family("star2", Some(2), None, None),
        family("dagger1", Some(2), None, None),
        family("dagger2", Some(2), None, None),
        family("super:0", None, Some(1), Some(1)),
        family("superstar", None, Some(1), Some(1)),
        family("superdagger", None, Some(2), Some(2)),
    ];
    let mut failures = Vec::new();
    for f in &families {
        for top in 4..=6 {
            let cfg = SimplicityConfig { max_weight: w(top), slack: 2, seed_max: None, exec: Exec::Parallel };
            let r = simplicity_probe(f, &cfg)?;
            if !r.passed() {
                failures.push(format!("{} W={top}: {:?}", f.spec(), r.status));
            }
        }
    }
    Ok(failures)
}

fn generators() -> Outcome {
    let families = [
        family("rkk:1", Some(1), None, None),
        family("rkk:1", Some(2), None, None),
        family("rkk:2", Some(1), None, None),
        family("rkk:3", Some(1), None, None),
        family("rkk:2", Some(2), None, None),
        family("star1", Some(1), None, None),
        family("star1", Some(2), None, None),
        family("star2", Some(1), None, None),
        family("star2", Some(2), None, None),
        family("dagger1", Some(2), None, None),
        family("dagger1", Some(4), None, None),
        family("dagger2", Some(2), None, None),
        family("dagger2", Some(4), None, None),
        family("super:0", None, Some(1), Some(1)),
        family("super:1", None, Some(1), Some(1)),
        family("super:0", None, Some(1), Some(2)),
        family("superstar", None, Some(1), Some(1)),
        family("superstar", None, Some(1), Some(2)),
        family("superdagger", None, Some(2), Some(2)),
        family("superdagger", None, Some(2), Some(4)),
    ];
    let mut failures = Vec::new();
    for f in &families {
        let r = generator_probe(f, &GeneratorConfig { max_weight: w(6), slack: 0 })?;
        if !r.passed() {
            failures.push(format!("{}: {:?} {:?}", f.spec(), r.status, r.witnesses));
        }
    }
    Ok(failures)
}

fn jordan() -> Outcome {
    let runs = [(JordanKind::A, 0, 1), (JordanKind::A, 1, 3), (JordanKind::Lie, 0, 2), (JordanKind::B, 0, 1), (JordanKind::C, 0, 1)];
    let mut failures = Vec::new();
    for (kind, ell, scalar) in runs {
        let (_, _, expected) = jordan_setting(kind, 2, ell)?;
        if expected != int(scalar) {
            failures.push(format!("{kind:?} l={ell}: scalar {expected} instead of {scalar}"));
        }
        let r = jordan_structure_check(kind, 2, ell)?;
        if !r.passed() {
            failures.push(format!("{kind:?} l={ell}: {:?}", r.witnesses));
        }
    }
    Ok(failures)
}

fn fixtures() -> Outcome {
    let reports = axiom_fixture_run(4, Exec::Parallel)?;
    let mut failures: Vec<String> = reports.iter().filter(|r| !r.passed()).map(|r| format!("{} failed", r.fixture)).collect();
    match reports.iter().find(|r| r.fixture == "virasoro") {
        Some(v) if v.identity.checked > 0 => {}
        _ => failures.push("virasoro two-pole identity not checked".into()),
    }
    Ok(failures)
}

fn random_element(rng: &mut ChaCha8Rng, amb: Ambient, keys: &[confal::BasisKey]) -> Element {
    let mut e = Element::zero(amb);
    for _ in 0..rng.random_range(1..=4) {
        let key = keys[rng.random_range(0..keys.len())];
        let c = frac(rng.random_range(-6..=6), rng.random_range(1..=4));
        e.add_term(key, c);
    }
    e
}

fn structure() -> Outcome {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let ambients = [Ambient::trivial(1)?, Ambient::trivial(2)?, Ambient::split(1, 1)?, Ambient::split(1, 2)?];
    let keys: Vec<_> = ambients.iter().map(|a| a.keys_up_to(w(6))).collect();
    for i in 0..1000 {
        let slot = i % ambients.len();
        let e = random_element(&mut rng, ambients[slot], &keys[slot]);
        if free_module_decompose(&e).expand() != e {
            failures.push(format!("round trip failed on {}", e.render()));
        }
    }
    let families = [
        family("rkk:1", Some(2), None, None),
        family("rkk:2", Some(2), None, None),
        family("star1", Some(2), None, None),
        family("dagger2", Some(2), None, None),
        family("super:0", None, Some(1), Some(1)),
        family("superdagger", None, Some(2), Some(2)),
    ];
    for f in &families {
        let r = growth_check(f, w(6))?;
        failures.extend(r.violations);
    }
    for k in [1, 2] {
        for corr in [Correspondence::SecondIndex, Correspondence::FirstIndex] {
            let r = boson_fermion_iso_check(k, w(4), corr, Exec::Parallel)?;
            if !r.passed() {
                failures.push(format!("k={k} {corr:?}: {:?}", r.witnesses));
            }
        }
    }
    Ok(failures)
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "axiom suite", budget: Duration::from_secs(120), run: axioms },
        Criterion { id: 2, name: "oracle equivalence", budget: Duration::from_secs(60), run: oracle },
        Criterion { id: 3, name: "identity corpus", budget: Duration::from_secs(120), run: corpus },
        Criterion { id: 4, name: "simplicity probes", budget: Duration::from_secs(600), run: simplicity },
        Criterion { id: 5, name: "generator probes", budget: Duration::from_secs(600), run: generators },
        Criterion { id: 6, name: "jordan structure", budget: Duration::MAX, run: jordan },
        Criterion { id: 7, name: "fixtures", budget: Duration::MAX, run: fixtures },
        Criterion { id: 8, name: "structural properties", budget: Duration::MAX, run: structure },
    ];
    let mut all_passed = true;
    for c in &criteria {
        let started = Instant::now();
        let outcome = (c.run)();
        let elapsed = started.elapsed();
        let mut problems = match outcome {
            Ok(p) => p,
            Err(err) => vec![format!("error: {err}")],
        };
        if elapsed > c.budget {
            problems.push(format!("took {elapsed:.1?}, budget {:.0?}", c.budget));
        }
        let verdict = if problems.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {} {}: {verdict} ({elapsed:.1?})", c.id, c.name);
        for p in problems.iter().take(5) {
            println!("    {p}");
        }
        all_passed &= problems.is_empty();
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
