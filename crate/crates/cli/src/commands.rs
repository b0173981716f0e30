use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use confal::axioms::full_suite;
use confal::classical::axiom_fixture_run;
use confal::engine::MatrixConformal;
use confal::exec::Exec;
use confal::families::checks::closure_check;
use confal::families::{Family, FamilySpec};
use confal::oracle::{crosscheck_even_sector, oracle_partial_check};
use confal::probes::generators::{generator_probe, GeneratorConfig};
use confal::probes::ideal::{simplicity_probe, SimplicityConfig};
use confal::probes::jordan::{jordan_structure_check, JordanKind};
use confal::probes::{ProbeReport, ProbeStatus};
use confal::{corpus, Ambient, Element, Error, Grading, HalfInt, Result};

use crate::report::{Outcome, Report};
use crate::{Command, FamilyArgs, OutputArgs, SampleArgs};

const PRNG: &str = "ChaCha8";

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize to JSON")
}

impl FamilyArgs {
    fn spec(&self) -> Result<FamilySpec> {
        let name = self.family.as_deref().ok_or_else(|| Error::Config("--family is required".into()))?;
        FamilySpec::parse(name, self.k, self.k1, self.k2)
    }

    fn family(&self) -> Result<Family> {
        Family::build(self.spec()?)
    }

    /// The ambient algebra named by the size flags alone.
    fn ambient(&self) -> Result<Ambient> {
        match (self.k, self.k1, self.k2) {
            (Some(k), None, None) => Ambient::trivial(k),
            (None, Some(k1), Some(k2)) => Ambient::split(k1, k2),
            _ => Err(Error::Config("give either --k, or both --k1 and --k2".into())),
        }
    }

    /// Config fields for the report, merged with `extra`.
    fn config(&self, extra: Value) -> Value {
        let mut v = json!({ "family": self.family, "k": self.k, "k1": self.k1, "k2": self.k2 });
        if let (Some(map), Value::Object(more)) = (v.as_object_mut(), extra) {
            map.extend(more);
        }
        v
    }
}

impl SampleArgs {
    /// All of `elems`, or a seeded random subset kept in sweep order.
    fn apply(&self, rng: &mut ChaCha8Rng, elems: Vec<Element>) -> Vec<Element> {
        match self.sample {
            Some(n) if n < elems.len() => {
                let mut picked = rand::seq::index::sample(rng, elems.len(), n).into_vec();
                picked.sort_unstable();
                picked.into_iter().map(|i| elems[i].clone()).collect()
            }
            _ => elems,
        }
    }

    fn config(&self) -> Value {
        match self.sample {
            Some(n) => json!({ "mode": "random", "size": n, "prng": PRNG, "seed": self.seed }),
            None => json!({ "mode": "all" }),
        }
    }
}

fn probe_outcome(r: &ProbeReport) -> Outcome {
    match r.status {
        ProbeStatus::ReachedFullSpan => Outcome::Pass,
        ProbeStatus::Stalled => Outcome::Inconclusive,
        ProbeStatus::Violated => Outcome::Violation,
    }
}

pub fn run(cmd: &Command, out: &OutputArgs) -> Result<Report> {
    let exec = if out.sequential { Exec::Sequential } else { Exec::Parallel };
    match cmd {
        Command::VerifyAxioms { family, max_weight, jacobi_weight, max_mode, sample } => {
            verify_axioms(family, *max_weight, *jacobi_weight, *max_mode, sample, exec)
        }
        Command::ProbeSimplicity { family, window, slack, seed_max } => {
            let f = family.family()?;
            let cfg = SimplicityConfig { max_weight: *window, slack: *slack, seed_max: *seed_max, exec };
            let r = simplicity_probe(&f, &cfg)?;
            Ok(Report {
                command: "probe-simplicity",
                config: family.config(json!({
                    "window": window.to_string(),
                    "slack": slack,
                    "seed_max": seed_max.map(|w| w.to_string()),
                })),
                outcome: probe_outcome(&r),
                result: to_value(&r),
                elapsed_ms: None,
            })
        }
        Command::ProbeGenerators { family, max_weight, slack } => {
            let f = family.family()?;
            let r = generator_probe(&f, &GeneratorConfig { max_weight: *max_weight, slack: *slack })?;
            Ok(Report {
                command: "probe-generators",
                config: family.config(json!({ "max_weight": max_weight.to_string(), "slack": slack })),
                outcome: probe_outcome(&r),
                result: to_value(&r),
                elapsed_ms: None,
            })
        }
        Command::Corpus { tag } => {
            let known: Vec<&str> = corpus::all_cases().iter().map(|c| c.tag).collect();
            if let Some(bad) = tag.iter().find(|t| !known.contains(&t.as_str())) {
                return Err(Error::Config(format!("no corpus case tagged `{bad}`")));
            }
            let r = corpus::run_corpus(tag, exec)?;
            Ok(Report {
                command: "corpus",
                config: json!({ "tags": tag }),
                outcome: Outcome::from_passed(r.passed()),
                result: to_value(&r),
                elapsed_ms: None,
            })
        }
        Command::OracleCrosscheck { k, max_exp } => {
            let cross = crosscheck_even_sector(*k, *max_exp, exec)?;
            let partial = oracle_partial_check(*max_exp)?;
            Ok(Report {
                command: "oracle-crosscheck",
                config: json!({ "k": k, "max_exp": max_exp }),
                outcome: Outcome::from_passed(cross.passed() && partial.passed()),
                result: json!({ "crosscheck": to_value(&cross), "partial": to_value(&partial) }),
                elapsed_ms: None,
            })
        }
        Command::JordanCheck { kind, k, ell } => {
            let parsed: JordanKind = kind.parse()?;
            let r = jordan_structure_check(parsed, *k, *ell)?;
            Ok(Report {
                command: "jordan-check",
                config: json!({ "kind": kind, "k": k, "ell": ell }),
                outcome: probe_outcome(&r),
                result: to_value(&r),
                elapsed_ms: None,
            })
        }
        Command::Basis { family, weight } => {
            let f = family.family()?;
            let elems: Vec<String> = f.basis_at(*weight).iter().map(Element::render).collect();
            Ok(Report {
                command: "basis",
                config: family.config(json!({ "weight": weight.to_string() })),
                outcome: Outcome::Pass,
                result: json!({ "family": f.spec().to_string(), "dimension": elems.len(), "elements": elems }),
                elapsed_ms: None,
            })
        }
        Command::Fixtures { depth } => {
            let reports = axiom_fixture_run(*depth, exec)?;
            Ok(Report {
                command: "fixtures",
                config: json!({ "depth": depth }),
                outcome: Outcome::from_passed(reports.iter().all(|r| r.passed())),
                result: to_value(&reports),
                elapsed_ms: None,
            })
        }
        Command::ClosureCheck { family, max_weight } => {
            let f = family.family()?;
            let r = closure_check(&f, *max_weight, exec)?;
            Ok(Report {
                command: "closure-check",
                config: family.config(json!({ "max_weight": max_weight.to_string() })),
                outcome: Outcome::from_passed(r.passed()),
                result: to_value(&r),
                elapsed_ms: None,
            })
        }
    }
}

fn verify_axioms(
    family: &FamilyArgs,
    max_weight: HalfInt,
    jacobi_weight: Option<HalfInt>,
    max_mode: u32,
    sample: &SampleArgs,
    exec: Exec,
) -> Result<Report> {
    let f = family.family.as_ref().map(|_| family.family()).transpose()?;
    let amb = match &f {
        Some(f) => f.ambient(),
        None => family.ambient()?,
    };
    let jw = jacobi_weight.unwrap_or_else(|| default_jacobi_weight(amb, max_weight));
    let basis = |w| -> Result<Vec<Element>> {
        match &f {
            Some(f) => Ok(f.basis_up_to(w)),
            None => amb.keys_up_to(w).into_iter().map(|key| Element::basis(amb, key)).collect(),
        }
    };
    let (pairs, triples) = (basis(max_weight)?, basis(jw)?);
    let label = f.as_ref().map_or_else(|| format!("R[{amb}]"), |f| f.spec().to_string());
    if pairs.is_empty() {
        return Err(Error::Config(format!("no basis elements of weight at most {max_weight}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(sample.seed);
    let pairs = sample.apply(&mut rng, pairs);
    let triples = sample.apply(&mut rng, triples);
    let suite = full_suite(&MatrixConformal::new(amb), &pairs, &triples, max_mode, max_mode, exec)?;
    Ok(Report {
        command: "verify-axioms",
        config: family.config(json!({
            "max_weight": max_weight.to_string(),
            "jacobi_weight": jw.to_string(),
            "max_mode": max_mode,
            "sample": sample.config(),
        })),
        outcome: Outcome::from_passed(suite.iter().all(|r| r.passed())),
        result: json!({
            "algebra": label,
            "pair_elements": pairs.len(),
            "triple_elements": triples.len(),
            "axioms": to_value(&suite),
        }),
        elapsed_ms: None,
    })
}

fn default_jacobi_weight(amb: Ambient, max_weight: HalfInt) -> HalfInt {
    let step = if amb.grading == Grading::Trivial { 2 } else { 1 };
    HalfInt::from_doubled(max_weight.doubled - step)
}
