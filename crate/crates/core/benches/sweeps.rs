use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use confal::axioms::full_suite;
use confal::engine::MatrixConformal;
use confal::exec::Exec;
use confal::families::{Family, FamilySpec};
use confal::probes::ideal::{simplicity_probe, SimplicityConfig};
use confal::{Ambient, Element, HalfInt};

const EXECUTORS: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn basis(amb: Ambient, max: HalfInt) -> Vec<Element> {
    amb.keys_up_to(max).into_iter().map(|key| Element::basis(amb, key).unwrap()).collect()
}

fn axiom_sweep(c: &mut Criterion) {
    let amb = Ambient::trivial(2).unwrap();
    let algebra = MatrixConformal::new(amb);
    let pairs = basis(amb, HalfInt::int(3));
    let triples = basis(amb, HalfInt::int(2));
    let mut group = c.benchmark_group("axiom_sweep_k2");
    group.sample_size(10);
    for (name, exec) in EXECUTORS {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| full_suite(&algebra, &pairs, &triples, 3, 3, exec).unwrap())
        });
    }
    group.finish();
}

fn simplicity(c: &mut Criterion) {
    let family = Family::build(FamilySpec::parse("star2", Some(2), None, None).unwrap()).unwrap();
    let mut group = c.benchmark_group("simplicity_star2");
    group.sample_size(10);
    for (name, exec) in EXECUTORS {
        let cfg = SimplicityConfig { max_weight: HalfInt::int(4), slack: 2, seed_max: None, exec };
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| simplicity_probe(&family, &cfg).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, axiom_sweep, simplicity);
criterion_main!(benches);
