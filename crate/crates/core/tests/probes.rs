use confal::exec::Exec;
use confal::families::{Family, FamilySpec};
use confal::probes::generators::{designated_generators, generated_subalgebra, generator_probe, GeneratorConfig};
use confal::probes::ideal::{ideal_closure, simplicity_probe, verify_ideal_closed, SimplicityConfig};
use confal::probes::jordan::{jordan_product, jordan_structure_check, JordanKind};
use confal::probes::{ProbeStatus, Window};
use confal::{Ambient, Element, HalfInt};

fn family(sel: &str, k: Option<u16>, k1: Option<u16>, k2: Option<u16>) -> Family {
    Family::build(FamilySpec::parse(sel, k, k1, k2).unwrap()).unwrap()
}

fn simplicity(f: &Family, w: HalfInt, exec: Exec) -> confal::probes::ProbeReport {
    simplicity_probe(f, &SimplicityConfig { max_weight: w, slack: 2, seed_max: None, exec }).unwrap()
}

#[test]
fn simplicity_examples() {
    let runs = [
        (family("rkk:2", Some(1), None, None), HalfInt::int(6)),
        (family("star2", Some(2), None, None), HalfInt::int(5)),
        (family("super:0", None, Some(1), Some(1)), HalfInt::from_doubled(9)),
    ];
    for (f, w) in runs {
        let r = simplicity(&f, w, Exec::Parallel);
        assert_eq!(r.status, ProbeStatus::ReachedFullSpan, "{}: {:?}", f.spec(), r.witnesses);
        assert!(r.dims.values().all(|[reached, total]| reached == total));
    }
}

#[test]
fn reports_do_not_depend_on_the_executor() {
    let f = family("dagger1", Some(2), None, None);
    let a = simplicity(&f, HalfInt::int(4), Exec::Sequential);
    let b = simplicity(&f, HalfInt::int(4), Exec::Parallel);
    assert_eq!(a, b);
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn closure_is_a_fixed_point_and_monotone() {
    let f = family("rkk:1", Some(1), None, None);
    let window = Window::new(HalfInt::int(1), HalfInt::int(4));
    let seed = f.basis_at(HalfInt::int(3)).remove(0);
    let small = ideal_closure(&f, std::slice::from_ref(&seed), window).unwrap();
    assert!(verify_ideal_closed(&f, &small.subspace).unwrap().is_empty());
    let again = ideal_closure(&f, &small.subspace.rows(), window).unwrap();
    assert_eq!(again.subspace.dim(), small.subspace.dim());
    let mut seeds = vec![seed];
    seeds.extend(f.basis_at(HalfInt::int(2)));
    let big = ideal_closure(&f, &seeds, window).unwrap();
    assert!(small.subspace.rows().iter().all(|r| big.subspace.contains(r)));
}

#[test]
fn the_identity_alone_generates_a_proper_subalgebra() {
    let f = family("rkk:2", Some(1), None, None);
    let amb = f.ambient();
    let gens = vec![Element::parse(amb, "E[1,1]{0,0}(0,0)").unwrap()];
    let g = generated_subalgebra(&f, &gens, Window::new(HalfInt::int(2), HalfInt::int(5))).unwrap();
    assert!(g.subspace.dim() < f.basis_up_to(HalfInt::int(5)).len());
}

#[test]
fn generator_examples() {
    let runs = [
        family("rkk:2", Some(1), None, None),
        family("star2", Some(1), None, None),
        family("rkk:2", Some(2), None, None),
        family("rkk:1", Some(1), None, None),
    ];
    for f in &runs {
        let r = generator_probe(f, &GeneratorConfig { max_weight: HalfInt::int(6), slack: 0 }).unwrap();
        assert!(r.passed(), "{}: {:?}", f.spec(), r.witnesses);
    }
    let f = family("super:0", None, Some(1), Some(1));
    let (_, gens) = designated_generators(&f).unwrap();
    let rendered: Vec<String> = gens.iter().map(Element::render).collect();
    assert_eq!(rendered, ["E[1,2]{0,1}(0,0)", "E[2,1]{1,0}(0,0)", "E[2,2]{1,1}(0,1)"]);
    let r = generator_probe(&f, &GeneratorConfig { max_weight: HalfInt::from_doubled(9), slack: 0 }).unwrap();
    assert!(r.passed());
}

#[test]
fn generated_subalgebra_contains_its_generators() {
    let f = family("star1", Some(2), None, None);
    let (_, gens) = designated_generators(&f).unwrap();
    let g = generated_subalgebra(&f, &gens, Window::new(HalfInt::int(1), HalfInt::int(3))).unwrap();
    assert!(gens.iter().all(|x| g.subspace.contains(x)));
}

#[test]
fn jordan_scalars() {
    let amb = Ambient::trivial(2).unwrap();
    let e11 = Element::parse(amb, "E[1,1]{0,0}(0,0)").unwrap();
    assert_eq!(jordan_product(&e11, &e11).unwrap(), 2 * e11.clone());
    // (2l+1)(uv+vu) at exponents (0,2l), l = 1
    let u = Element::parse(amb, "E[1,2]{0,0}(0,2)").unwrap();
    let v = Element::parse(amb, "E[2,1]{0,0}(0,2)").unwrap();
    let want = Element::parse(amb, "3*E[1,1]{0,0}(0,2) + 3*E[2,2]{0,0}(0,2)").unwrap();
    assert_eq!(jordan_product(&u, &v).unwrap(), want);
    // (2l+2)(vu-uv) at exponents (0,2l+1), l = 0
    let u = Element::parse(amb, "E[1,2]{0,0}(0,1)").unwrap();
    let v = Element::parse(amb, "E[2,1]{0,0}(0,1)").unwrap();
    let want = Element::parse(amb, "2*E[2,2]{0,0}(0,1) - 2*E[1,1]{0,0}(0,1)").unwrap();
    assert_eq!(jordan_product(&u, &v).unwrap(), want);
    for kind in [JordanKind::A, JordanKind::Lie, JordanKind::B, JordanKind::C] {
        assert!(jordan_structure_check(kind, 2, 0).unwrap().passed(), "{kind:?}");
    }
}
