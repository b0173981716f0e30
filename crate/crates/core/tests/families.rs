use confal::exec::Exec;
use confal::families::checks::{boson_fermion_iso_check, closure_check, Correspondence};
use confal::families::involution::Involution;
use confal::families::{Family, FamilyKind, FamilySpec};
use confal::{Ambient, Element, HalfInt};

fn family(sel: &str, k: Option<u16>, k1: Option<u16>, k2: Option<u16>) -> Family {
    Family::build(FamilySpec::parse(sel, k, k1, k2).unwrap()).unwrap()
}

fn rendered(f: &Family, w: HalfInt) -> Vec<String> {
    f.basis_at(w).iter().map(Element::render).collect()
}

#[test]
fn w_infinity_has_dimension_n_minus_one() {
    let f = family("rkk:2", Some(1), None, None);
    for n in 2..9 {
        assert_eq!(f.dim_at(HalfInt::int(n)), (n - 1) as usize);
    }
    assert_eq!(f.min_weight(), HalfInt::int(2));
}

#[test]
fn w_one_plus_infinity_starts_at_weight_one() {
    let f = family("rkk:1", Some(1), None, None);
    assert_eq!(f.min_weight(), HalfInt::int(1));
    for n in 1..7 {
        assert_eq!(f.dim_at(HalfInt::int(n)), n as usize);
    }
}

#[test]
fn symmetric_weight_two_space() {
    let f = family("star2", Some(2), None, None);
    assert_eq!(
        rendered(&f, HalfInt::int(2)),
        ["E[1,1]{0,0}(0,0)", "E[1,2]{0,0}(0,0) + E[2,1]{0,0}(0,0)", "E[2,2]{0,0}(0,0)"]
    );
}

#[test]
fn lowest_odd_weight_of_the_smallest_super_family() {
    let f = family("super:0", None, Some(1), Some(1));
    assert_eq!(rendered(&f, HalfInt::from_doubled(3)), ["E[1,2]{0,1}(0,0)", "E[2,1]{1,0}(0,0)"]);
}

#[test]
fn membership() {
    let amb = Ambient::trivial(2).unwrap();
    let star2 = family("star2", Some(2), None, None);
    assert!(!star2.contains(&Element::parse(amb, "E[1,2]{0,0}(0,0)").unwrap()).unwrap());
    assert!(star2.contains(&Element::parse(amb, "E[1,2]{0,0}(1,0) + E[2,1]{0,0}(0,1)").unwrap()).unwrap());
    let one = Ambient::trivial(1).unwrap();
    let r3 = family("rkk:3", Some(1), None, None);
    assert!(!r3.contains(&Element::parse(one, "E[1,1]{0,0}(0,0)").unwrap()).unwrap());
    assert!(r3.contains(&Element::parse(one, "E[1,1]{0,0}(2,1)").unwrap()).unwrap());
}

#[test]
fn bases_are_independent_and_homogeneous() {
    let fams = [
        family("rkk:1", Some(2), None, None),
        family("star1", Some(2), None, None),
        family("dagger1", Some(2), None, None),
        family("dagger2", Some(4), None, None),
        family("superstar", None, Some(1), Some(2)),
        family("superdagger", None, Some(2), Some(2)),
    ];
    for f in &fams {
        for w in f.weights_up_to(HalfInt::int(4)) {
            let b = f.basis_at(w);
            let rows: Vec<_> = b.iter().map(|e| e.terms().clone()).collect();
            assert_eq!(confal::linalg::rank(&rows), b.len(), "{} at {w}", f.spec());
            for e in &b {
                assert_eq!(e.weight().unwrap(), Some(w));
                assert!(f.contains(e).unwrap());
            }
        }
    }
}

#[test]
fn symplectic_involution_at_k2() {
    let s = Involution::symplectic(&Ambient::trivial(2).unwrap()).unwrap();
    assert_eq!(s.apply_unit(1, 1).unwrap(), (1, 2, 2));
    assert_eq!(s.apply_unit(1, 2).unwrap(), (-1, 1, 2));
    assert_eq!(Involution::Transpose.apply_unit(1, 2).unwrap(), (1, 2, 1));
}

#[test]
fn parameter_errors() {
    assert!(FamilySpec::parse("dagger1", Some(3), None, None).is_err());
    assert!(FamilySpec::parse("superdagger", None, Some(1), Some(2)).is_err());
    assert!(FamilySpec::parse("rkk:0", Some(2), None, None).is_err());
    assert!(FamilySpec::parse("nonsense", Some(2), None, None).is_err());
    assert!(FamilySpec::trivial(FamilyKind::SuperStar, 2).is_err());
}

#[test]
fn closure_examples() {
    let runs = [
        (family("rkk:2", Some(2), None, None), HalfInt::int(4)),
        (family("dagger1", Some(2), None, None), HalfInt::int(4)),
        (family("super:0", None, Some(1), Some(1)), HalfInt::from_doubled(7)),
    ];
    for (f, w) in runs {
        let r = closure_check(&f, w, Exec::Parallel).unwrap();
        assert!(r.passed(), "{}: {:?}", f.spec(), r.witnesses);
        assert!(r.products > 0);
    }
}

#[test]
fn boson_fermion_correspondences() {
    for corr in [Correspondence::SecondIndex, Correspondence::FirstIndex] {
        let r = boson_fermion_iso_check(1, HalfInt::int(4), corr, Exec::Sequential).unwrap();
        assert!(r.passed(), "{corr:?}: {:?}", r.witnesses);
        let r = boson_fermion_iso_check(2, HalfInt::int(3), corr, Exec::Parallel).unwrap();
        assert!(r.passed(), "{corr:?}: {:?}", r.witnesses);
    }
}
