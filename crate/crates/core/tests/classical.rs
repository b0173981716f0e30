use confal::classical::{
    axiom_fixture_run, loop_generating_check, virasoro_two_pole_check, LieAlgebra, LoopConformal, VirasoroConformal,
};
use confal::exec::Exec;
use confal::lincomb::LinComb;
use confal::scalar::int;

#[test]
fn virasoro_action_follows_the_bracket() {
    let vir = VirasoroConformal;
    // L(-1) L(-2) = L(-3), L(0) L(-3) = 3 L(-3), L(1) L(-4) = 5 L(-3)
    assert_eq!(vir.act(0, 0).terms, LinComb::term(1, int(1)));
    assert_eq!(vir.act(1, 1).terms, LinComb::term(1, int(3)));
    assert_eq!(vir.act(2, 2).terms, LinComb::term(1, int(5)));
    // L(1) L(-2) = 3 L(-1) falls outside the algebra
    assert!(vir.act(2, 0).terms.is_zero());
}

#[test]
fn virasoro_has_exactly_two_poles() {
    let (checked, mismatches) = virasoro_two_pole_check(4);
    assert!(checked > 0);
    assert!(mismatches.is_empty(), "{mismatches:?}");
}

#[test]
fn loop_sl2_brackets() {
    let lp = LoopConformal::new(LieAlgebra::sl2());
    let (e, f, h) = (0, 1, 2);
    assert_eq!(lp.act(h, 0, e, 1), LinComb::term((e, 1), int(2)));
    assert_eq!(lp.act(e, 0, f, 2), LinComb::term((h, 2), int(1)));
    assert_eq!(lp.act(h, 1, f, 2), LinComb::term((f, 1), int(-2)));
    assert!(lp.act(e, 2, f, 2).is_zero());
    let (checked, mismatches) = loop_generating_check(&lp, 4);
    assert!(checked > 0 && mismatches.is_empty(), "{mismatches:?}");
}

#[test]
fn fixtures_pass_the_axiom_suite() {
    for r in axiom_fixture_run(3, Exec::Sequential).unwrap() {
        assert!(r.passed(), "{}: {:?}", r.fixture, r.axioms);
        assert!(r.axioms.iter().all(|a| a.checked > 0));
    }
}
