use proptest::prelude::*;

use confal::axioms::{check_derivative, check_jacobi, check_skew_symmetry};
use confal::engine::{generic_index, generic_mode, weighted_index, weighted_mode, y_plus, MatrixConformal};
use confal::linalg::Echelon;
use confal::probes::freemod::free_module_decompose;
use confal::scalar::frac;
use confal::{Ambient, BasisKey, Element, HalfInt};

fn ambients() -> Vec<Ambient> {
    vec![Ambient::trivial(1).unwrap(), Ambient::trivial(2).unwrap(), Ambient::split(1, 1).unwrap(), Ambient::split(1, 2).unwrap()]
}

fn ambient() -> impl Strategy<Value = Ambient> {
    prop::sample::select(ambients())
}

fn key_in(amb: Ambient, max: i64) -> impl Strategy<Value = BasisKey> {
    prop::sample::select(amb.keys_up_to(HalfInt::int(max)))
}

fn coeff() -> impl Strategy<Value = confal::Scalar> {
    (-5i64..=5, 1i64..=3).prop_map(|(n, d)| frac(n, d))
}

fn element_in(amb: Ambient, max: i64) -> impl Strategy<Value = Element> {
    prop::collection::vec((key_in(amb, max), coeff()), 0..5).prop_map(move |terms| {
        let mut e = Element::zero(amb);
        for (k, c) in terms {
            e.add_term(k, c);
        }
        e
    })
}

fn basis(amb: Ambient, k: BasisKey) -> Element {
    Element::basis(amb, k).unwrap()
}

/// Two basis keys sharing an ambient.
fn key_pair(max: i64) -> impl Strategy<Value = (Ambient, BasisKey, BasisKey)> {
    ambient().prop_flat_map(move |a| (Just(a), key_in(a, max), key_in(a, max)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn render_parse_round_trip(e in ambient().prop_flat_map(|a| element_in(a, 6))) {
        let back = Element::parse(*e.ambient(), &e.render()).unwrap();
        prop_assert_eq!(back, e);
    }

    #[test]
    fn free_decomposition_round_trips(e in ambient().prop_flat_map(|a| element_in(a, 6))) {
        prop_assert_eq!(free_module_decompose(&e).expand(), e);
    }

    #[test]
    fn derivative_axiom((a, ku, kv) in key_pair(4)) {
        let c = MatrixConformal::new(a);
        prop_assert!(check_derivative(&c, &basis(a, ku), &basis(a, kv)).is_none());
    }

    #[test]
    fn skew_symmetry((a, ku, kv) in key_pair(4)) {
        let c = MatrixConformal::new(a);
        prop_assert!(check_skew_symmetry(&c, &basis(a, ku), &basis(a, kv)).unwrap().is_none());
    }

    #[test]
    fn jacobi(
        (a, ku, kv, kw) in ambient().prop_flat_map(|a| (Just(a), key_in(a, 3), key_in(a, 3), key_in(a, 3))),
        m in 0u32..4,
        n in 0u32..4,
    ) {
        let c = MatrixConformal::new(a);
        let found = check_jacobi(&c, &basis(a, ku), &basis(a, kv), &basis(a, kw), m, n).unwrap();
        prop_assert!(found.is_none(), "{:?}", found);
    }

    #[test]
    fn y_plus_is_bilinear(
        (a, ku, kv, kx) in ambient().prop_flat_map(|a| (Just(a), key_in(a, 4), key_in(a, 4), key_in(a, 4))),
        s in coeff(),
        t in coeff(),
    ) {
        let (u, v, x) = (basis(a, ku), basis(a, kv), basis(a, kx));
        let mut left = u.scale(&s);
        left.axpy(&t, &x);
        let zero = Element::zero(a);
        let mut expected = confal::Laurent::new();
        expected.axpy(&s, &y_plus(&u, &v).unwrap(), &zero);
        expected.axpy(&t, &y_plus(&x, &v).unwrap(), &zero);
        prop_assert_eq!(y_plus(&left, &v).unwrap(), expected);
    }

    #[test]
    fn weighted_and_generic_modes_agree((a, ku, kv) in key_pair(4), g in 0u32..6) {
        let (u, v) = (basis(a, ku), basis(a, kv));
        let wt = u.weight().unwrap().unwrap();
        let m = weighted_index(wt, g);
        prop_assert_eq!(generic_index(wt, m).unwrap(), g);
        prop_assert_eq!(weighted_mode(&u, m, &v).unwrap(), generic_mode(&u, g, &v).unwrap());
    }

    #[test]
    fn modes_lower_weight_by_the_weighted_index((a, ku, kv) in key_pair(4), g in 0u32..6) {
        let (u, v) = (basis(a, ku), basis(a, kv));
        let out = generic_mode(&u, g, &v).unwrap();
        let m = weighted_index(u.weight().unwrap().unwrap(), g);
        if !out.is_zero() {
            let expected = v.weight().unwrap().unwrap() - m;
            prop_assert_eq!(out.weight().unwrap(), Some(expected));
        }
    }

    #[test]
    fn echelon_span_ignores_insertion_order(
        rows in prop::collection::vec(element_in(Ambient::trivial(2).unwrap(), 3), 1..6),
    ) {
        let mut fwd = Echelon::new();
        let mut back = Echelon::new();
        for r in &rows {
            fwd.insert(r.terms());
        }
        for r in rows.iter().rev() {
            back.insert(r.terms());
        }
        prop_assert_eq!(fwd.canonical_rows(), back.canonical_rows());
        for r in &rows {
            prop_assert!(fwd.contains(r.terms()));
        }
    }
}
