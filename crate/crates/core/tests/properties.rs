mod common;

use common::*;
use proptest::prelude::*;

use wolfes_core::diffop2::DiffOp;
use wolfes_core::exactcoeff::ParamPoly;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn jacobi(a in diffop(), b in diffop(), c in diffop()) {
        prop_assert!(jacobi_holds(&a, &b, &c));
    }

    #[test]
    fn compose_then_apply(a in diffop(), b in diffop(), f in poly2()) {
        prop_assert!(compose_matches_apply(&a, &b, &f));
    }

    #[test]
    fn text_and_json_round_trip(d in diffop()) {
        prop_assert!(round_trips(&d));
    }

    #[test]
    fn param_poly_display_parses_back(p in param_poly()) {
        prop_assert_eq!(p.to_string().parse::<ParamPoly>().unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn composition_is_associative(a in diffop(), b in diffop(), c in diffop()) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn commutator_is_antisymmetric(a in diffop(), b in diffop()) {
        prop_assert!((&a.commutator(&b) + &b.commutator(&a)).is_zero());
    }

    #[test]
    fn composition_distributes(a in diffop(), b in diffop(), c in diffop()) {
        let lhs = a.compose(&(&b + &c));
        let rhs = &a.compose(&b) + &a.compose(&c);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_commutes_with_composition(a in diffop(), b in diffop(), l in small_rational(), w in small_rational()) {
        let sub = |d: &DiffOp| d.substitute(Some(&l), None, Some(&w));
        prop_assert_eq!(sub(&a.compose(&b)), sub(&a).compose(&sub(&b)));
    }
}
