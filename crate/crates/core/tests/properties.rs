use abel_geometry::series::{integer, parse_rational, format_rational, Jet, Rational};
use num_traits::Zero;
use proptest::prelude::*;

const ORDER: usize = 6;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn jet() -> impl Strategy<Value = Jet> {
    prop::collection::vec(rational(), ORDER + 1).prop_map(Jet::new)
}

fn unit_jet() -> impl Strategy<Value = Jet> {
    jet().prop_filter("nonzero constant term", |j| !j.constant_term().is_zero())
}

/// Zero constant term, nonzero linear term.
fn shift_jet() -> impl Strategy<Value = Jet> {
    jet()
        .prop_filter("nonzero linear term", |j| !j.coeff(1).is_zero())
        .prop_map(|j| {
            let c = Jet::constant(j.constant_term().clone(), ORDER);
            j - c
        })
}

proptest! {
    #[test]
    fn ring_axioms(a in jet(), b in jet(), c in jet()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a - &a, Jet::zero(ORDER));
    }

    #[test]
    fn division_undoes_multiplication(a in jet(), b in unit_jet()) {
        prop_assert_eq!((&a * &b).checked_div(&b).unwrap(), a);
    }

    #[test]
    fn exp_and_log_invert(a in shift_jet()) {
        prop_assert_eq!(a.exp().unwrap().log().unwrap(), a);
    }

    #[test]
    fn reversion_inverts_composition(a in shift_jet()) {
        let inverse = a.revert().unwrap();
        prop_assert_eq!(a.compose(&inverse).unwrap(), Jet::variable(ORDER));
        prop_assert_eq!(inverse.compose(&a).unwrap(), Jet::variable(ORDER));
    }

    #[test]
    fn leibniz_rule(a in jet(), b in jet()) {
        let lhs = (&a * &b).differentiate();
        let rhs = &a.differentiate() * &b + &a * &b.differentiate();
        prop_assert!(lhs.agrees_with(&rhs));
    }

    #[test]
    fn integration_inverts_differentiation(a in jet()) {
        let back = a.integrate().differentiate();
        prop_assert!(back.agrees_with(&a));
    }

    #[test]
    fn rationals_round_trip(q in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }

    #[test]
    fn jets_round_trip_through_json(a in jet()) {
        let text = serde_json::to_string(&a).unwrap();
        let back: Jet = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn powers_agree_with_products(a in unit_jet()) {
        prop_assert_eq!(a.pow(3), &(&a * &a) * &a);
        prop_assert_eq!(a.powi(-2).unwrap(), (&a * &a).recip().unwrap());
        prop_assert_eq!(a.pow(0), Jet::one(ORDER));
        prop_assert_eq!(a.scale(&integer(2)), &a + &a);
    }
}
