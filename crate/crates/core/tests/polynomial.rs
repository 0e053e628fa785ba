mod common;

use std::sync::Arc;

use common::arb_poly;
use dioph_reduce::poly::{parse_poly, Degree, Polynomial, Rational, VarRegistry};
use proptest::prelude::*;

fn xyz() -> Arc<VarRegistry> {
    VarRegistry::new(["x", "y", "z"]).unwrap()
}

fn arb_point(len: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-5i64..=5, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into())), len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn degree_is_additive(p in arb_poly(xyz(), 4, 4), q in arb_poly(xyz(), 4, 4)) {
        let product = &p * &q;
        match (p.total_degree(), q.total_degree()) {
            (Degree::Finite(a), Degree::Finite(b)) => prop_assert_eq!(product.total_degree(), Degree::Finite(a + b)),
            _ => prop_assert!(product.is_zero()),
        }
    }

    #[test]
    fn homogenize_is_homogeneous_and_invertible(p in arb_poly(xyz(), 5, 4)) {
        prop_assume!(!p.is_zero());
        let h = p.homogenize("w").unwrap();
        prop_assert!(h.is_homogeneous());
        prop_assert_eq!(h.total_degree(), p.total_degree());
        prop_assert_eq!(h.dehomogenize("w").unwrap(), p);
    }

    #[test]
    fn homogenized_evaluates_at_one(p in arb_poly(xyz(), 5, 4), pt in arb_point(3)) {
        prop_assume!(!p.is_zero());
        let h = p.homogenize("w").unwrap();
        let mut lifted = pt.clone();
        lifted.push(Rational::from_integer(1.into()));
        prop_assert_eq!(h.evaluate(&lifted).unwrap(), p.evaluate(&pt).unwrap());
    }

    #[test]
    fn render_then_parse_is_identity(p in arb_poly(xyz(), 6, 5)) {
        let text = p.to_string();
        prop_assert_eq!(parse_poly(&text, &xyz()).unwrap(), p);
    }

    #[test]
    fn mixed_partials_commute(p in arb_poly(xyz(), 6, 5)) {
        for a in ["x", "y", "z"] {
            for b in ["x", "y", "z"] {
                let ab = p.partial_derivative(a).unwrap().partial_derivative(b).unwrap();
                let ba = p.partial_derivative(b).unwrap().partial_derivative(a).unwrap();
                prop_assert_eq!(ab, ba);
            }
        }
    }

    #[test]
    fn evaluation_is_a_ring_map(p in arb_poly(xyz(), 4, 3), q in arb_poly(xyz(), 4, 3), pt in arb_point(3)) {
        let (pv, qv) = (p.evaluate(&pt).unwrap(), q.evaluate(&pt).unwrap());
        prop_assert_eq!((&p + &q).evaluate(&pt).unwrap(), &pv + &qv);
        prop_assert_eq!((&p * &q).evaluate(&pt).unwrap(), &pv * &qv);
        prop_assert_eq!((-&p).evaluate(&pt).unwrap(), -pv);
    }

    #[test]
    fn leibniz_rule(p in arb_poly(xyz(), 4, 3), q in arb_poly(xyz(), 4, 3)) {
        let lhs = (&p * &q).partial_derivative("y").unwrap();
        let rhs = &(&p.partial_derivative("y").unwrap() * &q) + &(&p * &q.partial_derivative("y").unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn fixed_renderings() {
    let r = xyz();
    for (input, rendered) in [
        ("(x + y)^2", "x^2 + 2*x*y + y^2"),
        ("z - x^3 + 1/2", "-x^3 + z + 1/2"),
        ("-(x - 1)", "-x + 1"),
        ("x - x", "0"),
    ] {
        assert_eq!(parse_poly(input, &r).unwrap().to_string(), rendered);
    }
}

#[test]
fn mismatched_registries_are_rejected() {
    let a = Polynomial::var(&xyz(), "x").unwrap();
    let b = Polynomial::var(&VarRegistry::new(["x"]).unwrap(), "x").unwrap();
    assert!(a.try_add(&b).is_err());
    assert!(a.try_mul(&b).is_err());
}
