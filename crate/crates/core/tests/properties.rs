use hh3_core::biharmonic::bitension_from_jet;
use hh3_core::connection::{curvature, riemann_christoffel};
use hh3_core::frame::{cross_identity_defects, det3, inner, mixed, Boost, FrameVector};
use hh3_core::frenet::{frenet_jet, ANALYTIC_TOL};
use hh3_core::generators::{Causality, ConstantAngleHelix};
use hh3_core::verifier::scaled_cross_defects;
use proptest::prelude::*;

fn real_vector() -> impl Strategy<Value = FrameVector> {
    prop::array::uniform3(-10.0..10.0f64).prop_map(|[a, b, c]| FrameVector::new(a, b, c))
}

fn int_vector() -> impl Strategy<Value = FrameVector> {
    prop::array::uniform3(-10i32..=10).prop_map(|[a, b, c]| FrameVector::new(a.into(), b.into(), c.into()))
}

fn helix() -> impl Strategy<Value = ConstantAngleHelix> {
    (any::<bool>(), -1.0..1.0f64, 0.3..3.0f64, any::<bool>(), -1.0..1.0f64, prop::array::uniform3(-1.0..1.0f64))
        .prop_filter_map("slope near the geodesic value", |(spacelike, shape, a, neg, phase, offsets)| {
            let (causality, shape) = if spacelike {
                (Causality::Spacelike, shape)
            } else {
                (Causality::Timelike, if shape >= 0.0 { shape + 0.3 } else { shape - 0.3 })
            };
            let slope = if neg { -a } else { a };
            let h = ConstantAngleHelix::new(causality, shape, slope, phase, offsets).ok()?;
            (h.curvature_coefficient().abs() > 0.1).then_some(h)
        })
}

fn scale(vs: &[FrameVector]) -> f64 {
    vs.iter().map(|v| v.max_abs()).fold(1.0, f64::max)
}

proptest! {
    #[test]
    fn cross_identities_on_reals(x in real_vector(), y in real_vector(), z in real_vector(),
                                 a in -10.0..10.0f64, b in -10.0..10.0f64) {
        for d in scaled_cross_defects(x, y, z, a, b) {
            prop_assert!(d <= 1e-12, "{d}");
        }
    }

    #[test]
    fn cross_identities_exact_on_integers(x in int_vector(), y in int_vector(), z in int_vector(),
                                          a in -10i32..=10, b in -10i32..=10) {
        prop_assert_eq!(cross_identity_defects(x, y, z, a as f64, b as f64), [0.0; 6]);
        prop_assert_eq!(mixed(x, y, z), -det3(x, y, z));
    }

    #[test]
    fn curvature_symmetries(x in real_vector(), y in real_vector(), z in real_vector(), w in real_vector()) {
        let tol = 1e-12 * scale(&[x, y, z, w]).powi(4);
        let r = riemann_christoffel(x, y, z, w);
        prop_assert!((r + riemann_christoffel(y, x, z, w)).abs() <= tol);
        prop_assert!((r + riemann_christoffel(x, y, w, z)).abs() <= tol);
        prop_assert!((r - riemann_christoffel(z, w, x, y)).abs() <= tol);
    }

    #[test]
    fn first_bianchi_identity(x in real_vector(), y in real_vector(), z in real_vector()) {
        let sum = curvature(x, y, z) + curvature(y, z, x) + curvature(z, x, y);
        prop_assert!(sum.max_abs() <= 1e-12 * scale(&[x, y, z]).powi(3));
    }

    #[test]
    fn boosts_are_isometries(x in real_vector(), y in real_vector(), angle in -3.0..3.0f64) {
        let b = Boost::new(angle);
        let tol = 1e-12 * scale(&[x, y]).powi(2) * angle.cosh().powi(2);
        prop_assert!((inner(b.apply(x), b.apply(y)) - inner(x, y)).abs() <= tol);
        prop_assert!((b.inverse().apply(b.apply(x)) - x).max_abs() <= 1e-12 * scale(&[x]) * angle.cosh().powi(2));
    }

    #[test]
    fn horizontality_form_is_twice_t3(h in helix(), s in -1.5..1.5f64) {
        let c = h.curve().unwrap();
        let w = c.horizontality_form(s).unwrap();
        prop_assert!((w - 2.0 * h.vertical()).abs() <= 1e-9 * (1.0 + w.abs()), "{w} vs {}", 2.0 * h.vertical());
    }

    #[test]
    fn helix_frenet_data(h in helix(), s in -1.5..1.5f64) {
        let f = frenet_jet(&h.frame_curve(), s, ANALYTIC_TOL).unwrap().data;
        prop_assert_eq!(f.eps_product(), 1);
        prop_assert!((f.k1 - h.expected_k1()).abs() <= 1e-9 * (1.0 + f.k1));
        prop_assert!((f.k2 - h.expected_k2()).abs() <= 1e-9 * (1.0 + f.k2.abs()));
        prop_assert!((f.b3() - h.expected_b3()).abs() <= 1e-9);
        prop_assert!(f.n3().abs() <= 1e-12);
    }

    #[test]
    fn bitension_commutes_with_boosts(h in helix(), s in -1.0..1.0f64, angle in -2.0..2.0f64) {
        let jet = h.tangent_jet(s);
        let b = Boost::new(angle);
        let lhs = bitension_from_jet(&jet.boosted(b));
        let rhs = b.apply(bitension_from_jet(&jet));
        prop_assert!((lhs - rhs).max_abs() <= 1e-9 * (1.0 + rhs.max_abs()));
    }
}
