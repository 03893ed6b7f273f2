use std::f64::consts::PI;

use minkowski_core::angles::{self, AngleFn};
use minkowski_core::functionals::{g_functional, star_pair, lambda_functional};
use minkowski_core::{regular_polygon, NormedPlane, Vec2};
use proptest::prelude::*;

fn planes() -> Vec<NormedPlane> {
    vec![
        NormedPlane::euclidean(),
        NormedPlane::lp(1.0).unwrap(),
        NormedPlane::lp(1.5).unwrap(),
        NormedPlane::lp(4.0).unwrap(),
        NormedPlane::lp(f64::INFINITY).unwrap(),
        regular_polygon(6, 0.0).unwrap(),
        regular_polygon(8, 0.3).unwrap(),
    ]
}

fn vec2() -> impl Strategy<Value = Vec2> {
    (0.0..std::f64::consts::TAU, -3.0f64..3.0).prop_map(|(t, r)| Vec2::from_angle(t) * r.exp())
}

proptest! {
    #[test]
    fn gauge_is_a_norm(x in vec2(), y in vec2(), a in -5.0f64..5.0, k in 0usize..7) {
        let p = &planes()[k];
        let (gx, gy) = (p.gauge(x), p.gauge(y));
        prop_assert!(gx > 0.0);
        prop_assert!((p.gauge(x * a) - a.abs() * gx).abs() <= 1e-12 * (1.0 + a.abs() * gx));
        prop_assert!(p.gauge(x + y) <= (gx + gy) * (1.0 + 1e-12));
        prop_assert!((p.gauge(-x) - gx).abs() <= 1e-13 * gx);
    }

    #[test]
    fn g_bounds(x in vec2(), y in vec2(), k in 0usize..7) {
        let p = &planes()[k];
        let (gx, gy) = (p.gauge(x), p.gauge(y));
        prop_assert!(g_functional(p, x, y).abs() <= gx * gy * (1.0 + 1e-12));
        prop_assert!((g_functional(p, x, x) - gx * gx).abs() <= 1e-12 * gx * gx);
    }

    #[test]
    fn star_pair_scales(x in vec2(), y in vec2(), a in 0.1f64..10.0, b in 0.1f64..10.0) {
        prop_assume!(x.dot(y).abs() < 0.999 * x.euclid_norm() * y.euclid_norm());
        let p = NormedPlane::lp(4.0).unwrap();
        let base = star_pair(&p, x, y).unwrap();
        let s = star_pair(&p, x * a, y * b).unwrap();
        let scale = a / b;
        prop_assert!((s.t_star - base.t_star * scale).abs() <= 1e-9 * (1.0 + base.t_star.abs() * scale));
        prop_assert!((s.t_star_star - base.t_star_star * scale).abs() <= 1e-9 * (1.0 + base.t_star_star.abs() * scale));
        let lam = lambda_functional(&p, x, y).unwrap();
        prop_assert!(lam <= p.gauge(x) / p.gauge(y) * (1.0 + 1e-12));
    }

    #[test]
    fn angles_lie_in_range(x in vec2(), y in vec2(), k in 0usize..7) {
        let p = &planes()[k];
        for f in AngleFn::NORM_BASED {
            if f == AngleFn::Q || (f.needs_strict_convexity() && !p.strictly_convex()) {
                continue;
            }
            let a = angles::angle(p, f, x, y).unwrap();
            prop_assert!((0.0..=PI).contains(&a), "{} gave {}", f, a);
        }
    }

    #[test]
    fn scale_free_angles_are_homogeneous(x in vec2(), y in vec2(), a in 0.1f64..10.0, b in 0.1f64..10.0) {
        let p = NormedPlane::lp(4.0).unwrap();
        for f in [AngleFn::Thy, AngleFn::Daf, AngleFn::S, AngleFn::B] {
            let a0 = angles::angle(&p, f, x, y).unwrap();
            let a1 = angles::angle(&p, f, x * a, y * b).unwrap();
            prop_assert!((a0 - a1).abs() < 1e-7, "{}: {} vs {}", f, a0, a1);
        }
    }

    #[test]
    fn thy_mixed_sign_identity(x in vec2(), y in vec2(), k in 0usize..7) {
        let p = &planes()[k];
        let lhs = angles::ang_thy(p, -x, y).unwrap();
        prop_assert!((lhs - (PI - angles::ang_thy(p, x, y).unwrap())).abs() < 1e-12);
    }
}
