//! Scalar functionals behind the angle functions: the sine `s`, the
//! projection functional `q`, the chord parameters `t*`, `t**`, `lambda`,
//! and the semi-inner product `g`.

use std::f64::consts::TAU;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::norm::{NormedPlane, Side};
use crate::search::{bisect_root, convex_argmin, golden_section, Minimum};
use crate::vec2::{dependent, det_form, Vec2};

/// Relative slack below `||x||` within which `inf_t ||x - t y||` counts as
/// no decrease at all, so that `x ⊣_B y` and `t** = 0`.
pub const BIRKHOFF_REL_TOL: f64 = 1e-15;

pub(crate) fn require_nonzero(v: Vec2, what: &'static str) -> Result<()> {
    if !v.is_finite() {
        return Err(Error::NonFinite);
    }
    if v.is_zero() {
        return Err(Error::ZeroVector(what));
    }
    Ok(())
}

pub(crate) fn require_strictly_convex(plane: &NormedPlane, what: &'static str) -> Result<()> {
    if plane.strictly_convex() {
        Ok(())
    } else {
        Err(Error::NotStrictlyConvex(what))
    }
}

/// `inf_t ||x + t y||` by golden-section search on `|t| <= 2||x||/||y||`.
pub fn min_along_line(plane: &NormedPlane, x: Vec2, y: Vec2) -> Minimum {
    let bound = 2.0 * plane.gauge(x) / plane.gauge(y);
    golden_section(|t| plane.gauge(x + y * t), -bound, bound)
}

/// Sine function `s(x, y) = inf_t ||x + t y|| / ||x||`, through the closed
/// form `|[x, y]| / (||y||_a ||x||)`.
pub fn sine(plane: &NormedPlane, x: Vec2, y: Vec2) -> Result<f64> {
    require_nonzero(x, "sine x")?;
    require_nonzero(y, "sine y")?;
    let s = det_form(x, y).abs() / (plane.antinorm(y) * plane.gauge(x));
    Ok(s.min(1.0))
}

/// Sine function by direct minimization along the line `x + t y`.
pub fn sine_by_minimization(plane: &NormedPlane, x: Vec2, y: Vec2) -> Result<f64> {
    require_nonzero(x, "sine x")?;
    require_nonzero(y, "sine y")?;
    Ok(min_along_line(plane, x, y).value / plane.gauge(x))
}

/// `q(x, y) = 1 / ||proj_{x,y}||`, where `proj_{x,y}` projects onto the line
/// through `x` along `y`. The operator norm is the max of `||proj z||` over
/// `n_samples` unit-circle points, polished by golden-section search between
/// the neighbours of the best sample.
pub fn q_functional(plane: &NormedPlane, x: Vec2, y: Vec2, n_samples: usize) -> Result<f64> {
    require_nonzero(x, "q x")?;
    require_nonzero(y, "q y")?;
    if n_samples == 0 {
        return Err(Error::InvalidArgument("q_functional needs n_samples > 0".into()));
    }
    if dependent(x, y, 1e-12) {
        return Ok(0.0);
    }
    let xy = det_form(x, y);
    let gx = plane.gauge(x);
    // z = a x + b y  =>  a = [z, y] / [x, y]
    let proj = |theta: f64| (det_form(plane.unit_circle_point(theta), y) / xy).abs() * gx;
    let step = TAU / n_samples as f64;
    let (k_best, sampled) = (0..n_samples)
        .map(|k| (k, proj(step * k as f64)))
        .fold((0, f64::NEG_INFINITY), |best, c| if c.1 > best.1 { c } else { best });
    let centre = step * k_best as f64;
    let refined = golden_section(|t| -proj(t), centre - step, centre + step);
    Ok(1.0 / sampled.max(-refined.value))
}

/// Minimizer `t*` of `t -> ||x - t y||` and the second intersection `t**` of
/// that line with the sphere of radius `||x||`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StarPair {
    pub t_star: f64,
    pub t_star_star: f64,
    /// `inf_t ||x - t y||`.
    pub min_value: f64,
}

/// Computes `t*` and `t**`. Requires a strictly convex plane.
///
/// `t*` comes from bisection on the sign of the exact right derivative of the
/// convex map `t -> ||x - t y||`; `t**` is the nonzero root of
/// `||x - t y|| - ||x||`, bracketed by `[t*, sgn(t*) 3||x||/||y||]`. In the
/// Birkhoff case `t** = 0`.
pub fn star_pair(plane: &NormedPlane, x: Vec2, y: Vec2) -> Result<StarPair> {
    require_strictly_convex(plane, "star_pair")?;
    require_nonzero(x, "star_pair x")?;
    require_nonzero(y, "star_pair y")?;
    let gx = plane.gauge(x);
    let bound = 2.0 * gx / plane.gauge(y);
    let slope = |t: f64| plane.directional_derivative(x - y * t, -y, Side::Plus);
    let t_star = convex_argmin(slope, -bound, bound);
    let min_value = plane.gauge(x - y * t_star);
    if min_value >= gx * (1.0 - BIRKHOFF_REL_TOL) {
        return Ok(StarPair {
            t_star,
            t_star_star: 0.0,
            min_value,
        });
    }
    let far = (1.5 * bound).copysign(t_star);
    let t_star_star = bisect_root(|t| plane.gauge(x - y * t) - gx, t_star, far).ok_or_else(|| {
        Error::NoBracket(format!("t** for x = {x:?}, y = {y:?}"))
    })?;
    Ok(StarPair {
        t_star,
        t_star_star,
        min_value,
    })
}

/// `lambda(x, y) = min(|t*|, |t** - t*|)`.
pub fn lambda_functional(plane: &NormedPlane, x: Vec2, y: Vec2) -> Result<f64> {
    let sp = star_pair(plane, x, y)?;
    Ok(lambda_of(&sp))
}

pub(crate) fn lambda_of(sp: &StarPair) -> f64 {
    sp.t_star.abs().min((sp.t_star_star - sp.t_star).abs())
}

/// Semi-inner product `g(x, y) = ||x|| (tau_-(x, y) + tau_+(x, y)) / 2` from
/// the exact one-sided derivatives of the norm.
pub fn g_functional(plane: &NormedPlane, x: Vec2, y: Vec2) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let lo = plane.directional_derivative(x, y, Side::Minus);
    let hi = plane.directional_derivative(x, y, Side::Plus);
    0.5 * plane.gauge(x) * (lo + hi)
}

/// `g` from one-sided difference quotients at steps `1e-4` and `5e-5`,
/// combined by Richardson extrapolation.
///
/// Works for any gauge; inputs are normalized first using
/// `g(a x, b y) = a b g(x, y)`.
pub fn g_functional_fd(plane: &NormedPlane, x: Vec2, y: Vec2) -> f64 {
    if x.is_zero() || y.is_zero() {
        return 0.0;
    }
    let (gx, gy) = (plane.gauge(x), plane.gauge(y));
    let (u, w) = (x / gx, y / gy);
    let quotient = |h: f64| (plane.gauge(u + w * h) - 1.0) / h;
    let richardson = |h: f64| 2.0 * quotient(h / 2.0) - quotient(h);
    let h = 1e-4;
    let tau_plus = richardson(h);
    let tau_minus = richardson(-h);
    gx * gy * 0.5 * (tau_minus + tau_plus)
}

/// `||x+y||^4 - ||x-y||^4 - 8 (||x||^2 g(x,y) + ||y||^2 g(y,x))`.
pub fn quasi_inner_residual(plane: &NormedPlane, x: Vec2, y: Vec2) -> f64 {
    let (gx, gy) = (plane.gauge(x), plane.gauge(y));
    let lhs = plane.gauge(x + y).powi(4) - plane.gauge(x - y).powi(4);
    lhs - 8.0 * (gx * gx * g_functional(plane, x, y) + gy * gy * g_functional(plane, y, x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l4() -> NormedPlane {
        NormedPlane::lp(4.0).unwrap()
    }

    const X: Vec2 = Vec2::new(1.0, 0.0);
    const Y: Vec2 = Vec2::new(1.0, 1.0);

    #[test]
    fn sine_examples() {
        let e = NormedPlane::euclidean();
        assert_eq!(sine(&e, X, X).unwrap(), 0.0);
        assert!((sine(&e, X, Vec2::new(0.0, 1.0)).unwrap() - 1.0).abs() < 1e-15);
        // min_t ((1-t)^4 + t^4)^(1/4) = 2^(-3/4) at t = 1/2
        let want = 2f64.powf(-0.75);
        assert!((sine(&l4(), X, Y).unwrap() - want).abs() < 1e-15);
        assert!((sine_by_minimization(&l4(), X, Y).unwrap() - want).abs() < 1e-14);
        assert!(sine(&e, Vec2::ZERO, Y).is_err());
    }

    #[test]
    fn q_examples() {
        let e = NormedPlane::euclidean();
        assert_eq!(q_functional(&e, X, X * -3.0, 64).unwrap(), 0.0);
        assert!((q_functional(&e, X, Vec2::new(0.0, 1.0), 4096).unwrap() - 1.0).abs() < 1e-12);
        let q = q_functional(&l4(), X, Y, 4096).unwrap();
        assert!((q - 2f64.powf(-0.75)).abs() < 1e-12);
    }

    #[test]
    fn star_pair_examples() {
        let sp = star_pair(&l4(), X, Y).unwrap();
        assert!((sp.t_star - 0.5).abs() < 1e-12);
        // 2t^4 - 4t^3 + 6t^2 - 4t = 2t(t-1)(t^2-t+2): nonzero real root t = 1
        assert!((sp.t_star_star - 1.0).abs() < 1e-12);
        assert!((lambda_functional(&l4(), X, Y).unwrap() - 0.5).abs() < 1e-12);

        let e = NormedPlane::euclidean();
        let sp = star_pair(&e, X, Vec2::new(0.0, 1.0)).unwrap();
        assert!(sp.t_star.abs() < 1e-15 && sp.t_star_star == 0.0);
        assert!(lambda_functional(&e, X, Vec2::new(0.0, 1.0)).unwrap() < 1e-15);

        for alpha in [-3.0, -0.5, 0.25, 2.0] {
            let sp = star_pair(&l4(), Y, Y * alpha).unwrap();
            assert!((sp.t_star - 1.0 / alpha).abs() < 1e-12, "alpha {alpha}");
            assert!((sp.t_star_star - 2.0 / alpha).abs() < 1e-12, "alpha {alpha}");
        }
        assert!((lambda_functional(&l4(), Y, Y).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn star_pair_rejects_polygons() {
        let hex = crate::norm::regular_polygon(6, 0.0).unwrap();
        assert!(matches!(star_pair(&hex, X, Y), Err(Error::NotStrictlyConvex(_))));
    }

    #[test]
    fn g_examples() {
        let e = NormedPlane::euclidean();
        assert!((g_functional(&e, Vec2::new(1.0, 2.0), Vec2::new(3.0, 4.0)) - 11.0).abs() < 1e-13);
        let l1 = NormedPlane::lp(1.0).unwrap();
        assert_eq!(g_functional(&l1, X, Vec2::new(0.0, 1.0)), 0.0);
        assert!((g_functional(&l4(), X, Y) - 1.0).abs() < 1e-15);
        let v = Vec2::new(0.3, -2.0);
        assert!((g_functional(&l4(), v, v) - l4().gauge(v).powi(2)).abs() < 1e-13);
        assert_eq!(g_functional(&l4(), Vec2::ZERO, Y), 0.0);
    }

    #[test]
    fn g_matches_finite_differences_on_smooth_planes() {
        let l4 = l4();
        for k in 0..40 {
            let x = Vec2::from_angle(0.31 * k as f64) * 1.7;
            let y = Vec2::from_angle(1.0 + 0.77 * k as f64) * 0.6;
            let exact = g_functional(&l4, x, y);
            let approx = g_functional_fd(&l4, x, y);
            assert!((exact - approx).abs() < 1e-7, "k {k}: {exact} vs {approx}");
        }
    }

    #[test]
    fn quasi_inner_residual_examples() {
        let e = NormedPlane::euclidean();
        for k in 0..20 {
            let x = Vec2::from_angle(k as f64) * (1.0 + k as f64 * 0.1);
            let y = Vec2::from_angle(2.0 * k as f64 + 0.5);
            assert!(quasi_inner_residual(&e, x, y).abs() < 1e-9);
        }
        assert_eq!(quasi_inner_residual(&l4(), Vec2::ZERO, Y), 0.0);
        // ||(2,1)||^4 - ||(0,-1)||^4 - 8 (1 * 1 + sqrt2 * g(y, x)), g(y,x) = 2^(1/4) * 2^(-3/4)
        let want = 17.0 - 1.0 - 8.0 * (1.0 + 2f64.sqrt() * 2f64.powf(-0.5));
        assert!((quasi_inner_residual(&l4(), X, Y) - want).abs() < 1e-12);
    }
}
