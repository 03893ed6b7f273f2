//! Adaptive Gauss-Kronrod (7/15) quadrature over panels.
//!
//! Integrands in this crate are piecewise smooth with known break points
//! (polygon vertices, axis crossings of `l_p` norms). Callers split at those
//! points so each panel sees a smooth function.

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];

/// Gauss weights for the nodes `XGK[1], XGK[3], XGK[5], XGK[7]`.
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

const MAX_DEPTH: u32 = 48;

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = h * XGK[j];
        let s = f(c - dx) + f(c + dx);
        kron += WGK[j] * s;
        if j % 2 == 1 {
            gauss += WG[j / 2] * s;
        }
    }
    (kron * h, ((kron - gauss) * h).abs())
}

fn adapt<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64, depth: u32) -> Result<f64> {
    let (k, err) = gk15(f, a, b);
    if !k.is_finite() {
        return Err(Error::Quadrature { lo: a, hi: b });
    }
    if err <= tol || err <= 64.0 * f64::EPSILON * k.abs() {
        return Ok(k);
    }
    let m = 0.5 * (a + b);
    if depth >= MAX_DEPTH || m <= a || m >= b {
        return Err(Error::Quadrature { lo: a, hi: b });
    }
    Ok(adapt(f, a, m, 0.5 * tol, depth + 1)? + adapt(f, m, b, 0.5 * tol, depth + 1)?)
}

/// Integrates `f` over `[a, b]` to absolute tolerance `tol`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    adapt(&f, a, b, tol, 0)
}

/// Integrates over consecutive panels `[p[0], p[1]], [p[1], p[2]], ...`,
/// splitting the tolerance in proportion to panel length.
pub fn integrate_panels<F: Fn(f64) -> f64>(f: F, points: &[f64], tol: f64) -> Result<f64> {
    if points.len() < 2 {
        return Ok(0.0);
    }
    let span = points[points.len() - 1] - points[0];
    let mut total = 0.0;
    for w in points.windows(2) {
        let share = if span > 0.0 { (w[1] - w[0]) / span } else { 1.0 };
        total += adapt(&f, w[0], w[1], (tol * share).max(1e-300), 0)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn polynomials_are_exact() {
        let v = integrate(|x| x.powi(6) - 3.0 * x * x, -1.0, 2.0, 1e-14).unwrap();
        let exact = (2f64.powi(7) + 1.0) / 7.0 - (8.0 + 1.0);
        assert!((v - exact).abs() < 1e-12);
    }

    #[test]
    fn smooth_periodic_integrand() {
        let v = integrate(|t: f64| 1.0 / (2.0 + t.cos()), 0.0, 2.0 * PI, 1e-13).unwrap();
        assert!((v - 2.0 * PI / 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn kinked_integrand_with_break_points() {
        let f = |t: f64| (t - 0.3).abs();
        let v = integrate_panels(f, &[0.0, 0.3, 1.0], 1e-14).unwrap();
        assert!((v - (0.045 + 0.245)).abs() < 1e-14);
    }

    #[test]
    fn nonfinite_integrand_fails() {
        assert!(integrate(|t: f64| 1.0 / t, -1.0, 1.0, 1e-10).is_err());
    }
}
