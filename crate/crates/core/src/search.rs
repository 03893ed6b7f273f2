//! One-dimensional searches: golden-section minimization, slope bisection
//! for convex functions, and sign-change bisection.

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Iteration count for golden-section search. The bracket shrinks by
/// `0.618^200 < 1e-40`, far past double precision, so the result is the best
/// representable minimizer for unimodal objectives.
pub const GOLDEN_ITERS: usize = 200;

/// Result of a one-dimensional minimization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum {
    pub arg: f64,
    pub value: f64,
}

/// Golden-section search for the minimum of a unimodal `f` on `[lo, hi]`.
#[allow(clippy::neg_cmp_op_on_partial_ord)]
pub fn golden_section<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64) -> Minimum {
    let (mut a, mut b) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..GOLDEN_ITERS {
        if !(b - a > 0.0) || c <= a || d >= b {
            break;
        }
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let mut best = Minimum { arg: c, value: fc };
    for t in [d, a, b] {
        let v = f(t);
        if v < best.value {
            best = Minimum { arg: t, value: v };
        }
    }
    best
}

/// Minimizer of a convex function on `[lo, hi]` from its right derivative.
///
/// Returns the smallest `t` with `slope_plus(t) >= 0`, clamped to the
/// interval. The right derivative of a convex function is nondecreasing, so
/// plain bisection on its sign converges to machine precision.
pub fn convex_argmin<S: Fn(f64) -> f64>(slope_plus: S, lo: f64, hi: f64) -> f64 {
    if slope_plus(lo) >= 0.0 {
        return lo;
    }
    if slope_plus(hi) < 0.0 {
        return hi;
    }
    let (mut a, mut b) = (lo, hi);
    for _ in 0..256 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        if slope_plus(m) >= 0.0 {
            b = m;
        } else {
            a = m;
        }
    }
    0.5 * (a + b)
}

/// Zero of `f` on `[lo, hi]` by bisection, given `f(lo)` and `f(hi)` of
/// opposite sign (either may be zero). Returns `None` without a bracket.
pub fn bisect_root<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64) -> Option<f64> {
    let (mut a, mut b) = (lo, hi);
    let mut fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Some(a);
    }
    if fb == 0.0 {
        return Some(b);
    }
    if !(fa.signum() != fb.signum()) || fa.is_nan() || fb.is_nan() {
        return None;
    }
    for _ in 0..256 {
        let m = 0.5 * (a + b);
        if m == a || m == b {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return Some(m);
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Some(0.5 * (a + b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_finds_parabola_minimum() {
        let m = golden_section(|t| (t - 0.3) * (t - 0.3) + 2.0, -5.0, 5.0);
        assert!((m.arg - 0.3).abs() < 1e-7);
        assert!((m.value - 2.0).abs() < 1e-15);
    }

    #[test]
    fn golden_handles_v_shapes_and_endpoints() {
        let m = golden_section(|t: f64| (t - 1.25).abs(), -3.0, 3.0);
        assert!((m.arg - 1.25).abs() < 1e-14);
        let m = golden_section(|t| t, 0.0, 1.0);
        assert_eq!(m.arg, 0.0);
    }

    #[test]
    fn slope_bisection_is_exact() {
        // f(t) = (t - 1/3)^2, f'(t) = 2 (t - 1/3)
        let t = convex_argmin(|t| 2.0 * (t - 1.0 / 3.0), -4.0, 4.0);
        assert!((t - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(convex_argmin(|_| 1.0, -1.0, 1.0), -1.0);
        assert_eq!(convex_argmin(|_| -1.0, -1.0, 1.0), 1.0);
    }

    #[test]
    fn bisect_root_brackets() {
        let r = bisect_root(|t| t * t - 2.0, 0.0, 2.0).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-15);
        assert!(bisect_root(|t| t * t + 1.0, -1.0, 1.0).is_none());
    }
}
