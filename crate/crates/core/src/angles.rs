//! Angle functions `X_o × X_o -> [0, pi]`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::functionals::{
    g_functional, lambda_of, q_functional, require_nonzero, require_strictly_convex, sine, star_pair,
};
use crate::measures::MeasureKind;
use crate::norm::NormedPlane;
use crate::orthogonality::left_normal;
use crate::vec2::{det_form, Vec2};

/// Rounding slack admitted outside `[-1, 1]` before an inverse
/// trigonometric argument counts as a domain error.
pub const ACOS_GUARD: f64 = 1e-9;

/// Sample count for the projection norm behind `ang_q`.
pub const Q_SAMPLES: usize = 4096;

fn guard(c: f64) -> Result<f64> {
    if c.is_nan() || c.abs() > 1.0 + ACOS_GUARD {
        return Err(Error::Domain(c));
    }
    Ok(c.clamp(-1.0, 1.0))
}

/// `arccos` with the guard band.
pub fn acos_guarded(c: f64) -> Result<f64> {
    Ok(guard(c)?.acos())
}

/// `arcsin` with the guard band.
pub fn asin_guarded(s: f64) -> Result<f64> {
    Ok(guard(s)?.asin())
}

/// Identifier of an angle function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AngleFn {
    /// Euclidean angle of the coordinate plane, ignoring the norm.
    EuclidRef,
    P,
    I,
    Thy,
    Q,
    S,
    B,
    G,
    Gs,
    Gi,
    Daf,
    Wilson,
    /// Angle measured by a Brass measure built on the plane.
    Measure(MeasureKind),
}

impl AngleFn {
    /// The eleven norm-derived angle functions.
    pub const NORM_BASED: [AngleFn; 11] = [
        AngleFn::P,
        AngleFn::I,
        AngleFn::Thy,
        AngleFn::Q,
        AngleFn::S,
        AngleFn::B,
        AngleFn::G,
        AngleFn::Gs,
        AngleFn::Gi,
        AngleFn::Daf,
        AngleFn::Wilson,
    ];

    pub fn name(self) -> String {
        match self {
            AngleFn::EuclidRef => "euclid_ref".into(),
            AngleFn::P => "p".into(),
            AngleFn::I => "i".into(),
            AngleFn::Thy => "thy".into(),
            AngleFn::Q => "q".into(),
            AngleFn::S => "s".into(),
            AngleFn::B => "b".into(),
            AngleFn::G => "g".into(),
            AngleFn::Gs => "gs".into(),
            AngleFn::Gi => "gi".into(),
            AngleFn::Daf => "daf".into(),
            AngleFn::Wilson => "wilson".into(),
            AngleFn::Measure(k) => format!("measure:{}", k.name()),
        }
    }

    /// Whether evaluation needs a strictly convex plane.
    pub fn needs_strict_convexity(self) -> bool {
        matches!(self, AngleFn::S | AngleFn::B)
    }
}

impl fmt::Display for AngleFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for AngleFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(kind) = s.strip_prefix("measure:") {
            return Ok(AngleFn::Measure(kind.parse()?));
        }
        if s == "euclid_ref" {
            return Ok(AngleFn::EuclidRef);
        }
        AngleFn::NORM_BASED
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown angle function `{s}`")))
    }
}

/// Evaluates a norm-derived angle function. Measure angles need a built
/// measure and live in [`crate::measures`].
pub fn angle(plane: &NormedPlane, f: AngleFn, x: Vec2, y: Vec2) -> Result<f64> {
    match f {
        AngleFn::EuclidRef => euclid_ref(x, y),
        AngleFn::P => ang_p(plane, x, y),
        AngleFn::I => ang_i(plane, x, y),
        AngleFn::Thy => ang_thy(plane, x, y),
        AngleFn::Q => ang_q(plane, x, y),
        AngleFn::S => ang_s(plane, x, y),
        AngleFn::B => ang_b(plane, x, y),
        AngleFn::G => ang_g(plane, x, y),
        AngleFn::Gs => ang_gs(plane, x, y),
        AngleFn::Gi => ang_gi(plane, x, y),
        AngleFn::Daf => ang_daf(plane, x, y),
        AngleFn::Wilson => ang_w(plane, x, y),
        AngleFn::Measure(_) => Err(Error::Unsupported(
            "measure angles need a built AngleMeasure".into(),
        )),
    }
}

fn check(x: Vec2, y: Vec2) -> Result<()> {
    require_nonzero(x, "angle x")?;
    require_nonzero(y, "angle y")
}

/// Euclidean angle between `x` and `y`.
pub fn euclid_ref(x: Vec2, y: Vec2) -> Result<f64> {
    check(x, y)?;
    Ok(det_form(x, y).abs().atan2(x.dot(y)))
}

/// P-angle: `arccos((||x||² + ||y||² - ||x-y||²) / (2 ||x|| ||y||))`.
pub fn ang_p(plane: &NormedPlane, x: Vec2, y: Vec2) -> Result<f64> {
    check(x, y)?;
    let (gx, gy, gd) = (plane.gauge(x), plane.gauge(y), plane.gauge(x - y));
    acos_guarded((gx * gx + gy * gy - gd * gd) / (2.0 * gx * gy))
}

/// I-angle: `arccos((||x+y||² - ||x-y||²) / (4 ||x|| ||y||))`.
pub fn ang_i(plane: &NormedPlane, x: Vec2, y: Vec2) -> Result<f64> {
    check(x, y)?;
    let (gs, gd) = (plane.gauge(x + y), plane.gauge(x - y));
    acos_guarded((gs * gs - gd * gd) / (4.0 * plane.gauge(x) * plane.gauge(y)))
}

/// Thy-angle: `arccos((||x̂+ŷ||² - ||x̂-ŷ||²) / 4)`.
pub fn ang_thy(plane: &NormedPlane, x: Vec2, y: Vec2) -> Result<f64> {
    check(x, y)?;
    let (u, w) = (x / plane.gauge(x), y / plane.gauge(y));
    let (gs, gd) = (plane.gauge(u + w), plane.gauge(u - w));
    acos_guarded(0.25 * (gs * gs - gd * gd))
}

/// q-angle: `arcsin(q(x, y))`, in `[0, pi/2]`.
pub fn ang_q(plane: &NormedPlane, x: Vec2, y: Vec2) -> Result<f64> {
    check(x, y)?;
    asin_guarded(q_functional(plane, x, y, Q_SAMPLES)?)
}

/// S-angle: `arcsin(s(x, y))` when `[x, b(y)] >= 0`, else `pi - arcsin(s)`.
pub fn ang_s(plane: &NormedPlane, x: Vec2, y: Vec2) -> Result<f64> {
    require_strictly_convex(plane, "ang_s")?;
    check(x, y)?;
    let a = asin_guarded(sine(plane, x, y)?)?;
    let b = left_normal(plane, y)?;
    Ok(if det_form(x, b) >= 0.0 { a } else { PI - a })
}

/// B-angle: `arccos(lambda(x, y) ||y|| / ||x|| · sgn(t**(x, y)))`.
pub fn ang_b(plane: &NormedPlane, x: Vec2, y: Vec2) -> Result<f64> {
    require_strictly_convex(plane, "ang_b")?;
    check(x, y)?;
    let sp = star_pair(plane, x, y)?;
    if sp.t_star_star == 0.0 {
        return Ok(FRAC_PI_2);
    }
    let c = lambda_of(&sp) * plane.gauge(y) / plane.gauge(x);
    acos_guarded(c.copysign(sp.t_star_star))
}

/// g-angle: `arccos(g(x, y) / (||x|| ||y||))`.
pub fn ang_g(plane: &NormedPlane, x: Vec2, y: Vec2) -> Result<f64> {
    check(x, y)?;
    acos_guarded(g_functional(plane, x, y) / (plane.gauge(x) * plane.gauge(y)))
}

/// Symmetrized g-angle: `arccos((g(x,y) + g(y,x)) / (2 ||x|| ||y||))`.
pub fn ang_gs(plane: &NormedPlane, x: Vec2, y: Vec2) -> Result<f64> {
    check(x, y)?;
    let num = g_functional(plane, x, y) + g_functional(plane, y, x);
    acos_guarded(num / (2.0 * plane.gauge(x) * plane.gauge(y)))
}

/// Isosceles g-angle:
/// `arccos((||x||² g(x,y) + ||y||² g(y,x)) / (||x|| ||y|| (||x||² + ||y||²)))`.
pub fn ang_gi(plane: &NormedPlane, x: Vec2, y: Vec2) -> Result<f64> {
    check(x, y)?;
    let (gx, gy) = (plane.gauge(x), plane.gauge(y));
    let num = gx * gx * g_functional(plane, x, y) + gy * gy * g_functional(plane, y, x);
    acos_guarded(num / (gx * gy * (gx * gx + gy * gy)))
}

/// D-A-F angle: `arccos(1 - ||x̂ - ŷ||² / 2)`.
pub fn ang_daf(plane: &NormedPlane, x: Vec2, y: Vec2) -> Result<f64> {
    check(x, y)?;
    let d = plane.gauge(x / plane.gauge(x) - y / plane.gauge(y));
    acos_guarded(1.0 - 0.5 * d * d)
}

/// Three-point cosine-law angle at `o` between `r x̂` and `ŷ`:
/// `arccos((r² + 1 - ||r x̂ - ŷ||²) / (2r))`.
pub fn three_point_angle(plane: &NormedPlane, x: Vec2, y: Vec2, r: f64) -> Result<f64> {
    check(x, y)?;
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::InvalidArgument(format!("ratio must be positive, got {r}")));
    }
    let (u, w) = (x / plane.gauge(x), y / plane.gauge(y));
    let d = plane.gauge(u * r - w);
    acos_guarded((r * r + 1.0 - d * d) / (2.0 * r))
}

/// Wilson angle along the rays through `x` and `y` at the ratio
/// `||x|| / ||y||` of the given points.
pub fn ang_w(plane: &NormedPlane, x: Vec2, y: Vec2) -> Result<f64> {
    check(x, y)?;
    three_point_angle(plane, x, y, plane.gauge(x) / plane.gauge(y))
}

/// Result of [`wilson_scan`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WilsonScan {
    /// Three-point angle at ratio 1, i.e. `ang_p(x̂, ŷ)`.
    pub value_at_equal_ratio: f64,
    /// Three-point angle at ratio `||x|| / ||y||`, i.e. `ang_p(x, y)`.
    pub value_at_natural_ratio: f64,
    /// `max - min` of the three-point angle over the ratio grid.
    pub spread: f64,
}

/// Scans the three-point angle over `ratio_grid`.
pub fn wilson_scan(plane: &NormedPlane, x: Vec2, y: Vec2, ratio_grid: &[f64]) -> Result<WilsonScan> {
    check(x, y)?;
    if ratio_grid.is_empty() {
        return Err(Error::InvalidArgument("wilson_scan needs a nonempty ratio grid".into()));
    }
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &r in ratio_grid {
        let a = three_point_angle(plane, x, y, r)?;
        lo = lo.min(a);
        hi = hi.max(a);
    }
    Ok(WilsonScan {
        value_at_equal_ratio: three_point_angle(plane, x, y, 1.0)?,
        value_at_natural_ratio: ang_w(plane, x, y)?,
        spread: hi - lo,
    })
}

/// Ratio grid `2^k` for `k = -4..=4`.
pub fn default_ratio_grid() -> Vec<f64> {
    (-4..=4).map(|k| 2f64.powi(k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norm::regular_polygon;
    use std::f64::consts::FRAC_PI_4;

    const E1: Vec2 = Vec2::new(1.0, 0.0);
    const E2: Vec2 = Vec2::new(0.0, 1.0);
    const D: Vec2 = Vec2::new(1.0, 1.0);

    fn hex() -> NormedPlane {
        regular_polygon(6, 0.0).unwrap()
    }

    fn h1() -> Vec2 {
        Vec2::new(0.5, 3f64.sqrt() / 2.0)
    }

    fn l4() -> NormedPlane {
        NormedPlane::lp(4.0).unwrap()
    }

    #[test]
    fn guard_band() {
        assert_eq!(acos_guarded(1.0 + 5e-10).unwrap(), 0.0);
        assert_eq!(acos_guarded(-1.0 - 5e-10).unwrap(), PI);
        assert!(matches!(acos_guarded(1.0 + 1e-8), Err(Error::Domain(_))));
        assert!(acos_guarded(f64::NAN).is_err());
    }

    #[test]
    fn p_angle_examples() {
        let h = hex();
        let a = ang_p(&h, E1, h1()).unwrap();
        let b = ang_p(&h, E1, -h1()).unwrap();
        assert!((a - PI / 3.0).abs() < 1e-12);
        assert!((b - PI).abs() < 1e-7);
        for alpha in [0.3, 2.0] {
            assert!(ang_p(&l4(), D, D * alpha).unwrap().abs() < 1e-7);
            assert!((ang_p(&l4(), D, D * -alpha).unwrap() - PI).abs() < 1e-7);
        }
        assert!((ang_p(&NormedPlane::euclidean(), E1, D).unwrap() - FRAC_PI_4).abs() < 1e-12);
    }

    #[test]
    fn i_and_thy_examples() {
        let h = hex();
        let want = 0.75f64.acos();
        assert!((ang_i(&h, E1, h1()).unwrap() - want).abs() < 1e-12);
        assert!((ang_thy(&h, E1, h1()).unwrap() - want).abs() < 1e-12);
        let (x, y) = (Vec2::new(0.3, -1.2), Vec2::new(2.0, 0.7));
        let s = ang_i(&l4(), x, -y).unwrap() + ang_i(&l4(), x, y).unwrap();
        assert!((s - PI).abs() < 1e-12);
        let s = ang_thy(&l4(), -x, y).unwrap() + ang_thy(&l4(), x, y).unwrap();
        assert!((s - PI).abs() < 1e-12);
        assert!((ang_i(&NormedPlane::euclidean(), E1, E2).unwrap() - FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn q_and_s_examples() {
        let l4 = l4();
        assert_eq!(ang_q(&l4, D, D * -2.0).unwrap(), 0.0);
        assert!((ang_q(&l4, E1, E2).unwrap() - FRAC_PI_2).abs() < 1e-7);
        assert!((ang_q(&l4, E1, D).unwrap() - 2f64.powf(-0.75).asin()).abs() < 1e-10);
        assert!((2f64.powf(-0.75).asin() - 0.636_772_482_7).abs() < 1e-10);

        assert!(ang_s(&l4, D, D * 3.0).unwrap().abs() < 1e-12);
        assert!((ang_s(&l4, D, D * -3.0).unwrap() - PI).abs() < 1e-12);
        let e = NormedPlane::euclidean();
        assert!((ang_s(&e, E1, D).unwrap() - FRAC_PI_4).abs() < 1e-12);
        assert!((ang_s(&e, Vec2::new(-1.0, 1.0), Vec2::new(1.0, -0.2)).unwrap()
            - euclid_ref(Vec2::new(-1.0, 1.0), Vec2::new(1.0, -0.2)).unwrap())
        .abs()
            < 1e-12);
        let a = ang_s(&l4, E1, D).unwrap();
        let base = sine(&l4, E1, D).unwrap().asin();
        assert!((a - base).abs() < 1e-12 || (a - (PI - base)).abs() < 1e-12);
        assert!(ang_s(&hex(), E1, D).is_err());
    }

    #[test]
    fn b_angle_examples() {
        let want = 2f64.powf(-0.75).acos();
        assert!((ang_b(&l4(), E1, D).unwrap() - want).abs() < 1e-12);
        assert!((want - 0.934_023_844_1).abs() < 1e-10);
        assert_eq!(ang_b(&l4(), E1, E2).unwrap(), FRAC_PI_2);
        assert!((ang_b(&l4(), D, D * -0.5).unwrap() - PI).abs() < 1e-7);
    }

    #[test]
    fn g_angle_examples() {
        let e = NormedPlane::euclidean();
        let (x, y) = (Vec2::new(0.4, 1.0), Vec2::new(-2.0, 0.5));
        let want = euclid_ref(x, y).unwrap();
        for f in [ang_g, ang_gs, ang_gi] {
            assert!((f(&e, x, y).unwrap() - want).abs() < 1e-12);
        }
        let l1 = NormedPlane::lp(1.0).unwrap();
        assert_eq!(ang_g(&l1, E1, E2).unwrap(), FRAC_PI_2);
        let a = ang_g(&l4(), x, y).unwrap();
        assert!((ang_g(&l4(), x * 2.0, y * -0.5).unwrap() - (PI - a)).abs() < 1e-12);
    }

    #[test]
    fn daf_examples() {
        assert!((ang_daf(&hex(), E1, h1()).unwrap() - PI / 3.0).abs() < 1e-12);
        let e = NormedPlane::euclidean();
        assert!((ang_daf(&e, E1, E2).unwrap() - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(ang_daf(&l4(), D, -D).unwrap(), PI);
    }

    #[test]
    fn wilson_examples() {
        let e = NormedPlane::euclidean();
        let s = wilson_scan(&e, Vec2::new(1.0, 0.2), Vec2::new(-0.3, 2.0), &[0.5, 1.0, 2.0]).unwrap();
        assert!(s.spread <= 1e-12);
        let (x, y) = (Vec2::new(3.0, 0.2), Vec2::new(0.5, 0.6));
        let s = wilson_scan(&l4(), x, y, &default_ratio_grid()).unwrap();
        assert!((s.value_at_natural_ratio - ang_p(&l4(), x, y).unwrap()).abs() < 1e-12);
        let unit = (l4().normalize(x).unwrap(), l4().normalize(y).unwrap());
        assert!((s.value_at_equal_ratio - ang_p(&l4(), unit.0, unit.1).unwrap()).abs() < 1e-12);
        assert!(s.spread > 1e-3);
    }

    #[test]
    fn names_round_trip() {
        for f in AngleFn::NORM_BASED {
            assert_eq!(f.name().parse::<AngleFn>().unwrap(), f);
        }
        let m: AngleFn = "measure:arclen".parse().unwrap();
        assert_eq!(m, AngleFn::Measure(MeasureKind::ArcLength));
        assert!("z".parse::<AngleFn>().is_err());
    }
}
