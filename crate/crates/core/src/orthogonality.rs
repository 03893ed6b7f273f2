//! Orthogonality relations as signed residuals, and the left Birkhoff normal.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::functionals::{g_functional, min_along_line, require_nonzero, require_strictly_convex};
use crate::norm::NormedPlane;
use crate::search::bisect_root;
use crate::vec2::{det_form, Vec2};

/// Default tolerance for predicates evaluated in closed form.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Default tolerance when a numerical search sits inside the predicate.
pub const SEARCH_TOL: f64 = 1e-6;

/// Signed defect of an orthogonality identity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrthoResult {
    pub residual: f64,
    pub orthogonal: bool,
    pub tol: f64,
}

impl OrthoResult {
    fn two_sided(residual: f64, tol: f64) -> Self {
        Self {
            residual,
            orthogonal: residual.abs() <= tol,
            tol,
        }
    }
}

/// Every orthogonality relation, for generic dispatch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrthoKind {
    Birkhoff,
    Isosceles,
    Pythagorean,
    Singer,
    Roberts,
    Daf,
    G,
    GSymmetric,
    GIsosceles,
}

impl OrthoKind {
    pub const ALL: [OrthoKind; 9] = [
        OrthoKind::Birkhoff,
        OrthoKind::Isosceles,
        OrthoKind::Pythagorean,
        OrthoKind::Singer,
        OrthoKind::Roberts,
        OrthoKind::Daf,
        OrthoKind::G,
        OrthoKind::GSymmetric,
        OrthoKind::GIsosceles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OrthoKind::Birkhoff => "birkhoff",
            OrthoKind::Isosceles => "isosceles",
            OrthoKind::Pythagorean => "pythagorean",
            OrthoKind::Singer => "singer",
            OrthoKind::Roberts => "roberts",
            OrthoKind::Daf => "daf",
            OrthoKind::G => "g",
            OrthoKind::GSymmetric => "g_symmetric",
            OrthoKind::GIsosceles => "g_isosceles",
        }
    }

    pub fn default_tol(self) -> f64 {
        match self {
            OrthoKind::Birkhoff => SEARCH_TOL,
            _ => DEFAULT_TOL,
        }
    }
}

impl fmt::Display for OrthoKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrthoKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OrthoKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown orthogonality type `{s}`")))
    }
}

/// Evaluates the relation `kind` on `(x, y)`. Roberts uses [`roberts_grid`].
pub fn evaluate(plane: &NormedPlane, kind: OrthoKind, x: Vec2, y: Vec2, tol: f64) -> Result<OrthoResult> {
    if !x.is_finite() || !y.is_finite() {
        return Err(Error::NonFinite);
    }
    Ok(match kind {
        OrthoKind::Birkhoff => birkhoff(plane, x, y, tol)?,
        OrthoKind::Isosceles => isosceles(plane, x, y, tol),
        OrthoKind::Pythagorean => pythagorean(plane, x, y, tol),
        OrthoKind::Singer => singer(plane, x, y, tol),
        OrthoKind::Roberts => roberts(plane, x, y, &roberts_grid(), tol)?,
        OrthoKind::Daf => daf_orthogonal(plane, x, y, tol),
        OrthoKind::G => g_orthogonal(plane, x, y, tol),
        OrthoKind::GSymmetric => g_symmetric(plane, x, y, tol),
        OrthoKind::GIsosceles => g_isosceles(plane, x, y, tol),
    })
}

/// `x ⊣_B y`: residual `||x|| - inf_t ||x + t y|| >= 0`.
pub fn birkhoff(plane: &NormedPlane, x: Vec2, y: Vec2, tol: f64) -> Result<OrthoResult> {
    require_nonzero(x, "birkhoff x")?;
    require_nonzero(y, "birkhoff y")?;
    let gx = plane.gauge(x);
    let m = min_along_line(plane, x, y).value.min(gx);
    let residual = gx - m;
    Ok(OrthoResult {
        residual,
        orthogonal: residual <= tol,
        tol,
    })
}

/// `||x + y|| - ||x - y||`.
pub fn isosceles(plane: &NormedPlane, x: Vec2, y: Vec2, tol: f64) -> OrthoResult {
    OrthoResult::two_sided(plane.gauge(x + y) - plane.gauge(x - y), tol)
}

/// `||x||^2 + ||y||^2 - ||x - y||^2`.
pub fn pythagorean(plane: &NormedPlane, x: Vec2, y: Vec2, tol: f64) -> OrthoResult {
    let (gx, gy, gd) = (plane.gauge(x), plane.gauge(y), plane.gauge(x - y));
    OrthoResult::two_sided(gx * gx + gy * gy - gd * gd, tol)
}

fn unit_pair(plane: &NormedPlane, x: Vec2, y: Vec2) -> Option<(Vec2, Vec2)> {
    let (gx, gy) = (plane.gauge(x), plane.gauge(y));
    if gx * gy == 0.0 {
        None
    } else {
        Some((x / gx, y / gy))
    }
}

/// `||x̂ - ŷ|| - ||x̂ + ŷ||`; pairs with a zero vector are orthogonal.
pub fn singer(plane: &NormedPlane, x: Vec2, y: Vec2, tol: f64) -> OrthoResult {
    match unit_pair(plane, x, y) {
        None => OrthoResult::two_sided(0.0, tol),
        Some((u, w)) => OrthoResult::two_sided(plane.gauge(u - w) - plane.gauge(u + w), tol),
    }
}

/// The grid `{±2^k : k = -20..20}` on which Roberts orthogonality is tested.
pub fn roberts_grid() -> Vec<f64> {
    (-20..=20)
        .flat_map(|k| {
            let t = 2f64.powi(k);
            [t, -t]
        })
        .collect()
}

/// `max_t |‖x + t y‖ - ‖x - t y‖|` over `t_grid`.
pub fn roberts(plane: &NormedPlane, x: Vec2, y: Vec2, t_grid: &[f64], tol: f64) -> Result<OrthoResult> {
    if t_grid.is_empty() {
        return Err(Error::InvalidArgument("roberts needs a nonempty t grid".into()));
    }
    let residual = t_grid
        .iter()
        .map(|&t| (plane.gauge(x + y * t) - plane.gauge(x - y * t)).abs())
        .fold(0.0, f64::max);
    Ok(OrthoResult::two_sided(residual, tol))
}

/// `||x̂ - ŷ|| - sqrt(2)`; pairs with a zero vector are orthogonal.
pub fn daf_orthogonal(plane: &NormedPlane, x: Vec2, y: Vec2, tol: f64) -> OrthoResult {
    match unit_pair(plane, x, y) {
        None => OrthoResult::two_sided(0.0, tol),
        Some((u, w)) => OrthoResult::two_sided(plane.gauge(u - w) - std::f64::consts::SQRT_2, tol),
    }
}

/// `g(x, y)`.
pub fn g_orthogonal(plane: &NormedPlane, x: Vec2, y: Vec2, tol: f64) -> OrthoResult {
    OrthoResult::two_sided(g_functional(plane, x, y), tol)
}

/// `g(x, y) + g(y, x)`.
pub fn g_symmetric(plane: &NormedPlane, x: Vec2, y: Vec2, tol: f64) -> OrthoResult {
    OrthoResult::two_sided(g_functional(plane, x, y) + g_functional(plane, y, x), tol)
}

/// `||x||^2 g(x, y) + ||y||^2 g(y, x)`.
pub fn g_isosceles(plane: &NormedPlane, x: Vec2, y: Vec2, tol: f64) -> OrthoResult {
    let (gx, gy) = (plane.gauge(x), plane.gauge(y));
    OrthoResult::two_sided(gx * gx * g_functional(plane, x, y) + gy * gy * g_functional(plane, y, x), tol)
}

/// The unit vector `b(y)` with `b(y) ⊣_B y` and `[y, b(y)] > 0`.
///
/// Walks the open half circle on the positive side of `y`. There `g(u, y)`
/// starts at `||y||` and ends at `-||y||`, crossing zero exactly once in a
/// strictly convex plane.
pub fn left_normal(plane: &NormedPlane, y: Vec2) -> Result<Vec2> {
    require_strictly_convex(plane, "left_normal")?;
    require_nonzero(y, "left_normal y")?;
    let a = y.angle();
    let f = |theta: f64| g_functional(plane, plane.unit_circle_point(theta), y);
    let theta = bisect_root(f, a, a + std::f64::consts::PI)
        .ok_or_else(|| Error::NoBracket(format!("left normal of {y:?}")))?;
    let u = plane.unit_circle_point(theta);
    if det_form(y, u) > 0.0 {
        Ok(u)
    } else {
        Err(Error::NoBracket(format!("left normal of {y:?} left the positive side")))
    }
}
