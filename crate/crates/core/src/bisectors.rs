//! Angular bisectors: Busemann, Glogovskii, measure and D-A-F.

use std::f64::consts::{PI, TAU};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::functionals::require_nonzero;
use crate::measures::AngleMeasure;
use crate::norm::{NormedPlane, Side};
use crate::search::{bisect_root, convex_argmin};
use crate::vec2::{dependent, det_form, Vec2};

/// Interior sample count used to bracket the roots of the Glogovskii
/// defect.
pub const GLOGOVSKII_SAMPLES: usize = 32;

/// A ray from the origin, with unit (in the norm) direction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Ray {
    pub direction: Vec2,
}

impl Ray {
    /// Euclidean polar angle of the direction.
    pub fn angle(&self) -> f64 {
        self.direction.angle()
    }
}

/// Euclidean angle between two directions, in `[0, pi]`.
pub fn direction_gap(a: Vec2, b: Vec2) -> f64 {
    det_form(a, b).abs().atan2(a.dot(b))
}

/// Counterclockwise arc `(ta, tb)` spanned by the positive cone of `{x, y}`.
fn cone_arc(x: Vec2, y: Vec2, what: &'static str) -> Result<(f64, f64)> {
    require_nonzero(x, what)?;
    require_nonzero(y, what)?;
    if dependent(x, y, 1e-12) {
        return Err(Error::Dependent(what));
    }
    let (a, b) = if det_form(x, y) > 0.0 { (x, y) } else { (y, x) };
    let ta = a.angle();
    let mut tb = b.angle();
    if tb < ta {
        tb += TAU;
    }
    Ok((ta, tb))
}

fn ray_at(plane: &NormedPlane, theta: f64) -> Ray {
    Ray {
        direction: plane.unit_circle_point(theta),
    }
}

/// Busemann bisector: the direction of `x̂ + ŷ`.
pub fn busemann_bisector(plane: &NormedPlane, x: Vec2, y: Vec2) -> Result<Ray> {
    cone_arc(x, y, "busemann bisector")?;
    let m = x / plane.gauge(x) + y / plane.gauge(y);
    Ok(Ray {
        direction: plane.normalize(m)?,
    })
}

/// Norm distance from `p` to the ray `{s u : s >= 0}`.
pub fn ray_distance(plane: &NormedPlane, p: Vec2, u: Vec2) -> f64 {
    if p.is_zero() {
        return 0.0;
    }
    let hi = 2.0 * plane.gauge(p) / plane.gauge(u);
    let slope = |s: f64| plane.directional_derivative(p - u * s, -u, Side::Plus);
    let s = convex_argmin(slope, 0.0, hi);
    plane.gauge(p - u * s).min(plane.gauge(p))
}

/// Glogovskii bisector with root bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GlogovskiiBisector {
    pub ray: Ray,
    /// Number of distinct candidate directions found on the arc.
    pub candidates: usize,
}

impl GlogovskiiBisector {
    pub fn is_unique(&self) -> bool {
        self.candidates == 1
    }
}

/// Glogovskii bisector: the direction in the cone of `{x, y}` whose unit
/// point is equidistant from the two leg rays.
pub fn glogovskii_bisector(plane: &NormedPlane, x: Vec2, y: Vec2, tol: f64) -> Result<Ray> {
    Ok(glogovskii_detail(plane, x, y, tol)?.ray)
}

/// As [`glogovskii_bisector`], reporting how many candidates the arc holds.
/// With several, the one nearest the Busemann direction is returned.
pub fn glogovskii_detail(plane: &NormedPlane, x: Vec2, y: Vec2, tol: f64) -> Result<GlogovskiiBisector> {
    let (ta, tb) = cone_arc(x, y, "glogovskii bisector")?;
    let f = |t: f64| {
        let p = plane.unit_circle_point(t);
        ray_distance(plane, p, x) - ray_distance(plane, p, y)
    };
    let n = GLOGOVSKII_SAMPLES + 1;
    let ts: Vec<f64> = (0..=n).map(|k| ta + (tb - ta) * k as f64 / n as f64).collect();
    let fs: Vec<f64> = ts.iter().map(|&t| f(t)).collect();
    let mut roots = Vec::new();
    for k in 0..n {
        let (a, b) = (fs[k], fs[k + 1]);
        if k > 0 && a.abs() <= tol {
            roots.push(ts[k]);
        } else if a.signum() != b.signum() && b.abs() > tol {
            if let Some(r) = bisect_root(f, ts[k], ts[k + 1]) {
                roots.push(r);
            }
        }
    }
    let tm = busemann_bisector(plane, x, y)?.angle();
    let mut tm = tm;
    while tm < ta {
        tm += TAU;
    }
    if f(tm).abs() <= tol {
        roots.push(tm);
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots.dedup_by(|a, b| (*a - *b).abs() <= 1e-9);
    let best = roots
        .iter()
        .copied()
        .min_by(|a, b| (a - tm).abs().partial_cmp(&(b - tm).abs()).unwrap())
        .ok_or_else(|| Error::NoBracket(format!("glogovskii bisector for {x:?}, {y:?}")))?;
    Ok(GlogovskiiBisector {
        ray: ray_at(plane, best),
        candidates: roots.len(),
    })
}

/// Bisector splitting the cone of `{x, y}` into two arcs of equal measure.
pub fn measure_bisector(mu: &AngleMeasure, x: Vec2, y: Vec2) -> Result<Ray> {
    cone_arc(x, y, "measure bisector")?;
    Ok(ray_at(mu.plane(), mu.bisecting_angle(x, y)?))
}

/// D-A-F bisector: the unit `z` in the cone of `{x, y}` with
/// `ang_daf(x, z) = ang_daf(y, z)`.
///
/// `ang_daf(u, z)` is decreasing in `||û - ẑ||`, so the zeros are those of
/// `||x̂ - ẑ|| - ||ŷ - ẑ||`, on which the bisection runs.
pub fn daf_bisector(plane: &NormedPlane, x: Vec2, y: Vec2, tol: f64) -> Result<Ray> {
    let (ta, tb) = cone_arc(x, y, "daf bisector")?;
    let (u, w) = (x / plane.gauge(x), y / plane.gauge(y));
    let h = |t: f64| {
        let z = plane.unit_circle_point(t);
        plane.gauge(u - z) - plane.gauge(w - z)
    };
    let t = bisect_root(h, ta, tb).ok_or_else(|| Error::NoBracket(format!("daf bisector for {x:?}, {y:?}")))?;
    let ray = ray_at(plane, t);
    let z = ray.direction;
    let defect = (plane.gauge(u - z) - plane.gauge(w - z)).abs();
    if defect > tol.max(1e-12) {
        return Err(Error::NoBracket(format!("daf bisector defect {defect}")));
    }
    Ok(ray)
}

/// Result of [`radon_coincidence`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadonCoincidence {
    pub coincide: bool,
    /// Largest Euclidean angle between the Busemann and Glogovskii rays.
    pub max_gap: f64,
    pub witness: Option<(Vec2, Vec2)>,
    pub n_pairs: usize,
}

/// Unit-vector pairs `(x, y)` spread over directions and opening angles in
/// `[0.15, pi - 0.15]`, deterministic.
pub fn sample_pairs(plane: &NormedPlane, n_pairs: usize) -> Vec<(Vec2, Vec2)> {
    const PHI: f64 = 0.618_033_988_749_894_9;
    const PHI2: f64 = 0.754_877_666_246_692_7;
    (0..n_pairs)
        .map(|k| {
            let a = TAU * ((k as f64 + 0.5) * PHI).fract();
            let sep = 0.15 + (PI - 0.3) * ((k as f64 + 0.5) * PHI2).fract();
            (plane.unit_circle_point(a), plane.unit_circle_point(a + sep))
        })
        .collect()
}

/// Compares Busemann and Glogovskii bisectors over `n_pairs` sampled pairs.
pub fn radon_coincidence(plane: &NormedPlane, n_pairs: usize, tol: f64) -> Result<RadonCoincidence> {
    if n_pairs < 10 {
        return Err(Error::InvalidArgument(format!("n_pairs must be at least 10, got {n_pairs}")));
    }
    let mut max_gap = 0.0;
    let mut witness = None;
    for (x, y) in sample_pairs(plane, n_pairs) {
        let b = busemann_bisector(plane, x, y)?;
        let g = glogovskii_bisector(plane, x, y, 1e-12)?;
        let gap = direction_gap(b.direction, g.direction);
        if gap > max_gap || witness.is_none() {
            max_gap = gap;
            witness = Some((x, y));
        }
    }
    Ok(RadonCoincidence {
        coincide: max_gap <= tol,
        max_gap,
        witness,
        n_pairs,
    })
}
