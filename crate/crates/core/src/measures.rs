//! Brass angle measures as densities (per Euclidean angle) on the unit
//! circle, the measure angle, and Dekster's total angular measure.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::functionals::require_nonzero;
use crate::norm::{NormedPlane, Side};
use crate::quadrature::integrate;
use crate::vec2::{dependent, det_form, Vec2};

/// Absolute tolerance per quadrature panel.
const PANEL_TOL: f64 = 1e-14;

/// Which density.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MeasureKind {
    /// Norm length of unit-circle arcs.
    ArcLength,
    /// Area of unit-disc sectors.
    SectorArea,
    /// Antinorm length of unit-circle arcs.
    AntinormArc,
    /// Dekster density `2 r / b`, unnormalized.
    DeksterRaw,
    /// Dekster density scaled to total `2 pi`.
    DeksterNormalized,
}

impl MeasureKind {
    pub const ALL: [MeasureKind; 5] = [
        MeasureKind::ArcLength,
        MeasureKind::SectorArea,
        MeasureKind::AntinormArc,
        MeasureKind::DeksterRaw,
        MeasureKind::DeksterNormalized,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MeasureKind::ArcLength => "arclen",
            MeasureKind::SectorArea => "area",
            MeasureKind::AntinormArc => "antinorm",
            MeasureKind::DeksterRaw => "dekster_raw",
            MeasureKind::DeksterNormalized => "dekster",
        }
    }

    pub fn normalized(self) -> bool {
        self != MeasureKind::DeksterRaw
    }
}

impl fmt::Display for MeasureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MeasureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "arclen" | "arc_length" => MeasureKind::ArcLength,
            "area" | "sector_area" => MeasureKind::SectorArea,
            "antinorm" | "antinorm_arc" => MeasureKind::AntinormArc,
            "dekster_raw" => MeasureKind::DeksterRaw,
            "dekster" | "dekster_normalized" => MeasureKind::DeksterNormalized,
            _ => return Err(Error::InvalidArgument(format!("unknown measure kind `{s}`"))),
        })
    }
}

/// Unit-circle point `γ(θ)` and its velocity `γ'(θ)`, with the right
/// derivative at corners.
pub fn circle_frame(plane: &NormedPlane, theta: f64) -> (Vec2, Vec2) {
    let e = Vec2::from_angle(theta);
    let de = e.rot90();
    let n = plane.gauge(e);
    let gamma = e / n;
    let tau = plane.directional_derivative(e, de, Side::Plus);
    (gamma, (de - gamma * tau) / n)
}

/// Unnormalized density of `kind` at Euclidean angle `theta`.
pub fn raw_density(plane: &NormedPlane, kind: MeasureKind, theta: f64) -> f64 {
    match kind {
        MeasureKind::ArcLength => plane.gauge(circle_frame(plane, theta).1),
        MeasureKind::SectorArea => {
            let (g, dg) = circle_frame(plane, theta);
            0.5 * det_form(g, dg)
        }
        MeasureKind::AntinormArc => plane.antinorm(circle_frame(plane, theta).1),
        MeasureKind::DeksterRaw | MeasureKind::DeksterNormalized => {
            let e = Vec2::from_angle(theta);
            let r = 1.0 / plane.gauge(e);
            let b = 2.0 * plane.antinorm(e);
            2.0 * r / b
        }
    }
}

/// A Brass measure on the unit circle of a plane, stored as a density with
/// a cumulative table for fast arc queries.
#[derive(Debug, Clone)]
pub struct AngleMeasure {
    plane: NormedPlane,
    kind: MeasureKind,
    /// Factor applied to the raw density.
    scale: f64,
    total: f64,
    nodes: Vec<f64>,
    /// `cumulative[i]` = measure of `[0, nodes[i]]`.
    cumulative: Vec<f64>,
}

/// Builds the measure `kind` on `plane` with `n_quad` uniform table nodes
/// (plus every corner angle of the plane).
pub fn build_measure(plane: &NormedPlane, kind: MeasureKind, n_quad: usize) -> Result<AngleMeasure> {
    if n_quad < 64 {
        return Err(Error::InvalidArgument(format!("n_quad must be at least 64, got {n_quad}")));
    }
    let mut nodes: Vec<f64> = (0..n_quad).map(|k| TAU * k as f64 / n_quad as f64).collect();
    nodes.extend(plane.kink_angles());
    nodes.push(TAU);
    nodes.sort_by(|a, b| a.partial_cmp(b).unwrap());
    nodes.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    let panels: Vec<f64> = nodes
        .par_windows(2)
        .map(|w| integrate(|t| raw_density(plane, kind, t), w[0], w[1], PANEL_TOL))
        .collect::<Result<_>>()?;
    let mut cumulative = Vec::with_capacity(nodes.len());
    let mut acc = 0.0;
    cumulative.push(0.0);
    for p in &panels {
        acc += p;
        cumulative.push(acc);
    }
    let scale = if kind.normalized() { TAU / acc } else { 1.0 };
    for c in cumulative.iter_mut() {
        *c *= scale;
    }
    Ok(AngleMeasure {
        plane: plane.clone(),
        kind,
        scale,
        total: acc * scale,
        nodes,
        cumulative,
    })
}

impl AngleMeasure {
    pub fn kind(&self) -> MeasureKind {
        self.kind
    }

    pub fn plane(&self) -> &NormedPlane {
        &self.plane
    }

    /// Mass of the whole circle.
    pub fn total(&self) -> f64 {
        self.total
    }

    /// Total of the raw density before normalization.
    pub fn raw_total(&self) -> f64 {
        self.total / self.scale
    }

    pub fn density(&self, theta: f64) -> f64 {
        self.scale * raw_density(&self.plane, self.kind, theta)
    }

    /// Measure of `[0, theta]` for `theta` in `[0, 2 pi]`.
    fn cdf_in_period(&self, theta: f64) -> Result<f64> {
        let i = match self.nodes.partition_point(|&n| n <= theta) {
            0 => 0,
            k => (k - 1).min(self.nodes.len() - 2),
        };
        let a = self.nodes[i];
        let part = integrate(|t| raw_density(&self.plane, self.kind, t), a, theta, PANEL_TOL)?;
        Ok(self.cumulative[i] + self.scale * part)
    }

    /// Measure of `(-inf, theta]` relative to angle 0, extended periodically.
    pub fn cdf(&self, theta: f64) -> Result<f64> {
        let turns = (theta / TAU).floor();
        let r = theta - turns * TAU;
        Ok(turns * self.total + self.cdf_in_period(r.clamp(0.0, TAU))?)
    }

    /// Measure of the counterclockwise arc from `theta1` to `theta2`.
    pub fn measure_arc(&self, theta1: f64, theta2: f64) -> Result<f64> {
        let mut t2 = theta2;
        if t2 < theta1 {
            t2 += TAU * ((theta1 - t2) / TAU).ceil();
        }
        Ok(self.cdf(t2)? - self.cdf(theta1)?)
    }

    /// Sampled `(theta, density)` pairs on a uniform grid.
    pub fn density_samples(&self, n: usize) -> Vec<(f64, f64)> {
        (0..n)
            .map(|k| {
                let t = TAU * k as f64 / n as f64;
                (t, self.density(t))
            })
            .collect()
    }

    /// Angle `[theta_a, theta_b]` of the positive cone of `{x, y}`, with
    /// `theta_b - theta_a` in `[0, pi]`. `None` for antipodal directions.
    fn cone(x: Vec2, y: Vec2) -> Option<(f64, f64)> {
        let d = det_form(x, y);
        if d == 0.0 {
            return if x.dot(y) > 0.0 {
                Some((x.angle(), x.angle()))
            } else {
                None
            };
        }
        let (a, b) = if d > 0.0 { (x, y) } else { (y, x) };
        let ta = a.angle();
        let mut tb = b.angle();
        if tb < ta {
            tb += TAU;
        }
        Some((ta, tb))
    }

    /// Angle between `x` and `y` measured by this measure: the mass of the
    /// arc of directions inside the positive cone of `{x, y}`.
    pub fn ang_mu(&self, x: Vec2, y: Vec2) -> Result<f64> {
        require_nonzero(x, "ang_mu x")?;
        require_nonzero(y, "ang_mu y")?;
        match Self::cone(x, y) {
            None => Ok(PI),
            Some((a, b)) if a == b => Ok(0.0),
            Some((a, b)) => self.measure_arc(a, b),
        }
    }

    /// Direction angle `theta` in the positive cone of `{x, y}` splitting
    /// it into two arcs of equal measure.
    pub fn bisecting_angle(&self, x: Vec2, y: Vec2) -> Result<f64> {
        if dependent(x, y, 1e-12) {
            return Err(Error::Dependent("measure bisector"));
        }
        let (a, b) = Self::cone(x, y).ok_or(Error::Dependent("measure bisector"))?;
        let (ca, cb) = (self.cdf(a)?, self.cdf(b)?);
        let target = 0.5 * (ca + cb);
        let (mut lo, mut hi) = (a, b);
        for _ in 0..200 {
            let m = 0.5 * (lo + hi);
            if m <= lo || m >= hi {
                break;
            }
            if self.cdf(m)? < target {
                lo = m;
            } else {
                hi = m;
            }
        }
        Ok(0.5 * (lo + hi))
    }
}

/// Sum of the measure angles of triangle `abc`.
#[allow(clippy::neg_cmp_op_on_partial_ord)]
pub fn triangle_angle_sum(mu: &AngleMeasure, a: Vec2, b: Vec2, c: Vec2) -> Result<f64> {
    let (ab, ac, bc) = (b - a, c - a, c - b);
    let scale = ab.euclid_norm().max(ac.euclid_norm()).max(bc.euclid_norm());
    if !(det_form(ab, ac).abs() > 1e-12 * scale * scale) {
        return Err(Error::Dependent("triangle vertices"));
    }
    Ok(mu.ang_mu(ab, ac)? + mu.ang_mu(-ab, bc)? + mu.ang_mu(-ac, -bc)?)
}

/// Extremes of a sampled density ratio.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RatioRange {
    pub min_ratio: f64,
    pub max_ratio: f64,
}

impl RatioRange {
    /// `max / min - 1`.
    pub fn relative_spread(&self) -> f64 {
        self.max_ratio / self.min_ratio - 1.0
    }
}

fn ratio_range<F: Fn(f64) -> f64>(n_samples: usize, f: F) -> RatioRange {
    let (lo, hi) = (0..n_samples)
        .map(|k| f(TAU * (k as f64 + 0.5) / n_samples as f64))
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| (lo.min(r), hi.max(r)));
    RatioRange {
        min_ratio: lo,
        max_ratio: hi,
    }
}

/// Range of `density_{μ_a} / density_{μ_l}` over `n_samples` angles; the
/// unit circle is equiframed iff the ratio is constant.
pub fn equiframed_ratio(plane: &NormedPlane, n_samples: usize) -> Result<RatioRange> {
    if n_samples < 64 {
        return Err(Error::InvalidArgument(format!("n_samples must be at least 64, got {n_samples}")));
    }
    let mu_l = build_measure(plane, MeasureKind::ArcLength, 256)?;
    let mu_a = build_measure(plane, MeasureKind::SectorArea, 256)?;
    Ok(ratio_range(n_samples, |t| mu_a.density(t) / mu_l.density(t)))
}

/// Range of `density_{area} / density_{antinorm arc}` over `n_samples`
/// angles, both normalized.
pub fn antinorm_proportionality(plane: &NormedPlane, n_samples: usize) -> Result<RatioRange> {
    if n_samples < 64 {
        return Err(Error::InvalidArgument(format!("n_samples must be at least 64, got {n_samples}")));
    }
    let mu_a = build_measure(plane, MeasureKind::SectorArea, 256)?;
    let mu_n = build_measure(plane, MeasureKind::AntinormArc, 256)?;
    Ok(ratio_range(n_samples, |t| mu_a.density(t) / mu_n.density(t)))
}

/// Dekster's total angular measure `τ = ∫ 2 r / b`.
pub fn dekster_tau(plane: &NormedPlane, n_quad: usize) -> Result<f64> {
    if n_quad < 256 {
        return Err(Error::InvalidArgument(format!("n_quad must be at least 256, got {n_quad}")));
    }
    Ok(build_measure(plane, MeasureKind::DeksterRaw, n_quad)?.total())
}
