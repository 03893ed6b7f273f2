//! Numeric audits of the angle axioms, congruence properties and
//! characterization theorems, each producing a reproducible witness.
//!
//! Every law is a pure function of a [`Witness`]. Searches run a seeded,
//! jittered grid over the law's parameters, keep the first strict maximum,
//! then polish it by coordinate descent.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::angles::{self, ang_daf, ang_i, ang_p, ang_s, default_ratio_grid, wilson_scan, AngleFn};
use crate::bisectors::{busemann_bisector, direction_gap, glogovskii_bisector};
use crate::error::{Error, Result};
use crate::functionals::{sine_by_minimization, star_pair};
use crate::measures::{build_measure, AngleMeasure, MeasureKind};
use crate::norm::NormedPlane;
use crate::search::bisect_root;
use crate::vec2::{det_form, Vec2};

/// Scale below which an angle counts as zero in the non-degeneracy and
/// parallelism indicators.
pub const DEGENERACY_EPS: f64 = 1e-6;

/// Perturbation size after halving in the continuity audit.
pub const CONTINUITY_H: f64 = 9.313_225_746_154_785e-10; // 2^-30

/// Table nodes for measures built by evaluators.
pub const MEASURE_NODES: usize = 256;

/// Angle function bound to a plane (and, for measure angles, a measure).
#[derive(Debug, Clone)]
pub struct Evaluator {
    plane: NormedPlane,
    f: AngleFn,
    measure: Option<AngleMeasure>,
}

impl Evaluator {
    pub fn new(plane: &NormedPlane, f: AngleFn) -> Result<Self> {
        if f.needs_strict_convexity() && !plane.strictly_convex() {
            return Err(Error::NotStrictlyConvex("angle function needs strict convexity"));
        }
        let measure = match f {
            AngleFn::Measure(kind) => Some(build_measure(plane, kind, MEASURE_NODES)?),
            _ => None,
        };
        Ok(Self {
            plane: plane.clone(),
            f,
            measure,
        })
    }

    pub fn plane(&self) -> &NormedPlane {
        &self.plane
    }

    pub fn angle_fn(&self) -> AngleFn {
        self.f
    }

    pub fn angle(&self, x: Vec2, y: Vec2) -> Result<f64> {
        match &self.measure {
            Some(mu) => mu.ang_mu(x, y),
            None => angles::angle(&self.plane, self.f, x, y),
        }
    }
}

/// Inputs achieving a reported violation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub vectors: Vec<Vec2>,
    pub scalars: Vec<f64>,
}

/// Identifier of an audited law.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LawId {
    Continuity,
    Symmetry,
    Homogeneity,
    Additivity,
    NonDegeneracy,
    Parallelism,
    Supplementarity,
    OppositeInvariance,
    CongruenceAngle,
    CongruenceLength,
    DafWeakSupplementarity,
    DafWeakAdditivity,
    DafAngleSum,
    DafExteriorAngle,
    /// `|t* - t**/2|` on unit vectors.
    TStarHalf,
    /// Spread of the three-point angle over the ratio grid.
    WilsonSpread,
    /// `| ||x̂+ŷ||² + ||x̂-ŷ||² - 4 |`.
    Parallelogram,
    /// `|s(x,y) - s(y,x)|` by direct minimization.
    SineSymmetry,
    /// Gap between Busemann and Glogovskii bisectors.
    BisectorGap,
    /// `max(0, 1 - ang_p(u+w, u) / eps)` on unit `u, w`.
    FlatSegment,
    /// Base-angle difference of isosceles triangles under a measure.
    IsoscelesBaseAngles,
    /// `|ang(u+w, u-w) - pi/2|` on unit `u, w` under a measure.
    IsoscelesRightAngle,
}

impl LawId {
    pub const AXIOMS: [LawId; 8] = [
        LawId::Continuity,
        LawId::Symmetry,
        LawId::Homogeneity,
        LawId::Additivity,
        LawId::NonDegeneracy,
        LawId::Parallelism,
        LawId::Supplementarity,
        LawId::OppositeInvariance,
    ];

    pub const DAF: [LawId; 4] = [
        LawId::DafWeakSupplementarity,
        LawId::DafWeakAdditivity,
        LawId::DafAngleSum,
        LawId::DafExteriorAngle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LawId::Continuity => "axiom1_continuity",
            LawId::Symmetry => "axiom2_symmetry",
            LawId::Homogeneity => "axiom3_homogeneity",
            LawId::Additivity => "axiom4_additivity",
            LawId::NonDegeneracy => "axiom5_non_degeneracy",
            LawId::Parallelism => "property6_parallelism",
            LawId::Supplementarity => "property7_supplementarity",
            LawId::OppositeInvariance => "property8_opposite_invariance",
            LawId::CongruenceAngle => "property9_congruence_angle",
            LawId::CongruenceLength => "property10_congruence_length",
            LawId::DafWeakSupplementarity => "daf_weak_supplementarity",
            LawId::DafWeakAdditivity => "daf_weak_additivity",
            LawId::DafAngleSum => "daf_angle_sum",
            LawId::DafExteriorAngle => "daf_exterior_angle",
            LawId::TStarHalf => "t_star_half",
            LawId::WilsonSpread => "wilson_spread",
            LawId::Parallelogram => "parallelogram",
            LawId::SineSymmetry => "sine_symmetry",
            LawId::BisectorGap => "bisector_gap",
            LawId::FlatSegment => "flat_segment",
            LawId::IsoscelesBaseAngles => "isosceles_base_angles",
            LawId::IsoscelesRightAngle => "isosceles_right_angle",
        }
    }

    /// Which parameter layout the search uses.
    fn layout(self) -> Layout {
        match self {
            LawId::Homogeneity | LawId::Additivity | LawId::DafWeakAdditivity => Layout::PairScaled,
            LawId::CongruenceAngle | LawId::CongruenceLength => Layout::Congruence,
            LawId::NonDegeneracy | LawId::Parallelism => Layout::PairScaled,
            LawId::FlatSegment | LawId::IsoscelesBaseAngles | LawId::IsoscelesRightAngle => Layout::UnitPair,
            LawId::TStarHalf
            | LawId::WilsonSpread
            | LawId::Parallelogram
            | LawId::SineSymmetry
            | LawId::BisectorGap => Layout::UnitPair,
            _ => Layout::Pair,
        }
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LawId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        const ALL: [LawId; 22] = [
            LawId::Continuity,
            LawId::Symmetry,
            LawId::Homogeneity,
            LawId::Additivity,
            LawId::NonDegeneracy,
            LawId::Parallelism,
            LawId::Supplementarity,
            LawId::OppositeInvariance,
            LawId::CongruenceAngle,
            LawId::CongruenceLength,
            LawId::DafWeakSupplementarity,
            LawId::DafWeakAdditivity,
            LawId::DafAngleSum,
            LawId::DafExteriorAngle,
            LawId::TStarHalf,
            LawId::WilsonSpread,
            LawId::Parallelogram,
            LawId::SineSymmetry,
            LawId::BisectorGap,
            LawId::FlatSegment,
            LawId::IsoscelesBaseAngles,
            LawId::IsoscelesRightAngle,
        ];
        ALL.into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown law `{s}`")))
    }
}

/// Outcome of one audited law.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LawReport {
    pub law_id: LawId,
    pub max_violation: f64,
    pub witness: Option<Witness>,
    pub pass: bool,
    pub tol: f64,
    pub n_samples: usize,
}

/// Search settings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AuditConfig {
    /// Grid side: `grid × grid` direction pairs.
    pub grid: usize,
    pub seed: u64,
    /// Least Euclidean angle between the two grid directions, and between
    /// either and the other's antipode.
    pub min_sep: f64,
    /// Objective evaluations spent in coordinate descent.
    pub refine_evals: usize,
}

impl Default for AuditConfig {
    fn default() -> Self {
        Self {
            grid: 64,
            seed: 0,
            min_sep: 0.05,
            refine_evals: 400,
        }
    }
}

impl AuditConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }

    pub fn with_grid(mut self, grid: usize) -> Self {
        self.grid = grid;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Layout {
    /// `[θx, θy]` Euclidean directions.
    Pair,
    /// `[θx, θy, ln α, ln β]`.
    PairScaled,
    /// `[θu, θw]`, unit vectors in the norm.
    UnitPair,
    /// `[θx, θy, shift, ln ||y||]` with unit `x`.
    Congruence,
}

/// Scale pairs `(α, β)` crossed with the direction grid.
const SCALES: [(f64, f64); 3] = [(0.5, 2.0), (4.0, 0.25), (1.0, 3.0)];

/// Shifts of `v` against `x` in the congruence grid.
const SHIFTS: [f64; 2] = [1.0, 2.3];

fn separated(t1: f64, t2: f64, min_sep: f64) -> bool {
    let d = (t2 - t1).rem_euclid(TAU);
    let d = d.min(TAU - d);
    d >= min_sep && d <= PI - min_sep
}

fn grid_points(layout: Layout, cfg: &AuditConfig) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let n = cfg.grid.max(1);
    let step = TAU / n as f64;
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let t1 = step * (i as f64 + rng.gen_range(0.1..0.9));
            let t2 = step * (j as f64 + rng.gen_range(0.1..0.9));
            match layout {
                Layout::Pair | Layout::UnitPair => out.push(vec![t1, t2]),
                Layout::PairScaled => {
                    for (a, b) in SCALES {
                        out.push(vec![t1, t2, a.ln(), b.ln()]);
                    }
                }
                Layout::Congruence => {
                    for s in SHIFTS {
                        out.push(vec![t1, t2, s, 0.0]);
                        out.push(vec![t1, t2, s, 0.7f64.ln()]);
                    }
                }
            }
        }
    }
    out
}

fn steps(layout: Layout, cfg: &AuditConfig) -> Vec<f64> {
    let d = TAU / cfg.grid.max(1) as f64 / 2.0;
    match layout {
        Layout::Pair | Layout::UnitPair => vec![d, d],
        Layout::PairScaled => vec![d, d, 0.25, 0.25],
        Layout::Congruence => vec![d, d, d, 0.25],
    }
}

/// Search state shared by every law.
struct Problem<'a> {
    ev: &'a Evaluator,
    law: LawId,
    cfg: AuditConfig,
}

impl Problem<'_> {
    /// Witness for a parameter vector, or `None` when inadmissible.
    fn witness(&self, p: &[f64]) -> Result<Option<Witness>> {
        let plane = self.ev.plane();
        let ms = self.cfg.min_sep;
        let layout = self.law.layout();
        if !separated(p[0], p[1], ms) {
            return Ok(None);
        }
        Ok(Some(match layout {
            Layout::Pair => {
                let (x, y) = (Vec2::from_angle(p[0]), Vec2::from_angle(p[1]) * 1.5);
                match self.law {
                    LawId::Continuity => Witness {
                        vectors: vec![x, y],
                        scalars: vec![CONTINUITY_H],
                    },
                    _ => Witness {
                        vectors: vec![x, y],
                        scalars: vec![],
                    },
                }
            }
            Layout::PairScaled => {
                let (a, b) = (p[2].clamp(-4.0, 4.0).exp(), p[3].clamp(-4.0, 4.0).exp());
                Witness {
                    vectors: vec![Vec2::from_angle(p[0]), Vec2::from_angle(p[1])],
                    scalars: vec![a, b],
                }
            }
            Layout::UnitPair => Witness {
                vectors: vec![plane.unit_circle_point(p[0]), plane.unit_circle_point(p[1])],
                scalars: vec![],
            },
            Layout::Congruence => {
                let ry = p[3].clamp(-2.0, 2.0).exp();
                let x = plane.unit_circle_point(p[0]);
                let y = plane.unit_circle_point(p[1]) * ry;
                let v = plane.unit_circle_point(p[0] + p[2]);
                let Some(w) = congruent_partner(self.ev, x, y, v)? else {
                    return Ok(None);
                };
                Witness {
                    vectors: vec![x, y, v, w],
                    scalars: vec![],
                }
            }
        }))
    }

    fn objective(&self, p: &[f64]) -> Result<Option<(f64, Witness)>> {
        let Some(w) = self.witness(p)? else {
            return Ok(None);
        };
        let v = violation(self.ev, self.law, &w)?;
        Ok(if v.is_finite() { Some((v, w)) } else { None })
    }

    fn run(&self, tol: f64) -> Result<LawReport> {
        let layout = self.law.layout();
        let points = grid_points(layout, &self.cfg);
        let n_samples = points.len();
        let values: Vec<Option<(f64, Witness)>> = points
            .par_iter()
            .map(|p| self.objective(p))
            .collect::<Result<_>>()?;
        let mut best: Option<(usize, f64)> = None;
        for (k, v) in values.iter().enumerate() {
            if let Some((val, _)) = v {
                if best.is_none_or(|(_, b)| *val > b) {
                    best = Some((k, *val));
                }
            }
        }
        let (k, _) = best.ok_or_else(|| {
            Error::InvalidArgument(format!("sampler produced no admissible configuration for {}", self.law))
        })?;
        let (mut p, (mut val, mut wit)) = (points[k].clone(), values[k].clone().unwrap());
        let mut h = steps(layout, &self.cfg);
        let mut budget = self.cfg.refine_evals;
        'outer: while budget > 0 && h.iter().any(|&s| s > 1e-12) {
            let mut improved = false;
            for d in 0..p.len() {
                for sign in [1.0, -1.0] {
                    if budget == 0 {
                        break 'outer;
                    }
                    budget -= 1;
                    let mut q = p.clone();
                    q[d] += sign * h[d];
                    if let Some((v, w)) = self.objective(&q)? {
                        if v > val {
                            p = q;
                            val = v;
                            wit = w;
                            improved = true;
                            break;
                        }
                    }
                }
            }
            if !improved {
                for s in h.iter_mut() {
                    *s *= 0.5;
                }
            }
        }
        Ok(LawReport {
            law_id: self.law,
            max_violation: val,
            witness: Some(wit),
            pass: val <= tol,
            tol,
            n_samples,
        })
    }
}

/// Finds `w` with `||w|| = ||y||` on the same side of `v` as `y` is of `x`
/// and `ang(v, w) = ang(x, y)`, by bisection over the half circle.
fn congruent_partner(ev: &Evaluator, x: Vec2, y: Vec2, v: Vec2) -> Result<Option<Vec2>> {
    let plane = ev.plane();
    let target = ev.angle(x, y)?;
    let ry = plane.gauge(y);
    let orient = if det_form(x, y) >= 0.0 { 1.0 } else { -1.0 };
    let tv = v.angle();
    let w_at = |phi: f64| plane.unit_circle_point(tv + orient * phi) * ry;
    let f = |phi: f64| ev.angle(v, w_at(phi)).map(|a| a - target).unwrap_or(f64::NAN);
    Ok(bisect_root(f, 0.0, PI).map(w_at))
}

fn indicator(a: f64) -> f64 {
    (1.0 - a / DEGENERACY_EPS).max(0.0)
}

/// Violation of `law` at `w`. The same function backs the search and
/// [`reevaluate`].
pub fn violation(ev: &Evaluator, law: LawId, w: &Witness) -> Result<f64> {
    let plane = ev.plane();
    let ang = |a: Vec2, b: Vec2| ev.angle(a, b);
    let v = &w.vectors;
    let s = &w.scalars;
    Ok(match law {
        LawId::Continuity => {
            let (x, y, h) = (v[0], v[1], s[0]);
            let base = ang(x, y)?;
            let dy = y.rot90() * h;
            let dx = x.rot90() * h;
            (ang(x, y + dy)? - base).abs().max((ang(x + dx, y)? - base).abs())
        }
        LawId::Symmetry => (ang(v[0], v[1])? - ang(v[1], v[0])?).abs(),
        LawId::Homogeneity => (ang(v[0] * s[0], v[1] * s[1])? - ang(v[0], v[1])?).abs(),
        LawId::Additivity => {
            let z = v[0] * s[0] + v[1] * s[1];
            (ang(v[0], z)? + ang(z, v[1])? - ang(v[0], v[1])?).abs()
        }
        LawId::NonDegeneracy => ang(v[0], v[0] * s[0])?.abs().max(indicator(ang(v[0], v[1])?)),
        LawId::Parallelism => {
            (ang(v[0], v[0] * -s[0])? - PI).abs().max(indicator(PI - ang(v[0], v[1])?))
        }
        LawId::Supplementarity => (ang(v[0], v[1])? + ang(v[1], -v[0])? - PI).abs(),
        LawId::OppositeInvariance => (ang(v[0], v[1])? - ang(-v[0], -v[1])?).abs(),
        LawId::CongruenceAngle => {
            let (x, y, p, q) = (v[0], v[1], v[2], v[3]);
            (ang(x - y, -y)? - ang(p - q, -q)?).abs()
        }
        LawId::CongruenceLength => (plane.gauge(v[0] - v[1]) - plane.gauge(v[2] - v[3])).abs(),
        LawId::DafWeakSupplementarity => {
            let (x, y) = (v[0], v[1]);
            (ang_daf(plane, x, y)? + ang_daf(plane, -x, y)? - PI).abs()
        }
        LawId::DafWeakAdditivity => {
            let (x, y) = (v[0], v[1]);
            let z = x * s[0] + y * s[1];
            (ang_daf(plane, x, z)? + ang_daf(plane, z, y)? - ang_daf(plane, x, y)?).abs()
        }
        LawId::DafAngleSum => {
            let (x, y) = (v[0], v[1]);
            (ang_daf(plane, x, y)? + ang_daf(plane, y, y - x)? + ang_daf(plane, x, x - y)? - PI).abs()
        }
        LawId::DafExteriorAngle => {
            let (x, y) = (v[0], v[1]);
            (ang_daf(plane, y, y - x)? + ang_daf(plane, x, x - y)? - ang_daf(plane, -x, y)?).abs()
        }
        LawId::TStarHalf => {
            let sp = star_pair(plane, v[0], v[1])?;
            (sp.t_star - 0.5 * sp.t_star_star).abs()
        }
        LawId::WilsonSpread => wilson_scan(plane, v[0], v[1], &default_ratio_grid())?.spread,
        LawId::Parallelogram => {
            let (u, q) = (v[0], v[1]);
            let (a, b) = (plane.gauge(u + q), plane.gauge(u - q));
            (a * a + b * b - 4.0).abs()
        }
        LawId::SineSymmetry => {
            (sine_by_minimization(plane, v[0], v[1])? - sine_by_minimization(plane, v[1], v[0])?).abs()
        }
        LawId::BisectorGap => {
            let b = busemann_bisector(plane, v[0], v[1])?;
            let g = glogovskii_bisector(plane, v[0], v[1], 1e-12)?;
            direction_gap(b.direction, g.direction)
        }
        LawId::FlatSegment => indicator(ang_p(plane, v[0] + v[1], v[0])?),
        LawId::IsoscelesBaseAngles => {
            let (p, q) = (v[0], v[1]);
            (ang(-p, q - p)? - ang(-q, p - q)?).abs()
        }
        LawId::IsoscelesRightAngle => (ang(v[0] + v[1], v[0] - v[1])? - FRAC_PI_2).abs(),
    })
}

/// Re-evaluates a reported witness standalone.
pub fn reevaluate(ev: &Evaluator, report: &LawReport) -> Result<f64> {
    let w = report
        .witness
        .as_ref()
        .ok_or_else(|| Error::InvalidArgument("report has no witness".into()))?;
    violation(ev, report.law_id, w)
}

/// Searches for the largest violation of one law.
pub fn audit_law(ev: &Evaluator, law: LawId, cfg: &AuditConfig, tol: f64) -> Result<LawReport> {
    Problem { ev, law, cfg: *cfg }.run(tol)
}

/// Audits structural axioms 1–5 and positional properties 6–8.
pub fn audit_axioms(plane: &NormedPlane, f: AngleFn, cfg: &AuditConfig, tol: f64) -> Result<Vec<LawReport>> {
    let ev = Evaluator::new(plane, f)?;
    LawId::AXIOMS.iter().map(|&law| audit_law(&ev, law, cfg, tol)).collect()
}

/// Audits congruence properties 9 and 10. Needs a strictly convex plane.
pub fn audit_congruence(
    plane: &NormedPlane,
    f: AngleFn,
    cfg: &AuditConfig,
    tol: f64,
) -> Result<(LawReport, LawReport)> {
    if !plane.strictly_convex() {
        return Err(Error::NotStrictlyConvex("congruence audit"));
    }
    let ev = Evaluator::new(plane, f)?;
    Ok((
        audit_law(&ev, LawId::CongruenceAngle, cfg, tol)?,
        audit_law(&ev, LawId::CongruenceLength, cfg, tol)?,
    ))
}

/// Max violations of the four D-A-F weak properties.
pub fn daf_equivalence_probe(plane: &NormedPlane, cfg: &AuditConfig, tol: f64) -> Result<Vec<LawReport>> {
    let ev = Evaluator::new(plane, AngleFn::Daf)?;
    LawId::DAF.iter().map(|&law| audit_law(&ev, law, cfg, tol)).collect()
}

/// Base-angle defect of isosceles triangles `o, u, w` (unit `u, w`) under
/// the measure angle `kind`.
pub fn i_measure_probe(plane: &NormedPlane, kind: MeasureKind, cfg: &AuditConfig, tol: f64) -> Result<LawReport> {
    let ev = Evaluator::new(plane, AngleFn::Measure(kind))?;
    audit_law(&ev, LawId::IsoscelesBaseAngles, cfg, tol)
}

/// Defect `|ang_μ(u+w, u-w) - pi/2|` on isosceles-orthogonal pairs.
pub fn t_measure_probe(plane: &NormedPlane, kind: MeasureKind, cfg: &AuditConfig, tol: f64) -> Result<LawReport> {
    let ev = Evaluator::new(plane, AngleFn::Measure(kind))?;
    audit_law(&ev, LawId::IsoscelesRightAngle, cfg, tol)
}

/// One detector of a characterization.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Detector {
    pub name: &'static str,
    /// `None` when the detector does not apply to this plane.
    pub verdict: Option<bool>,
    pub statistic: f64,
    pub threshold: f64,
    pub witness: Option<Witness>,
}

/// Output of [`characterization_suite`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Characterization {
    pub strictly_convex: bool,
    pub radon: bool,
    pub euclidean: bool,
    pub strict_convexity_detectors: Vec<Detector>,
    pub radon_detectors: Vec<Detector>,
    pub euclidean_detectors: Vec<Detector>,
}

/// Grid sides used by the characterization detectors.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub grid: usize,
    /// Grid side for the (expensive) bisector detector.
    pub bisector_grid: usize,
}

impl SuiteConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            grid: 32,
            bisector_grid: 12,
        }
    }
}

fn detector_from(name: &'static str, r: LawReport, holds_when_small: bool) -> Detector {
    let small = r.max_violation <= r.tol;
    Detector {
        name,
        verdict: Some(if holds_when_small { small } else { !small }),
        statistic: r.max_violation,
        threshold: r.tol,
        witness: r.witness,
    }
}

fn verdict_of(name: &str, ds: &[Detector]) -> Result<bool> {
    let vs: Vec<(&str, bool)> = ds.iter().filter_map(|d| d.verdict.map(|v| (d.name, v))).collect();
    let first = vs
        .first()
        .ok_or_else(|| Error::DetectorDisagreement(format!("no applicable {name} detector")))?
        .1;
    if vs.iter().any(|&(_, v)| v != first) {
        let detail: Vec<String> = vs.iter().map(|(n, v)| format!("{n}={v}")).collect();
        return Err(Error::DetectorDisagreement(format!("{name}: {}", detail.join(", "))));
    }
    Ok(first)
}

/// Runs the detector batteries for strict convexity, the Radon property and
/// the inner-product property. Disagreeing detectors are a hard error.
pub fn characterization_suite(plane: &NormedPlane, sc: &SuiteConfig) -> Result<Characterization> {
    let cfg = AuditConfig::with_seed(sc.seed).with_grid(sc.grid);
    let bis_cfg = AuditConfig::with_seed(sc.seed).with_grid(sc.bisector_grid);

    let p_ev = Evaluator::new(plane, AngleFn::P)?;
    let flat = audit_law(&p_ev, LawId::FlatSegment, &cfg, 0.5)?;
    let strict = vec![detector_from("p_angle_flat_segment", flat, true)];

    let mut radon = Vec::new();
    let rc = plane.radon_check(720, 1e-9)?;
    radon.push(Detector {
        name: "antinorm_ratio",
        verdict: Some(rc.is_radon),
        statistic: rc.spread / rc.scale,
        threshold: 1e-9,
        witness: Some(Witness {
            vectors: vec![rc.argmin, rc.argmax],
            scalars: vec![plane.antinorm(rc.argmin), plane.antinorm(rc.argmax)],
        }),
    });
    if plane.strictly_convex() {
        let s_ev = Evaluator::new(plane, AngleFn::S)?;
        radon.push(detector_from("s_angle_symmetry", audit_law(&s_ev, LawId::Symmetry, &cfg, 1e-6)?, true));
    } else {
        radon.push(detector_from("sine_symmetry", audit_law(&p_ev, LawId::SineSymmetry, &cfg, 1e-9)?, true));
    }
    radon.push(detector_from(
        "busemann_glogovskii",
        audit_law(&p_ev, LawId::BisectorGap, &bis_cfg, 1e-7)?,
        true,
    ));

    let i_ev = Evaluator::new(plane, AngleFn::I)?;
    let mut euclid = vec![
        detector_from("p_angle_homogeneity", audit_law(&p_ev, LawId::Homogeneity, &cfg, 1e-7)?, true),
        detector_from("i_angle_homogeneity", audit_law(&i_ev, LawId::Homogeneity, &cfg, 1e-7)?, true),
        detector_from("wilson_spread", audit_law(&p_ev, LawId::WilsonSpread, &cfg, 1e-7)?, true),
    ];
    if plane.strictly_convex() {
        euclid.push(detector_from("t_star_half", audit_law(&p_ev, LawId::TStarHalf, &cfg, 1e-7)?, true));
    } else {
        euclid.push(Detector {
            name: "t_star_half",
            verdict: None,
            statistic: f64::NAN,
            threshold: 1e-7,
            witness: None,
        });
    }
    euclid.push(detector_from("daf_parallelogram", audit_law(&p_ev, LawId::Parallelogram, &cfg, 1e-9)?, true));

    Ok(Characterization {
        strictly_convex: verdict_of("strict convexity", &strict)?,
        radon: verdict_of("radon", &radon)?,
        euclidean: verdict_of("euclidean", &euclid)?,
        strict_convexity_detectors: strict,
        radon_detectors: radon,
        euclidean_detectors: euclid,
    })
}

/// The first two dyadic levels of the Euclidean-angle uniqueness argument:
/// on sampled `x`, `ang(x, y) = pi/2^n` must coincide with the Euclidean
/// angle being `pi/2^n`, `n = 1, 2`. Returns the largest Euclidean-angle
/// mismatch over both directions of the equivalence.
pub fn dyadic_probe(plane: &NormedPlane, f: AngleFn, n_dirs: usize) -> Result<f64> {
    let ev = Evaluator::new(plane, f)?;
    let mut worst: f64 = 0.0;
    for k in 0..n_dirs {
        let t = TAU * (k as f64 + 0.37) / n_dirs as f64;
        let x = Vec2::from_angle(t);
        for target in [FRAC_PI_2, FRAC_PI_4] {
            // Euclidean angle target => ang = target
            let y = Vec2::from_angle(t + target);
            worst = worst.max((ev.angle(x, y)? - target).abs());
            // ang = target => Euclidean angle target
            let g = |phi: f64| {
                ev.angle(x, Vec2::from_angle(t + phi))
                    .map(|a| a - target)
                    .unwrap_or(f64::NAN)
            };
            let phi = bisect_root(g, 1e-9, PI - 1e-9)
                .ok_or_else(|| Error::NoBracket(format!("dyadic probe at direction {t}")))?;
            worst = worst.max((phi - target).abs());
        }
    }
    Ok(worst)
}

/// Convenience for tests and the CLI: homogeneity of `ang_p`, `ang_i`.
pub fn homogeneity_gap(plane: &NormedPlane, x: Vec2, y: Vec2, alpha: f64, beta: f64) -> Result<(f64, f64)> {
    Ok((
        (ang_p(plane, x * alpha, y * beta)? - ang_p(plane, x, y)?).abs(),
        (ang_i(plane, x * alpha, y * beta)? - ang_i(plane, x, y)?).abs(),
    ))
}

/// `|ang_s(x, y) - ang_s(y, x)|`.
pub fn s_asymmetry(plane: &NormedPlane, x: Vec2, y: Vec2) -> Result<f64> {
    Ok((ang_s(plane, x, y)? - ang_s(plane, y, x)?).abs())
}
