//! Normed planes given as gauges of centrally symmetric convex bodies.
//!
//! A [`NormedPlane`] is built once from a [`PlaneSpec`] and is immutable
//! afterwards. Polygon planes carry an angle table of their vertices and the
//! facet normals `n_i` with `<n_i, v> = 1` on edge `i`, so the gauge of a
//! vector is one binary search plus one dot product.

use std::f64::consts::{FRAC_PI_4, TAU};

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::vec2::{det_form, Vec2};

/// Relative tolerance for deciding which pieces of a piecewise-linear gauge
/// are active at a point.
const ACTIVE_REL: f64 = 1e-13;

/// Tolerance for central symmetry of a polygon vertex list.
const SYMMETRY_TOL: f64 = 1e-9;

/// Description of a norm, as read from JSON.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum PlaneSpec {
    Euclidean,
    InnerProduct { matrix: [[f64; 2]; 2] },
    /// `p` may be `f64::INFINITY` (serialized as the string `"inf"`).
    Lp {
        #[serde(serialize_with = "serialize_p")]
        p: f64,
    },
    Polygon { vertices: Vec<Vec2> },
    RegularPolygon { n: usize, rotation: f64 },
}

fn serialize_p<S: serde::Serializer>(p: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if p.is_infinite() {
        s.serialize_str("inf")
    } else {
        s.serialize_f64(*p)
    }
}

fn spec_err(path: impl Into<String>, msg: impl Into<String>) -> Error {
    Error::InvalidSpec {
        path: path.into(),
        msg: msg.into(),
    }
}

fn as_f64(v: &Value, path: &str) -> Result<f64> {
    let x = v
        .as_f64()
        .ok_or_else(|| spec_err(path, "expected a number"))?;
    if !x.is_finite() {
        return Err(spec_err(path, "expected a finite number"));
    }
    Ok(x)
}

fn as_point(v: &Value, path: &str) -> Result<Vec2> {
    let arr = v
        .as_array()
        .ok_or_else(|| spec_err(path, "expected [x, y]"))?;
    if arr.len() != 2 {
        return Err(spec_err(path, "expected exactly two coordinates"));
    }
    Ok(Vec2::new(
        as_f64(&arr[0], &format!("{path}[0]"))?,
        as_f64(&arr[1], &format!("{path}[1]"))?,
    ))
}

impl PlaneSpec {
    /// Parses the JSON norm description. Errors carry the field path.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value =
            serde_json::from_str(text).map_err(|e| spec_err("$", format!("malformed JSON: {e}")))?;
        Self::from_value(&v)
    }

    pub fn from_value(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| spec_err("$", "expected a JSON object"))?;
        let ty = obj
            .get("type")
            .and_then(Value::as_str)
            .ok_or_else(|| spec_err("type", "missing or non-string"))?;
        let spec = match ty {
            "euclidean" => PlaneSpec::Euclidean,
            "lp" => {
                let raw = obj.get("p").ok_or_else(|| spec_err("p", "missing"))?;
                let p = match raw {
                    Value::String(s) if matches!(s.as_str(), "inf" | "infinity" | "Infinity") => {
                        f64::INFINITY
                    }
                    Value::Number(_) => as_f64(raw, "p")?,
                    _ => return Err(spec_err("p", "expected a number or \"inf\"")),
                };
                PlaneSpec::Lp { p }
            }
            "inner_product" => {
                let rows = obj
                    .get("matrix")
                    .and_then(Value::as_array)
                    .ok_or_else(|| spec_err("matrix", "expected a 2x2 array"))?;
                if rows.len() != 2 {
                    return Err(spec_err("matrix", "expected two rows"));
                }
                let mut m = [[0.0; 2]; 2];
                for (i, row) in rows.iter().enumerate() {
                    let p = as_point(row, &format!("matrix[{i}]"))?;
                    m[i] = [p.x, p.y];
                }
                PlaneSpec::InnerProduct { matrix: m }
            }
            "polygon" => {
                let verts = obj
                    .get("vertices")
                    .and_then(Value::as_array)
                    .ok_or_else(|| spec_err("vertices", "expected an array of points"))?;
                let vertices = verts
                    .iter()
                    .enumerate()
                    .map(|(i, p)| as_point(p, &format!("vertices[{i}]")))
                    .collect::<Result<Vec<_>>>()?;
                PlaneSpec::Polygon { vertices }
            }
            "regular_polygon" => {
                let n = obj
                    .get("n")
                    .and_then(Value::as_u64)
                    .ok_or_else(|| spec_err("n", "expected a positive integer"))?;
                let rotation = match obj.get("rotation") {
                    Some(r) => as_f64(r, "rotation")?,
                    None => 0.0,
                };
                PlaneSpec::RegularPolygon {
                    n: n as usize,
                    rotation,
                }
            }
            other => return Err(spec_err("type", format!("unknown norm type `{other}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plane spec serializes")
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            PlaneSpec::Euclidean => Ok(()),
            PlaneSpec::Lp { p } => {
                if p.is_nan() || *p < 1.0 {
                    Err(spec_err("p", format!("p = {p} must satisfy p >= 1")))
                } else {
                    Ok(())
                }
            }
            PlaneSpec::InnerProduct { matrix: m } => {
                if m.iter().flatten().any(|x| !x.is_finite()) {
                    return Err(spec_err("matrix", "non-finite entry"));
                }
                if (m[0][1] - m[1][0]).abs() > 1e-12 * (m[0][1].abs() + m[1][0].abs()).max(1.0) {
                    return Err(spec_err("matrix[0][1]", "matrix must be symmetric"));
                }
                let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
                if m[0][0] <= 0.0 || det <= 0.0 {
                    return Err(spec_err("matrix", "matrix must be positive definite"));
                }
                Ok(())
            }
            PlaneSpec::Polygon { vertices } => validate_polygon(vertices).map(|_| ()),
            PlaneSpec::RegularPolygon { n, rotation } => {
                if *n < 4 || !n.is_multiple_of(2) {
                    return Err(spec_err("n", format!("n = {n} must be an even integer >= 4")));
                }
                if !rotation.is_finite() {
                    return Err(spec_err("rotation", "must be finite"));
                }
                Ok(())
            }
        }
    }
}

fn validate_polygon(vertices: &[Vec2]) -> Result<()> {
    let n = vertices.len();
    if n < 4 || !n.is_multiple_of(2) {
        return Err(spec_err(
            "vertices",
            format!("need an even number (>= 4) of vertices, got {n}"),
        ));
    }
    let scale = vertices.iter().map(|v| v.max_abs()).fold(0.0, f64::max);
    if scale == 0.0 {
        return Err(spec_err("vertices", "all vertices are zero"));
    }
    let half = n / 2;
    for i in 0..half {
        let s = vertices[i] + vertices[i + half];
        if s.max_abs() > SYMMETRY_TOL * scale {
            return Err(spec_err(
                format!("vertices[{}]", i + half),
                format!("vertex list is not centrally symmetric: expected the negative of vertices[{i}]"),
            ));
        }
    }
    let mut winding = 0.0;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        let c = vertices[(i + 2) % n];
        let turn = det_form(b - a, c - b);
        if turn <= 1e-12 * scale * scale {
            return Err(spec_err(
                format!("vertices[{}]", (i + 1) % n),
                "vertices must be in strictly convex position, counterclockwise",
            ));
        }
        if det_form(a, b) <= 0.0 {
            return Err(spec_err(
                format!("vertices[{}]", (i + 1) % n),
                "origin must be interior and vertices counterclockwise",
            ));
        }
        winding += det_form(a, b).atan2(a.dot(b));
    }
    if (winding - TAU).abs() > 1e-9 {
        return Err(spec_err("vertices", "vertex list must wind once around the origin"));
    }
    Ok(())
}

/// Which one-sided derivative to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Minus,
    Plus,
}

#[derive(Debug, Clone)]
struct Polygon {
    vertices: Vec<Vec2>,
    /// Unwrapped polar angles, strictly increasing, spanning less than `2*pi`.
    angles: Vec<f64>,
    /// `normals[i]` supports edge `vertices[i] -> vertices[i+1]`.
    normals: Vec<Vec2>,
}

impl Polygon {
    fn new(vertices: Vec<Vec2>) -> Self {
        let n = vertices.len();
        let a0 = vertices[0].angle();
        let mut angles = Vec::with_capacity(n);
        angles.push(a0);
        for i in 1..n {
            let prev = vertices[i - 1];
            let cur = vertices[i];
            let step = det_form(prev, cur).atan2(prev.dot(cur));
            angles.push(angles[i - 1] + step);
        }
        let normals = (0..n)
            .map(|i| {
                let v = vertices[i];
                let e = vertices[(i + 1) % n] - v;
                e.rot90() / det_form(e, v)
            })
            .collect();
        Self {
            vertices,
            angles,
            normals,
        }
    }

    fn edge_index(&self, v: Vec2) -> usize {
        let a0 = self.angles[0];
        let theta = a0 + (v.angle() - a0).rem_euclid(TAU);
        let k = self.angles.partition_point(|&a| a <= theta);
        k.saturating_sub(1)
    }

    fn gauge(&self, v: Vec2) -> f64 {
        if v.is_zero() {
            return 0.0;
        }
        let n = self.normals.len();
        let i = self.edge_index(v);
        // Rounding in the angle lookup can land on a neighbour; the gauge is
        // the max over all facets, so check both neighbours.
        let a = self.normals[(i + n - 1) % n].dot(v);
        let b = self.normals[i].dot(v);
        let c = self.normals[(i + 1) % n].dot(v);
        a.max(b).max(c)
    }

    fn active(&self, v: Vec2) -> impl Iterator<Item = Vec2> + '_ {
        let n = self.normals.len();
        let i = self.edge_index(v);
        let cand = [
            self.normals[(i + n - 1) % n],
            self.normals[i],
            self.normals[(i + 1) % n],
        ];
        let g = cand.iter().map(|m| m.dot(v)).fold(f64::NEG_INFINITY, f64::max);
        let slack = ACTIVE_REL * g.abs().max(f64::MIN_POSITIVE);
        cand.into_iter().filter(move |m| m.dot(v) >= g - slack)
    }

    fn support(&self, u: Vec2) -> f64 {
        self.vertices
            .iter()
            .map(|v| v.dot(u))
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

#[derive(Debug, Clone)]
enum Body {
    InnerProduct { m: [[f64; 2]; 2], m_inv: [[f64; 2]; 2] },
    Lp { p: f64 },
    Polygon(Polygon),
}

/// A Minkowski plane. Immutable after construction.
#[derive(Debug, Clone)]
pub struct NormedPlane {
    spec: PlaneSpec,
    body: Body,
    strictly_convex: bool,
    smooth: bool,
}

impl NormedPlane {
    pub fn new(spec: PlaneSpec) -> Result<Self> {
        spec.validate()?;
        let (body, strictly_convex, smooth) = match &spec {
            PlaneSpec::Euclidean => (
                Body::InnerProduct {
                    m: [[1.0, 0.0], [0.0, 1.0]],
                    m_inv: [[1.0, 0.0], [0.0, 1.0]],
                },
                true,
                true,
            ),
            PlaneSpec::InnerProduct { matrix: m } => {
                let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
                let m_inv = [
                    [m[1][1] / det, -m[0][1] / det],
                    [-m[1][0] / det, m[0][0] / det],
                ];
                (Body::InnerProduct { m: *m, m_inv }, true, true)
            }
            PlaneSpec::Lp { p } => {
                let nice = *p > 1.0 && p.is_finite();
                (Body::Lp { p: *p }, nice, nice)
            }
            PlaneSpec::Polygon { vertices } => {
                (Body::Polygon(Polygon::new(vertices.clone())), false, false)
            }
            PlaneSpec::RegularPolygon { n, rotation } => {
                let vertices = (0..*n)
                    .map(|k| Vec2::from_angle(rotation + TAU * k as f64 / *n as f64))
                    .collect();
                (Body::Polygon(Polygon::new(vertices)), false, false)
            }
        };
        Ok(Self {
            spec,
            body,
            strictly_convex,
            smooth,
        })
    }

    pub fn euclidean() -> Self {
        Self::new(PlaneSpec::Euclidean).expect("euclidean plane")
    }

    pub fn lp(p: f64) -> Result<Self> {
        Self::new(PlaneSpec::Lp { p })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::new(PlaneSpec::from_json(text)?)
    }

    pub fn spec(&self) -> &PlaneSpec {
        &self.spec
    }

    pub fn strictly_convex(&self) -> bool {
        self.strictly_convex
    }

    pub fn smooth(&self) -> bool {
        self.smooth
    }

    /// Vertices of a polygonal unit circle, counterclockwise.
    pub fn polygon_vertices(&self) -> Option<&[Vec2]> {
        match &self.body {
            Body::Polygon(poly) => Some(&poly.vertices),
            _ => None,
        }
    }

    /// The norm `||v||`.
    pub fn gauge(&self, v: Vec2) -> f64 {
        match &self.body {
            Body::InnerProduct { m, .. } => quad_form(m, v).sqrt(),
            Body::Lp { p } => lp_norm(*p, v),
            Body::Polygon(poly) => poly.gauge(upper(v)),
        }
    }

    /// `v / ||v||`. Rejects the zero vector.
    pub fn normalize(&self, v: Vec2) -> Result<Vec2> {
        if !v.is_finite() {
            return Err(Error::NonFinite);
        }
        if v.is_zero() {
            return Err(Error::ZeroVector("normalize"));
        }
        Ok(v / self.gauge(v))
    }

    /// Point of the unit circle in Euclidean direction `theta`.
    pub fn unit_circle_point(&self, theta: f64) -> Vec2 {
        let e = Vec2::from_angle(theta);
        e / self.gauge(e)
    }

    /// Support function `h_B(u) = sup { <u, x> : x in B }`.
    pub fn support(&self, u: Vec2) -> Result<f64> {
        if u.is_zero() {
            return Err(Error::ZeroVector("support"));
        }
        Ok(self.support_unchecked(u))
    }

    fn support_unchecked(&self, u: Vec2) -> f64 {
        match &self.body {
            Body::InnerProduct { m_inv, .. } => quad_form(m_inv, u).sqrt(),
            Body::Lp { p } => lp_norm(conjugate_exponent(*p), u),
            Body::Polygon(poly) => poly.support(upper(u)),
        }
    }

    /// The antinorm `||v||_a = sup { |[v, y]| : y in S } = h_B(rot90 v)`.
    pub fn antinorm(&self, v: Vec2) -> f64 {
        if v.is_zero() {
            return 0.0;
        }
        self.support_unchecked(v.rot90())
    }

    /// One-sided directional derivative of the norm at `v` in direction `d`:
    /// `lim_{t -> 0±} (||v + t d|| - ||v||) / t`.
    pub fn directional_derivative(&self, v: Vec2, d: Vec2, side: Side) -> f64 {
        if v.is_zero() {
            let g = self.gauge(d);
            return match side {
                Side::Plus => g,
                Side::Minus => -g,
            };
        }
        match &self.body {
            Body::InnerProduct { m, .. } => bilinear(m, v, d) / quad_form(m, v).sqrt(),
            Body::Lp { p } => lp_derivative(*p, v, d, side),
            Body::Polygon(poly) => {
                let vals = poly.active(v).map(|n| n.dot(d));
                match side {
                    Side::Plus => vals.fold(f64::NEG_INFINITY, f64::max),
                    Side::Minus => vals.fold(f64::INFINITY, f64::min),
                }
            }
        }
    }

    /// Polar angles in `[0, 2*pi)` where the unit circle, its tangent, or the
    /// support function may fail to be smooth. Quadrature panels split here.
    pub fn kink_angles(&self) -> Vec<f64> {
        let mut out: Vec<f64> = match &self.body {
            Body::InnerProduct { .. } => Vec::new(),
            Body::Lp { p } if *p == 2.0 => Vec::new(),
            Body::Lp { .. } => (0..8).map(|k| k as f64 * FRAC_PI_4).collect(),
            Body::Polygon(poly) => {
                let n = poly.vertices.len();
                let mut a: Vec<f64> = poly.vertices.iter().map(|v| v.angle()).collect();
                for i in 0..n {
                    let e = poly.vertices[(i + 1) % n] - poly.vertices[i];
                    a.push(e.angle());
                }
                a
            }
        };
        for a in out.iter_mut() {
            *a = a.rem_euclid(TAU);
            if *a >= TAU {
                *a = 0.0;
            }
        }
        out.sort_by(|a, b| a.partial_cmp(b).unwrap());
        out.dedup_by(|a, b| (*a - *b).abs() < 1e-14);
        out
    }

    /// Compares the antinorm with the norm along the unit circle.
    pub fn radon_check(&self, n_samples: usize, tol: f64) -> Result<RadonCheck> {
        if n_samples < 8 {
            return Err(Error::InvalidArgument(format!(
                "radon_check needs n_samples >= 8, got {n_samples}"
            )));
        }
        let samples: Vec<(Vec2, f64)> = (0..n_samples)
            .map(|k| {
                let u = self.unit_circle_point(TAU * k as f64 / n_samples as f64);
                (u, self.antinorm(u))
            })
            .collect();
        let mut lo = samples[0];
        let mut hi = samples[0];
        for &s in &samples[1..] {
            if s.1 < lo.1 {
                lo = s;
            }
            if s.1 > hi.1 {
                hi = s;
            }
        }
        let scale = samples.iter().map(|s| s.1).sum::<f64>() / n_samples as f64;
        let spread = hi.1 - lo.1;
        Ok(RadonCheck {
            is_radon: spread <= tol * scale,
            scale,
            spread,
            argmin: lo.0,
            argmax: hi.0,
        })
    }
}

/// Result of [`NormedPlane::radon_check`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadonCheck {
    pub is_radon: bool,
    /// Mean of `||u||_a` over sampled unit vectors `u`.
    pub scale: f64,
    /// `max - min` of the sampled ratio.
    pub spread: f64,
    /// Unit vectors with the smallest and largest sampled antinorm.
    pub argmin: Vec2,
    pub argmax: Vec2,
}

/// Representative of `{v, -v}` in the closed upper half plane, so that
/// polygon gauges are exactly even.
fn upper(v: Vec2) -> Vec2 {
    if v.y < 0.0 || (v.y == 0.0 && v.x < 0.0) {
        -v
    } else {
        v
    }
}

fn quad_form(m: &[[f64; 2]; 2], v: Vec2) -> f64 {
    bilinear(m, v, v)
}

fn bilinear(m: &[[f64; 2]; 2], u: Vec2, v: Vec2) -> f64 {
    u.x * (m[0][0] * v.x + m[0][1] * v.y) + u.y * (m[1][0] * v.x + m[1][1] * v.y)
}

fn conjugate_exponent(p: f64) -> f64 {
    if p == 1.0 {
        f64::INFINITY
    } else if p.is_infinite() {
        1.0
    } else {
        p / (p - 1.0)
    }
}

fn lp_norm(p: f64, v: Vec2) -> f64 {
    let (ax, ay) = (v.x.abs(), v.y.abs());
    if p == 1.0 {
        ax + ay
    } else if p == 2.0 {
        ax.hypot(ay)
    } else if p.is_infinite() {
        ax.max(ay)
    } else {
        let m = ax.max(ay);
        if m == 0.0 {
            return 0.0;
        }
        m * ((ax / m).powf(p) + (ay / m).powf(p)).powf(1.0 / p)
    }
}

fn lp_derivative(p: f64, v: Vec2, d: Vec2, side: Side) -> f64 {
    let m = v.max_abs();
    let comps = [(v.x, d.x), (v.y, d.y)];
    let sign = match side {
        Side::Plus => 1.0,
        Side::Minus => -1.0,
    };
    if p == 1.0 {
        comps
            .iter()
            .map(|&(vi, di)| {
                if vi.abs() <= ACTIVE_REL * m {
                    sign * di.abs()
                } else {
                    vi.signum() * di
                }
            })
            .sum()
    } else if p.is_infinite() {
        let vals = comps
            .iter()
            .filter(|(vi, _)| vi.abs() >= m * (1.0 - ACTIVE_REL))
            .map(|&(vi, di)| vi.signum() * di);
        match side {
            Side::Plus => vals.fold(f64::NEG_INFINITY, f64::max),
            Side::Minus => vals.fold(f64::INFINITY, f64::min),
        }
    } else {
        let w = v / m;
        let num: f64 = [(w.x, d.x), (w.y, d.y)]
            .iter()
            .map(|&(wi, di)| wi.signum() * wi.abs().powf(p - 1.0) * di)
            .sum();
        num / lp_norm(p, w).powf(p - 1.0)
    }
}

/// Builds the regular `n`-gon plane with a vertex at polar angle `rotation`.
pub fn regular_polygon(n: usize, rotation: f64) -> Result<NormedPlane> {
    NormedPlane::new(PlaneSpec::RegularPolygon { n, rotation })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hexagon() -> NormedPlane {
        regular_polygon(6, 0.0).unwrap()
    }

    #[test]
    fn gauge_examples() {
        let e = NormedPlane::euclidean();
        assert_eq!(e.gauge(Vec2::new(3.0, 4.0)), 5.0);
        let l4 = NormedPlane::lp(4.0).unwrap();
        assert!((l4.gauge(Vec2::new(1.0, 1.0)) - 2f64.powf(0.25)).abs() < 1e-15);
        let h = hexagon();
        let v = Vec2::new(1.5, 3f64.sqrt() / 2.0);
        assert!((h.gauge(v) - 2.0).abs() < 1e-14);
        assert_eq!(h.gauge(Vec2::ZERO), 0.0);
    }

    #[test]
    fn polygon_vertices_have_unit_gauge() {
        for plane in [hexagon(), regular_polygon(8, 0.3).unwrap()] {
            for v in plane.polygon_vertices().unwrap() {
                assert!((plane.gauge(*v) - 1.0).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn unit_circle_point_examples() {
        let e = NormedPlane::euclidean();
        let p = e.unit_circle_point(std::f64::consts::FRAC_PI_2);
        assert!(p.x.abs() < 1e-16 && (p.y - 1.0).abs() < 1e-16);
        let l1 = NormedPlane::lp(1.0).unwrap();
        let p = l1.unit_circle_point(FRAC_PI_4);
        assert!((p.x - 0.5).abs() < 1e-15 && (p.y - 0.5).abs() < 1e-15);
        let p = hexagon().unit_circle_point(0.0);
        assert!((p.x - 1.0).abs() < 1e-15 && p.y.abs() < 1e-15);
    }

    #[test]
    fn support_examples() {
        let e = NormedPlane::euclidean();
        assert_eq!(e.support(Vec2::new(0.0, 2.0)).unwrap(), 2.0);
        let l1 = NormedPlane::lp(1.0).unwrap();
        assert_eq!(l1.support(Vec2::new(1.0, 1.0)).unwrap(), 1.0);
        let linf = NormedPlane::lp(f64::INFINITY).unwrap();
        assert_eq!(linf.support(Vec2::new(1.0, 1.0)).unwrap(), 2.0);
        assert!(matches!(e.support(Vec2::ZERO), Err(Error::ZeroVector(_))));
    }

    #[test]
    fn support_matches_vertex_max_for_ball_polygons() {
        let square = NormedPlane::new(PlaneSpec::Polygon {
            vertices: vec![
                Vec2::new(1.0, 1.0),
                Vec2::new(-1.0, 1.0),
                Vec2::new(-1.0, -1.0),
                Vec2::new(1.0, -1.0),
            ],
        })
        .unwrap();
        let linf = NormedPlane::lp(f64::INFINITY).unwrap();
        for k in 0..50 {
            let u = Vec2::from_angle(k as f64 * 0.37);
            assert!((square.support(u).unwrap() - linf.support(u).unwrap()).abs() < 1e-14);
            assert!((square.gauge(u) - linf.gauge(u)).abs() < 1e-14);
        }
    }

    #[test]
    fn antinorm_examples() {
        let e = NormedPlane::euclidean();
        assert!((e.antinorm(Vec2::new(3.0, 4.0)) - 5.0).abs() < 1e-15);
        let l1 = NormedPlane::lp(1.0).unwrap();
        assert_eq!(l1.antinorm(Vec2::new(1.0, 0.0)), 1.0);
        let l4 = NormedPlane::lp(4.0).unwrap();
        assert!((l4.antinorm(Vec2::new(1.0, 0.0)) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn antinorm_is_sup_of_determinant_over_circle() {
        let l4 = NormedPlane::lp(4.0).unwrap();
        let v = Vec2::new(0.3, -1.7);
        let brute = (0..20000)
            .map(|k| det_form(v, l4.unit_circle_point(TAU * k as f64 / 20000.0)).abs())
            .fold(0.0, f64::max);
        assert!((l4.antinorm(v) - brute).abs() < 1e-6);
    }

    #[test]
    fn radon_check_examples() {
        let e = NormedPlane::euclidean().radon_check(64, 1e-9).unwrap();
        assert!(e.is_radon && (e.scale - 1.0).abs() < 1e-14 && e.spread < 1e-14);
        let l4 = NormedPlane::lp(4.0).unwrap().radon_check(64, 1e-9).unwrap();
        assert!(!l4.is_radon && l4.spread > 1e-3);
        let ip = NormedPlane::new(PlaneSpec::InnerProduct {
            matrix: [[1.0, 0.0], [0.0, 4.0]],
        })
        .unwrap()
        .radon_check(64, 1e-9)
        .unwrap();
        assert!(ip.is_radon);
        assert!((ip.scale - 0.5).abs() < 1e-12);
        assert!(NormedPlane::euclidean().radon_check(4, 1e-9).is_err());
    }

    #[test]
    fn validation_reports_field_paths() {
        let err = PlaneSpec::from_json(r#"{"type":"lp","p":0.5}"#).unwrap_err();
        assert!(matches!(err, Error::InvalidSpec { ref path, .. } if path == "p"));
        let err = PlaneSpec::from_json(
            r#"{"type":"polygon","vertices":[[1,0],[0,1],[-1,0],[0,-2]]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidSpec { ref path, .. } if path == "vertices[3]"));
        let err =
            PlaneSpec::from_json(r#"{"type":"inner_product","matrix":[[1,2],[2,1]]}"#).unwrap_err();
        assert!(matches!(err, Error::InvalidSpec { ref path, .. } if path == "matrix"));
        let err = PlaneSpec::from_json(r#"{"type":"regular_polygon","n":5}"#).unwrap_err();
        assert!(matches!(err, Error::InvalidSpec { ref path, .. } if path == "n"));
        let err = PlaneSpec::from_json(r#"{"type":"polygon","vertices":[[1,0],[0,"a"]]}"#)
            .unwrap_err();
        assert!(matches!(err, Error::InvalidSpec { ref path, .. } if path == "vertices[1][1]"));
    }

    #[test]
    fn clockwise_polygon_rejected() {
        let err = NormedPlane::new(PlaneSpec::Polygon {
            vertices: vec![
                Vec2::new(1.0, 0.0),
                Vec2::new(0.0, -1.0),
                Vec2::new(-1.0, 0.0),
                Vec2::new(0.0, 1.0),
            ],
        })
        .unwrap_err();
        assert!(matches!(err, Error::InvalidSpec { .. }));
    }

    #[test]
    fn json_roundtrip_keeps_infinite_p() {
        let spec = PlaneSpec::from_json(r#"{"type":"lp","p":"inf"}"#).unwrap();
        assert_eq!(spec, PlaneSpec::Lp { p: f64::INFINITY });
        assert_eq!(PlaneSpec::from_json(&spec.to_json()).unwrap(), spec);
    }

    #[test]
    fn convexity_flags_follow_the_variant() {
        assert!(NormedPlane::lp(1.5).unwrap().strictly_convex());
        assert!(!NormedPlane::lp(1.0).unwrap().strictly_convex());
        assert!(!NormedPlane::lp(f64::INFINITY).unwrap().smooth());
        assert!(!hexagon().strictly_convex());
    }

    #[test]
    fn one_sided_derivatives_at_kinks() {
        let l1 = NormedPlane::lp(1.0).unwrap();
        let x = Vec2::new(1.0, 0.0);
        let y = Vec2::new(0.0, 1.0);
        assert_eq!(l1.directional_derivative(x, y, Side::Plus), 1.0);
        assert_eq!(l1.directional_derivative(x, y, Side::Minus), -1.0);
        let h = hexagon();
        let v = Vec2::new(1.0, 0.0);
        let d = Vec2::new(0.0, 1.0);
        let fd_plus = (h.gauge(v + d * 1e-7) - h.gauge(v)) / 1e-7;
        let fd_minus = (h.gauge(v - d * 1e-7) - h.gauge(v)) / -1e-7;
        assert!((h.directional_derivative(v, d, Side::Plus) - fd_plus).abs() < 1e-6);
        assert!((h.directional_derivative(v, d, Side::Minus) - fd_minus).abs() < 1e-6);
    }
}
