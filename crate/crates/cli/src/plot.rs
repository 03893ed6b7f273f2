//! Deterministic SVG figures of a normed plane.

use std::f64::consts::TAU;
use std::fmt::Write as _;
use std::str::FromStr;

use minkowski_core::bisectors::{busemann_bisector, daf_bisector, glogovskii_bisector, measure_bisector};
use minkowski_core::measures::raw_density;
use minkowski_core::{build_measure, Error, MeasureKind, NormedPlane, Result, Vec2};

pub const SIZE: f64 = 640.0;
const CENTRE: f64 = 320.0;
const RADIUS: f64 = 250.0;
const SAMPLES: usize = 720;

/// Plot layers, drawn in declaration order whatever order they are given in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Layer {
    UnitCircle,
    AntinormCircle,
    Bisectors,
    MeasureDensity,
    DeksterDensity,
}

impl Layer {
    pub fn name(self) -> &'static str {
        match self {
            Layer::UnitCircle => "unit_circle",
            Layer::AntinormCircle => "antinorm_circle",
            Layer::Bisectors => "bisectors",
            Layer::MeasureDensity => "measure_density",
            Layer::DeksterDensity => "dekster_density",
        }
    }
}

impl FromStr for Layer {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        [
            Layer::UnitCircle,
            Layer::AntinormCircle,
            Layer::Bisectors,
            Layer::MeasureDensity,
            Layer::DeksterDensity,
        ]
        .into_iter()
        .find(|l| l.name() == s)
        .ok_or_else(|| format!("unknown layer `{s}`"))
    }
}

#[derive(Debug, Clone)]
pub struct PlotRequest {
    pub layers: Vec<Layer>,
    pub pair: Option<(Vec2, Vec2)>,
    pub measure_kind: MeasureKind,
}

fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

struct Canvas {
    scale: f64,
}

impl Canvas {
    fn xy(&self, p: Vec2) -> String {
        format!("{},{}", num(CENTRE + self.scale * p.x), num(CENTRE - self.scale * p.y))
    }

    fn closed_path(&self, pts: &[Vec2]) -> String {
        let mut d = String::new();
        for (i, p) in pts.iter().enumerate() {
            d.push_str(if i == 0 { "M " } else { " L " });
            d.push_str(&self.xy(*p));
        }
        d.push_str(" Z");
        d
    }

    fn line(&self, id: &str, to: Vec2, stroke: &str, extra: &str) -> String {
        format!(
            "<line id=\"{id}\" x1=\"{c}\" y1=\"{c}\" x2=\"{}\" y2=\"{}\" stroke=\"{stroke}\" stroke-width=\"2\"{extra}/>\n",
            num(CENTRE + self.scale * to.x),
            num(CENTRE - self.scale * to.y),
            c = num(CENTRE),
        )
    }
}

fn unit_circle(plane: &NormedPlane) -> Vec<Vec2> {
    match plane.polygon_vertices() {
        Some(v) => v.to_vec(),
        None => (0..SAMPLES)
            .map(|k| plane.unit_circle_point(TAU * k as f64 / SAMPLES as f64))
            .collect(),
    }
}

/// The antinorm ball of a polygon is the polar polygon turned by -pi/2; its
/// vertices are the rotated facet normals.
fn antinorm_circle(plane: &NormedPlane) -> Vec<Vec2> {
    match plane.polygon_vertices() {
        Some(v) => {
            let n = v.len();
            (0..n)
                .map(|i| {
                    let (a, b) = (v[i], v[(i + 1) % n]);
                    let normal = (b - a).rot90() * (-1.0 / minkowski_core::det_form(a, b));
                    -normal.rot90()
                })
                .collect()
        }
        None => (0..SAMPLES)
            .map(|k| {
                let e = Vec2::from_angle(TAU * k as f64 / SAMPLES as f64);
                e / plane.antinorm(e)
            })
            .collect(),
    }
}

fn density_curve(f: impl Fn(f64) -> f64) -> Vec<Vec2> {
    let vals: Vec<(f64, f64)> = (0..SAMPLES)
        .map(|k| {
            let t = TAU * k as f64 / SAMPLES as f64;
            (t, f(t))
        })
        .collect();
    let top = vals.iter().fold(0.0f64, |m, v| m.max(v.1));
    vals.iter().map(|&(t, d)| Vec2::from_angle(t) * (d / top)).collect()
}

/// Renders the requested layers as an SVG document.
pub fn render(plane: &NormedPlane, req: &PlotRequest) -> Result<String> {
    let mut layers = req.layers.clone();
    layers.sort();
    layers.dedup();
    let uc = unit_circle(plane);
    let ac = antinorm_circle(plane);
    let reach = uc.iter().chain(&ac).fold(0.0f64, |m, p| m.max(p.euclid_norm()));
    let cv = Canvas { scale: RADIUS / (1.15 * reach) };

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {s} {s}\" width=\"{s}\" height=\"{s}\">",
        s = SIZE
    );
    let _ = writeln!(svg, "<rect width=\"{s}\" height=\"{s}\" fill=\"white\"/>", s = SIZE);
    let _ = writeln!(
        svg,
        "<g id=\"axes\" stroke=\"#c8c8c8\" stroke-width=\"1\"><line x1=\"0\" y1=\"320\" x2=\"640\" y2=\"320\"/><line x1=\"320\" y1=\"0\" x2=\"320\" y2=\"640\"/></g>"
    );
    for layer in layers {
        match layer {
            Layer::UnitCircle => {
                let _ = writeln!(
                    svg,
                    "<path id=\"unit_circle\" d=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>",
                    cv.closed_path(&uc)
                );
            }
            Layer::AntinormCircle => {
                let _ = writeln!(
                    svg,
                    "<path id=\"antinorm_circle\" d=\"{}\" fill=\"none\" stroke=\"#7a3db8\" stroke-width=\"2\" stroke-dasharray=\"6 4\"/>",
                    cv.closed_path(&ac)
                );
            }
            Layer::Bisectors => {
                let (x, y) = req
                    .pair
                    .ok_or_else(|| Error::InvalidArgument("bisectors layer needs --x and --y".into()))?;
                let mu = build_measure(plane, req.measure_kind, 512)?;
                let rays = [
                    ("busemann", busemann_bisector(plane, x, y)?, "#d62728"),
                    ("glogovskii", glogovskii_bisector(plane, x, y, 1e-12)?, "#1f77b4"),
                    ("measure", measure_bisector(&mu, x, y)?, "#2ca02c"),
                    ("daf", daf_bisector(plane, x, y, 1e-9)?, "#ff7f0e"),
                ];
                svg.push_str("<g id=\"bisectors\">\n");
                for (id, v) in [("leg_x", x), ("leg_y", y)] {
                    svg.push_str(&cv.line(id, v / plane.gauge(v) * 1.1, "#808080", " stroke-dasharray=\"2 3\""));
                }
                for (id, ray, colour) in rays {
                    let d = ray.direction;
                    svg.push_str(&cv.line(id, d / plane.gauge(d) * 1.1, colour, ""));
                }
                svg.push_str("</g>\n");
            }
            Layer::MeasureDensity => {
                let pts = density_curve(|t| raw_density(plane, req.measure_kind, t));
                let _ = writeln!(
                    svg,
                    "<path id=\"measure_density\" d=\"{}\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"1.5\"/>",
                    cv.closed_path(&scaled(&pts, reach))
                );
            }
            Layer::DeksterDensity => {
                let pts = density_curve(|t| raw_density(plane, MeasureKind::DeksterRaw, t));
                let _ = writeln!(
                    svg,
                    "<path id=\"dekster_density\" d=\"{}\" fill=\"none\" stroke=\"#8c564b\" stroke-width=\"1.5\"/>",
                    cv.closed_path(&scaled(&pts, reach))
                );
            }
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn scaled(pts: &[Vec2], reach: f64) -> Vec<Vec2> {
    pts.iter().map(|&p| p * reach).collect()
}
