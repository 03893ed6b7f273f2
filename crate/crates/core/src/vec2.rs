//! Plane vectors and the fixed determinant form.

use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// A vector of the coordinate plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Point of the Euclidean unit circle at angle `theta`.
    #[inline]
    pub fn from_angle(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self { x: c, y: s }
    }

    #[inline]
    pub fn dot(self, o: Vec2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// Quarter turn counterclockwise: `(x, y) -> (-y, x)`.
    #[inline]
    pub fn rot90(self) -> Self {
        Self { x: -self.y, y: self.x }
    }

    #[inline]
    pub fn euclid_norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Polar angle in `(-pi, pi]`.
    #[inline]
    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.x == 0.0 && self.y == 0.0
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    #[inline]
    pub fn max_abs(self) -> f64 {
        self.x.abs().max(self.y.abs())
    }
}

/// The determinant form `[u, v] = u.x * v.y - u.y * v.x`.
#[inline]
pub fn det_form(u: Vec2, v: Vec2) -> f64 {
    u.x * v.y - u.y * v.x
}

/// Whether `u` and `v` span a line or less, relative to their Euclidean sizes.
pub fn dependent(u: Vec2, v: Vec2, rel_tol: f64) -> bool {
    det_form(u, v).abs() <= rel_tol * u.euclid_norm() * v.euclid_norm()
}

impl Add for Vec2 {
    type Output = Vec2;
    #[inline]
    fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    #[inline]
    fn sub(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    #[inline]
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn mul(self, s: f64) -> Vec2 {
        Vec2::new(self.x * s, self.y * s)
    }
}

impl Mul<Vec2> for f64 {
    type Output = Vec2;
    #[inline]
    fn mul(self, v: Vec2) -> Vec2 {
        v * self
    }
}

impl Div<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn div(self, s: f64) -> Vec2 {
        Vec2::new(self.x / s, self.y / s)
    }
}

impl From<[f64; 2]> for Vec2 {
    fn from(a: [f64; 2]) -> Self {
        Vec2::new(a[0], a[1])
    }
}

impl From<(f64, f64)> for Vec2 {
    fn from(a: (f64, f64)) -> Self {
        Vec2::new(a.0, a.1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_form_examples() {
        assert_eq!(det_form(Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)), 1.0);
        assert_eq!(det_form(Vec2::new(2.0, 3.0), Vec2::new(2.0, 3.0)), 0.0);
        assert_eq!(det_form(Vec2::new(1.0, 2.0), Vec2::new(3.0, 4.0)), -2.0);
    }

    #[test]
    fn rot90_is_quarter_turn() {
        let v = Vec2::new(3.0, 1.0);
        assert_eq!(v.rot90(), Vec2::new(-1.0, 3.0));
        assert_eq!(v.rot90().rot90(), -v);
        // [v, y] = <rot90(v), y>
        let y = Vec2::new(-2.0, 5.0);
        assert_eq!(det_form(v, y), v.rot90().dot(y));
    }
}
