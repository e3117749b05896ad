use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use super::polygon::{ConvexPolygon, Point};
use super::widths::WidthPair;
use super::GeomError;
use crate::optimize::scan_min;

/// Ellipse with semi-axes `a ≥ b ≥ 0`, rotated by `rotation` about `center`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EllipseSpec {
    pub a: f64,
    pub b: f64,
    pub center: Point,
    pub rotation: f64,
}

impl EllipseSpec {
    pub fn new(a: f64, b: f64, center: Point, rotation: f64) -> Result<Self, GeomError> {
        if !(a.is_finite() && b.is_finite() && rotation.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        if !(a >= b && b >= 0.0) {
            return Err(GeomError::InvalidEllipse { a, b });
        }
        Ok(Self {
            a,
            b,
            center,
            rotation,
        })
    }

    /// Centered, axis-aligned ellipse `x²/a² + y²/b² = 1`.
    pub fn canonical(a: f64, b: f64) -> Result<Self, GeomError> {
        Self::new(a, b, Point::new(0.0, 0.0), 0.0)
    }

    pub fn area(&self) -> f64 {
        PI * self.a * self.b
    }

    pub fn point_at(&self, s: f64) -> Point {
        let (x, y) = (self.a * s.cos(), self.b * s.sin());
        let (c, sn) = (self.rotation.cos(), self.rotation.sin());
        Point::new(
            self.center.x + c * x - sn * y,
            self.center.y + sn * x + c * y,
        )
    }

    /// Inscribed polygon with `n` vertices equally spaced in the parameter.
    pub fn to_polygon(&self, n: usize) -> Result<ConvexPolygon, GeomError> {
        let pts: Vec<Point> = (0..n)
            .map(|k| self.point_at(2.0 * PI * k as f64 / n as f64))
            .collect();
        ConvexPolygon::from_points(&pts)
    }
}

/// Closed-form widths of an ellipse along `k(t)` and `j(t)`.
pub fn ellipse_width(e: &EllipseSpec, t: f64) -> WidthPair {
    let phi = t - e.rotation;
    let (c2, s2) = (phi.cos().powi(2), phi.sin().powi(2));
    let (a2, b2) = (e.a * e.a, e.b * e.b);
    WidthPair {
        t,
        wk: 2.0 * (a2 * c2 + b2 * s2).sqrt(),
        wj: 2.0 * (a2 * s2 + b2 * c2).sqrt(),
    }
}

/// `min_t w_k w_j` for an ellipse (`= 4ab`, attained on the axes).
pub fn ellipse_min_width_product(
    e: &EllipseSpec,
    n_angles: usize,
    refine_tol: f64,
) -> Result<(f64, f64), GeomError> {
    if n_angles < 64 {
        return Err(GeomError::TooFewAngles {
            got: n_angles,
            min: 64,
        });
    }
    Ok(scan_min(
        |t| ellipse_width(e, t).product(),
        0.0,
        FRAC_PI_2,
        n_angles,
        refine_tol,
    ))
}
