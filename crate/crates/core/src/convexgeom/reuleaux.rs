use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_6, PI};

use super::polygon::{ConvexPolygon, Point};
use super::GeomError;

/// Polygonal approximation of the Reuleaux triangle of constant width
/// `width`, with `n_samples` points on each of its three arcs (arc endpoints
/// included). The approximation is inscribed, so every width lies in
/// `[width·(1 − O(1/n²)), width]`.
pub fn reuleaux_triangle(width: f64, n_samples: usize) -> Result<ConvexPolygon, GeomError> {
    if !(width > 0.0) || !width.is_finite() {
        return Err(GeomError::InvalidParameter(format!(
            "width must be positive, got {width}"
        )));
    }
    if n_samples < 30 {
        return Err(GeomError::InvalidParameter(format!(
            "need at least 30 samples per arc, got {n_samples}"
        )));
    }
    let circumradius = width / 3f64.sqrt();
    let mut pts = Vec::with_capacity(3 * n_samples);
    for k in 0..3 {
        let vertex_angle = FRAC_PI_2 + 2.0 * PI * k as f64 / 3.0;
        let center = Point::from_polar(circumradius, vertex_angle);
        // the arc opposite this vertex, seen from it under 60°
        let mid = vertex_angle + PI;
        for i in 0..n_samples {
            let beta = mid - FRAC_PI_6 + FRAC_PI_3 * i as f64 / (n_samples - 1) as f64;
            pts.push(center.add(Point::from_polar(width, beta)));
        }
    }
    ConvexPolygon::from_points(&pts)
}

/// Area of the Reuleaux triangle of width `w`: `(π − √3)w²/2`.
pub fn reuleaux_area(width: f64) -> f64 {
    0.5 * (PI - 3f64.sqrt()) * width * width
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexgeom::{polygon_area, width as body_width};

    #[test]
    fn constant_width() {
        let r = reuleaux_triangle(1.0, 200).unwrap();
        for k in 0..64 {
            let w = body_width(&r, 2.0 * PI * k as f64 / 64.0 + 0.013);
            assert!((1.0 - 1e-3..=1.0 + 1e-12).contains(&w), "w = {w}");
        }
    }

    #[test]
    fn area_matches_closed_form() {
        let r = reuleaux_triangle(1.0, 200).unwrap();
        assert!((polygon_area(&r) - reuleaux_area(1.0)).abs() < 1e-3);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(reuleaux_triangle(0.0, 100).is_err());
        assert!(reuleaux_triangle(1.0, 10).is_err());
    }
}
