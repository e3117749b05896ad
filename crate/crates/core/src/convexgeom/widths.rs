use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use super::polygon::{polygon_area, width, ConvexPolygon, Point};
use super::GeomError;
use crate::optimize::scan_min;

/// Widths along the orthogonal frame `k = (cos t, sin t)`, `j = (−sin t, cos t)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct WidthPair {
    pub t: f64,
    pub wk: f64,
    pub wj: f64,
}

impl WidthPair {
    pub fn product(&self) -> f64 {
        self.wk * self.wj
    }
}

pub fn width_pair(poly: &ConvexPolygon, t: f64) -> WidthPair {
    WidthPair {
        t,
        wk: width(poly, t),
        wj: width(poly, t + FRAC_PI_2),
    }
}

/// `inf_t w_k·w_j` over `t ∈ [0, π/2)`, the quarter-turn symmetry class of
/// the frame `{k, j}`.
pub fn min_width_product(
    poly: &ConvexPolygon,
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
        |t| width_pair(poly, t).product(),
        0.0,
        FRAC_PI_2,
        n_angles,
        refine_tol,
    ))
}

/// `min_t w_k w_j / S`, bracketed by `[1, 2]` for every convex body.
pub fn width_ratio(poly: &ConvexPolygon) -> Result<f64, GeomError> {
    let area = polygon_area(poly);
    if poly.is_degenerate() || area <= 1e-12 * poly.diameter().powi(2) {
        return Err(GeomError::Degenerate {
            vertices: poly.vertices().len(),
        });
    }
    let (_, value) = min_width_product(poly, super::DEFAULT_ANGLES, super::DEFAULT_REFINE_TOL)?;
    Ok(value / area)
}

const LEAST_WIDTH_SCAN: usize = 4096;

/// Direction of least width in `[0, π)` and the width there.
pub fn least_width_direction(poly: &ConvexPolygon) -> (f64, f64) {
    scan_min(|t| width(poly, t), 0.0, PI, LEAST_WIDTH_SCAN, 1e-13)
}

/// Quadrilateral `Q ⊆ P` whose doubled area equals the width product at the
/// least-width direction.
///
/// With `u` the least-width direction, `n` and `s` are the ends of a chord
/// parallel to `u` joining the two supporting lines normal to `u`; `e` and
/// `w` are the points of `P` farthest from the line `ns` on either side. A
/// side with no points contributes the midpoint of `ns`, which makes `Q` a
/// triangle with the same area formula.
pub fn witness_quadrilateral(poly: &ConvexPolygon) -> Result<ConvexPolygon, GeomError> {
    let area = polygon_area(poly);
    let diam = poly.diameter();
    if poly.is_degenerate() || area <= 1e-12 * diam * diam {
        return Err(GeomError::Degenerate {
            vertices: poly.vertices().len(),
        });
    }
    let (t, _) = least_width_direction(poly);
    let u = (t.cos(), t.sin());
    let verts = poly.vertices();

    let (mut i_hi, mut i_lo) = (0, 0);
    for (i, v) in verts.iter().enumerate() {
        if v.dot(u) > verts[i_hi].dot(u) {
            i_hi = i;
        }
        if v.dot(u) < verts[i_lo].dot(u) {
            i_lo = i;
        }
    }
    let hi = verts[i_hi].dot(u);
    let lo = verts[i_lo].dot(u);
    let along = |p: Point, delta: f64| Point::new(p.x + delta * u.0, p.y + delta * u.1);

    // Chord from the top vertex down to the bottom line, or from the bottom
    // vertex up; keep whichever foot lands on P.
    let cand_a = (verts[i_hi], along(verts[i_hi], lo - hi));
    let cand_b = (along(verts[i_lo], hi - lo), verts[i_lo]);
    let (n, s) = if poly.outside_distance(cand_a.1) <= poly.outside_distance(cand_b.0) {
        cand_a
    } else {
        cand_b
    };

    // signed offset across the chord line
    let perp = (-u.1, u.0);
    let offset = |p: Point| p.sub(n).dot(perp);
    let (mut e, mut w) = (verts[0], verts[0]);
    for &v in verts {
        if offset(v) > offset(e) {
            e = v;
        }
        if offset(v) < offset(w) {
            w = v;
        }
    }
    let mid = n.add(s).scale(0.5);
    let tol = 1e-12 * diam;
    if offset(e) <= tol {
        e = mid;
    }
    if offset(w) >= -tol {
        w = mid;
    }
    ConvexPolygon::from_points(&[n, e, s, w])
}
