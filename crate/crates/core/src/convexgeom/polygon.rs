use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::GeomError;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn from_polar(r: f64, theta: f64) -> Self {
        Self::new(r * theta.cos(), r * theta.sin())
    }

    #[inline]
    pub fn dot(self, dir: (f64, f64)) -> f64 {
        self.x * dir.0 + self.y * dir.1
    }

    #[inline]
    pub fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }

    #[inline]
    pub fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }

    #[inline]
    pub fn scale(self, c: f64) -> Point {
        Point::new(self.x * c, self.y * c)
    }

    pub fn dist(self, o: Point) -> f64 {
        (self.x - o.x).hypot(self.y - o.y)
    }
}

#[inline]
fn cross(o: Point, a: Point, b: Point) -> f64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

/// Signed shoelace area of a closed vertex loop (positive when CCW).
pub fn shoelace(vertices: &[Point]) -> f64 {
    let n = vertices.len();
    if n < 3 {
        return 0.0;
    }
    let mut s = 0.0;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        s += a.x * b.y - b.x * a.y;
    }
    0.5 * s
}

/// Convex hull by Andrew's monotone chain, counterclockwise, starting from
/// the lexicographically smallest point. Near-duplicate points (closer than
/// `1e-12·scale`) are merged and collinear middle points are dropped, so the
/// result may have fewer than three vertices for degenerate input.
pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut pts: Vec<Point> = points
        .iter()
        .copied()
        .filter(|p| p.x.is_finite() && p.y.is_finite())
        .collect();
    if pts.is_empty() {
        return pts;
    }
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));

    let scale = extent(&pts);
    let merge = 1e-12 * scale;
    let mut uniq: Vec<Point> = Vec::with_capacity(pts.len());
    for p in pts {
        // sorted by x, so compare against the last few kept points
        if uniq.iter().rev().take(4).any(|q| q.dist(p) <= merge) {
            continue;
        }
        uniq.push(p);
    }
    if uniq.len() < 3 {
        return uniq;
    }

    let eps = 1e-12 * scale * scale;
    let mut hull: Vec<Point> = Vec::with_capacity(2 * uniq.len());
    for &p in &uniq {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= eps {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in uniq.iter().rev().skip(1) {
        while hull.len() >= lower_len && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= eps
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    if hull.len() == 2 && hull[0].dist(hull[1]) <= merge {
        hull.pop();
    }
    hull
}

fn extent(pts: &[Point]) -> f64 {
    let (mut xmin, mut xmax, mut ymin, mut ymax) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for p in pts {
        xmin = xmin.min(p.x);
        xmax = xmax.max(p.x);
        ymin = ymin.min(p.y);
        ymax = ymax.max(p.y);
    }
    let span = (xmax - xmin).max(ymax - ymin);
    let mag = xmin.abs().max(xmax.abs()).max(ymin.abs()).max(ymax.abs());
    if span > 0.0 {
        span
    } else {
        mag.max(f64::MIN_POSITIVE)
    }
}

/// Compact convex body given by its vertices in counterclockwise order.
///
/// Constructed through [`ConvexPolygon::from_points`], which convex-hulls the
/// input. Bodies with fewer than three vertices (a point or a segment) come
/// only from [`ConvexPolygon::degenerate`]; they have zero area and zero
/// width in some direction.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

impl ConvexPolygon {
    /// Convex hull of an arbitrary point cloud. Errors unless the hull has
    /// at least three vertices.
    pub fn from_points(points: &[Point]) -> Result<Self, GeomError> {
        if points.iter().any(|p| !p.x.is_finite() || !p.y.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        let vertices = convex_hull(points);
        if vertices.len() < 3 {
            return Err(GeomError::Degenerate {
                vertices: vertices.len(),
            });
        }
        Ok(Self { vertices })
    }

    /// Hull of the input without the three-vertex requirement.
    pub fn degenerate(points: &[Point]) -> Result<Self, GeomError> {
        if points.is_empty() {
            return Err(GeomError::Degenerate { vertices: 0 });
        }
        if points.iter().any(|p| !p.x.is_finite() || !p.y.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        Ok(Self {
            vertices: convex_hull(points),
        })
    }

    /// Axis-aligned rectangle centered at the origin.
    pub fn rectangle(width: f64, height: f64) -> Result<Self, GeomError> {
        let (w, h) = (0.5 * width, 0.5 * height);
        Self::from_points(&[
            Point::new(-w, -h),
            Point::new(w, -h),
            Point::new(w, h),
            Point::new(-w, h),
        ])
    }

    /// Regular `sides`-gon inscribed in the circle of radius `radius`, with a
    /// vertex on the positive real axis.
    pub fn regular(sides: usize, radius: f64) -> Result<Self, GeomError> {
        let pts: Vec<Point> = (0..sides)
            .map(|k| Point::from_polar(radius, 2.0 * PI * k as f64 / sides as f64))
            .collect();
        Self::from_points(&pts)
    }

    /// Equilateral triangle with vertices `r·exp(2πik/3)`.
    pub fn equilateral_triangle(circumradius: f64) -> Result<Self, GeomError> {
        Self::regular(3, circumradius)
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn is_degenerate(&self) -> bool {
        self.vertices.len() < 3
    }

    pub fn translate(&self, by: Point) -> Self {
        Self {
            vertices: self.vertices.iter().map(|v| v.add(by)).collect(),
        }
    }

    pub fn scale(&self, c: f64) -> Result<Self, GeomError> {
        let pts: Vec<Point> = self.vertices.iter().map(|v| v.scale(c)).collect();
        if self.is_degenerate() {
            Self::degenerate(&pts)
        } else {
            Self::from_points(&pts)
        }
    }

    /// Largest vertex distance; the natural length scale of the body.
    pub fn diameter(&self) -> f64 {
        let mut d: f64 = 0.0;
        for (i, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[i + 1..] {
                d = d.max(a.dist(*b));
            }
        }
        d
    }

    /// Signed distance of `p` outside the polygon (≤ 0 when inside).
    pub fn outside_distance(&self, p: Point) -> f64 {
        let n = self.vertices.len();
        match n {
            0 => f64::INFINITY,
            1 => p.dist(self.vertices[0]),
            2 => segment_distance(p, self.vertices[0], self.vertices[1]),
            _ => {
                let mut worst = f64::MIN;
                for i in 0..n {
                    let a = self.vertices[i];
                    let b = self.vertices[(i + 1) % n];
                    let len = a.dist(b);
                    // inward normal is to the left of a→b
                    let d = -cross(a, b, p) / len;
                    worst = worst.max(d);
                }
                worst
            }
        }
    }
}

fn segment_distance(p: Point, a: Point, b: Point) -> f64 {
    let ab = b.sub(a);
    let len2 = ab.x * ab.x + ab.y * ab.y;
    if len2 == 0.0 {
        return p.dist(a);
    }
    let t = (p.sub(a).dot((ab.x, ab.y)) / len2).clamp(0.0, 1.0);
    p.dist(a.add(ab.scale(t)))
}

/// Support function `h(θ) = max_v ⟨v, (cos θ, sin θ)⟩`.
pub fn support(poly: &ConvexPolygon, theta: f64) -> f64 {
    let dir = (theta.cos(), theta.sin());
    poly.vertices
        .iter()
        .map(|v| v.dot(dir))
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Width in the direction `θ`: `h(θ) + h(θ + π)`.
pub fn width(poly: &ConvexPolygon, theta: f64) -> f64 {
    let dir = (theta.cos(), theta.sin());
    let (mut hi, mut lo) = (f64::NEG_INFINITY, f64::INFINITY);
    for v in &poly.vertices {
        let d = v.dot(dir);
        hi = hi.max(d);
        lo = lo.min(d);
    }
    hi - lo
}

pub fn polygon_area(poly: &ConvexPolygon) -> f64 {
    shoelace(&poly.vertices).max(0.0)
}
