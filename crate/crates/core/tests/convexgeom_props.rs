use std::f64::consts::PI;

use proptest::prelude::*;
use selfcomm::convexgeom::{
    ellipse_width, min_width_product, polygon_area, reuleaux_triangle, width, width_ratio, witness_quadrilateral,
    ConvexPolygon, EllipseSpec, Point, DEFAULT_ANGLES, DEFAULT_REFINE_TOL,
};

fn point() -> impl Strategy<Value = Point> {
    (-5.0..5.0f64, -5.0..5.0f64).prop_map(|(x, y)| Point::new(x, y))
}

fn hull() -> impl Strategy<Value = ConvexPolygon> {
    prop::collection::vec(point(), 5..=40)
        .prop_filter_map("degenerate hull", |pts| {
            let p = ConvexPolygon::from_points(&pts).ok()?;
            (!p.is_degenerate() && polygon_area(&p) > 1e-3).then_some(p)
        })
}

fn spread(poly: &ConvexPolygon, t: f64) -> f64 {
    let (lo, hi) = poly
        .vertices()
        .iter()
        .map(|v| v.x * t.cos() + v.y * t.sin())
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), s| (lo.min(s), hi.max(s)));
    hi - lo
}

/// Least width by the edge-normal characterization: it is attained with one
/// supporting line through an edge.
fn least_width_by_edges(poly: &ConvexPolygon) -> (f64, f64) {
    let v = poly.vertices();
    let mut best = (0.0, f64::INFINITY);
    for i in 0..v.len() {
        let (p, q) = (v[i], v[(i + 1) % v.len()]);
        let t = (q.y - p.y).atan2(q.x - p.x) + PI / 2.0;
        let w = spread(poly, t);
        if w < best.1 {
            best = (t, w);
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, ..ProptestConfig::default() })]

    #[test]
    fn width_product_at_most_twice_area(p in hull()) {
        let area = polygon_area(&p);
        let (_, product) = min_width_product(&p, DEFAULT_ANGLES, DEFAULT_REFINE_TOL).unwrap();
        prop_assert!(product <= 2.0 * area + 1e-9, "{product} > 2·{area}");
        let ratio = width_ratio(&p).unwrap();
        prop_assert!((1.0 - 1e-9..=2.0 + 1e-9).contains(&ratio), "ratio {ratio}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn width_product_scales_quadratically(p in hull(), c in 0.1..10.0f64) {
        let (_, v) = min_width_product(&p, DEFAULT_ANGLES, DEFAULT_REFINE_TOL).unwrap();
        let (_, vc) = min_width_product(&p.scale(c).unwrap(), DEFAULT_ANGLES, DEFAULT_REFINE_TOL).unwrap();
        prop_assert!((vc - c * c * v).abs() <= 1e-9 * c * c * v);
    }

    #[test]
    fn width_is_translation_invariant(p in hull(), d in point(), t in 0.0..PI) {
        prop_assert!((width(&p, t) - width(&p.translate(d), t)).abs() <= 1e-12 * p.diameter().max(1.0) * 10.0);
        prop_assert!((width(&p, t) - spread(&p, t)).abs() <= 1e-12 * p.diameter().max(1.0) * 10.0);
    }

    #[test]
    fn witness_area_is_half_the_product(p in hull()) {
        let q = witness_quadrilateral(&p).unwrap();
        let (t, least) = least_width_by_edges(&p);
        let product = least * spread(&p, t + PI / 2.0);
        let scale = p.diameter().powi(2);
        prop_assert!((2.0 * polygon_area(&q) - product).abs() <= 1e-8 * scale,
            "2·{} vs {product}", polygon_area(&q));
        // Q lies inside P
        for v in q.vertices() {
            prop_assert!(p.outside_distance(*v) <= 1e-9 * p.diameter());
        }
    }

    #[test]
    fn reuleaux_ratio_between_disk_and_triangle(w in 0.1..10.0f64, n in 30usize..300) {
        let r = width_ratio(&reuleaux_triangle(w, n).unwrap()).unwrap();
        prop_assert!(r >= 4.0 / PI - 5e-3 && r <= 2.0 / (PI - 3f64.sqrt()) + 5e-3, "{r}");
    }

    #[test]
    fn ellipse_width_matches_inscribed_polygon(a in 0.2..5.0f64, ratio in 0.05..1.0f64, rot in 0.0..PI, t in 0.0..PI) {
        let e = EllipseSpec::new(a, a * ratio, Point::new(1.0, -2.0), rot).unwrap();
        let poly = e.to_polygon(4096).unwrap();
        let exact = ellipse_width(&e, t);
        prop_assert!((exact.wk - width(&poly, t)).abs() <= 1e-4 * a);
        prop_assert!((exact.wj - width(&poly, t + PI / 2.0)).abs() <= 1e-4 * a);
    }
}
