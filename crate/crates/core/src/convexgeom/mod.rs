//! Planar convex bodies and their width functionals: support functions,
//! directional widths, the minimal width product `inf_t w_k w_j`, the
//! inscribed witness quadrilateral, ellipses and Reuleaux triangles.

mod ellipse;
mod polygon;
mod reuleaux;
mod widths;

use thiserror::Error;

pub use ellipse::{ellipse_min_width_product, ellipse_width, EllipseSpec};
pub use polygon::{convex_hull, polygon_area, shoelace, support, width, ConvexPolygon, Point};
pub use reuleaux::{reuleaux_area, reuleaux_triangle};
pub use widths::{
    least_width_direction, min_width_product, width_pair, width_ratio, witness_quadrilateral,
    WidthPair,
};

/// Default scan density for width products over `[0, π/2)`.
pub const DEFAULT_ANGLES: usize = 256;
/// Default golden-section bracket width, in radians.
pub const DEFAULT_REFINE_TOL: f64 = 1e-10;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("degenerate convex body ({vertices} hull vertices)")]
    Degenerate { vertices: usize },
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("ellipse needs a >= b >= 0, got a = {a}, b = {b}")]
    InvalidEllipse { a: f64, b: f64 },
    #[error("need at least {min} scan angles, got {got}")]
    TooFewAngles { got: usize, min: usize },
    #[error("{0}")]
    InvalidParameter(String),
}
