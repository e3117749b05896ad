//! Every upper estimate of `‖C(A)‖` evaluated on one matrix, with slack
//! accounting, plus the two conjectured inequalities and a seeded fuzzer.
//!
//! Theorems checked (all slacks are `bound − ‖C(A)‖`):
//!
//! | bound | value |
//! |---|---|
//! | norm | `‖A‖²` |
//! | distance to scalars | `m(A)²` |
//! | width product | `min_t b_x(t) b_y(t)` |
//! | Wang–Du | `4 inf‖H − λ‖ · inf‖J − λ‖` |
//! | area | `2 S(W(A))` |
//! | elliptical area | `(4/π) S(W(A))`, a theorem only for elliptical `W(A)` |
//!
//! Conjecture 1 reads `‖A‖² − w(A)² ≤ ‖C(A)‖` and conjecture 2 reads
//! `‖C(A)‖ ≤ (4/π) S(W(A))` for every `A`. Their slacks are recorded, never
//! asserted.

mod ensemble;
mod fuzz;

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::linalg::{
    cartesian_parts, hermitian_min_shift, hermitian_norm, operator_norm, self_commutator, Matrix,
};
use crate::numrange::{
    area_corrected, boundary, min_shift_distance, min_width_product, numerical_radius_with_tol,
    NumRangeError, DEFAULT_AREA_ANGLES, DEFAULT_REFINE_TOL, DEFAULT_WIDTH_ANGLES,
};

pub use ensemble::{random_matrix, trial_seed, Ensemble, UnknownEnsemble};
pub use fuzz::{fuzz_conjectures, FuzzConfig, FuzzOutcome, FuzzRecord, FuzzSummary, SeededSlack};

/// Relative tolerance for theorem assertions, scaled by `max(1, ‖A‖²)`.
pub const THEOREM_TOL: f64 = 1e-6;

/// Settings for [`evaluate_bounds_with`].
#[derive(Clone, Copy, Debug)]
pub struct BoundOptions {
    /// Boundary samples used for the area of `W(A)`.
    pub area_angles: usize,
    /// Grid for the width-product and numerical-radius scans.
    pub width_angles: usize,
    pub refine_tol: f64,
    /// Whether `W(A)` is known to be an ellipse. `None` decides by dimension:
    /// every 2×2 numerical range is elliptical.
    pub elliptical: Option<bool>,
    /// Relative tolerance for theorem flags.
    pub theorem_tol: f64,
}

impl Default for BoundOptions {
    fn default() -> Self {
        Self {
            area_angles: DEFAULT_AREA_ANGLES,
            width_angles: DEFAULT_WIDTH_ANGLES,
            refine_tol: DEFAULT_REFINE_TOL,
            elliptical: None,
            theorem_tol: THEOREM_TOL,
        }
    }
}

/// Upper bounds on `‖C(A)‖`, each as `bound − ‖C(A)‖`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BoundSlacks {
    pub norm_sq: f64,
    pub m_sq: f64,
    pub width_product: f64,
    pub wang_du: f64,
    pub two_area: f64,
    pub four_over_pi_area: f64,
}

impl BoundSlacks {
    /// Smallest slack among the unconditional theorems.
    pub fn min_theorem(&self) -> f64 {
        self.norm_sq
            .min(self.m_sq)
            .min(self.width_product)
            .min(self.wang_du)
            .min(self.two_area)
    }
}

/// Whether each bound holds within the theorem tolerance. The elliptical
/// area bound is only judged when the range is known to be an ellipse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundFlags {
    pub norm_sq: bool,
    pub m_sq: bool,
    pub width_product: bool,
    pub wang_du: bool,
    pub two_area: bool,
    pub four_over_pi_area: Option<bool>,
}

impl BoundFlags {
    pub fn all_theorems_hold(&self) -> bool {
        self.norm_sq
            && self.m_sq
            && self.width_product
            && self.wang_du
            && self.two_area
            && self.four_over_pi_area.unwrap_or(true)
    }

    /// Names of the violated theorems.
    pub fn violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let named = [
            ("norm_sq", self.norm_sq),
            ("m_sq", self.m_sq),
            ("width_product", self.width_product),
            ("wang_du", self.wang_du),
            ("two_area", self.two_area),
            ("four_over_pi_area", self.four_over_pi_area.unwrap_or(true)),
        ];
        for (name, ok) in named {
            if !ok {
                out.push(name);
            }
        }
        out
    }
}

/// `‖C(A)‖` against every estimate.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub dim: usize,
    pub comm_norm: f64,
    pub norm: f64,
    pub norm_sq: f64,
    /// Minimizer of `‖A − λI‖`.
    pub shift: Complex64,
    pub m_sq: f64,
    pub numerical_radius: f64,
    pub width_product: f64,
    /// Rotation angle at which the width product is smallest.
    pub width_angle: f64,
    pub inf_h: f64,
    pub inf_j: f64,
    pub wang_du: f64,
    pub area: f64,
    pub two_area: f64,
    pub four_over_pi_area: f64,
    /// `‖A‖² − w(A)²`.
    pub conj1_lhs: f64,
    pub conj1_slack: f64,
    pub conj2_slack: f64,
    pub elliptical: bool,
    /// Absolute tolerance used for the flags.
    pub theorem_tol: f64,
    pub slacks: BoundSlacks,
    pub satisfied: BoundFlags,
}

impl BoundReport {
    /// `max(1, ‖A‖²)`, the scale of every tolerance.
    pub fn scale(&self) -> f64 {
        self.norm_sq.max(1.0)
    }
}

/// Evaluates every bound with `n_angles` boundary samples for the area and
/// default settings otherwise.
pub fn evaluate_bounds(a: &Matrix, n_angles: usize) -> Result<BoundReport, NumRangeError> {
    evaluate_bounds_with(
        a,
        &BoundOptions {
            area_angles: n_angles,
            ..BoundOptions::default()
        },
    )
}

pub fn evaluate_bounds_with(a: &Matrix, opts: &BoundOptions) -> Result<BoundReport, NumRangeError> {
    let n = a.dim();
    let comm_norm = hermitian_norm(&self_commutator(a))?;
    let norm = operator_norm(a);
    let norm_sq = norm * norm;
    let scale = norm_sq.max(1.0);
    let tol = opts.theorem_tol * scale;

    let shift = min_shift_distance(a, 1e-10 * norm.max(1.0))?;
    let m_sq = shift.distance * shift.distance;
    let radius = numerical_radius_with_tol(a, opts.width_angles, opts.refine_tol)?;
    let (width_angle, width_product) = min_width_product(a, opts.width_angles, opts.refine_tol)?;

    let (h, j) = cartesian_parts(a, 0.0);
    let inf_h = hermitian_min_shift(&h)?;
    let inf_j = hermitian_min_shift(&j)?;
    let wang_du = 4.0 * inf_h * inf_j;

    let area = area_corrected(&boundary(a, opts.area_angles)?);
    let two_area = 2.0 * area;
    let four_over_pi_area = 4.0 / PI * area;
    let conj1_lhs = norm_sq - radius * radius;
    let elliptical = opts.elliptical.unwrap_or(n <= 2);

    let slacks = BoundSlacks {
        norm_sq: norm_sq - comm_norm,
        m_sq: m_sq - comm_norm,
        width_product: width_product - comm_norm,
        wang_du: wang_du - comm_norm,
        two_area: two_area - comm_norm,
        four_over_pi_area: four_over_pi_area - comm_norm,
    };
    let holds = |s: f64| s >= -tol;
    let satisfied = BoundFlags {
        norm_sq: holds(slacks.norm_sq),
        m_sq: holds(slacks.m_sq),
        width_product: holds(slacks.width_product),
        wang_du: holds(slacks.wang_du),
        two_area: holds(slacks.two_area),
        four_over_pi_area: elliptical.then(|| holds(slacks.four_over_pi_area)),
    };

    Ok(BoundReport {
        dim: n,
        comm_norm,
        norm,
        norm_sq,
        shift: shift.lambda,
        m_sq,
        numerical_radius: radius,
        width_product,
        width_angle,
        inf_h,
        inf_j,
        wang_du,
        area,
        two_area,
        four_over_pi_area,
        conj1_lhs,
        conj1_slack: comm_norm - conj1_lhs,
        conj2_slack: slacks.four_over_pi_area,
        elliptical,
        theorem_tol: tol,
        slacks,
        satisfied,
    })
}

/// `‖C(A)‖ − (‖A‖² − w(A)²)`; conjecture 1 claims this is never negative.
pub fn check_conjecture1(a: &Matrix) -> Result<f64, NumRangeError> {
    let comm = hermitian_norm(&self_commutator(a))?;
    let norm = operator_norm(a);
    let w = numerical_radius_with_tol(a, DEFAULT_WIDTH_ANGLES, DEFAULT_REFINE_TOL)?;
    Ok(comm - (norm * norm - w * w))
}

/// `(4/π) S(W(A)) − ‖C(A)‖`; conjecture 2 claims this is never negative.
pub fn check_conjecture2(a: &Matrix, n_angles: usize) -> Result<f64, NumRangeError> {
    let comm = hermitian_norm(&self_commutator(a))?;
    let area = area_corrected(&boundary(a, n_angles)?);
    Ok(4.0 / PI * area - comm)
}
