//! Dense complex linear algebra: the matrix type, Hermitian eigensolvers,
//! operator norms and the self-commutator.

mod eigen;
mod matrix;

use num_complex::Complex64;
use thiserror::Error;

pub use eigen::{
    hermitian_eigen, hermitian_eigen_tridiagonal, hermitian_eigenvalues, HermitianEigen,
    HERMITIAN_TOL, JACOBI_MAX_DIM,
};
pub use matrix::Matrix;

/// Complex entries of every matrix. Finite by the [`Matrix`] invariant.
pub type ComplexScalar = Complex64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinalgError {
    #[error("matrix dimension must be at least 1")]
    Empty,
    #[error("expected {expected} entries for a {n}x{n} matrix, got {got}")]
    Shape {
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error("matrix is not square: {rows} rows but a row of length {cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix is not Hermitian (relative asymmetry {0:e})")]
    NotHermitian(f64),
    #[error("eigensolver did not converge within {0} iterations")]
    NoConvergence(usize),
}

/// `C(A) = A*A − AA*`.
pub fn self_commutator(a: &Matrix) -> Matrix {
    let adj = a.adjoint();
    let c = &(&adj * a) - &(a * &adj);
    // exact Hermitian symmetry removes rounding asymmetry
    c.hermitian_part()
}

/// Spectral norm `‖A‖ = √λ_max(A*A)`.
pub fn operator_norm(a: &Matrix) -> f64 {
    let gram = (&a.adjoint() * a).hermitian_part();
    let values = hermitian_eigenvalues(&gram).expect("A*A is Hermitian and Jacobi converges on it");
    values.last().copied().unwrap_or(0.0).max(0.0).sqrt()
}

/// Spectral norm of a Hermitian matrix, `max |λ|`.
pub fn hermitian_norm(h: &Matrix) -> Result<f64, LinalgError> {
    let values = hermitian_eigenvalues(h)?;
    Ok(values[0].abs().max(values[values.len() - 1].abs()))
}

/// Cartesian decomposition of the rotated matrix `A_t = e^{it}A`:
/// returns `(H_t, J_t)` with `A_t = H_t + i J_t`, both Hermitian.
pub fn cartesian_parts(a: &Matrix, t: f64) -> (Matrix, Matrix) {
    let at = a.scale(Complex64::from_polar(1.0, t));
    let adj = at.adjoint();
    let h = (&at + &adj).scale(Complex64::new(0.5, 0.0));
    // (A_t − A_t*)/(2i)
    let j = (&at - &adj).scale(Complex64::new(0.0, -0.5));
    (h.hermitian_part(), j.hermitian_part())
}

/// `inf_λ ‖H − λI‖` for Hermitian `H`, i.e. half the spectral spread.
pub fn hermitian_min_shift(h: &Matrix) -> Result<f64, LinalgError> {
    let values = hermitian_eigenvalues(h)?;
    Ok(0.5 * (values[values.len() - 1] - values[0]))
}
