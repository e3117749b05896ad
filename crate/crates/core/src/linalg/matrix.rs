use std::fmt;
use std::ops::{Add, Index, Mul, Sub};

use num_complex::Complex64;

use super::LinalgError;

/// Dense square complex matrix stored row-major.
///
/// Matrices are values: every operation returns a fresh matrix and no
/// method mutates `self`. All entries are finite.
#[derive(Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<Complex64>,
}

impl Matrix {
    /// Builds an `n × n` matrix from `n²` row-major entries.
    pub fn from_row_major(n: usize, data: Vec<Complex64>) -> Result<Self, LinalgError> {
        if n == 0 {
            return Err(LinalgError::Empty);
        }
        if data.len() != n * n {
            return Err(LinalgError::Shape {
                n,
                expected: n * n,
                got: data.len(),
            });
        }
        if let Some(pos) = data
            .iter()
            .position(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(LinalgError::NonFinite {
                row: pos / n,
                col: pos % n,
            });
        }
        Ok(Self { n, data })
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self, LinalgError> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(LinalgError::NotSquare {
                rows: n,
                cols: bad.len(),
            });
        }
        Self::from_row_major(n, rows.concat())
    }

    /// Convenience constructor for real matrices given as rows.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self, LinalgError> {
        let rows: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    /// Builds a matrix entry by entry. Panics on non-finite entries or `n == 0`,
    /// so only use it with closures known to produce finite values.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self::from_row_major(n, data).expect("from_fn produced an invalid matrix")
    }

    pub fn zeros(n: usize) -> Self {
        Self::from_fn(n, |_, _| Complex64::new(0.0, 0.0))
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| {
            Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0)
        })
    }

    pub fn from_diagonal(diag: &[Complex64]) -> Result<Self, LinalgError> {
        let n = diag.len();
        let mut data = vec![Complex64::new(0.0, 0.0); n * n];
        for (i, &d) in diag.iter().enumerate() {
            data[i * n + i] = d;
        }
        Self::from_row_major(n, data)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<Complex64> {
        self.data
    }

    pub fn adjoint(&self) -> Self {
        let n = self.n;
        Self {
            n,
            data: (0..n * n)
                .map(|idx| self.data[(idx % n) * n + idx / n].conj())
                .collect(),
        }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|&z| z * c).collect(),
        }
    }

    /// `A − λI`.
    pub fn shift(&self, lambda: Complex64) -> Self {
        let mut data = self.data.clone();
        for i in 0..self.n {
            data[i * self.n + i] -= lambda;
        }
        Self { n: self.n, data }
    }

    /// `(A + A*)/2`.
    pub fn hermitian_part(&self) -> Self {
        let n = self.n;
        Self {
            n,
            data: (0..n * n)
                .map(|idx| {
                    let (i, j) = (idx / n, idx % n);
                    (self.data[i * n + j] + self.data[j * n + i].conj()) * 0.5
                })
                .collect(),
        }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self.data[i * self.n + i]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Frobenius norm of `A − A*` relative to the Frobenius norm of `A`
    /// (0 for the zero matrix).
    pub fn hermitian_defect(&self) -> f64 {
        let n = self.n;
        let mut defect = 0.0;
        for i in 0..n {
            for j in 0..n {
                defect += (self.data[i * n + j] - self.data[j * n + i].conj()).norm_sqr();
            }
        }
        let scale = self.frobenius_norm();
        if scale == 0.0 {
            0.0
        } else {
            defect.sqrt() / scale
        }
    }

    /// `x* A x` for a vector of length `n`.
    pub fn quadratic_form(&self, x: &[Complex64]) -> Complex64 {
        let n = self.n;
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..n {
            let mut row = Complex64::new(0.0, 0.0);
            for j in 0..n {
                row += self.data[i * n + j] * x[j];
            }
            acc += x[i].conj() * row;
        }
        acc
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        assert_eq!(self.n, other.n, "dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn matmul(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if self.n != rhs.n {
            return Err(LinalgError::DimensionMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        let n = self.n;
        let mut data = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = self.data[i * n + k];
                if aik == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let row = &rhs.data[k * n..(k + 1) * n];
                for (out, &b) in data[i * n..(i + 1) * n].iter_mut().zip(row) {
                    *out += aik * b;
                }
            }
        }
        Ok(Matrix { n, data })
    }

    fn zip_with(
        &self,
        rhs: &Matrix,
        f: impl Fn(Complex64, Complex64) -> Complex64,
    ) -> Result<Matrix, LinalgError> {
        if self.n != rhs.n {
            return Err(LinalgError::DimensionMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        Ok(Matrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn checked_add(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn checked_sub(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.n + j]
    }
}

// Operator impls panic on dimension mismatch, like slice indexing.
impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        self.matmul(rhs).expect("matrix product dimension mismatch")
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        self.checked_add(rhs)
            .expect("matrix sum dimension mismatch")
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        self.checked_sub(rhs)
            .expect("matrix difference dimension mismatch")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.n, self.n)?;
        for i in 0..self.n {
            write!(f, "  ")?;
            for j in 0..self.n {
                let z = self.get(i, j);
                write!(f, "{:>10.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn rejects_bad_shapes_and_values() {
        assert_eq!(Matrix::from_row_major(0, vec![]), Err(LinalgError::Empty));
        assert!(matches!(
            Matrix::from_row_major(2, vec![c(1.0, 0.0); 3]),
            Err(LinalgError::Shape { .. })
        ));
        assert!(matches!(
            Matrix::from_rows(&[vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(1.0, 0.0)]]),
            Err(LinalgError::NotSquare { .. })
        ));
        assert_eq!(
            Matrix::from_row_major(
                2,
                vec![c(0.0, 0.0), c(f64::NAN, 0.0), c(0.0, 0.0), c(0.0, 0.0)]
            ),
            Err(LinalgError::NonFinite { row: 0, col: 1 })
        );
    }

    #[test]
    fn adjoint_examples() {
        let id = Matrix::identity(3);
        assert_eq!(id.adjoint(), id);

        let nil = Matrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        let expected = Matrix::from_real_rows(&[&[0.0, 0.0], &[1.0, 0.0]]).unwrap();
        assert_eq!(nil.adjoint(), expected);

        let h = Matrix::from_rows(&[
            vec![c(2.0, 0.0), c(1.0, -3.0)],
            vec![c(1.0, 3.0), c(-1.0, 0.0)],
        ])
        .unwrap();
        assert_eq!(h.adjoint(), h);
    }

    #[test]
    fn product_and_trace() {
        let a = Matrix::from_rows(&[
            vec![c(1.0, 1.0), c(2.0, 0.0)],
            vec![c(0.0, -1.0), c(3.0, 0.0)],
        ])
        .unwrap();
        let b = Matrix::identity(2).scale(c(0.0, 1.0));
        let ab = &a * &b;
        assert_eq!(ab.get(0, 0), c(-1.0, 1.0));
        assert_eq!(ab.get(1, 1), c(0.0, 3.0));
        assert_eq!(a.trace(), c(4.0, 1.0));
        assert_eq!(a.shift(c(1.0, 1.0)).trace(), c(2.0, -1.0));
    }

    #[test]
    fn quadratic_form_of_hermitian_is_real() {
        let h = Matrix::from_rows(&[
            vec![c(2.0, 0.0), c(1.0, -3.0)],
            vec![c(1.0, 3.0), c(-1.0, 0.0)],
        ])
        .unwrap();
        let x = [c(0.6, 0.0), c(0.0, 0.8)];
        let q = h.quadratic_form(&x);
        assert!(q.im.abs() < 1e-15);
        assert!(h.hermitian_defect() < 1e-16);
    }
}
