//! Hermitian eigensolvers.
//!
//! Small problems (n ≤ [`JACOBI_MAX_DIM`]) use cyclic complex Jacobi
//! rotations. Larger ones are reduced to a real symmetric tridiagonal matrix
//! by Householder reflections and finished with implicit QL. Both paths
//! return eigenvalues in ascending order with an orthonormal eigenvector
//! system stored column-wise.

use num_complex::Complex64;

use super::{LinalgError, Matrix};

/// Relative asymmetry tolerated by [`hermitian_eigen`].
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Largest dimension handled by the Jacobi path.
pub const JACOBI_MAX_DIM: usize = 64;

const JACOBI_MAX_SWEEPS: usize = 100;
const JACOBI_OFF_TOL: f64 = 1e-14;
const QL_MAX_ITER: usize = 60;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Spectral decomposition `H = V Λ V*` of a Hermitian matrix.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    /// Eigenvalues in ascending order.
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors, column `k` belongs to `values[k]`.
    pub vectors: Matrix,
}

impl HermitianEigen {
    pub fn vector(&self, k: usize) -> Vec<Complex64> {
        let n = self.vectors.dim();
        (0..n).map(|i| self.vectors.get(i, k)).collect()
    }

    /// Eigenvector of the largest eigenvalue.
    pub fn top_vector(&self) -> Vec<Complex64> {
        self.vector(self.values.len() - 1)
    }

    pub fn min(&self) -> f64 {
        self.values[0]
    }

    pub fn max(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    /// `V Λ V*`.
    pub fn reconstruct(&self) -> Matrix {
        let n = self.vectors.dim();
        Matrix::from_fn(n, |i, j| {
            (0..n)
                .map(|k| self.vectors.get(i, k) * self.values[k] * self.vectors.get(j, k).conj())
                .sum()
        })
    }
}

fn check_hermitian(h: &Matrix) -> Result<Vec<Complex64>, LinalgError> {
    let defect = h.hermitian_defect();
    if defect > HERMITIAN_TOL {
        return Err(LinalgError::NotHermitian(defect));
    }
    Ok(h.hermitian_part().into_vec())
}

/// Full eigendecomposition of a Hermitian matrix.
pub fn hermitian_eigen(h: &Matrix) -> Result<HermitianEigen, LinalgError> {
    let a = check_hermitian(h)?;
    let n = h.dim();
    let (values, vectors) = if n <= JACOBI_MAX_DIM {
        jacobi(n, a, true)?
    } else {
        tridiagonal_ql(n, a, true)?
    };
    let vectors = vectors.expect("vectors requested");
    Ok(sorted(values, Some(vectors), n).into_eigen(n))
}

/// Eigenvalues only, ascending. Cheaper than [`hermitian_eigen`] because no
/// rotations are accumulated.
pub fn hermitian_eigenvalues(h: &Matrix) -> Result<Vec<f64>, LinalgError> {
    let a = check_hermitian(h)?;
    let n = h.dim();
    let (values, _) = if n <= JACOBI_MAX_DIM {
        jacobi(n, a, false)?
    } else {
        tridiagonal_ql(n, a, false)?
    };
    let mut values = values;
    values.sort_by(f64::total_cmp);
    Ok(values)
}

struct Sorted {
    values: Vec<f64>,
    vectors: Vec<Complex64>,
}

impl Sorted {
    fn into_eigen(self, n: usize) -> HermitianEigen {
        HermitianEigen {
            values: self.values,
            vectors: Matrix::from_row_major(n, self.vectors).expect("finite eigenvectors"),
        }
    }
}

fn sorted(values: Vec<f64>, vectors: Option<Vec<Complex64>>, n: usize) -> Sorted {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let vals = order.iter().map(|&k| values[k]).collect();
    let vecs = match vectors {
        Some(v) => {
            let mut out = vec![ZERO; n * n];
            for (new_col, &old_col) in order.iter().enumerate() {
                for i in 0..n {
                    out[i * n + new_col] = v[i * n + old_col];
                }
            }
            out
        }
        None => Vec::new(),
    };
    Sorted {
        values: vals,
        vectors: vecs,
    }
}

fn off_diagonal_norm(n: usize, a: &[Complex64]) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j].norm_sqr();
            }
        }
    }
    s.sqrt()
}

type Decomposition = (Vec<f64>, Option<Vec<Complex64>>);

/// Cyclic Jacobi on a Hermitian matrix held row-major in `a`.
fn jacobi(
    n: usize,
    mut a: Vec<Complex64>,
    want_vectors: bool,
) -> Result<Decomposition, LinalgError> {
    let mut v = if want_vectors {
        let mut v = vec![ZERO; n * n];
        for i in 0..n {
            v[i * n + i] = Complex64::new(1.0, 0.0);
        }
        Some(v)
    } else {
        None
    };

    let scale = a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let threshold = JACOBI_OFF_TOL * scale;
    let mut converged = scale == 0.0;

    for _ in 0..JACOBI_MAX_SWEEPS {
        if converged || off_diagonal_norm(n, &a) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                let g = apq.norm();
                if g == 0.0 {
                    continue;
                }
                let phase = apq / g;
                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                let theta = (aqq - app) / (2.0 * g);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                // signum(0) is 1 for +0.0, giving t = 1 (a 45° rotation)
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let sp = phase * s; // U[p][q]
                let sq = -(phase.conj() * s); // U[q][p]

                // A ← A U
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = akp * c + akq * sq;
                    a[k * n + q] = akp * sp + akq * c;
                }
                // A ← U* A
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = apk * c + aqk * sq.conj();
                    a[q * n + k] = apk * sp.conj() + aqk * c;
                }
                a[p * n + q] = ZERO;
                a[q * n + p] = ZERO;
                a[p * n + p].im = 0.0;
                a[q * n + q].im = 0.0;

                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = vkp * c + vkq * sq;
                        v[k * n + q] = vkp * sp + vkq * c;
                    }
                }
            }
        }
    }
    if !converged && off_diagonal_norm(n, &a) > threshold {
        return Err(LinalgError::NoConvergence(JACOBI_MAX_SWEEPS));
    }
    let values = (0..n).map(|i| a[i * n + i].re).collect();
    Ok((values, v))
}

/// Householder reduction to real tridiagonal form followed by implicit QL.
fn tridiagonal_ql(
    n: usize,
    mut a: Vec<Complex64>,
    want_vectors: bool,
) -> Result<Decomposition, LinalgError> {
    // Q accumulates the reflections: A = Q T Q*.
    let mut q = if want_vectors {
        let mut q = vec![ZERO; n * n];
        for i in 0..n {
            q[i * n + i] = Complex64::new(1.0, 0.0);
        }
        Some(q)
    } else {
        None
    };

    let mut v = vec![ZERO; n];
    let mut p = vec![ZERO; n];
    for k in 0..n.saturating_sub(2) {
        let lo = k + 1;
        let m = n - lo;
        let alpha = (lo..n).map(|i| a[i * n + k].norm_sqr()).sum::<f64>().sqrt();
        let x0 = a[lo * n + k];
        let tail = alpha * alpha - x0.norm_sqr();
        if alpha == 0.0 || tail <= f64::EPSILON * f64::EPSILON * alpha * alpha {
            continue;
        }
        let phase = if x0.norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            x0 / x0.norm()
        };
        for i in 0..m {
            v[i] = a[(lo + i) * n + k];
        }
        v[0] += phase * alpha;
        let vnorm2 = 2.0 * alpha * (alpha + x0.norm());
        let tau = 2.0 / vnorm2;

        // p = τ B v for the trailing block B.
        for i in 0..m {
            let row = (lo + i) * n + lo;
            let mut acc = ZERO;
            for j in 0..m {
                acc += a[row + j] * v[j];
            }
            p[i] = acc * tau;
        }
        let vp: Complex64 = (0..m).map(|i| v[i].conj() * p[i]).sum();
        let half_k = 0.5 * tau * vp.re;
        for i in 0..m {
            p[i] -= v[i] * half_k;
        }
        // B ← B − v p* − p v*
        for i in 0..m {
            let row = (lo + i) * n + lo;
            for j in 0..m {
                a[row + j] -= v[i] * p[j].conj() + p[i] * v[j].conj();
            }
        }
        let new_sub = -(phase * alpha);
        a[lo * n + k] = new_sub;
        a[k * n + lo] = new_sub.conj();
        for i in (lo + 1)..n {
            a[i * n + k] = ZERO;
            a[k * n + i] = ZERO;
        }

        if let Some(q) = q.as_mut() {
            // Q ← Q (I − τ v v*) on columns lo..n
            for r in 0..n {
                let row = r * n + lo;
                let mut acc = ZERO;
                for j in 0..m {
                    acc += q[row + j] * v[j];
                }
                acc *= tau;
                for j in 0..m {
                    q[row + j] -= acc * v[j].conj();
                }
            }
        }
    }

    // Unitary diagonal D making the subdiagonal real and nonnegative.
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    let mut phases = vec![Complex64::new(1.0, 0.0); n];
    for i in 0..n {
        d[i] = a[i * n + i].re;
    }
    for k in 0..n.saturating_sub(1) {
        let sub = a[(k + 1) * n + k];
        let mag = sub.norm();
        e[k + 1] = mag;
        phases[k + 1] = if mag == 0.0 {
            phases[k]
        } else {
            phases[k] * (sub / mag)
        };
    }

    let mut z = if want_vectors {
        let mut z = vec![0.0; n * n];
        for i in 0..n {
            z[i * n + i] = 1.0;
        }
        Some(z)
    } else {
        None
    };
    tql2(n, &mut d, &mut e, z.as_deref_mut())?;

    let vectors = match (q, z) {
        (Some(q), Some(z)) => {
            let mut out = vec![ZERO; n * n];
            for i in 0..n {
                for k in 0..n {
                    let qd = q[i * n + k] * phases[k];
                    if qd == ZERO {
                        continue;
                    }
                    for j in 0..n {
                        out[i * n + j] += qd * z[k * n + j];
                    }
                }
            }
            Some(out)
        }
        _ => None,
    };
    Ok((d, vectors))
}

/// Implicit QL on a real symmetric tridiagonal matrix with diagonal `d` and
/// subdiagonal `e[1..]` (`e[0]` unused). On return `d` holds the eigenvalues
/// and, when given, the columns of `z` the eigenvectors.
fn tql2(
    n: usize,
    d: &mut [f64],
    e: &mut [f64],
    mut z: Option<&mut [f64]>,
) -> Result<(), LinalgError> {
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    let eps = f64::EPSILON;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > eps * tst1 {
            m += 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > QL_MAX_ITER {
                    return Err(LinalgError::NoConvergence(QL_MAX_ITER));
                }
                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let h = g - d[l];
                for di in d.iter_mut().take(n).skip(l + 2) {
                    *di -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g = c * e[i];
                    let h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    if let Some(z) = z.as_deref_mut() {
                        for k in 0..n {
                            let h = z[k * n + i + 1];
                            z[k * n + i + 1] = s * z[k * n + i] + c * h;
                            z[k * n + i] = c * z[k * n + i] - s * h;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}

/// Diagonalizes with the Householder/QL path regardless of size. Exposed for
/// cross-checking the two solvers against each other.
pub fn hermitian_eigen_tridiagonal(h: &Matrix) -> Result<HermitianEigen, LinalgError> {
    let a = check_hermitian(h)?;
    let n = h.dim();
    let (values, vectors) = tridiagonal_ql(n, a, true)?;
    Ok(sorted(values, vectors, n).into_eigen(n))
}
