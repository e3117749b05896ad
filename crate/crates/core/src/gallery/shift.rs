use num_complex::Complex64;

use super::{Check, GalleryEntry, GalleryError};
use crate::linalg::{hermitian_norm, operator_norm, self_commutator, Matrix};

/// Weighted shift `e_k ↦ ξ_k e_{k+1}`: `n − 1` weights give an `n × n`
/// matrix with the weights on the subdiagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedShift {
    pub weights: Vec<Complex64>,
}

impl WeightedShift {
    pub fn new(weights: Vec<Complex64>) -> Self {
        Self { weights }
    }

    pub fn dim(&self) -> usize {
        self.weights.len() + 1
    }

    pub fn matrix(&self) -> Matrix {
        Matrix::from_fn(self.dim(), |i, j| {
            if i == j + 1 {
                self.weights[j]
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }

    /// `‖A‖ = max |ξ_k|`.
    pub fn norm(&self) -> f64 {
        self.weights.iter().map(|w| w.norm()).fold(0.0, f64::max)
    }

    /// Diagonal of `C(A)`: `|ξ₁|², |ξ₂|² − |ξ₁|², …, −|ξ_{n−1}|²`.
    pub fn commutator_diagonal(&self) -> Vec<f64> {
        let sq: Vec<f64> = self.weights.iter().map(|w| w.norm_sqr()).collect();
        (0..self.dim())
            .map(|k| {
                let upper = sq.get(k).copied().unwrap_or(0.0);
                let lower = if k == 0 { 0.0 } else { sq[k - 1] };
                upper - lower
            })
            .collect()
    }
}

/// `S_m = λ₁ + … + λ_m` for `m = 1..n`.
pub fn partial_sums(values: &[f64]) -> Vec<f64> {
    values
        .iter()
        .scan(0.0, |s, &v| {
            *s += v;
            Some(*s)
        })
        .collect()
}

const SUM_TOL: f64 = 1e-9;
const PARTIAL_TOL: f64 = 1e-12;
const BACKTRACK_MAX: usize = 12;

fn max_abs(values: &[f64]) -> f64 {
    values.iter().map(|v| v.abs()).fold(0.0, f64::max)
}

fn arrangement_ok(values: &[f64], bound: f64) -> bool {
    let sums = partial_sums(values);
    let n = sums.len();
    sums[..n.saturating_sub(1)]
        .iter()
        .all(|&s| s >= -PARTIAL_TOL && s <= bound + PARTIAL_TOL)
}

fn greedy(values: &[f64], bound_half: f64) -> Vec<f64> {
    let mut rest = values.to_vec();
    rest.sort_by(f64::total_cmp);
    let mut out = Vec::with_capacity(values.len());
    let mut s = 0.0;
    while !rest.is_empty() {
        let v = if s <= bound_half {
            rest.pop().expect("nonempty")
        } else {
            rest.remove(0)
        };
        s += v;
        out.push(v);
    }
    out
}

fn backtrack(rest: &mut Vec<f64>, out: &mut Vec<f64>, s: f64, bound: f64) -> bool {
    if rest.is_empty() {
        return true;
    }
    for i in 0..rest.len() {
        let v = rest[i];
        let next = s + v;
        let last = rest.len() == 1;
        if !last && (next < -PARTIAL_TOL || next > bound + PARTIAL_TOL) {
            continue;
        }
        rest.remove(i);
        out.push(v);
        if backtrack(rest, out, next, bound) {
            return true;
        }
        out.pop();
        rest.insert(i, v);
    }
    false
}

/// Reorders zero-sum reals so every proper partial sum lies in
/// `[0, 2 max|λ_k|]`.
///
/// Greedy: with running sum `S`, take the largest remaining value while
/// `S ≤ max|λ_k|` and the smallest otherwise. A large sum is then pulled
/// down by a negative value no larger than `max|λ_k|` and a small one raised
/// by at most `max|λ_k|`, so both constraints always hold. A backtracking
/// search over at most 12 values guards against rounding.
pub fn rearrange_zero_sum(values: &[f64]) -> Result<Vec<f64>, GalleryError> {
    if values.is_empty() {
        return Err(GalleryError::InvalidParameter("empty list".into()));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(GalleryError::InvalidParameter("non-finite value".into()));
    }
    let sum: f64 = values.iter().sum();
    let magnitude: f64 = values.iter().map(|v| v.abs()).sum();
    if sum.abs() > SUM_TOL * magnitude.max(f64::MIN_POSITIVE) {
        return Err(GalleryError::NonZeroSum { sum, magnitude });
    }
    let m = max_abs(values);
    let out = greedy(values, m);
    if arrangement_ok(&out, 2.0 * m) {
        return Ok(out);
    }
    if values.len() <= BACKTRACK_MAX {
        let mut rest = values.to_vec();
        rest.sort_by(|a, b| b.total_cmp(a));
        let mut found = Vec::with_capacity(values.len());
        if backtrack(&mut rest, &mut found, 0.0, 2.0 * m) {
            return Ok(found);
        }
    }
    Err(GalleryError::NoArrangement)
}

/// Weighted shift with `ξ_m = sqrt(S_m)`, so that `C(B)` has diagonal
/// equal to `values`.
pub fn shift_from_partial_sums(values: &[f64]) -> Result<WeightedShift, GalleryError> {
    if values.is_empty() {
        return Err(GalleryError::InvalidParameter("empty list".into()));
    }
    let sums = partial_sums(values);
    let mut weights = Vec::with_capacity(values.len() - 1);
    for (index, &s) in sums[..values.len() - 1].iter().enumerate() {
        if s < -PARTIAL_TOL {
            return Err(GalleryError::NegativePartialSum {
                index: index + 1,
                value: s,
            });
        }
        weights.push(Complex64::new(s.max(0.0).sqrt(), 0.0));
    }
    Ok(WeightedShift::new(weights))
}

/// Rearrangement of `values` and the shift built from it.
pub fn zero_sum_entry(values: &[f64]) -> Result<GalleryEntry, GalleryError> {
    let arranged = rearrange_zero_sum(values)?;
    let shift = shift_from_partial_sums(&arranged)?;
    let b = shift.matrix();
    let mut e = GalleryEntry::new("zero-sum-shift", Some(b.clone()));
    let m = e.closed_form("max_abs", max_abs(values), "max |λ_k|");
    let n = arranged.len();
    for (k, s) in partial_sums(&arranged)[..n - 1].iter().enumerate() {
        e.check(Check::at_least(
            format!("S_{}", k + 1),
            0.0,
            *s,
            PARTIAL_TOL,
        ));
        e.check(Check::at_most(
            format!("S_{}", k + 1),
            2.0 * m,
            *s,
            PARTIAL_TOL,
        ));
    }
    let c = self_commutator(&b);
    for (k, &v) in arranged.iter().enumerate() {
        e.check(Check::equal(
            format!("C(B)_{k}{k}"),
            v,
            c.get(k, k).re,
            1e-12,
        ));
    }
    let norm_sq = e.computed("norm_sq", operator_norm(&b).powi(2));
    e.check(Check::at_most("|B|²", 2.0 * m, norm_sq, 1e-12));
    let comm = e.computed("comm_norm", hermitian_norm(&c)?);
    e.check(Check::at_least(
        "|C(B)| - |B|²/2",
        0.0,
        comm - 0.5 * norm_sq,
        1e-12,
    ));
    Ok(e)
}

/// Weights `w_k = sqrt((k+1)/(k+2))`, `k = 0..N−1`, of multiplication by
/// `z` on the Bergman space (indexed from 0).
pub fn bergman_weights(n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| ((k as f64 + 1.0) / (k as f64 + 2.0)).sqrt())
        .collect()
}

/// Eigenvalues `1/((k+1)(k+2))`, `k = 0..count−1`, of the infinite
/// operator's self-commutator.
pub fn bergman_eigenvalues(count: usize) -> Vec<f64> {
    (0..count)
        .map(|k| 1.0 / ((k as f64 + 1.0) * (k as f64 + 2.0)))
        .collect()
}

/// Truncated Bergman shift with `N` weights, an `(N+1) × (N+1)` matrix.
pub fn bergman_shift(n: usize) -> Result<GalleryEntry, GalleryError> {
    if n < 2 {
        return Err(GalleryError::InvalidParameter(format!(
            "need at least 2 weights, got {n}"
        )));
    }
    let shift = WeightedShift::new(
        bergman_weights(n)
            .into_iter()
            .map(|w| Complex64::new(w, 0.0))
            .collect(),
    );
    let m = shift.matrix();
    let mut e = GalleryEntry::new("bergman-shift", Some(m.clone()));
    e.closed_form("norm_infinite", 1.0, "sup of the weights");
    e.closed_form("comm_norm_infinite", 0.5, "largest eigenvalue 1/2");
    let trunc = e.closed_form(
        "norm_truncated",
        (n as f64 / (n as f64 + 1.0)).sqrt(),
        "largest weight sqrt(N/(N+1))",
    );

    let norm = e.computed("norm_truncated", operator_norm(&m));
    e.check(Check::equal("norm_truncated", trunc, norm, 1e-12));
    e.check(Check::at_most("norm_truncated", 1.0, norm, 0.0));

    // C of the truncation agrees with the infinite operator except in the last slot
    let c = self_commutator(&m);
    let eig = bergman_eigenvalues(n);
    for (k, &lam) in eig.iter().enumerate() {
        e.check(Check::equal(
            format!("C_{k}{k}"),
            lam,
            c.get(k, k).re,
            1e-15,
        ));
    }
    e.check(Check::equal(
        "C_NN",
        -(n as f64) / (n as f64 + 1.0),
        c.get(n, n).re,
        1e-15,
    ));

    for (k, s) in partial_sums(&eig).iter().enumerate() {
        e.check(Check::equal(
            format!("prefix_{k}"),
            1.0 - 1.0 / (k as f64 + 2.0),
            *s,
            1e-15,
        ));
        e.check(Check::at_most(format!("prefix_{k} < 1"), 1.0, *s, 0.0));
    }

    // the prefix closed off to zero sum builds a shift with |B|² < 1
    let mut closed = bergman_eigenvalues(3);
    closed.push(-closed.iter().sum::<f64>());
    let b = shift_from_partial_sums(&closed)?;
    let b_norm_sq = e.computed("prefix_shift_norm_sq", operator_norm(&b.matrix()).powi(2));
    e.check(Check::at_most("prefix_shift_norm_sq", 1.0, b_norm_sq, 0.0));
    Ok(e)
}
