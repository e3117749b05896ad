use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

use super::{Check, GalleryEntry, GalleryError};
use crate::bounds::check_conjecture1;
use crate::linalg::{
    cartesian_parts, hermitian_min_shift, hermitian_norm, operator_norm, self_commutator, Matrix,
};
use crate::numrange::{
    area_corrected, boundary, min_shift_distance, min_width_product, BoundarySample,
    DEFAULT_AREA_ANGLES, DEFAULT_REFINE_TOL, DEFAULT_WIDTH_ANGLES,
};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn comm_norm(a: &Matrix) -> Result<f64, GalleryError> {
    Ok(hermitian_norm(&self_commutator(a))?)
}

fn scale_of(a: &Matrix) -> f64 {
    operator_norm(a).powi(2).max(1.0)
}

/// Largest deviation of `|z − f₁| + |z − f₂|` from `major` over the samples.
fn focal_deviation(sample: &BoundarySample, f1: Complex64, f2: Complex64, major: f64) -> f64 {
    sample
        .points
        .iter()
        .map(|&z| ((z - f1).norm() + (z - f2).norm() - major).abs())
        .fold(0.0, f64::max)
}

/// `(√2/2)·[[1+i, 1+i], [0, −1−i]]`, whose width-product bound beats the
/// Wang–Du bound.
pub fn wang_du_matrix() -> Matrix {
    Matrix::from_rows(&[
        vec![c(1.0, 1.0), c(1.0, 1.0)],
        vec![c(0.0, 0.0), c(-1.0, -1.0)],
    ])
    .expect("2x2")
    .scale(c(FRAC_1_SQRT_2, 0.0))
}

pub fn wang_du_entry() -> Result<GalleryEntry, GalleryError> {
    let a = wang_du_matrix();
    let mut e = GalleryEntry::new("wang-du", Some(a.clone()));
    let root5 = e.closed_form("comm_norm", 5f64.sqrt(), "C(A) = [[-1, 2], [2, 1]]");
    let half_root3 = e.closed_form("inf_h", 0.75f64.sqrt(), "half the spectral spread of H");
    e.closed_form("inf_j", half_root3, "J is the entrywise conjugate of H");
    e.closed_form("min_width_product", root5, "min over t of b_x(t) b_y(t)");
    let wd = e.closed_form("wang_du", 3.0, "4 inf|H - λ| inf|J - λ|");
    e.closed_form(
        "norm",
        0.5 * (1.0 + 5f64.sqrt()),
        "largest singular value, the golden ratio",
    );

    let got = e.computed("comm_norm", comm_norm(&a)?);
    e.check(Check::equal("comm_norm", root5, got, 1e-10));
    let (h, j) = cartesian_parts(&a, 0.0);
    let ih = e.computed("inf_h", hermitian_min_shift(&h)?);
    let ij = e.computed("inf_j", hermitian_min_shift(&j)?);
    e.check(Check::equal("inf_h", half_root3, ih, 1e-10));
    e.check(Check::equal("inf_j", half_root3, ij, 1e-10));
    let (_, wp) = min_width_product(&a, DEFAULT_WIDTH_ANGLES, DEFAULT_REFINE_TOL)?;
    let wp = e.computed("min_width_product", wp);
    e.check(Check::equal("min_width_product", root5, wp, 1e-6));
    let got_wd = e.computed("wang_du", 4.0 * ih * ij);
    e.check(Check::equal("wang_du", wd, got_wd, 1e-9));
    e.check(Check::at_least(
        "wang_du - min_width_product",
        0.0,
        got_wd - wp,
        0.0,
    ));
    let norm = e.computed("norm", operator_norm(&a));
    e.check(Check::equal("norm", 0.5 * (1.0 + 5f64.sqrt()), norm, 1e-12));
    Ok(e)
}

/// The commuting pair: `L = J₂(1) ⊕ J₂(−1)` and `K = diag(1, 1, −1, −1)`.
pub fn example_lk() -> (Matrix, Matrix) {
    let l = Matrix::from_real_rows(&[
        &[1.0, 1.0, 0.0, 0.0],
        &[0.0, 1.0, 0.0, 0.0],
        &[0.0, 0.0, -1.0, 1.0],
        &[0.0, 0.0, 0.0, -1.0],
    ])
    .expect("4x4");
    let k = Matrix::from_real_rows(&[
        &[1.0, 0.0, 0.0, 0.0],
        &[0.0, 1.0, 0.0, 0.0],
        &[0.0, 0.0, -1.0, 0.0],
        &[0.0, 0.0, 0.0, -1.0],
    ])
    .expect("4x4");
    (l, k)
}

/// Fixed probe shifts for checking `m(L) ≤ ‖L − λI‖`.
const PROBE_SHIFTS: [(f64, f64); 6] = [
    (0.0, 0.0),
    (0.5, 0.0),
    (-0.3, 0.4),
    (0.0, -1.0),
    (1.0, 1.0),
    (-2.0, 0.1),
];

pub fn commuting_pair_entry() -> Result<GalleryEntry, GalleryError> {
    let (l, k) = example_lk();
    let mut e = GalleryEntry::new("commuting-pair", Some(l.clone()));
    let golden = e.closed_form(
        "m_lower",
        0.5 * (1.0 + 5f64.sqrt()),
        "norm of a 2x2 Jordan block",
    );
    e.closed_form(
        "norm_l_minus_k",
        1.0,
        "L - K is a direct sum of two nilpotent blocks",
    );

    let diff = e.computed("norm_l_minus_k", operator_norm(&(&l - &k)));
    e.check(Check::equal("norm_l_minus_k", 1.0, diff, 1e-12));
    let commutator = e.computed("commutator_max_abs", (&(&l * &k) - &(&k * &l)).max_abs());
    e.check(Check::equal("commutator_max_abs", 0.0, commutator, 0.0));
    let defect = e.computed("k_hermitian_defect", k.hermitian_defect());
    e.check(Check::equal("k_hermitian_defect", 0.0, defect, 0.0));

    let m = min_shift_distance(&l, 1e-10)?;
    let md = e.computed("m", m.distance);
    e.check(Check::at_least("m", golden, md, 1e-6));
    for (re, im) in PROBE_SHIFTS {
        let probe = operator_norm(&l.shift(c(re, im)));
        e.check(Check::at_most(
            format!("m vs |L - ({re}{im:+}i)I|"),
            probe,
            md,
            1e-12,
        ));
    }
    Ok(e)
}

/// `[[λ₁, λ₃], [0, λ₂]]`: every 2×2 matrix up to unitary similarity.
pub fn schur2x2(l1: Complex64, l2: Complex64, l3: Complex64) -> Result<GalleryEntry, GalleryError> {
    let a = Matrix::from_rows(&[vec![l1, l3], vec![c(0.0, 0.0), l2]])?;
    let mut e = GalleryEntry::new("schur-2x2", Some(a.clone()));
    let d = (l2 - l1).norm();
    let b = e.closed_form("semi_minor", 0.5 * l3.norm(), "b = |λ3|/2");
    e.closed_form("focal_distance", d, "2c = |λ2 - λ1|");
    let major = e.closed_form(
        "major_axis",
        d.hypot(l3.norm()),
        "2a = sqrt(|λ2 - λ1|² + |λ3|²)",
    );
    let comm = e.closed_form(
        "comm_norm",
        l3.norm() * d.hypot(l3.norm()),
        "|λ3| sqrt(|λ2 - λ1|² + |λ3|²) = 4ab",
    );
    e.closed_form("area", PI * 0.5 * major * b, "S = πab");

    let scale = scale_of(&a);
    let got = e.computed("comm_norm", comm_norm(&a)?);
    e.check(Check::equal("comm_norm", comm, got, 1e-10 * scale));
    let sample = boundary(&a, DEFAULT_AREA_ANGLES)?;
    let area = e.computed("area", area_corrected(&sample));
    e.check(Check::equal("4S/pi", comm, 4.0 / PI * area, 1e-4 * scale));
    let dev = e.computed(
        "focal_sum_deviation",
        focal_deviation(&sample, l1, l2, major),
    );
    e.check(Check::at_most(
        "focal_sum_deviation",
        0.0,
        dev,
        1e-6 * major.max(1.0),
    ));
    Ok(e)
}

/// Matrix of `x ↦ ⟨x, a⟩ b`, i.e. `b a*`.
pub fn rank_one_matrix(a: &[Complex64], b: &[Complex64]) -> Result<Matrix, GalleryError> {
    if a.len() != b.len() || a.is_empty() {
        return Err(GalleryError::InvalidParameter(format!(
            "vectors must have equal positive length (got {} and {})",
            a.len(),
            b.len()
        )));
    }
    if a.iter().all(|z| z.norm() == 0.0) || b.iter().all(|z| z.norm() == 0.0) {
        return Err(GalleryError::InvalidParameter("zero vector".into()));
    }
    Ok(Matrix::from_fn(a.len(), |i, j| b[i] * a[j].conj()))
}

/// Rank-one operator: `‖C‖ = ‖a‖²‖b‖² sqrt(1 − |⟨a,b⟩|²/(‖a‖²‖b‖²))`.
pub fn rank_one(a: &[Complex64], b: &[Complex64]) -> Result<GalleryEntry, GalleryError> {
    let m = rank_one_matrix(a, b)?;
    let mut e = GalleryEntry::new("rank-one", Some(m.clone()));
    let na2: f64 = a.iter().map(|z| z.norm_sqr()).sum();
    let nb2: f64 = b.iter().map(|z| z.norm_sqr()).sum();
    let inner: Complex64 = a.iter().zip(b).map(|(x, y)| x * y.conj()).sum();
    let overlap = (inner.norm_sqr() / (na2 * nb2)).min(1.0);
    let comm = e.closed_form(
        "comm_norm",
        na2 * nb2 * (1.0 - overlap).sqrt(),
        "opening of the two lines, scaled by |a|²|b|²",
    );
    let norm = e.closed_form("norm", (na2 * nb2).sqrt(), "|a| |b|");

    let scale = norm.powi(2).max(1.0);
    let got = e.computed("comm_norm", comm_norm(&m)?);
    e.check(Check::equal("comm_norm", comm, got, 1e-10 * scale));
    let got_norm = e.computed("norm", operator_norm(&m));
    e.check(Check::equal("norm", norm, got_norm, 1e-10 * norm.max(1.0)));
    let slack = e.computed("conj1_slack", check_conjecture1(&m)?);
    e.check(Check::at_least("conj1_slack", 0.0, slack, 1e-9 * scale));
    Ok(e)
}

/// `n × n` tridiagonal Toeplitz matrix with `λ` on the diagonal, `a` above
/// and `b` below.
pub fn tridiag_toeplitz_matrix(
    n: usize,
    a: Complex64,
    b: Complex64,
    lambda: Complex64,
) -> Result<Matrix, GalleryError> {
    if n < 2 {
        return Err(GalleryError::InvalidParameter(format!(
            "Toeplitz dimension must be at least 2, got {n}"
        )));
    }
    Ok(Matrix::from_fn(n, |i, j| {
        if i == j {
            lambda
        } else if j == i + 1 {
            a
        } else if i == j + 1 {
            b
        } else {
            c(0.0, 0.0)
        }
    }))
}

/// The numerical range is the ellipse `λ + (a e^{−it} + b e^{it}) cos(π/(n+1))`.
pub fn tridiag_toeplitz(
    n: usize,
    a: Complex64,
    b: Complex64,
    lambda: Complex64,
) -> Result<GalleryEntry, GalleryError> {
    let m = tridiag_toeplitz_matrix(n, a, b, lambda)?;
    let mut e = GalleryEntry::new("toeplitz", Some(m.clone()));
    let (na, nb) = (a.norm(), b.norm());
    let cosine = (PI / (n as f64 + 1.0)).cos();
    let comm = e.closed_form(
        "comm_norm",
        (na * na - nb * nb).abs(),
        "C is zero except C11 = -Cnn = |b|² - |a|²",
    );
    let major = e.closed_form("semi_major", (na + nb) * cosine, "(|a| + |b|) cos(π/(n+1))");
    let minor = e.closed_form(
        "semi_minor",
        (na - nb).abs() * cosine,
        "||a| - |b|| cos(π/(n+1))",
    );
    let area = e.closed_form("area", PI * major * minor, "π ||a|² - |b|²| cos²(π/(n+1))");
    let slack = e.closed_form("conj2_slack", 4.0 / PI * area - comm, "(4/π)S - |C|");

    let scale = scale_of(&m);
    let cm = self_commutator(&m);
    let got = e.computed("comm_norm", hermitian_norm(&cm)?);
    e.check(Check::equal("comm_norm", comm, got, 1e-10 * scale));
    let corner = nb * nb - na * na;
    e.check(Check::equal("C11", corner, cm.get(0, 0).re, 1e-12 * scale));
    e.check(Check::equal(
        "Cnn",
        -corner,
        cm.get(n - 1, n - 1).re,
        1e-12 * scale,
    ));

    let sample = boundary(&m, DEFAULT_AREA_ANGLES)?;
    let got_area = e.computed("area", area_corrected(&sample));
    e.check(Check::equal("area", area, got_area, 1e-3));
    let focus = 2.0 * cosine * (a * b).sqrt();
    let dev = focal_deviation(&sample, lambda + focus, lambda - focus, 2.0 * major);
    let dev = e.computed("focal_sum_deviation", dev);
    e.check(Check::at_most(
        "focal_sum_deviation",
        0.0,
        dev,
        1e-6 * major.max(1.0),
    ));
    let got_slack = e.computed("conj2_slack", 4.0 / PI * got_area - got);
    e.check(Check::equal("conj2_slack", slack, got_slack, 5e-3));
    Ok(e)
}

/// SOR iteration matrix
/// `[[(1−ω)I_p, ωM], [ω(1−ω)Mᵀ, (1−ω)I_q + ω²MᵀM]]` for real `M` of size
/// `p × q`, `p ≥ q`, `0 < ω < 2`.
pub fn sor_matrix(m: &[Vec<f64>], omega: f64) -> Result<Matrix, GalleryError> {
    let p = m.len();
    let q = m.first().map_or(0, Vec::len);
    if p == 0 || q == 0 || m.iter().any(|row| row.len() != q) {
        return Err(GalleryError::InvalidParameter(
            "M must be a nonempty rectangular matrix".into(),
        ));
    }
    if p < q {
        return Err(GalleryError::InvalidParameter(format!(
            "M must have p >= q, got {p}x{q}"
        )));
    }
    if !(omega > 0.0 && omega < 2.0) {
        return Err(GalleryError::InvalidParameter(format!(
            "omega must lie in (0, 2), got {omega}"
        )));
    }
    if m.iter().flatten().any(|x| !x.is_finite()) {
        return Err(GalleryError::InvalidParameter(
            "M has non-finite entries".into(),
        ));
    }
    let mtm = |i: usize, j: usize| (0..p).map(|k| m[k][i] * m[k][j]).sum::<f64>();
    let id = |i: usize, j: usize| if i == j { 1.0 } else { 0.0 };
    let w = omega;
    Ok(Matrix::from_fn(p + q, |i, j| {
        let v = match (i < p, j < p) {
            (true, true) => (1.0 - w) * id(i, j),
            (true, false) => w * m[i][j - p],
            (false, true) => w * (1.0 - w) * m[j][i - p],
            (false, false) => (1.0 - w) * id(i - p, j - p) + w * w * mtm(i - p, j - p),
        };
        c(v, 0.0)
    }))
}

/// SOR matrix with the elliptical-area bound checked on the assembled matrix.
pub fn sor_matrix_entry(m: &[Vec<f64>], omega: f64) -> Result<GalleryEntry, GalleryError> {
    let a = sor_matrix(m, omega)?;
    let mut e = GalleryEntry::new("sor", Some(a.clone()));
    let scale = scale_of(&a);
    let comm = e.computed("comm_norm", comm_norm(&a)?);
    let area = e.computed("area", area_corrected(&boundary(&a, DEFAULT_AREA_ANGLES)?));
    let slack = e.computed("conj2_slack", 4.0 / PI * area - comm);
    e.check(Check::at_least("(4/pi)S - |C|", 0.0, slack, 1e-6 * scale));
    Ok(e)
}

/// Composition operator by a disk automorphism on the Dirichlet space. The
/// operator is infinite-dimensional; only the closed forms are related.
pub fn mobius_selfcommutator(r: f64) -> Result<GalleryEntry, GalleryError> {
    if !(0.0..1.0).contains(&r) {
        return Err(GalleryError::InvalidParameter(format!(
            "|a| must lie in [0, 1), got {r}"
        )));
    }
    let mut e = GalleryEntry::new("mobius", None);
    let l = e.closed_form("L", -(-r * r).ln_1p(), "L = -ln(1 - |a|²)");
    let comm = e.closed_form("comm_norm", (l * l + 4.0 * l).sqrt(), "sqrt(L² + 4L)");
    let major = e.closed_form("major_axis", (4.0 + l).sqrt(), "2a = sqrt(4 + L)");
    let minor = e.closed_form("minor_axis", l.sqrt(), "2b = sqrt(L)");
    let area = e.closed_form("area", PI / 4.0 * major * minor, "S = (π/4)(2a)(2b)");
    e.check(Check::equal(
        "sqrt(L² + 4L) - 4S/pi",
        0.0,
        comm - 4.0 / PI * area,
        1e-12,
    ));
    // foci at ±1: a² − b² = 1
    let focal = 0.25 * (major * major - minor * minor);
    e.check(Check::equal("a² - b²", 1.0, focal, 1e-12));
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_passes(e: &GalleryEntry) {
        let failures: Vec<_> = e.failures().collect();
        assert!(failures.is_empty(), "{}: {failures:#?}", e.name);
    }

    #[test]
    fn named_entries_pass() {
        assert_passes(&wang_du_entry().unwrap());
        assert_passes(&commuting_pair_entry().unwrap());
        assert_passes(&mobius_selfcommutator(0.9).unwrap());
        assert_passes(&mobius_selfcommutator(0.0).unwrap());
    }

    #[test]
    fn schur_examples() {
        let e = schur2x2(c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)).unwrap();
        assert_passes(&e);
        assert_eq!(e.closed_form_value("comm_norm"), Some(1.0));
        assert_eq!(e.closed_form_value("semi_minor"), Some(0.5));
        assert!((e.closed_form_value("area").unwrap() - PI / 4.0).abs() < 1e-15);
        let e = schur2x2(c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 0.0)).unwrap();
        assert_passes(&e);
        assert_eq!(e.computed_value("comm_norm"), Some(0.0));
    }

    #[test]
    fn schur_form_of_the_wang_du_matrix() {
        // already upper triangular
        let s = FRAC_1_SQRT_2;
        let e = schur2x2(c(s, s), c(-s, -s), c(s, s)).unwrap();
        assert!(e.matrix.as_ref().unwrap().max_abs_diff(&wang_du_matrix()) < 1e-15);
        assert_passes(&e);
        assert!((e.closed_form_value("comm_norm").unwrap() - 5f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn rank_one_examples() {
        let e1 = [c(1.0, 0.0), c(0.0, 0.0)];
        let e2 = [c(0.0, 0.0), c(1.0, 0.0)];
        let e = rank_one(&e1, &e1).unwrap();
        assert_passes(&e);
        assert!(e.computed_value("comm_norm").unwrap() < 1e-14);
        let e = rank_one(&e1, &e2).unwrap();
        assert_passes(&e);
        assert!((e.closed_form_value("comm_norm").unwrap() - 1.0).abs() < 1e-15);
        let b = [c(0.6, 0.0), c(0.0, 0.8)];
        let e = rank_one(&e1, &b).unwrap();
        assert_passes(&e);
        assert!((e.computed_value("comm_norm").unwrap() - 0.8).abs() < 1e-12);
        assert!(rank_one(&e1, &[c(0.0, 0.0), c(0.0, 0.0)]).is_err());
        assert!(rank_one(&e1, &[c(1.0, 0.0)]).is_err());
    }

    #[test]
    fn toeplitz_examples() {
        let e = tridiag_toeplitz(5, c(2.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        assert_passes(&e);
        assert_eq!(e.closed_form_value("comm_norm"), Some(3.0));
        assert!((e.closed_form_value("area").unwrap() - 9.0 * PI / 4.0).abs() < 1e-12);
        assert!((e.closed_form_value("conj2_slack").unwrap() - 6.0).abs() < 1e-12);

        let e = tridiag_toeplitz(2, c(2.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        assert_passes(&e);
        assert!((e.closed_form_value("semi_major").unwrap() - 1.5).abs() < 1e-15);
        assert!((e.closed_form_value("semi_minor").unwrap() - 0.5).abs() < 1e-15);

        let e = tridiag_toeplitz(4, c(0.5, 0.5), c(0.5, 0.5), c(1.0, -1.0)).unwrap();
        assert_passes(&e);
        assert!(e.computed_value("comm_norm").unwrap() < 1e-14);
        assert!(tridiag_toeplitz(1, c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)).is_err());
    }

    #[test]
    fn sor_examples() {
        let zero = vec![vec![0.0, 0.0], vec![0.0, 0.0]];
        let a = sor_matrix(&zero, 0.7).unwrap();
        assert!(a.max_abs_diff(&Matrix::identity(4).scale(c(0.3, 0.0))) < 1e-15);
        let e = sor_matrix_entry(&zero, 0.7).unwrap();
        assert_passes(&e);
        assert!(e.computed_value("comm_norm").unwrap() < 1e-15);
        assert_passes(&sor_matrix_entry(&[vec![0.3, 0.8], vec![-0.6, 0.1]], 1.0).unwrap());
        assert!(sor_matrix(&zero, 2.0).is_err());
        assert!(sor_matrix(&[vec![1.0, 2.0]], 1.0).is_err());
    }
}
