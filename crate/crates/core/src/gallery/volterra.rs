use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use super::{Check, GalleryEntry, GalleryError};
use crate::linalg::{hermitian_norm, self_commutator, Matrix};
use crate::quadrature::integrate;

const QUAD_TOL: f64 = 1e-13;
const QUAD_MAX_INTERVALS: usize = 4096;

/// `Si(x) = ∫₀ˣ sin(t)/t dt` for `x ≥ 0`.
pub fn si(x: f64) -> f64 {
    assert!(x >= 0.0, "si is defined here for x >= 0");
    let sinc = |t: f64| if t == 0.0 { 1.0 } else { t.sin() / t };
    integrate(sinc, 0.0, x, QUAD_TOL, QUAD_MAX_INTERVALS).0
}

/// Upper branch of the boundary of `W(V)`:
/// `t ↦ ((1 − cos t)/t², (t − sin t)/t²)` for `t ∈ (0, 2π]`, and `(1/2, 0)` at
/// `t = 0`. The lower branch is its mirror image.
pub fn volterra_curve(t: f64) -> (f64, f64) {
    let half = (0.5 * t).sin();
    let x = if t == 0.0 { 0.5 } else { 2.0 * half * half / (t * t) };
    let y = if t.abs() < 1e-2 {
        // (t − sin t)/t² = t/6 − t³/120 + t⁵/5040 − …
        let t2 = t * t;
        t * (1.0 / 6.0 - t2 * (1.0 / 120.0 - t2 / 5040.0))
    } else {
        (t - t.sin()) / (t * t)
    };
    (x, y)
}

/// `x y' − y x'` along the upper branch, `(4 sin²(t/2) − t sin t)/t⁴`.
fn area_integrand(t: f64) -> f64 {
    if t < 0.5 {
        // Σ_{k≥2} (−1)^k (2k − 2) t^{2k−4} / (2k)!
        let t2 = t * t;
        let mut sum = 0.0;
        let mut power = 1.0;
        let mut fact = 24.0; // 4!
        for k in 2..14 {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sum += sign * (2.0 * k as f64 - 2.0) * power / fact;
            power *= t2;
            fact *= (2.0 * k as f64 + 1.0) * (2.0 * k as f64 + 2.0);
        }
        return sum;
    }
    let s = (0.5 * t).sin();
    (4.0 * s * s - t * t.sin()) / t.powi(4)
}

/// Area of `W(V)` by quadrature along the boundary curve.
///
/// `∫₀^{2π} (x dy − y dx)` over the upper branch equals
/// `(1/2)∮(x dy − y dx)` over the closed curve (both branches), which is the
/// enclosed area.
pub fn volterra_area() -> f64 {
    integrate(area_integrand, 0.0, TAU, QUAD_TOL, QUAD_MAX_INTERVALS).0
}

/// `Si(2π)/6 + 1/(12π)`.
pub fn volterra_area_closed_form() -> f64 {
    si(TAU) / 6.0 + 1.0 / (12.0 * PI)
}

/// Discretized Volterra operator on `L²(0, 1)`: `1/n` below the diagonal and
/// `1/(2n)` on it (trapezoid collocation).
pub fn volterra_matrix(n: usize) -> Result<Matrix, GalleryError> {
    if n < 10 {
        return Err(GalleryError::InvalidParameter(format!(
            "Volterra discretization needs n >= 10, got {n}"
        )));
    }
    let h = 1.0 / n as f64;
    Ok(Matrix::from_fn(n, |i, j| {
        let v = match j.cmp(&i) {
            std::cmp::Ordering::Less => h,
            std::cmp::Ordering::Equal => 0.5 * h,
            std::cmp::Ordering::Greater => 0.0,
        };
        Complex64::new(v, 0.0)
    }))
}

/// Printed decimal values the closed forms are compared with.
pub const VOLTERRA_AREA_PRINTED: f64 = 0.262_884_419_87;
pub const VOLTERRA_FOUR_OVER_PI_AREA_PRINTED: f64 = 0.334_714_839_07;

pub fn volterra(n: usize) -> Result<GalleryEntry, GalleryError> {
    let v = volterra_matrix(n)?;
    let mut e = GalleryEntry::new("volterra", Some(v.clone()));
    let comm = e.closed_form("comm_norm", 3f64.sqrt() / 6.0, "sqrt(3)/6");
    let si_2pi = e.closed_form("si_2pi", si(TAU), "adaptive Gauss-Kronrod");
    let area = e.closed_form(
        "area",
        si_2pi / 6.0 + 1.0 / (12.0 * PI),
        "Si(2π)/6 + 1/(12π)",
    );
    let four = e.closed_form("four_over_pi_area", 4.0 / PI * area, "(4/π)S");
    e.closed_form("conj2_slack", four - comm, "(4/π)S - sqrt(3)/6");

    e.check(Check::equal(
        "area vs printed",
        VOLTERRA_AREA_PRINTED,
        area,
        1e-8,
    ));
    e.check(Check::equal(
        "(4/pi)S vs printed",
        VOLTERRA_FOUR_OVER_PI_AREA_PRINTED,
        four,
        1e-7,
    ));
    let quad = e.computed("area_curve_quadrature", volterra_area());
    e.check(Check::equal("area curve quadrature", area, quad, 1e-10));
    let (x, y) = volterra_curve(TAU);
    e.check(Check::equal("curve end x", 0.0, x, 1e-15));
    e.check(Check::equal("curve end y", 1.0 / TAU, y, 1e-15));

    let got = e.computed("comm_norm", hermitian_norm(&self_commutator(&v))?);
    e.check(Check::equal("comm_norm", comm, got, 1e-2));
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `Si(x) = Σ (−1)^k x^{2k+1} / ((2k+1)(2k+1)!)`.
    fn si_series(x: f64) -> f64 {
        let mut term = x; // x^{2k+1}/(2k+1)!
        let mut sum = 0.0;
        for k in 0..60 {
            sum += term / (2 * k + 1) as f64;
            term *= -x * x / ((2 * k + 2) as f64 * (2 * k + 3) as f64);
        }
        sum
    }

    #[test]
    fn si_values() {
        assert_eq!(si(0.0), 0.0);
        assert!((si(TAU) - 1.418_151_576_132_628_4).abs() < 1e-12);
        for &x in &[0.1, 1.0, 3.0, 5.0, TAU] {
            assert!((si(x) - si_series(x)).abs() < 1e-12, "x = {x}");
        }
    }

    #[test]
    fn area_values() {
        assert!((volterra_area_closed_form() - VOLTERRA_AREA_PRINTED).abs() < 1e-8);
        assert!((volterra_area() - volterra_area_closed_form()).abs() < 1e-11);
    }

    #[test]
    fn integrand_is_continuous_at_the_switch() {
        let t: f64 = 0.5;
        let s = (0.5 * t).sin();
        let direct = (4.0 * s * s - t * t.sin()) / t.powi(4);
        assert!((area_integrand(0.5 - 1e-12) - direct).abs() < 1e-11);
        assert!((area_integrand(0.0) - 1.0 / 12.0).abs() < 1e-16);
    }

    #[test]
    fn curve_limits() {
        let (x, y) = volterra_curve(0.0);
        assert!((x - 0.5).abs() < 1e-15 && y == 0.0);
        let (x1, y1) = volterra_curve(1e-2 * (1.0 - 1e-12));
        let (x2, y2) = volterra_curve(1e-2);
        assert!((x1 - x2).abs() < 1e-13 && (y1 - y2).abs() < 1e-13);
    }

    #[test]
    fn discretization_converges() {
        let target = 3f64.sqrt() / 6.0;
        let errs: Vec<f64> = [50, 100, 200]
            .iter()
            .map(|&n| {
                let v = volterra_matrix(n).unwrap();
                (hermitian_norm(&self_commutator(&v)).unwrap() - target).abs()
            })
            .collect();
        assert!(errs[0] > errs[1] && errs[1] > errs[2], "{errs:?}");
        assert!(volterra_matrix(5).is_err());
    }
}
