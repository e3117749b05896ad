#![allow(dead_code)]

use num_complex::Complex64;
use proptest::prelude::*;
use selfcomm::Matrix;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn complex() -> impl Strategy<Value = Complex64> {
    (-3.0..3.0f64, -3.0..3.0f64).prop_map(|(re, im)| c(re, im))
}

pub fn matrix_of_dim(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(complex(), n * n)
        .prop_map(move |data| Matrix::from_row_major(n, data).expect("finite entries"))
}

pub fn matrix(dims: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Matrix> {
    dims.prop_flat_map(matrix_of_dim)
}

pub fn hermitian(dims: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Matrix> {
    matrix(dims).prop_map(|a| a.hermitian_part())
}

/// Phase `e^{it}`.
pub fn phase(t: f64) -> Complex64 {
    Complex64::from_polar(1.0, t)
}

/// Largest distance from a point of `a` to the set `b`.
pub fn directed_hausdorff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .map(|p| b.iter().map(|q| (p - q).norm()).fold(f64::INFINITY, f64::min))
        .fold(0.0, f64::max)
}
