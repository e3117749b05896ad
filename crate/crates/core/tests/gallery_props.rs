mod common;

use common::{c, complex};
use num_complex::Complex64;
use proptest::prelude::*;
use selfcomm::bounds::check_conjecture1;
use selfcomm::gallery::{
    bergman_eigenvalues, bergman_shift, partial_sums, rank_one, rank_one_matrix, rearrange_zero_sum, schur2x2,
    shift_from_partial_sums, volterra_matrix,
};
use selfcomm::linalg::{hermitian_norm, operator_norm, self_commutator};
use selfcomm::numrange::boundary;
use selfcomm::Matrix;

fn unit(v: Vec<Complex64>) -> Option<Vec<Complex64>> {
    let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    (n > 1e-3).then(|| v.into_iter().map(|z| z / n).collect())
}

fn unit_pair() -> impl Strategy<Value = (Vec<Complex64>, Vec<Complex64>)> {
    (2usize..=6).prop_flat_map(|n| {
        (prop::collection::vec(complex(), n), prop::collection::vec(complex(), n))
            .prop_filter_map("zero vector", |(a, b)| Some((unit(a)?, unit(b)?)))
    })
}

/// Every ordering of `values`, by Heap's algorithm.
fn permutations(values: &[f64]) -> Vec<Vec<f64>> {
    fn heap(k: usize, v: &mut Vec<f64>, out: &mut Vec<Vec<f64>>) {
        if k <= 1 {
            out.push(v.clone());
            return;
        }
        for i in 0..k - 1 {
            heap(k - 1, v, out);
            if k % 2 == 0 {
                v.swap(i, k - 1);
            } else {
                v.swap(0, k - 1);
            }
        }
        heap(k - 1, v, out);
    }
    let mut out = Vec::new();
    heap(values.len(), &mut values.to_vec(), &mut out);
    out
}

fn admissible(order: &[f64], bound: f64) -> bool {
    let mut s = 0.0;
    for &v in &order[..order.len() - 1] {
        s += v;
        if s < -1e-12 || s > bound + 1e-12 {
            return false;
        }
    }
    true
}

fn zero_sum_list() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-5.0..5.0f64, 1..=7).prop_map(|mut v| {
        let s: f64 = v.iter().sum();
        v.push(-s);
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 500, ..ProptestConfig::default() })]

    #[test]
    fn rank_one_commutator_closed_form((a, b) in unit_pair()) {
        let m = rank_one_matrix(&a, &b).unwrap();
        let inner: Complex64 = a.iter().zip(&b).map(|(x, y)| x * y.conj()).sum();
        let expected = (1.0 - inner.norm_sqr()).max(0.0).sqrt();
        let got = hermitian_norm(&self_commutator(&m)).unwrap();
        prop_assert!((got - expected).abs() <= 1e-10, "{got} vs {expected}");
        prop_assert!(check_conjecture1(&m).unwrap() >= -1e-9);
        prop_assert!(rank_one(&a, &b).unwrap().passed());
    }

    #[test]
    fn rearrangement_matches_exhaustive_oracle(values in zero_sum_list()) {
        let m = values.iter().map(|v| v.abs()).fold(0.0, f64::max);
        let exists = permutations(&values).iter().any(|p| admissible(p, 2.0 * m));
        prop_assert!(exists, "oracle found no admissible order for {values:?}");
        let out = rearrange_zero_sum(&values).unwrap();
        let mut a = out.clone();
        let mut b = values.clone();
        a.sort_by(f64::total_cmp);
        b.sort_by(f64::total_cmp);
        prop_assert_eq!(a, b);
        prop_assert!(admissible(&out, 2.0 * m));

        let shift = shift_from_partial_sums(&out).unwrap();
        let bm = shift.matrix();
        let cm = self_commutator(&bm);
        for (k, v) in out.iter().enumerate() {
            prop_assert!((cm.get(k, k).re - v).abs() <= 1e-12 * m.max(1.0));
        }
        let norm = operator_norm(&bm);
        prop_assert!(norm * norm <= 2.0 * m * (1.0 + 1e-12));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, ..ProptestConfig::default() })]

    #[test]
    fn two_by_two_range_is_the_focal_ellipse(l1 in complex(), l2 in complex(), l3 in complex()) {
        let a = Matrix::from_rows(&[vec![l1, l3], vec![c(0.0, 0.0), l2]]).unwrap();
        let major = ((l1 - l2).norm_sqr() + l3.norm_sqr()).sqrt();
        let s = boundary(&a, 512).unwrap();
        for z in &s.points {
            let dev = ((z - l1).norm() + (z - l2).norm() - major).abs();
            prop_assert!(dev <= 1e-6 * major.max(1.0), "{dev}");
        }
        let comm = hermitian_norm(&self_commutator(&a)).unwrap();
        prop_assert!((comm - l3.norm() * major).abs() <= 1e-10 * major.max(1.0).powi(2));
        prop_assert!(schur2x2(l1, l2, l3).unwrap().passed());
    }
}

#[test]
fn bergman_prefix_sums() {
    let eig = bergman_eigenvalues(200);
    for (m, s) in partial_sums(&eig).iter().enumerate() {
        assert!((s - (1.0 - 1.0 / (m as f64 + 2.0))).abs() <= 1e-15);
    }
    for n in [2, 5, 16, 40] {
        assert!(bergman_shift(n).unwrap().passed());
    }
}

#[test]
fn volterra_error_decays_like_one_over_n() {
    let target = 3f64.sqrt() / 6.0;
    let errs: Vec<(usize, f64)> = [50, 100, 200]
        .iter()
        .map(|&n| {
            let c = hermitian_norm(&self_commutator(&volterra_matrix(n).unwrap())).unwrap();
            (n, (c - target).abs())
        })
        .collect();
    for w in errs.windows(2) {
        assert!(w[1].1 < w[0].1, "{errs:?}");
    }
    // n·error stays bounded
    let scaled: Vec<f64> = errs.iter().map(|&(n, e)| n as f64 * e).collect();
    assert!(scaled.iter().cloned().fold(0.0, f64::max) < 2.0 * scaled[0] + 1e-3, "{scaled:?}");
}
