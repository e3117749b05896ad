mod common;

use common::{c, complex, hermitian, matrix, phase};
use proptest::prelude::*;
use selfcomm::linalg::{hermitian_eigen, operator_norm, self_commutator};
use selfcomm::Matrix;

fn rel(a: &Matrix) -> f64 {
    a.max_abs().max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, ..ProptestConfig::default() })]

    #[test]
    fn commutator_is_hermitian_and_traceless(a in matrix(2..=8)) {
        let cm = self_commutator(&a);
        let scale = a.frobenius_norm().powi(2).max(1.0);
        prop_assert!(cm.hermitian_defect() <= 1e-10);
        prop_assert!(cm.trace().norm() <= 1e-10 * scale);
        // A*A − AA* from plain products, without symmetrization
        let adj = a.adjoint();
        let direct = adj.matmul(&a).unwrap().checked_sub(&a.matmul(&adj).unwrap()).unwrap();
        prop_assert!(cm.max_abs_diff(&direct) <= 1e-12 * scale);
    }
}

proptest! {
    #[test]
    fn commutator_translation_invariant(a in matrix(1..=6), lambda in complex()) {
        let d = self_commutator(&a.shift(lambda)).max_abs_diff(&self_commutator(&a));
        prop_assert!(d <= 1e-12 * rel(&a).powi(2) * 10.0, "{d}");
    }

    #[test]
    fn commutator_rotation_invariant(a in matrix(1..=6), t in 0.0..std::f64::consts::TAU) {
        let d = self_commutator(&a.scale(phase(t))).max_abs_diff(&self_commutator(&a));
        prop_assert!(d <= 1e-12 * rel(&a).powi(2) * 10.0, "{d}");
    }

    #[test]
    fn commutator_scales_quadratically(a in matrix(1..=6), s in complex()) {
        let lhs = self_commutator(&a.scale(s));
        let rhs = self_commutator(&a).scale(c(s.norm_sqr(), 0.0));
        let d = lhs.max_abs_diff(&rhs);
        prop_assert!(d <= 1e-12 * (rel(&a) * s.norm().max(1.0)).powi(2) * 10.0, "{d}");
    }

    #[test]
    fn eigen_reconstructs_and_is_orthonormal(h in hermitian(1..=16)) {
        let eig = hermitian_eigen(&h).unwrap();
        let n = h.dim();
        let scale = h.max_abs().max(1.0);
        prop_assert!(eig.reconstruct().max_abs_diff(&h) <= 1e-10 * scale);
        let gram = eig.vectors.adjoint().matmul(&eig.vectors).unwrap();
        prop_assert!(gram.max_abs_diff(&Matrix::identity(n)) <= 1e-10);
        prop_assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
        // trace is the eigenvalue sum
        let sum: f64 = eig.values.iter().sum();
        prop_assert!((sum - h.trace().re).abs() <= 1e-10 * scale * n as f64);
    }

    #[test]
    fn operator_norm_of_adjoint(a in matrix(1..=8)) {
        let x = operator_norm(&a);
        prop_assert!((x - operator_norm(&a.adjoint())).abs() <= 1e-12 * x.max(1.0));
        // Frobenius brackets the spectral norm
        let f = a.frobenius_norm();
        prop_assert!(x <= f * (1.0 + 1e-12));
        prop_assert!(f <= x * (a.dim() as f64).sqrt() * (1.0 + 1e-12) + 1e-12);
    }
}
