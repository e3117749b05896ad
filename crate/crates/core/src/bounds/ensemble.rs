use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;
use thiserror::Error;

use crate::linalg::Matrix;

/// Random matrix families for conjecture hunting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Ensemble {
    /// i.i.d. standard complex normal entries.
    ComplexGaussian,
    /// i.i.d. standard real normal entries.
    RealGaussian,
    /// Complex normal entries on and above the diagonal, zeros below.
    UpperTriangular,
    /// `U(λI + N)U*` with `N` the nilpotent Jordan block, `λ` complex
    /// normal and `U` Haar-distributed unitary.
    UnitarySimilarityOfJordan,
}

impl Ensemble {
    pub const ALL: [Ensemble; 4] = [
        Ensemble::ComplexGaussian,
        Ensemble::RealGaussian,
        Ensemble::UpperTriangular,
        Ensemble::UnitarySimilarityOfJordan,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Ensemble::ComplexGaussian => "complex-gaussian",
            Ensemble::RealGaussian => "real-gaussian",
            Ensemble::UpperTriangular => "upper-triangular",
            Ensemble::UnitarySimilarityOfJordan => "unitary-similarity-of-jordan",
        }
    }
}

impl fmt::Display for Ensemble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown ensemble `{0}` (expected complex-gaussian, real-gaussian, upper-triangular or unitary-similarity-of-jordan)")]
pub struct UnknownEnsemble(pub String);

impl FromStr for Ensemble {
    type Err = UnknownEnsemble;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ensemble::ALL
            .into_iter()
            .find(|e| e.tag() == s)
            .ok_or_else(|| UnknownEnsemble(s.to_string()))
    }
}

/// Seed of trial `index` in a campaign started from `seed`: the first word
/// of ChaCha8 stream `index` keyed by `seed`.
pub fn trial_seed(seed: u64, index: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng.next_u64()
}

fn complex_normal(rng: &mut ChaCha8Rng) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

fn real_normal(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), 0.0)
}

/// Haar unitary: Gram–Schmidt on the columns of a complex Gaussian matrix.
/// The resulting `R` has a positive diagonal, which makes `Q` Haar.
fn haar_unitary(n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let mut cols: Vec<Vec<Complex64>> = (0..n)
        .map(|_| (0..n).map(|_| complex_normal(rng)).collect())
        .collect();
    for k in 0..n {
        // twice for numerical orthogonality
        for _ in 0..2 {
            for prev in 0..k {
                let proj: Complex64 = (0..n).map(|i| cols[prev][i].conj() * cols[k][i]).sum();
                for i in 0..n {
                    let v = cols[prev][i];
                    cols[k][i] -= proj * v;
                }
            }
        }
        let norm = cols[k].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in &mut cols[k] {
            *z /= norm;
        }
    }
    Matrix::from_fn(n, |i, j| cols[j][i])
}

/// The matrix of one trial. Depends only on `(ensemble, n, seed)`.
pub fn random_matrix(ensemble: Ensemble, n: usize, seed: u64) -> Matrix {
    assert!(n >= 1, "dimension must be at least 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match ensemble {
        Ensemble::ComplexGaussian => {
            let data = (0..n * n).map(|_| complex_normal(&mut rng)).collect();
            Matrix::from_row_major(n, data).expect("finite normals")
        }
        Ensemble::RealGaussian => {
            let data = (0..n * n).map(|_| real_normal(&mut rng)).collect();
            Matrix::from_row_major(n, data).expect("finite normals")
        }
        Ensemble::UpperTriangular => {
            let mut data = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    // draw every entry so the stream layout matches the full ensemble
                    let z = complex_normal(&mut rng);
                    data.push(if j >= i { z } else { Complex64::new(0.0, 0.0) });
                }
            }
            Matrix::from_row_major(n, data).expect("finite normals")
        }
        Ensemble::UnitarySimilarityOfJordan => {
            let lambda = complex_normal(&mut rng);
            let u = haar_unitary(n, &mut rng);
            let jordan = Matrix::from_fn(n, |i, j| {
                if i == j {
                    lambda
                } else if j == i + 1 {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            });
            &(&u * &jordan) * &u.adjoint()
        }
    }
}
