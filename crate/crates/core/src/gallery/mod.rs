//! Worked examples with closed-form values, each checked against the
//! numerics of the other modules.

mod entries;
mod shift;
mod volterra;

use serde::Serialize;
use thiserror::Error;

use crate::linalg::{LinalgError, Matrix};
use crate::numrange::NumRangeError;

pub use entries::{
    commuting_pair_entry, example_lk, mobius_selfcommutator, rank_one, rank_one_matrix, schur2x2,
    sor_matrix, sor_matrix_entry, tridiag_toeplitz, tridiag_toeplitz_matrix, wang_du_entry,
    wang_du_matrix,
};
pub use shift::{
    bergman_eigenvalues, bergman_shift, bergman_weights, partial_sums, rearrange_zero_sum,
    shift_from_partial_sums, zero_sum_entry, WeightedShift,
};
pub use volterra::{
    si, volterra, volterra_area, volterra_area_closed_form, volterra_curve, volterra_matrix,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GalleryError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("values do not sum to zero (sum {sum:e}, magnitude {magnitude:e})")]
    NonZeroSum { sum: f64, magnitude: f64 },
    #[error("no arrangement satisfies the partial-sum constraints")]
    NoArrangement,
    #[error("partial sum {index} is negative ({value:e})")]
    NegativePartialSum { index: usize, value: f64 },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    NumRange(#[from] NumRangeError),
}

/// How a computed value is compared with its expectation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `|got − expected| ≤ tol`
    Equal,
    /// `got ≥ expected − tol`
    AtLeast,
    /// `got ≤ expected + tol`
    AtMost,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub quantity: String,
    pub relation: Relation,
    pub expected: f64,
    pub got: f64,
    pub tol: f64,
    pub pass: bool,
}

impl Check {
    pub fn new(
        quantity: impl Into<String>,
        relation: Relation,
        expected: f64,
        got: f64,
        tol: f64,
    ) -> Self {
        let pass = match relation {
            Relation::Equal => (got - expected).abs() <= tol,
            Relation::AtLeast => got >= expected - tol,
            Relation::AtMost => got <= expected + tol,
        };
        Self {
            quantity: quantity.into(),
            relation,
            expected,
            got,
            tol,
            pass,
        }
    }

    pub fn equal(quantity: impl Into<String>, expected: f64, got: f64, tol: f64) -> Self {
        Self::new(quantity, Relation::Equal, expected, got, tol)
    }

    pub fn at_least(quantity: impl Into<String>, bound: f64, got: f64, tol: f64) -> Self {
        Self::new(quantity, Relation::AtLeast, bound, got, tol)
    }

    pub fn at_most(quantity: impl Into<String>, bound: f64, got: f64, tol: f64) -> Self {
        Self::new(quantity, Relation::AtMost, bound, got, tol)
    }
}

/// A named value with the formula or argument it comes from.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NamedValue {
    pub name: String,
    pub value: f64,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl NamedValue {
    pub fn new(name: impl Into<String>, value: f64, note: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            value,
            note: note.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GalleryEntry {
    pub name: String,
    #[serde(skip)]
    pub matrix: Option<Matrix>,
    pub closed_forms: Vec<NamedValue>,
    pub computed: Vec<NamedValue>,
    pub checks: Vec<Check>,
}

impl GalleryEntry {
    pub fn new(name: impl Into<String>, matrix: Option<Matrix>) -> Self {
        Self {
            name: name.into(),
            matrix,
            closed_forms: Vec::new(),
            computed: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn closed_form(&mut self, name: &str, value: f64, note: &str) -> f64 {
        self.closed_forms.push(NamedValue::new(name, value, note));
        value
    }

    pub fn computed(&mut self, name: &str, value: f64) -> f64 {
        self.computed.push(NamedValue::new(name, value, ""));
        value
    }

    pub fn check(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn closed_form_value(&self, name: &str) -> Option<f64> {
        self.closed_forms
            .iter()
            .find(|v| v.name == name)
            .map(|v| v.value)
    }

    pub fn computed_value(&self, name: &str) -> Option<f64> {
        self.computed
            .iter()
            .find(|v| v.name == name)
            .map(|v| v.value)
    }
}

type Builder = fn() -> Result<GalleryEntry, GalleryError>;

/// Default discretization of the Volterra operator in the gallery run.
pub const VOLTERRA_N: usize = 500;

/// Every gallery entry under its name, sorted by name.
pub fn catalog() -> Vec<(&'static str, Builder)> {
    use num_complex::Complex64 as C;
    let mut all: Vec<(&'static str, Builder)> = vec![
        ("bergman-shift", || bergman_shift(16)),
        ("commuting-pair", commuting_pair_entry),
        ("mobius", || mobius_selfcommutator(0.5)),
        ("mobius-unit-log", || {
            mobius_selfcommutator((1.0 - (-1f64).exp()).sqrt())
        }),
        ("rank-one", || {
            let e1 = [C::new(1.0, 0.0), C::new(0.0, 0.0), C::new(0.0, 0.0)];
            let e2 = [C::new(0.0, 0.0), C::new(1.0, 0.0), C::new(0.0, 0.0)];
            rank_one(&e1, &e2)
        }),
        ("rank-one-overlap", || {
            let a = [C::new(1.0, 0.0), C::new(0.0, 0.0)];
            let b = [C::new(0.6, 0.0), C::new(0.0, 0.8)];
            rank_one(&a, &b)
        }),
        ("schur-2x2", || {
            schur2x2(C::new(1.0, 1.0), C::new(-0.5, 0.25), C::new(0.7, -0.3))
        }),
        ("schur-2x2-nilpotent", || {
            schur2x2(C::new(0.0, 0.0), C::new(0.0, 0.0), C::new(1.0, 0.0))
        }),
        ("sor", || {
            let m = vec![vec![0.4, -0.2], vec![0.1, 0.5], vec![-0.3, 0.2]];
            sor_matrix_entry(&m, 0.5)
        }),
        ("sor-square", || {
            let m = vec![vec![0.3, 0.8], vec![-0.6, 0.1]];
            sor_matrix_entry(&m, 1.0)
        }),
        ("toeplitz", || {
            tridiag_toeplitz(5, C::new(2.0, 0.0), C::new(1.0, 0.0), C::new(0.0, 0.0))
        }),
        ("toeplitz-2", || {
            tridiag_toeplitz(2, C::new(2.0, 0.0), C::new(1.0, 0.0), C::new(0.0, 0.0))
        }),
        ("toeplitz-complex", || {
            tridiag_toeplitz(6, C::new(1.0, 1.0), C::new(0.0, -0.5), C::new(0.3, 0.2))
        }),
        ("volterra", || volterra(VOLTERRA_N)),
        ("wang-du", wang_du_entry),
        ("zero-sum-shift", || zero_sum_entry(&[2.0, 2.0, -3.0, -1.0])),
    ];
    all.sort_by_key(|(name, _)| *name);
    all
}

/// Builds the entries whose name matches the glob `filter` (all when
/// `None`), in name order.
pub fn run_gallery(
    filter: Option<&glob::Pattern>,
) -> Vec<(String, Result<GalleryEntry, GalleryError>)> {
    use rayon::prelude::*;
    let selected: Vec<_> = catalog()
        .into_iter()
        .filter(|(name, _)| filter.is_none_or(|p| p.matches(name)))
        .collect();
    selected
        .into_par_iter()
        .map(|(name, build)| {
            let entry = build().map(|mut e| {
                e.name = name.to_string();
                e
            });
            (name.to_string(), entry)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_relations() {
        assert!(Check::equal("x", 1.0, 1.0 + 1e-10, 1e-9).pass);
        assert!(!Check::equal("x", 1.0, 1.1, 1e-9).pass);
        assert!(Check::at_least("x", 1.0, 0.9999999, 1e-6).pass);
        assert!(!Check::at_least("x", 1.0, 0.9, 1e-6).pass);
        assert!(Check::at_most("x", 1.0, 1.0000001, 1e-6).pass);
    }

    #[test]
    fn catalog_is_sorted_and_unique() {
        let names: Vec<_> = catalog().into_iter().map(|(n, _)| n).collect();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(names, sorted);
    }

    #[test]
    fn filter_selects_by_glob() {
        let p = glob::Pattern::new("toeplitz*").unwrap();
        let names: Vec<_> = run_gallery(Some(&p)).into_iter().map(|(n, _)| n).collect();
        assert_eq!(names, ["toeplitz", "toeplitz-2", "toeplitz-complex"]);
        let none = glob::Pattern::new("nothing-here").unwrap();
        assert!(run_gallery(Some(&none)).is_empty());
    }
}
