use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use super::ensemble::{random_matrix, trial_seed, Ensemble};
use super::{evaluate_bounds_with, BoundOptions, BoundSlacks, THEOREM_TOL};
use crate::numrange::{NumRangeError, DEFAULT_AREA_ANGLES};

/// Number of smallest slacks kept in a summary.
pub const SUMMARY_LEN: usize = 10;

#[derive(Clone, Copy, Debug)]
pub struct FuzzConfig {
    pub ensemble: Ensemble,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub area_angles: usize,
    /// Relative tolerance below which a theorem slack counts as a violation.
    pub theorem_tol: f64,
    /// Relative tolerance below which a conjecture slack is a candidate
    /// counterexample.
    pub conjecture_tol: f64,
}

impl FuzzConfig {
    pub fn new(ensemble: Ensemble, n: usize, trials: usize, seed: u64) -> Self {
        Self {
            ensemble,
            n,
            trials,
            seed,
            area_angles: DEFAULT_AREA_ANGLES,
            theorem_tol: THEOREM_TOL,
            conjecture_tol: THEOREM_TOL,
        }
    }
}

/// One trial. `seed` alone regenerates the matrix via
/// [`random_matrix`](super::random_matrix).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FuzzRecord {
    pub index: usize,
    pub seed: u64,
    pub n: usize,
    pub ensemble: Ensemble,
    pub conj1_slack: f64,
    pub conj2_slack: f64,
    pub bound_slacks: BoundSlacks,
    /// `max(1, ‖A‖²)`; tolerances are relative to it.
    pub scale: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SeededSlack {
    pub index: usize,
    pub seed: u64,
    pub slack: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FuzzSummary {
    pub ensemble: Ensemble,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub theorem_tol: f64,
    pub conjecture_tol: f64,
    /// Smallest conjecture-1 slacks, ascending.
    pub min_conj1: Vec<SeededSlack>,
    pub min_conj2: Vec<SeededSlack>,
    /// Smallest theorem slacks divided by the trial's scale.
    pub min_theorem: Vec<SeededSlack>,
    pub theorem_violations: Vec<SeededSlack>,
    pub conj1_candidates: Vec<SeededSlack>,
    pub conj2_candidates: Vec<SeededSlack>,
}

impl FuzzSummary {
    pub fn has_theorem_violation(&self) -> bool {
        !self.theorem_violations.is_empty()
    }

    pub fn has_conjecture_candidate(&self) -> bool {
        !self.conj1_candidates.is_empty() || !self.conj2_candidates.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FuzzOutcome {
    pub records: Vec<FuzzRecord>,
    pub summary: FuzzSummary,
}

#[derive(Debug, Error, Clone, PartialEq)]
#[error("trial {index} (seed {seed}) failed: {source}")]
pub struct FuzzError {
    pub index: usize,
    pub seed: u64,
    #[source]
    pub source: NumRangeError,
}

fn run_trial(cfg: &FuzzConfig, index: usize) -> Result<FuzzRecord, FuzzError> {
    let seed = trial_seed(cfg.seed, index as u64);
    let a = random_matrix(cfg.ensemble, cfg.n, seed);
    let opts = BoundOptions {
        area_angles: cfg.area_angles,
        theorem_tol: cfg.theorem_tol,
        ..BoundOptions::default()
    };
    let r = evaluate_bounds_with(&a, &opts).map_err(|source| FuzzError {
        index,
        seed,
        source,
    })?;
    Ok(FuzzRecord {
        index,
        seed,
        n: cfg.n,
        ensemble: cfg.ensemble,
        conj1_slack: r.conj1_slack,
        conj2_slack: r.conj2_slack,
        bound_slacks: r.slacks,
        scale: r.scale(),
    })
}

fn smallest(mut items: Vec<SeededSlack>, k: usize) -> Vec<SeededSlack> {
    items.sort_by(|a, b| a.slack.total_cmp(&b.slack).then(a.index.cmp(&b.index)));
    items.truncate(k);
    items
}

/// Runs `trials` independent trials in parallel. Trial `k` uses the seed
/// `trial_seed(seed, k)`, so results do not depend on the schedule and
/// records come back in trial order.
pub fn fuzz_conjectures(cfg: &FuzzConfig) -> Result<FuzzOutcome, FuzzError> {
    let records = (0..cfg.trials)
        .into_par_iter()
        .map(|k| run_trial(cfg, k))
        .collect::<Result<Vec<_>, _>>()?;

    let pick = |f: &dyn Fn(&FuzzRecord) -> f64| -> Vec<SeededSlack> {
        records
            .iter()
            .map(|r| SeededSlack {
                index: r.index,
                seed: r.seed,
                slack: f(r),
            })
            .collect()
    };
    let conj1 = pick(&|r| r.conj1_slack);
    let conj2 = pick(&|r| r.conj2_slack);
    let theorem = pick(&|r| r.bound_slacks.min_theorem() / r.scale);
    let conj1_scaled = pick(&|r| r.conj1_slack / r.scale);
    let conj2_scaled = pick(&|r| r.conj2_slack / r.scale);

    let below = |v: &[SeededSlack], tol: f64| -> Vec<SeededSlack> {
        let hits = v.iter().copied().filter(|s| s.slack < -tol).collect();
        smallest(hits, usize::MAX)
    };
    let summary = FuzzSummary {
        ensemble: cfg.ensemble,
        n: cfg.n,
        trials: cfg.trials,
        seed: cfg.seed,
        theorem_tol: cfg.theorem_tol,
        conjecture_tol: cfg.conjecture_tol,
        theorem_violations: below(&theorem, cfg.theorem_tol),
        conj1_candidates: below(&conj1_scaled, cfg.conjecture_tol),
        conj2_candidates: below(&conj2_scaled, cfg.conjecture_tol),
        min_conj1: smallest(conj1, SUMMARY_LEN),
        min_conj2: smallest(conj2, SUMMARY_LEN),
        min_theorem: smallest(theorem, SUMMARY_LEN),
    };
    Ok(FuzzOutcome { records, summary })
}
