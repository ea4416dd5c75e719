//! The randomized coboundary tester: pick a `(k+1)`-face with probability
//! equal to its weight, read `α` on its `k+2` facets, reject on odd parity.

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::PureComplex;
use crate::error::{Error, Result};
use crate::expansion::{coset_norm, h_exact, norm, SearchOptions, DEFAULT_BUDGET};
use crate::f2::{self, BitChain};
use crate::rational::{serde_ratio, Ratio};

pub const RNG_NAME: &str = "ChaCha8";

#[derive(Clone, Debug)]
pub struct TesterConfig {
    pub k: usize,
    pub trials: u64,
    pub seed: u64,
    /// Fixed number of independent streams; the report does not depend on
    /// the thread count.
    pub shards: u64,
    pub budget: u64,
    /// Certified lower bound on `h_k` and its label.
    pub epsilon: Option<(Ratio, String)>,
}

impl TesterConfig {
    pub fn new(k: usize, trials: u64, seed: u64) -> Self {
        TesterConfig {
            k,
            trials,
            seed,
            shards: 16,
            budget: DEFAULT_BUDGET,
            epsilon: None,
        }
    }

    pub fn with_epsilon(mut self, value: Ratio, source: impl Into<String>) -> Self {
        self.epsilon = Some((value, source.into()));
        self
    }
}

/// Inverse-CDF sampler over `X(k+1)` with probabilities `c(η)/Σc`.
#[derive(Clone, Debug)]
pub struct FaceSampler {
    cumulative: Vec<u64>,
}

impl FaceSampler {
    pub fn new(x: &PureComplex, dim: isize) -> Self {
        let cumulative = x
            .cofacet_counts(dim)
            .iter()
            .scan(0u64, |acc, &c| {
                *acc += c;
                Some(*acc)
            })
            .collect();
        FaceSampler { cumulative }
    }

    pub fn total(&self) -> u64 {
        *self.cumulative.last().unwrap_or(&0)
    }

    pub fn sample<R: Rng>(&self, rng: &mut R) -> usize {
        let r = rng.random_range(0..self.total());
        self.cumulative.partition_point(|&c| c <= r)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Trial {
    pub reject: bool,
    pub queries: usize,
}

/// Reads `α` on the facets of the `(k+1)`-face `eta`.
pub fn test_once(x: &PureComplex, alpha: &BitChain, eta: usize) -> Trial {
    let facets = x.facets_of(alpha.dim + 1, eta);
    let parity = facets.iter().filter(|&&f| alpha.bits.get(f)).count() % 2;
    Trial {
        reject: parity == 1,
        queries: facets.len(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TesterReport {
    pub k: usize,
    pub trials: u64,
    pub rejections: u64,
    pub rate: f64,
    /// `‖dα‖`, the exact rejection probability.
    #[serde(with = "serde_ratio")]
    pub expected_rate: Ratio,
    pub deviation_sigmas: f64,
    /// `|rejections - N·p| ≤ 4σ`.
    pub consistent: bool,
    pub queries_per_trial: usize,
    /// `‖[α]‖`, when the coset search fits the budget.
    #[serde(with = "serde_ratio::opt")]
    pub distance: Option<Ratio>,
    #[serde(with = "serde_ratio::opt")]
    pub epsilon: Option<Ratio>,
    pub epsilon_source: Option<String>,
    /// `‖dα‖ - ε·‖[α]‖`.
    #[serde(with = "serde_ratio::opt")]
    pub soundness_margin: Option<Ratio>,
    pub soundness: Option<bool>,
    pub rng: &'static str,
    pub seed: u64,
    pub shards: u64,
}

/// `ε = h_k` when the exact search fits the budget.
pub fn exact_epsilon(x: &PureComplex, k: usize, budget: u64) -> Result<(Ratio, String)> {
    let opts = SearchOptions {
        budget,
        ..SearchOptions::default()
    };
    Ok((h_exact(x, k, opts)?.value, "exact".into()))
}

pub fn run(x: &PureComplex, alpha: &BitChain, cfg: &TesterConfig) -> Result<TesterReport> {
    if cfg.trials == 0 || cfg.shards == 0 {
        return Err(Error::InvalidArgument("trials and shards must be positive".into()));
    }
    if alpha.dim != cfg.k as isize || cfg.k >= x.dim() {
        return Err(Error::DimensionMismatch {
            expected: format!("a {}-cochain below the top dimension", cfg.k),
            found: format!("a {}-cochain", alpha.dim),
        });
    }
    let expected = norm(x, &f2::coboundary(x, alpha)?);
    let sampler = FaceSampler::new(x, alpha.dim + 1);
    let rejections: u64 = (0..cfg.shards)
        .into_par_iter()
        .map(|shard| {
            let n = cfg.trials / cfg.shards + u64::from(shard < cfg.trials % cfg.shards);
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(shard);
            (0..n)
                .filter(|_| test_once(x, alpha, sampler.sample(&mut rng)).reject)
                .count() as u64
        })
        .sum();

    let p = expected.to_f64().expect("finite");
    let mean = cfg.trials as f64 * p;
    let sigma = (cfg.trials as f64 * p * (1.0 - p)).sqrt();
    let dev = rejections as f64 - mean;
    let (deviation_sigmas, consistent) = if sigma == 0.0 {
        (if dev == 0.0 { 0.0 } else { f64::INFINITY }, dev == 0.0)
    } else {
        (dev / sigma, dev.abs() <= 4.0 * sigma)
    };

    let distance = match coset_norm(x, alpha, cfg.budget) {
        Ok((d, _)) => Some(d),
        Err(Error::BudgetExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let margin = match (&distance, &cfg.epsilon) {
        (Some(d), Some((eps, _))) => Some(&expected - eps * d),
        _ => None,
    };
    Ok(TesterReport {
        k: cfg.k,
        trials: cfg.trials,
        rejections,
        rate: rejections as f64 / cfg.trials as f64,
        expected_rate: expected,
        deviation_sigmas,
        consistent,
        queries_per_trial: cfg.k + 2,
        distance,
        epsilon: cfg.epsilon.as_ref().map(|e| e.0.clone()),
        epsilon_source: cfg.epsilon.as_ref().map(|e| e.1.clone()),
        soundness: margin.as_ref().map(|m| *m >= Ratio::default()),
        soundness_margin: margin,
        rng: RNG_NAME,
        seed: cfg.seed,
        shards: cfg.shards,
    })
}
