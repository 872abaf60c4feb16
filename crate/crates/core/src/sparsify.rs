//! Randomized term restriction.
//!
//! Draws `m` terms i.i.d. (with replacement) with probability `|β_P|/Λ` and
//! returns `H'' = (Λ/m) Σ_draws sign(β_P) P`, an unbiased estimator of `H`
//! whose Pauli 1-norm never exceeds `Λ`. The operator-norm deviation
//! `‖H - H''‖` is controlled by the matrix Chernoff tail
//! `Pr[‖H - H''‖ ≥ δ] ≤ 2^n exp(-m δ² / 32)`.
//!
//! That tail is stated for `Λ ≤ 1`: each centred summand has norm at most
//! `2Λ`, and the exponent is really `-m δ² / (32 Λ²)`. [`chernoff_bound`]
//! returns the unit-scale form, so rescale `H` (or read `δ` as `δ/Λ`)
//! before comparing it with deviations of a larger Hamiltonian.
//!
//! Trial `t` of [`empirical_deviation`] uses ChaCha8 stream `t` under the
//! run seed, so trials may run in any order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::TermSampler;
use crate::hamiltonian::{Hamiltonian, Limits};
use crate::spectra;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SparsifyParams {
    pub m: usize,
    pub delta: f64,
    pub seed: u64,
    pub trials: usize,
}

impl SparsifyParams {
    pub fn validate(&self) -> Result<()> {
        if self.m == 0 {
            return Err(Error::InvalidParam("m must be >= 1".into()));
        }
        if self.delta.is_nan() || self.delta <= 0.0 {
            return Err(Error::InvalidParam(format!("delta must be positive, got {}", self.delta)));
        }
        if self.trials == 0 {
            return Err(Error::InvalidParam("trials must be >= 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SparsifyReport {
    pub n: usize,
    pub m: usize,
    pub delta: f64,
    pub trials: usize,
    pub seed: u64,
    /// `2^n e^{-mδ²/32}`, uncapped.
    pub bound: f64,
    /// The bound exceeds 1 and says nothing.
    pub bound_vacuous: bool,
    pub empirical_failure_rate: f64,
    /// `‖H - H''‖` per trial.
    pub deviations: Vec<f64>,
    pub mean_deviation: f64,
    pub terms_before: usize,
    pub terms_after_mean: f64,
    pub pauli1_before: f64,
    pub pauli1_after_mean: f64,
}

/// `2^n e^{-mδ²/32}`. Values above 1 are returned as-is; see [`is_vacuous`].
pub fn chernoff_bound(n: usize, m: usize, delta: f64) -> f64 {
    (n as f64 * std::f64::consts::LN_2 - m as f64 * delta * delta / 32.0).exp()
}

pub fn is_vacuous(bound: f64) -> bool {
    bound > 1.0
}

/// One restriction drawn from `rng`.
pub fn sample_restriction_with<R: Rng + ?Sized>(
    h: &Hamiltonian,
    sampler: &TermSampler,
    m: usize,
    rng: &mut R,
) -> Result<Hamiltonian> {
    if m == 0 {
        return Err(Error::InvalidParam("m must be >= 1".into()));
    }
    let weight = h.pauli_1_norm() / m as f64;
    let terms = sampler.terms();
    let draws = (0..m).map(|_| {
        let (p, c) = &terms[sampler.draw(rng)];
        (p.clone(), weight * c.signum())
    });
    Ok(Hamiltonian::from_terms(h.n(), draws)?.with_prune_tolerance(h.prune_tolerance()))
}

pub fn sample_restriction(h: &Hamiltonian, m: usize, seed: u64) -> Result<Hamiltonian> {
    let sampler = TermSampler::new(h)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_restriction_with(h, &sampler, m, &mut rng)
}

/// Runs `trials` independent restrictions and measures each deviation with
/// the dense oracle.
pub fn empirical_deviation(h: &Hamiltonian, params: &SparsifyParams, limits: &Limits) -> Result<SparsifyReport> {
    params.validate()?;
    if h.n() > limits.dense_limit {
        return Err(Error::DenseLimit {
            n: h.n(),
            limit: limits.dense_limit,
        });
    }
    let sampler = TermSampler::new(h)?;
    let base = ChaCha8Rng::seed_from_u64(params.seed);

    let per_trial = (0..params.trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = base.clone();
            rng.set_stream(t as u64);
            let restricted = sample_restriction_with(h, &sampler, params.m, &mut rng)?;
            let diff = h.sub(&restricted)?;
            let dev = spectra::operator_norm(&diff, limits)?;
            Ok((dev, restricted.len(), restricted.pauli_1_norm()))
        })
        .collect::<Result<Vec<(f64, usize, f64)>>>()?;

    let trials = params.trials as f64;
    let deviations: Vec<f64> = per_trial.iter().map(|t| t.0).collect();
    let failures = deviations.iter().filter(|&&d| d >= params.delta).count();
    let bound = chernoff_bound(h.n(), params.m, params.delta);
    Ok(SparsifyReport {
        n: h.n(),
        m: params.m,
        delta: params.delta,
        trials: params.trials,
        seed: params.seed,
        bound,
        bound_vacuous: is_vacuous(bound),
        empirical_failure_rate: failures as f64 / trials,
        mean_deviation: deviations.iter().sum::<f64>() / trials,
        deviations,
        terms_before: h.len(),
        terms_after_mean: per_trial.iter().map(|t| t.1 as f64).sum::<f64>() / trials,
        pauli1_before: h.pauli_1_norm(),
        pauli1_after_mean: per_trial.iter().map(|t| t.2).sum::<f64>() / trials,
    })
}
