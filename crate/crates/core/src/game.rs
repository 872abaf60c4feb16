//! The energy-measurement game against an honest prover.
//!
//! Each round the verifier picks a term `P` with probability `|β_P| / Λ`
//! (`Λ = ‖H‖_P,1`), the prover measures `P` on a fresh copy of `ψ` and
//! reports `b ∈ {±1}`, and the verifier accepts iff `b = sign(β_P)`. The
//! acceptance probability is `1/2 + <H>_ψ / (2Λ)`.
//!
//! Randomness: shot `s` of a run with seed `seed` draws from a ChaCha8
//! generator keyed by `seed` on stream `s`. Shots therefore never share
//! random words and the transcript does not depend on how shots are spread
//! over threads.

use rand::distributions::{Distribution, WeightedIndex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hamiltonian::Hamiltonian;
use crate::pauli::PauliString;
use crate::spectra::{self, StateVector};

/// Transcripts longer than this keep only aggregate counts.
pub const ROUND_RECORD_LIMIT: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameRound {
    pub sampled_term: PauliString,
    pub coeff_sign: i8,
    pub outcome: i8,
    pub accepted: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GameTranscript {
    /// Per-round records; empty when `shots > ROUND_RECORD_LIMIT`.
    pub rounds: Vec<GameRound>,
    pub rounds_elided: bool,
    pub shots: usize,
    pub accepted: usize,
    pub accept_frequency: f64,
    pub std_error: f64,
    pub exact_probability: f64,
    pub seed: u64,
}

impl GameTranscript {
    /// `|f - p| / σ`, or 0 when both the deviation and σ vanish.
    pub fn z_score(&self) -> f64 {
        let dev = (self.accept_frequency - self.exact_probability).abs();
        if dev == 0.0 {
            0.0
        } else {
            dev / self.std_error
        }
    }
}

fn check_game_inputs(h: &Hamiltonian, psi: &StateVector) -> Result<()> {
    if h.is_zero() {
        return Err(Error::ZeroHamiltonian);
    }
    if h.n() != psi.n() {
        return Err(Error::QubitMismatch {
            left: h.n(),
            right: psi.n(),
        });
    }
    Ok(())
}

fn sign_of(c: f64) -> i8 {
    if c >= 0.0 {
        1
    } else {
        -1
    }
}

/// Exact acceptance probability, computed two ways: the closed form
/// `1/2 + <ψ|H|ψ>/(2Λ)` (quadratic form through the matrix-free product)
/// and the term-wise sum `Σ_P (|β_P|/Λ)(1/2 + sign(β_P)<P>_ψ/2)`.
pub fn accept_prob_exact(h: &Hamiltonian, psi: &StateVector) -> Result<f64> {
    check_game_inputs(h, psi)?;
    let lambda = h.pauli_1_norm();
    let closed = 0.5 + spectra::quadratic_form(h, psi)? / (2.0 * lambda);
    let termwise = accept_prob_termwise(h, psi)?;
    if (closed - termwise).abs() > 1e-12 {
        return Err(Error::Internal(format!(
            "acceptance probability routes disagree: closed form {closed}, term-wise {termwise}"
        )));
    }
    Ok(closed.clamp(0.0, 1.0))
}

/// The term-wise sum alone.
pub fn accept_prob_termwise(h: &Hamiltonian, psi: &StateVector) -> Result<f64> {
    check_game_inputs(h, psi)?;
    let lambda = h.pauli_1_norm();
    let mut total = 0.0;
    for (p, c) in h.terms() {
        let ev = spectra::pauli_expectation(p, psi)?;
        total += (c.abs() / lambda) * (0.5 + 0.5 * sign_of(c) as f64 * ev);
    }
    Ok(total)
}

/// Draws a term with probability `|β_P| / Λ`.
pub fn sample_term<R: Rng + ?Sized>(h: &Hamiltonian, rng: &mut R) -> Result<(PauliString, i8)> {
    let sampler = TermSampler::new(h)?;
    let idx = sampler.draw(rng);
    Ok((sampler.terms[idx].0.clone(), sign_of(sampler.terms[idx].1)))
}

/// Importance sampler over the terms of a Hamiltonian, in canonical order.
#[derive(Debug, Clone)]
pub struct TermSampler {
    terms: Vec<(PauliString, f64)>,
    index: WeightedIndex<f64>,
}

impl TermSampler {
    pub fn new(h: &Hamiltonian) -> Result<Self> {
        if h.is_zero() {
            return Err(Error::ZeroHamiltonian);
        }
        let terms: Vec<(PauliString, f64)> = h.terms().map(|(p, c)| (p.clone(), c)).collect();
        let index = WeightedIndex::new(terms.iter().map(|(_, c)| c.abs()))
            .map_err(|e| Error::Internal(format!("term weights: {e}")))?;
        Ok(TermSampler { terms, index })
    }

    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        self.index.sample(rng)
    }

    pub fn terms(&self) -> &[(PauliString, f64)] {
        &self.terms
    }
}

/// One round: sample a term, measure it on a fresh copy of `ψ`, apply the
/// acceptance rule.
pub fn play_round<R: Rng + ?Sized>(h: &Hamiltonian, psi: &StateVector, rng: &mut R) -> Result<GameRound> {
    check_game_inputs(h, psi)?;
    let (term, coeff_sign) = sample_term(h, rng)?;
    let ev = spectra::pauli_expectation(&term, psi)?;
    Ok(finish_round(term, coeff_sign, ev, rng))
}

fn measure<R: Rng + ?Sized>(expectation: f64, rng: &mut R) -> i8 {
    let p_plus = ((1.0 + expectation) / 2.0).clamp(0.0, 1.0);
    if rng.gen::<f64>() < p_plus {
        1
    } else {
        -1
    }
}

fn finish_round<R: Rng + ?Sized>(term: PauliString, coeff_sign: i8, ev: f64, rng: &mut R) -> GameRound {
    let outcome = measure(ev, rng);
    GameRound {
        sampled_term: term,
        coeff_sign,
        outcome,
        accepted: outcome == coeff_sign,
    }
}

/// Runs `shots` independent rounds.
pub fn simulate(h: &Hamiltonian, psi: &StateVector, shots: usize, seed: u64) -> Result<GameTranscript> {
    if shots == 0 {
        return Err(Error::InvalidParam("shots must be >= 1".into()));
    }
    let exact_probability = accept_prob_exact(h, psi)?;
    let sampler = TermSampler::new(h)?;
    // An honest prover's outcome law depends on ψ only through <P>_ψ.
    let expectations = sampler
        .terms()
        .iter()
        .map(|(p, _)| spectra::pauli_expectation(p, psi))
        .collect::<Result<Vec<f64>>>()?;
    let base = ChaCha8Rng::seed_from_u64(seed);

    let play = |shot: usize| -> (usize, i8, bool) {
        let mut rng = base.clone();
        rng.set_stream(shot as u64);
        let idx = sampler.draw(&mut rng);
        let sign = sign_of(sampler.terms[idx].1);
        let outcome = measure(expectations[idx], &mut rng);
        (idx, outcome, outcome == sign)
    };

    let record = shots <= ROUND_RECORD_LIMIT;
    let (accepted, rounds) = if record {
        let raw: Vec<(usize, i8, bool)> = (0..shots).into_par_iter().map(play).collect();
        let rounds: Vec<GameRound> = raw
            .into_iter()
            .map(|(idx, outcome, accepted)| GameRound {
                sampled_term: sampler.terms[idx].0.clone(),
                coeff_sign: sign_of(sampler.terms[idx].1),
                outcome,
                accepted,
            })
            .collect();
        (rounds.iter().filter(|r| r.accepted).count(), rounds)
    } else {
        let accepted = (0..shots)
            .into_par_iter()
            .map(|s| play(s).2 as usize)
            .sum();
        (accepted, Vec::new())
    };

    let f = accepted as f64 / shots as f64;
    Ok(GameTranscript {
        rounds,
        rounds_elided: !record,
        shots,
        accepted,
        accept_frequency: f,
        std_error: (f * (1.0 - f) / shots as f64).sqrt(),
        exact_probability,
        seed,
    })
}
