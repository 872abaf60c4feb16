//! Tensor-power promise-gap amplification.
//!
//! For `-1 ≼ H ≼ 1` the transform
//!
//! ```text
//!   H' = 2 ((I + H)/2)^{⊗k} - I
//! ```
//!
//! maps the top eigenvalue through `λ ↦ 2((1 + λ)/2)^k - 1` and keeps
//! `-1 ≼ H' ≼ 1`. A YES instance (`λ_max ≥ 1 - 1/p`) stays above `1 - k/p`,
//! a NO instance (`λ_max ≤ 1 - 1/q`) drops below `2e^{-k/(2q)} - 1`, and the
//! Pauli 1-norm grows to at most `1 + 2((1 + ‖H‖_P,1)/2)^k`. Unless
//! `‖H‖_P,1 ≤ 1` that growth is exponential in `k`, which is what eats the
//! amplified gap once the energy game renormalizes by the Pauli 1-norm.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hamiltonian::{Hamiltonian, Limits};
use crate::spectra::{self, EigOptions};

/// Slack allowed when comparing eigenvalues against bounds.
pub const BOUND_TOLERANCE: f64 = 1e-9;
/// Agreement required between the measured and predicted top eigenvalue.
pub const EIGEN_IDENTITY_TOLERANCE: f64 = 1e-8;

/// How [`amplify`] establishes `‖H‖ ≤ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NormCheck {
    /// Dense eigensolve when `n` is within the dense limit, otherwise accept
    /// `‖H‖_P,1 ≤ 1` as a certificate, otherwise refuse.
    #[default]
    Auto,
    /// Caller vouches for `‖H‖ ≤ 1`.
    Assume,
}

/// Promise parameters. `p = f64::INFINITY` is the exact YES case `λ_max = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AmplifyParams {
    pub k: usize,
    #[serde(with = "extended_real")]
    pub p: f64,
    pub q: f64,
}

impl AmplifyParams {
    pub fn new(k: usize, p: f64, q: f64) -> Result<Self> {
        let params = AmplifyParams { k, p, q };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::InvalidParam("k must be >= 1".into()));
        }
        if !(self.q > 0.0 && self.q.is_finite()) {
            return Err(Error::InvalidParam(format!("q must be positive and finite, got {}", self.q)));
        }
        if self.p.is_nan() || self.p <= 0.0 {
            return Err(Error::InvalidParam(format!("p must be positive, got {}", self.p)));
        }
        if 1.0 / self.p >= 1.0 / self.q {
            return Err(Error::InvalidParam(format!(
                "YES threshold 1 - 1/p must lie above NO threshold 1 - 1/q (p = {}, q = {})",
                self.p, self.q
            )));
        }
        Ok(())
    }

    pub fn yes_threshold(&self) -> f64 {
        1.0 - 1.0 / self.p
    }

    pub fn no_threshold(&self) -> f64 {
        1.0 - 1.0 / self.q
    }
}

/// Serializes `f64::INFINITY` as the string `"inf"`.
pub mod extended_real {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_infinite() && *v > 0.0 {
            s.serialize_str("inf")
        } else {
            s.serialize_f64(*v)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(f64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(v),
            Repr::Text(t) => parse(&t).map_err(serde::de::Error::custom),
        }
    }

    pub fn parse(text: &str) -> Result<f64, String> {
        match text.trim().to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "∞" => Ok(f64::INFINITY),
            other => other.parse::<f64>().map_err(|e| format!("bad number {text:?}: {e}")),
        }
    }
}

/// Builds `2((I + H)/2)^{⊗k} - I` on `k·n` qubits.
pub fn amplify(h: &Hamiltonian, k: usize, check: NormCheck, limits: &Limits) -> Result<Hamiltonian> {
    if k == 0 {
        return Err(Error::InvalidParam("k must be >= 1".into()));
    }
    if check == NormCheck::Auto {
        check_norm(h, limits)?;
    }
    let identity = Hamiltonian::identity(h.n());
    let shifted = Hamiltonian::linear_combine(&[(0.5, &identity), (0.5, h)])?;
    let projected = (shifted.len() as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if projected > limits.term_cap as u128 {
        return Err(Error::Capacity {
            requested: projected,
            cap: limits.term_cap,
        });
    }
    let power = shifted.tensor_power(k, limits)?;
    let big_identity = Hamiltonian::identity(h.n() * k);
    Hamiltonian::linear_combine(&[(2.0, &power), (-1.0, &big_identity)])
}

fn check_norm(h: &Hamiltonian, limits: &Limits) -> Result<()> {
    if h.n() <= limits.dense_limit {
        let norm = spectra::operator_norm(h, limits)?;
        if norm > 1.0 + BOUND_TOLERANCE {
            return Err(Error::NormPrecondition(format!("‖H‖ = {norm} > 1")));
        }
        return Ok(());
    }
    let p1 = h.pauli_1_norm();
    if p1 <= 1.0 + BOUND_TOLERANCE {
        return Ok(());
    }
    Err(Error::NormPrecondition(format!(
        "{} qubits is above the dense limit and ‖H‖_P,1 = {p1} > 1 does not certify ‖H‖ ≤ 1; \
         pass an explicit override",
        h.n()
    )))
}

/// `2((1 + λ)/2)^k - 1`.
pub fn exact_eigenvalue_map(lambda: f64, k: usize) -> Result<f64> {
    if !(-1.0 - BOUND_TOLERANCE..=1.0 + BOUND_TOLERANCE).contains(&lambda) {
        return Err(Error::InvalidParam(format!("eigenvalue {lambda} outside [-1, 1]")));
    }
    let lambda = lambda.clamp(-1.0, 1.0);
    Ok(2.0 * ((1.0 + lambda) / 2.0).powi(k as i32) - 1.0)
}

/// `1 + 2((1 + ‖H‖_P,1)/2)^k`.
pub fn pauli_norm_bound(pauli1: f64, k: usize) -> f64 {
    1.0 + 2.0 * ((1.0 + pauli1) / 2.0).powi(k as i32)
}

/// Promise gap of the energy game induced by a Hamiltonian promise gap.
pub fn game_promise_gap(pgap_ham: f64, pauli1: f64) -> Result<f64> {
    if pauli1.is_nan() || pauli1 <= 0.0 {
        return Err(Error::InvalidParam(format!("Pauli 1-norm must be positive, got {pauli1}")));
    }
    Ok(pgap_ham / pauli1)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LemmaBounds {
    /// `1 - k/p` (exactly 1 when `p = ∞`).
    pub yes_lower_bound: f64,
    /// `2e^{-k/(2q)} - 1`.
    pub no_upper_bound: f64,
    /// `2(1 - k/(2q)) - 1`; only meaningful for `λ_max = 1 - 1/q` exactly.
    pub no_lower_bound: f64,
    /// `k(1/(2q) - 1/p)`.
    pub gap_lower_bound: f64,
    /// `k ≤ 2q`, the regime where the linear gap bound follows from the
    /// first-order expansion.
    pub gap_regime_ok: bool,
}

pub fn lemma_bounds(params: &AmplifyParams) -> Result<LemmaBounds> {
    params.validate()?;
    let k = params.k as f64;
    let inv_p = if params.p.is_infinite() { 0.0 } else { 1.0 / params.p };
    Ok(LemmaBounds {
        yes_lower_bound: 1.0 - k * inv_p,
        no_upper_bound: 2.0 * (-k / (2.0 * params.q)).exp() - 1.0,
        no_lower_bound: 2.0 * (1.0 - k / (2.0 * params.q)) - 1.0,
        gap_lower_bound: k * (1.0 / (2.0 * params.q) - inv_p),
        gap_regime_ok: k <= 2.0 * params.q,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PromiseCase {
    Yes,
    No,
    /// `λ_max` lies strictly between the thresholds.
    Violated,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub k: usize,
    #[serde(with = "extended_real")]
    pub p: f64,
    pub q: f64,
    pub n_in: usize,
    pub n_out: usize,
    pub terms_in: usize,
    pub terms_out: usize,
    pub lambda_in: f64,
    pub lambda_out_exact: f64,
    pub lambda_out_predicted: f64,
    #[serde(flatten)]
    pub bounds: LemmaBounds,
    pub pauli1_in: f64,
    pub pauli1_out: f64,
    pub pauli1_bound: f64,
    pub operator_norm_out: f64,
    pub promise_case: PromiseCase,
    /// `1 - λ_out`: distance of the amplified top eigenvalue from 1.
    pub distance_from_one: f64,
    /// `(1 - λ_out)/2`: the same distance on the `(I + H')/2` scale.
    pub half_distance_from_one: f64,
    pub eigen_identity_holds: bool,
    pub norm_bound_holds: bool,
    pub operator_norm_holds: bool,
    pub promise_bound_holds: bool,
    /// Checked only for `λ_in = 1 - 1/q` with `k ≤ 2q`.
    pub sandwich_holds: Option<bool>,
    pub all_bounds_hold: bool,
}

/// Amplifies `h` and checks every inequality of the amplification bound
/// against measured values. Eigenvalues come from the dense oracle when
/// `k·n` fits under the dense limit.
pub fn verify_amplification(h: &Hamiltonian, params: &AmplifyParams, limits: &Limits) -> Result<LemmaReport> {
    params.validate()?;
    let bounds = lemma_bounds(params)?;
    let k = params.k;
    let opts = EigOptions::default();

    let spec_in = spectra::extremal_eigs(h, &opts, limits)?;
    let lambda_in = spec_in.lambda_max;
    let amplified = amplify(h, k, NormCheck::Auto, limits)?;
    let spec_out = spectra::extremal_eigs(&amplified, &opts, limits)?;
    let lambda_out = spec_out.lambda_max;
    let predicted = exact_eigenvalue_map(lambda_in, k)?;

    let pauli1_in = h.pauli_1_norm();
    let pauli1_out = amplified.pauli_1_norm();
    let pauli1_bound = pauli_norm_bound(pauli1_in, k);
    let operator_norm_out = spec_out.operator_norm();

    let promise_case = if lambda_in >= params.yes_threshold() - BOUND_TOLERANCE {
        PromiseCase::Yes
    } else if lambda_in <= params.no_threshold() + BOUND_TOLERANCE {
        PromiseCase::No
    } else {
        PromiseCase::Violated
    };
    let promise_bound_holds = match promise_case {
        PromiseCase::Yes => lambda_out >= bounds.yes_lower_bound - BOUND_TOLERANCE,
        PromiseCase::No => lambda_out <= bounds.no_upper_bound + BOUND_TOLERANCE,
        PromiseCase::Violated => false,
    };
    let on_no_threshold = (lambda_in - params.no_threshold()).abs() <= BOUND_TOLERANCE;
    let sandwich_holds = (on_no_threshold && bounds.gap_regime_ok).then_some({
        bounds.no_lower_bound - BOUND_TOLERANCE <= lambda_out
            && lambda_out <= bounds.no_upper_bound + BOUND_TOLERANCE
    });

    let eigen_identity_holds = (lambda_out - predicted).abs() <= EIGEN_IDENTITY_TOLERANCE;
    let norm_bound_holds = pauli1_out <= pauli1_bound + BOUND_TOLERANCE;
    let operator_norm_holds = operator_norm_out <= 1.0 + BOUND_TOLERANCE;
    let all_bounds_hold = eigen_identity_holds
        && norm_bound_holds
        && operator_norm_holds
        && promise_bound_holds
        && sandwich_holds.unwrap_or(true);

    Ok(LemmaReport {
        k,
        p: params.p,
        q: params.q,
        n_in: h.n(),
        n_out: amplified.n(),
        terms_in: h.len(),
        terms_out: amplified.len(),
        lambda_in,
        lambda_out_exact: lambda_out,
        lambda_out_predicted: predicted,
        bounds,
        pauli1_in,
        pauli1_out,
        pauli1_bound,
        operator_norm_out,
        promise_case,
        distance_from_one: 1.0 - lambda_out,
        half_distance_from_one: (1.0 - lambda_out) / 2.0,
        eigen_identity_holds,
        norm_bound_holds,
        operator_norm_holds,
        promise_bound_holds,
        sandwich_holds,
        all_bounds_hold,
    })
}

/// The `k = 2q` regime for a NO instance sitting exactly at `1 - 1/q`,
/// reported on both scales: the amplified eigenvalue against its
/// `q → ∞` limit `2/e - 1`, and the half-distance from 1 against `1 - 1/e`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DoubledPowerRegime {
    pub q: usize,
    pub k: usize,
    pub lambda_out: f64,
    pub lambda_limit: f64,
    pub relative_distance: f64,
    pub half_distance_from_one: f64,
    pub half_distance_limit: f64,
    pub half_distance_relative: f64,
}

pub fn doubled_power_regime(q: usize) -> Result<DoubledPowerRegime> {
    if q == 0 {
        return Err(Error::InvalidParam("q must be >= 1".into()));
    }
    let k = 2 * q;
    let lambda_out = exact_eigenvalue_map(1.0 - 1.0 / q as f64, k)?;
    let lambda_limit = 2.0 * (-1f64).exp() - 1.0;
    let half = (1.0 - lambda_out) / 2.0;
    let half_limit = 1.0 - (-1f64).exp();
    Ok(DoubledPowerRegime {
        q,
        k,
        lambda_out,
        lambda_limit,
        relative_distance: ((lambda_out - lambda_limit) / lambda_limit).abs(),
        half_distance_from_one: half,
        half_distance_limit: half_limit,
        half_distance_relative: ((half - half_limit) / half_limit).abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn h(terms: &[(&str, f64)]) -> Hamiltonian {
        Hamiltonian::from_text(terms.iter().copied()).unwrap()
    }

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn amplify_z_cubed_is_shifted_projector() {
        let out = amplify(&h(&[("Z", 1.0)]), 3, NormCheck::Auto, &limits()).unwrap();
        assert_eq!(out.n(), 3);
        assert_eq!(out.len(), 8);
        assert_relative_eq!(out.coeff(&"III".parse().unwrap()), -0.75, epsilon = 1e-15);
        for s in ["IIZ", "IZI", "ZII", "IZZ", "ZIZ", "ZZI", "ZZZ"] {
            assert_relative_eq!(out.coeff(&s.parse().unwrap()), 0.25, epsilon = 1e-15);
        }
        assert_relative_eq!(out.pauli_1_norm(), 2.5, epsilon = 1e-14);
    }

    #[test]
    fn amplify_k1_is_identity_map() {
        let ham = h(&[("XY", 0.3), ("ZI", -0.4), ("IX", 0.2)]);
        let out = amplify(&ham, 1, NormCheck::Auto, &limits()).unwrap();
        assert_eq!(out.len(), ham.len());
        for (p, c) in ham.terms() {
            assert_relative_eq!(out.coeff(p), c, epsilon = 1e-15);
        }
    }

    #[test]
    fn amplify_preserves_top_eigenvalue_one() {
        let out = amplify(&h(&[("XX", 0.5), ("ZZ", 0.5)]), 2, NormCheck::Auto, &limits()).unwrap();
        let spec = spectra::extremal_eigs(&out, &EigOptions::default(), &limits()).unwrap();
        assert_relative_eq!(spec.lambda_max, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn amplify_rejects_large_norm_and_caps_terms() {
        let big = h(&[("X", 1.0), ("Z", 1.0)]);
        assert!(matches!(
            amplify(&big, 2, NormCheck::Auto, &limits()),
            Err(Error::NormPrecondition(_))
        ));
        assert!(amplify(&big, 2, NormCheck::Assume, &limits()).is_ok());
        assert!(matches!(
            amplify(&big, 2, NormCheck::Auto, &Limits { dense_limit: 0, ..limits() }),
            Err(Error::NormPrecondition(_))
        ));
        let tight = Limits {
            term_cap: 26,
            ..limits()
        };
        assert!(matches!(
            amplify(&h(&[("X", 0.5), ("Z", 0.5)]), 3, NormCheck::Auto, &tight),
            Err(Error::Capacity { requested: 27, .. })
        ));
        assert!(amplify(&h(&[("Z", 1.0)]), 0, NormCheck::Auto, &limits()).is_err());
    }

    #[test]
    fn pauli_one_certificate_above_dense_limit() {
        let above = Limits {
            dense_limit: 0,
            ..limits()
        };
        assert!(amplify(&h(&[("X", 0.5), ("Z", 0.5)]), 2, NormCheck::Auto, &above).is_ok());
    }

    #[test]
    fn eigenvalue_map_examples() {
        for k in 1..10 {
            assert_eq!(exact_eigenvalue_map(1.0, k).unwrap(), 1.0);
            assert_eq!(exact_eigenvalue_map(-1.0, k).unwrap(), -1.0);
        }
        let v = exact_eigenvalue_map(1.0 - 1.0 / 5.0, 10).unwrap();
        assert_relative_eq!(v, 2.0 * 0.9f64.powi(10) - 1.0, epsilon = 1e-15);
        assert_relative_eq!(v, -0.302_643_119_8, epsilon = 1e-10);
        assert!(exact_eigenvalue_map(1.5, 2).is_err());
        assert!(exact_eigenvalue_map(-1.1, 2).is_err());
    }

    #[test]
    fn bound_examples() {
        let b = lemma_bounds(&AmplifyParams::new(20, f64::INFINITY, 10.0).unwrap()).unwrap();
        assert_eq!(b.yes_lower_bound, 1.0);
        assert_relative_eq!(b.no_upper_bound, 2.0 * (-1f64).exp() - 1.0, epsilon = 1e-15);
        assert_relative_eq!(b.no_upper_bound, -0.26424, epsilon = 1e-5);

        let b = lemma_bounds(&AmplifyParams::new(20, 100.0, 10.0).unwrap()).unwrap();
        assert_relative_eq!(b.yes_lower_bound, 0.8, epsilon = 1e-15);
        assert_relative_eq!(b.gap_lower_bound, 0.8, epsilon = 1e-15);
        assert_relative_eq!(b.no_lower_bound, -1.0, epsilon = 1e-15);
        assert!(b.gap_regime_ok);

        let b = lemma_bounds(&AmplifyParams::new(30, 100.0, 10.0).unwrap()).unwrap();
        assert!(!b.gap_regime_ok);
    }

    #[test]
    fn params_validation() {
        assert!(AmplifyParams::new(0, 10.0, 5.0).is_err());
        assert!(AmplifyParams::new(1, 5.0, 10.0).is_err());
        assert!(AmplifyParams::new(1, 5.0, 5.0).is_err());
        assert!(AmplifyParams::new(1, 10.0, 0.0).is_err());
        assert!(AmplifyParams::new(1, f64::INFINITY, 1.0).is_ok());
    }

    #[test]
    fn extended_real_round_trip() {
        let p = AmplifyParams::new(3, f64::INFINITY, 2.0).unwrap();
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, r#"{"k":3,"p":"inf","q":2.0}"#);
        assert_eq!(serde_json::from_str::<AmplifyParams>(&text).unwrap(), p);
        let finite: AmplifyParams = serde_json::from_str(r#"{"k":3,"p":100,"q":2}"#).unwrap();
        assert_eq!(finite.p, 100.0);
    }

    #[test]
    fn norm_bound_examples() {
        for k in 1..8 {
            assert_eq!(pauli_norm_bound(1.0, k), 3.0);
        }
        assert_relative_eq!(pauli_norm_bound(2f64.sqrt(), 2), 3.914_213_562_4, epsilon = 1e-9);
        assert_eq!(pauli_norm_bound(0.0, 5), 1.0625);
    }

    #[test]
    fn game_gap_examples() {
        assert_relative_eq!(game_promise_gap(0.8, 2.5).unwrap(), 0.32, epsilon = 1e-15);
        assert_eq!(game_promise_gap(0.37, 1.0).unwrap(), 0.37);
        let chain = crate::models::xxzz_chain(11).unwrap();
        assert_eq!(chain.pauli_1_norm(), 20.0);
        assert_relative_eq!(game_promise_gap(0.1, chain.pauli_1_norm()).unwrap(), 0.005, epsilon = 1e-15);
        assert!(game_promise_gap(0.1, 0.0).is_err());
        assert!(game_promise_gap(0.1, -1.0).is_err());
    }

    #[test]
    fn verify_z_yes_case() {
        let params = AmplifyParams::new(3, f64::INFINITY, 2.0).unwrap();
        let r = verify_amplification(&h(&[("Z", 1.0)]), &params, &limits()).unwrap();
        assert_relative_eq!(r.lambda_out_exact, 1.0, epsilon = 1e-12);
        assert_relative_eq!(r.pauli1_out, 2.5, epsilon = 1e-12);
        assert_eq!(r.pauli1_bound, 3.0);
        assert_eq!(r.promise_case, PromiseCase::Yes);
        assert!(r.all_bounds_hold);
    }

    #[test]
    fn verify_no_case_on_diagonal_instance() {
        let params = AmplifyParams::new(10, f64::INFINITY, 5.0).unwrap();
        let r = verify_amplification(&h(&[("Z", 0.8)]), &params, &limits()).unwrap();
        assert_eq!(r.promise_case, PromiseCase::No);
        assert_relative_eq!(r.lambda_out_exact, -0.302_643_119_8, epsilon = 1e-9);
        assert_relative_eq!(r.bounds.no_upper_bound, -0.264_241_117_7, epsilon = 1e-9);
        assert!(r.lambda_out_exact <= r.bounds.no_upper_bound);
        assert_eq!(r.sandwich_holds, Some(true));
        assert!(r.all_bounds_hold);
    }

    #[test]
    fn verify_hadamard_growth() {
        let had = crate::models::hadamard_power(1).unwrap();
        // ‖H_had‖ = 1 exactly, so NormCheck::Auto passes via the dense path.
        let params = AmplifyParams::new(4, f64::INFINITY, 2.0).unwrap();
        let r = verify_amplification(&had, &params, &limits()).unwrap();
        let s2 = 2f64.sqrt();
        // ((I+H)/2)^{⊗4} has only positive coefficients: ((1+√2)/2)^4 in total,
        // 1/16 of it on the identity.
        let power = ((1.0 + s2) / 2.0).powi(4);
        assert_relative_eq!(r.pauli1_out, 2.0 * power - 2.0 / 16.0 + (1.0 - 2.0 / 16.0), epsilon = 1e-12);
        assert_relative_eq!(r.pauli1_bound, 1.0 + 2.0 * power, epsilon = 1e-12);
        assert!(r.pauli1_out <= r.pauli1_bound);
        assert!(r.pauli1_out / r.pauli1_in > 1.0);
        assert!(r.all_bounds_hold);
    }

    #[test]
    fn verify_flags_promise_violation() {
        let params = AmplifyParams::new(2, 100.0, 2.0).unwrap();
        let r = verify_amplification(&h(&[("Z", 0.7)]), &params, &limits()).unwrap();
        assert_eq!(r.promise_case, PromiseCase::Violated);
        assert!(!r.all_bounds_hold);
        assert!(r.eigen_identity_holds);
    }

    #[test]
    fn doubled_power_regime_exposes_both_scales() {
        let r = doubled_power_regime(50).unwrap();
        assert_eq!(r.k, 100);
        assert_relative_eq!(r.lambda_out, 2.0 * 0.99f64.powi(100) - 1.0, epsilon = 1e-15);
        assert_relative_eq!(r.half_distance_limit, 0.632_120_558_8, epsilon = 1e-10);
        assert!(r.relative_distance < 0.02);
        assert!(r.half_distance_relative < r.relative_distance);
    }
}
