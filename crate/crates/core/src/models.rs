//! Ready-made Hamiltonian families.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hamiltonian::Hamiltonian;
use crate::pauli::{PauliString, Site};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Model {
    /// `((X + Z)/√2)^{⊗n}`: operator norm 1, Pauli 1-norm `2^{n/2}`.
    HadamardPower { n: usize },
    /// `Σ_i X_i X_{i+1} + Z_i Z_{i+1}` on an open chain.
    XxzzChain { n: usize },
    /// `terms` random strings, each acting nontrivially on exactly
    /// `locality` sites, with coefficients uniform in `[-1, 1]`.
    RandomLocal {
        n: usize,
        locality: usize,
        terms: usize,
        seed: u64,
    },
}

pub fn build_model(model: &Model) -> Result<Hamiltonian> {
    match *model {
        Model::HadamardPower { n } => hadamard_power(n),
        Model::XxzzChain { n } => xxzz_chain(n),
        Model::RandomLocal {
            n,
            locality,
            terms,
            seed,
        } => random_local(n, locality, terms, seed),
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParam("model needs n >= 1".into()));
    }
    Ok(())
}

pub fn hadamard_power(n: usize) -> Result<Hamiltonian> {
    check_n(n)?;
    if n > 22 {
        return Err(Error::Capacity {
            requested: 1u128 << n,
            cap: 1 << 22,
        });
    }
    let c = 2f64.powf(-(n as f64) / 2.0);
    let terms = (0u64..1 << n).map(|bits| {
        let sites = (0..n).map(|j| if (bits >> (n - 1 - j)) & 1 == 1 { Site::Z } else { Site::X });
        (PauliString::from_sites(sites), c)
    });
    Hamiltonian::from_terms(n, terms)
}

pub fn xxzz_chain(n: usize) -> Result<Hamiltonian> {
    check_n(n)?;
    let mut terms = Vec::with_capacity(2 * n.saturating_sub(1));
    for i in 0..n.saturating_sub(1) {
        for s in [Site::X, Site::Z] {
            terms.push((PauliString::with_ops(n, &[(i, s), (i + 1, s)]), 1.0));
        }
    }
    Hamiltonian::from_terms(n, terms)
}

pub fn random_local(n: usize, locality: usize, terms: usize, seed: u64) -> Result<Hamiltonian> {
    check_n(n)?;
    if locality == 0 || locality > n {
        return Err(Error::InvalidParam(format!(
            "locality {locality} must be in 1..={n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(terms);
    for _ in 0..terms {
        let support = sample(&mut rng, n, locality);
        let ops: Vec<(usize, Site)> = support
            .iter()
            .map(|j| (j, [Site::X, Site::Y, Site::Z][rng.gen_range(0..3)]))
            .collect();
        let coeff = rng.gen_range(-1.0..=1.0);
        out.push((PauliString::with_ops(n, &ops), coeff));
    }
    Hamiltonian::from_terms(n, out)
}
