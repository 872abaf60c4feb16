//! Pauli-basis Hamiltonian tools for energy-measurement games.
//!
//! A Hamiltonian written as `H = Σ_P β_P P` over Pauli strings can be tested
//! by a verifier that samples one term with probability `|β_P| / Λ` and
//! checks the sign of a single measurement. The bias of that test is
//! `<H>/(2Λ)` with `Λ = ‖H‖_P,1 = Σ|β_P|`, so the Pauli 1-norm (not the
//! operator norm) sets the scale of any energy gap the game can see.
//!
//! Modules:
//!
//! - [`pauli`], [`hamiltonian`], [`models`]: string algebra with phase
//!   tracking, canonical weighted sums, tensor products, polynomials, and a
//!   few model families.
//! - [`spectra`]: dense brute-force oracle, matrix-free products, extremal
//!   eigenvalues, expectation values.
//! - [`amplify`]: the tensor-power transform `2((I+H)/2)^{⊗k} - I`, its
//!   eigenvalue map and bounds, and a numeric verifier.
//! - [`game`]: exact acceptance probability and seeded Monte Carlo runs.
//! - [`sparsify`]: importance-sampled term restriction and its Chernoff tail.
//! - [`io`], [`cli`]: JSON formats and the `pauli-gap` command line.
//!
//! ```
//! use pauli_gap::{models, spectra, Limits};
//!
//! let h = models::hadamard_power(3).unwrap();
//! let norm = spectra::operator_norm(&h, &Limits::default()).unwrap();
//! assert!((norm - 1.0).abs() < 1e-12);
//! assert!((h.pauli_1_norm() - 8f64.sqrt()).abs() < 1e-12);
//! ```

pub mod amplify;
pub mod cli;
pub mod error;
pub mod game;
pub mod hamiltonian;
pub mod io;
pub mod models;
pub mod pauli;
pub mod sparsify;
pub mod spectra;

pub use error::{Error, Result};
pub use hamiltonian::{Hamiltonian, Limits, PauliOperator};
pub use pauli::{format_pauli, parse_pauli, PauliString, Phase, Site};
pub use spectra::StateVector;
