//! JSON file formats.
//!
//! Hamiltonian:
//!
//! ```json
//! {"n": 2, "terms": [{"pauli": "XX", "coeff": 1.0}, {"pauli": "ZZ", "coeff": 1.0}]}
//! ```
//!
//! Unknown top-level keys are ignored, so reports may carry provenance next
//! to the terms. Repeated `pauli` keys are summed.
//!
//! State vector:
//!
//! ```json
//! {"n": 1, "amplitudes": [[0.7071067811865476, 0.0], [0.0, 0.7071067811865476]]}
//! ```
//!
//! Loading rescales a state whose norm is within `1e-6` of one.

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hamiltonian::Hamiltonian;
use crate::pauli::{format_pauli, parse_pauli};
use crate::spectra::StateVector;

pub const STATE_NORM_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermEntry {
    pub pauli: String,
    pub coeff: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HamiltonianFile {
    pub n: usize,
    pub terms: Vec<TermEntry>,
}

impl HamiltonianFile {
    pub fn from_hamiltonian(h: &Hamiltonian) -> Self {
        HamiltonianFile {
            n: h.n(),
            terms: h
                .terms()
                .map(|(p, c)| TermEntry {
                    pauli: format_pauli(p),
                    coeff: c,
                })
                .collect(),
        }
    }

    pub fn into_hamiltonian(self) -> Result<Hamiltonian> {
        if self.n == 0 {
            return Err(Error::Schema("field `n`: must be >= 1".into()));
        }
        let mut parsed = Vec::with_capacity(self.terms.len());
        for (i, t) in self.terms.into_iter().enumerate() {
            let p = parse_pauli(&t.pauli).map_err(|e| Error::Schema(format!("terms[{i}].pauli: {e}")))?;
            if p.n() != self.n {
                return Err(Error::Schema(format!(
                    "terms[{i}].pauli: {:?} has {} sites, expected n = {}",
                    t.pauli,
                    p.n(),
                    self.n
                )));
            }
            if !t.coeff.is_finite() {
                return Err(Error::Schema(format!("terms[{i}].coeff: non-finite value {}", t.coeff)));
            }
            parsed.push((p, t.coeff));
        }
        Hamiltonian::from_terms(self.n, parsed)
    }
}

pub fn parse_hamiltonian(text: &str) -> Result<Hamiltonian> {
    let file: HamiltonianFile =
        serde_json::from_str(text).map_err(|e| Error::Schema(format!("Hamiltonian JSON: {e}")))?;
    file.into_hamiltonian()
}

pub fn load_hamiltonian(path: impl AsRef<Path>) -> Result<Hamiltonian> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    parse_hamiltonian(&text).map_err(|e| match e {
        Error::Schema(msg) => Error::Schema(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn hamiltonian_to_json(h: &Hamiltonian) -> Result<String> {
    Ok(serde_json::to_string_pretty(&HamiltonianFile::from_hamiltonian(h))?)
}

pub fn save_hamiltonian(h: &Hamiltonian, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, hamiltonian_to_json(h)? + "\n")?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateFile {
    pub n: usize,
    pub amplitudes: Vec<[f64; 2]>,
}

impl StateFile {
    pub fn from_state(psi: &StateVector) -> Self {
        StateFile {
            n: psi.n(),
            amplitudes: psi.amplitudes().iter().map(|a| [a.re, a.im]).collect(),
        }
    }

    pub fn into_state(self) -> Result<StateVector> {
        if self.amplitudes.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::Schema("field `amplitudes`: non-finite value".into()));
        }
        let amps = self
            .amplitudes
            .into_iter()
            .map(|[re, im]| Complex64::new(re, im))
            .collect();
        StateVector::normalized(self.n, amps, STATE_NORM_TOLERANCE)
    }
}

pub fn parse_state(text: &str) -> Result<StateVector> {
    let file: StateFile = serde_json::from_str(text).map_err(|e| Error::Schema(format!("state JSON: {e}")))?;
    file.into_state()
}

pub fn load_state(path: impl AsRef<Path>) -> Result<StateVector> {
    parse_state(&std::fs::read_to_string(path)?)
}

pub fn save_state(psi: &StateVector, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, serde_json::to_string_pretty(&StateFile::from_state(psi))? + "\n")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn load_single_term() {
        let h = parse_hamiltonian(r#"{"n":1,"terms":[{"pauli":"Z","coeff":1.0}]}"#).unwrap();
        assert_eq!(h, Hamiltonian::from_text([("Z", 1.0)]).unwrap());
    }

    #[test]
    fn duplicates_merge() {
        let h = parse_hamiltonian(
            r#"{"n":1,"terms":[{"pauli":"X","coeff":0.5},{"pauli":"X","coeff":0.5}]}"#,
        )
        .unwrap();
        assert_eq!(h.len(), 1);
        assert_eq!(h.coeff(&"X".parse().unwrap()), 1.0);
    }

    #[test]
    fn bad_character_names_position() {
        let err = parse_hamiltonian(r#"{"n":2,"terms":[{"pauli":"XQ","coeff":1.0}]}"#).unwrap_err();
        let msg = err.to_string();
        assert!(matches!(err, Error::Schema(_)));
        assert!(msg.contains("terms[0].pauli") && msg.contains("position 2"), "{msg}");
    }

    #[test]
    fn schema_errors() {
        let wrong_len = parse_hamiltonian(r#"{"n":3,"terms":[{"pauli":"XX","coeff":1.0}]}"#).unwrap_err();
        assert!(wrong_len.to_string().contains("expected n = 3"));
        let missing = parse_hamiltonian("{\"n\":1,\n\"terms\":[{\"pauli\":\"X\"}]}").unwrap_err();
        let msg = missing.to_string();
        assert!(msg.contains("coeff") && msg.contains("line 2"), "{msg}");
        let overflow = parse_hamiltonian(r#"{"n":1,"terms":[{"pauli":"X","coeff":1e999}]}"#);
        assert!(overflow.is_err());
        assert!(parse_hamiltonian(r#"{"n":0,"terms":[]}"#).is_err());
    }

    #[test]
    fn extra_keys_ignored_and_round_trip() {
        let text = r#"{"n":2,"terms":[{"pauli":"XY","coeff":-0.25},{"pauli":"ZI","coeff":3}],"config":{"k":2}}"#;
        let h = parse_hamiltonian(text).unwrap();
        assert_eq!(parse_hamiltonian(&hamiltonian_to_json(&h).unwrap()).unwrap(), h);
    }

    #[test]
    fn state_loading() {
        let s = parse_state(r#"{"n":1,"amplitudes":[[1.0000005,0.0],[0.0,0.0]]}"#).unwrap();
        assert!((s.norm() - 1.0).abs() < 1e-15);
        assert!(matches!(
            parse_state(r#"{"n":1,"amplitudes":[[1.1,0.0],[0.0,0.0]]}"#),
            Err(Error::NotNormalized { .. })
        ));
        assert!(matches!(
            parse_state(r#"{"n":2,"amplitudes":[[1.0,0.0],[0.0,0.0]]}"#),
            Err(Error::DimensionMismatch { expected: 4, actual: 2 })
        ));
        let back = parse_state(&serde_json::to_string(&StateFile::from_state(&s)).unwrap()).unwrap();
        assert_eq!(back, s);
    }
}
