//! Real- and complex-weighted sums of Pauli strings.
//!
//! [`Hamiltonian`] is the canonical decomposition `H = Σ_P β_P P`: each
//! string appears once and near-zero coefficients are pruned. Because Pauli
//! strings are an orthogonal operator basis this decomposition is unique, so
//! [`Hamiltonian::pauli_1_norm`] (the sum of `|β_P|`) is already the minimum
//! over all ways of writing `H` as a weighted Pauli sum.
//!
//! [`PauliOperator`] carries complex coefficients and only shows up as an
//! intermediate when multiplying Hamiltonians together.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pauli::PauliString;

pub const DEFAULT_PRUNE_TOLERANCE: f64 = 1e-12;
pub const DEFAULT_TERM_CAP: usize = 1 << 22;
pub const DEFAULT_DENSE_LIMIT: usize = 12;

/// Size limits shared by the expensive operations.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Limits {
    /// Maximum number of terms a tensor or polynomial result may hold.
    pub term_cap: usize,
    /// Largest qubit count handled by dense matrices.
    pub dense_limit: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            term_cap: DEFAULT_TERM_CAP,
            dense_limit: DEFAULT_DENSE_LIMIT,
        }
    }
}

impl Limits {
    fn check_terms(&self, requested: u128) -> Result<()> {
        if requested > self.term_cap as u128 {
            return Err(Error::Capacity {
                requested,
                cap: self.term_cap,
            });
        }
        Ok(())
    }
}

/// Canonical real-weighted Pauli sum.
#[derive(Debug, Clone, PartialEq)]
pub struct Hamiltonian {
    n: usize,
    terms: BTreeMap<PauliString, f64>,
    prune_tolerance: f64,
}

impl Hamiltonian {
    /// The zero operator on `n` qubits.
    pub fn zero(n: usize) -> Self {
        Hamiltonian {
            n,
            terms: BTreeMap::new(),
            prune_tolerance: DEFAULT_PRUNE_TOLERANCE,
        }
    }

    pub fn identity(n: usize) -> Self {
        Hamiltonian::single(PauliString::identity(n), 1.0)
    }

    pub fn single(p: PauliString, coeff: f64) -> Self {
        let mut h = Hamiltonian::zero(p.n());
        h.accumulate(p, coeff);
        h.prune();
        h
    }

    /// Sums the given terms, merging duplicates. Every string must have `n` sites.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (PauliString, f64)>,
    {
        let mut h = Hamiltonian::zero(n);
        for (p, c) in terms {
            if p.n() != n {
                return Err(Error::QubitMismatch {
                    left: n,
                    right: p.n(),
                });
            }
            if !c.is_finite() {
                return Err(Error::InvalidParam(format!("non-finite coefficient for {p}")));
            }
            h.accumulate(p, c);
        }
        h.prune();
        Ok(h)
    }

    /// Parses `(text, coeff)` pairs; convenient for tests and examples.
    pub fn from_text<'a, I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, f64)>,
    {
        let parsed = terms
            .into_iter()
            .map(|(s, c)| Ok((s.parse::<PauliString>()?, c)))
            .collect::<Result<Vec<_>>>()?;
        let n = parsed
            .first()
            .map(|(p, _)| p.n())
            .ok_or_else(|| Error::InvalidParam("no terms given".into()))?;
        Hamiltonian::from_terms(n, parsed)
    }

    pub fn with_prune_tolerance(mut self, tol: f64) -> Self {
        self.prune_tolerance = tol;
        self.prune();
        self
    }

    pub fn prune_tolerance(&self) -> f64 {
        self.prune_tolerance
    }

    fn accumulate(&mut self, p: PauliString, c: f64) {
        *self.terms.entry(p).or_insert(0.0) += c;
    }

    fn prune(&mut self) {
        let tol = self.prune_tolerance;
        self.terms.retain(|_, c| c.abs() > tol);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of stored terms (the size of the support set `S`).
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PauliString, f64)> + '_ {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn coeff(&self, p: &PauliString) -> f64 {
        self.terms.get(p).copied().unwrap_or(0.0)
    }

    /// Largest term weight; zero for the zero operator and for pure identity.
    pub fn locality(&self) -> usize {
        self.terms.keys().map(PauliString::weight).max().unwrap_or(0)
    }

    /// `Σ_P |β_P|` over the canonical decomposition.
    pub fn pauli_1_norm(&self) -> f64 {
        self.terms.values().map(|c| c.abs()).sum()
    }

    pub fn scale(&self, theta: f64) -> Hamiltonian {
        let mut out = Hamiltonian {
            n: self.n,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), c * theta)).collect(),
            prune_tolerance: self.prune_tolerance,
        };
        out.prune();
        out
    }

    /// `Σ_i c_i H_i`. All inputs must act on the same number of qubits.
    pub fn linear_combine(pairs: &[(f64, &Hamiltonian)]) -> Result<Hamiltonian> {
        let first = pairs
            .first()
            .ok_or_else(|| Error::InvalidParam("linear_combine of nothing".into()))?;
        let mut out = Hamiltonian::zero(first.1.n);
        out.prune_tolerance = first.1.prune_tolerance;
        for (c, h) in pairs {
            if h.n != out.n {
                return Err(Error::QubitMismatch {
                    left: out.n,
                    right: h.n,
                });
            }
            for (p, b) in h.terms() {
                out.accumulate(p.clone(), c * b);
            }
        }
        out.prune();
        Ok(out)
    }

    pub fn add(&self, other: &Hamiltonian) -> Result<Hamiltonian> {
        Hamiltonian::linear_combine(&[(1.0, self), (1.0, other)])
    }

    pub fn sub(&self, other: &Hamiltonian) -> Result<Hamiltonian> {
        Hamiltonian::linear_combine(&[(1.0, self), (-1.0, other)])
    }

    /// `self ⊗ other`: every concatenated pair with the product coefficient.
    pub fn tensor(&self, other: &Hamiltonian, limits: &Limits) -> Result<Hamiltonian> {
        limits.check_terms(self.len() as u128 * other.len() as u128)?;
        let mut out = Hamiltonian::zero(self.n + other.n);
        out.prune_tolerance = self.prune_tolerance;
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                out.accumulate(a.concat(b), ca * cb);
            }
        }
        out.prune();
        Ok(out)
    }

    /// `self^{⊗k}` for `k >= 1`.
    pub fn tensor_power(&self, k: usize, limits: &Limits) -> Result<Hamiltonian> {
        if k == 0 {
            return Err(Error::InvalidParam("tensor power needs k >= 1".into()));
        }
        let projected = (self.len() as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
        limits.check_terms(projected)?;
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.tensor(self, limits)?;
        }
        Ok(acc)
    }

    pub fn to_operator(&self) -> PauliOperator {
        PauliOperator {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(p, &c)| (p.clone(), Complex64::new(c, 0.0)))
                .collect(),
            prune_tolerance: self.prune_tolerance,
        }
    }

    /// `H · H'` as a complex-weighted operator.
    pub fn mul(&self, other: &Hamiltonian, limits: &Limits) -> Result<PauliOperator> {
        self.to_operator().mul(&other.to_operator(), limits)
    }

    /// `f(H) = Σ_j c_j H^j` expanded in the Pauli basis (Horner form).
    ///
    /// Fails if the imaginary parts produced by anticommuting products do
    /// not cancel, which would mean the Pauli algebra is wrong.
    pub fn apply_polynomial(&self, coeffs: &[f64], limits: &Limits) -> Result<Hamiltonian> {
        let Some((&lead, rest)) = coeffs.split_last() else {
            return Err(Error::InvalidParam("empty polynomial".into()));
        };
        let h = self.to_operator();
        let mut acc = PauliOperator::identity(self.n).scale(Complex64::new(lead, 0.0));
        acc.prune_tolerance = self.prune_tolerance;
        for &c in rest.iter().rev() {
            acc = acc.mul(&h, limits)?;
            acc.add_identity(Complex64::new(c, 0.0));
        }
        // Scale the residue check by the size of the result.
        let scale = acc.one_norm().max(1.0);
        acc.into_hamiltonian(1e-9 * scale)
    }
}

impl std::fmt::Display for Hamiltonian {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·{p}")?;
        }
        Ok(())
    }
}

/// Complex-weighted Pauli sum.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliOperator {
    n: usize,
    terms: BTreeMap<PauliString, Complex64>,
    prune_tolerance: f64,
}

impl PauliOperator {
    pub fn zero(n: usize) -> Self {
        PauliOperator {
            n,
            terms: BTreeMap::new(),
            prune_tolerance: DEFAULT_PRUNE_TOLERANCE,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut op = PauliOperator::zero(n);
        op.terms.insert(PauliString::identity(n), Complex64::new(1.0, 0.0));
        op
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PauliString, Complex64)> + '_ {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn one_norm(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).sum()
    }

    /// Hermitian iff every coefficient is real.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.terms.values().all(|c| c.im.abs() <= tol)
    }

    pub fn scale(&self, c: Complex64) -> PauliOperator {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out.prune();
        out
    }

    fn add_identity(&mut self, c: Complex64) {
        *self
            .terms
            .entry(PauliString::identity(self.n))
            .or_insert(Complex64::new(0.0, 0.0)) += c;
        self.prune();
    }

    fn prune(&mut self) {
        let tol = self.prune_tolerance;
        self.terms.retain(|_, c| c.norm() > tol);
    }

    pub fn mul(&self, other: &PauliOperator, limits: &Limits) -> Result<PauliOperator> {
        if self.n != other.n {
            return Err(Error::QubitMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let pairs = self.len() as u128 * other.len() as u128;
        // Distinct strings on n qubits number 4^n.
        let basis = if self.n < 60 { 1u128 << (2 * self.n) } else { u128::MAX };
        limits.check_terms(pairs.min(basis))?;
        let mut out = PauliOperator::zero(self.n);
        out.prune_tolerance = self.prune_tolerance;
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let (phase, r) = a.mul(b)?;
                *out.terms.entry(r).or_insert(Complex64::new(0.0, 0.0)) += ca * cb * phase.to_complex();
            }
        }
        out.prune();
        Ok(out)
    }

    /// Drops imaginary parts, failing if any exceeds `tol`.
    pub fn into_hamiltonian(self, tol: f64) -> Result<Hamiltonian> {
        let residue = self.terms.values().map(|c| c.im.abs()).fold(0.0, f64::max);
        if residue > tol {
            return Err(Error::ImaginaryResidue { residue });
        }
        let mut h = Hamiltonian::zero(self.n);
        h.prune_tolerance = self.prune_tolerance;
        for (p, c) in self.terms {
            h.accumulate(p, c.re);
        }
        h.prune();
        Ok(h)
    }
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
    fn duplicates_merge_and_cancel() {
        let a = h(&[("X", 0.5), ("X", 0.5)]);
        assert_eq!(a.len(), 1);
        assert_eq!(a.coeff(&"X".parse().unwrap()), 1.0);
        let zero = h(&[("Z", 1.0), ("Z", -1.0)]);
        assert!(zero.is_zero());
    }

    #[test]
    fn mismatched_lengths_rejected() {
        assert!(matches!(
            Hamiltonian::from_text([("X", 1.0), ("XX", 1.0)]),
            Err(Error::QubitMismatch { .. })
        ));
        let a = h(&[("X", 1.0)]);
        let b = h(&[("XX", 1.0)]);
        assert!(Hamiltonian::linear_combine(&[(1.0, &a), (1.0, &b)]).is_err());
    }

    #[test]
    fn linear_combination_examples() {
        let z = h(&[("Z", 1.0)]);
        assert!(Hamiltonian::linear_combine(&[(1.0, &z), (-1.0, &z)]).unwrap().is_zero());

        let i = Hamiltonian::identity(1);
        let proj = Hamiltonian::linear_combine(&[(0.5, &i), (0.5, &z)]).unwrap();
        assert_eq!(proj, h(&[("I", 0.5), ("Z", 0.5)]));

        let x = h(&[("X", 1.0)]);
        let xz = h(&[("X", 1.0), ("Z", 1.0)]);
        let out = Hamiltonian::linear_combine(&[(2.0, &x), (3.0, &xz)]).unwrap();
        assert_eq!(out, h(&[("X", 5.0), ("Z", 3.0)]));
    }

    #[test]
    fn pruning_respects_tolerance() {
        let a = h(&[("X", 1.0), ("Z", 1e-13)]);
        assert_eq!(a.len(), 1);
        let b = h(&[("X", 1.0), ("Z", 1e-6)]).with_prune_tolerance(1e-5);
        assert_eq!(b.len(), 1);
    }

    #[test]
    fn tensor_examples() {
        let zi = h(&[("Z", 1.0)]).tensor(&Hamiltonian::identity(1), &limits()).unwrap();
        assert_eq!(zi, h(&[("ZI", 1.0)]));

        let xz = h(&[("X", 1.0), ("Z", 1.0)]);
        let sq = xz.tensor(&xz, &limits()).unwrap();
        assert_eq!(sq, h(&[("XX", 1.0), ("XZ", 1.0), ("ZX", 1.0), ("ZZ", 1.0)]));
    }

    #[test]
    fn hadamard_tensor_square_has_norm_two() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let had = h(&[("X", s), ("Z", s)]);
        let sq = had.tensor(&had, &limits()).unwrap();
        assert_relative_eq!(sq.pauli_1_norm(), 2.0, epsilon = 1e-12);
    }

    #[test]
    fn tensor_respects_cap() {
        let xz = h(&[("X", 1.0), ("Z", 1.0), ("Y", 1.0)]);
        let tight = Limits {
            term_cap: 8,
            ..Limits::default()
        };
        assert!(xz.tensor(&xz, &tight).is_err());
        assert!(matches!(
            xz.tensor_power(3, &tight),
            Err(Error::Capacity { requested: 27, cap: 8 })
        ));
    }

    #[test]
    fn pauli_norm_examples() {
        assert_eq!(h(&[("Z", 1.0)]).pauli_1_norm(), 1.0);
        assert_eq!(Hamiltonian::zero(3).pauli_1_norm(), 0.0);
        assert_eq!(h(&[("XI", -2.0), ("IY", 0.5)]).pauli_1_norm(), 2.5);
    }

    #[test]
    fn polynomial_examples() {
        let x = h(&[("X", 1.0)]);
        assert_eq!(x.apply_polynomial(&[0.0, 0.0, 1.0], &limits()).unwrap(), Hamiltonian::identity(1));

        let any = h(&[("XY", 0.3), ("ZI", -1.2), ("YY", 0.7)]);
        assert_eq!(any.apply_polynomial(&[0.0, 1.0], &limits()).unwrap(), any);

        let s = std::f64::consts::FRAC_1_SQRT_2;
        let had = h(&[("X", s), ("Z", s)]);
        let sq = had.apply_polynomial(&[0.0, 0.0, 1.0], &limits()).unwrap();
        assert_eq!(sq.len(), 1);
        assert_relative_eq!(sq.coeff(&"I".parse().unwrap()), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn polynomial_constant_and_empty() {
        let x = h(&[("X", 1.0)]);
        assert_eq!(x.apply_polynomial(&[2.5], &limits()).unwrap(), Hamiltonian::identity(1).scale(2.5));
        assert!(x.apply_polynomial(&[], &limits()).is_err());
    }

    #[test]
    fn anticommuting_product_is_not_hermitian() {
        let x = h(&[("X", 1.0)]);
        let z = h(&[("Z", 1.0)]);
        let xz = x.mul(&z, &limits()).unwrap();
        assert!(!xz.is_hermitian(1e-12));
        assert!(matches!(xz.into_hamiltonian(1e-9), Err(Error::ImaginaryResidue { .. })));
    }

    #[test]
    fn locality_counts_max_weight() {
        assert_eq!(h(&[("XIZ", 1.0), ("IYI", 1.0)]).locality(), 2);
        assert_eq!(Hamiltonian::identity(4).locality(), 0);
    }
}
