//! Dense and matrix-free spectral tools.
//!
//! The dense path builds the full `2^n × 2^n` matrix and diagonalizes it; it
//! is the brute-force oracle every other numeric claim is checked against.
//! Above the dense limit, extremal eigenvalues come from restarted Lanczos
//! driven by [`apply`], which never materializes the matrix.
//!
//! A string with masks `(x, z)` and `y` Y-sites acts on a basis state as
//! `P|i> = i^y (-1)^{|z & i|} |i ⊕ x>`.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hamiltonian::{Hamiltonian, Limits};
use crate::pauli::{Phase, PauliString};

/// Largest register a state vector may describe.
pub const MAX_STATE_QUBITS: usize = 30;

const NORM_TOLERANCE: f64 = 1e-9;

fn dim(n: usize) -> Result<usize> {
    if n > MAX_STATE_QUBITS {
        return Err(Error::TooManyQubits { n });
    }
    Ok(1usize << n)
}

/// Normalized amplitudes over the `2^n` computational basis states.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amplitudes: Vec<Complex64>,
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

impl StateVector {
    /// Wraps `amplitudes`, which must already have unit norm.
    pub fn new(n: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        let expected = dim(n)?;
        if amplitudes.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                actual: amplitudes.len(),
            });
        }
        let nrm = norm(&amplitudes);
        if (nrm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::NotNormalized { norm: nrm });
        }
        Ok(StateVector { n, amplitudes })
    }

    /// Like [`StateVector::new`] but rescales when the norm is off by at most `tol`.
    pub fn normalized(n: usize, mut amplitudes: Vec<Complex64>, tol: f64) -> Result<Self> {
        let expected = dim(n)?;
        if amplitudes.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                actual: amplitudes.len(),
            });
        }
        let nrm = norm(&amplitudes);
        if (nrm - 1.0).abs() > tol || nrm == 0.0 {
            return Err(Error::NotNormalized { norm: nrm });
        }
        amplitudes.iter_mut().for_each(|a| *a /= nrm);
        Ok(StateVector { n, amplitudes })
    }

    pub fn basis(n: usize, index: usize) -> Result<Self> {
        let d = dim(n)?;
        if index >= d {
            return Err(Error::InvalidParam(format!("basis index {index} out of range")));
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); d];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(StateVector { n, amplitudes })
    }

    /// The uniform superposition `|+>^{⊗n}`.
    pub fn plus(n: usize) -> Result<Self> {
        let d = dim(n)?;
        let a = Complex64::new((d as f64).sqrt().recip(), 0.0);
        Ok(StateVector {
            n,
            amplitudes: vec![a; d],
        })
    }

    /// A Haar-random state (normalized complex Gaussian vector).
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        let d = dim(n)?;
        let mut amplitudes: Vec<Complex64> = (0..d)
            .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        let nrm = norm(&amplitudes);
        amplitudes.iter_mut().for_each(|a| *a /= nrm);
        Ok(StateVector { n, amplitudes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        norm(&self.amplitudes)
    }
}

/// A term compiled for basis-state application.
#[derive(Debug, Clone, Copy)]
struct CompiledTerm {
    x: usize,
    z: usize,
    coeff: Complex64,
}

fn compile(h: &Hamiltonian) -> Vec<CompiledTerm> {
    h.terms()
        .map(|(p, c)| compile_string(p, c))
        .collect()
}

fn compile_string(p: &PauliString, coeff: f64) -> CompiledTerm {
    let (x, z) = p.index_masks();
    let phase = Phase::new(p.y_count() as i64).to_complex();
    CompiledTerm {
        x: x as usize,
        z: z as usize,
        coeff: phase * coeff,
    }
}

#[inline]
fn sign(z: usize, i: usize) -> f64 {
    if (z & i).count_ones().is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn check_dims(h: &Hamiltonian, len: usize) -> Result<()> {
    let expected = dim(h.n())?;
    if len != expected {
        return Err(Error::DimensionMismatch {
            expected,
            actual: len,
        });
    }
    Ok(())
}

/// Dense matrix `Σ β_P P`.
pub fn to_dense(h: &Hamiltonian, limits: &Limits) -> Result<DMatrix<Complex64>> {
    if h.n() > limits.dense_limit {
        return Err(Error::DenseLimit {
            n: h.n(),
            limit: limits.dense_limit,
        });
    }
    let d = dim(h.n())?;
    let mut m = DMatrix::<Complex64>::zeros(d, d);
    for t in compile(h) {
        for i in 0..d {
            m[(i ^ t.x, i)] += t.coeff * sign(t.z, i);
        }
    }
    Ok(m)
}

fn is_real(h: &Hamiltonian) -> bool {
    h.terms().all(|(p, _)| p.y_count() % 2 == 0)
}

fn to_dense_real(h: &Hamiltonian) -> Result<DMatrix<f64>> {
    let d = dim(h.n())?;
    let mut m = DMatrix::<f64>::zeros(d, d);
    for t in compile(h) {
        for i in 0..d {
            m[(i ^ t.x, i)] += t.coeff.re * sign(t.z, i);
        }
    }
    Ok(m)
}

/// `H v` without building the matrix. Output rows are filled in parallel;
/// each row sums terms in canonical order, so the result is deterministic.
pub fn apply(h: &Hamiltonian, v: &[Complex64]) -> Result<Vec<Complex64>> {
    check_dims(h, v.len())?;
    let terms = compile(h);
    Ok(apply_compiled(&terms, v))
}

fn apply_compiled(terms: &[CompiledTerm], v: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); v.len()];
    out.par_chunks_mut(4096).enumerate().for_each(|(chunk, rows)| {
        let base = chunk * 4096;
        for (offset, slot) in rows.iter_mut().enumerate() {
            let j = base + offset;
            let mut acc = Complex64::new(0.0, 0.0);
            for t in terms {
                let i = j ^ t.x;
                acc += t.coeff * sign(t.z, i) * v[i];
            }
            *slot = acc;
        }
    });
    out
}

pub fn matvec(h: &Hamiltonian, psi: &StateVector) -> Result<Vec<Complex64>> {
    apply(h, &psi.amplitudes)
}

/// `<ψ|P|ψ>` for a single string; always in `[-1, 1]`.
pub fn pauli_expectation(p: &PauliString, psi: &StateVector) -> Result<f64> {
    if p.n() != psi.n {
        return Err(Error::QubitMismatch {
            left: p.n(),
            right: psi.n,
        });
    }
    let t = compile_string(p, 1.0);
    let amps = &psi.amplitudes;
    let value: Complex64 = (0..amps.len())
        .map(|i| amps[i ^ t.x].conj() * t.coeff * sign(t.z, i) * amps[i])
        .sum();
    if value.im.abs() > 1e-10 {
        return Err(Error::ImaginaryResidue { residue: value.im.abs() });
    }
    Ok(value.re)
}

/// `<ψ|H|ψ>` computed term by term as `Σ β_P <ψ|P|ψ>`.
pub fn expectation(h: &Hamiltonian, psi: &StateVector) -> Result<f64> {
    check_dims(h, psi.amplitudes.len())?;
    let mut total = 0.0;
    for (p, c) in h.terms() {
        total += c * pauli_expectation(p, psi)?;
    }
    Ok(total)
}

/// `<ψ|H|ψ>` as a quadratic form through [`apply`]; an independent route
/// to the same number.
pub fn quadratic_form(h: &Hamiltonian, psi: &StateVector) -> Result<f64> {
    let hv = matvec(h, psi)?;
    let value: Complex64 = psi
        .amplitudes
        .iter()
        .zip(&hv)
        .map(|(a, b)| a.conj() * b)
        .sum();
    if value.im.abs() > 1e-10 {
        return Err(Error::ImaginaryResidue { residue: value.im.abs() });
    }
    Ok(value.re)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Dense,
    Iterative,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigOptions {
    pub tol: f64,
    pub max_iters: usize,
}

impl Default for EigOptions {
    fn default() -> Self {
        EigOptions {
            tol: 1e-8,
            max_iters: 100_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralResult {
    pub lambda_max: f64,
    pub lambda_min: f64,
    /// Top eigenvector; dense path only.
    pub eigvec_max: Option<StateVector>,
    pub method: Method,
    pub iterations: usize,
    pub residual: f64,
}

impl SpectralResult {
    pub fn operator_norm(&self) -> f64 {
        self.lambda_max.abs().max(self.lambda_min.abs())
    }
}

/// All eigenvalues in ascending order.
pub fn dense_eigenvalues(h: &Hamiltonian, limits: &Limits) -> Result<Vec<f64>> {
    if h.n() > limits.dense_limit {
        return Err(Error::DenseLimit {
            n: h.n(),
            limit: limits.dense_limit,
        });
    }
    let mut eigs: Vec<f64> = if is_real(h) {
        to_dense_real(h)?.symmetric_eigenvalues().iter().copied().collect()
    } else {
        to_dense(h, limits)?.symmetric_eigenvalues().iter().copied().collect()
    };
    eigs.sort_by(f64::total_cmp);
    Ok(eigs)
}

fn dense_extremal(h: &Hamiltonian, limits: &Limits) -> Result<SpectralResult> {
    let n = h.n();
    let (values, vector): (Vec<f64>, Vec<Complex64>) = if is_real(h) {
        let eig = SymmetricEigen::new(to_dense_real(h)?);
        let top = argmax(eig.eigenvalues.as_slice());
        let v = eig.eigenvectors.column(top).iter().map(|&a| Complex64::new(a, 0.0)).collect();
        (eig.eigenvalues.iter().copied().collect(), v)
    } else {
        let eig = SymmetricEigen::new(to_dense(h, limits)?);
        let top = argmax(eig.eigenvalues.as_slice());
        let v = eig.eigenvectors.column(top).iter().copied().collect();
        (eig.eigenvalues.iter().copied().collect(), v)
    };
    let lambda_max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let lambda_min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let eigvec = StateVector::normalized(n, vector, 1e-6)?;
    let hv = matvec(h, &eigvec)?;
    let residual = residual(&hv, &eigvec.amplitudes, lambda_max);
    Ok(SpectralResult {
        lambda_max,
        lambda_min,
        eigvec_max: Some(eigvec),
        method: Method::Dense,
        iterations: 0,
        residual,
    })
}

fn argmax(values: &[f64]) -> usize {
    values
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .unwrap_or(0)
}

fn residual(hv: &[Complex64], v: &[Complex64], lambda: f64) -> f64 {
    hv.iter()
        .zip(v)
        .map(|(a, b)| (a - b * lambda).norm_sqr())
        .sum::<f64>()
        .sqrt()
}

/// Extremal eigenvalues of `H`: dense when `n` is within the dense limit,
/// otherwise restarted Lanczos.
pub fn extremal_eigs(h: &Hamiltonian, opts: &EigOptions, limits: &Limits) -> Result<SpectralResult> {
    if h.is_zero() {
        return Err(Error::ZeroHamiltonian);
    }
    if h.n() <= limits.dense_limit {
        dense_extremal(h, limits)
    } else {
        iterative_extremal(h, opts)
    }
}

/// Krylov basis size between restarts.
const LANCZOS_BASIS: usize = 24;

/// Matrix-free extremal eigenvalues by explicitly restarted Lanczos with full
/// reorthogonalization. `λ_min` is the top eigenvalue of `-H`.
/// `iterations` counts products with `H`; `max_iters` caps them per end of
/// the spectrum.
pub fn iterative_extremal(h: &Hamiltonian, opts: &EigOptions) -> Result<SpectralResult> {
    if h.is_zero() {
        return Err(Error::ZeroHamiltonian);
    }
    let d = dim(h.n())?;
    let terms = compile(h);
    let (top, it_max, res_max) = lanczos_top(&terms, d, 1.0, opts)?;
    let (neg_bottom, it_min, res_min) = lanczos_top(&terms, d, -1.0, opts)?;
    Ok(SpectralResult {
        lambda_max: top,
        lambda_min: -neg_bottom,
        eigvec_max: None,
        method: Method::Iterative,
        iterations: it_max + it_min,
        residual: res_max.max(res_min),
    })
}

fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Top eigenvalue of `sign·H`; returns `(θ, products, residual)`.
fn lanczos_top(terms: &[CompiledTerm], d: usize, sign: f64, opts: &EigOptions) -> Result<(f64, usize, f64)> {
    let op = |v: &[Complex64]| -> Vec<Complex64> {
        let mut w = apply_compiled(terms, v);
        if sign < 0.0 {
            w.iter_mut().for_each(|a| *a = -*a);
        }
        w
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    let mut start: Vec<Complex64> = (0..d)
        .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect();
    let nrm = norm(&start);
    start.iter_mut().for_each(|a| *a /= nrm);

    let basis_size = LANCZOS_BASIS.min(d);
    let mut products = 0;
    let mut theta = 0.0;
    let mut res = f64::INFINITY;
    while products < opts.max_iters {
        let mut basis: Vec<Vec<Complex64>> = vec![start.clone()];
        let mut alphas: Vec<f64> = Vec::with_capacity(basis_size);
        let mut betas: Vec<f64> = Vec::with_capacity(basis_size);
        for j in 0..basis_size {
            let mut w = op(&basis[j]);
            products += 1;
            let alpha = inner(&basis[j], &w).re;
            alphas.push(alpha);
            // Two passes of Gram-Schmidt against the whole basis.
            for _ in 0..2 {
                for b in &basis {
                    let c = inner(b, &w);
                    w.iter_mut().zip(b).for_each(|(x, y)| *x -= c * y);
                }
            }
            let beta = norm(&w);
            // Keep one product in reserve for the residual check.
            if j + 1 == basis_size || beta < 1e-12 || products + 1 >= opts.max_iters {
                break;
            }
            betas.push(beta);
            w.iter_mut().for_each(|a| *a /= beta);
            basis.push(w);
        }
        let k = alphas.len();
        let mut t = DMatrix::<f64>::zeros(k, k);
        for i in 0..k {
            t[(i, i)] = alphas[i];
            if i + 1 < k {
                t[(i, i + 1)] = betas[i];
                t[(i + 1, i)] = betas[i];
            }
        }
        let eig = SymmetricEigen::new(t);
        let top = argmax(eig.eigenvalues.as_slice());
        let mut ritz = vec![Complex64::new(0.0, 0.0); d];
        for (coef, b) in eig.eigenvectors.column(top).iter().zip(&basis) {
            ritz.iter_mut().zip(b).for_each(|(r, x)| *r += x * *coef);
        }
        let nrm = norm(&ritz);
        ritz.iter_mut().for_each(|a| *a /= nrm);
        let hr = op(&ritz);
        products += 1;
        theta = inner(&ritz, &hr).re;
        res = residual(&hr, &ritz, theta);
        if res <= opts.tol {
            return Ok((theta, products, res));
        }
        start = ritz;
    }
    Err(Error::NotConverged {
        iterations: products,
        residual: res,
        estimate: sign * theta,
    })
}

/// `max(|λ_max|, |λ_min|)`.
pub fn operator_norm(h: &Hamiltonian, limits: &Limits) -> Result<f64> {
    if h.is_zero() {
        return Ok(0.0);
    }
    Ok(extremal_eigs(h, &EigOptions::default(), limits)?.operator_norm())
}
