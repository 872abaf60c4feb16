//! Test-only brute-force oracle: matrices built by explicit Kronecker
//! products of 2×2 Pauli matrices, sharing no code with the library's
//! bit-mask construction.

#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;
use pauli_gap::{Hamiltonian, PauliString, Site, StateVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type CMatrix = DMatrix<Complex64>;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn site_matrix(s: Site) -> CMatrix {
    let z = c(0.0, 0.0);
    let one = c(1.0, 0.0);
    match s {
        Site::I => CMatrix::from_row_slice(2, 2, &[one, z, z, one]),
        Site::X => CMatrix::from_row_slice(2, 2, &[z, one, one, z]),
        Site::Y => CMatrix::from_row_slice(2, 2, &[z, c(0.0, -1.0), c(0.0, 1.0), z]),
        Site::Z => CMatrix::from_row_slice(2, 2, &[one, z, z, -one]),
    }
}

pub fn pauli_matrix(p: &PauliString) -> CMatrix {
    let mut m = CMatrix::from_element(1, 1, c(1.0, 0.0));
    for s in p.sites() {
        m = m.kronecker(&site_matrix(s));
    }
    m
}

pub fn kron_dense(h: &Hamiltonian) -> CMatrix {
    let d = 1usize << h.n();
    let mut m = CMatrix::zeros(d, d);
    for (p, coeff) in h.terms() {
        m += pauli_matrix(p) * c(coeff, 0.0);
    }
    m
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn eigenvalues(m: &CMatrix) -> Vec<f64> {
    let mut v: Vec<f64> = m.clone().symmetric_eigenvalues().iter().copied().collect();
    v.sort_by(f64::total_cmp);
    v
}

pub fn lambda_max(h: &Hamiltonian) -> f64 {
    *eigenvalues(&kron_dense(h)).last().unwrap()
}

pub fn operator_norm(h: &Hamiltonian) -> f64 {
    if h.is_zero() {
        return 0.0;
    }
    let e = eigenvalues(&kron_dense(h));
    e[0].abs().max(e[e.len() - 1].abs())
}

pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `<ψ|M|ψ>` by explicit matrix-vector product.
pub fn quadratic(m: &CMatrix, psi: &StateVector) -> Complex64 {
    let v = nalgebra::DVector::from_column_slice(psi.amplitudes());
    (v.adjoint() * m * &v)[(0, 0)]
}

/// Random Hamiltonian with `terms` uniformly random strings (any weight,
/// identity allowed) and coefficients uniform in [-1, 1].
pub fn random_hamiltonian(n: usize, terms: usize, rng: &mut ChaCha8Rng) -> Hamiltonian {
    let sites = [Site::I, Site::X, Site::Y, Site::Z];
    let raw = (0..terms).map(|_| {
        let p = PauliString::from_sites((0..n).map(|_| sites[rng.gen_range(0..4)]));
        (p, rng.gen_range(-1.0..=1.0))
    });
    Hamiltonian::from_terms(n, raw).unwrap()
}

/// A nonzero random Hamiltonian scaled so its operator norm is exactly 1.
pub fn random_unit_hamiltonian(n: usize, terms: usize, rng: &mut ChaCha8Rng) -> Hamiltonian {
    loop {
        let h = random_hamiltonian(n, terms, rng);
        let norm = operator_norm(&h);
        if norm > 1e-6 {
            return h.scale(1.0 / norm);
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
