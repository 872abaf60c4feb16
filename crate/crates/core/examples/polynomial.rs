// Polynomials of a Hamiltonian, expanded in the Pauli basis.

use pauli_gap::{spectra, Hamiltonian, Limits};

pub fn run_example() -> pauli_gap::Result<()> {
    let limits = Limits::default();
    let h = Hamiltonian::from_text([("XI", 0.5), ("ZZ", -0.3), ("IY", 0.2)])?;
    // f(t) = 1 - t + t^3
    let f = h.apply_polynomial(&[1.0, -1.0, 0.0, 1.0], &limits)?;
    println!("f(H) = {f}");

    let square = h.apply_polynomial(&[0.0, 0.0, 1.0], &limits)?;
    let eig = spectra::dense_eigenvalues(&h, &limits)?;
    let eig_sq = spectra::dense_eigenvalues(&square, &limits)?;
    let mut expected: Vec<f64> = eig.iter().map(|x| x * x).collect();
    expected.sort_by(f64::total_cmp);
    for (a, b) in expected.iter().zip(&eig_sq) {
        assert!((a - b).abs() < 1e-10);
    }
    println!("spectrum of H^2: {eig_sq:.6?}");
    Ok(())
}

fn main() -> pauli_gap::Result<()> {
    run_example()
}
