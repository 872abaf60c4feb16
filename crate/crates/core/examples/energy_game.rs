// The energy-measurement game against an honest prover holding the top
// eigenvector: exact acceptance probability and a seeded Monte Carlo run.

use pauli_gap::spectra::{self, EigOptions};
use pauli_gap::{game, models, Limits};

pub fn run_example() -> pauli_gap::Result<()> {
    let limits = Limits::default();
    let h = models::random_local(3, 2, 6, 42)?;
    let top = spectra::extremal_eigs(&h, &EigOptions::default(), &limits)?;
    let psi = top.eigvec_max.expect("dense path returns the eigenvector");
    let exact = game::accept_prob_exact(&h, &psi)?;
    println!("λ_max = {:.6}, Λ = {:.6}, Pr[accept] = {exact:.6}", top.lambda_max, h.pauli_1_norm());

    let t = game::simulate(&h, &psi, 100_000, 7)?;
    println!(
        "{} shots: frequency {:.5} ± {:.5}, z = {:.2}",
        t.shots,
        t.accept_frequency,
        t.std_error,
        t.z_score()
    );
    assert!(t.z_score() < 5.0);
    Ok(())
}

fn main() -> pauli_gap::Result<()> {
    run_example()
}
