// Tensor-power gap amplification `H' = 2((I+H)/2)^{⊗k} - I` on a NO
// instance with `λ_max = 1 - 1/q`, checked against every bound.

use pauli_gap::amplify::{self, AmplifyParams};
use pauli_gap::{Hamiltonian, Limits};

pub fn run_example() -> pauli_gap::Result<()> {
    let limits = Limits::default();
    let h = Hamiltonian::from_text([("XX", 0.4), ("ZZ", 0.4)])?;
    let params = AmplifyParams::new(4, f64::INFINITY, 5.0)?;
    let report = amplify::verify_amplification(&h, &params, &limits)?;
    println!(
        "λ_in = {:.6} -> λ_out = {:.6} (predicted {:.6})",
        report.lambda_in, report.lambda_out_exact, report.lambda_out_predicted
    );
    println!(
        "NO upper bound {:.6}, Pauli norm {:.6} <= {:.6}",
        report.bounds.no_upper_bound, report.pauli1_out, report.pauli1_bound
    );
    println!("all bounds hold: {}", report.all_bounds_hold);
    assert!(report.all_bounds_hold);

    for q in [5, 10, 25, 50] {
        let r = amplify::doubled_power_regime(q)?;
        println!(
            "q={q:>2} k={:>3}: λ' = {:.6}, limit {:.6}, relative distance {:.2}%",
            r.k,
            r.lambda_out,
            r.lambda_limit,
            100.0 * r.relative_distance
        );
    }
    Ok(())
}

fn main() -> pauli_gap::Result<()> {
    run_example()
}
