// The Hadamard operator `(X+Z)/√2` has operator norm 1 but Pauli 1-norm √2.
// Its n-fold tensor power keeps norm 1 while the Pauli 1-norm grows as
// `2^{n/2}`, so the energy game's bias can shrink exponentially.

use pauli_gap::{models, spectra, Limits};

pub fn run_example() -> pauli_gap::Result<()> {
    let limits = Limits::default();
    println!("{:>2} {:>12} {:>14}", "n", "‖H‖", "‖H‖_P,1");
    for n in 1..=8 {
        let h = models::hadamard_power(n)?;
        let op = spectra::operator_norm(&h, &limits)?;
        println!("{n:>2} {op:>12.9} {:>14.9}", h.pauli_1_norm());
        assert!((op - 1.0).abs() < 1e-9);
    }
    Ok(())
}

fn main() -> pauli_gap::Result<()> {
    run_example()
}
