// Pauli strings: parsing, phase-tracked products, commutation, and
// canonical Hamiltonians with tensor products.

use pauli_gap::{Hamiltonian, Limits, PauliString};

pub fn run_example() -> pauli_gap::Result<()> {
    let x: PauliString = "XIZ".parse()?;
    let y: PauliString = "YZZ".parse()?;
    let (phase, product) = x.mul(&y)?;
    println!("{x} * {y} = {phase} {product}");
    println!("commute: {}", x.commutes(&y)?);
    assert_eq!(product.to_string(), "ZZI");

    let h = Hamiltonian::from_text([("XX", 1.0), ("ZZ", 1.0), ("XX", 0.5)])?;
    println!("H = {h}");
    println!("Pauli 1-norm {}, locality {}", h.pauli_1_norm(), h.locality());

    let t = h.tensor(&Hamiltonian::from_text([("Y", -2.0)])?, &Limits::default())?;
    println!("H ⊗ (-2Y) has {} terms, Pauli 1-norm {}", t.len(), t.pauli_1_norm());
    Ok(())
}

fn main() -> pauli_gap::Result<()> {
    run_example()
}
