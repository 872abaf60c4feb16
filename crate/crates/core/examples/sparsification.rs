// Importance-sampled term restriction: draw `m` terms with probability
// `|β_P|/Λ`, reweight by `Λ/m`, and compare the deviation against the
// operator Chernoff tail. The tail is stated at unit Pauli 1-norm, so the
// chain is rescaled to Λ = 1 first.

use pauli_gap::sparsify::{self, SparsifyParams};
use pauli_gap::{models, Limits};

pub fn run_example() -> pauli_gap::Result<()> {
    let limits = Limits::default();
    let chain = models::xxzz_chain(4)?;
    let h = chain.scale(1.0 / chain.pauli_1_norm());
    for m in [256, 1024, 4096] {
        let params = SparsifyParams {
            m,
            delta: 0.25,
            seed: 1,
            trials: 50,
        };
        let r = sparsify::empirical_deviation(&h, &params, &limits)?;
        println!(
            "m={m:>4}: mean ‖H - H''‖ = {:.4}, failure rate {:.2}, bound {:.3e}{}",
            r.mean_deviation,
            r.empirical_failure_rate,
            r.bound,
            if r.bound_vacuous { " (vacuous)" } else { "" }
        );
    }
    Ok(())
}

fn main() -> pauli_gap::Result<()> {
    run_example()
}
