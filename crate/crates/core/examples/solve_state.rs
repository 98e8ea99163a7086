//! Solve a handful of states, one per region, and show how the weights
//! reproduce the optimal distance.
//!
//!     cargo run -p pauli-approx --example solve_state

use std::f64::consts::{FRAC_PI_3, FRAC_PI_4};

use pauli_approx::qubit::{bloch_from_akphi, mixture};
use pauli_approx::{solve_akphi, AkPhiParams, StateSet};

fn main() -> pauli_approx::Result<()> {
    let b3 = StateSet::b3();
    let cases = [
        (0.3, 0.0, 0.0),
        (0.2, 1.0, FRAC_PI_4),
        (0.1, 1.0, 0.05),
        (0.1, 1.0, 1.52),
        (0.5, 1.0, FRAC_PI_3),
        (0.8, 0.9, 4.0),
    ];
    println!("{:>5} {:>5} {:>6} | {:>8} {:>9} | weights (|0>,|1>,|+>,|->,|+i>,|-i>)", "a", "k", "phi", "region", "D");
    for (a, k, phi) in cases {
        let params = AkPhiParams::new(a, k, phi)?;
        let s = solve_akphi(&params)?;
        let w: Vec<String> = s.weights.as_slice().iter().map(|p| format!("{p:.4}")).collect();
        println!(
            "{a:>5} {k:>5} {phi:>6.3} | {:>8} {:>9.6} | {}",
            s.region.map_or("-", |g| g.as_str()),
            s.distance,
            w.join(" ")
        );
        let gap = bloch_from_akphi(&params).distance(&mixture(&b3, &s.weights)?);
        assert!((gap - s.distance).abs() < 1e-12);
    }
    Ok(())
}
