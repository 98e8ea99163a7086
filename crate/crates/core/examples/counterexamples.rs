//! The older single-formula solution against the corrected one at the two
//! worked examples, plus a scan for where the older weights go negative.
//!
//!     cargo run -p pauli-approx --example counterexamples

use std::f64::consts::FRAC_PI_3;

use pauli_approx::analytic::{sacchi_reference, sacchi_threshold};
use pauli_approx::frontend::run_counterexamples;
use pauli_approx::{solve_akphi, AkPhiParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", run_counterexamples()?);

    println!("\nphi = pi/3, a = 0.5: reference window opens at k_th = {:.6}", sacchi_threshold(0.5, FRAC_PI_3)?);
    for k in [0.75, 0.8, 0.85, 0.9, 0.95, 1.0] {
        let params = AkPhiParams::new(0.5, k, FRAC_PI_3)?;
        let reference = sacchi_reference(&params)?;
        let corrected = solve_akphi(&params)?;
        println!(
            "k = {k:.2}: reference D = {:.6} (min weight {:+.4}, {}), corrected D = {:.6} [{}]",
            reference.distance,
            reference.weights.min(),
            if reference.valid { "valid" } else { "invalid" },
            corrected.distance,
            corrected.region.unwrap(),
        );
    }
    Ok(())
}
