//! A small seeded verification run: closed form against the projection oracle,
//! trace-norm reconstruction, axis symmetries and the KKT certificate.
//!
//!     cargo run --release -p pauli-approx --example verify_run -- [samples] [seed]

use pauli_approx::frontend::{run_verify, VerifySpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let samples = args.next().map(|s| s.parse()).transpose()?.unwrap_or(10_000);
    let seed = args.next().map(|s| s.parse()).transpose()?.unwrap_or(0);
    let spec = VerifySpec { samples, seed, boundary_samples: 1_000, ..VerifySpec::default() };
    let report = run_verify(&spec)?;
    println!("{report}");
    Ok(())
}
