//! Multipliers of the optimality system for one state in each region, and
//! what happens when the weights are nudged off the optimum.
//!
//!     cargo run -p pauli-approx --example kkt_certificate

use pauli_approx::analytic::{canonicalize, solve, UvParams};
use pauli_approx::frontend::perturbations;
use pauli_approx::oracle::kkt_check;

fn main() -> pauli_approx::Result<()> {
    let states = [
        UvParams::new(0.3, 0.05, 0.1)?,
        UvParams::new(0.2, 0.28, 0.28)?,
        UvParams::new(0.1, 0.29, 0.01)?,
        UvParams::new(0.1, 0.01, 0.29)?,
        UvParams::new(0.5, 0.25, 0.433)?,
    ];
    for p in states {
        let r = p.bloch();
        let s = solve(&r)?;
        let (canon, map) = canonicalize(&r)?;
        let w = map.apply_to_weights(&s.weights);
        let report = kkt_check(&canon, &w, 1e-9);
        println!("{} at a = {}, u = {}, v = {}", s.region.unwrap(), p.a, p.u, p.v);
        println!("  lambda = {:+.6}, lambda_i = {:+.4?}", report.lambda, report.lambda_i);
        println!("  stationarity residual {:.1e}, pass = {}", report.stationarity_residual, report.pass);
        let rejected = perturbations(&w, 1e-9).iter().filter(|q| !kkt_check(&canon, q, 1e-9).pass).count();
        println!("  perturbed toward empty vertices: {rejected} rejected");
    }
    Ok(())
}
