//! States with a ≥ u + v are exact mixtures of the Pauli eigenstates, and the
//! decomposition is not unique. Walk the two-parameter family.
//!
//!     cargo run -p pauli-approx --example exact_family

use pauli_approx::analytic::{classify, solve_exact_family, ExactFamilyParams, UvParams};
use pauli_approx::qubit::mixture;
use pauli_approx::StateSet;

fn main() -> pauli_approx::Result<()> {
    let p = UvParams::new(0.3, 0.05, 0.1)?;
    println!("state a = {}, u = {}, v = {} -> {}", p.a, p.u, p.v, classify(&p));
    let budget = p.a - p.u - p.v;
    let b3 = StateSet::b3();
    for (t1, t2) in [(0.0, 0.0), (budget, 0.0), (0.0, budget), (0.05, 0.07)] {
        let w = solve_exact_family(&p, &ExactFamilyParams { t1, t2 })?;
        let residual = p.bloch().distance(&mixture(&b3, &w)?);
        let shown: Vec<String> = w.as_slice().iter().map(|x| format!("{x:.3}")).collect();
        println!("t1 = {t1:.2}, t2 = {t2:.2}: p = ({})  residual {residual:.1e}", shown.join(", "));
    }
    // out of budget
    let err = solve_exact_family(&p, &ExactFamilyParams { t1: budget, t2: 0.01 }).unwrap_err();
    println!("t1 + t2 > a - u - v: {err}");
    Ok(())
}
