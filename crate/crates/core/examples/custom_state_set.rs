//! The numerical solvers accept any finite set of pure states. Here: the four
//! tetrahedral states, and the two z-basis states only.
//!
//!     cargo run -p pauli-approx --example custom_state_set

use pauli_approx::oracle::{frank_wolfe_solve, grid_search, SolverConfig};
use pauli_approx::{solve, BlochVector, StateSet};

fn main() -> pauli_approx::Result<()> {
    let s = 1.0 / 3f64.sqrt();
    let tetrahedron = StateSet::new(
        vec![
            BlochVector::new(s, s, s),
            BlochVector::new(s, -s, -s),
            BlochVector::new(-s, s, -s),
            BlochVector::new(-s, -s, s),
        ],
        (0..4).map(|i| format!("t{i}")).collect(),
    )?;
    let z_basis = StateSet::b3().subset(&[0, 1])?;
    let cfg = SolverConfig::default();

    for r in [BlochVector::new(0.0, 0.0, 1.0), BlochVector::new(0.6, 0.0, 0.8), BlochVector::new(0.1, 0.2, -0.3)] {
        let pauli = solve(&r)?.distance;
        let tetra = frank_wolfe_solve(&tetrahedron, &r, &cfg)?;
        let tetra_grid = grid_search(&tetrahedron, &r, &cfg)?;
        let z = frank_wolfe_solve(&z_basis, &r, &cfg)?;
        println!(
            "r = ({:.1}, {:.1}, {:.1}): pauli {pauli:.6}, tetrahedron {:.6} (lattice {:.6}), z basis {:.6}",
            r.x, r.y, r.z, tetra.solution.distance, tetra_grid.distance, z.solution.distance
        );
    }
    Ok(())
}
