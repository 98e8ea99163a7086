//! Three independent numerical routes to the same distance: exact ℓ1-ball
//! projection, away-step Frank-Wolfe, and lattice search.
//!
//!     cargo run --release -p pauli-approx --example oracle_crosscheck

use pauli_approx::oracle::{
    frank_wolfe_solve, grid_search, project_cross_polytope, weights_from_polytope_point, SolverConfig,
};
use pauli_approx::{solve, BlochVector, StateSet};

fn main() -> pauli_approx::Result<()> {
    let b3 = StateSet::b3();
    let cfg = SolverConfig::default();
    let points = [
        BlochVector::new(0.5, 0.75f64.sqrt(), 0.0),
        BlochVector::new(0.565685, 0.565685, 0.6),
        BlochVector::new(-0.3, 0.1, -0.9),
        BlochVector::new(0.2, -0.1, 0.3),
    ];
    for r in points {
        let analytic = solve(&r)?;
        let (nearest, projected) = project_cross_polytope(&r);
        let fw = frank_wolfe_solve(&b3, &r, &cfg)?;
        let grid = grid_search(&b3, &r, &cfg)?;
        println!("r = ({:+.3}, {:+.3}, {:+.3})", r.x, r.y, r.z);
        println!("  closed form  {:.9} [{}]", analytic.distance, analytic.region.unwrap());
        println!("  projection   {projected:.9} at ({:.4}, {:.4}, {:.4})", nearest.x, nearest.y, nearest.z);
        println!("  frank-wolfe  {:.9} (gap {:.1e}, {} iterations)", fw.solution.distance, fw.gap, fw.iterations);
        println!("  lattice 1/{} {:.9}", cfg.grid_resolution, grid.distance);
        let w = weights_from_polytope_point(&nearest)?;
        println!("  weights of the projected point: {:?}", w.as_slice());
    }
    Ok(())
}
