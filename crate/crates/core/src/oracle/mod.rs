//! Independent numerical checks for the closed-form solver.

mod frank_wolfe;
mod grid;
mod kkt;
mod projection;

pub use frank_wolfe::{frank_wolfe_solve, FrankWolfeResult};
pub use grid::{grid_search, MAX_GRID_STATES};
pub use kkt::{kkt_check, stationarity_rows, KktReport};
pub use projection::{project_cross_polytope, weights_from_polytope_point};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Stopping threshold on the Frank-Wolfe gap.
    pub tol: f64,
    pub max_iter: usize,
    /// Lattice denominator for [`grid_search`].
    pub grid_resolution: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self { tol: 1e-10, max_iter: 100_000, grid_resolution: 60 }
    }
}
