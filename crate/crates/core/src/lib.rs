//! Optimal convex approximation of a qubit state by mixtures of the six
//! eigenstates of the Pauli matrices.
//!
//! Given a state ρ, find probability weights `p_0..p_5` minimizing the trace
//! distance `‖ρ − Σ p_i ρ_i‖₁`. In Bloch coordinates the reachable mixtures
//! form the octahedron `|x| + |y| + |z| ≤ 1`, and the optimum is the Euclidean
//! distance from the Bloch vector to it.
//!
//! - [`qubit`]: density matrices, Bloch vectors, trace norm, mixtures.
//! - [`analytic`]: the closed-form solution with region classification, the
//!   exact-decomposition family and the older reference formula.
//! - [`oracle`]: independent checks (ℓ1-ball projection, away-step
//!   Frank-Wolfe, lattice search, KKT certificate).
//! - [`frontend`]: CSV sweeps and verification reports used by the binary.
//!
//! ```
//! use pauli_approx::{analytic, qubit::AkPhiParams};
//!
//! let params = AkPhiParams::new(0.5, 1.0, std::f64::consts::FRAC_PI_3).unwrap();
//! let solution = analytic::solve_akphi(&params).unwrap();
//! assert_eq!(solution.region, Some(analytic::Region::CaseIV));
//! assert!((solution.distance - 0.258819).abs() < 1e-6);
//! ```

pub mod analytic;
pub mod error;
pub mod frontend;
pub mod oracle;
pub mod qubit;

pub use analytic::{solve, solve_akphi, Region, Solution};
pub use error::{Error, Result};
pub use qubit::{AkPhiParams, BlochVector, StateSet, WeightVector};
