//! Karush-Kuhn-Tucker certificate for weights over the six Pauli eigenstates.
//!
//! In canonical coordinates the stationarity conditions of
//! `min |det(ρ − Σ p_i ρ_i)|` subject to `p_i ≥ 0, Σ p_i = 1` read
//!
//! ```text
//!     p1 + (p2+p3+p4+p5)/2          + λ0 + λ − a       = 0
//!     p0 + (p2+p3+p4+p5)/2          + λ1 + λ − 1 + a   = 0
//!     (p0+p1)/2 + p3 + (p4+p5)/2    + λ2 + λ − 1/2 + u = 0
//!     (p0+p1)/2 + p2 + (p4+p5)/2    + λ3 + λ − 1/2 − u = 0
//!     (p0+p1+p2+p3)/2 + p5          + λ4 + λ − 1/2 + v = 0
//!     (p0+p1+p2+p3)/2 + p4          + λ5 + λ − 1/2 − v = 0
//! ```
//!
//! with `λ_i p_i = 0` and `λ_i ≥ 0`.

use crate::analytic::UvParams;
use crate::qubit::WeightVector;

#[derive(Debug, Clone, PartialEq)]
pub struct KktReport {
    /// Multiplier of the normalization constraint.
    pub lambda: f64,
    /// Multipliers of `p_i ≥ 0`.
    pub lambda_i: [f64; 6],
    pub stationarity_residual: f64,
    pub feasibility_ok: bool,
    pub complementarity_residual: f64,
    pub pass: bool,
}

/// Left-hand sides of the six stationarity rows with all multipliers set to zero.
pub fn stationarity_rows(params: &UvParams, p: &[f64; 6]) -> [f64; 6] {
    let UvParams { a, u, v } = *params;
    let z_pair = 0.5 * (p[0] + p[1]);
    let x_pair = 0.5 * (p[2] + p[3]);
    let y_pair = 0.5 * (p[4] + p[5]);
    [
        p[1] + x_pair + y_pair - a,
        p[0] + x_pair + y_pair - 1.0 + a,
        z_pair + p[3] + y_pair - 0.5 + u,
        z_pair + p[2] + y_pair - 0.5 - u,
        z_pair + x_pair + p[5] - 0.5 + v,
        z_pair + x_pair + p[4] - 0.5 - v,
    ]
}

/// Recovers multipliers for canonical weights `w` and checks the system.
///
/// Entries above `tol` form the support, where `λ_i = 0`. The shared `λ` is the
/// least-squares solution of the support rows; their leftover inconsistency is
/// the stationarity residual. Off-support `λ_i` follow from their own rows.
pub fn kkt_check(params: &UvParams, w: &WeightVector, tol: f64) -> KktReport {
    let p: [f64; 6] = match w.as_slice().try_into() {
        Ok(p) => p,
        Err(_) => {
            return KktReport {
                lambda: f64::NAN,
                lambda_i: [f64::NAN; 6],
                stationarity_residual: f64::INFINITY,
                feasibility_ok: false,
                complementarity_residual: f64::INFINITY,
                pass: false,
            }
        }
    };
    let rows = stationarity_rows(params, &p);

    let mut support: Vec<usize> = (0..6).filter(|&i| p[i] > tol).collect();
    if support.is_empty() {
        support = (0..6).collect();
    }
    let lambda = -support.iter().map(|&i| rows[i]).sum::<f64>() / support.len() as f64;
    let stationarity_residual = support.iter().map(|&i| (rows[i] + lambda).abs()).fold(0.0, f64::max);

    let mut lambda_i = [0.0; 6];
    for i in 0..6 {
        if !support.contains(&i) {
            lambda_i[i] = -(rows[i] + lambda);
        }
    }
    let complementarity_residual = (0..6).map(|i| (lambda_i[i] * p[i]).abs()).fold(0.0, f64::max);
    let feasibility_ok = w.is_on_simplex(tol);
    let min_multiplier = lambda_i.iter().copied().fold(f64::INFINITY, f64::min);

    let pass =
        stationarity_residual <= tol && complementarity_residual <= tol && min_multiplier >= -tol && feasibility_ok;

    KktReport { lambda, lambda_i, stationarity_residual, feasibility_ok, complementarity_residual, pass }
}
