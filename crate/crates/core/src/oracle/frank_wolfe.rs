//! Away-step conditional gradient for the nearest mixture of an arbitrary set
//! of pure states.
//!
//! Minimizes `f(p) = ½‖r − Σ p_i r_i‖²` over the probability simplex. The
//! Frank-Wolfe gap bounds `f(p) − f*`, which gives the stopping rule and the
//! returned certificate.

use crate::analytic::Solution;
use crate::error::{Error, Result};
use crate::oracle::SolverConfig;
use crate::qubit::{BlochVector, StateSet, WeightVector};

#[derive(Debug, Clone, PartialEq)]
pub struct FrankWolfeResult {
    pub solution: Solution,
    /// Final Frank-Wolfe gap, an upper bound on `½d² − ½d*²`.
    pub gap: f64,
    pub iterations: usize,
}

fn combine(states: &[BlochVector], p: &[f64]) -> BlochVector {
    states.iter().zip(p).fold(BlochVector::default(), |acc, (s, &w)| acc + w * *s)
}

pub fn frank_wolfe_solve(set: &StateSet, r: &BlochVector, cfg: &SolverConfig) -> Result<FrankWolfeResult> {
    r.check_physical()?;
    let states = set.states();
    let n = states.len();

    // start from the closest vertex
    let start =
        (0..n).min_by(|&i, &j| r.distance(&states[i]).total_cmp(&r.distance(&states[j]))).ok_or(Error::EmptySet)?;
    let mut p = vec![0.0; n];
    p[start] = 1.0;
    let mut m = states[start];
    let mut gap = f64::INFINITY;

    for iter in 0..cfg.max_iter {
        let residual = *r - m;
        // ∂f/∂p_i = −⟨r − m, r_i⟩
        let grad: Vec<f64> = states.iter().map(|s| -residual.dot(s)).collect();
        let along: f64 = grad.iter().zip(&p).map(|(g, w)| g * w).sum();

        let toward = (0..n).min_by(|&i, &j| grad[i].total_cmp(&grad[j])).unwrap();
        gap = along - grad[toward];
        if gap <= cfg.tol {
            return finish(set, r, p, gap, iter);
        }

        let away = (0..n).filter(|&i| p[i] > 0.0).max_by(|&i, &j| grad[i].total_cmp(&grad[j])).unwrap();
        let away_gap = grad[away] - along;

        let (direction, max_step, dropping) = if gap >= away_gap || p[away] >= 1.0 {
            (states[toward] - m, 1.0, None)
        } else {
            (m - states[away], p[away] / (1.0 - p[away]), Some(away))
        };

        let curvature = direction.dot(&direction);
        if curvature == 0.0 {
            return finish(set, r, p, gap, iter);
        }
        let step = (residual.dot(&direction) / curvature).clamp(0.0, max_step);

        match dropping {
            None => {
                p.iter_mut().for_each(|w| *w *= 1.0 - step);
                p[toward] += step;
            }
            Some(v) => {
                p.iter_mut().for_each(|w| *w *= 1.0 + step);
                p[v] -= step;
                if step >= max_step {
                    p[v] = 0.0;
                }
            }
        }
        m = combine(states, &p);
    }

    Err(Error::NotConverged { iterations: cfg.max_iter, gap })
}

fn finish(set: &StateSet, r: &BlochVector, p: Vec<f64>, gap: f64, iterations: usize) -> Result<FrankWolfeResult> {
    let total: f64 = p.iter().sum();
    let weights = WeightVector::new(p.into_iter().map(|w| w.max(0.0) / total).collect())?;
    let distance = r.distance(&combine(set.states(), weights.as_slice()));
    Ok(FrankWolfeResult { solution: Solution { distance, weights, region: None, valid: true }, gap, iterations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::project_cross_polytope;
    use approx::assert_abs_diff_eq;

    fn basis_set(vectors: &[[f64; 3]]) -> StateSet {
        StateSet::new(
            vectors.iter().map(|&c| BlochVector::from_array(c)).collect(),
            (0..vectors.len()).map(|i| format!("s{i}")).collect(),
        )
        .unwrap()
    }

    #[test]
    fn single_state_set() {
        let set = basis_set(&[[0.0, 0.0, 1.0]]);
        let out = frank_wolfe_solve(&set, &BlochVector::new(0.0, 0.0, 1.0), &SolverConfig::default()).unwrap();
        assert_eq!(out.solution.distance, 0.0);
        assert_eq!(out.solution.weights.as_slice(), &[1.0]);
    }

    #[test]
    fn z_axis_segment() {
        let set = basis_set(&[[0.0, 0.0, 1.0], [0.0, 0.0, -1.0]]);
        let out = frank_wolfe_solve(&set, &BlochVector::new(1.0, 0.0, 0.0), &SolverConfig::default()).unwrap();
        assert_abs_diff_eq!(out.solution.distance, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(out.solution.weights[0], 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(out.solution.weights[1], 0.5, epsilon = 1e-12);
    }

    #[test]
    fn pauli_set_matches_projection() {
        let r = BlochVector::new(0.5, 0.75f64.sqrt(), 0.0);
        let out = frank_wolfe_solve(&StateSet::b3(), &r, &SolverConfig::default()).unwrap();
        assert_abs_diff_eq!(out.solution.distance, 0.258819, epsilon = 1e-6);
        assert_abs_diff_eq!(out.solution.distance, project_cross_polytope(&r).1, epsilon = 1e-6);
        assert!(out.gap <= 1e-10);
    }

    #[test]
    fn interior_point_converges_to_zero() {
        let r = BlochVector::new(0.1, -0.2, 0.05);
        let out = frank_wolfe_solve(&StateSet::b3(), &r, &SolverConfig::default()).unwrap();
        assert!(out.solution.distance < 1e-8);
    }

    #[test]
    fn iteration_cap_reports_gap() {
        let cfg = SolverConfig { tol: 1e-300, max_iter: 3, ..SolverConfig::default() };
        let err = frank_wolfe_solve(&StateSet::b3(), &BlochVector::new(0.1, 0.2, 0.3), &cfg).unwrap_err();
        match err {
            Error::NotConverged { iterations, gap } => {
                assert_eq!(iterations, 3);
                assert!(gap > 0.0);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }
}
