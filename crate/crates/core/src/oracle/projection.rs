//! Euclidean projection onto the unit ℓ1 ball, the body of Bloch vectors
//! reachable by mixing the six Pauli eigenstates.

use crate::error::{Error, Result};
use crate::qubit::{BlochVector, WeightVector, INPUT_TOL};

/// Nearest point of `{|x| + |y| + |z| ≤ 1}` to `r`, and the distance to it.
///
/// Sort-based soft thresholding: on the dominant octant the projection is
/// `max(|r_i| − θ, 0)` with θ chosen so the result has unit ℓ1 norm.
pub fn project_cross_polytope(r: &BlochVector) -> (BlochVector, f64) {
    let coords = r.to_array();
    let magnitudes = coords.map(f64::abs);
    if magnitudes.iter().sum::<f64>() <= 1.0 {
        return (*r, 0.0);
    }

    let mut sorted = magnitudes;
    sorted.sort_by(|a, b| b.total_cmp(a));
    let mut cumulative = 0.0;
    let mut theta = 0.0;
    for (j, &m) in sorted.iter().enumerate() {
        cumulative += m;
        let candidate = (cumulative - 1.0) / (j + 1) as f64;
        if m - candidate > 0.0 {
            theta = candidate;
        } else {
            break;
        }
    }

    let mut nearest = [0.0; 3];
    for i in 0..3 {
        nearest[i] = coords[i].signum() * (magnitudes[i] - theta).max(0.0);
    }
    let nearest = BlochVector::from_array(nearest);
    (nearest, r.distance(&nearest))
}

/// Weights over the Pauli eigenstates whose mixture is exactly `m`.
///
/// Each signed coordinate goes to the matching eigenstate; the slack
/// `1 − |m|₁` is split evenly between |0⟩ and |1⟩.
pub fn weights_from_polytope_point(m: &BlochVector) -> Result<WeightVector> {
    if !m.is_finite() {
        return Err(Error::NonFinite("BlochVector"));
    }
    let l1 = m.l1_norm();
    if l1 > 1.0 + INPUT_TOL {
        return Err(Error::OutOfPolytope(l1));
    }
    let half_slack = 0.5 * (1.0 - l1).max(0.0);
    let pos = |c: f64| c.max(0.0);
    let neg = |c: f64| (-c).max(0.0);
    let p = vec![pos(m.z) + half_slack, neg(m.z) + half_slack, pos(m.x), neg(m.x), pos(m.y), neg(m.y)];
    // sums to max(1, |m|₁), so renormalize the tolerated overshoot
    let total: f64 = p.iter().sum();
    WeightVector::new(p.into_iter().map(|w| w / total).collect())
}
