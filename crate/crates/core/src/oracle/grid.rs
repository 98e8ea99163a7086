//! Exhaustive search over the simplex lattice with spacing `1/grid_resolution`.

use crate::analytic::Solution;
use crate::error::{Error, Result};
use crate::oracle::SolverConfig;
use crate::qubit::{BlochVector, StateSet, WeightVector};

pub const MAX_GRID_STATES: usize = 8;

struct Search<'a> {
    states: &'a [BlochVector],
    target: BlochVector,
    step: f64,
    counts: Vec<usize>,
    best_counts: Vec<usize>,
    best_sq: f64,
}

impl Search<'_> {
    /// Assigns the remaining `budget` lattice units to states `index..`.
    fn descend(&mut self, index: usize, budget: usize, partial: BlochVector) {
        let last = self.states.len() - 1;
        if index == last {
            self.counts[last] = budget;
            let m = partial + (budget as f64 * self.step) * self.states[last];
            let d = self.target - m;
            let sq = d.dot(&d);
            if sq < self.best_sq {
                self.best_sq = sq;
                self.best_counts.copy_from_slice(&self.counts);
            }
            return;
        }
        let unit = self.step * self.states[index];
        for c in 0..=budget {
            self.counts[index] = c;
            self.descend(index + 1, budget - c, partial + c as f64 * unit);
        }
    }
}

pub fn grid_search(set: &StateSet, r: &BlochVector, cfg: &SolverConfig) -> Result<Solution> {
    if set.len() > MAX_GRID_STATES {
        return Err(Error::SetTooLarge { max: MAX_GRID_STATES, found: set.len() });
    }
    if cfg.grid_resolution == 0 {
        return Err(Error::InvalidParameter { name: "grid_resolution", value: 0.0 });
    }
    r.check_physical()?;
    let n = set.len();
    let resolution = cfg.grid_resolution;
    let mut search = Search {
        states: set.states(),
        target: *r,
        step: 1.0 / resolution as f64,
        counts: vec![0; n],
        best_counts: vec![0; n],
        best_sq: f64::INFINITY,
    };
    search.descend(0, resolution, BlochVector::default());
    let weights = WeightVector::new(search.best_counts.iter().map(|&c| c as f64 / resolution as f64).collect())?;
    Ok(Solution { distance: search.best_sq.sqrt(), weights, region: None, valid: true })
}
