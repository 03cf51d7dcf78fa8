//! Exhaustive lattice search for symmetric equilibria.
//!
//! Deliberately naive: no derivatives, no refinement, nothing shared with
//! [`symmetric_nash`](super::symmetric_nash) beyond the payoff function.

use rayon::prelude::*;

use crate::error::{Error, Result};

use super::payoff::PayoffFunction;
use super::search::linspace;

pub const MIN_ORACLE_GRID: usize = 101;

/// A run of consecutive flagged lattice points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleCluster {
    pub lo: f64,
    pub hi: f64,
    /// Lowest-regret point of the run (smallest `t` on ties).
    pub best: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BruteForceResult {
    pub grid_n: usize,
    pub epsilon: f64,
    /// Every `s_j` with `Π(s_j, s_j) ≥ max_i Π(t_i, s_j) − ε`.
    pub flagged: Vec<f64>,
    pub clusters: Vec<OracleCluster>,
}

impl BruteForceResult {
    /// One representative point per cluster.
    pub fn approximate_equilibria(&self) -> Vec<f64> {
        self.clusters.iter().map(|c| c.best).collect()
    }

    /// Distance from `t` to the nearest flagged point.
    pub fn distance_to_flagged(&self, t: f64) -> f64 {
        self.flagged
            .iter()
            .map(|f| (f - t).abs())
            .fold(f64::INFINITY, f64::min)
    }
}

/// Evaluates `Π(t_i, s_j)` on the full `grid_n × grid_n` lattice.
///
/// The acceptance slack is `ε = range / (grid_n − 1)`, where `range` is the
/// spread of payoff values over the lattice: the regret of the lattice point
/// nearest an off-lattice equilibrium is first order in the spacing.
pub fn brute_force_nash(payoff: &impl PayoffFunction, grid_n: usize) -> Result<BruteForceResult> {
    if grid_n < MIN_ORACLE_GRID {
        return Err(Error::InvalidSettings(format!(
            "oracle grid must have at least {MIN_ORACLE_GRID} points, got {grid_n}"
        )));
    }
    let grid = linspace(0.0, 1.0, grid_n);

    // per opponent column: (row max, row min, own diagonal payoff)
    let columns: Vec<(f64, f64, f64)> = grid
        .par_iter()
        .enumerate()
        .map(|(j, &s)| {
            let mut max = f64::NEG_INFINITY;
            let mut min = f64::INFINITY;
            let mut own = f64::NAN;
            for (i, &t) in grid.iter().enumerate() {
                let v = payoff.payoff(t, s);
                if !v.is_finite() {
                    return Err(Error::NonFinitePayoff { t, s });
                }
                max = max.max(v);
                min = min.min(v);
                if i == j {
                    own = v;
                }
            }
            Ok((max, min, own))
        })
        .collect::<Result<_>>()?;

    let hi = columns.iter().fold(f64::NEG_INFINITY, |m, c| m.max(c.0));
    let lo = columns.iter().fold(f64::INFINITY, |m, c| m.min(c.1));
    let epsilon = (hi - lo) / (grid_n - 1) as f64;

    let regrets: Vec<f64> = columns.iter().map(|&(max, _, own)| max - own).collect();
    let flagged_mask: Vec<bool> = regrets.iter().map(|&r| r <= epsilon).collect();

    let flagged = grid
        .iter()
        .zip(&flagged_mask)
        .filter(|(_, &f)| f)
        .map(|(&s, _)| s)
        .collect();

    let mut clusters = Vec::new();
    let mut j = 0;
    while j < grid_n {
        if !flagged_mask[j] {
            j += 1;
            continue;
        }
        let start = j;
        let mut best = j;
        while j + 1 < grid_n && flagged_mask[j + 1] {
            j += 1;
            if regrets[j] < regrets[best] {
                best = j;
            }
        }
        clusters.push(OracleCluster {
            lo: grid[start],
            hi: grid[j],
            best: grid[best],
        });
        j += 1;
    }

    Ok(BruteForceResult {
        grid_n,
        epsilon,
        flagged,
        clusters,
    })
}
