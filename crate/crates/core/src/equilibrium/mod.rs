//! Symmetric Nash equilibria and Pareto optima over the density simplex.
//!
//! Every solver works on a [`PayoffFunction`] `Π(t, s)`, where `t` and `s`
//! are the weights the player and the opponent put on strategy index 1.
//! Equilibria are defined by the absence of a profitable unilateral
//! deviation, not by stationarity, so boundary equilibria and payoffs that
//! are not bilinear in the densities are handled the same way.

mod oracle;
mod payoff;
pub mod search;
mod solver;

pub use oracle::{brute_force_nash, BruteForceResult, OracleCluster, MIN_ORACLE_GRID};
pub use payoff::{ClassicalGame, FnPayoff, PayoffFunction, QuantumGame, StateVectorGame};
pub use solver::{
    best_response, check_pareto_nash_coincidence, least_regret_point, pareto_optimum,
    symmetric_nash, BestResponse, EquilibriumKind, EquilibriumPoint, EquilibriumReport,
    LeastRegret, ParetoOptimum, SolverSettings,
};

/// Default lattice size for [`brute_force_nash`].
pub const DEFAULT_ORACLE_GRID: usize = 1001;
