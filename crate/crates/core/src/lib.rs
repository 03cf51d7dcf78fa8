//! Symmetric two-strategy games played with entangled quantum strategies.
//!
//! * [`game`]: classical 2×2 matrices, strategy densities and bilinear payoffs.
//! * [`quantum`]: strategy unitaries, the entangled state vector and the
//!   effective-matrix decomposition of the quantum payoff.
//! * [`equilibrium`]: symmetric Nash equilibria, Pareto optima and a
//!   brute-force lattice oracle.
//! * [`scenarios`]: prisoner's dilemma closed forms and parameter sweeps.
//! * [`verify`]: randomized identity and oracle-equivalence suites.

pub mod equilibrium;
pub mod error;
pub mod game;
pub mod quantum;
pub mod scenarios;
pub mod verify;

pub use error::{Error, Result};
