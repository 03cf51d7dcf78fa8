use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("strategy density ({x0}, {x1}) is not a point of the simplex")]
    InvalidDensity { x0: f64, x1: f64 },

    #[error("density weight {0} is outside [0, 1]")]
    InvalidWeight(f64),

    #[error("game matrix entry ({i}, {j}) is not finite: {value}")]
    NonFiniteEntry { i: usize, j: usize, value: f64 },

    #[error("entanglement parameter {0} is outside [0, pi/2]")]
    InvalidGamma(f64),

    #[error("phase angle {name} is not finite: {value}")]
    NonFinitePhase { name: &'static str, value: f64 },

    #[error("prisoner's dilemma requires 0 < a < b < c, got a={a}, b={b}, c={c}")]
    InvalidPrisonersDilemma { a: f64, b: f64, c: f64 },

    #[error("payoff evaluated to a non-finite value at t={t}, s={s}")]
    NonFinitePayoff { t: f64, s: f64 },

    #[error("invalid solver settings: {0}")]
    InvalidSettings(String),

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),

    #[error("no symmetric equilibrium found at {0}")]
    NoEquilibrium(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
