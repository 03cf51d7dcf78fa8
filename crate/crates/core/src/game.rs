//! Classical symmetric 2×2 games: payoff matrices, strategy densities and
//! the bilinear mixed-strategy payoff.
//!
//! Strategy index 0 is "cooperate" and index 1 is "defect" in the prisoner's
//! dilemma parameterization, so a density built from a weight `t` is
//! `(1 - t, t)` and `t` is the defection probability.

use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};

/// Tolerance on `x0 + x1 = 1` for a valid density.
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Real 2×2 payoff matrix `A`, where `A[(i, j)]` is the row player's payoff
/// for playing `i` against `j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GameMatrix2 {
    entries: [[f64; 2]; 2],
}

impl GameMatrix2 {
    pub fn new(entries: [[f64; 2]; 2]) -> Result<Self> {
        for (i, row) in entries.iter().enumerate() {
            for (j, &value) in row.iter().enumerate() {
                if !value.is_finite() {
                    return Err(Error::NonFiniteEntry { i, j, value });
                }
            }
        }
        Ok(Self { entries })
    }

    /// Row-major `a00, a01, a10, a11`.
    pub fn from_row_major(a: [f64; 4]) -> Result<Self> {
        Self::new([[a[0], a[1]], [a[2], a[3]]])
    }

    pub fn zero() -> Self {
        Self {
            entries: [[0.0; 2]; 2],
        }
    }

    pub fn entries(&self) -> [[f64; 2]; 2] {
        self.entries
    }

    pub fn row_major(&self) -> [f64; 4] {
        let e = self.entries;
        [e[0][0], e[0][1], e[1][0], e[1][1]]
    }

    pub fn transpose(&self) -> Self {
        let e = self.entries;
        Self {
            entries: [[e[0][0], e[1][0]], [e[0][1], e[1][1]]],
        }
    }

    /// Entrywise `self + other`.
    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn scale(&self, k: f64) -> Self {
        self.map(|a| k * a)
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        let mut entries = self.entries;
        for row in entries.iter_mut() {
            for v in row.iter_mut() {
                *v = f(*v);
            }
        }
        Self { entries }
    }

    pub fn zip_with(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Self {
        let mut entries = self.entries;
        for i in 0..2 {
            for j in 0..2 {
                entries[i][j] = f(self.entries[i][j], other.entries[i][j]);
            }
        }
        Self { entries }
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries[0][1] == self.entries[1][0]
    }

    /// Largest absolute difference between corresponding entries.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut m = 0.0_f64;
        for i in 0..2 {
            for j in 0..2 {
                m = m.max((self.entries[i][j] - other.entries[i][j]).abs());
            }
        }
        m
    }

    pub fn min_entry(&self) -> f64 {
        self.row_major().into_iter().fold(f64::INFINITY, f64::min)
    }

    pub fn max_entry(&self) -> f64 {
        self.row_major().into_iter().fold(f64::NEG_INFINITY, f64::max)
    }
}

impl Index<(usize, usize)> for GameMatrix2 {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.entries[i][j]
    }
}

impl fmt::Display for GameMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.entries;
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            e[0][0], e[0][1], e[1][0], e[1][1]
        )
    }
}

/// Prisoner's dilemma payoffs `0 < a < b < c`: mutual defection `a`, mutual
/// cooperation `b`, temptation `c`, sucker's payoff 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrisonersDilemmaParams {
    a: f64,
    b: f64,
    c: f64,
}

impl PrisonersDilemmaParams {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        let ordered = a.is_finite() && b.is_finite() && c.is_finite() && 0.0 < a && a < b && b < c;
        if !ordered {
            return Err(Error::InvalidPrisonersDilemma { a, b, c });
        }
        Ok(Self { a, b, c })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// `[[b, 0], [c, a]]`
    pub fn matrix(&self) -> GameMatrix2 {
        GameMatrix2 {
            entries: [[self.b, 0.0], [self.c, self.a]],
        }
    }

    /// `a + b < c`: the regime with an interior pseudoclassical equilibrium.
    pub fn is_strong_temptation(&self) -> bool {
        self.a + self.b < self.c
    }
}

/// Probability vector `(x0, x1)` on the 1-simplex.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrategyDensity {
    x0: f64,
    x1: f64,
}

impl StrategyDensity {
    /// Rejects (never renormalizes) inputs off the simplex.
    pub fn new(x0: f64, x1: f64) -> Result<Self> {
        let valid = x0.is_finite()
            && x1.is_finite()
            && x0 >= 0.0
            && x1 >= 0.0
            && (x0 + x1 - 1.0).abs() <= NORMALIZATION_TOL;
        if !valid {
            return Err(Error::InvalidDensity { x0, x1 });
        }
        Ok(Self { x0, x1 })
    }

    /// `(1 - t, t)` for a weight `t` on strategy index 1.
    pub fn from_weight(t: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::InvalidWeight(t));
        }
        Ok(Self { x0: 1.0 - t, x1: t })
    }

    pub(crate) fn from_weight_unchecked(t: f64) -> Self {
        Self { x0: 1.0 - t, x1: t }
    }

    pub fn x0(&self) -> f64 {
        self.x0
    }

    pub fn x1(&self) -> f64 {
        self.x1
    }

    pub fn get(&self, i: usize) -> f64 {
        match i {
            0 => self.x0,
            1 => self.x1,
            _ => panic!("strategy index {i} out of range"),
        }
    }

    pub fn as_array(&self) -> [f64; 2] {
        [self.x0, self.x1]
    }

    /// Weight on strategy index 1.
    pub fn weight(&self) -> f64 {
        self.x1
    }
}

/// `Σ_ij x_i A_ij y_j`
pub fn classical_payoff(x: &StrategyDensity, y: &StrategyDensity, a: &GameMatrix2) -> f64 {
    bilinear(&x.as_array(), a, &y.as_array())
}

/// Payoff to the second player, `Π(y, x)`.
pub fn conjugate_payoff(x: &StrategyDensity, y: &StrategyDensity, a: &GameMatrix2) -> f64 {
    classical_payoff(y, x, a)
}

/// `Π(x, x)`, the payoff both players receive at a common strategy.
pub fn diagonal_payoff(x: &StrategyDensity, a: &GameMatrix2) -> f64 {
    classical_payoff(x, x, a)
}

pub(crate) fn bilinear(x: &[f64; 2], a: &GameMatrix2, y: &[f64; 2]) -> f64 {
    let mut acc = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            acc += x[i] * a.entries[i][j] * y[j];
        }
    }
    acc
}
