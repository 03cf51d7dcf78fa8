use crate::game::{bilinear, GameMatrix2, StrategyDensity};
use crate::quantum::{
    effective_decomposition, quantum_payoff, EffectiveMatrixDecomposition, EntanglementParam,
    PhaseProfile, QuantumStrategy,
};

const FD_STEP: f64 = 1e-6;

/// A symmetric-game payoff `Π(t, s)`: the payoff to a player with weight `t`
/// on strategy 1 against an opponent with weight `s`.
///
/// Implementations must be safe to call concurrently.
pub trait PayoffFunction: Sync {
    fn payoff(&self, t: f64, s: f64) -> f64;

    /// `∂Π(t, s)/∂t` at `t = s`, continuous in `s` on `[0, 1]`.
    fn diagonal_gradient(&self, s: f64) -> f64 {
        let lo = (s - FD_STEP).max(0.0);
        let hi = (s + FD_STEP).min(1.0);
        (self.payoff(hi, s) - self.payoff(lo, s)) / (hi - lo)
    }

    /// Classical payoff `Π(x, x)` reported next to the game's own diagonal.
    /// Defaults to the game's own diagonal.
    fn reference_diagonal(&self, t: f64) -> f64 {
        self.payoff(t, t)
    }
}

impl<P: PayoffFunction + ?Sized> PayoffFunction for &P {
    fn payoff(&self, t: f64, s: f64) -> f64 {
        (**self).payoff(t, s)
    }

    fn diagonal_gradient(&self, s: f64) -> f64 {
        (**self).diagonal_gradient(s)
    }

    fn reference_diagonal(&self, t: f64) -> f64 {
        (**self).reference_diagonal(t)
    }
}

/// Wraps a closure `Fn(t, s) -> Π`.
pub struct FnPayoff<F>(pub F);

impl<F> PayoffFunction for FnPayoff<F>
where
    F: Fn(f64, f64) -> f64 + Sync,
{
    fn payoff(&self, t: f64, s: f64) -> f64 {
        (self.0)(t, s)
    }
}

/// Plain bilinear game over a matrix.
#[derive(Debug, Clone, Copy)]
pub struct ClassicalGame {
    pub matrix: GameMatrix2,
}

impl ClassicalGame {
    pub fn new(matrix: GameMatrix2) -> Self {
        Self { matrix }
    }
}

impl PayoffFunction for ClassicalGame {
    fn payoff(&self, t: f64, s: f64) -> f64 {
        bilinear(&[1.0 - t, t], &self.matrix, &[1.0 - s, s])
    }

    fn diagonal_gradient(&self, s: f64) -> f64 {
        let m = &self.matrix;
        (1.0 - s) * (m[(1, 0)] - m[(0, 0)]) + s * (m[(1, 1)] - m[(0, 1)])
    }
}

/// Quantum payoff at fixed `γ` and phases, as a function of the densities
/// only. Evaluated through the factored decomposition; the classical
/// reference is the diagonal of the original matrix.
#[derive(Debug, Clone, Copy)]
pub struct QuantumGame {
    decomposition: EffectiveMatrixDecomposition,
    effective: GameMatrix2,
}

impl QuantumGame {
    pub fn new(gamma: EntanglementParam, phases: PhaseProfile, matrix: GameMatrix2) -> Self {
        Self::from_decomposition(effective_decomposition(gamma, &phases, &matrix))
    }

    pub fn from_decomposition(decomposition: EffectiveMatrixDecomposition) -> Self {
        Self {
            effective: decomposition.effective_matrix(),
            decomposition,
        }
    }

    pub fn decomposition(&self) -> &EffectiveMatrixDecomposition {
        &self.decomposition
    }

    pub fn matrix(&self) -> &GameMatrix2 {
        &self.decomposition.base
    }
}

impl PayoffFunction for QuantumGame {
    fn payoff(&self, t: f64, s: f64) -> f64 {
        let x = [1.0 - t, t];
        let y = [1.0 - s, s];
        bilinear(&x, &self.effective, &y)
            + self.decomposition.correlation_coefficient * (x[0] * x[1] * y[0] * y[1]).sqrt()
    }

    fn diagonal_gradient(&self, s: f64) -> f64 {
        // d/dt √(t(1−t)s(1−s)) at t = s is (1 − 2s)/2, finite at the ends
        let m = &self.effective;
        (1.0 - s) * (m[(1, 0)] - m[(0, 0)])
            + s * (m[(1, 1)] - m[(0, 1)])
            + self.decomposition.correlation_coefficient * (1.0 - 2.0 * s) / 2.0
    }

    fn reference_diagonal(&self, t: f64) -> f64 {
        bilinear(&[1.0 - t, t], &self.decomposition.base, &[1.0 - t, t])
    }
}

/// Quantum payoff evaluated from the full state vector for every call.
/// Slower than [`QuantumGame`]; used to cross-check it.
#[derive(Debug, Clone, Copy)]
pub struct StateVectorGame {
    pub gamma: EntanglementParam,
    pub phases: PhaseProfile,
    pub matrix: GameMatrix2,
}

impl PayoffFunction for StateVectorGame {
    fn payoff(&self, t: f64, s: f64) -> f64 {
        let alpha = QuantumStrategy {
            density: StrategyDensity::from_weight_unchecked(t),
            phase0: self.phases.xi0,
            phase1: self.phases.xi1,
        };
        let beta = QuantumStrategy {
            density: StrategyDensity::from_weight_unchecked(s),
            phase0: self.phases.upsilon0,
            phase1: self.phases.upsilon1,
        };
        quantum_payoff(self.gamma, &alpha, &beta, &self.matrix)
    }

    fn reference_diagonal(&self, t: f64) -> f64 {
        bilinear(&[1.0 - t, t], &self.matrix, &[1.0 - t, t])
    }
}
