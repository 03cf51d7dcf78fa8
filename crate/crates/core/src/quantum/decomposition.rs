//! Effective-matrix view of the quantum payoff.
//!
//! For densities `x`, `y` the first player's payoff is
//!
//! ```text
//! Π_γ(x, y) = Σ_ij x_i (A + B^exc)_ij y_j + K · √(x0 x1 y0 y1)
//! B^exc_ij  = −sin²γ · sin²(ξ_i + υ_j) · (A_ij − A_īj̄)
//! K         = 2 sinγ · Σ_ij (−1)^{i+j} sin(ξ_ī + υ_j̄) cos(ξ_i + υ_j) A_ij
//! ```
//!
//! The correlation term is kept in this factored form. Writing it as a
//! matrix entry needs `√(x_ī y_j̄ / (x_i y_j))`, which blows up on the edge
//! of the simplex even though the product with `x_i y_j` does not.

use crate::game::{bilinear, GameMatrix2, StrategyDensity};

use super::phases::PhaseProfile;
use super::state::EntanglementParam;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveMatrixDecomposition {
    pub base: GameMatrix2,
    pub exchange: GameMatrix2,
    pub correlation_coefficient: f64,
    pub gamma: f64,
    pub phases: PhaseProfile,
}

impl EffectiveMatrixDecomposition {
    /// `A + B^exc`, the density-independent part of the effective matrix.
    pub fn effective_matrix(&self) -> GameMatrix2 {
        self.base.add(&self.exchange)
    }

    /// Same decomposition with `K` negated. Only useful for fault injection
    /// in the verification suites.
    pub fn with_flipped_correlation_sign(&self) -> Self {
        Self {
            correlation_coefficient: -self.correlation_coefficient,
            ..*self
        }
    }

    /// Payoff for density weights `t` (first player) and `s` (opponent),
    /// each the weight on strategy index 1.
    pub fn payoff_at_weights(&self, t: f64, s: f64) -> f64 {
        let m = self.effective_matrix();
        let x = [1.0 - t, t];
        let y = [1.0 - s, s];
        bilinear(&x, &m, &y) + self.correlation_coefficient * (x[0] * x[1] * y[0] * y[1]).sqrt()
    }
}

pub fn effective_decomposition(
    gamma: EntanglementParam,
    phases: &PhaseProfile,
    a: &GameMatrix2,
) -> EffectiveMatrixDecomposition {
    let g = gamma.radians();
    let sin_g = g.sin();
    let sin2_g = sin_g * sin_g;
    let xi = phases.xi();
    let up = phases.upsilon();

    let mut exchange = [[0.0; 2]; 2];
    let mut k = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            let (ib, jb) = (1 - i, 1 - j);
            let s = (xi[i] + up[j]).sin();
            exchange[i][j] = -sin2_g * s * s * (a[(i, j)] - a[(ib, jb)]);
            let sign = if (i + j) % 2 == 0 { 1.0 } else { -1.0 };
            k += sign * (xi[ib] + up[jb]).sin() * (xi[i] + up[j]).cos() * a[(i, j)];
        }
    }

    EffectiveMatrixDecomposition {
        base: *a,
        // entries stay finite: products of finite values with bounded trig terms
        exchange: GameMatrix2::new(exchange).expect("finite exchange matrix"),
        correlation_coefficient: 2.0 * sin_g * k,
        gamma: g,
        phases: *phases,
    }
}

pub fn payoff_from_decomposition(
    decomp: &EffectiveMatrixDecomposition,
    x: &StrategyDensity,
    y: &StrategyDensity,
) -> f64 {
    let m = decomp.effective_matrix();
    let xa = x.as_array();
    let ya = y.as_array();
    bilinear(&xa, &m, &ya) + decomp.correlation_coefficient * (xa[0] * xa[1] * ya[0] * ya[1]).sqrt()
}

/// `cos²γ · A + sin²γ · Aᵀ`
pub fn pseudoclassical_matrix(gamma: EntanglementParam, a: &GameMatrix2) -> GameMatrix2 {
    let (c2, s2) = cos2_sin2(gamma);
    a.scale(c2).add(&a.transpose().scale(s2))
}

/// Phases `(π/4, π/4)`: every entry mixes with its doubly-complemented
/// partner, `B_ij = cos²γ A_ij + sin²γ A_īj̄`.
pub fn case3_matrix(gamma: EntanglementParam, a: &GameMatrix2) -> GameMatrix2 {
    let (c2, s2) = cos2_sin2(gamma);
    let mut e = [[0.0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            e[i][j] = c2 * a[(i, j)] + s2 * a[(1 - i, 1 - j)];
        }
    }
    GameMatrix2::new(e).expect("finite case3 matrix")
}

/// Phases `(π/4, 3π/4)`: the diagonal mixes, the off-diagonal is untouched.
pub fn case4_matrix(gamma: EntanglementParam, a: &GameMatrix2) -> GameMatrix2 {
    let (c2, s2) = cos2_sin2(gamma);
    let mut e = a.entries();
    for i in 0..2 {
        e[i][i] = c2 * a[(i, i)] + s2 * a[(1 - i, 1 - i)];
    }
    GameMatrix2::new(e).expect("finite case4 matrix")
}

fn cos2_sin2(gamma: EntanglementParam) -> (f64, f64) {
    let (s, c) = gamma.radians().sin_cos();
    (c * c, s * s)
}
