use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::game::{GameMatrix2, StrategyDensity};

/// Slack allowed above π/2 so that grids computed in floating point still
/// reach the endpoint; values inside the slack are clamped.
const GAMMA_SLACK: f64 = 1e-12;

/// Entanglement angle `γ ∈ [0, π/2]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EntanglementParam(f64);

impl EntanglementParam {
    pub fn new(gamma: f64) -> Result<Self> {
        if !gamma.is_finite() || gamma < -GAMMA_SLACK || gamma > FRAC_PI_2 + GAMMA_SLACK {
            return Err(Error::InvalidGamma(gamma));
        }
        Ok(Self(gamma.clamp(0.0, FRAC_PI_2)))
    }

    pub fn radians(&self) -> f64 {
        self.0
    }
}

/// A quantum strategy: a density plus one phase per basis amplitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantumStrategy {
    pub density: StrategyDensity,
    pub phase0: f64,
    pub phase1: f64,
}

impl QuantumStrategy {
    pub fn new(density: StrategyDensity, phase0: f64, phase1: f64) -> Result<Self> {
        if !phase0.is_finite() {
            return Err(Error::NonFinitePhase {
                name: "phase0",
                value: phase0,
            });
        }
        if !phase1.is_finite() {
            return Err(Error::NonFinitePhase {
                name: "phase1",
                value: phase1,
            });
        }
        Ok(Self {
            density,
            phase0,
            phase1,
        })
    }

    /// `α_i = √x_i · e^{i·phase_i}`
    pub fn amplitudes(&self) -> [Complex64; 2] {
        [
            Complex64::from_polar(self.density.x0().sqrt(), self.phase0),
            Complex64::from_polar(self.density.x1().sqrt(), self.phase1),
        ]
    }
}

/// 2×2 complex matrix, row-major.
pub type Unitary2 = [[Complex64; 2]; 2];

/// `[[α0, α1], [-α1*, α0*]]`.
///
/// The matrix acts on basis kets row-wise, `|k⟩ ↦ Σ_j U_kj |j⟩`, so
/// `U|0⟩ = α0|0⟩ + α1|1⟩` is the strategy vector itself.
pub fn strategy_unitary(s: &QuantumStrategy) -> Unitary2 {
    let [a0, a1] = s.amplitudes();
    [[a0, a1], [-a1.conj(), a0.conj()]]
}

/// Amplitudes over `|00⟩, |01⟩, |10⟩, |11⟩`; index `2i + j` where `i` is
/// the first player's qubit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateVector4 {
    amps: [Complex64; 4],
}

impl StateVector4 {
    pub fn new(amps: [Complex64; 4]) -> Self {
        Self { amps }
    }

    pub fn basis(i: usize, j: usize) -> Self {
        let mut amps = [Complex64::new(0.0, 0.0); 4];
        amps[2 * i + j] = Complex64::new(1.0, 0.0);
        Self { amps }
    }

    pub fn amplitudes(&self) -> [Complex64; 4] {
        self.amps
    }

    pub fn amplitude(&self, i: usize, j: usize) -> Complex64 {
        self.amps[2 * i + j]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// `|Ψ_ij|²`, indexed `[i][j]`.
    pub fn probabilities(&self) -> [[f64; 2]; 2] {
        [
            [self.amps[0].norm_sqr(), self.amps[1].norm_sqr()],
            [self.amps[2].norm_sqr(), self.amps[3].norm_sqr()],
        ]
    }

    pub fn with_global_phase(&self, theta: f64) -> Self {
        let g = Complex64::from_polar(1.0, theta);
        Self {
            amps: self.amps.map(|a| a * g),
        }
    }

    /// Smallest `‖self − e^{iθ} other‖` over θ.
    pub fn distance_up_to_phase(&self, other: &Self) -> f64 {
        let overlap: Complex64 = self
            .amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| b.conj() * a)
            .sum();
        let d2 = self.norm_sqr() + other.norm_sqr() - 2.0 * overlap.norm();
        d2.max(0.0).sqrt()
    }

    fn apply_local(&self, u: &Unitary2, v: &Unitary2) -> Self {
        let mut out = [Complex64::new(0.0, 0.0); 4];
        for k1 in 0..2 {
            for k2 in 0..2 {
                let c = self.amps[2 * k1 + k2];
                if c == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j1 in 0..2 {
                    for j2 in 0..2 {
                        out[2 * j1 + j2] += c * u[k1][j1] * v[k2][j2];
                    }
                }
            }
        }
        Self { amps: out }
    }

    /// Entangler `J_γ` (or its adjoint) as rotations in the `(|00⟩,|11⟩)`
    /// and `(|01⟩,|10⟩)` planes.
    fn apply_entangler(&self, gamma: f64, adjoint: bool) -> Self {
        let c = Complex64::new((gamma / 2.0).cos(), 0.0);
        let is = Complex64::new(0.0, (gamma / 2.0).sin());
        // J|00⟩ = c|00⟩ + is|11⟩, J|01⟩ = c|01⟩ − is|10⟩; the adjoint flips both signs.
        let (even, odd) = if adjoint { (-is, is) } else { (is, -is) };
        let [p00, p01, p10, p11] = self.amps;
        Self {
            amps: [
                c * p00 + even * p11,
                c * p01 + odd * p10,
                c * p10 + odd * p01,
                c * p11 + even * p00,
            ],
        }
    }
}

/// `J_γ|00⟩ = cos(γ/2)|00⟩ + i·sin(γ/2)|11⟩`
pub fn entangled_initial_state(gamma: EntanglementParam) -> StateVector4 {
    StateVector4::basis(0, 0).apply_entangler(gamma.radians(), false)
}

/// `J†_γ (U_α ⊗ U_β) J_γ |00⟩`
pub fn correlated_state(
    gamma: EntanglementParam,
    alpha: &QuantumStrategy,
    beta: &QuantumStrategy,
) -> StateVector4 {
    let ua = strategy_unitary(alpha);
    let ub = strategy_unitary(beta);
    entangled_initial_state(gamma)
        .apply_local(&ua, &ub)
        .apply_entangler(gamma.radians(), true)
}

/// `⟨Ψ|Q|Ψ⟩ = Σ_ij A_ij |Ψ_ij|²`
pub fn payoff_from_state(psi: &StateVector4, a: &GameMatrix2) -> f64 {
    let p = psi.probabilities();
    let mut acc = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            acc += a[(i, j)] * p[i][j];
        }
    }
    acc
}

pub fn quantum_payoff(
    gamma: EntanglementParam,
    alpha: &QuantumStrategy,
    beta: &QuantumStrategy,
    a: &GameMatrix2,
) -> f64 {
    payoff_from_state(&correlated_state(gamma, alpha, beta), a)
}

/// Second player's payoff, `Σ_ij A_ji |Ψ_ij|²`.
pub fn quantum_payoff_player2(
    gamma: EntanglementParam,
    alpha: &QuantumStrategy,
    beta: &QuantumStrategy,
    a: &GameMatrix2,
) -> f64 {
    payoff_from_state(&correlated_state(gamma, alpha, beta), &a.transpose())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::classical_payoff;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn strat(x1: f64, p0: f64, p1: f64) -> QuantumStrategy {
        QuantumStrategy::new(StrategyDensity::from_weight(x1).unwrap(), p0, p1).unwrap()
    }

    fn gamma(g: f64) -> EntanglementParam {
        EntanglementParam::new(g).unwrap()
    }

    fn assert_unitary_close(u: &Unitary2, expected: [[Complex64; 2]; 2]) {
        for i in 0..2 {
            for j in 0..2 {
                assert!((u[i][j] - expected[i][j]).norm() < 1e-15, "{u:?}");
            }
        }
    }

    fn sample() -> GameMatrix2 {
        GameMatrix2::new([[2.0, 0.0], [4.0, 1.0]]).unwrap()
    }

    #[test]
    fn strategy_unitary_examples() {
        let one = c(1.0, 0.0);
        let zero = c(0.0, 0.0);
        assert_unitary_close(&strategy_unitary(&strat(0.0, 0.0, 0.0)), [[one, zero], [zero, one]]);
        assert_unitary_close(
            &strategy_unitary(&strat(1.0, 0.0, FRAC_PI_2)),
            [[zero, c(0.0, 1.0)], [c(0.0, 1.0), zero]],
        );
        let h = c(FRAC_1_SQRT_2, 0.0);
        assert_unitary_close(&strategy_unitary(&strat(0.5, 0.0, 0.0)), [[h, h], [-h, h]]);
    }

    #[test]
    fn entangled_initial_state_examples() {
        let s0 = entangled_initial_state(gamma(0.0));
        assert_eq!(s0, StateVector4::basis(0, 0));

        let s = entangled_initial_state(gamma(FRAC_PI_2)).amplitudes();
        assert!((s[0] - c(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
        assert!((s[3] - c(0.0, FRAC_1_SQRT_2)).norm() < 1e-15);

        let s = entangled_initial_state(gamma(PI / 3.0)).amplitudes();
        assert!((s[0] - c(3f64.sqrt() / 2.0, 0.0)).norm() < 1e-15);
        assert!((s[3] - c(0.0, 0.5)).norm() < 1e-15);
        assert!(s[1].norm() == 0.0 && s[2].norm() == 0.0);
    }

    #[test]
    fn gamma_range_is_enforced() {
        assert!(EntanglementParam::new(-0.1).is_err());
        assert!(EntanglementParam::new(FRAC_PI_2 + 1e-6).is_err());
        assert!(EntanglementParam::new(f64::NAN).is_err());
        assert_eq!(
            EntanglementParam::new(FRAC_PI_2 + 1e-13).unwrap().radians(),
            FRAC_PI_2
        );
    }

    #[test]
    fn correlated_state_identity_strategies() {
        for g in [0.0, 0.4, 1.2, FRAC_PI_2] {
            let id = strat(0.0, 0.0, 0.9);
            let psi = correlated_state(gamma(g), &id, &id);
            assert!(psi.distance_up_to_phase(&StateVector4::basis(0, 0)) < 1e-15);
        }
    }

    #[test]
    fn correlated_state_flip_strategies_at_max_entanglement() {
        // U = iσ_x for both players; hand expansion gives −|11⟩.
        let flip = strat(1.0, 0.0, FRAC_PI_2);
        let psi = correlated_state(gamma(FRAC_PI_2), &flip, &flip);
        let expected = StateVector4::basis(1, 1).with_global_phase(PI);
        assert!((psi.amplitude(1, 1) - c(-1.0, 0.0)).norm() < 1e-15);
        assert!(psi.distance_up_to_phase(&expected) < 1e-15);
    }

    #[test]
    fn correlated_state_unentangled_is_product() {
        let a = strat(0.3, 0.2, 1.7);
        let b = strat(0.8, -0.5, 0.4);
        let psi = correlated_state(gamma(0.0), &a, &b);
        let [a0, a1] = a.amplitudes();
        let [b0, b1] = b.amplitudes();
        let product = [a0 * b0, a0 * b1, a1 * b0, a1 * b1];
        for (k, amp) in psi.amplitudes().iter().enumerate() {
            assert!((amp - product[k]).norm() < 1e-15);
        }
    }

    #[test]
    fn quantum_payoff_examples() {
        let a = sample();
        let x = strat(0.35, 0.0, 0.0);
        let y = strat(0.8, 0.0, 0.0);
        let classical = classical_payoff(&x.density, &y.density, &a);
        assert!((quantum_payoff(gamma(0.0), &x, &y, &a) - classical).abs() < 1e-12);

        let x = strat(0.0, 0.0, FRAC_PI_2);
        let y = strat(1.0, 0.0, FRAC_PI_2);
        assert!((quantum_payoff(gamma(FRAC_PI_2), &x, &y, &a) - 4.0).abs() < 1e-12);
        assert!(quantum_payoff_player2(gamma(FRAC_PI_2), &x, &y, &a).abs() < 1e-12);

        assert!((quantum_payoff(gamma(FRAC_PI_2), &y, &y, &a) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn player2_examples() {
        let a = sample();
        let s = strat(0.4, 0.3, 1.1);
        let g = gamma(0.9);
        assert!(
            (quantum_payoff_player2(g, &s, &s, &a) - quantum_payoff(g, &s, &s, &a)).abs() < 1e-12
        );

        let x = strat(0.25, 0.0, 0.0);
        let y = strat(0.6, 0.0, 0.0);
        let expected = classical_payoff(&y.density, &x.density, &a);
        assert!((quantum_payoff_player2(gamma(0.0), &x, &y, &a) - expected).abs() < 1e-12);
    }

    #[test]
    fn global_phase_leaves_payoff_unchanged() {
        let a = sample();
        let psi = correlated_state(gamma(0.77), &strat(0.3, 0.2, 1.0), &strat(0.6, 2.0, -1.0));
        let base = payoff_from_state(&psi, &a);
        for theta in [0.1, 1.0, PI, 5.5] {
            let rotated = psi.with_global_phase(theta);
            assert!((payoff_from_state(&rotated, &a) - base).abs() < 1e-15);
        }
    }
}
