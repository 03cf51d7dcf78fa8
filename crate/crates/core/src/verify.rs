//! Randomized identity and oracle-equivalence suites.
//!
//! Each check draws its own inputs from a seeded ChaCha stream, records the
//! largest residual seen and compares it to a fixed tolerance.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::equilibrium::{
    brute_force_nash, symmetric_nash, QuantumGame, SolverSettings, DEFAULT_ORACLE_GRID,
};
use crate::error::Result;
use crate::game::{classical_payoff, GameMatrix2, PrisonersDilemmaParams, StrategyDensity};
use crate::quantum::{
    correlated_state, effective_decomposition, payoff_from_decomposition, quantum_payoff,
    strategy_unitary, EntanglementParam, PhaseProfile, QuantumStrategy,
};
use crate::scenarios::{equilibrium_set_distance, pd_pseudoclassical_equilibrium};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Random draws per identity check.
    pub samples: usize,
    /// Negate the correlation coefficient before comparing the decomposition
    /// with the state vector. Fault injection for testing the harness.
    pub inject_sign_fault: bool,
    pub settings: SolverSettings,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            seed: 2004,
            samples: 1000,
            inject_sign_fault: false,
            settings: SolverSettings::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub samples: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl CheckOutcome {
    fn new(name: &'static str, samples: usize, max_residual: f64, tolerance: f64) -> Self {
        Self {
            name,
            samples,
            max_residual,
            tolerance,
            passed: max_residual.is_finite() && max_residual <= tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub seed: u64,
    pub checks: Vec<CheckOutcome>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Random inputs shared by the checks.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn matrix(&mut self) -> GameMatrix2 {
        let mut e = [0.0; 4];
        for v in e.iter_mut() {
            *v = self.rng.random_range(-5.0..5.0);
        }
        GameMatrix2::from_row_major(e).expect("finite")
    }

    pub fn gamma(&mut self) -> EntanglementParam {
        EntanglementParam::new(self.rng.random_range(0.0..=FRAC_PI_2)).expect("in range")
    }

    pub fn angle(&mut self) -> f64 {
        self.rng.random_range(0.0..TAU)
    }

    /// Independent phases for both players.
    pub fn phases(&mut self) -> PhaseProfile {
        PhaseProfile::new(self.angle(), self.angle(), self.angle(), self.angle()).expect("finite")
    }

    pub fn symmetric_phases(&mut self) -> PhaseProfile {
        PhaseProfile::symmetric(self.angle(), self.angle()).expect("finite")
    }

    pub fn density(&mut self) -> StrategyDensity {
        StrategyDensity::from_weight(self.rng.random_range(0.0..=1.0)).expect("in range")
    }

    /// Strictly inside the simplex.
    pub fn interior_density(&mut self) -> StrategyDensity {
        StrategyDensity::from_weight(self.rng.random_range(1e-6..1.0 - 1e-6)).expect("in range")
    }

    /// `0 < a < b < c` with `a + b < c`.
    pub fn strong_pd(&mut self) -> PrisonersDilemmaParams {
        let a = self.rng.random_range(0.1..3.0);
        let b = a + self.rng.random_range(0.1..3.0);
        let c = a + b + self.rng.random_range(0.1..3.0);
        PrisonersDilemmaParams::new(a, b, c).expect("ordered")
    }

    pub fn unit(&mut self) -> f64 {
        self.rng.random_range(0.0..1.0)
    }
}

fn strategy(d: StrategyDensity, p0: f64, p1: f64) -> QuantumStrategy {
    QuantumStrategy::new(d, p0, p1).expect("finite phases")
}

fn players(phases: &PhaseProfile, x: StrategyDensity, y: StrategyDensity) -> (QuantumStrategy, QuantumStrategy) {
    (
        strategy(x, phases.xi0, phases.xi1),
        strategy(y, phases.upsilon0, phases.upsilon1),
    )
}

pub fn check_classical_limit(s: &mut Sampler, n: usize) -> CheckOutcome {
    let g0 = EntanglementParam::new(0.0).expect("zero");
    let mut worst = 0.0_f64;
    for _ in 0..n {
        let (a, phases, x, y) = (s.matrix(), s.phases(), s.density(), s.density());
        let (alpha, beta) = players(&phases, x, y);
        let r = (quantum_payoff(g0, &alpha, &beta, &a) - classical_payoff(&x, &y, &a)).abs();
        worst = worst.max(r);
    }
    CheckOutcome::new("classical_limit", n, worst, 1e-12)
}

pub fn check_decomposition_equivalence(s: &mut Sampler, n: usize, inject_sign_fault: bool) -> CheckOutcome {
    let mut worst = 0.0_f64;
    for _ in 0..n {
        let (a, gamma, phases) = (s.matrix(), s.gamma(), s.phases());
        let (x, y) = (s.interior_density(), s.interior_density());
        let (alpha, beta) = players(&phases, x, y);
        let mut d = effective_decomposition(gamma, &phases, &a);
        if inject_sign_fault {
            d = d.with_flipped_correlation_sign();
        }
        let r = (payoff_from_decomposition(&d, &x, &y) - quantum_payoff(gamma, &alpha, &beta, &a)).abs();
        worst = worst.max(r);
    }
    CheckOutcome::new("decomposition_equivalence", n, worst, 1e-10)
}

pub fn check_pseudoclassical_mixture(s: &mut Sampler, n: usize) -> CheckOutcome {
    let phases = PhaseProfile::pseudoclassical();
    let mut worst = 0.0_f64;
    for _ in 0..n {
        let (a, gamma, x, y) = (s.matrix(), s.gamma(), s.density(), s.density());
        let (alpha, beta) = players(&phases, x, y);
        let (sg, cg) = gamma.radians().sin_cos();
        let mix = cg * cg * classical_payoff(&x, &y, &a) + sg * sg * classical_payoff(&y, &x, &a);
        worst = worst.max((quantum_payoff(gamma, &alpha, &beta, &a) - mix).abs());
    }
    CheckOutcome::new("pseudoclassical_mixture", n, worst, 1e-12)
}

pub fn check_pseudoclassical_diagonal(s: &mut Sampler, n: usize) -> CheckOutcome {
    let phases = PhaseProfile::pseudoclassical();
    let mut worst = 0.0_f64;
    for _ in 0..n {
        let (a, gamma, x) = (s.matrix(), s.gamma(), s.density());
        let (alpha, beta) = players(&phases, x, x);
        worst = worst.max((quantum_payoff(gamma, &alpha, &beta, &a) - classical_payoff(&x, &x, &a)).abs());
    }
    CheckOutcome::new("pseudoclassical_diagonal", n, worst, 1e-12)
}

pub fn check_self_adjoint_quarter_pi(s: &mut Sampler, n: usize) -> CheckOutcome {
    let phases = PhaseProfile::pseudoclassical();
    let gamma = EntanglementParam::new(FRAC_PI_4).expect("in range");
    let mut worst = 0.0_f64;
    for _ in 0..n {
        let (a, x, y) = (s.matrix(), s.density(), s.density());
        let (alpha, beta) = players(&phases, x, y);
        let (beta_first, alpha_second) = players(&phases, y, x);
        let r = (quantum_payoff(gamma, &alpha, &beta, &a) - quantum_payoff(gamma, &beta_first, &alpha_second, &a)).abs();
        worst = worst.max(r);
    }
    CheckOutcome::new("self_adjoint_quarter_pi", n, worst, 1e-12)
}

/// The four named phase classes, both listed representatives each.
pub fn named_class_profiles() -> [PhaseProfile; 8] {
    let q = 0.75 * PI;
    [(0.0, 0.0), (FRAC_PI_2, FRAC_PI_2), (0.0, FRAC_PI_2), (FRAC_PI_2, 0.0), (FRAC_PI_4, FRAC_PI_4), (q, q), (FRAC_PI_4, q), (q, FRAC_PI_4)]
        .map(|(a, b)| PhaseProfile::symmetric(a, b).expect("finite"))
}

pub fn check_correlation_vanishing(s: &mut Sampler, n: usize) -> CheckOutcome {
    let mut worst = 0.0_f64;
    for phases in named_class_profiles() {
        for _ in 0..n {
            let (a, gamma) = (s.matrix(), s.gamma());
            worst = worst.max(effective_decomposition(gamma, &phases, &a).correlation_coefficient.abs());
        }
    }
    CheckOutcome::new("correlation_vanishing", 8 * n, worst, 1e-12)
}

pub fn check_unitarity(s: &mut Sampler, n: usize) -> CheckOutcome {
    let mut worst = 0.0_f64;
    for _ in 0..n {
        let (gamma, phases, x, y) = (s.gamma(), s.phases(), s.density(), s.density());
        let (alpha, beta) = players(&phases, x, y);
        let u = strategy_unitary(&alpha);
        // U U† = I
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = num_complex::Complex64::new(0.0, 0.0);
                for k in 0..2 {
                    acc += u[i][k] * u[j][k].conj();
                }
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((acc - target).norm());
            }
        }
        worst = worst.max((correlated_state(gamma, &alpha, &beta).norm_sqr() - 1.0).abs());
    }
    CheckOutcome::new("unitarity", n, worst, 1e-12)
}

/// Closed-form pseudoclassical dilemma equilibria against the solver and
/// the lattice oracle. Two residuals: solver (tolerance 1e-6) and oracle
/// (tolerance 2e-3).
pub fn check_pd_closed_forms(s: &mut Sampler, instances: usize, gammas: usize, settings: &SolverSettings) -> Result<[CheckOutcome; 2]> {
    let mut solver_worst = 0.0_f64;
    let mut oracle_worst = 0.0_f64;
    let grid = crate::scenarios::gamma_grid(gammas)?;
    for _ in 0..instances {
        let p = s.strong_pd();
        for &g in &grid {
            let gamma = EntanglementParam::new(g)?;
            let closed = pd_pseudoclassical_equilibrium(&p, gamma);
            let game = QuantumGame::new(gamma, PhaseProfile::pseudoclassical(), p.matrix());
            let numeric = symmetric_nash(&game, settings)?;
            solver_worst = solver_worst.max(equilibrium_set_distance(&closed.equilibria, &numeric.equilibria));
            let oracle = brute_force_nash(&game, DEFAULT_ORACLE_GRID)?;
            for e in &closed.equilibria {
                oracle_worst = oracle_worst.max(oracle.distance_to_flagged(e.t_star));
            }
        }
    }
    let n = instances * gammas;
    Ok([
        CheckOutcome::new("pd_closed_form_vs_solver", n, solver_worst, 1e-6),
        CheckOutcome::new("pd_closed_form_vs_oracle", n, oracle_worst, 2e-3),
    ])
}

pub fn run_all(options: &VerifyOptions) -> Result<VerificationReport> {
    let mut s = Sampler::new(options.seed);
    let n = options.samples;
    let mut checks = vec![
        check_unitarity(&mut s, n),
        check_classical_limit(&mut s, n),
        check_decomposition_equivalence(&mut s, n, options.inject_sign_fault),
        check_pseudoclassical_mixture(&mut s, n),
        check_pseudoclassical_diagonal(&mut s, n),
        check_self_adjoint_quarter_pi(&mut s, n),
        check_correlation_vanishing(&mut s, n / 10),
    ];
    checks.extend(check_pd_closed_forms(&mut s, 3, 11, &options.settings)?);
    Ok(VerificationReport {
        seed: options.seed,
        checks,
    })
}
