//! Prisoner's dilemma closed forms and the γ / phase sweeps built on the
//! general solvers.
//!
//! With the pseudoclassical phases the effective matrix is
//! `cos²γ·A + sin²γ·Aᵀ`, and for `A = [[b, 0], [c, a]]` the diagonal
//! gradient of the payoff is linear in the common density:
//!
//! ```text
//! D(s) = (c·cos²γ − b) + s·(a + b − c)
//! ```
//!
//! Its root `t* = (b − c·cos²γ) / (a + b − c)` is the interior candidate,
//! and at that point the common payoff is
//! `(ab − (c²/4)·sin²2γ) / (a + b − c)`. The same expression with `sin²γ`
//! in place of `cos²γ` is sometimes quoted for `t*`; it fails the γ = 0
//! check (clamped to `[0, 1]` it gives `t* = 0` instead of the classical
//! `t* = 1`) and is kept here only as
//! [`sine_variant_interior_density`] for regression tests.

use rayon::prelude::*;

use crate::equilibrium::search::linspace;
use crate::equilibrium::{
    least_regret_point, symmetric_nash, ClassicalGame, EquilibriumKind, EquilibriumPoint, EquilibriumReport,
    ParetoOptimum, QuantumGame, SolverSettings,
};
use crate::error::{Error, Result};
use crate::game::{diagonal_payoff, GameMatrix2, PrisonersDilemmaParams, StrategyDensity};
use crate::quantum::{case3_matrix, EntanglementParam, PhaseProfile};

/// Closed-form densities this close to 0 or 1 are snapped onto the boundary.
const SNAP_TOL: f64 = 1e-12;

pub fn pd_classical_equilibrium(p: &PrisonersDilemmaParams) -> EquilibriumPoint {
    EquilibriumPoint {
        t_star: 1.0,
        payoff_classical: p.a(),
        payoff_quantum: p.a(),
        kind: EquilibriumKind::PureBoundary,
        pareto_dominant: true,
        interval: None,
    }
}

/// `(b − c·cos²γ) / (a + b − c)`; unbounded when `a + b = c`.
pub fn interior_density(p: &PrisonersDilemmaParams, gamma: EntanglementParam) -> f64 {
    let c2 = gamma.radians().cos().powi(2);
    (p.b() - p.c() * c2) / (p.a() + p.b() - p.c())
}

/// `(b − c·sin²γ) / (a + b − c)`. Not an equilibrium density; see the module
/// docs.
pub fn sine_variant_interior_density(p: &PrisonersDilemmaParams, gamma: EntanglementParam) -> f64 {
    let s2 = gamma.radians().sin().powi(2);
    (p.b() - p.c() * s2) / (p.a() + p.b() - p.c())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PayoffFormula {
    pub value: f64,
    /// `a + b < c` and the interior density lies in `[0, 1]`.
    pub applicable: bool,
}

/// `(ab − (c²/4)·sin²2γ) / (a + b − c)`, flagged when the interior branch is
/// not the equilibrium.
pub fn pd_payoff_formula(p: &PrisonersDilemmaParams, gamma: EntanglementParam) -> PayoffFormula {
    let (a, b, c) = (p.a(), p.b(), p.c());
    let s2g = (2.0 * gamma.radians()).sin().powi(2);
    let value = (a * b - c * c / 4.0 * s2g) / (a + b - c);
    let t = interior_density(p, gamma);
    PayoffFormula {
        value,
        applicable: p.is_strong_temptation() && (-SNAP_TOL..=1.0 + SNAP_TOL).contains(&t),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PdBranch {
    /// `a + b < c` with the interior density in `[0, 1]`.
    Interior,
    /// Defection `t* = 1` is the only equilibrium.
    DefectBoundary,
    /// Cooperation `t* = 0` is the only equilibrium (payoff `b`).
    CooperateBoundary,
    /// `a + b > c` with both pure strategies, and possibly a mixed one, in
    /// equilibrium.
    Coexistence,
    /// `a + b = c` with a vanishing gradient: every density is an equilibrium.
    Indifferent,
}

impl PdBranch {
    pub fn as_str(&self) -> &'static str {
        match self {
            PdBranch::Interior => "interior",
            PdBranch::DefectBoundary => "defect",
            PdBranch::CooperateBoundary => "cooperate",
            PdBranch::Coexistence => "coexistence",
            PdBranch::Indifferent => "indifferent",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PdClosedForm {
    pub branch: PdBranch,
    /// Root of the diagonal gradient before clamping; infinite if `a + b = c`.
    pub interior_candidate: f64,
    pub equilibria: Vec<EquilibriumPoint>,
    pub pareto_optimum: ParetoOptimum,
}

impl PdClosedForm {
    /// `t* = 0` with payoff `b` in the `a + b > c` regime.
    pub fn has_cooperative_equilibrium(&self, p: &PrisonersDilemmaParams) -> bool {
        !p.is_strong_temptation() && self.equilibria.iter().any(|e| e.t_star == 0.0)
    }

    pub fn into_report(self) -> EquilibriumReport {
        EquilibriumReport {
            equilibria: self.equilibria,
            pareto_optimum: self.pareto_optimum,
            settings: SolverSettings::default(),
        }
    }
}

fn snap(t: f64) -> f64 {
    if t.abs() <= SNAP_TOL {
        0.0
    } else if (t - 1.0).abs() <= SNAP_TOL {
        1.0
    } else {
        t
    }
}

/// Equilibria of the pseudoclassical prisoner's dilemma from the linear
/// diagonal gradient, without any numerical search.
pub fn pd_pseudoclassical_equilibrium(
    p: &PrisonersDilemmaParams,
    gamma: EntanglementParam,
) -> PdClosedForm {
    let (a, b, c) = (p.a(), p.b(), p.c());
    let c2 = gamma.radians().cos().powi(2);
    let slope = a + b - c;
    let d0 = c * c2 - b;
    let matrix = p.matrix();
    let point = |t: f64, kind: EquilibriumKind| {
        let v = diagonal_payoff(&StrategyDensity::from_weight_unchecked(t), &matrix);
        EquilibriumPoint {
            t_star: t,
            payoff_classical: v,
            payoff_quantum: v,
            kind,
            pareto_dominant: false,
            interval: None,
        }
    };
    let kind_at = |t: f64| {
        if t == 0.0 || t == 1.0 {
            EquilibriumKind::PureBoundary
        } else {
            EquilibriumKind::MixedInterior
        }
    };

    let (branch, interior_candidate, mut equilibria) = if slope == 0.0 {
        if d0 > 0.0 {
            (PdBranch::DefectBoundary, f64::INFINITY, vec![point(1.0, EquilibriumKind::PureBoundary)])
        } else if d0 < 0.0 {
            (PdBranch::CooperateBoundary, f64::INFINITY, vec![point(0.0, EquilibriumKind::PureBoundary)])
        } else {
            let mut e = point(0.0, EquilibriumKind::IndifferenceContinuum);
            e.interval = Some((0.0, 1.0));
            (PdBranch::Indifferent, f64::INFINITY, vec![e])
        }
    } else {
        let r = snap(-d0 / slope);
        if slope < 0.0 {
            let t = r.clamp(0.0, 1.0);
            let branch = if r > 1.0 {
                PdBranch::DefectBoundary
            } else if r < 0.0 {
                PdBranch::CooperateBoundary
            } else {
                PdBranch::Interior
            };
            (branch, r, vec![point(t, kind_at(t))])
        } else {
            // D(s) = slope·(s − r) is increasing: 0 is an equilibrium iff
            // r ≥ 0, 1 iff r ≤ 1, and r itself when inside.
            let mut eqs = Vec::new();
            if r >= 0.0 {
                eqs.push(point(0.0, EquilibriumKind::PureBoundary));
            }
            if r > 0.0 && r < 1.0 {
                eqs.push(point(r, EquilibriumKind::MixedInterior));
            }
            if r <= 1.0 {
                eqs.push(point(1.0, EquilibriumKind::PureBoundary));
            }
            let branch = match eqs.len() {
                1 if eqs[0].t_star == 0.0 => PdBranch::CooperateBoundary,
                1 => PdBranch::DefectBoundary,
                _ => PdBranch::Coexistence,
            };
            (branch, r, eqs)
        }
    };

    let best = equilibria
        .iter()
        .fold(f64::NEG_INFINITY, |m, e| m.max(e.payoff_quantum));
    for e in equilibria.iter_mut() {
        e.pareto_dominant = e.payoff_quantum >= best - 1e-12 * best.abs().max(1.0);
    }

    PdClosedForm {
        branch,
        interior_candidate,
        equilibria,
        pareto_optimum: pd_pareto_optimum(p),
    }
}

/// Maximizer of `b(1−t)² + c·t(1−t) + a·t²` on `[0, 1]`, ties to smaller `t`.
pub fn pd_pareto_optimum(p: &PrisonersDilemmaParams) -> ParetoOptimum {
    let (a, b, c) = (p.a(), p.b(), p.c());
    let curvature = a + b - c;
    let diag = |t: f64| b * (1.0 - t).powi(2) + c * t * (1.0 - t) + a * t * t;
    let mut candidates = vec![0.0, 1.0];
    if curvature < 0.0 {
        let t = (c - 2.0 * b) / (2.0 * (c - a - b));
        if t > 0.0 && t < 1.0 {
            candidates.push(t);
        }
    }
    let best = candidates.iter().map(|&t| diag(t)).fold(f64::NEG_INFINITY, f64::max);
    let t = candidates
        .into_iter()
        .filter(|&t| diag(t) >= best - 1e-12)
        .fold(f64::INFINITY, f64::min);
    ParetoOptimum { t, payoff: diag(t) }
}

/// Which part of `[0, 1]` the reported equilibrium sits in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SweepBranch {
    Interior,
    BoundaryLow,
    BoundaryHigh,
}

impl SweepBranch {
    pub fn of(t: f64) -> Self {
        if t <= 0.0 {
            SweepBranch::BoundaryLow
        } else if t >= 1.0 {
            SweepBranch::BoundaryHigh
        } else {
            SweepBranch::Interior
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            SweepBranch::Interior => "interior",
            SweepBranch::BoundaryLow => "boundary_low",
            SweepBranch::BoundaryHigh => "boundary_high",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaSweepRecord {
    pub gamma: f64,
    pub t_star: f64,
    pub payoff_classical_at_eq: f64,
    pub payoff_quantum_at_eq: f64,
    pub branch: SweepBranch,
    /// Zero when the best-response map has no fixed point; the record then
    /// holds the least-regret profile.
    pub equilibrium_count: usize,
    /// Largest deviation gain at `t_star`; zero for an exact equilibrium.
    pub regret: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseSweepRecord {
    pub xi0: f64,
    pub xi1: f64,
    pub gamma: f64,
    pub t_star: f64,
    pub payoff_classical: f64,
    pub payoff_quantum: f64,
    /// Largest deviation gain at `t_star`; zero for an exact equilibrium.
    pub regret: f64,
}

/// Recorded profile at one sweep point: the Pareto-dominant equilibrium, or
/// the least-regret profile when there is none.
struct SweepPoint {
    t: f64,
    payoff_classical: f64,
    payoff_quantum: f64,
    count: usize,
    regret: f64,
}

fn sweep_point(game: &QuantumGame, settings: &SolverSettings) -> Result<SweepPoint> {
    let report = symmetric_nash(game, settings)?;
    match report.primary() {
        Some(e) => Ok(SweepPoint {
            t: e.t_star,
            payoff_classical: e.payoff_classical,
            payoff_quantum: e.payoff_quantum,
            count: report.len(),
            regret: 0.0,
        }),
        None => {
            let lr = least_regret_point(game, settings)?;
            Ok(SweepPoint {
                t: lr.t,
                payoff_classical: lr.payoff_classical,
                payoff_quantum: lr.payoff_quantum,
                count: 0,
                regret: lr.regret,
            })
        }
    }
}

fn primary(report: &EquilibriumReport, gamma: EntanglementParam, phases: &PhaseProfile) -> Result<EquilibriumPoint> {
    report.primary().copied().ok_or_else(|| {
        Error::NoEquilibrium(format!(
            "gamma={}, xi=({}, {})",
            gamma.radians(),
            phases.xi0,
            phases.xi1
        ))
    })
}

/// Equilibrium of the quantum game at each `γ` of the grid, in grid order.
/// When several equilibria coexist the Pareto-dominant one is recorded.
/// Points without any symmetric equilibrium record the least-regret profile
/// with `equilibrium_count == 0`.
pub fn gamma_sweep_matrix(
    a: &GameMatrix2,
    phases: &PhaseProfile,
    gammas: &[f64],
    settings: &SolverSettings,
) -> Result<Vec<GammaSweepRecord>> {
    settings.validate()?;
    let gammas = gammas
        .iter()
        .map(|&g| EntanglementParam::new(g))
        .collect::<Result<Vec<_>>>()?;
    gammas
        .par_iter()
        .map(|&gamma| {
            let pt = sweep_point(&QuantumGame::new(gamma, *phases, *a), settings)?;
            Ok(GammaSweepRecord {
                gamma: gamma.radians(),
                t_star: pt.t,
                payoff_classical_at_eq: pt.payoff_classical,
                payoff_quantum_at_eq: pt.payoff_quantum,
                branch: SweepBranch::of(pt.t),
                equilibrium_count: pt.count,
                regret: pt.regret,
            })
        })
        .collect()
}

/// Uniform grid of `n_points ≥ 2` values on `[0, π/2]`.
pub fn gamma_grid(n_points: usize) -> Result<Vec<f64>> {
    if n_points < 2 {
        return Err(Error::InvalidSweep(format!(
            "gamma sweep needs at least 2 points, got {n_points}"
        )));
    }
    Ok(linspace(0.0, std::f64::consts::FRAC_PI_2, n_points))
}

pub fn gamma_sweep(
    p: &PrisonersDilemmaParams,
    phases: &PhaseProfile,
    n_points: usize,
    settings: &SolverSettings,
) -> Result<Vec<GammaSweepRecord>> {
    gamma_sweep_matrix(&p.matrix(), phases, &gamma_grid(n_points)?, settings)
}

/// Equilibria over a `(ξ0, ξ1, γ)` grid with symmetric phases `υ = ξ`.
/// Records come out in lexicographic `(ξ0, ξ1, γ)` index order.
pub fn phase_sweep_matrix(
    a: &GameMatrix2,
    gamma_grid: &[f64],
    xi0_grid: &[f64],
    xi1_grid: &[f64],
    settings: &SolverSettings,
) -> Result<Vec<PhaseSweepRecord>> {
    settings.validate()?;
    if gamma_grid.is_empty() || xi0_grid.is_empty() || xi1_grid.is_empty() {
        return Err(Error::InvalidSweep("phase sweep grids must be nonempty".into()));
    }
    let gammas = gamma_grid
        .iter()
        .map(|&g| EntanglementParam::new(g))
        .collect::<Result<Vec<_>>>()?;
    let mut points = Vec::with_capacity(xi0_grid.len() * xi1_grid.len() * gammas.len());
    for &xi0 in xi0_grid {
        for &xi1 in xi1_grid {
            let phases = PhaseProfile::symmetric(xi0, xi1)?;
            for &gamma in &gammas {
                points.push((phases, gamma));
            }
        }
    }
    points
        .par_iter()
        .map(|&(phases, gamma)| {
            let pt = sweep_point(&QuantumGame::new(gamma, phases, *a), settings)?;
            Ok(PhaseSweepRecord {
                xi0: phases.xi0,
                xi1: phases.xi1,
                gamma: gamma.radians(),
                t_star: pt.t,
                payoff_classical: pt.payoff_classical,
                payoff_quantum: pt.payoff_quantum,
                regret: pt.regret,
            })
        })
        .collect()
}

pub fn phase_sweep(
    p: &PrisonersDilemmaParams,
    gamma_grid: &[f64],
    xi0_grid: &[f64],
    xi1_grid: &[f64],
    settings: &SolverSettings,
) -> Result<Vec<PhaseSweepRecord>> {
    phase_sweep_matrix(&p.matrix(), gamma_grid, xi0_grid, xi1_grid, settings)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Case3Comparison {
    pub gamma: f64,
    /// Equilibrium payoff of the classical game with the case-3 matrix.
    pub case3_payoff: f64,
    /// Equilibrium payoff of the pseudoclassical game with `a` and `b` both
    /// replaced by `(a + b)/2`.
    pub averaged_payoff: f64,
    pub difference: f64,
    pub within_tol: bool,
}

/// Compares the case-3 equilibrium payoff with the pseudoclassical one for
/// the averaged dilemma. The outcome is reported, not assumed.
pub fn case3_average_check(
    p: &PrisonersDilemmaParams,
    gamma: EntanglementParam,
    tol: f64,
    settings: &SolverSettings,
) -> Result<Case3Comparison> {
    let case3 = ClassicalGame::new(case3_matrix(gamma, &p.matrix()));
    let m = 0.5 * (p.a() + p.b());
    let averaged = GameMatrix2::new([[m, 0.0], [p.c(), m]])?;
    let pseudo = QuantumGame::new(gamma, PhaseProfile::pseudoclassical(), averaged);

    let case3_payoff = primary(&symmetric_nash(&case3, settings)?, gamma, &PhaseProfile::case3())?.payoff_quantum;
    let averaged_payoff = primary(&symmetric_nash(&pseudo, settings)?, gamma, &PhaseProfile::pseudoclassical())?.payoff_quantum;
    let difference = case3_payoff - averaged_payoff;
    Ok(Case3Comparison {
        gamma: gamma.radians(),
        case3_payoff,
        averaged_payoff,
        difference,
        within_tol: difference.abs() <= tol,
    })
}

/// Largest distance between the closed-form equilibria and a numerical
/// report, matching each closed-form point to its nearest numerical one and
/// vice versa. Infinite when one side is empty and the other is not.
pub fn equilibrium_set_distance(closed: &[EquilibriumPoint], numeric: &[EquilibriumPoint]) -> f64 {
    let one_way = |from: &[EquilibriumPoint], to: &[EquilibriumPoint]| {
        from.iter()
            .map(|e| {
                to.iter()
                    .map(|f| (e.t_star - f.t_star).abs())
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    };
    one_way(closed, numeric).max(one_way(numeric, closed))
}

/// Convenience: pseudoclassical quantum game for a dilemma.
pub fn pd_pseudoclassical_game(p: &PrisonersDilemmaParams, gamma: EntanglementParam) -> QuantumGame {
    QuantumGame::new(gamma, PhaseProfile::pseudoclassical(), p.matrix())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_6};

    fn pd(a: f64, b: f64, c: f64) -> PrisonersDilemmaParams {
        PrisonersDilemmaParams::new(a, b, c).unwrap()
    }

    fn g(x: f64) -> EntanglementParam {
        EntanglementParam::new(x).unwrap()
    }

    #[test]
    fn classical_equilibrium_examples() {
        for (a, b, c) in [(1.0, 2.0, 4.0), (1.0, 3.0, 5.0), (2.0, 3.0, 4.0)] {
            let e = pd_classical_equilibrium(&pd(a, b, c));
            assert_eq!(e.t_star, 1.0);
            assert_eq!(e.payoff_classical, a);
        }
    }

    #[test]
    fn pseudoclassical_closed_form_examples() {
        let p = pd(1.0, 2.0, 4.0);
        let r = pd_pseudoclassical_equilibrium(&p, g(FRAC_PI_4));
        assert_eq!(r.equilibria.len(), 1);
        assert_eq!(r.equilibria[0].t_star, 0.0);
        assert!((r.equilibria[0].payoff_quantum - 2.0).abs() < 1e-12);
        assert_eq!(r.branch, PdBranch::Interior);

        let r = pd_pseudoclassical_equilibrium(&p, g(FRAC_PI_6));
        assert_eq!(r.equilibria[0].t_star, 1.0);
        assert!((r.equilibria[0].payoff_quantum - 1.0).abs() < 1e-12);

        let gamma = g(0.6f64.sqrt().acos());
        let r = pd_pseudoclassical_equilibrium(&p, gamma);
        assert!((r.equilibria[0].t_star - 0.4).abs() < 1e-12);
        assert!((r.equilibria[0].payoff_quantum - 1.84).abs() < 1e-12);
        assert_eq!(r.equilibria[0].kind, EquilibriumKind::MixedInterior);
    }

    #[test]
    fn weak_temptation_branches() {
        let p = pd(2.0, 3.0, 4.0);
        let r = pd_pseudoclassical_equilibrium(&p, g(FRAC_PI_2));
        assert_eq!(r.branch, PdBranch::CooperateBoundary);
        assert_eq!(r.equilibria.len(), 1);
        assert_eq!(r.equilibria[0].t_star, 0.0);
        assert_eq!(r.equilibria[0].payoff_quantum, 3.0);
        assert!(r.has_cooperative_equilibrium(&p));

        let r = pd_pseudoclassical_equilibrium(&p, g(FRAC_PI_4));
        assert_eq!(r.branch, PdBranch::Coexistence);
        let ts: Vec<f64> = r.equilibria.iter().map(|e| e.t_star).collect();
        assert_eq!(ts, vec![0.0, 1.0]);

        let r = pd_pseudoclassical_equilibrium(&p, g(0.0));
        assert_eq!(r.branch, PdBranch::DefectBoundary);
        assert!(!r.has_cooperative_equilibrium(&p));
    }

    #[test]
    fn payoff_formula_examples() {
        let f = pd_payoff_formula(&pd(1.0, 2.0, 4.0), g(FRAC_PI_4));
        assert!((f.value - 2.0).abs() < 1e-12 && f.applicable);
        let f = pd_payoff_formula(&pd(1.0, 2.0, 5.0), g(FRAC_PI_4));
        assert!((f.value - 2.125).abs() < 1e-12 && f.applicable);
        let f = pd_payoff_formula(&pd(1.0, 2.0, 4.0), g(0.0));
        assert_eq!(f.value, 2.0 / -1.0);
        assert!(!f.applicable);
        assert!(!pd_payoff_formula(&pd(2.0, 3.0, 4.0), g(0.3)).applicable);
    }

    #[test]
    fn sine_variant_fails_classical_limit() {
        let p = pd(1.0, 2.0, 4.0);
        // the cos² root lies beyond 1, so the equilibrium clamps to defection
        assert_eq!(interior_density(&p, g(0.0)), 2.0);
        assert_eq!(interior_density(&p, g(0.0)).clamp(0.0, 1.0), 1.0);
        // the sin² variant predicts full cooperation instead
        assert_eq!(sine_variant_interior_density(&p, g(0.0)), -2.0);
        assert_eq!(sine_variant_interior_density(&p, g(0.0)).clamp(0.0, 1.0), 0.0);
    }

    #[test]
    fn pareto_closed_form() {
        assert_eq!(pd_pareto_optimum(&pd(1.0, 2.0, 4.0)), ParetoOptimum { t: 0.0, payoff: 2.0 });
        let o = pd_pareto_optimum(&pd(1.0, 2.0, 5.0));
        assert!((o.t - 0.25).abs() < 1e-15 && (o.payoff - 2.125).abs() < 1e-12);
        assert_eq!(pd_pareto_optimum(&pd(2.0, 3.0, 4.0)).t, 0.0);
    }

    #[test]
    fn gamma_sweep_endpoints_and_trivial_phases() {
        let s = SolverSettings::default();
        let p = pd(1.0, 2.0, 4.0);
        let recs = gamma_sweep(&p, &PhaseProfile::pseudoclassical(), 2, &s).unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[0].gamma, 0.0);
        assert_eq!(recs[1].gamma, FRAC_PI_2);
        assert_eq!(recs[0].t_star, 1.0);
        assert_eq!(recs[0].payoff_classical_at_eq, 1.0);
        assert_eq!(recs[1].branch, SweepBranch::BoundaryLow);

        let recs = gamma_sweep(&p, &PhaseProfile::trivial(), 7, &s).unwrap();
        for r in &recs {
            assert_eq!((r.t_star, r.payoff_classical_at_eq, r.payoff_quantum_at_eq), (1.0, 1.0, 1.0));
            assert_eq!(r.branch, SweepBranch::BoundaryHigh);
        }
        assert!(gamma_sweep(&p, &PhaseProfile::trivial(), 1, &s).is_err());
    }

    #[test]
    fn phase_sweep_order_and_identities() {
        let s = SolverSettings::default();
        let p = pd(1.0, 2.0, 4.0);
        let recs = phase_sweep(&p, &[0.0, 0.5, 1.0], &[-0.1, 0.0], &[0.0, FRAC_PI_2], &s).unwrap();
        assert_eq!(recs.len(), 12);
        assert_eq!((recs[0].xi0, recs[0].xi1, recs[0].gamma), (-0.1, 0.0, 0.0));
        assert_eq!((recs[1].xi0, recs[1].xi1, recs[1].gamma), (-0.1, 0.0, 0.5));
        assert_eq!((recs[3].xi0, recs[3].xi1), (-0.1, FRAC_PI_2));
        for r in recs.iter().filter(|r| r.xi0 == 0.0 && r.xi1 == FRAC_PI_2) {
            assert!((r.payoff_classical - r.payoff_quantum).abs() < 1e-8);
        }
        for r in recs.iter().filter(|r| r.xi0 == 0.0 && r.xi1 == 0.0) {
            assert_eq!(r.payoff_quantum, 1.0);
        }
        let single = phase_sweep(&p, &[0.3], &[0.1], &[1.2], &s).unwrap();
        assert_eq!(single.len(), 1);
        assert!(phase_sweep(&p, &[], &[0.1], &[1.2], &s).is_err());
    }

    #[test]
    fn case3_average_examples() {
        let s = SolverSettings::default();
        let p = pd(1.0, 2.0, 4.0);
        let r = case3_average_check(&p, g(FRAC_PI_4), 1e-9, &s).unwrap();
        assert!(r.difference.abs() < 1e-9, "{r:?}");
        assert!(r.within_tol);

        let r = case3_average_check(&p, g(0.0), 1e-9, &s).unwrap();
        assert_eq!(r.case3_payoff, 1.0);
        assert_eq!(r.averaged_payoff, 1.5);
        assert!(!r.within_tol);
    }
}
