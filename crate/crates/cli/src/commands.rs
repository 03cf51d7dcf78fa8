use std::f64::consts::FRAC_PI_2;
use std::fmt::Write as _;

use qgame_core::equilibrium::{check_pareto_nash_coincidence, symmetric_nash, QuantumGame};
use qgame_core::game::{classical_payoff, conjugate_payoff};
use qgame_core::quantum::{
    classify_phase_profile, effective_decomposition, payoff_from_decomposition, quantum_payoff,
    quantum_payoff_player2, EntanglementParam, QuantumStrategy,
};
use qgame_core::scenarios::{gamma_sweep_matrix, phase_sweep_matrix};
use qgame_core::verify::{run_all, VerifyOptions};

use crate::config::{AngleGrid, RunConfig};
use crate::error::CliError;
use crate::output::{gamma_csv, nash_csv, phase_csv, write_atomic};

type Result<T> = std::result::Result<T, CliError>;

/// Nash and Pareto points closer than this count as coinciding.
pub const COINCIDENCE_TOL: f64 = 1e-6;

/// Text for stdout. Sweep CSVs go to `--out` when given, else to stdout.
pub fn payoff(c: &RunConfig) -> Result<String> {
    let a = c.require_matrix()?;
    let gamma = EntanglementParam::new(c.require_gamma()?)?;
    let phases = c.phases.profile()?;
    let (x, y) = match (c.x, c.y) {
        (Some(x), Some(y)) => (x, y),
        _ => return Err(CliError::config("payoff needs both --x and --y densities")),
    };
    let alpha = QuantumStrategy::new(x, phases.xi0, phases.xi1)?;
    let beta = QuantumStrategy::new(y, phases.upsilon0, phases.upsilon1)?;
    let q1 = quantum_payoff(gamma, &alpha, &beta, &a);
    let q2 = quantum_payoff_player2(gamma, &alpha, &beta, &a);
    let decomposed = payoff_from_decomposition(&effective_decomposition(gamma, &phases, &a), &x, &y);
    if !(q1.is_finite() && q2.is_finite() && decomposed.is_finite()) {
        return Err(CliError::Numeric("payoff evaluated to a non-finite value".into()));
    }
    let mut s = String::new();
    writeln!(s, "phase_class = {}", classify_phase_profile(&phases).as_str()).unwrap();
    writeln!(s, "classical_payoff = {:?}", classical_payoff(&x, &y, &a)).unwrap();
    writeln!(s, "conjugate_payoff = {:?}", conjugate_payoff(&x, &y, &a)).unwrap();
    writeln!(s, "quantum_payoff_player1 = {q1:?}").unwrap();
    writeln!(s, "quantum_payoff_player2 = {q2:?}").unwrap();
    writeln!(s, "decomposition_residual = {:e}", (decomposed - q1).abs()).unwrap();
    Ok(s)
}

pub fn nash(c: &RunConfig) -> Result<String> {
    let a = c.require_matrix()?;
    let g = c.require_gamma()?;
    let game = QuantumGame::new(EntanglementParam::new(g)?, c.phases.profile()?, a);
    let report = symmetric_nash(&game, &c.settings()?)?;
    let mut s = String::new();
    writeln!(s, "equilibria = {}", report.len()).unwrap();
    if report.is_empty() {
        writeln!(s, "warning: best-response map has no symmetric fixed point on the scan grid").unwrap();
    }
    for e in &report.equilibria {
        write!(
            s,
            "  t_star = {:?}  payoff_classical = {:?}  payoff_quantum = {:?}  kind = {}  pareto_dominant = {}",
            e.t_star,
            e.payoff_classical,
            e.payoff_quantum,
            e.kind.as_str(),
            e.pareto_dominant
        )
        .unwrap();
        if let Some((lo, hi)) = e.interval {
            write!(s, "  interval = [{lo:?}, {hi:?}]").unwrap();
        }
        s.push('\n');
    }
    writeln!(
        s,
        "pareto_optimum: t = {:?}  payoff = {:?}",
        report.pareto_optimum.t, report.pareto_optimum.payoff
    )
    .unwrap();
    writeln!(s, "coincidence = {}", check_pareto_nash_coincidence(&report, COINCIDENCE_TOL)).unwrap();
    if let Some(path) = &c.out {
        write_atomic(path, &nash_csv(g, &report))?;
    }
    Ok(s)
}

/// Warns on stderr about grid points recorded without an exact equilibrium.
fn note_approximate(regrets: impl Iterator<Item = f64>) {
    let (n, worst) = regrets
        .filter(|&r| r > 0.0)
        .fold((0usize, 0.0_f64), |(n, w), r| (n + 1, w.max(r)));
    if n > 0 {
        eprintln!(
            "note: {n} grid points have no symmetric equilibrium; recorded the least-regret profile (max regret {worst:e})"
        );
    }
}

fn emit_csv(c: &RunConfig, csv: String) -> Result<String> {
    match &c.out {
        Some(path) => {
            write_atomic(path, &csv)?;
            Ok(String::new())
        }
        None => Ok(csv),
    }
}

pub fn sweep_gamma(c: &RunConfig) -> Result<String> {
    let a = c.require_matrix()?;
    let grid = match c.gamma {
        None => AngleGrid::Range { min: 0.0, max: FRAC_PI_2, count: 101 },
        Some(g @ AngleGrid::Range { .. }) => g,
        Some(AngleGrid::Single(_)) => {
            return Err(CliError::config("sweep-gamma needs --gamma min:max:count"));
        }
    };
    let records = gamma_sweep_matrix(&a, &c.phases.profile()?, &grid.points(), &c.settings()?)?;
    note_approximate(records.iter().map(|r| r.regret));
    emit_csv(c, gamma_csv(&records))
}

pub fn sweep_phases(c: &RunConfig) -> Result<String> {
    let a = c.require_matrix()?;
    let xi0 = c.xi0.unwrap_or(AngleGrid::Range { min: -0.4, max: 0.4, count: 21 });
    let xi1 = c.xi1.unwrap_or(AngleGrid::Range {
        min: FRAC_PI_2 - 0.4,
        max: FRAC_PI_2 + 0.4,
        count: 21,
    });
    let gamma = c.gamma.unwrap_or(AngleGrid::Range { min: 0.0, max: FRAC_PI_2, count: 5 });
    let records = phase_sweep_matrix(&a, &gamma.points(), &xi0.points(), &xi1.points(), &c.settings()?)?;
    note_approximate(records.iter().map(|r| r.regret));
    emit_csv(c, phase_csv(&records))
}

/// Prints the per-check report; fails with a verify error if any check fails.
pub fn verify(c: &RunConfig, inject_sign_fault: bool) -> Result<String> {
    let options = VerifyOptions {
        seed: c.seed,
        samples: c.samples,
        inject_sign_fault,
        settings: c.settings()?,
    };
    let report = run_all(&options)?;
    let mut s = String::new();
    writeln!(s, "seed = {}", report.seed).unwrap();
    for k in &report.checks {
        writeln!(
            s,
            "{} {}  samples = {}  max_residual = {:e}  tolerance = {:e}",
            if k.passed { "PASS" } else { "FAIL" },
            k.name,
            k.samples,
            k.max_residual,
            k.tolerance
        )
        .unwrap();
    }
    let failed: Vec<&str> = report.checks.iter().filter(|k| !k.passed).map(|k| k.name).collect();
    if failed.is_empty() {
        writeln!(s, "all {} checks passed", report.checks.len()).unwrap();
        Ok(s)
    } else {
        print!("{s}");
        Err(CliError::Verify(format!(
            "{} of {} checks failed: {}",
            failed.len(),
            report.checks.len(),
            failed.join(", ")
        )))
    }
}
