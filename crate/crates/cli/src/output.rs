//! CSV formatting and atomic file output.

use std::io::Write;
use std::path::Path;

use qgame_core::equilibrium::EquilibriumReport;
use qgame_core::scenarios::{GammaSweepRecord, PhaseSweepRecord};

use crate::error::CliError;

pub const GAMMA_HEADER: &str = "gamma,t_star,payoff_classical,payoff_quantum,branch,eq_count";
pub const PHASE_HEADER: &str = "xi0,xi1,gamma,t_star,payoff_classical,payoff_quantum";
pub const NASH_HEADER: &str = "gamma,t_star,payoff_classical,payoff_quantum,kind,pareto_dominant";

/// 17 significant digits in scientific notation.
pub fn real(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn gamma_csv(records: &[GammaSweepRecord]) -> String {
    let mut out = String::with_capacity(96 * (records.len() + 1));
    out.push_str(GAMMA_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            real(r.gamma),
            real(r.t_star),
            real(r.payoff_classical_at_eq),
            real(r.payoff_quantum_at_eq),
            r.branch.as_str(),
            r.equilibrium_count
        ));
    }
    out
}

pub fn phase_csv(records: &[PhaseSweepRecord]) -> String {
    let mut out = String::with_capacity(140 * (records.len() + 1));
    out.push_str(PHASE_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            real(r.xi0),
            real(r.xi1),
            real(r.gamma),
            real(r.t_star),
            real(r.payoff_classical),
            real(r.payoff_quantum)
        ));
    }
    out
}

pub fn nash_csv(gamma: f64, report: &EquilibriumReport) -> String {
    let mut out = String::from(NASH_HEADER);
    out.push('\n');
    for e in &report.equilibria {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            real(gamma),
            real(e.t_star),
            real(e.payoff_classical),
            real(e.payoff_quantum),
            e.kind.as_str(),
            e.pareto_dominant
        ));
    }
    out
}

/// Writes through a temporary file in the target directory and renames it
/// into place, so a failed run never leaves a partial file behind.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let io = |e: std::io::Error| CliError::Io(format!("cannot write {}: {e}", path.display()));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(contents.as_bytes()).map_err(io)?;
    tmp.as_file().sync_all().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reals_have_seventeen_digits_and_round_trip() {
        assert_eq!(real(1.0), "1.0000000000000000e0");
        assert_eq!(real(0.0), "0.0000000000000000e0");
        for v in [std::f64::consts::FRAC_PI_4, 1.0 / 3.0, -2.5e-300, 1e300] {
            assert_eq!(real(v).parse::<f64>().unwrap(), v);
        }
    }

    #[test]
    fn atomic_write_leaves_nothing_on_failure() {
        let dir = tempfile::tempdir().unwrap();
        let missing = dir.path().join("no/such/dir/out.csv");
        assert!(matches!(write_atomic(&missing, "x"), Err(CliError::Io(_))));
        let good = dir.path().join("out.csv");
        write_atomic(&good, "a,b\n").unwrap();
        assert_eq!(std::fs::read_to_string(&good).unwrap(), "a,b\n");
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}
