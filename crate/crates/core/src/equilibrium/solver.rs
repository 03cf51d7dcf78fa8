use crate::error::{Error, Result};

use super::payoff::PayoffFunction;
use super::search::{bisect, golden_section_max, linspace};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverSettings {
    /// Grid points for the best-response and fixed-point scans.
    pub scan_points: usize,
    /// Interval width at which bisection and golden-section refinement stop.
    pub refine_tol: f64,
    /// Equilibria closer than this are reported once.
    pub merge_tol: f64,
    /// Payoff slack, relative to the payoff scale, for best responses and
    /// for accepting a candidate as an equilibrium.
    pub payoff_tol: f64,
}

impl Default for SolverSettings {
    fn default() -> Self {
        Self {
            scan_points: 2001,
            refine_tol: 1e-9,
            merge_tol: 1e-6,
            payoff_tol: 1e-7,
        }
    }
}

impl SolverSettings {
    pub fn validate(&self) -> Result<()> {
        if self.scan_points < 3 {
            return Err(Error::InvalidSettings(format!(
                "scan_points must be at least 3, got {}",
                self.scan_points
            )));
        }
        for (name, v) in [
            ("refine_tol", self.refine_tol),
            ("merge_tol", self.merge_tol),
            ("payoff_tol", self.payoff_tol),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidSettings(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EquilibriumKind {
    PureBoundary,
    MixedInterior,
    IndifferenceContinuum,
}

impl EquilibriumKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            EquilibriumKind::PureBoundary => "pure",
            EquilibriumKind::MixedInterior => "mixed",
            EquilibriumKind::IndifferenceContinuum => "continuum",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquilibriumPoint {
    /// Weight on strategy index 1.
    pub t_star: f64,
    pub payoff_classical: f64,
    pub payoff_quantum: f64,
    pub kind: EquilibriumKind,
    /// Highest common payoff among all equilibria of the report.
    pub pareto_dominant: bool,
    /// Extent of an indifference continuum; `t_star` is its lower end.
    pub interval: Option<(f64, f64)>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParetoOptimum {
    pub t: f64,
    pub payoff: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EquilibriumReport {
    /// Sorted by `t_star`.
    pub equilibria: Vec<EquilibriumPoint>,
    pub pareto_optimum: ParetoOptimum,
    pub settings: SolverSettings,
}

impl EquilibriumReport {
    /// The Pareto-dominant equilibrium with the smallest `t_star`.
    pub fn primary(&self) -> Option<&EquilibriumPoint> {
        self.equilibria.iter().find(|e| e.pareto_dominant)
    }

    pub fn len(&self) -> usize {
        self.equilibria.len()
    }

    pub fn is_empty(&self) -> bool {
        self.equilibria.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum BestResponse {
    /// Payoff constant in `t` within tolerance: every `t` is a best response.
    WholeInterval { value: f64 },
    Points { points: Vec<f64>, value: f64 },
}

impl BestResponse {
    pub fn value(&self) -> f64 {
        match self {
            BestResponse::WholeInterval { value } | BestResponse::Points { value, .. } => *value,
        }
    }

    pub fn contains(&self, t: f64, tol: f64) -> bool {
        match self {
            BestResponse::WholeInterval { .. } => (0.0..=1.0).contains(&t),
            BestResponse::Points { points, .. } => points.iter().any(|p| (p - t).abs() <= tol),
        }
    }
}

fn checked(p: &impl PayoffFunction, t: f64, s: f64) -> Result<f64> {
    let v = p.payoff(t, s);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinitePayoff { t, s })
    }
}

/// Scale for relative payoff tolerances: the largest diagonal payoff
/// magnitude seen on the grid, at least 1.
fn payoff_scale(diagonal: &[f64]) -> f64 {
    diagonal.iter().fold(1.0_f64, |m, v| m.max(v.abs()))
}

/// Maximizers of `t ↦ Π(t, s)`: grid scan, golden-section refinement of each
/// interior local maximum, then every candidate within `tol` of the best.
pub fn best_response(
    s: f64,
    payoff: &impl PayoffFunction,
    tol: f64,
    settings: &SolverSettings,
) -> Result<BestResponse> {
    settings.validate()?;
    let grid = linspace(0.0, 1.0, settings.scan_points);
    let values = grid
        .iter()
        .map(|&t| checked(payoff, t, s))
        .collect::<Result<Vec<_>>>()?;

    let (min, max) = values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    if max - min <= tol {
        return Ok(BestResponse::WholeInterval { value: max });
    }

    let n = grid.len();
    let mut candidates = vec![(grid[0], values[0]), (grid[n - 1], values[n - 1])];
    for k in 1..n - 1 {
        if values[k] >= values[k - 1] && values[k] >= values[k + 1] && values[k] >= max - tol.max(1e-3 * (max - min)) {
            let (t, v) = golden_section_max(|t| payoff.payoff(t, s), grid[k - 1], grid[k + 1], settings.refine_tol);
            let (t, v) = if v >= values[k] { (t, v) } else { (grid[k], values[k]) };
            candidates.push((t, v));
        }
    }
    let best = candidates.iter().fold(f64::NEG_INFINITY, |m, c| m.max(c.1));
    if !best.is_finite() {
        return Err(Error::NonFinitePayoff { t: f64::NAN, s });
    }
    let mut points: Vec<f64> = candidates
        .into_iter()
        .filter(|&(_, v)| v >= best - tol)
        .map(|(t, _)| t)
        .collect();
    points.sort_by(f64::total_cmp);
    points.dedup_by(|b, a| (*b - *a).abs() <= settings.merge_tol);
    Ok(BestResponse::Points { points, value: best })
}

/// `max_t Π(t, s) − Π(s, s)`, never negative.
fn regret(payoff: &impl PayoffFunction, s: f64, settings: &SolverSettings) -> Result<f64> {
    let br = best_response(s, payoff, 0.0, settings)?;
    let own = checked(payoff, s, s)?;
    Ok((br.value() - own).max(0.0))
}

/// All symmetric equilibria `t*` with `t* ∈ BR(t*)`.
///
/// Candidates are both pure strategies and every sign change of the
/// diagonal gradient on the scan grid (bisected to `refine_tol`). A
/// candidate is kept only if no deviation gains more than
/// `payoff_tol · scale`, so stationary minima and saddle points are rejected.
/// Runs of grid points where the gradient vanishes and deviations gain
/// nothing are reported as one indifference continuum.
pub fn symmetric_nash(
    payoff: &impl PayoffFunction,
    settings: &SolverSettings,
) -> Result<EquilibriumReport> {
    settings.validate()?;
    let grid = linspace(0.0, 1.0, settings.scan_points);
    let diagonal = grid
        .iter()
        .map(|&s| checked(payoff, s, s))
        .collect::<Result<Vec<_>>>()?;
    let gradient: Vec<f64> = grid.iter().map(|&s| payoff.diagonal_gradient(s)).collect();
    if let Some(k) = gradient.iter().position(|g| !g.is_finite()) {
        return Err(Error::NonFinitePayoff { t: grid[k], s: grid[k] });
    }

    let scale = payoff_scale(&diagonal);
    let accept = settings.payoff_tol * scale;
    let flat = 1e-3 * accept;

    // indifference continua
    let mut continua: Vec<(f64, f64)> = Vec::new();
    let mut k = 0;
    while k < grid.len() {
        if gradient[k].abs() > flat {
            k += 1;
            continue;
        }
        let start = k;
        while k + 1 < grid.len() && gradient[k + 1].abs() <= flat {
            k += 1;
        }
        if k > start {
            let (lo, hi) = (grid[start], grid[k]);
            let mid = grid[(start + k) / 2];
            let mut no_gain = true;
            for s in [lo, mid, hi] {
                if regret(payoff, s, settings)? > accept {
                    no_gain = false;
                    break;
                }
            }
            if no_gain {
                continua.push((lo, hi));
            }
        }
        k += 1;
    }
    let in_continuum = |t: f64| {
        continua
            .iter()
            .any(|&(lo, hi)| t >= lo - settings.merge_tol && t <= hi + settings.merge_tol)
    };

    let mut candidates = vec![0.0, 1.0];
    for k in 0..grid.len() - 1 {
        let (g0, g1) = (gradient[k], gradient[k + 1]);
        if g0 == 0.0 {
            candidates.push(grid[k]);
        } else if g0.signum() != g1.signum() && g1 != 0.0 {
            let root = bisect(
                |s| payoff.diagonal_gradient(s),
                grid[k],
                grid[k + 1],
                g0,
                settings.refine_tol,
            );
            candidates.push(root);
        }
    }
    candidates.sort_by(f64::total_cmp);

    let mut accepted: Vec<f64> = Vec::new();
    for t in candidates {
        if in_continuum(t) {
            continue;
        }
        if accepted.last().is_some_and(|&last| (t - last).abs() <= settings.merge_tol) {
            // keep the exact boundary value when a root lands next to it
            if t == 1.0 {
                *accepted.last_mut().unwrap() = 1.0;
            }
            continue;
        }
        if regret(payoff, t, settings)? <= accept {
            accepted.push(t);
        }
    }

    let mut equilibria: Vec<EquilibriumPoint> = accepted
        .into_iter()
        .map(|t| EquilibriumPoint {
            t_star: t,
            payoff_classical: payoff.reference_diagonal(t),
            payoff_quantum: payoff.payoff(t, t),
            kind: if t == 0.0 || t == 1.0 {
                EquilibriumKind::PureBoundary
            } else {
                EquilibriumKind::MixedInterior
            },
            pareto_dominant: false,
            interval: None,
        })
        .chain(continua.iter().map(|&(lo, hi)| EquilibriumPoint {
            t_star: lo,
            payoff_classical: payoff.reference_diagonal(lo),
            payoff_quantum: payoff.payoff(lo, lo),
            kind: EquilibriumKind::IndifferenceContinuum,
            pareto_dominant: false,
            interval: Some((lo, hi)),
        }))
        .collect();
    equilibria.sort_by(|a, b| a.t_star.total_cmp(&b.t_star));

    let best = equilibria
        .iter()
        .fold(f64::NEG_INFINITY, |m, e| m.max(e.payoff_quantum));
    for e in equilibria.iter_mut() {
        e.pareto_dominant = e.payoff_quantum >= best - 1e-9 * scale;
    }

    let pareto = pareto_optimum(|t| payoff.payoff(t, t), settings)?;
    Ok(EquilibriumReport {
        equilibria,
        pareto_optimum: pareto,
        settings: *settings,
    })
}

/// Symmetric profile with the smallest incentive to deviate. Used where the
/// best-response map has no fixed point, which happens when the payoff is
/// convex in the player's own density and best responses jump between the
/// pure strategies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LeastRegret {
    pub t: f64,
    /// `max_t' Π(t', t) − Π(t, t)` at `t`.
    pub regret: f64,
    pub payoff_classical: f64,
    pub payoff_quantum: f64,
}

/// Minimizes the regret over a coarse grid, then refines around the best
/// grid point by golden-section search.
pub fn least_regret_point(payoff: &impl PayoffFunction, settings: &SolverSettings) -> Result<LeastRegret> {
    settings.validate()?;
    let coarse = linspace(0.0, 1.0, settings.scan_points.div_ceil(10).max(3));
    let values = coarse
        .iter()
        .map(|&t| regret(payoff, t, settings))
        .collect::<Result<Vec<_>>>()?;
    let k = values
        .iter()
        .enumerate()
        .fold(0, |best, (i, &v)| if v < values[best] { i } else { best });
    let (lo, hi) = (coarse[k.saturating_sub(1)], coarse[(k + 1).min(coarse.len() - 1)]);
    // golden-section maximizes; regret is finite here, so a failing
    // evaluation inside the bracket is mapped to a very poor value
    let (t, neg) = golden_section_max(
        |t| regret(payoff, t, settings).map(|r| -r).unwrap_or(f64::NEG_INFINITY),
        lo,
        hi,
        settings.refine_tol,
    );
    let (t, r) = if -neg < values[k] { (t, -neg) } else { (coarse[k], values[k]) };
    Ok(LeastRegret {
        t,
        regret: r,
        payoff_classical: payoff.reference_diagonal(t),
        payoff_quantum: checked(payoff, t, t)?,
    })
}

/// Global maximizer of the common payoff `t ↦ Π(t, t)`; ties go to the
/// smaller `t`.
pub fn pareto_optimum(diag_payoff: impl Fn(f64) -> f64, settings: &SolverSettings) -> Result<ParetoOptimum> {
    settings.validate()?;
    let grid = linspace(0.0, 1.0, settings.scan_points);
    let values: Vec<f64> = grid.iter().map(|&t| diag_payoff(t)).collect();
    if let Some(k) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinitePayoff { t: grid[k], s: grid[k] });
    }
    let n = grid.len();
    let mut candidates = vec![(grid[0], values[0])];
    for k in 1..n - 1 {
        if values[k] > values[k - 1] && values[k] >= values[k + 1] {
            let (t, v) = golden_section_max(&diag_payoff, grid[k - 1], grid[k + 1], settings.refine_tol);
            candidates.push(if v >= values[k] { (t, v) } else { (grid[k], values[k]) });
        }
    }
    candidates.push((grid[n - 1], values[n - 1]));

    let tie = 1e-12 * payoff_scale(&values);
    let best = candidates.iter().fold(f64::NEG_INFINITY, |m, c| m.max(c.1));
    let (t, payoff) = candidates
        .into_iter()
        .find(|&(_, v)| v >= best - tie)
        .expect("at least one candidate");
    Ok(ParetoOptimum { t, payoff })
}

/// Whether some reported equilibrium sits within `tol` of the Pareto
/// optimum.
pub fn check_pareto_nash_coincidence(report: &EquilibriumReport, tol: f64) -> bool {
    let target = report.pareto_optimum.t;
    report.equilibria.iter().any(|e| match e.interval {
        Some((lo, hi)) => target >= lo - tol && target <= hi + tol,
        None => (e.t_star - target).abs() <= tol,
    })
}
