//! Run configuration: `key = value` files, flag overrides and angle tokens.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6, PI};
use std::fmt;
use std::path::PathBuf;

use qgame_core::equilibrium::{search::linspace, SolverSettings};
use qgame_core::game::{GameMatrix2, PrisonersDilemmaParams, StrategyDensity};
use qgame_core::quantum::PhaseProfile;

use crate::error::CliError;

type Result<T> = std::result::Result<T, CliError>;

/// Keys accepted in config files, in serialization order.
pub const KEYS: [&str; 13] = [
    "pd", "matrix", "gamma", "phases", "x", "y", "xi0", "xi1", "grid", "tol", "seed", "samples", "out",
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MatrixSource {
    Pd(PrisonersDilemmaParams),
    Explicit(GameMatrix2),
}

impl MatrixSource {
    pub fn matrix(&self) -> GameMatrix2 {
        match self {
            MatrixSource::Pd(p) => p.matrix(),
            MatrixSource::Explicit(a) => *a,
        }
    }
}

/// A single angle or a uniform grid `min:max:count`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AngleGrid {
    Single(f64),
    Range { min: f64, max: f64, count: usize },
}

impl AngleGrid {
    pub fn points(&self) -> Vec<f64> {
        match *self {
            AngleGrid::Single(v) => vec![v],
            AngleGrid::Range { min, max, count } => linspace(min, max, count),
        }
    }
}

impl fmt::Display for AngleGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AngleGrid::Single(v) => write!(f, "{v:?}"),
            AngleGrid::Range { min, max, count } => write!(f, "{min:?}:{max:?}:{count}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedPhases {
    Trivial,
    Pseudo,
    Case3,
    Case4,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PhaseSpec {
    Named(NamedPhases),
    Explicit { xi0: f64, xi1: f64 },
}

impl PhaseSpec {
    pub fn profile(&self) -> Result<PhaseProfile> {
        Ok(match *self {
            PhaseSpec::Named(NamedPhases::Trivial) => PhaseProfile::trivial(),
            PhaseSpec::Named(NamedPhases::Pseudo) => PhaseProfile::pseudoclassical(),
            PhaseSpec::Named(NamedPhases::Case3) => PhaseProfile::case3(),
            PhaseSpec::Named(NamedPhases::Case4) => PhaseProfile::case4(),
            PhaseSpec::Explicit { xi0, xi1 } => PhaseProfile::symmetric(xi0, xi1)?,
        })
    }
}

impl fmt::Display for PhaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PhaseSpec::Named(NamedPhases::Trivial) => f.write_str("trivial"),
            PhaseSpec::Named(NamedPhases::Pseudo) => f.write_str("pseudo"),
            PhaseSpec::Named(NamedPhases::Case3) => f.write_str("case3"),
            PhaseSpec::Named(NamedPhases::Case4) => f.write_str("case4"),
            PhaseSpec::Explicit { xi0, xi1 } => write!(f, "{xi0:?},{xi1:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub matrix: Option<MatrixSource>,
    pub gamma: Option<AngleGrid>,
    pub phases: PhaseSpec,
    pub x: Option<StrategyDensity>,
    pub y: Option<StrategyDensity>,
    pub xi0: Option<AngleGrid>,
    pub xi1: Option<AngleGrid>,
    /// Scan points of the best-response and fixed-point searches.
    pub grid: usize,
    /// Payoff tolerance of the solver.
    pub tol: f64,
    pub seed: u64,
    pub samples: usize,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        let s = SolverSettings::default();
        Self {
            matrix: None,
            gamma: None,
            phases: PhaseSpec::Named(NamedPhases::Pseudo),
            x: None,
            y: None,
            xi0: None,
            xi1: None,
            grid: s.scan_points,
            tol: s.payoff_tol,
            seed: 2004,
            samples: 1000,
            out: None,
        }
    }
}

impl RunConfig {
    pub fn settings(&self) -> Result<SolverSettings> {
        let s = SolverSettings {
            scan_points: self.grid,
            payoff_tol: self.tol,
            ..SolverSettings::default()
        };
        s.validate()?;
        Ok(s)
    }

    pub fn require_matrix(&self) -> Result<GameMatrix2> {
        self.matrix
            .map(|m| m.matrix())
            .ok_or_else(|| CliError::config("a game is required: pass --pd a,b,c or --matrix a00,a01,a10,a11"))
    }

    pub fn require_gamma(&self) -> Result<f64> {
        match self.gamma {
            Some(AngleGrid::Single(g)) => Ok(g),
            Some(AngleGrid::Range { .. }) => Err(CliError::config("this command takes a single --gamma value, not a sweep")),
            None => Err(CliError::config("missing --gamma")),
        }
    }

    /// Builds a config from `(key, value)` pairs. Later pairs win.
    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, &'a str)>) -> Result<Self> {
        let mut map: BTreeMap<&str, &str> = BTreeMap::new();
        for (k, v) in pairs {
            if !KEYS.contains(&k) {
                return Err(CliError::config(format!("unknown config key `{k}`")));
            }
            map.insert(k, v);
        }
        let mut c = RunConfig::default();
        c.matrix = match (map.get("pd"), map.get("matrix")) {
            (Some(_), Some(_)) => {
                return Err(CliError::config("give exactly one of `pd` and `matrix`"));
            }
            (Some(v), None) => {
                let [a, b, cc] = parse_reals::<3>(v, "pd")?;
                Some(MatrixSource::Pd(PrisonersDilemmaParams::new(a, b, cc)?))
            }
            (None, Some(v)) => Some(MatrixSource::Explicit(GameMatrix2::from_row_major(parse_reals::<4>(v, "matrix")?)?)),
            (None, None) => None,
        };
        if let Some(v) = map.get("gamma") {
            c.gamma = Some(parse_angle_grid(v, "gamma")?);
        }
        if let Some(v) = map.get("phases") {
            c.phases = parse_phases(v)?;
        }
        if let Some(v) = map.get("x") {
            c.x = Some(parse_density(v, "x")?);
        }
        if let Some(v) = map.get("y") {
            c.y = Some(parse_density(v, "y")?);
        }
        if let Some(v) = map.get("xi0") {
            c.xi0 = Some(parse_angle_grid(v, "xi0")?);
        }
        if let Some(v) = map.get("xi1") {
            c.xi1 = Some(parse_angle_grid(v, "xi1")?);
        }
        if let Some(v) = map.get("grid") {
            c.grid = parse_int(v, "grid")?;
        }
        if let Some(v) = map.get("tol") {
            c.tol = parse_real(v, "tol")?;
            if !(c.tol > 0.0) || !c.tol.is_finite() {
                return Err(CliError::config(format!("tol must be positive, got {v}")));
            }
        }
        if let Some(v) = map.get("seed") {
            c.seed = parse_int(v, "seed")?;
        }
        if let Some(v) = map.get("samples") {
            c.samples = parse_int(v, "samples")?;
            if c.samples == 0 {
                return Err(CliError::config("samples must be at least 1"));
            }
        }
        if let Some(v) = map.get("out") {
            if v.is_empty() {
                return Err(CliError::config("empty output path"));
            }
            c.out = Some(PathBuf::from(v));
        }
        c.settings()?;
        Ok(c)
    }

    /// Parses a config file body. Blank lines and `#` comments are skipped.
    #[cfg(test)]
    pub fn parse_file(text: &str) -> Result<Self> {
        Self::from_pairs(file_pairs(text)?)
    }

    /// `key = value` lines that [`RunConfig::parse_file`] reads back to an equal config.
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| {
            out.push_str(k);
            out.push_str(" = ");
            out.push_str(&v);
            out.push('\n');
        };
        match &self.matrix {
            Some(MatrixSource::Pd(p)) => line("pd", format!("{:?},{:?},{:?}", p.a(), p.b(), p.c())),
            Some(MatrixSource::Explicit(a)) => {
                let [a00, a01, a10, a11] = a.row_major();
                line("matrix", format!("{a00:?},{a01:?},{a10:?},{a11:?}"));
            }
            None => {}
        }
        if let Some(g) = &self.gamma {
            line("gamma", g.to_string());
        }
        line("phases", self.phases.to_string());
        for (k, d) in [("x", &self.x), ("y", &self.y)] {
            if let Some(d) = d {
                line(k, format!("{:?},{:?}", d.x0(), d.x1()));
            }
        }
        for (k, g) in [("xi0", &self.xi0), ("xi1", &self.xi1)] {
            if let Some(g) = g {
                line(k, g.to_string());
            }
        }
        line("grid", self.grid.to_string());
        line("tol", format!("{:?}", self.tol));
        line("seed", self.seed.to_string());
        line("samples", self.samples.to_string());
        if let Some(p) = &self.out {
            line("out", p.display().to_string());
        }
        out
    }
}

/// Splits a config file into `(key, value)` pairs.
pub fn file_pairs(text: &str) -> Result<Vec<(&str, &str)>> {
    let mut pairs = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| CliError::config(format!("config line {}: expected `key = value`", n + 1)))?;
        pairs.push((k.trim(), v.trim()));
    }
    Ok(pairs)
}

fn parse_real(s: &str, what: &str) -> Result<f64> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| CliError::config(format!("{what}: `{s}` is not a number")))?;
    if !v.is_finite() {
        return Err(CliError::config(format!("{what}: `{s}` is not finite")));
    }
    Ok(v)
}

fn parse_int<T: std::str::FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| CliError::config(format!("{what}: `{s}` is not a nonnegative integer")))
}

fn parse_reals<const N: usize>(s: &str, what: &str) -> Result<[f64; N]> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != N {
        return Err(CliError::config(format!("{what}: expected {N} comma-separated numbers, got `{s}`")));
    }
    let mut out = [0.0; N];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = parse_real(p, what)?;
    }
    Ok(out)
}

fn parse_density(s: &str, what: &str) -> Result<StrategyDensity> {
    let [x0, x1] = parse_reals::<2>(s, what)?;
    StrategyDensity::new(x0, x1).map_err(|e| CliError::config(format!("{what}: {e}")))
}

/// Parses an angle in radians. Besides plain numbers this accepts `pi`,
/// `pi/n`, `k*pi`, `kpi/n` and `k*pi/n` with an optional leading minus.
/// `pi/2`, `pi/3`, `pi/4` and `pi/6` map to the library constants.
pub fn parse_angle(s: &str) -> Result<f64> {
    let t = s.trim();
    if !t.contains("pi") {
        return parse_real(t, "angle");
    }
    let bad = || CliError::config(format!("angle: cannot parse `{s}`"));
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest.trim()),
        None => (false, t),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim().parse::<u32>().map_err(|_| bad())?)),
        None => (body, None),
    };
    let k = match num.strip_suffix("pi").ok_or_else(bad)?.trim() {
        "" => 1.0,
        coef => {
            let coef = coef.strip_suffix('*').unwrap_or(coef).trim();
            coef.parse::<f64>().map_err(|_| bad())?
        }
    };
    if !k.is_finite() {
        return Err(bad());
    }
    let v = match (k == 1.0, den) {
        (true, Some(2)) => FRAC_PI_2,
        (true, Some(3)) => FRAC_PI_3,
        (true, Some(4)) => FRAC_PI_4,
        (true, Some(6)) => FRAC_PI_6,
        (_, Some(0)) => return Err(bad()),
        (_, Some(n)) => k * PI / n as f64,
        (_, None) => k * PI,
    };
    Ok(if neg { -v } else { v })
}

fn parse_angle_grid(s: &str, what: &str) -> Result<AngleGrid> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [v] => Ok(AngleGrid::Single(parse_angle(v)?)),
        [lo, hi, n] => {
            let count: usize = parse_int(n, what)?;
            if count < 2 {
                return Err(CliError::config(format!("{what}: sweep count must be at least 2, got {count}")));
            }
            let (min, max) = (parse_angle(lo)?, parse_angle(hi)?);
            if min > max {
                return Err(CliError::config(format!("{what}: sweep bounds out of order in `{s}`")));
            }
            Ok(AngleGrid::Range { min, max, count })
        }
        _ => Err(CliError::config(format!("{what}: expected a value or min:max:count, got `{s}`"))),
    }
}

fn parse_phases(s: &str) -> Result<PhaseSpec> {
    Ok(match s.trim() {
        "trivial" => PhaseSpec::Named(NamedPhases::Trivial),
        "pseudo" | "pseudoclassical" => PhaseSpec::Named(NamedPhases::Pseudo),
        "case3" => PhaseSpec::Named(NamedPhases::Case3),
        "case4" => PhaseSpec::Named(NamedPhases::Case4),
        other => match other.split_once(',') {
            Some((a, b)) => PhaseSpec::Explicit {
                xi0: parse_angle(a)?,
                xi1: parse_angle(b)?,
            },
            None => {
                return Err(CliError::config(format!(
                    "phases: expected trivial, pseudo, case3, case4 or xi0,xi1, got `{s}`"
                )))
            }
        },
    })
}
