use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};

use crate::error::{Error, Result};

/// Angle tolerance used when matching a profile against the named classes.
pub const PHASE_MATCH_TOL: f64 = 1e-9;

/// Strategy phases `(ξ0, ξ1)` of the first player and `(υ0, υ1)` of the
/// second. The phases are fixed external parameters; only densities are
/// optimized.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseProfile {
    pub xi0: f64,
    pub xi1: f64,
    pub upsilon0: f64,
    pub upsilon1: f64,
}

impl PhaseProfile {
    pub fn new(xi0: f64, xi1: f64, upsilon0: f64, upsilon1: f64) -> Result<Self> {
        for (name, value) in [
            ("xi0", xi0),
            ("xi1", xi1),
            ("upsilon0", upsilon0),
            ("upsilon1", upsilon1),
        ] {
            if !value.is_finite() {
                return Err(Error::NonFinitePhase { name, value });
            }
        }
        Ok(Self {
            xi0,
            xi1,
            upsilon0,
            upsilon1,
        })
    }

    /// Both players share the phases, `υ_i = ξ_i`.
    pub fn symmetric(xi0: f64, xi1: f64) -> Result<Self> {
        Self::new(xi0, xi1, xi0, xi1)
    }

    pub fn trivial() -> Self {
        Self::symmetric_unchecked(0.0, 0.0)
    }

    pub fn pseudoclassical() -> Self {
        Self::symmetric_unchecked(0.0, FRAC_PI_2)
    }

    pub fn case3() -> Self {
        Self::symmetric_unchecked(FRAC_PI_4, FRAC_PI_4)
    }

    pub fn case4() -> Self {
        Self::symmetric_unchecked(FRAC_PI_4, 3.0 * FRAC_PI_4)
    }

    fn symmetric_unchecked(xi0: f64, xi1: f64) -> Self {
        Self {
            xi0,
            xi1,
            upsilon0: xi0,
            upsilon1: xi1,
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.xi0 == self.upsilon0 && self.xi1 == self.upsilon1
    }

    pub fn xi(&self) -> [f64; 2] {
        [self.xi0, self.xi1]
    }

    pub fn upsilon(&self) -> [f64; 2] {
        [self.upsilon0, self.upsilon1]
    }

    /// All four angles reduced into `[0, 2π)`.
    pub fn canonical(&self) -> Self {
        let wrap = |a: f64| {
            let r = a.rem_euclid(TAU);
            if r >= TAU {
                0.0
            } else {
                r
            }
        };
        Self {
            xi0: wrap(self.xi0),
            xi1: wrap(self.xi1),
            upsilon0: wrap(self.upsilon0),
            upsilon1: wrap(self.upsilon1),
        }
    }
}

/// The phase subsets on which the correlation contribution vanishes, plus
/// everything else.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhaseClass {
    Trivial,
    Pseudoclassical,
    SeparableCase3,
    SeparableCase4,
    Generic,
}

impl PhaseClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            PhaseClass::Trivial => "trivial",
            PhaseClass::Pseudoclassical => "pseudoclassical",
            PhaseClass::SeparableCase3 => "case3",
            PhaseClass::SeparableCase4 => "case4",
            PhaseClass::Generic => "generic",
        }
    }
}

fn congruent_mod_pi(angle: f64, target: f64) -> bool {
    let r = (angle - target).rem_euclid(PI);
    r <= PHASE_MATCH_TOL || PI - r <= PHASE_MATCH_TOL
}

/// Classifies a symmetric profile by `(ξ0, ξ1)` modulo π. Asymmetric
/// profiles are always `Generic`.
pub fn classify_phase_profile(phases: &PhaseProfile) -> PhaseClass {
    let symmetric = congruent_mod_pi(phases.upsilon0, phases.xi0)
        && congruent_mod_pi(phases.upsilon1, phases.xi1);
    if !symmetric {
        return PhaseClass::Generic;
    }
    let q = 3.0 * FRAC_PI_4;
    let table: [(PhaseClass, [(f64, f64); 2]); 4] = [
        (PhaseClass::Trivial, [(0.0, 0.0), (FRAC_PI_2, FRAC_PI_2)]),
        (PhaseClass::Pseudoclassical, [(0.0, FRAC_PI_2), (FRAC_PI_2, 0.0)]),
        (PhaseClass::SeparableCase3, [(FRAC_PI_4, FRAC_PI_4), (q, q)]),
        (PhaseClass::SeparableCase4, [(FRAC_PI_4, q), (q, FRAC_PI_4)]),
    ];
    for (class, pairs) in table {
        if pairs
            .iter()
            .any(|&(a, b)| congruent_mod_pi(phases.xi0, a) && congruent_mod_pi(phases.xi1, b))
        {
            return class;
        }
    }
    PhaseClass::Generic
}
