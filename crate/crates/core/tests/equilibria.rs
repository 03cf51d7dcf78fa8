use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use qgame_core::equilibrium::{
    brute_force_nash, check_pareto_nash_coincidence, symmetric_nash, ClassicalGame,
    PayoffFunction, QuantumGame, SolverSettings, StateVectorGame,
};
use qgame_core::game::{GameMatrix2, PrisonersDilemmaParams};
use qgame_core::quantum::{EntanglementParam, PhaseProfile};
use qgame_core::scenarios::{
    equilibrium_set_distance, gamma_sweep, interior_density, pd_payoff_formula,
    pd_pseudoclassical_equilibrium, PdBranch, SweepBranch,
};
use qgame_core::verify::Sampler;

fn pd(a: f64, b: f64, c: f64) -> PrisonersDilemmaParams {
    PrisonersDilemmaParams::new(a, b, c).unwrap()
}

fn gamma(g: f64) -> EntanglementParam {
    EntanglementParam::new(g).unwrap()
}

/// No unilateral deviation among `samples` uniformly spaced and pseudo-random
/// weights gains more than `slack`.
fn survives_deviations(game: &impl PayoffFunction, t: f64, samples: usize, slack: f64) -> bool {
    let own = game.payoff(t, t);
    let mut state = 0x9E37_79B9_7F4A_7C15u64;
    (0..samples).all(|k| {
        // splitmix64
        state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
        let dev = if k < 2 { k as f64 } else { (z >> 11) as f64 / (1u64 << 53) as f64 };
        game.payoff(dev, t) <= own + slack
    })
}

#[test]
fn reported_equilibria_survive_deviation_tests() {
    let settings = SolverSettings::default();
    let mut s = Sampler::new(11);
    for _ in 0..10 {
        let a = s.matrix();
        let g = s.gamma();
        for phases in [PhaseProfile::pseudoclassical(), s.symmetric_phases(), PhaseProfile::case3()] {
            let game = QuantumGame::new(g, phases, a);
            let report = symmetric_nash(&game, &settings).unwrap();
            if report.is_empty() {
                // generic phases can leave the best-response map without a fixed point
                let oracle = brute_force_nash(&game, 1001).unwrap();
                assert!(oracle.clusters.is_empty(), "missed {:?} for {a} {phases:?}", oracle.clusters);
                continue;
            }
            for e in &report.equilibria {
                assert!(
                    survives_deviations(&game, e.t_star, 10_000, 1e-6),
                    "{e:?} for {a} {phases:?}"
                );
            }
        }
    }
}

#[test]
fn solver_agrees_with_lattice_oracle_on_dilemmas() {
    let settings = SolverSettings::default();
    let grid_n = 1001;
    let tol = 2.0 / grid_n as f64;
    for (a, b, c) in [(1.0, 2.0, 4.0), (1.0, 2.0, 5.0), (2.0, 3.0, 4.0), (0.5, 1.0, 3.0)] {
        for k in 0..=10 {
            let g = gamma(FRAC_PI_2 * k as f64 / 10.0);
            let game = QuantumGame::new(g, PhaseProfile::pseudoclassical(), pd(a, b, c).matrix());
            let report = symmetric_nash(&game, &settings).unwrap();
            let oracle = brute_force_nash(&game, grid_n).unwrap();
            for e in &report.equilibria {
                assert!(oracle.distance_to_flagged(e.t_star) <= tol, "{e:?} ({a},{b},{c}) k={k}");
            }
            for cl in &oracle.clusters {
                let near = report
                    .equilibria
                    .iter()
                    .any(|e| e.t_star >= cl.lo - tol && e.t_star <= cl.hi + tol);
                assert!(near, "oracle cluster {cl:?} unmatched ({a},{b},{c}) k={k}");
            }
        }
    }
}

#[test]
fn state_vector_and_decomposition_solvers_agree() {
    let settings = SolverSettings::default();
    let a = pd(1.0, 2.0, 4.0).matrix();
    for (xi0, xi1) in [(0.2, 1.4), (-0.3, FRAC_PI_2 + 0.25), (0.0, FRAC_PI_2)] {
        for g in [0.3, 0.8, 1.3] {
            let phases = PhaseProfile::symmetric(xi0, xi1).unwrap();
            let fast = symmetric_nash(&QuantumGame::new(gamma(g), phases, a), &settings).unwrap();
            let slow = symmetric_nash(
                &StateVectorGame { gamma: gamma(g), phases, matrix: a },
                &settings,
            )
            .unwrap();
            let d = equilibrium_set_distance(&fast.equilibria, &slow.equilibria);
            assert!(d < 1e-6, "{fast:?} vs {slow:?}");
        }
    }
}

#[test]
fn quarter_pi_nash_is_pareto_efficient_for_random_dilemmas() {
    let settings = SolverSettings::default();
    let mut s = Sampler::new(24);
    for _ in 0..20 {
        let p = s.strong_pd();
        let game = QuantumGame::new(gamma(FRAC_PI_4), PhaseProfile::pseudoclassical(), p.matrix());
        let report = symmetric_nash(&game, &settings).unwrap();
        assert!(check_pareto_nash_coincidence(&report, 1e-6), "{p:?} {report:?}");
    }
}

#[test]
fn self_adjoint_classical_games_have_efficient_equilibria() {
    let settings = SolverSettings::default();
    let mut s = Sampler::new(5);
    for _ in 0..20 {
        let m = s.matrix();
        let sym = GameMatrix2::new([[m[(0, 0)], m[(0, 1)]], [m[(0, 1)], m[(1, 1)]]]).unwrap();
        let report = symmetric_nash(&ClassicalGame::new(sym), &settings).unwrap();
        assert!(check_pareto_nash_coincidence(&report, 1e-6), "{sym} {report:?}");
    }
}

#[test]
fn pure_fallback_follows_gradient_sign() {
    let settings = SolverSettings::default();
    // D(s) = (c cos²γ − b) + s(a+b−c) keeps one sign on [0,1]
    for (p, g, expected) in [
        (pd(1.0, 2.0, 4.0), 0.0, 1.0),
        (pd(1.0, 2.0, 4.0), 1.2, 0.0),
        (pd(2.0, 3.0, 4.0), FRAC_PI_2, 0.0),
        (pd(2.0, 3.0, 4.0), 0.1, 1.0),
    ] {
        let r = symmetric_nash(&qgame_core::scenarios::pd_pseudoclassical_game(&p, gamma(g)), &settings).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r.equilibria[0].t_star, expected);
    }
}

#[test]
fn closed_form_matches_solver_across_gamma() {
    let settings = SolverSettings::default();
    for p in [pd(1.0, 2.0, 4.0), pd(1.0, 2.0, 5.0), pd(2.0, 3.0, 4.0), pd(0.3, 0.5, 2.0)] {
        for k in 0..=100 {
            let g = gamma(FRAC_PI_2 * k as f64 / 100.0);
            let closed = pd_pseudoclassical_equilibrium(&p, g);
            let numeric = symmetric_nash(&qgame_core::scenarios::pd_pseudoclassical_game(&p, g), &settings).unwrap();
            let d = equilibrium_set_distance(&closed.equilibria, &numeric.equilibria);
            assert!(d < 1e-6, "{p:?} k={k}: {closed:?} vs {numeric:?}");
            if closed.branch == PdBranch::Interior {
                let formula = pd_payoff_formula(&p, g);
                assert!(formula.applicable);
                assert!((formula.value - closed.equilibria[0].payoff_quantum).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn interior_density_is_monotone_in_gamma() {
    let settings = SolverSettings::default();
    let p = pd(1.0, 2.0, 5.0);
    let recs = gamma_sweep(&p, &PhaseProfile::pseudoclassical(), 101, &settings).unwrap();
    let interior: Vec<_> = recs.iter().filter(|r| r.branch == SweepBranch::Interior).collect();
    assert!(interior.len() > 10);
    for w in interior.windows(2) {
        assert!(w[1].t_star <= w[0].t_star + 1e-9);
    }
    for r in &recs {
        assert!((r.payoff_quantum_at_eq - r.payoff_classical_at_eq).abs() < 1e-10);
        let t = interior_density(&p, gamma(r.gamma)).clamp(0.0, 1.0);
        assert!((r.t_star - t).abs() < 1e-6);
    }
}

#[test]
fn phases_without_fixed_point_fall_back_to_least_regret() {
    use qgame_core::equilibrium::least_regret_point;
    use qgame_core::scenarios::gamma_sweep_matrix;
    let settings = SolverSettings::default();
    let a = pd(1.0, 2.0, 4.0).matrix();
    let phases = PhaseProfile::symmetric(-0.4, FRAC_PI_2 - 0.4).unwrap();
    let g = gamma(3.0 * std::f64::consts::PI / 8.0);
    let game = QuantumGame::new(g, phases, a);
    assert!(symmetric_nash(&game, &settings).unwrap().is_empty());
    let sv = StateVectorGame { gamma: g, phases, matrix: a };
    assert!(brute_force_nash(&sv, 1001).unwrap().clusters.is_empty());

    let lr = least_regret_point(&game, &settings).unwrap();
    assert!(lr.regret > 0.0);
    for t in [0.0, 0.5, 1.0] {
        let own = game.payoff(t, t);
        let best = (0..=1000).map(|k| game.payoff(k as f64 / 1000.0, t)).fold(f64::NEG_INFINITY, f64::max);
        assert!(lr.regret <= best - own + 1e-9, "t={t}");
    }

    let recs = gamma_sweep_matrix(&a, &phases, &[0.0, g.radians()], &settings).unwrap();
    assert_eq!(recs[0].equilibrium_count, 1);
    assert_eq!(recs[0].regret, 0.0);
    assert_eq!(recs[1].equilibrium_count, 0);
    assert_eq!(recs[1].t_star, lr.t);
}
