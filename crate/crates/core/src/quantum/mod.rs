//! Two-qubit entanglement scheme for symmetric 2×2 games.
//!
//! Each player's strategy is a single-qubit unitary built from amplitudes
//! `α_i = √x_i · e^{iξ_i}`. The joint state is
//! `J†(U_α ⊗ U_β) J |00⟩` with `J = exp(-i γ/2 σ_y⊗σ_y)`, and the payoff
//! operator is diagonal in the computational basis, so the first player's
//! payoff is `Σ_ij A_ij |Ψ_ij|²`.
//!
//! The state-vector route in [`state`] is the ground truth. [`decomposition`]
//! rewrites the same payoff as a classical bilinear form over an effective
//! matrix plus a density-dependent correlation term.

mod decomposition;
mod phases;
mod state;

pub use decomposition::{
    case3_matrix, case4_matrix, effective_decomposition, payoff_from_decomposition,
    pseudoclassical_matrix, EffectiveMatrixDecomposition,
};
pub use phases::{classify_phase_profile, PhaseClass, PhaseProfile, PHASE_MATCH_TOL};
pub use state::{
    correlated_state, entangled_initial_state, payoff_from_state, quantum_payoff,
    quantum_payoff_player2, strategy_unitary, EntanglementParam, QuantumStrategy, StateVector4,
    Unitary2,
};
