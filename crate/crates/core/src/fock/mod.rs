//! Truncated two-mode Fock space.
//!
//! The lattice with truncation `N` holds the kets `|na, nb⟩` with
//! `na, nb ≤ N`. Operators never leave the lattice they are built on, so
//! relations that need one extra layer are evaluated with operators built on
//! `N + 1`; whatever residual lands on the top layers is reported as a
//! truncation boundary rather than ignored.
//!
//! `C_q` and `𝔠(k)` are fixed to 1: `|q,k⟩` has a divergent norm and no
//! canonical normalisation.

pub mod calculus;
pub mod lattice;
pub mod norm;
pub mod operators;
pub mod states;
pub mod verify;

pub use calculus::{
    check_phase_derivative, check_radial_pde, radial_equation_exact, FdCheck, FdOptions,
};
pub use lattice::{FockIndex, FockVector};
pub use norm::{norm_growth_diagnostic, NormGrowth, NormRow, DIVERGENCE_FLOOR};
pub use operators::{build_ladder_ops, LadderOps, SparseOperator};
pub use states::{
    eigen_state_qk, entangled_state_exact, entangled_state_vector, overlap_boundary_polynomial,
    overlap_boundary_term, overlap_polynomial, overlap_qk, pair_coherent_state, polar,
    EigenstateParams,
};
pub use verify::{
    check_operator_algebra, check_xi_eigenrelations, check_xi_eigenrelations_exact, verify_k_eigen,
    verify_pair_coherent, verify_q_eigen,
};
