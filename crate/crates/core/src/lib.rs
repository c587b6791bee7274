//! Coherence, entanglement and Bell nonlocality of two-qubit states drawn
//! from W-type states, their dephased versions and the renormalized XXZ
//! block.
//!
//! Everything is generic over the real scalar ([`Real`], implemented for
//! `f32` and `f64`); the `*64`/`*32` aliases fix the precision.

// `!(x <= tol)` is used on purpose so that NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod channels;
pub mod closed_form;
pub mod error;
pub mod linalg;
pub mod matrix_text;
pub mod measures;
pub mod relations;
pub mod scalar;
pub mod states;
pub mod xxz;

pub use channels::{
    apply_pf_correlated, apply_pf_each_qubit, pf_kraus, pf_pair_profiles, y_factor, PfParams,
};
pub use error::{Error, Result};
pub use linalg::ComplexMatrix;
pub use measures::{
    bell_m, bell_n, coherence_degree_pair, coherence_degree_single, concurrence, profile, purity,
    ResourceProfile,
};
pub use relations::{
    boundary_d2, classify_region, identity_defect, pure_state_relations, BoundaryKind, RegionLabel,
};
pub use scalar::{Complex, Real};
pub use states::{
    horodecki_state, min_coherence_state, phi_plus, reduce_pair, w_state, DensityMatrix,
    PairSelector, WParams,
};
pub use xxz::{
    ground_energy, ground_state, q_of_delta, rg_flow, rg_step, xxz_pair_profile, GroundVariant,
    RgTrace, XxzParams,
};

pub type Matrix64 = ComplexMatrix<f64>;
pub type Matrix32 = ComplexMatrix<f32>;
pub type State64 = DensityMatrix<f64>;
pub type State32 = DensityMatrix<f32>;
pub type Profile64 = ResourceProfile<f64>;
pub type Profile32 = ResourceProfile<f32>;
pub type WParams64 = WParams<f64>;
pub type WParams32 = WParams<f32>;
pub type PfParams64 = PfParams<f64>;
pub type PfParams32 = PfParams<f32>;
pub type XxzParams64 = XxzParams<f64>;
pub type XxzParams32 = XxzParams<f32>;
