//! Construction of multiplicative phaseless-Pauli subgroups for maximal
//! dense coding on symmetric basis-superposition states.
//!
//! The pipeline: build the 2^t-order subgroup listing for a t-qubit state
//! ([`subgroup::construct_mgp_subgroups`]), find the operated-qubit sets the
//! state admits ([`state::SymmetricState::valid_position_sets`]), verify
//! exact codeword orthogonality ([`select::verify_orthogonal`]), and turn
//! each accepted triple into an encode/decode codebook ([`codec::Codebook`]).
//! An exhaustive subspace census ([`subgroup::enumerate_all_subgroups`])
//! audits the construction.
//!
//! All state arithmetic is exact: amplitudes are signs over a common 1/√m,
//! overlaps are integers over √(m_a·m_b), and every orthogonality decision
//! is integer arithmetic.

pub mod codec;
pub mod error;
pub mod labels;
pub mod pauli;
pub mod select;
pub mod state;
pub mod subgroup;

pub use codec::{Codebook, Ordering, TableFormat, Transcript};
pub use error::{Error, Result};
pub use labels::LabelBook;
pub use pauli::{Pauli, PauliString};
pub use select::{
    compare_methods, condition1_literal, condition1_semantic, select, verify_orthogonal,
    FilterMode, MethodComparison, SelectionReport,
};
pub use state::{builtin_state, PositionSet, SymmetricState};
pub use subgroup::{
    construct_mgp_subgroups, distinct_subgroups, enumerate_all_subgroups, gaussian_binomial,
    is_closed, lambda_count, shukla_subgroups, Provenance, Subgroup,
};
