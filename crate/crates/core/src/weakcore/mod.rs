//! Finite-dimensional pre/post-selected weak values, the truncated pair
//! Fock oracle and the two-level "miracle" closed forms.

mod fock;
mod linalg;
mod weak;

pub use fock::{
    in_vacuum_in_out_basis, oracle_expectation, oracle_pair_weak_value, oracle_weak_value,
    FockOperator, PairFockBasis, PairSlot, TRUNCATION_TAIL_LIMIT,
};
pub use linalg::{evolution, expm, OperatorMatrix, StateVector, STRUCTURE_TOL};
pub use weak::{
    miracle_number_weak, miracle_stress_weak, weak_value, weak_value_with_threshold,
    WeakValueResult, AMPLIFICATION_THRESHOLD, ORTHOGONALITY_LIMIT,
};
