//! Weak values of field observables in the tanh cosmology: quasiparticle
//! number along the expansion, in/out vacuum overlap and the weak-minus-
//! expectation stress tensor.

mod grid;
mod number;
mod oracle;
mod stress;

pub use grid::{pair_grid, PairMode};
pub use number::{
    symmetric_eta_grid, weak_number_from_coefficients, weak_number_sweep, weak_number_trajectory,
    weak_number_trajectory_with_tol, WeakTrajectory,
};
pub use oracle::{instantaneous_number_operator, pair_stress_operators};
pub use stress::{
    lambda_coefficient, pair_stress_bilinear, stress_difference, stress_difference_terms,
    stress_tail_cutoff, vacuum_overlap, StressDifference, VacuumOverlap,
};
