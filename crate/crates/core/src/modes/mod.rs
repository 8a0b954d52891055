//! In/out mode functions, Bogoliubov coefficients and the numerical
//! mode-equation solver.

mod analytic;
mod numerical;
pub mod ode;

pub use analytic::{
    bogoliubov_closed_form, bogoliubov_sinh_form, mode_function, mode_function_with_derivative,
    verify_mode_relation, BogoliubovPair, Region,
};
pub use numerical::{
    extract_bogoliubov, instantaneous_bogoliubov, solve_mode_ode, solve_mode_ode_at,
    InstantaneousCoefficients, ModeTrajectory, DEFAULT_ODE_TOL,
};
