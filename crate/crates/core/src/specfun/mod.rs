//! Special functions for the mode solutions: complex `ln Γ` and `₂F₁`.

mod gamma;
mod hyp2f1;

pub use gamma::{gamma, gamma_ratio, is_gamma_pole, ln_gamma};
pub use hyp2f1::{
    hyp2f1, hyp2f1_series, hyp2f1_split, hyp2f1_transformed, DIRECT_LIMIT, MAX_TERMS, SERIES_EPS,
};

/// Complex scalar used throughout the crate.
pub type Complex = num_complex::Complex64;
