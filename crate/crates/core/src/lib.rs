//! Weak values of a free scalar field under independent pre- and
//! post-selection, in a 1+1 dimensional universe whose conformal scale
//! factor interpolates as `C(η) = A + B tanh(ρη)` between two static
//! regions.
//!
//! The crate is organized bottom-up:
//!
//! - [`specfun`]: complex `ln Γ` and Gauss `₂F₁`.
//! - [`model`]: scale factor, asymptotic frequencies, cosmic time.
//! - [`modes`]: exact in/out mode functions, closed-form Bogoliubov
//!   coefficients, an adaptive mode-equation integrator and instantaneous
//!   (Hamiltonian-diagonalized) coefficients.
//! - [`weakcore`]: the finite-dimensional weak-value engine, the two-mode
//!   Fock-space oracle, and the one-particle "miracle" closed forms.
//! - [`weakfield`]: quasiparticle weak-number trajectories, the in/out
//!   vacuum overlap, and the weak-minus-expectation stress tensor.
//! - [`cli`]: config parsing, CSV/SVG output and the verification suite
//!   behind the `postselect-cosmo` binary.
//!
//! Runnable walkthroughs live in `examples/`, one per capability.

// `!(x > 0.0)` style checks are deliberate: NaN must fail validation
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod model;
pub mod modes;
pub mod specfun;
pub mod weakcore;
pub mod weakfield;

pub use error::{Error, Result};
pub use specfun::Complex;
