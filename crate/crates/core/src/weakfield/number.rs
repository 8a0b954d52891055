//! Quasiparticle-number weak values along the expansion.
//!
//! With the instantaneous operators `b_k = A a_in,k + B* a†_in,−k` and the
//! identity `⟨0_out| a†_in,k = −(β/α*) ⟨0_out| a_in,−k`, the per-mode weak
//! value of `b†_k b_k` between `|0_in⟩` and `⟨0_out|` is
//!
//! `w_N = |B|² − (A B)* β / α*`,
//!
//! whereas the in-vacuum expectation value is `|B|²`. `A·B` does not depend
//! on the phase reference of the instantaneous basis.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{ModelParams, ASYMPTOTIC_RHO_ETA};
use crate::modes::{
    bogoliubov_closed_form, solve_mode_ode_at, BogoliubovPair, InstantaneousCoefficients,
    DEFAULT_ODE_TOL,
};
use crate::specfun::Complex;

#[derive(Debug, Clone, PartialEq)]
pub struct WeakTrajectory {
    pub k: f64,
    pub eta_grid: Vec<f64>,
    /// Weak value of `b†_k b_k` (one member of the pair).
    pub w_n: Vec<Complex>,
    /// `⟨0_in| b†_k b_k |0_in⟩ = |B|²`, for comparison.
    pub expectation: Vec<f64>,
}

impl WeakTrajectory {
    /// Index of the largest `Re w_N`.
    pub fn peak_index(&self) -> usize {
        self.w_n
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.re.total_cmp(&b.1.re))
            .map_or(0, |(i, _)| i)
    }
}

/// `w_N` from instantaneous coefficients and the in/out Bogoliubov pair.
pub fn weak_number_from_coefficients(
    c: &InstantaneousCoefficients,
    bog: &BogoliubovPair,
) -> Complex {
    c.b_coef.norm_sqr() - c.product().conj() * bog.beta / bog.alpha.conj()
}

fn check_grid(params: &ModelParams, eta_grid: &[f64]) -> Result<()> {
    let (Some(&first), Some(&last)) = (eta_grid.first(), eta_grid.last()) else {
        return Err(Error::Domain("eta grid is empty".into()));
    };
    if eta_grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::Domain("eta grid must be strictly increasing".into()));
    }
    if !params.in_past_region(first) || !params.in_future_region(last) {
        return Err(Error::Domain(format!(
            "eta grid must start at ρη ≤ −{ASYMPTOTIC_RHO_ETA} and end at ρη ≥ {ASYMPTOTIC_RHO_ETA}, \
             got [{}, {}]",
            params.rho * first,
            params.rho * last
        )));
    }
    Ok(())
}

/// Per-mode weak quasiparticle number on `eta_grid` (ascending, endpoints
/// in the asymptotic regions), using the default integrator tolerance.
pub fn weak_number_trajectory(
    params: &ModelParams,
    k: f64,
    eta_grid: &[f64],
) -> Result<WeakTrajectory> {
    weak_number_trajectory_with_tol(params, k, eta_grid, DEFAULT_ODE_TOL)
}

pub fn weak_number_trajectory_with_tol(
    params: &ModelParams,
    k: f64,
    eta_grid: &[f64],
    tol: f64,
) -> Result<WeakTrajectory> {
    check_grid(params, eta_grid)?;
    let bog = bogoliubov_closed_form(params, k)?;
    let traj = solve_mode_ode_at(params, k, eta_grid, tol)?;
    let coeffs = traj.instantaneous_all();
    Ok(WeakTrajectory {
        k,
        eta_grid: eta_grid.to_vec(),
        w_n: coeffs
            .iter()
            .map(|c| weak_number_from_coefficients(c, &bog))
            .collect(),
        expectation: coeffs.iter().map(|c| c.b_coef.norm_sqr()).collect(),
    })
}

/// Trajectories for several modes, computed in parallel, returned in
/// the order of `ks`.
pub fn weak_number_sweep(
    params: &ModelParams,
    ks: &[f64],
    eta_grid: &[f64],
    tol: f64,
) -> Result<Vec<WeakTrajectory>> {
    ks.par_iter()
        .map(|&k| weak_number_trajectory_with_tol(params, k, eta_grid, tol))
        .collect()
}

/// `ρη` grid of `n` evenly spaced points on `[−span, span]`, in units of η.
pub fn symmetric_eta_grid(params: &ModelParams, span: f64, n: usize) -> Vec<f64> {
    let n = n.max(2);
    (0..n)
        .map(|i| (-span + 2.0 * span * i as f64 / (n - 1) as f64) / params.rho)
        .collect()
}
