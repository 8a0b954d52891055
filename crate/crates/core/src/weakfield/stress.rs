//! Vacuum overlap, effective action and the weak-minus-expectation stress
//! tensor.
//!
//! For a quadratic observable only the `a†_in,k a†_in,−k` terms separate the
//! weak value from the in-vacuum expectation, and their weak value is
//! `λ_k = −β_k / α_k*`. For a pair of modes this gives
//!
//! `Δ_μν(η) = Σ_{k>0} 2 λ_k T_μν(u*_k, u*_−k)  (+ λ_0 T_μν(u*_0, u*_0))`,
//!
//! where `u_k` is the exact in-mode (normalized to `(4πω_in)^{-1/2}`) and
//! `T_μν(φ, ψ)` is the symmetrized classical stress bilinear in conformal
//! coordinates. `Δ_ηx` cancels between `k` and `−k`. The sum is a plain
//! sum over the supplied grid; weighting by a box measure is left to the
//! caller.

use rayon::prelude::*;

use super::grid::{pair_grid, PairMode};
use crate::error::Result;
use crate::model::{conformal_scale, ModelParams};
use crate::modes::{bogoliubov_closed_form, mode_function_with_derivative, Region};
use crate::specfun::Complex;

/// Smallest `k` beyond which the stress-difference tail is negligible:
/// five times the larger of the switching rate and the heaviest
/// asymptotic mass frequency.
pub fn stress_tail_cutoff(params: &ModelParams) -> f64 {
    5.0 * params
        .rho
        .max(params.m * (params.a + params.b.abs()).sqrt())
}

/// `λ_k = −β_k / α_k*`, the weak value of `a†_in,k a†_in,−k`.
pub fn lambda_coefficient(params: &ModelParams, k: f64) -> Result<Complex> {
    let bog = bogoliubov_closed_form(params, k)?;
    Ok(-bog.beta / bog.alpha.conj())
}

#[derive(Debug, Clone, PartialEq)]
pub struct VacuumOverlap {
    /// `|k|` of each grid entry.
    pub k: Vec<f64>,
    /// `⟨0_out|0_in⟩` restricted to each entry: `1/|α|` for a pair,
    /// `|α|^{-1/2}` for `k = 0`. Chosen real and positive.
    pub per_mode: Vec<Complex>,
    pub product_magnitude: f64,
    /// Effective action with `⟨0_out|0_in⟩ = e^{iW}`, so `Im W ≥ 0`.
    pub w: Complex,
}

pub fn vacuum_overlap(params: &ModelParams, k_grid: &[f64]) -> Result<VacuumOverlap> {
    let pairs = pair_grid(k_grid)?;
    let alphas: Vec<f64> = pairs
        .par_iter()
        .map(|p| bogoliubov_closed_form(params, p.k).map(|b| b.alpha.norm()))
        .collect::<Result<_>>()?;
    let mut log_sum = 0.0;
    let mut per_mode = Vec::with_capacity(pairs.len());
    for (p, &a) in pairs.iter().zip(&alphas) {
        // ln ⟨0_out|0_in⟩ = −½ m ln|α| with m modes per entry
        let ln_o = -0.5 * p.multiplicity as f64 * a.ln();
        per_mode.push(Complex::new(ln_o.exp(), 0.0));
        log_sum += ln_o;
    }
    Ok(VacuumOverlap {
        k: pairs.iter().map(|p| p.k).collect(),
        per_mode,
        product_magnitude: log_sum.exp(),
        w: Complex::new(0.0, -log_sum),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StressDifference {
    pub eta: f64,
    pub d_t00: Complex,
    pub d_t01: Complex,
    pub d_t11: Complex,
    pub k_max: f64,
    /// Number of modes summed (pairs count twice).
    pub n_modes: usize,
}

/// `T_μν(u*_k, u*_−k)` at `η` (components ηη, ηx, xx).
pub fn pair_stress_bilinear(params: &ModelParams, k: f64, eta: f64) -> Result<[Complex; 3]> {
    let (u, du) = mode_function_with_derivative(params, Region::In, k, eta)?;
    let (f, df) = (u.conj(), du.conj());
    let i = Complex::i();
    // φ = u* e^{−ikx}, ψ = u* e^{ikx}
    let (dx_phi, dx_psi) = (-i * k * f, i * k * f);
    let mass = params.m * params.m * conformal_scale(params, eta);
    let kin = df * df + dx_phi * dx_psi;
    Ok([
        0.5 * (kin + mass * f * f),
        0.5 * (df * dx_psi + dx_phi * df),
        0.5 * (kin - mass * f * f),
    ])
}

fn mode_contribution(params: &ModelParams, eta: f64, p: &PairMode) -> Result<[Complex; 3]> {
    let lambda = lambda_coefficient(params, p.k)?;
    let t = pair_stress_bilinear(params, p.k, eta)?;
    let m = p.multiplicity as f64 * lambda;
    Ok([m * t[0], m * t[1], m * t[2]])
}

pub fn stress_difference(
    params: &ModelParams,
    eta: f64,
    k_grid: &[f64],
) -> Result<StressDifference> {
    let pairs = pair_grid(k_grid)?;
    let terms: Vec<[Complex; 3]> = pairs
        .par_iter()
        .map(|p| mode_contribution(params, eta, p))
        .collect::<Result<_>>()?;
    // ordered reduction keeps results bit-identical across thread counts
    let mut sum = [Complex::new(0.0, 0.0); 3];
    for t in &terms {
        for c in 0..3 {
            sum[c] += t[c];
        }
    }
    Ok(StressDifference {
        eta,
        d_t00: sum[0],
        d_t01: sum[1],
        d_t11: sum[2],
        k_max: pairs.last().map_or(0.0, |p| p.k),
        n_modes: pairs.iter().map(|p| p.multiplicity).sum(),
    })
}

/// Per-entry contributions to [`stress_difference`], for convergence
/// studies. Entries are in ascending `|k|`.
pub fn stress_difference_terms(
    params: &ModelParams,
    eta: f64,
    k_grid: &[f64],
) -> Result<Vec<(f64, [Complex; 3])>> {
    let pairs = pair_grid(k_grid)?;
    pairs
        .par_iter()
        .map(|p| mode_contribution(params, eta, p).map(|t| (p.k, t)))
        .collect()
}
