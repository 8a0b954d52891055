//! Numerical solution of `χ″ + (k² + m²C(η))χ = 0` and the instantaneous
//! (Hamiltonian-diagonalized) decomposition of the solution.

use super::analytic::BogoliubovPair;
use super::ode::{integrate, Record, Solution};
use crate::error::{Error, Result};
use crate::model::{frequencies, ModelParams, ASYMPTOTIC_RHO_ETA};
use crate::specfun::Complex;

/// Default local tolerance for the mode integrator.
pub const DEFAULT_ODE_TOL: f64 = 1e-10;

// The controller bounds the error per step while the phase error of an
// oscillating mode accumulates over every period, so steps are controlled
// one decade below the requested tolerance.
const STEP_TOL_FACTOR: f64 = 0.1;

/// Numerically integrated in-mode sampled on an ordered η grid.
///
/// `theta` is the accumulated WKB phase, `Θ(η) = ω_in η₀ + ∫_{η₀}^{η} ω dη′`.
#[derive(Debug, Clone)]
pub struct ModeTrajectory {
    pub params: ModelParams,
    pub k: f64,
    pub tol: f64,
    pub eta_grid: Vec<f64>,
    pub chi: Vec<Complex>,
    pub chi_prime: Vec<Complex>,
    pub theta: Vec<f64>,
}

/// `(A, B)` with `χ = (A e^{−iΘ} + B e^{iΘ})/√(2ω)` and
/// `χ′ = −iω (A e^{−iΘ} − B e^{iΘ})/√(2ω)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InstantaneousCoefficients {
    pub eta: f64,
    pub a_coef: Complex,
    pub b_coef: Complex,
    pub theta: f64,
}

impl InstantaneousCoefficients {
    /// `A·B`, which does not depend on the phase reference `Θ`.
    pub fn product(&self) -> Complex {
        self.a_coef * self.b_coef
    }
}

type State = [f64; 5];

fn pack(chi: Complex, dchi: Complex, theta: f64) -> State {
    [chi.re, chi.im, dchi.re, dchi.im, theta]
}

fn unpack(y: &State) -> (Complex, Complex, f64) {
    (Complex::new(y[0], y[1]), Complex::new(y[2], y[3]), y[4])
}

fn rhs(params: ModelParams, k: f64) -> impl Fn(f64, &State) -> State {
    move |eta, y| {
        let w2 = params.omega_sq(k, eta);
        [y[2], y[3], -w2 * y[0], -w2 * y[1], w2.sqrt()]
    }
}

fn initial_state(params: &ModelParams, k: f64, eta0: f64) -> Result<State> {
    if !params.in_past_region(eta0) {
        return Err(Error::Domain(format!(
            "mode integration must start in the past region (ρη₀ ≤ −{ASYMPTOTIC_RHO_ETA}), \
             got ρη₀ = {}",
            params.rho * eta0
        )));
    }
    let w = frequencies(params, k)?.omega_in;
    let chi = Complex::from_polar((2.0 * w).powf(-0.5), -w * eta0);
    let dchi = -Complex::i() * w * chi;
    Ok(pack(chi, dchi, w * eta0))
}

fn into_trajectory(params: &ModelParams, k: f64, tol: f64, sol: Solution<5>) -> ModeTrajectory {
    let mut chi = Vec::with_capacity(sol.t.len());
    let mut chi_prime = Vec::with_capacity(sol.t.len());
    let mut theta = Vec::with_capacity(sol.t.len());
    for y in &sol.y {
        let (c, d, th) = unpack(y);
        chi.push(c);
        chi_prime.push(d);
        theta.push(th);
    }
    ModeTrajectory {
        params: *params,
        k,
        tol,
        eta_grid: sol.t,
        chi,
        chi_prime,
        theta,
    }
}

/// Integrates the in-mode across `eta_span`, recording every accepted step.
///
/// Initial data are the in-region plane wave
/// `χ(η₀) = (2ω_in)^{-1/2} e^{−iω_in η₀}`, `χ′(η₀) = −iω_in χ(η₀)`.
pub fn solve_mode_ode(
    params: &ModelParams,
    k: f64,
    eta_span: (f64, f64),
    tol: f64,
) -> Result<ModeTrajectory> {
    let (eta0, eta1) = eta_span;
    if eta1 < eta0 {
        return Err(Error::Domain(format!(
            "eta_span ({eta0}, {eta1}) is reversed"
        )));
    }
    let y0 = initial_state(params, k, eta0)?;
    let sol = integrate(
        rhs(*params, k),
        eta0,
        y0,
        &[eta1],
        tol * STEP_TOL_FACTOR,
        Record::AllSteps,
    )?;
    Ok(into_trajectory(params, k, tol, sol))
}

/// Integrates the in-mode from `eta_points[0]`, sampling exactly at each
/// listed point (ascending).
pub fn solve_mode_ode_at(
    params: &ModelParams,
    k: f64,
    eta_points: &[f64],
    tol: f64,
) -> Result<ModeTrajectory> {
    let Some(&eta0) = eta_points.first() else {
        return Err(Error::Domain("empty eta grid".into()));
    };
    let y0 = initial_state(params, k, eta0)?;
    let sol = integrate(
        rhs(*params, k),
        eta0,
        y0,
        &eta_points[1..],
        tol * STEP_TOL_FACTOR,
        Record::StopsOnly,
    )?;
    Ok(into_trajectory(params, k, tol, sol))
}

impl ModeTrajectory {
    /// `i(χ′χ* − χ*′χ)` at every stored point; 1 for a normalized mode.
    pub fn wronskian(&self) -> Vec<f64> {
        self.chi
            .iter()
            .zip(&self.chi_prime)
            .map(|(c, d)| -2.0 * (d * c.conj()).im)
            .collect()
    }

    /// State at `eta`, integrating from the nearest stored point at or
    /// before it when `eta` is not on the grid.
    pub fn state_at(&self, eta: f64) -> Result<(Complex, Complex, f64)> {
        let first = self.eta_grid[0];
        let last = *self.eta_grid.last().unwrap();
        if !(first..=last).contains(&eta) {
            return Err(Error::Domain(format!(
                "eta = {eta} outside trajectory range [{first}, {last}]"
            )));
        }
        let idx = self.eta_grid.partition_point(|&t| t <= eta) - 1;
        let start = self.eta_grid[idx];
        if start == eta {
            return Ok((self.chi[idx], self.chi_prime[idx], self.theta[idx]));
        }
        let y0 = pack(self.chi[idx], self.chi_prime[idx], self.theta[idx]);
        let sol = integrate(
            rhs(self.params, self.k),
            start,
            y0,
            &[eta],
            self.tol * STEP_TOL_FACTOR,
            Record::StopsOnly,
        )?;
        Ok(unpack(sol.y.last().unwrap()))
    }

    /// Instantaneous coefficients at every stored grid point.
    pub fn instantaneous_all(&self) -> Vec<InstantaneousCoefficients> {
        (0..self.eta_grid.len())
            .map(|i| {
                decompose(
                    &self.params,
                    self.k,
                    self.eta_grid[i],
                    self.chi[i],
                    self.chi_prime[i],
                    self.theta[i],
                )
            })
            .collect()
    }
}

fn decompose(
    params: &ModelParams,
    k: f64,
    eta: f64,
    chi: Complex,
    dchi: Complex,
    theta: f64,
) -> InstantaneousCoefficients {
    let w = params.omega_sq(k, eta).sqrt();
    let s = (2.0 * w).sqrt();
    let i = Complex::i();
    let a_coef = (w * chi + i * dchi) / s * Complex::from_polar(1.0, theta);
    let b_coef = (w * chi - i * dchi) / s * Complex::from_polar(1.0, -theta);
    InstantaneousCoefficients {
        eta,
        a_coef,
        b_coef,
        theta,
    }
}

/// Hamiltonian-diagonalized coefficients of the trajectory at `eta`.
pub fn instantaneous_bogoliubov(
    traj: &ModeTrajectory,
    params: &ModelParams,
    eta: f64,
) -> Result<InstantaneousCoefficients> {
    let (chi, dchi, theta) = traj.state_at(eta)?;
    Ok(decompose(params, traj.k, eta, chi, dchi, theta))
}

/// Projects the last trajectory point (which must lie in the future
/// region) onto out-region plane waves `e^{∓iω_out η}/√(2ω_out)`.
pub fn extract_bogoliubov(traj: &ModeTrajectory) -> Result<BogoliubovPair> {
    let eta = *traj.eta_grid.last().unwrap();
    if !traj.params.in_future_region(eta) {
        return Err(Error::Domain(format!(
            "Bogoliubov extraction needs ρη ≥ {ASYMPTOTIC_RHO_ETA}, got {}",
            traj.params.rho * eta
        )));
    }
    let w = frequencies(&traj.params, traj.k)?.omega_out;
    let chi = *traj.chi.last().unwrap();
    let dchi = *traj.chi_prime.last().unwrap();
    let s = (2.0 * w).sqrt();
    let i = Complex::i();
    Ok(BogoliubovPair {
        alpha: (w * chi + i * dchi) / s * Complex::from_polar(1.0, w * eta),
        beta: (w * chi - i * dchi) / s * Complex::from_polar(1.0, -w * eta),
    })
}
