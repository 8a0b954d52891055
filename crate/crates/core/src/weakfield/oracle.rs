//! Fock-space operators for one `(k, −k)` pair, built from the in-ladder
//! matrices, so the closed forms can be checked by brute force.

use crate::error::Result;
use crate::model::{conformal_scale, ModelParams};
use crate::modes::{
    mode_function_with_derivative, BogoliubovPair, InstantaneousCoefficients, Region,
};
use crate::specfun::Complex;
use crate::weakcore::{FockOperator, PairFockBasis};

/// `b†_k b_k` with `b_k = A a_in,k + B* a†_in,−k`.
pub fn instantaneous_number_operator(
    basis: &PairFockBasis,
    bog: &BogoliubovPair,
    c: &InstantaneousCoefficients,
) -> FockOperator {
    let (ap, am) = basis.in_annihilators(bog);
    let b = FockOperator::combination(&[(c.a_coef, &ap), (c.b_coef.conj(), &am.adjoint())]);
    b.adjoint().compose(&b)
}

/// `(T̂_ηη, T̂_ηx, T̂_xx)` at `x = 0` restricted to the pair, with the field
/// `φ̂ = u a_in,k + u* a†_in,k + u a_in,−k + u* a†_in,−k` (`u` the exact
/// in-mode at `η`).
pub fn pair_stress_operators(
    params: &ModelParams,
    bog: &BogoliubovPair,
    basis: &PairFockBasis,
    k: f64,
    eta: f64,
) -> Result<[FockOperator; 3]> {
    let (u, du) = mode_function_with_derivative(params, Region::In, k, eta)?;
    let (ap, am) = basis.in_annihilators(bog);
    let (cp, cm) = (ap.adjoint(), am.adjoint());
    let field = |f: Complex| {
        FockOperator::combination(&[(f, &ap), (f.conj(), &cp), (f, &am), (f.conj(), &cm)])
    };
    let i = Complex::i();
    let phi = field(u);
    let pi = field(du);
    // ∂_x: e^{ikx} on a_k, e^{−ikx} on a_−k
    let phi_x = FockOperator::combination(&[
        (i * k * u, &ap),
        ((i * k * u).conj(), &cp),
        (-i * k * u, &am),
        ((-i * k * u).conj(), &cm),
    ]);
    let mass = params.m * params.m * conformal_scale(params, eta);
    let half = Complex::new(0.5, 0.0);
    let kin =
        FockOperator::combination(&[(half, &pi.compose(&pi)), (half, &phi_x.compose(&phi_x))]);
    let pot = phi.compose(&phi);
    let one = Complex::new(1.0, 0.0);
    let t00 = FockOperator::combination(&[(one, &kin), (half * mass, &pot)]);
    let t11 = FockOperator::combination(&[(one, &kin), (-half * mass, &pot)]);
    let t01 = pi.symmetrized(&phi_x);
    Ok([t00, t01, t11])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modes::{bogoliubov_closed_form, instantaneous_bogoliubov, solve_mode_ode};
    use crate::weakcore::{
        in_vacuum_in_out_basis, oracle_expectation, oracle_pair_weak_value, oracle_weak_value,
    };
    use crate::weakfield::{
        lambda_coefficient, pair_stress_bilinear, weak_number_from_coefficients,
    };

    fn reference() -> ModelParams {
        ModelParams::new(1.0, 0.5, 1.0, 1.0).unwrap()
    }

    #[test]
    fn weak_number_matches_oracle() {
        let p = reference();
        let basis = PairFockBasis::new(40).unwrap();
        let bog = bogoliubov_closed_form(&p, 1.0).unwrap();
        let traj = solve_mode_ode(&p, 1.0, (-8.0, 8.0), 1e-10).unwrap();
        for eta in [-1.5, 0.0, 0.7] {
            let c = instantaneous_bogoliubov(&traj, &p, eta).unwrap();
            let n = instantaneous_number_operator(&basis, &bog, &c);
            let oracle = oracle_pair_weak_value(&bog, &n, &basis).unwrap().value;
            let closed = weak_number_from_coefficients(&c, &bog);
            assert!(
                (oracle - closed).norm() < 1e-8,
                "eta = {eta}: {oracle} vs {closed}"
            );
        }
    }

    #[test]
    fn stress_difference_matches_oracle() {
        let p = reference();
        let (k, eta) = (1.0, 0.0);
        let basis = PairFockBasis::new(40).unwrap();
        let bog = bogoliubov_closed_form(&p, k).unwrap();
        let ops = pair_stress_operators(&p, &bog, &basis, k, eta).unwrap();
        let vac = in_vacuum_in_out_basis(&bog, &basis).unwrap();
        let lambda = lambda_coefficient(&p, k).unwrap();
        let t = pair_stress_bilinear(&p, k, eta).unwrap();
        for (c, op) in ops.iter().enumerate() {
            let weak = oracle_pair_weak_value(&bog, op, &basis).unwrap().value;
            let diff = weak - oracle_expectation(&vac, op);
            let closed = 2.0 * lambda * t[c];
            assert!(
                (diff - closed).norm() < 1e-8,
                "component {c}: {diff} vs {closed}"
            );
            // with the evolved pre-selection as post-selection the difference vanishes
            let same =
                oracle_weak_value(&vac, &vac, op).unwrap().value - oracle_expectation(&vac, op);
            assert!(same.norm() < 1e-12);
        }
    }
}
