//! Invariant checks run by `verify`. Each check reports a measured error
//! against a tolerance from the config.

use nalgebra::DMatrix;

use super::config::RunConfig;
use crate::error::Result;
use crate::modes::{
    bogoliubov_closed_form, bogoliubov_sinh_form, extract_bogoliubov, instantaneous_bogoliubov,
    solve_mode_ode, verify_mode_relation,
};
use crate::specfun::Complex;
use crate::weakcore::{
    evolution, in_vacuum_in_out_basis, miracle_number_weak, miracle_stress_weak,
    oracle_expectation, oracle_pair_weak_value, weak_value, OperatorMatrix, PairFockBasis,
    StateVector,
};
use crate::weakfield::{
    instantaneous_number_operator, lambda_coefficient, pair_stress_bilinear, pair_stress_operators,
    stress_difference, stress_difference_terms, stress_tail_cutoff, symmetric_eta_grid,
    vacuum_overlap, weak_number_from_coefficients, weak_number_trajectory,
};

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub measured: f64,
    pub tolerance: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.measured <= self.tolerance
    }
}

/// Up to three positive modes from the grid (first, middle, last).
fn probe_modes(config: &RunConfig) -> Vec<f64> {
    let ks: Vec<f64> = config
        .k_grid
        .values()
        .into_iter()
        .filter(|&k| k > 0.0)
        .collect();
    let mut probe: Vec<f64> = [0, ks.len() / 2, ks.len().saturating_sub(1)]
        .iter()
        .filter_map(|&i| ks.get(i).copied())
        .collect();
    probe.dedup();
    probe
}

fn max_of(it: impl IntoIterator<Item = f64>) -> f64 {
    // NaN propagates so a broken computation cannot pass
    it.into_iter().fold(0.0, |m: f64, x| {
        if x.is_nan() || m.is_nan() {
            f64::NAN
        } else {
            m.max(x)
        }
    })
}

pub fn run_checks(config: &RunConfig) -> Result<Vec<Check>> {
    let p = config.model;
    let tol = |n: &str| config.tol(n);
    let probe = probe_modes(config);
    let mut out = Vec::new();
    let mut push = |name, measured, tolerance| {
        out.push(Check {
            name,
            measured,
            tolerance,
        })
    };

    // Gamma-function and sinh forms of the coefficients
    let (mut rel, mut norm) = (0.0f64, 0.0f64);
    for k in config.k_grid.values() {
        let bog = bogoliubov_closed_form(&p, k)?;
        let (a2, b2) = bogoliubov_sinh_form(&p, k)?;
        let r = |x: f64, y: f64| {
            if x == y {
                0.0
            } else {
                (x - y).abs() / y.abs().max(f64::MIN_POSITIVE)
            }
        };
        rel = max_of([rel, r(bog.alpha.norm_sqr(), a2), r(bog.beta.norm_sqr(), b2)]);
        norm = max_of([norm, bog.normalization_defect()]);
    }
    push("bogoliubov_gamma_vs_sinh", rel, tol("bogoliubov"));
    push("bogoliubov_normalization", norm, tol("bogoliubov"));

    let mut relation = 0.0f64;
    for &k in &probe {
        for eta in symmetric_eta_grid(&p, 8.0, 21) {
            relation = max_of([relation, verify_mode_relation(&p, k, eta)?]);
        }
    }
    push("mode_relation", relation, tol("relation"));

    let (mut extraction, mut wronskian) = (0.0f64, 0.0f64);
    for &k in &probe {
        let span = 8.0 / p.rho;
        let traj = solve_mode_ode(&p, k, (-span, span), tol("ode"))?;
        let num = extract_bogoliubov(&traj)?;
        let exact = bogoliubov_closed_form(&p, k)?;
        extraction = max_of([
            extraction,
            (num.alpha.norm() - exact.alpha.norm()).abs(),
            (num.beta.norm() - exact.beta.norm()).abs(),
        ]);
        wronskian = max_of(
            std::iter::once(wronskian).chain(traj.wronskian().iter().map(|w| (w - 1.0).abs())),
        );
    }
    push("ode_extraction", extraction, tol("extraction"));
    push("wronskian", wronskian, tol("wronskian"));

    let mut endpoint = 0.0f64;
    for &k in &probe {
        let t = weak_number_trajectory(&p, k, &symmetric_eta_grid(&p, 8.0, 161))?;
        endpoint = max_of([endpoint, t.w_n[0].norm(), t.w_n.last().unwrap().norm()]);
    }
    push("trajectory_endpoints", endpoint, tol("endpoint"));

    // Gaussian closed forms against the truncated Fock space
    let basis = PairFockBasis::new(config.n_max)?;
    let (mut number, mut stress, mut overlap) = (0.0f64, 0.0f64, 0.0f64);
    for &k in &probe {
        let bog = bogoliubov_closed_form(&p, k)?;
        let vac = in_vacuum_in_out_basis(&bog, &basis)?;
        overlap = max_of([
            overlap,
            (vac.amplitudes()[0].norm() - 1.0 / bog.alpha.norm()).abs(),
        ]);

        let span = 8.0 / p.rho;
        let traj = solve_mode_ode(&p, k, (-span, span), tol("ode"))?;
        for x in [-2.0, -1.0, 0.0, 1.0, 2.0] {
            let c = instantaneous_bogoliubov(&traj, &p, x / p.rho)?;
            let op = instantaneous_number_operator(&basis, &bog, &c);
            let oracle = oracle_pair_weak_value(&bog, &op, &basis)?.value;
            number = max_of([
                number,
                (oracle - weak_number_from_coefficients(&c, &bog)).norm(),
            ]);
        }

        let ops = pair_stress_operators(&p, &bog, &basis, k, 0.0)?;
        let lambda = lambda_coefficient(&p, k)?;
        let t = pair_stress_bilinear(&p, k, 0.0)?;
        for (c, op) in ops.iter().enumerate() {
            let diff =
                oracle_pair_weak_value(&bog, op, &basis)?.value - oracle_expectation(&vac, op);
            stress = max_of([stress, (diff - 2.0 * lambda * t[c]).norm()]);
        }
    }
    push("weak_number_vs_oracle", number, tol("oracle"));
    push("stress_vs_oracle", stress, tol("oracle"));
    push("overlap_vs_oracle", overlap, tol("bogoliubov"));

    let k_cut = stress_tail_cutoff(&p);
    let dk = 0.1;
    let ks: Vec<f64> = (1..=(4.0 * k_cut / dk).ceil() as usize)
        .map(|n| n as f64 * dk)
        .collect();
    let terms = stress_difference_terms(&p, 0.0, &ks)?;
    let tail = (0..3).map(|c| {
        terms
            .iter()
            .filter(|t| t.0 > k_cut)
            .map(|t| t.1[c])
            .sum::<Complex>()
            .norm()
    });
    push("stress_tail", max_of(tail), tol("tail"));

    let r = |x: f64| Complex::new(x, 0.0);
    let q = [
        r(3f64.sqrt() / 2.0),
        r(0.5),
        r(2.0 / 7f64.sqrt()),
        r(-(3.0f64 / 7.0).sqrt()),
    ];
    let (omega, k) = (
        config.miracle.omega.max(f64::MIN_POSITIVE),
        config.miracle.k,
    );
    let w = miracle_number_weak(q[0], q[1], q[2], q[3])?;
    let (t00, t11) = miracle_stress_weak(q[0], q[1], q[2], q[3], omega, k)?;
    push(
        "miracle",
        max_of([(w + 1.0).norm(), (t00 + omega).norm(), (t11 + k).norm()]),
        tol("exact"),
    );

    let massless = p.massless();
    let mut conformal = 0.0f64;
    for &k in &probe {
        conformal = max_of([conformal, bogoliubov_closed_form(&massless, k)?.beta.norm()]);
        let t = weak_number_trajectory(&massless, k, &symmetric_eta_grid(&massless, 8.0, 41))?;
        conformal = max_of(std::iter::once(conformal).chain(t.w_n.iter().map(|w| w.norm())));
    }
    let s = stress_difference(&massless, 0.0, &probe)?;
    let o = vacuum_overlap(&massless, &probe)?;
    conformal = max_of([
        conformal,
        s.d_t00.norm(),
        s.d_t01.norm(),
        s.d_t11.norm(),
        (1.0 - o.product_magnitude).abs(),
    ]);
    push("conformal_triviality", conformal, tol("exact"));

    push(
        "expectation_reduction",
        expectation_reduction()?,
        tol("exact"),
    );

    Ok(out)
}

/// Weak value with the evolved pre-selection as post-selection minus the
/// expectation value, on a fixed 4-level system.
fn expectation_reduction() -> Result<f64> {
    let n = 4;
    let herm = |seed: f64| {
        let g = DMatrix::from_fn(n, n, |i, j| {
            let x = (i * n + j) as f64;
            Complex::new((seed * x + 0.3).sin(), (seed * 1.7 * x + 1.1).cos())
        });
        (&g + g.adjoint()) * Complex::new(0.5, 0.0)
    };
    let h = OperatorMatrix::hermitian(herm(0.9))?;
    let c = OperatorMatrix::hermitian(herm(2.3))?;
    let input = StateVector::new(
        (0..n)
            .map(|i| Complex::new(1.0 + i as f64, 0.5 * i as f64))
            .collect(),
    )?;
    let (t_in, t, t_out) = (0.0, 0.8, 2.0);
    let output = StateVector::from_dvector(evolution(&h, t_out - t_in)? * input.amplitudes())?;
    let w = weak_value(&input, &output, &c, &h, t_in, t, t_out)?;
    let at_t = evolution(&h, t - t_in)? * input.amplitudes();
    let expect = at_t.dotc(&c.apply(&at_t));
    Ok(max_of([(w.value - expect).norm(), w.value.im.abs()]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::config::default_config;

    #[test]
    fn default_config_passes() {
        let c = default_config(&[]).unwrap();
        let checks = run_checks(&c).unwrap();
        for ch in &checks {
            assert!(ch.passed(), "{ch:?}");
        }
        assert_eq!(checks.len(), 13);
    }

    #[test]
    fn nan_never_passes() {
        assert!(max_of([0.0, f64::NAN, 1.0]).is_nan());
        assert!(!Check {
            name: "x",
            measured: f64::NAN,
            tolerance: 1.0
        }
        .passed());
    }

    #[test]
    fn zero_ode_tolerance_is_a_numerical_error() {
        let c = default_config(&[("tol.ode".into(), "0".into())]).unwrap();
        assert_eq!(run_checks(&c).unwrap_err().exit_code(), 2);
    }
}
