//! Dormand–Prince 5(4) with FSAL and standard step-size control.
//!
//! The integrator lands exactly on every requested stop instead of
//! interpolating, so downstream quantities evaluated at grid points carry
//! only the local-error budget.

use crate::error::{Error, Result};

const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];

const A: [[f64; 6]; 7] = [
    [0.0; 6],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
        0.0,
        0.0,
    ],
    [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
        0.0,
    ],
    [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];

/// 5th-order minus embedded 4th-order weights.
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

const SAFETY: f64 = 0.9;
const MIN_FACTOR: f64 = 0.2;
const MAX_FACTOR: f64 = 5.0;
const MAX_STEPS: usize = 5_000_000;

/// Accepted points of one integration.
#[derive(Debug, Clone)]
pub struct Solution<const N: usize> {
    pub t: Vec<f64>,
    pub y: Vec<[f64; N]>,
}

/// What to record along the way.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Record {
    /// Initial point plus every accepted step.
    AllSteps,
    /// Initial point plus the requested stops only.
    StopsOnly,
}

/// Integrate `y' = f(t, y)` from `(t0, y0)` forward through every time in
/// `stops` (ascending, all ≥ `t0`). Local error is held to
/// `tol·(1 + |y|)` componentwise in RMS.
pub fn integrate<const N: usize, F>(
    f: F,
    t0: f64,
    y0: [f64; N],
    stops: &[f64],
    tol: f64,
    record: Record,
) -> Result<Solution<N>>
where
    F: Fn(f64, &[f64; N]) -> [f64; N],
{
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::Numerical(format!(
            "integrator tolerance must be positive and finite, got {tol}"
        )));
    }
    if stops.windows(2).any(|w| w[1] < w[0]) || stops.first().is_some_and(|&s| s < t0) {
        return Err(Error::Domain(
            "integration stops must be ascending from t0".into(),
        ));
    }

    let mut sol = Solution {
        t: vec![t0],
        y: vec![y0],
    };
    let Some(&t_end) = stops.last() else {
        return Ok(sol);
    };

    let mut t = t0;
    let mut y = y0;
    let mut k0 = f(t, &y);
    let mut h = initial_step(&y, &k0, tol, t_end - t0);
    let mut next_stop = 0;
    let mut steps = 0usize;

    // stops equal to t0 are recorded immediately
    while next_stop < stops.len() && stops[next_stop] == t {
        if record == Record::StopsOnly {
            sol.t.push(t);
            sol.y.push(y);
        }
        next_stop += 1;
    }

    while next_stop < stops.len() {
        steps += 1;
        if steps > MAX_STEPS {
            return Err(Error::Numerical(format!(
                "integrator exceeded {MAX_STEPS} steps at t = {t}"
            )));
        }
        let target = stops[next_stop];
        let mut landing = false;
        if t + h >= target {
            h = target - t;
            landing = true;
        }
        if h <= 1e-14 * t.abs().max(1.0) {
            return Err(Error::Numerical(format!(
                "step size underflow (h = {h:e}) at t = {t}"
            )));
        }

        let (y_new, k_last, err) = dp_step(&f, t, &y, &k0, h, tol);
        if err <= 1.0 {
            t = if landing { target } else { t + h };
            y = y_new;
            k0 = k_last;
            if record == Record::AllSteps || (landing && sol.t.last() != Some(&t)) {
                sol.t.push(t);
                sol.y.push(y);
            }
            if landing {
                while next_stop < stops.len() && stops[next_stop] == t {
                    next_stop += 1;
                }
            }
            let factor = if err == 0.0 {
                MAX_FACTOR
            } else {
                (SAFETY * err.powf(-0.2)).clamp(MIN_FACTOR, MAX_FACTOR)
            };
            h *= factor;
        } else {
            if !err.is_finite() {
                h *= MIN_FACTOR;
            } else {
                h *= (SAFETY * err.powf(-0.2)).clamp(MIN_FACTOR, 1.0);
            }
        }
    }
    Ok(sol)
}

fn initial_step<const N: usize>(y: &[f64; N], dy: &[f64; N], tol: f64, span: f64) -> f64 {
    let d0 = rms(y);
    let d1 = rms(dy);
    let h = if d0 < 1e-5 || d1 < 1e-5 {
        1e-6
    } else {
        0.01 * d0 / d1
    };
    (h * tol.powf(0.1).max(1e-2)).min(span.abs().max(f64::MIN_POSITIVE))
}

fn rms<const N: usize>(v: &[f64; N]) -> f64 {
    (v.iter().map(|x| x * x).sum::<f64>() / N as f64).sqrt()
}

fn dp_step<const N: usize, F>(
    f: &F,
    t: f64,
    y: &[f64; N],
    k0: &[f64; N],
    h: f64,
    tol: f64,
) -> ([f64; N], [f64; N], f64)
where
    F: Fn(f64, &[f64; N]) -> [f64; N],
{
    let mut k = [[0.0; N]; 7];
    k[0] = *k0;
    for s in 1..7 {
        let mut ys = *y;
        for (j, kj) in k.iter().enumerate().take(s) {
            let a = A[s][j];
            if a != 0.0 {
                for i in 0..N {
                    ys[i] += h * a * kj[i];
                }
            }
        }
        k[s] = f(t + C[s] * h, &ys);
        if s == 6 {
            // stage 7 is evaluated at the 5th-order solution (FSAL)
            let mut err_sq = 0.0;
            for i in 0..N {
                let mut e = 0.0;
                for (j, kj) in k.iter().enumerate() {
                    e += E[j] * kj[i];
                }
                let scale = tol * (1.0 + y[i].abs().max(ys[i].abs()));
                err_sq += (h * e / scale).powi(2);
            }
            let err = (err_sq / N as f64).sqrt();
            return (ys, k[6], err);
        }
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_oscillator_period() {
        let w = 3.0;
        let period = 2.0 * std::f64::consts::PI / w;
        let sol = integrate(
            |_, y: &[f64; 2]| [y[1], -w * w * y[0]],
            0.0,
            [1.0, 0.0],
            &[period, 10.0 * period],
            1e-12,
            Record::StopsOnly,
        )
        .unwrap();
        assert_eq!(sol.t, vec![0.0, period, 10.0 * period]);
        for y in &sol.y[1..] {
            assert!((y[0] - 1.0).abs() < 1e-9, "{y:?}");
            assert!(y[1].abs() < 1e-8);
        }
    }

    #[test]
    fn exponential_growth_hits_every_stop() {
        let stops = [0.1, 0.5, 0.5, 1.0, 2.0];
        let sol = integrate(
            |_, y: &[f64; 1]| [y[0]],
            0.0,
            [1.0],
            &stops,
            1e-11,
            Record::StopsOnly,
        )
        .unwrap();
        assert_eq!(sol.t, vec![0.0, 0.1, 0.5, 1.0, 2.0]);
        for (t, y) in sol.t.iter().zip(&sol.y) {
            assert!((y[0] - t.exp()).abs() < 1e-9 * t.exp());
        }
    }

    #[test]
    fn all_steps_are_monotone() {
        let sol = integrate(
            |t, _: &[f64; 1]| [t.cos()],
            0.0,
            [0.0],
            &[5.0],
            1e-10,
            Record::AllSteps,
        )
        .unwrap();
        assert!(sol.t.len() > 5);
        assert!(sol.t.windows(2).all(|w| w[1] > w[0]));
        assert_eq!(*sol.t.last().unwrap(), 5.0);
        assert!((sol.y.last().unwrap()[0] - 5f64.sin()).abs() < 1e-9);
    }

    #[test]
    fn zero_tolerance_is_rejected() {
        let err = integrate(
            |_, y: &[f64; 1]| [y[0]],
            0.0,
            [1.0],
            &[1.0],
            0.0,
            Record::AllSteps,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Numerical(_)));
    }

    #[test]
    fn unreachable_accuracy_reports_underflow() {
        // y' = 1/(1 − t) blows up at t = 1
        let err = integrate(
            |t, _: &[f64; 1]| [1.0 / (1.0 - t)],
            0.0,
            [0.0],
            &[2.0],
            1e-10,
            Record::AllSteps,
        )
        .unwrap_err();
        assert!(err.to_string().contains("t = "), "{err}");
    }
}
