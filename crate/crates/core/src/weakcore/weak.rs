//! Pre/post-selected weak values and the two-level "miracle" closed forms.

use super::linalg::{evolution, OperatorMatrix, StateVector};
use crate::error::{Error, Result};
use crate::specfun::Complex;

/// Overlaps below this make the weak value undefined.
pub const ORTHOGONALITY_LIMIT: f64 = 1e-14;
/// Default `|⟨out|in⟩|` below which a result is flagged as amplified.
pub const AMPLIFICATION_THRESHOLD: f64 = 0.1;

/// Tolerance on `|a|² + |b|² = 1` for two-level amplitudes.
const AMPLITUDE_NORM_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeakValueResult {
    pub value: Complex,
    /// `|⟨out|in⟩|` at the measurement time.
    pub overlap_magnitude: f64,
    pub amplified: bool,
}

impl WeakValueResult {
    /// `numerator / denominator`, rejecting near-orthogonal selections.
    pub fn from_ratio(numerator: Complex, denominator: Complex, threshold: f64) -> Result<Self> {
        let overlap_magnitude = denominator.norm();
        if !(overlap_magnitude >= ORTHOGONALITY_LIMIT) {
            return Err(Error::OrthogonalPostSelection {
                overlap: overlap_magnitude,
                threshold: ORTHOGONALITY_LIMIT,
            });
        }
        Ok(Self {
            value: numerator / denominator,
            overlap_magnitude,
            amplified: overlap_magnitude < threshold,
        })
    }
}

/// Weak value of `c` at time `t` for a state prepared as `input` at `t_in`
/// and post-selected on `output` at `t_out`, with `U(τ) = e^{−iHτ}`.
pub fn weak_value(
    input: &StateVector,
    output: &StateVector,
    c: &OperatorMatrix,
    h: &OperatorMatrix,
    t_in: f64,
    t: f64,
    t_out: f64,
) -> Result<WeakValueResult> {
    weak_value_with_threshold(input, output, c, h, t_in, t, t_out, AMPLIFICATION_THRESHOLD)
}

#[allow(clippy::too_many_arguments)]
pub fn weak_value_with_threshold(
    input: &StateVector,
    output: &StateVector,
    c: &OperatorMatrix,
    h: &OperatorMatrix,
    t_in: f64,
    t: f64,
    t_out: f64,
    threshold: f64,
) -> Result<WeakValueResult> {
    if !(t_in <= t && t <= t_out) {
        return Err(Error::InvalidParams(format!(
            "times must satisfy t_in ≤ t ≤ t_out, got ({t_in}, {t}, {t_out})"
        )));
    }
    let d = input.dim();
    if output.dim() != d || c.dim() != d || h.dim() != d {
        return Err(Error::InvalidParams(format!(
            "dimension mismatch: in {d}, out {}, C {}, H {}",
            output.dim(),
            c.dim(),
            h.dim()
        )));
    }
    // forward-evolved pre-selection, backward-evolved post-selection
    let fwd = evolution(h, t - t_in)? * input.amplitudes();
    let back = evolution(h, t - t_out)? * output.amplitudes();
    let num = back.dotc(&c.apply(&fwd));
    let den = back.dotc(&fwd);
    WeakValueResult::from_ratio(num, den, threshold)
}

fn check_two_level(x: Complex, y: Complex, names: &str) -> Result<()> {
    let n = x.norm_sqr() + y.norm_sqr();
    if (n - 1.0).abs() > AMPLITUDE_NORM_TOL {
        return Err(Error::InvalidParams(format!(
            "amplitudes {names} must satisfy |·|² + |·|² = 1, got {n}"
        )));
    }
    Ok(())
}

/// Number weak value between `a|0⟩ + b|1⟩` and post-selection `g|0⟩ + d|1⟩`.
///
/// The post-selected bra is conjugated, so the result is `b·d̄ / (a·ḡ + b·d̄)`;
/// for real amplitudes this is `bd / (ag + bd)`.
pub fn miracle_number_weak(a: Complex, b: Complex, g: Complex, d: Complex) -> Result<Complex> {
    check_two_level(a, b, "(a, b)")?;
    check_two_level(g, d, "(g, d)")?;
    let num = b * d.conj();
    let den = a * g.conj() + num;
    Ok(WeakValueResult::from_ratio(num, den, AMPLIFICATION_THRESHOLD)?.value)
}

/// Renormalized `(T₀₀, T₁₁)` weak values of a single quantum `(ω, k)`.
pub fn miracle_stress_weak(
    a: Complex,
    b: Complex,
    g: Complex,
    d: Complex,
    omega: f64,
    k: f64,
) -> Result<(Complex, Complex)> {
    if !(omega > 0.0) {
        return Err(Error::InvalidParams(format!(
            "omega must be positive, got {omega}"
        )));
    }
    let w = miracle_number_weak(a, b, g, d)?;
    Ok((w * omega, w * k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::DMatrix;

    fn r(x: f64) -> Complex {
        Complex::new(x, 0.0)
    }

    fn quadruple() -> [Complex; 4] {
        [
            r(3f64.sqrt() / 2.0),
            r(0.5),
            r(2.0 / 7f64.sqrt()),
            r(-(3.0f64 / 7.0).sqrt()),
        ]
    }

    #[test]
    fn two_level_number_is_minus_one() {
        let input = StateVector::from_real(&[3f64.sqrt() / 2.0, 0.5]).unwrap();
        let output = StateVector::from_real(&[2.0 / 7f64.sqrt(), -(3.0f64 / 7.0).sqrt()]).unwrap();
        let n = OperatorMatrix::diagonal(&[0.0, 1.0]);
        let h = OperatorMatrix::zeros(2);
        let res = weak_value(&input, &output, &n, &h, 0.0, 0.0, 0.0).unwrap();
        assert!((res.value - r(-1.0)).norm() < 1e-12);
        assert!((res.overlap_magnitude - (3.0f64 / 28.0).sqrt()).abs() < 1e-14);
        assert!(!res.amplified);

        let [a, b, g, d] = quadruple();
        assert!((miracle_number_weak(a, b, g, d).unwrap() - r(-1.0)).norm() < 1e-12);
        let (t00, t11) = miracle_stress_weak(a, b, g, d, 2.5, 1.5).unwrap();
        assert!((t00 - r(-2.5)).norm() < 1e-12);
        assert!((t11 - r(-1.5)).norm() < 1e-12);
    }

    #[test]
    fn identity_weak_value_is_one() {
        let input = StateVector::from_real(&[1.0, 2.0, -0.5]).unwrap();
        let output = StateVector::new(vec![
            Complex::new(0.3, 1.0),
            r(0.2),
            Complex::new(0.0, -1.0),
        ])
        .unwrap();
        let res = weak_value(
            &input,
            &output,
            &OperatorMatrix::identity(3),
            &OperatorMatrix::zeros(3),
            0.0,
            1.0,
            2.0,
        )
        .unwrap();
        assert!((res.value - r(1.0)).norm() < 1e-14);
    }

    #[test]
    fn orthogonal_selection_is_an_error() {
        let input = StateVector::basis(2, 0).unwrap();
        let output = StateVector::basis(2, 1).unwrap();
        let err = weak_value(
            &input,
            &output,
            &OperatorMatrix::identity(2),
            &OperatorMatrix::zeros(2),
            0.0,
            0.0,
            0.0,
        )
        .unwrap_err();
        assert!(matches!(err, Error::OrthogonalPostSelection { .. }));
        assert!(matches!(
            miracle_number_weak(r(1.0), r(0.0), r(0.0), r(1.0)),
            Err(Error::OrthogonalPostSelection { .. })
        ));
    }

    #[test]
    fn miracle_edge_cases() {
        let [a, b, _, _] = quadruple();
        assert_eq!(miracle_number_weak(a, b, r(1.0), r(0.0)).unwrap(), r(0.0));
        let (t00, t11) = miracle_stress_weak(r(1.0), r(0.0), r(0.6), r(0.8), 1.0, 1.0).unwrap();
        assert_eq!((t00, t11), (r(0.0), r(0.0)));
        assert!(miracle_number_weak(r(1.0), r(1.0), r(1.0), r(0.0)).is_err());
        assert!(miracle_stress_weak(a, b, r(1.0), r(0.0), 0.0, 1.0).is_err());
    }

    #[test]
    fn rejects_bad_times_and_dimensions() {
        let s2 = StateVector::basis(2, 0).unwrap();
        let s3 = StateVector::basis(3, 0).unwrap();
        let id = OperatorMatrix::identity(2);
        assert!(weak_value(&s2, &s2, &id, &id, 1.0, 0.0, 2.0).is_err());
        assert!(weak_value(&s2, &s3, &id, &id, 0.0, 0.0, 0.0).is_err());
        let bad = OperatorMatrix::new(DMatrix::zeros(3, 3)).unwrap();
        assert!(weak_value(&s2, &s2, &bad, &id, 0.0, 0.0, 0.0).is_err());
    }
}
