//! Gauss hypergeometric function `₂F₁(a, b; c; z)` for complex parameters
//! and real `z ∈ [0, 1]`.
//!
//! `z ≤ 1/2` sums the power series directly. Above that the argument is
//! mapped to `1 − z` with the standard two-term connection formula, which
//! needs `c − a − b` to be a non-integer. Integer gaps (the logarithmic
//! case) fall back to the direct series, bounded by the term budget.

use num_complex::Complex64;

use super::gamma::{gamma_ratio, is_gamma_pole};
use crate::error::{Error, Result};

/// Hard cap on series terms.
pub const MAX_TERMS: usize = 10_000;
/// Stop once `|term| < SERIES_EPS · |partial sum|`.
pub const SERIES_EPS: f64 = 1e-16;
/// Above this the `1 − z` transformation is used.
pub const DIRECT_LIMIT: f64 = 0.5;

fn is_nonpositive_integer(z: Complex64) -> bool {
    is_gamma_pole(z)
}

/// `₂F₁(a, b; c; z)`.
pub fn hyp2f1(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Result<Complex64> {
    hyp2f1_split(a, b, c, z, 1.0 - z)
}

/// As [`hyp2f1`], with `1 − z` supplied separately so that arguments close
/// to 1 keep full relative precision in the complementary variable.
pub fn hyp2f1_split(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    z: f64,
    one_minus_z: f64,
) -> Result<Complex64> {
    if !(0.0..=1.0).contains(&z) || !(0.0..=1.0).contains(&one_minus_z) {
        return Err(Error::Domain(format!("hyp2f1: z = {z} outside [0, 1]")));
    }
    if is_nonpositive_integer(c) {
        return Err(Error::Domain(format!(
            "hyp2f1: c = {c} is a nonpositive integer"
        )));
    }
    if z == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    // Terminating series is a polynomial; sum it anywhere on [0, 1].
    if is_nonpositive_integer(a) || is_nonpositive_integer(b) {
        return hyp2f1_series(a, b, c, z);
    }
    if z == 1.0 {
        return gauss_sum(a, b, c);
    }
    let s = c - a - b;
    let integer_gap = s.im == 0.0 && s.re == s.re.round();
    // The connection formula degenerates for integer c − a − b; the
    // series still converges for z < 1, and the term budget catches z ≈ 1.
    if z <= DIRECT_LIMIT || integer_gap {
        hyp2f1_series(a, b, c, z)
    } else {
        transformed(a, b, c, one_minus_z)
    }
}

/// Power series, valid for `|z| < 1` (and terminating polynomials).
pub fn hyp2f1_series(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Result<Complex64> {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        sum += term;
        if term.norm() < SERIES_EPS * sum.norm() || term == Complex64::new(0.0, 0.0) {
            return Ok(sum);
        }
        if !(sum.re.is_finite() && sum.im.is_finite()) {
            break;
        }
    }
    Err(Error::Numerical(format!(
        "hyp2f1 series did not converge in {MAX_TERMS} terms \
         (a = {a}, b = {b}, c = {c}, z = {z}); partial sum {sum}, last term {term}"
    )))
}

/// Evaluation through the `z → 1 − z` connection formula.
pub fn hyp2f1_transformed(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Result<Complex64> {
    transformed(a, b, c, 1.0 - z)
}

fn transformed(a: Complex64, b: Complex64, c: Complex64, w: f64) -> Result<Complex64> {
    let s = c - a - b;
    if s.im == 0.0 && s.re == s.re.round() {
        return Err(Error::Domain(format!(
            "hyp2f1: c − a − b = {} is an integer (logarithmic case not supported)",
            s.re
        )));
    }
    let one = Complex64::new(1.0, 0.0);

    let g1 = gamma_ratio(&[c, s], &[c - a, c - b])?;
    let f1 = if g1 == Complex64::new(0.0, 0.0) {
        g1
    } else {
        g1 * hyp2f1_series(a, b, one - s, w)?
    };

    let g2 = gamma_ratio(&[c, -s], &[a, b])?;
    let f2 = if g2 == Complex64::new(0.0, 0.0) {
        g2
    } else {
        let power = (s * w.ln()).exp();
        power * g2 * hyp2f1_series(c - a, c - b, one + s, w)?
    };
    Ok(f1 + f2)
}

/// Gauss summation `₂F₁(a, b; c; 1)`, requires `Re(c − a − b) > 0`.
fn gauss_sum(a: Complex64, b: Complex64, c: Complex64) -> Result<Complex64> {
    let s = c - a - b;
    if s.re <= 0.0 {
        return Err(Error::Domain(format!(
            "hyp2f1 at z = 1 diverges: Re(c − a − b) = {} ≤ 0",
            s.re
        )));
    }
    gamma_ratio(&[c, s], &[c - a, c - b])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel(got: Complex64, want: Complex64) -> f64 {
        (got - want).norm() / want.norm()
    }

    #[test]
    fn zero_argument_is_one() {
        let v = hyp2f1(c(1.3, 2.0), c(-0.4, 5.0), c(1.0, -3.0), 0.0).unwrap();
        assert_eq!(v, c(1.0, 0.0));
    }

    #[test]
    fn log_closed_form() {
        let z = 0.5;
        let v = hyp2f1(c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), z).unwrap();
        assert!((v.re - 2.0 * 2f64.ln()).abs() < 1e-14);
        for z in [0.3, 0.7, 0.95] {
            let v = hyp2f1(c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), z).unwrap();
            let want = -(1.0 - z).ln() / z;
            assert!((v.re - want).abs() < 1e-13 * want, "z = {z}");
        }
    }

    #[test]
    fn gauss_summation_limit() {
        let (a, b, cc) = (c(0.3, 0.7), c(0.2, -1.1), c(2.5, 0.4));
        let at_one = hyp2f1(a, b, cc, 1.0).unwrap();
        let near = hyp2f1(a, b, cc, 1.0 - 1e-13).unwrap();
        let closed = gamma_ratio(&[cc, cc - a - b], &[cc - a, cc - b]).unwrap();
        assert!(rel(at_one, closed) < 1e-14);
        assert!(rel(near, closed) < 1e-9);
    }

    #[test]
    fn mode_family_matches_mpmath() {
        // a = 1 + iω₋, b = iω₋, c = 1 − iω_in for k = m = ρ = 1, A = 1, B = 1/2
        let wi = 1.5f64.sqrt();
        let wo = 2.5f64.sqrt();
        let wm = 0.5 * (wo - wi);
        let (a, b) = (c(1.0, wm), c(0.0, wm));
        let cin = c(1.0, -wi);
        let cases = [
            (0.1, c(0.989_504_095_391_795_9, 0.005_396_804_515_991_953)),
            (0.4, c(0.950_936_156_625_792_3, 0.017_615_720_808_104_89)),
            (0.5, c(0.935_264_099_026_671_1, 0.019_027_122_586_193_3)),
            (0.6, c(0.918_136_859_889_795_6, 0.017_812_451_226_057_05)),
            (0.9, c(0.877_027_359_993_198_3, -0.020_494_467_130_361_63)),
            (
                0.999,
                c(0.883_367_158_526_026_8, -0.030_154_701_314_367_344),
            ),
        ];
        for (z, want) in cases {
            let got = hyp2f1(a, b, cin, z).unwrap();
            assert!(rel(got, want) < 1e-12, "z = {z}: {got} vs {want}");
        }
        let cout = c(1.0, wo);
        let got = hyp2f1(a, b, cout, 0.7).unwrap();
        assert!(rel(got, c(1.083_021_644_894_455_3, 0.047_661_389_832_133_87)) < 1e-12);

        let (a, b, cc) = (c(1.0, 3.2), c(0.0, 3.2), c(1.0, -12.5));
        let got = hyp2f1(a, b, cc, 0.75).unwrap();
        assert!(rel(got, c(0.735_636_040_336_429, -0.414_962_411_022_974_1)) < 1e-11);
        let got = hyp2f1(a, b, cc, 0.3).unwrap();
        assert!(rel(got, c(0.898_731_972_083_086_1, -0.204_452_581_138_995_97)) < 1e-11);
    }

    #[test]
    fn series_and_transformation_agree_on_overlap() {
        let wi = 3.0;
        let wo = 4.5;
        let wm = 0.5 * (wo - wi);
        let (a, b, cc) = (c(1.0, wm), c(0.0, wm), c(1.0, -wi));
        for z in [0.4, 0.6] {
            let s = hyp2f1_series(a, b, cc, z).unwrap();
            let t = hyp2f1_transformed(a, b, cc, z).unwrap();
            assert!((s - t).norm() < 1e-9 * s.norm(), "z = {z}");
        }
    }

    #[test]
    fn terminating_parameter_gives_polynomial() {
        // b = 0 → 1 everywhere, including the transformed range
        let v = hyp2f1(c(1.0, 0.0), c(0.0, 0.0), c(1.0, -2.0), 0.9).unwrap();
        assert_eq!(v, c(1.0, 0.0));
        // a = −2: 1 + 2·(−b/c) z + … exact quadratic
        let (b, cc, z) = (c(0.5, 1.0), c(2.0, 0.5), 0.8);
        let v = hyp2f1(c(-2.0, 0.0), b, cc, z).unwrap();
        let want = 1.0 - 2.0 * b / cc * z + b * (b + 1.0) / (cc * (cc + 1.0)) * z * z;
        assert!((v - want).norm() < 1e-15);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(hyp2f1(c(1.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0), 0.2).is_err());
        assert!(hyp2f1(c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), 1.2).is_err());
        // c − a − b = 0: logarithmic case
        assert!(hyp2f1(c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), 0.9).is_ok());
        assert!(matches!(
            hyp2f1_transformed(c(0.5, 1.0), c(0.5, -1.0), c(1.0, 0.0), 0.9),
            Err(Error::Domain(_))
        ));
    }
}
