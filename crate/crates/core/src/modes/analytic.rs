//! Exact in/out mode functions and the closed-form Bogoliubov coefficients.
//!
//! With `L(η) = ln(2 cosh ρη)` and `ε = ω₋/ρ` both modes share the
//! prefactor `exp(−iω₊η − iεL)`:
//!
//! ```text
//! u_in  = (4πω_in)^{-1/2}  e^{−iω₊η − iεL} ₂F₁(1+iε, iε; 1 − iω_in/ρ;  ½(1 + tanh ρη))
//! u_out = (4πω_out)^{-1/2} e^{−iω₊η − iεL} ₂F₁(1+iε, iε; 1 + iω_out/ρ; ½(1 − tanh ρη))
//! ```
//!
//! so that `u_in → (4πω_in)^{-1/2} e^{−iω_in η}` as `η → −∞` and
//! `u_out → (4πω_out)^{-1/2} e^{−iω_out η}` as `η → +∞`. The spatial factor
//! `e^{ikx}` is left out everywhere.

use std::f64::consts::PI;

use crate::error::Result;
use crate::model::{frequencies, Frequencies, ModelParams};
use crate::specfun::{gamma_ratio, hyp2f1_split, Complex};

/// Which asymptotic region a mode is positive-frequency in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    In,
    Out,
}

/// `(α_k, β_k)` with `u_in = α u_out + β u_out*`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BogoliubovPair {
    pub alpha: Complex,
    pub beta: Complex,
}

impl BogoliubovPair {
    /// `|α|² − |β|² − 1`, zero for a bosonic transformation.
    pub fn normalization_defect(&self) -> f64 {
        self.alpha.norm_sqr() - self.beta.norm_sqr() - 1.0
    }

    /// `|β/α|`, the squeezing ratio of the in vacuum seen from the out region.
    pub fn squeeze_ratio(&self) -> f64 {
        self.beta.norm() / self.alpha.norm()
    }

    pub fn trivial() -> Self {
        BogoliubovPair {
            alpha: Complex::new(1.0, 0.0),
            beta: Complex::new(0.0, 0.0),
        }
    }
}

/// `ln(2 cosh x)` without overflow.
fn ln_two_cosh(x: f64) -> f64 {
    let a = x.abs();
    a + (-2.0 * a).exp().ln_1p()
}

/// `½(1 + tanh x)` and its complement, each to full relative precision.
fn logistic_pair(x: f64) -> (f64, f64) {
    // ½(1 + tanh x) = 1 / (1 + e^{−2x})
    let up = 1.0 / (1.0 + (-2.0 * x).exp());
    let down = 1.0 / (1.0 + (2.0 * x).exp());
    (up, down)
}

struct ModeParts {
    norm: f64,
    a: Complex,
    b: Complex,
    c: Complex,
    /// hypergeometric argument and its complement
    z: f64,
    w: f64,
    /// dz/dη
    dz: f64,
}

fn parts(params: &ModelParams, f: &Frequencies, region: Region, eta: f64) -> ModeParts {
    let rho = params.rho;
    let eps = f.omega_minus / rho;
    let x = rho * eta;
    let (up, down) = logistic_pair(x);
    let i = Complex::i();
    match region {
        Region::In => ModeParts {
            norm: (4.0 * PI * f.omega_in).powf(-0.5),
            a: 1.0 + i * eps,
            b: i * eps,
            c: 1.0 - i * (f.omega_in / rho),
            z: up,
            w: down,
            dz: 2.0 * rho * up * down,
        },
        Region::Out => ModeParts {
            norm: (4.0 * PI * f.omega_out).powf(-0.5),
            a: 1.0 + i * eps,
            b: i * eps,
            c: 1.0 + i * (f.omega_out / rho),
            z: down,
            w: up,
            dz: -2.0 * rho * up * down,
        },
    }
}

fn envelope(params: &ModelParams, f: &Frequencies, eta: f64) -> Complex {
    let phase = -f.omega_plus * eta - f.omega_minus / params.rho * ln_two_cosh(params.rho * eta);
    Complex::from_polar(1.0, phase)
}

/// η-dependent factor of `u_k^{in}` or `u_k^{out}`.
pub fn mode_function(params: &ModelParams, region: Region, k: f64, eta: f64) -> Result<Complex> {
    let f = frequencies(params, k)?;
    let p = parts(params, &f, region, eta);
    let hyp = hyp2f1_split(p.a, p.b, p.c, p.z, p.w)?;
    Ok(p.norm * envelope(params, &f, eta) * hyp)
}

/// Mode function together with its conformal-time derivative.
pub fn mode_function_with_derivative(
    params: &ModelParams,
    region: Region,
    k: f64,
    eta: f64,
) -> Result<(Complex, Complex)> {
    let f = frequencies(params, k)?;
    let p = parts(params, &f, region, eta);
    let hyp = hyp2f1_split(p.a, p.b, p.c, p.z, p.w)?;
    // d/dz ₂F₁(a,b;c;z) = (ab/c) ₂F₁(a+1,b+1;c+1;z)
    let dhyp = if p.b == Complex::new(0.0, 0.0) {
        Complex::new(0.0, 0.0)
    } else {
        p.a * p.b / p.c * hyp2f1_split(p.a + 1.0, p.b + 1.0, p.c + 1.0, p.z, p.w)?
    };
    let env = envelope(params, &f, eta);
    let dphase = -Complex::i() * (f.omega_plus + f.omega_minus * (params.rho * eta).tanh());
    let u = p.norm * env * hyp;
    let du = p.norm * env * (dphase * hyp + dhyp * p.dz);
    Ok((u, du))
}

/// Closed-form `(α_k, β_k)` from ratios of Gamma functions.
pub fn bogoliubov_closed_form(params: &ModelParams, k: f64) -> Result<BogoliubovPair> {
    let f = frequencies(params, k)?;
    let rho = params.rho;
    let i = Complex::i();
    let (wi, wo, wp, wm) = (
        f.omega_in / rho,
        f.omega_out / rho,
        f.omega_plus / rho,
        f.omega_minus / rho,
    );
    let pre = (f.omega_out / f.omega_in).sqrt();
    let one = Complex::new(1.0, 0.0);
    let alpha = pre * gamma_ratio(&[one - i * wi, -i * wo], &[-i * wp, one - i * wp])?;
    // Γ(iω₋/ρ) has a pole at ω₋ = 0, where β vanishes
    let beta = pre * gamma_ratio(&[one - i * wi, i * wo], &[i * wm, one + i * wm])?;
    Ok(BogoliubovPair { alpha, beta })
}

/// `(|α_k|², |β_k|²)` from the hyperbolic-sine forms, evaluated in log space.
pub fn bogoliubov_sinh_form(params: &ModelParams, k: f64) -> Result<(f64, f64)> {
    let f = frequencies(params, k)?;
    let s = PI / params.rho;
    let denom = ln_sinh(s * f.omega_in) + ln_sinh(s * f.omega_out);
    let alpha_sq = (2.0 * ln_sinh(s * f.omega_plus) - denom).exp();
    let beta_sq = if f.omega_minus == 0.0 {
        0.0
    } else {
        (2.0 * ln_sinh(s * f.omega_minus.abs()) - denom).exp()
    };
    Ok((alpha_sq, beta_sq))
}

/// `ln sinh x` for `x > 0`.
fn ln_sinh(x: f64) -> f64 {
    if x > 20.0 {
        x + (-2.0 * x).exp().ln_1p() - std::f64::consts::LN_2
    } else {
        x.sinh().ln()
    }
}

/// `|u_in(η) − α u_out(η) − β u_out(η)*|`.
pub fn verify_mode_relation(params: &ModelParams, k: f64, eta: f64) -> Result<f64> {
    let bog = bogoliubov_closed_form(params, k)?;
    let u_in = mode_function(params, Region::In, k, eta)?;
    let u_out = mode_function(params, Region::Out, k, eta)?;
    Ok((u_in - bog.alpha * u_out - bog.beta * u_out.conj()).norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reference() -> ModelParams {
        ModelParams::new(1.0, 0.5, 1.0, 1.0).unwrap()
    }

    fn plane(omega: f64, eta: f64) -> Complex {
        (4.0 * PI * omega).powf(-0.5) * Complex::from_polar(1.0, -omega * eta)
    }

    #[test]
    fn asymptotic_plane_waves() {
        let p = reference();
        let f = frequencies(&p, 1.0).unwrap();
        let u = mode_function(&p, Region::In, 1.0, -10.0).unwrap();
        let want = plane(f.omega_in, -10.0);
        assert!((u - want).norm() < 1e-6 * want.norm());
        let u = mode_function(&p, Region::Out, 1.0, 10.0).unwrap();
        let want = plane(f.omega_out, 10.0);
        assert!((u - want).norm() < 1e-6 * want.norm());
    }

    #[test]
    fn in_mode_matches_mpmath() {
        let u = mode_function(&reference(), Region::In, 1.0, 0.7).unwrap();
        let want = Complex::new(0.092_738_646_253_893_43, -0.205_088_794_848_386_1);
        assert!((u - want).norm() < 1e-12);
    }

    #[test]
    fn massless_modes_coincide() {
        let p = reference().massless();
        for eta in [-6.0, -1.0, 0.0, 0.3, 4.0, 9.0] {
            let a = mode_function(&p, Region::In, 2.0, eta).unwrap();
            let b = mode_function(&p, Region::Out, 2.0, eta).unwrap();
            assert!((a - b).norm() < 1e-10);
        }
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let p = ModelParams::new(2.0, 1.2, 0.7, 1.3).unwrap();
        let h = 1e-5;
        for region in [Region::In, Region::Out] {
            for eta in [-3.0, -0.4, 0.0, 1.1, 5.0] {
                let (_, du) = mode_function_with_derivative(&p, region, 0.8, eta).unwrap();
                let up = mode_function(&p, region, 0.8, eta + h).unwrap();
                let dn = mode_function(&p, region, 0.8, eta - h).unwrap();
                let fd = (up - dn) / (2.0 * h);
                assert!((du - fd).norm() < 1e-8, "{region:?} eta = {eta} {du} {fd}");
            }
        }
    }

    #[test]
    fn exact_modes_have_constant_wronskian() {
        // i(u' u* − u*' u) = 1/(2π) for the (4πω)^{-1/2} normalization
        let p = ModelParams::new(1.5, 0.9, 1.3, 2.0).unwrap();
        for region in [Region::In, Region::Out] {
            for eta in [-7.0, -1.0, 0.0, 2.0, 7.0] {
                let (u, du) = mode_function_with_derivative(&p, region, 0.5, eta).unwrap();
                let w = Complex::i() * (du * u.conj() - du.conj() * u);
                assert!(
                    (w.re * 2.0 * PI - 1.0).abs() < 1e-11,
                    "{region:?} {eta}: {w} {}",
                    w.re * 2.0 * PI - 1.0
                );
                assert!(w.im.abs() < 1e-14);
            }
        }
    }

    #[test]
    fn closed_form_reference_values() {
        // mpmath Gamma products at 40 digits
        let bog = bogoliubov_closed_form(&reference(), 1.0).unwrap();
        let alpha = Complex::new(0.999_894_232_147_475_5, -0.020_446_605_712_149_394);
        let beta = Complex::new(0.013_561_154_184_437_917, 0.004_757_548_120_996_299);
        assert!((bog.alpha - alpha).norm() < 1e-12);
        assert!((bog.beta - beta).norm() < 1e-12);
    }

    #[test]
    fn gamma_and_sinh_forms_agree() {
        let p = reference();
        let bog = bogoliubov_closed_form(&p, 1.0).unwrap();
        let (a2, b2) = bogoliubov_sinh_form(&p, 1.0).unwrap();
        let f = frequencies(&p, 1.0).unwrap();
        let direct = (PI * f.omega_minus).sinh().powi(2)
            / ((PI * f.omega_in).sinh() * (PI * f.omega_out).sinh());
        assert!((b2 / direct - 1.0).abs() < 1e-14);
        assert!((bog.beta.norm_sqr() / b2 - 1.0).abs() < 1e-10);
        assert!((bog.alpha.norm_sqr() / a2 - 1.0).abs() < 1e-10);
        assert!(bog.normalization_defect().abs() < 1e-10);
    }

    #[test]
    fn massless_has_no_mixing() {
        let bog = bogoliubov_closed_form(&reference().massless(), 2.0).unwrap();
        assert_eq!(bog.beta, Complex::new(0.0, 0.0));
        assert!((bog.alpha.norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn mode_relation_holds() {
        let p = reference();
        assert!(verify_mode_relation(&p, 1.0, 0.0).unwrap() <= 1e-8);
        assert!(verify_mode_relation(&p, 1.0, -10.0).unwrap() <= 1e-8);
        assert!(verify_mode_relation(&p.massless(), 1.0, 0.4).unwrap() <= 1e-12);
    }
}
