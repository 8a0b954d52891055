//! The tanh cosmology `C(η) = A + B tanh(ρη)` and its asymptotic
//! dispersion relations.

use crate::error::{Error, Result};

/// `|ρη|` at and beyond which a point counts as asymptotic (`|tanh|`
/// within 1e-7 of 1).
pub const ASYMPTOTIC_RHO_ETA: f64 = 8.0;

// Slack for ρη computed as ρ·(±8/ρ) landing one ulp short.
const REGION_SLACK: f64 = 1e-12;

/// Absolute error target for [`eta_to_cosmic_time`].
pub const COSMIC_TIME_TOL: f64 = 1e-10;

/// Conformal scale factor parameters: `C(η) = a + b·tanh(rho·η)`, field mass `m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    pub a: f64,
    pub b: f64,
    pub rho: f64,
    pub m: f64,
}

impl ModelParams {
    /// Builds and validates. Requires `a > |b|`, `rho > 0`, `m ≥ 0`.
    pub fn new(a: f64, b: f64, rho: f64, m: f64) -> Result<Self> {
        let p = ModelParams { a, b, rho, m };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let ModelParams { a, b, rho, m } = *self;
        if ![a, b, rho, m].iter().all(|x| x.is_finite()) {
            return Err(Error::InvalidParams("parameters must be finite".into()));
        }
        if a <= b.abs() {
            return Err(Error::InvalidParams(format!(
                "A > |B| violated (A = {a}, B = {b})"
            )));
        }
        if rho <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "rho > 0 violated (rho = {rho})"
            )));
        }
        if m < 0.0 {
            return Err(Error::InvalidParams(format!("m >= 0 violated (m = {m})")));
        }
        Ok(())
    }

    /// Same cosmology with the mass switched off.
    pub fn massless(&self) -> Self {
        ModelParams { m: 0.0, ..*self }
    }

    /// Local squared frequency `k² + m²C(η)`.
    pub fn omega_sq(&self, k: f64, eta: f64) -> f64 {
        k * k + self.m * self.m * conformal_scale(self, eta)
    }

    /// True if `eta` lies in the far past (`ρη ≤ −8`).
    pub fn in_past_region(&self, eta: f64) -> bool {
        self.rho * eta <= -ASYMPTOTIC_RHO_ETA * (1.0 - REGION_SLACK)
    }

    /// True if `eta` lies in the far future (`ρη ≥ 8`).
    pub fn in_future_region(&self, eta: f64) -> bool {
        self.rho * eta >= ASYMPTOTIC_RHO_ETA * (1.0 - REGION_SLACK)
    }
}

/// Asymptotic angular frequencies of a mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frequencies {
    pub omega_in: f64,
    pub omega_out: f64,
    /// `(omega_out + omega_in) / 2`
    pub omega_plus: f64,
    /// `(omega_out − omega_in) / 2`
    pub omega_minus: f64,
}

/// `C(η) = A + B tanh(ρη)`.
pub fn conformal_scale(params: &ModelParams, eta: f64) -> f64 {
    params.a + params.b * (params.rho * eta).tanh()
}

/// In/out dispersion for wavenumber `k`:
/// `ω_in = √(k² + m²(A−B))`, `ω_out = √(k² + m²(A+B))`.
pub fn frequencies(params: &ModelParams, k: f64) -> Result<Frequencies> {
    if k == 0.0 && params.m == 0.0 {
        return Err(Error::DegenerateMode { k, m: params.m });
    }
    let m2 = params.m * params.m;
    let omega_in = (k * k + m2 * (params.a - params.b)).sqrt();
    let omega_out = (k * k + m2 * (params.a + params.b)).sqrt();
    Ok(Frequencies {
        omega_in,
        omega_out,
        omega_plus: 0.5 * (omega_out + omega_in),
        omega_minus: 0.5 * (omega_out - omega_in),
    })
}

/// Cosmic time elapsed between `eta_ref` and `eta`,
/// `t(η) − t(η_ref) = ∫ √C(η′) dη′`.
pub fn eta_to_cosmic_time(params: &ModelParams, eta: f64, eta_ref: f64) -> Result<f64> {
    if !(eta.is_finite() && eta_ref.is_finite()) {
        return Err(Error::Domain("eta_to_cosmic_time: non-finite bound".into()));
    }
    if eta == eta_ref {
        return Ok(0.0);
    }
    let (lo, hi, sign) = if eta > eta_ref {
        (eta_ref, eta, 1.0)
    } else {
        (eta, eta_ref, -1.0)
    };
    // Panels of width ~2/ρ keep the tanh transition resolved.
    let panel = 2.0 / params.rho;
    let n = ((hi - lo) / panel).ceil().max(1.0) as usize;
    let width = (hi - lo) / n as f64;
    let per_panel = COSMIC_TIME_TOL / n as f64;
    let mut total = 0.0;
    for i in 0..n {
        let x0 = lo + i as f64 * width;
        let x1 = if i + 1 == n { hi } else { x0 + width };
        let out = quadrature::double_exponential::integrate(
            |x| conformal_scale(params, x).sqrt(),
            x0,
            x1,
            per_panel,
        );
        if !(out.error_estimate <= per_panel) || !out.integral.is_finite() {
            return Err(Error::Numerical(format!(
                "cosmic-time quadrature on [{x0}, {x1}] reached error {:e} > {per_panel:e}",
                out.error_estimate
            )));
        }
        total += out.integral;
    }
    Ok(sign * total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reference() -> ModelParams {
        ModelParams::new(1.0, 0.5, 1.0, 1.0).unwrap()
    }

    #[test]
    fn scale_factor_limits() {
        let p = reference();
        assert_eq!(conformal_scale(&p, 0.0), 1.0);
        assert!((conformal_scale(&p, -20.0) - 0.5).abs() <= 1e-15);
        assert!((conformal_scale(&p, 20.0) - 1.5).abs() <= 1e-15);
    }

    #[test]
    fn validation_messages() {
        let err = ModelParams::new(0.4, 0.5, 1.0, 1.0).unwrap_err();
        assert!(err.to_string().contains("A > |B| violated"));
        assert!(ModelParams::new(1.0, 0.5, 0.0, 1.0).is_err());
        assert!(ModelParams::new(1.0, 0.5, 1.0, -1.0).is_err());
        assert!(ModelParams::new(1.0, -0.5, 1.0, 0.0).is_ok());
    }

    #[test]
    fn frequency_examples() {
        let p = ModelParams::new(1.0, 0.5, 1.0, 0.0).unwrap();
        let f = frequencies(&p, 3.0).unwrap();
        assert_eq!((f.omega_in, f.omega_out, f.omega_minus), (3.0, 3.0, 0.0));

        let p = ModelParams::new(1.0, 0.0, 1.0, 1.0).unwrap();
        let f = frequencies(&p, 0.0).unwrap();
        assert_eq!((f.omega_in, f.omega_out), (1.0, 1.0));

        let f = frequencies(&reference(), 1.0).unwrap();
        assert!((f.omega_in - 1.5f64.sqrt()).abs() < 1e-15);
        assert!((f.omega_out - 2.5f64.sqrt()).abs() < 1e-15);

        let p = ModelParams::new(1.0, 0.5, 1.0, 0.0).unwrap();
        assert!(matches!(
            frequencies(&p, 0.0),
            Err(Error::DegenerateMode { .. })
        ));
    }

    #[test]
    fn cosmic_time_examples() {
        let p = reference();
        assert_eq!(eta_to_cosmic_time(&p, 3.0, 3.0).unwrap(), 0.0);

        let flat = ModelParams::new(4.0, 0.0, 1.0, 1.0).unwrap();
        for eta in [-3.0, 0.5, 10.0] {
            let t = eta_to_cosmic_time(&flat, eta, 0.0).unwrap();
            assert!((t - 2.0 * eta).abs() < 1e-10);
        }

        // mpmath.quad reference
        let t = eta_to_cosmic_time(&p, 5.0, 0.0).unwrap();
        assert!((t - 5.974_746_079_615_209).abs() < 1e-10);
        let back = eta_to_cosmic_time(&p, 0.0, 5.0).unwrap();
        assert!((back + t).abs() < 1e-12);
    }
}
