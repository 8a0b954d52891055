//! Complex log-gamma by upward recurrence into the Stirling region.
//!
//! For `Re z < SHIFT_TO` the argument is pushed up with
//! `ln Γ(z) = ln Γ(z + n) − Σ ln(z + j)`, then the Stirling series is
//! summed. Using principal logarithms in the recurrence yields the
//! analytic continuation with a single cut along the negative real axis,
//! i.e. the same branch as `scipy.special.loggamma` / `mpmath.loggamma`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Below this real part the argument is shifted upward before Stirling.
const SHIFT_TO: f64 = 12.0;

/// `B_{2j} / (2j (2j − 1))` for j = 1..=10.
const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
    43_867.0 / 244_188.0,
    -174_611.0 / 125_400.0,
];

/// True when `z` is 0, −1, −2, … (a pole of Γ).
pub fn is_gamma_pole(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// Principal-branch `ln Γ(z)`.
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain(format!("ln_gamma: non-finite argument {z}")));
    }
    if is_gamma_pole(z) {
        return Err(Error::Domain(format!(
            "ln_gamma: pole of Gamma at z = {}",
            z.re
        )));
    }

    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < SHIFT_TO {
        shift += w.ln();
        w += 1.0;
    }
    Ok(stirling(w) - shift)
}

fn stirling(z: Complex64) -> Complex64 {
    let half_ln_2pi = 0.5 * (2.0 * PI).ln();
    let inv = z.inv();
    let inv2 = inv * inv;
    // Horner in 1/z² from the highest term down.
    let mut series = Complex64::new(0.0, 0.0);
    for c in STIRLING.iter().rev() {
        series = series * inv2 + c;
    }
    (z - 0.5) * z.ln() - z + half_ln_2pi + series * inv
}

/// `Γ(z)` via `exp(ln Γ(z))`.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    Ok(ln_gamma(z)?.exp())
}

/// `Π Γ(num_i) / Π Γ(den_j)`. A pole in the denominator makes the ratio
/// zero; a pole in the numerator is a domain error.
pub fn gamma_ratio(num: &[Complex64], den: &[Complex64]) -> Result<Complex64> {
    if den.iter().any(|&z| is_gamma_pole(z)) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for &z in num {
        acc += ln_gamma(z)?;
    }
    for &z in den {
        acc -= ln_gamma(z)?;
    }
    Ok(acc.exp())
}
