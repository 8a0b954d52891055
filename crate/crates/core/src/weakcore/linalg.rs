//! Dense states, operators and the matrix exponential.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::specfun::Complex;

/// Tolerance on `‖ψ‖ = 1` and on `M = M†` for flagged operators.
pub const STRUCTURE_TOL: f64 = 1e-12;

/// Normalized state in a finite-dimensional Hilbert space.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amps: DVector<Complex>,
}

impl StateVector {
    /// Normalizes `amplitudes`. A zero or non-finite vector is rejected.
    pub fn new(amplitudes: Vec<Complex>) -> Result<Self> {
        Self::from_dvector(DVector::from_vec(amplitudes))
    }

    pub fn from_dvector(v: DVector<Complex>) -> Result<Self> {
        if v.is_empty() {
            return Err(Error::InvalidParams("state vector has dimension 0".into()));
        }
        let norm = v.norm();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "state vector cannot be normalized (norm = {norm})"
            )));
        }
        Ok(Self {
            amps: v / Complex::new(norm, 0.0),
        })
    }

    /// Real amplitudes, normalized.
    pub fn from_real(amplitudes: &[f64]) -> Result<Self> {
        Self::new(amplitudes.iter().map(|&x| Complex::new(x, 0.0)).collect())
    }

    /// Basis vector `|i⟩` in dimension `dim`.
    pub fn basis(dim: usize, i: usize) -> Result<Self> {
        if i >= dim {
            return Err(Error::InvalidParams(format!(
                "basis index {i} ≥ dimension {dim}"
            )));
        }
        let mut v = DVector::zeros(dim);
        v[i] = Complex::new(1.0, 0.0);
        Ok(Self { amps: v })
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &DVector<Complex> {
        &self.amps
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> Complex {
        self.amps.dotc(&other.amps)
    }

    pub fn scaled_phase(&self, phase: f64) -> Self {
        Self {
            amps: &self.amps * Complex::from_polar(1.0, phase),
        }
    }
}

/// Square matrix with an optional Hermiticity guarantee.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    entries: DMatrix<Complex>,
    hermitian: bool,
}

impl OperatorMatrix {
    pub fn new(entries: DMatrix<Complex>) -> Result<Self> {
        if !entries.is_square() {
            return Err(Error::InvalidParams(format!(
                "operator must be square, got {}×{}",
                entries.nrows(),
                entries.ncols()
            )));
        }
        Ok(Self {
            entries,
            hermitian: false,
        })
    }

    /// Checks `max |M − M†| ≤ 1e-12` and sets the flag.
    pub fn hermitian(entries: DMatrix<Complex>) -> Result<Self> {
        let op = Self::new(entries)?;
        let dev = op.hermiticity_defect();
        if dev > STRUCTURE_TOL {
            return Err(Error::InvalidParams(format!(
                "operator is not Hermitian (max |M − M†| = {dev:e})"
            )));
        }
        Ok(Self {
            hermitian: true,
            ..op
        })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            entries: DMatrix::identity(dim, dim),
            hermitian: true,
        }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            entries: DMatrix::zeros(dim, dim),
            hermitian: true,
        }
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let d = DVector::from_iterator(values.len(), values.iter().map(|&x| Complex::new(x, 0.0)));
        Self {
            entries: DMatrix::from_diagonal(&d),
            hermitian: true,
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &DMatrix<Complex> {
        &self.entries
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian
    }

    pub fn hermiticity_defect(&self) -> f64 {
        let d = &self.entries - self.entries.adjoint();
        d.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `x·self + y·other`; Hermiticity survives only for real `x`, `y`.
    pub fn combine(&self, x: Complex, other: &OperatorMatrix, y: Complex) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::InvalidParams("operator dimensions differ".into()));
        }
        Ok(Self {
            entries: &self.entries * x + &other.entries * y,
            hermitian: self.hermitian && other.hermitian && x.im == 0.0 && y.im == 0.0,
        })
    }

    pub fn apply(&self, v: &DVector<Complex>) -> DVector<Complex> {
        &self.entries * v
    }
}

/// `e^M` (scaling and squaring around a Padé approximant).
pub fn expm(m: &DMatrix<Complex>) -> Result<DMatrix<Complex>> {
    if !m.is_square() || m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::Numerical(
            "expm: matrix must be square with finite entries".into(),
        ));
    }
    let r = m.exp();
    if r.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::Numerical("expm: result overflowed".into()));
    }
    Ok(r)
}

/// `U(τ) = e^{−iHτ}`.
pub fn evolution(h: &OperatorMatrix, tau: f64) -> Result<DMatrix<Complex>> {
    if tau == 0.0 {
        let n = h.dim();
        return Ok(DMatrix::identity(n, n));
    }
    expm(&(h.entries() * Complex::new(0.0, -tau)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_hermitian(rng: &mut ChaCha8Rng, n: usize, scale: f64) -> DMatrix<Complex> {
        let g = DMatrix::from_fn(n, n, |_, _| {
            Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        });
        (&g + g.adjoint()) * Complex::new(0.5 * scale, 0.0)
    }

    #[test]
    fn states_are_normalized() {
        let s = StateVector::from_real(&[3.0, 4.0]).unwrap();
        assert!((s.amplitudes().norm() - 1.0).abs() < 1e-15);
        assert!(StateVector::from_real(&[0.0, 0.0]).is_err());
        assert!(StateVector::new(vec![]).is_err());
    }

    #[test]
    fn hermitian_flag_is_checked() {
        let m = DMatrix::from_row_slice(
            2,
            2,
            &[
                Complex::new(1.0, 0.0),
                Complex::new(0.0, 1.0),
                Complex::new(0.0, 1.0),
                Complex::new(2.0, 0.0),
            ],
        );
        assert!(OperatorMatrix::hermitian(m.clone()).is_err());
        assert!(!OperatorMatrix::new(m).unwrap().is_hermitian());
        assert!(OperatorMatrix::diagonal(&[0.0, 1.0]).is_hermitian());
    }

    #[test]
    fn expm_of_pauli_rotation() {
        // e^{−iθσ_y} = cos θ − i sin θ σ_y
        let theta = 0.7;
        let sy = DMatrix::from_row_slice(
            2,
            2,
            &[
                Complex::new(0.0, 0.0),
                Complex::new(0.0, -1.0),
                Complex::new(0.0, 1.0),
                Complex::new(0.0, 0.0),
            ],
        );
        let u = evolution(&OperatorMatrix::hermitian(sy).unwrap(), theta).unwrap();
        assert!((u[(0, 0)].re - theta.cos()).abs() < 1e-15);
        assert!((u[(1, 0)].re - theta.sin()).abs() < 1e-15);
        assert!((u[(0, 1)].re + theta.sin()).abs() < 1e-15);
    }

    #[test]
    fn expm_matches_eigendecomposition() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (n, scale, t) in [(3, 1.0, 0.5), (6, 2.0, 4.0), (8, 3.0, 6.0), (5, 10.0, 5.0)] {
            let h = random_hermitian(&mut rng, n, scale);
            let u = evolution(&OperatorMatrix::hermitian(h.clone()).unwrap(), t).unwrap();
            let eig = h.symmetric_eigen();
            let phases = DVector::from_iterator(
                n,
                eig.eigenvalues
                    .iter()
                    .map(|&l| Complex::from_polar(1.0, -l * t)),
            );
            let exact =
                &eig.eigenvectors * DMatrix::from_diagonal(&phases) * eig.eigenvectors.adjoint();
            let err = (&u - &exact).iter().map(|z| z.norm()).fold(0.0, f64::max);
            assert!(err < 1e-12, "n = {n}, ‖H‖t ~ {}: {err:e}", scale * t);
            let unitarity = (&u * u.adjoint() - DMatrix::identity(n, n))
                .iter()
                .map(|z| z.norm())
                .fold(0.0, f64::max);
            assert!(unitarity < 1e-12);
        }
    }
}
