//! Truncated two-mode Fock space for a `(k, −k)` pair, used as a brute-force
//! oracle for the Gaussian closed forms.
//!
//! Operators are stored sparsely: at `n_max = 60` the space has 3721 states
//! and the ladder matrices have one entry per row.
//!
//! Bogoliubov convention: `a_out,k = α a_in,k + β* a†_in,−k`, hence
//! `a_in,k = α* a_out,k − β* a†_out,−k`, and `|0_in⟩ ∝ Σ λⁿ |n, n⟩_out`
//! with `λ = β*/α*`.

use nalgebra::DVector;

use super::linalg::StateVector;
use super::weak::{WeakValueResult, AMPLIFICATION_THRESHOLD};
use crate::error::{Error, Result};
use crate::modes::BogoliubovPair;
use crate::specfun::Complex;

/// Largest probability allowed outside the truncated space.
pub const TRUNCATION_TAIL_LIMIT: f64 = 1e-10;

/// States `|n_k, n_−k⟩` with `0 ≤ n ≤ n_max`, index `n_k·(n_max+1) + n_−k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairFockBasis {
    pub n_max: usize,
}

/// Which member of the pair a ladder operator acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairSlot {
    Plus,
    Minus,
}

impl PairFockBasis {
    pub fn new(n_max: usize) -> Result<Self> {
        if n_max == 0 {
            return Err(Error::InvalidParams("n_max must be at least 1".into()));
        }
        Ok(Self { n_max })
    }

    pub fn dim(&self) -> usize {
        (self.n_max + 1) * (self.n_max + 1)
    }

    pub fn index(&self, n_plus: usize, n_minus: usize) -> usize {
        n_plus * (self.n_max + 1) + n_minus
    }

    pub fn occupations(&self, i: usize) -> (usize, usize) {
        (i / (self.n_max + 1), i % (self.n_max + 1))
    }

    /// Out-basis annihilator for one member of the pair.
    pub fn annihilation(&self, slot: PairSlot) -> FockOperator {
        let rows = (0..self.dim())
            .map(|i| {
                let (p, m) = self.occupations(i);
                // row i receives from the state with one more quantum
                let (src, n) = match slot {
                    PairSlot::Plus if p < self.n_max => (self.index(p + 1, m), p + 1),
                    PairSlot::Minus if m < self.n_max => (self.index(p, m + 1), m + 1),
                    _ => return Vec::new(),
                };
                vec![(src, Complex::new((n as f64).sqrt(), 0.0))]
            })
            .collect();
        FockOperator { rows }
    }

    pub fn creation(&self, slot: PairSlot) -> FockOperator {
        self.annihilation(slot).adjoint()
    }

    /// In-ladder annihilators `(a_in,k, a_in,−k)` as out-basis matrices.
    pub fn in_annihilators(&self, bog: &BogoliubovPair) -> (FockOperator, FockOperator) {
        let ac = bog.alpha.conj();
        let bc = -bog.beta.conj();
        let plus = FockOperator::combination(&[
            (ac, &self.annihilation(PairSlot::Plus)),
            (bc, &self.creation(PairSlot::Minus)),
        ]);
        let minus = FockOperator::combination(&[
            (ac, &self.annihilation(PairSlot::Minus)),
            (bc, &self.creation(PairSlot::Plus)),
        ]);
        (plus, minus)
    }

    /// `a†_k a_k + a†_−k a_−k` in the out basis.
    pub fn out_number(&self) -> FockOperator {
        let rows = (0..self.dim())
            .map(|i| {
                let (p, m) = self.occupations(i);
                if p + m == 0 {
                    Vec::new()
                } else {
                    vec![(i, Complex::new((p + m) as f64, 0.0))]
                }
            })
            .collect();
        FockOperator { rows }
    }
}

/// Sparse square operator, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct FockOperator {
    rows: Vec<Vec<(usize, Complex)>>,
}

impl FockOperator {
    pub fn identity(dim: usize) -> Self {
        Self {
            rows: (0..dim)
                .map(|i| vec![(i, Complex::new(1.0, 0.0))])
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn apply(&self, v: &DVector<Complex>) -> DVector<Complex> {
        DVector::from_iterator(
            self.dim(),
            self.rows
                .iter()
                .map(|row| row.iter().map(|&(j, x)| x * v[j]).sum::<Complex>()),
        )
    }

    pub fn adjoint(&self) -> Self {
        let mut rows = vec![Vec::new(); self.dim()];
        for (i, row) in self.rows.iter().enumerate() {
            for &(j, x) in row {
                rows[j].push((i, x.conj()));
            }
        }
        Self { rows }
    }

    /// `self · other`.
    pub fn compose(&self, other: &FockOperator) -> Self {
        let n = self.dim();
        let mut acc = vec![Complex::new(0.0, 0.0); n];
        let mut touched = vec![false; n];
        let mut cols = Vec::new();
        let rows = self
            .rows
            .iter()
            .map(|row| {
                for &(j, x) in row {
                    for &(l, y) in &other.rows[j] {
                        if !touched[l] {
                            touched[l] = true;
                            cols.push(l);
                        }
                        acc[l] += x * y;
                    }
                }
                cols.sort_unstable();
                let out = cols
                    .iter()
                    .filter(|&&l| acc[l] != Complex::new(0.0, 0.0))
                    .map(|&l| (l, acc[l]))
                    .collect();
                for &l in &cols {
                    acc[l] = Complex::new(0.0, 0.0);
                    touched[l] = false;
                }
                cols.clear();
                out
            })
            .collect();
        Self { rows }
    }

    /// `Σ cᵢ Oᵢ`.
    pub fn combination(terms: &[(Complex, &FockOperator)]) -> Self {
        let n = terms.first().map_or(0, |(_, op)| op.dim());
        let mut acc = vec![Complex::new(0.0, 0.0); n];
        let mut touched = vec![false; n];
        let mut cols = Vec::new();
        let rows = (0..n)
            .map(|i| {
                for (c, op) in terms {
                    for &(j, x) in &op.rows[i] {
                        if !touched[j] {
                            touched[j] = true;
                            cols.push(j);
                        }
                        acc[j] += c * x;
                    }
                }
                cols.sort_unstable();
                let out = cols
                    .iter()
                    .filter(|&&j| acc[j] != Complex::new(0.0, 0.0))
                    .map(|&j| (j, acc[j]))
                    .collect();
                for &j in &cols {
                    acc[j] = Complex::new(0.0, 0.0);
                    touched[j] = false;
                }
                cols.clear();
                out
            })
            .collect();
        Self { rows }
    }

    /// `½(self·other + other·self)`.
    pub fn symmetrized(&self, other: &FockOperator) -> Self {
        let half = Complex::new(0.5, 0.0);
        Self::combination(&[(half, &self.compose(other)), (half, &other.compose(self))])
    }
}

/// `|0_in⟩` expressed in the out Fock basis, `c₀ Σ λⁿ |n, n⟩`, `c₀ > 0`.
pub fn in_vacuum_in_out_basis(bog: &BogoliubovPair, basis: &PairFockBasis) -> Result<StateVector> {
    let lambda = bog.beta.conj() / bog.alpha.conj();
    let r = lambda.norm();
    if !(r < 1.0) {
        return Err(Error::InvalidParams(format!(
            "|beta/alpha| = {r} must be below 1"
        )));
    }
    let tail = r.powi(2 * (basis.n_max as i32 + 1));
    if tail > TRUNCATION_TAIL_LIMIT {
        return Err(Error::Truncation {
            n_max: basis.n_max,
            tail,
            limit: TRUNCATION_TAIL_LIMIT,
        });
    }
    let mut v = DVector::zeros(basis.dim());
    let mut amp = Complex::new(1.0, 0.0);
    for n in 0..=basis.n_max {
        v[basis.index(n, n)] = amp;
        amp *= lambda;
    }
    StateVector::from_dvector(v)
}

/// `⟨post|obs|pre⟩ / ⟨post|pre⟩` with a sparse observable.
pub fn oracle_weak_value(
    pre: &StateVector,
    post: &StateVector,
    obs: &FockOperator,
) -> Result<WeakValueResult> {
    if pre.dim() != obs.dim() || post.dim() != obs.dim() {
        return Err(Error::InvalidParams("oracle dimension mismatch".into()));
    }
    let num = post.amplitudes().dotc(&obs.apply(pre.amplitudes()));
    let den = post.inner(pre);
    WeakValueResult::from_ratio(num, den, AMPLIFICATION_THRESHOLD)
}

/// `⟨0_out|obs|0_in⟩ / ⟨0_out|0_in⟩` for one mode pair.
pub fn oracle_pair_weak_value(
    bog: &BogoliubovPair,
    obs: &FockOperator,
    basis: &PairFockBasis,
) -> Result<WeakValueResult> {
    let pre = in_vacuum_in_out_basis(bog, basis)?;
    let post = StateVector::basis(basis.dim(), 0)?;
    oracle_weak_value(&pre, &post, obs)
}

/// `⟨ψ|obs|ψ⟩`.
pub fn oracle_expectation(state: &StateVector, obs: &FockOperator) -> Complex {
    state.amplitudes().dotc(&obs.apply(state.amplitudes()))
}
