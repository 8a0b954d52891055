use crate::error::{Error, Result};

/// One entry of a symmetric mode grid: `|k|` and how many modes it stands
/// for (2 for a `(k, −k)` pair, 1 for `k = 0`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairMode {
    pub k: f64,
    pub multiplicity: usize,
}

/// Collapses a grid into distinct `|k|` pairs, ascending.
///
/// A positive `k` alone stands for its pair. A negative `k` without its
/// positive partner, or a repeated value, is a usage error.
pub fn pair_grid(k_grid: &[f64]) -> Result<Vec<PairMode>> {
    if k_grid.is_empty() {
        return Err(Error::Usage("k grid is empty".into()));
    }
    if let Some(bad) = k_grid.iter().find(|k| !k.is_finite()) {
        return Err(Error::Usage(format!(
            "k grid contains non-finite value {bad}"
        )));
    }
    let mut sorted = k_grid.to_vec();
    sorted.sort_by(f64::total_cmp);
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::Usage(format!("k grid repeats k = {}", w[0])));
    }
    let mut pairs: Vec<PairMode> = sorted
        .iter()
        .filter(|&&k| k >= 0.0)
        .map(|&k| PairMode {
            k: k.abs(),
            multiplicity: if k == 0.0 { 1 } else { 2 },
        })
        .collect();
    for &k in sorted.iter().filter(|&&k| k < 0.0) {
        if sorted.binary_search_by(|x| x.total_cmp(&-k)).is_err() {
            return Err(Error::Usage(format!(
                "k grid is not symmetric: k = {k} has no partner {}",
                -k
            )));
        }
    }
    pairs.sort_by(|a, b| a.k.total_cmp(&b.k));
    Ok(pairs)
}
