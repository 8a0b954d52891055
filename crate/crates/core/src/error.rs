use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument sits on a pole or outside the function's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Series, quadrature or integrator failed to converge.
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// k = m = 0 gives a zero-frequency mode.
    #[error("degenerate mode: k = {k}, m = {m} has zero frequency")]
    DegenerateMode { k: f64, m: f64 },

    /// Overlap between pre- and post-selected states is (numerically) zero.
    #[error("orthogonal post-selection: |<out|in>| = {overlap:e} is below {threshold:e}")]
    OrthogonalPostSelection { overlap: f64, threshold: f64 },

    /// Fock cutoff leaves too much probability outside the truncated space.
    #[error("truncation error: tail mass {tail:e} beyond n_max = {n_max} exceeds {limit:e}")]
    Truncation { n_max: usize, tail: f64, limit: f64 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    /// Process exit code for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) | Error::InvalidParams(_) | Error::Io(_) => 1,
            Error::OrthogonalPostSelection { .. } => 3,
            Error::Domain(_)
            | Error::Numerical(_)
            | Error::DegenerateMode { .. }
            | Error::Truncation { .. } => 2,
        }
    }
}
