use std::path::PathBuf;

use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max |m_ij - conj(m_ji)| = {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("density matrix trace is {trace}, expected 1")]
    TraceNotUnit { trace: f64 },

    #[error("eigenvalue {value:e} is below the clamp threshold")]
    NegativeEigenvalue { value: f64 },

    #[error("Kraus operators are not complete (max |sum E^dag E - I| = {deviation:e})")]
    IncompleteChannel { deviation: f64 },

    #[error("temperature must be strictly positive, got {0}")]
    NonPositiveTemperature(f64),

    #[error("parameter `{name}` must be finite, got {value}")]
    NonFiniteParameter { name: &'static str, value: f64 },

    #[error("invalid X state: {0}")]
    InvalidXState(String),

    #[error("damping strength gamma must lie in [0, 1], got {0}")]
    GammaOutOfRange(f64),

    #[error("invalid channel parameters: {0}")]
    InvalidChannel(String),

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),

    #[error("rows are neither a regular 1-axis nor a regular 2-axis table: {0}")]
    MixedAxisShape(String),

    #[error("malformed CSV: {0}")]
    MalformedCsv(String),

    #[error("sweep point ({coords}) failed: {source}")]
    SweepPoint {
        coords: String,
        #[source]
        source: Box<Error>,
    },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// True for errors caused by malformed user input rather than by a
    /// failing computation or I/O.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::NonPositiveTemperature(_)
                | Error::NonFiniteParameter { .. }
                | Error::GammaOutOfRange(_)
                | Error::InvalidChannel(_)
                | Error::InvalidSweep(_)
                | Error::MixedAxisShape(_)
                | Error::MalformedCsv(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
