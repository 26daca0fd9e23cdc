use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot normalize a zero vector (norm {norm:e})")]
    ZeroVector { norm: f64 },

    #[error("state vector is not normalized (norm {norm})")]
    NotNormalized { norm: f64 },

    #[error("non-finite amplitude or matrix entry")]
    NonFinite,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension {dim} is below the minimum of 2")]
    DimensionTooSmall { dim: usize },

    #[error("dimension {dim} exceeds the supported maximum of {max}")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("matrix is not Hermitian (max |M - M^H| entry {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error(
        "Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off:e})"
    )]
    NoConvergence { sweeps: usize, off: f64 },

    #[error(
        "pre- and post-selected states are orthogonal: |<phi|psi>| = {overlap:e} is on the pole"
    )]
    Pole { overlap: f64 },

    #[error("weak ratio denominator |<phi|A2|psi>| = {denominator:e} vanishes")]
    RatioPole { denominator: f64 },

    #[error("moment order {order} exceeds the maximum of {max}")]
    MomentOrderTooLarge { order: u32, max: u32 },

    #[error("Taylor order must be 1 or 2, got {order}")]
    InvalidTaylorOrder { order: u32 },

    #[error("phase of F is undefined at theta = {theta}: |F| = {modulus:e}")]
    PhaseUndefined { theta: f64, modulus: f64 },

    #[error("finite-difference step must be positive and finite, got {step}")]
    InvalidStep { step: f64 },

    #[error("invalid theta grid: {reason}")]
    InvalidGrid { reason: String },

    #[error("invalid sampling: {reason}")]
    InvalidSampling { reason: String },

    #[error("spectrum is not periodic over the requested period: {reason}")]
    NotPeriodic { reason: String },

    #[error("invalid grid resolution {n_theta}x{n_phi}: both must be at least 2")]
    InvalidResolution { n_theta: usize, n_phi: usize },

    #[error("non-finite angle")]
    InvalidAngle,

    #[error("scenario file not found: {}", path.display())]
    FileNotFound { path: PathBuf },

    #[error("malformed scenario at line {line}, column {column}: {message}")]
    MalformedInput {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("scenario schema violation in `{field}`: {reason}")]
    SchemaViolation { field: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// Process exit code for the command-line front end.
    ///
    /// 1 covers usage, schema and I/O problems, 2 a weak-value pole and 3 a
    /// refused spectrum check.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Pole { .. } | Error::RatioPole { .. } => 2,
            Error::NotPeriodic { .. } => 3,
            _ => 1,
        }
    }
}
