use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series degree must be nonnegative, got {0}")]
    NegativeDegree(i64),

    #[error("second Kummer parameter must be a positive integer, got {0} (Pochhammer pole)")]
    PochhammerPole(i64),

    #[error("argument must be nonnegative, got {0}")]
    NegativeArgument(i64),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("dipole axis must be +z for this construction, got {0:?}")]
    NonAxialDipole([f64; 3]),

    #[error("length scale must be positive and finite, got {0}")]
    InvalidLengthScale(f64),

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("grid extent {r_max} does not cover the turning point estimate {required}")]
    GridTooShort { r_max: f64, required: f64 },

    #[error("requested {requested} eigenvalues from a {size}x{size} matrix")]
    TooManyEigenvalues { requested: usize, size: usize },

    #[error("basis functions must share one angular index and length scale: {0}")]
    IncompatibleBasis(String),

    #[error("convergence study needs at least 3 grids, got {0}")]
    TooFewGrids(usize),

    #[error("grids {0} and {1} have the same step; order estimate is undefined")]
    DegenerateGrids(usize, usize),
}
