use thiserror::Error;

/// Errors across the geometric and algebraic layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("unsupported dimension {0} (expected 2, 3 or 4)")]
    UnsupportedDimension(usize),

    #[error("zero vector rejected (norm {0:.3e} below tolerance)")]
    ZeroVector(f64),

    #[error("configuration has {got} points, expected {expected}")]
    WrongPointCount { got: usize, expected: usize },

    #[error("matrix is not unitary (defect {0:.3e})")]
    NotUnitary(f64),

    #[error("degenerate eigenspace: eigenvalues separated by only {0:.3e}")]
    DegenerateEigenspace(f64),

    #[error("operation undefined at the pinch point phi = pi/2")]
    PinchInput,

    #[error("variable sets differ: [{0}] vs [{1}]")]
    VariableMismatch(String, String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("division not exact: remainder has {0} terms")]
    NonExactDivision(usize),

    #[error("polynomial is not symmetric under swapping {0} and {1}")]
    NotSymmetric(String, String),

    #[error("resultant requires positive degree in {0}, got {1}")]
    ResultantDegree(String, usize),

    #[error("parse error at `{0}`: {1}")]
    Parse(String, String),

    #[error("root refinement exceeded iteration cap; {} roots isolated so far", partial.len())]
    IterationCap { partial: Vec<f64> },

    #[error("t = {0} is excluded (t = 0 and |t| = 1/sqrt(3) are singular)")]
    ExcludedT(f64),

    #[error("eliminant has unexpected degree {degree} (expected 6); raw polynomial: {raw}")]
    UnexpectedDegree { degree: usize, raw: String },

    #[error("root finding failed: {0}")]
    RootFinding(String),

    #[error("malformed configuration JSON: {0}")]
    Json(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
