use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("duplicate abscissa {0} in interpolation data")]
    DuplicateAbscissa(f64),

    #[error("duplicate spectral point near {0}")]
    DuplicatePoint(f64),

    #[error("spectrum is not strictly increasing at index {0}")]
    NotIncreasing(usize),

    #[error("non-finite value at index {0}")]
    NonFinite(usize),

    #[error("empty input")]
    Empty,

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("coupling u_{index} = {value} is not positive")]
    NonPositiveCoupling { index: usize, value: f64 },

    #[error("inconsistent weight data at spectral point {0}")]
    InconsistentWeights(usize),

    #[error("{what} out of range: {value} (allowed {min}..={max})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("Euclidean descent broke down at degree {degree}: {reason}")]
    EuclidBreakdown { degree: usize, reason: String },

    #[error("Stieltjes procedure broke down at degree {0}")]
    StieltjesBreakdown(usize),

    #[error("numerical breakdown: {0}")]
    NumericalBreakdown(String),

    #[error("even and odd root sums coincide; midpoint data is degenerate")]
    DegenerateMidpoint,

    #[error("odd sublattice is empty for a 1x1 matrix")]
    EmptySublattice,

    #[error("Hankel determinant {0:e} is too small")]
    NearSingularHankel(f64),

    #[error("matrix is not persymmetric (deviation {0:e})")]
    NotPersymmetric(f64),

    #[error("conjugated matrix is not tridiagonal (stray entry {0:e})")]
    NotTridiagonal(f64),

    #[error("cos 2θ vanishes at θ = {0}")]
    SingularAngle(f64),

    #[error("operation requires odd N, got N = {0}")]
    EvenOrder(usize),

    #[error("unknown algorithm identifier `{0}`")]
    UnknownAlgorithm(String),
}

impl Error {
    /// True for errors caused by malformed or out-of-contract input, as
    /// opposed to breakdowns of a numerical procedure on valid input.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::InconsistentWeights(_)
                | Error::EuclidBreakdown { .. }
                | Error::StieltjesBreakdown(_)
                | Error::NearSingularHankel(_)
                | Error::NotTridiagonal(_)
                | Error::NumericalBreakdown(_)
        )
    }
}
