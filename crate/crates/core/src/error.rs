use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("the list of partial quotients is empty")]
    EmptyQuotients,
    #[error("partial quotient a_{index} must be positive")]
    NonPositiveQuotient { index: usize },
    #[error("integer overflow while computing {0}")]
    IntegerOverflow(&'static str),
    #[error("modulus must be positive, got {0}")]
    NonPositiveModulus(i64),
    #[error("{what} = {value} is outside [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("coordinate {value:e} is not a dyadic rational with at most {width} binary digits")]
    InexactDyadicRepresentation { value: f64, width: u32 },
    #[error("point set is empty")]
    EmptyPointSet,
    #[error("exact cell integration supports at most {max} points, got {found}")]
    TooManyPoints { max: usize, found: usize },
    #[error("gcd({p}, {q}) = {gcd}, expected coprime arguments")]
    NonCoprime { p: i64, q: i64, gcd: i64 },
    #[error("squared discrepancy evaluated to {0:e}, below the rounding allowance")]
    NegativeSquare(f64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
