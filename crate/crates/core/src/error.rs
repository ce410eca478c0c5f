use thiserror::Error;

pub type Result<T> = std::result::Result<T, GoldenError>;

/// Domain errors raised by the library. Each variant names the violated
/// precondition.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GoldenError {
    #[error("precision {requested} is below the minimum of {minimum} digits")]
    PrecisionTooLow { requested: u32, minimum: u32 },
    #[error("precision {requested} exceeds the maximum of {maximum} digits")]
    PrecisionTooHigh { requested: u32, maximum: u32 },
    #[error("index {index} is outside the supported range |n| <= {limit}")]
    IndexOutOfRange { index: i64, limit: i64 },
    #[error("argument {re} + {im}i is outside the supported range |Re z|, |Im z| <= {limit}")]
    ArgumentOutOfRange { re: f64, im: f64, limit: f64 },
    #[error("{what} must be at least {minimum}, got {got}")]
    TooSmall {
        what: &'static str,
        got: i64,
        minimum: i64,
    },
    #[error("{what} must be at most {maximum}, got {got}")]
    TooLarge {
        what: &'static str,
        got: i64,
        maximum: i64,
    },
    #[error("higher Fibonacci number with m = 0 has a zero denominator F_0")]
    ZeroOrder,
    #[error("basic factorial [{index}]_q! vanishes for q = {q}")]
    VanishingFactorial { index: usize, q: f64 },
    #[error(
        "golden derivative of a callable is undefined at x = 0; use a polynomial or series form"
    )]
    SingularPoint,
    #[error("operation requires a polynomial function representation")]
    NotPolynomial,
    #[error("{0}")]
    InvalidArgument(String),
    #[error("{value} is not a Fibonacci number with an index of {parity} parity")]
    NotFibonacci { value: String, parity: &'static str },
    #[error("invalid spin label 2j = {0}")]
    InvalidSpin(i64),
    #[error("evaluation failed: {0}")]
    Evaluation(String),
}
