use thiserror::Error;

/// Errors produced by the arithmetic, code construction and CLI layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("modulus {0} is not an odd prime")]
    InvalidModulus(u64),
    #[error("operands belong to different fields (p = {left} vs p = {right})")]
    ContextMismatch { left: u32, right: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd(0, 0) is undefined")]
    UndefinedGcd,
    #[error("element is not invertible modulo the given polynomial")]
    NotInvertible,
    #[error("invalid generator in component v{component}: {condition}")]
    InvalidGenerator { component: usize, condition: String },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("enumeration needs q^{exponent} = {required} items, cap is {cap}")]
    TooLarge {
        exponent: u32,
        required: f64,
        cap: u64,
    },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
