use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("valuation of zero is infinite")]
    ZeroValuation,
    #[error("denominator is divisible by {p}")]
    NonInvertibleDenominator { p: u64 },
    #[error("{value} is not invertible modulo {modulus}")]
    NonInvertible { value: u64, modulus: u64 },
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("constant term of the divisor is not invertible")]
    NonInvertibleConstantTerm,
    #[error("leading coefficient is not a unit")]
    NonUnitLeadingCoefficient,
    #[error("operation requires a field (alpha = 1)")]
    NotAField,
    #[error("factors are not coprime modulo p")]
    NotCoprime,
    #[error("factors do not multiply to the target modulo p")]
    LiftMismatch,
    #[error("invalid Riccati parameters: {0}")]
    InvalidParams(String),
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("Padé linear system is inconsistent")]
    SingularPadeSystem,
    #[error("non-integral value where an integer was required: {0}")]
    IntegralityViolation(String),
    #[error("prime {p} is not supported for this family")]
    UnsupportedPrime { p: u64 },
    #[error("family not supported by this operation")]
    UnsupportedFamily,
    #[error("no zero run of length {window} found within {length} terms (raise max_len)")]
    DegreeBoundExceeded { length: usize, window: usize },
    #[error("no period confirmed within {length} terms")]
    HorizonTooShort { length: usize },
    #[error("n = {n} is not in a valid congruence class modulo {p}")]
    InvalidCongruenceClass { n: u64, p: u64 },
    #[error("arithmetic overflow: {0}")]
    Overflow(&'static str),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
