use thiserror::Error;

/// Failure to read one of the canonical text forms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected character {0:?} at offset {1}")]
    UnexpectedChar(char, usize),
    #[error("unexpected token {0:?}")]
    UnexpectedToken(String),
    #[error("variable {found:?} is not valid here (expected {expected:?})")]
    WrongVariable { expected: char, found: char },
    #[error("exponent {0} exceeds the supported maximum")]
    ExponentTooLarge(u64),
    #[error("modulus mismatch: element says {found}, domain uses {expected}")]
    ModulusMismatch { expected: u64, found: u64 },
    #[error("division by zero in scalar")]
    ZeroDenominator,
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("invalid domain: {0}")]
    InvalidDomain(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("factorization budget exceeded: {0}")]
    FactorBudget(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("budget of {budget} exhausted: {what}")]
    BudgetExhausted { budget: u64, what: String },
    #[error("instance outside oracle budget: {0}")]
    OutOfOracleBudget(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
