use thiserror::Error;

/// Errors raised by the library.
///
/// `Invariant` never fires for well-formed input: it marks a broken
/// internal invariant and is surfaced instead of panicking so callers can
/// report it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("undefined gcd")]
    UndefinedGcd,
    #[error("3-adic valuation of zero is undefined")]
    ZeroValuation,
    #[error("square root of a negative integer")]
    NegativeSqrt,
    #[error("modulus must be an odd prime")]
    NotOddPrime,
    #[error("Legendre criterion requires square-free pairwise-coprime coefficients")]
    TernaryPrecondition,
    #[error("degenerate parameter pair")]
    DegenerateParameters,
    #[error("incidence must be a reduced nonzero rational with positive denominator")]
    InvalidIncidence,
    #[error("incidence undefined for {0}")]
    IncidenceUndefined(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not a primitive positive solution: {0}")]
    NotPpSolution(String),
    #[error("root has no predecessor")]
    RootHasNoPredecessor,
    #[error("max_m must be at least 5, got {0}")]
    ExponentBelowRoot(u32),
    #[error("duplicate exponent {0} in the solution tree")]
    DuplicateExponent(u32),
    #[error("scan of {needed} iterations exceeds budget of {budget}")]
    BudgetExceeded { needed: String, budget: u64 },
    #[error("malformed certificate: {0}")]
    Certificate(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
