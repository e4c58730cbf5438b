use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("divisor must be monic")]
    NonMonicDivisor,
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("polynomial is not reciprocal")]
    NotReciprocal,
    #[error("reciprocal polynomial must have even positive degree, got {0}")]
    OddDegree(usize),
    #[error("expected degree {expected}, got {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("polynomial has zero constant term; reversal would drop degree")]
    ZeroConstantTerm,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("prime {0} divides the leading coefficient")]
    PrimeDividesLeading(u64),
    #[error("prime {0} exceeds the supported modulus range")]
    PrimeTooLarge(String),
    #[error("h is not irreducible modulo {0}")]
    NotIrreducibleModP(u64),
    #[error("expected a polynomial of degree 5, got degree {0}")]
    NotQuintic(usize),
    #[error("polynomial is inseparable (discriminant 0)")]
    Inseparable,
    #[error("polynomial is reducible: {0}")]
    Reducible(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
