use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input is not an odd prime.
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    /// Polynomial division requires a divisor whose leading coefficient is a unit.
    #[error("divisor has a non-unit leading coefficient")]
    NonUnitLeadingCoefficient,

    /// Division by the zero polynomial.
    #[error("division by the zero polynomial")]
    DivisionByZero,

    /// Operands live in different Galois rings.
    #[error("operands belong to different Galois rings")]
    RingMismatch,

    /// A polynomial over the two-element field expected to be irreducible is not.
    #[error("polynomial {0} is reducible over GF(2)")]
    Reducible(String),

    /// Operation defined only for units.
    #[error("element is not a unit")]
    NotAUnit,

    /// No divisor of the supplied bound annihilates the element.
    #[error("element order does not divide {0}")]
    OrderBoundTooSmall(u64),

    /// A connection polynomial must have constant term 1.
    #[error("connection polynomial must have constant term 1")]
    BadConnectionPolynomial,

    /// The brute-force search reached its degree cap without a solution.
    #[error("no connection polynomial of degree <= {0}")]
    DegreeCapExceeded(usize),

    /// Invalid argument supplied by the caller.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A state that correct algebra cannot reach.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
