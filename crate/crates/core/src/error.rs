use thiserror::Error;

use crate::ring::Ring;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different rings ({left} and {right})")]
    MixedRings { left: Ring, right: Ring },

    #[error("{dividend} is not divisible by {divisor} in {ring}")]
    InexactDivision {
        ring: Ring,
        dividend: String,
        divisor: String,
    },

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not a unit")]
    NotAUnit(String),

    #[error("invalid modulus {0}: expected a prime 2 <= p < 2^31")]
    InvalidModulus(u64),

    #[error("unknown ring '{0}': expected Z, Q or F<p>")]
    UnknownRing(String),

    #[error("polynomial is not monic (leading coefficient {0} is not a unit)")]
    NotMonic(String),

    #[error("polynomial is constant")]
    ConstantPolynomial,

    #[error("gcd of two zero polynomials is undefined")]
    BothZero,

    #[error("operation requires a prime field, got {0}")]
    WrongRing(Ring),

    #[error("(alpha, beta) = ({alpha}, {beta}) does not restrict to an automorphism of the ideal")]
    NotAnAutomorphism { alpha: String, beta: String },

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("coefficient {0} does not lie in {1}")]
    CoefficientNotInRing(String, Ring),

    #[error("input exceeds configured bound: {0}")]
    BoundExceeded(String),

    #[error("wrong number of arguments for '{command}': expected {expected}, got {got}")]
    Arity {
        command: String,
        expected: usize,
        got: usize,
    },

    #[error("internal consistency check failed: {0}")]
    TheoryViolation(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable identifier for the error kind.
    pub fn code(&self) -> &'static str {
        match self {
            Error::MixedRings { .. } => "MixedRings",
            Error::InexactDivision { .. } => "InexactDivision",
            Error::DivisionByZero => "DivisionByZero",
            Error::NotAUnit(_) => "NotAUnit",
            Error::InvalidModulus(_) => "InvalidModulus",
            Error::UnknownRing(_) => "UnknownRing",
            Error::NotMonic(_) => "NotMonic",
            Error::ConstantPolynomial => "ConstantPolynomial",
            Error::BothZero => "BothZero",
            Error::WrongRing(_) => "WrongRing",
            Error::NotAnAutomorphism { .. } => "NotAnAutomorphism",
            Error::Syntax { .. } => "SyntaxError",
            Error::CoefficientNotInRing(..) => "CoefficientNotInRing",
            Error::BoundExceeded(_) => "BoundExceeded",
            Error::Arity { .. } => "ArityError",
            Error::TheoryViolation(_) => "TheoryViolation",
            Error::Io(_) => "IoError",
        }
    }

    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Syntax { .. }
            | Error::CoefficientNotInRing(..)
            | Error::UnknownRing(_)
            | Error::InvalidModulus(_)
            | Error::Arity { .. } => 2,
            Error::TheoryViolation(_) => 4,
            Error::Io(_) => 1,
            _ => 3,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
