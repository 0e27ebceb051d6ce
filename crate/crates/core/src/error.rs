use alloc::string::String;
use core::fmt;

use crate::grading::Degree;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A vector had the wrong number of entries.
    DimensionMismatch { expected: usize, found: usize },
    InvalidGrading(String),
    /// The two terms of a binomial live in different degrees.
    DegreeMismatch,
    ZeroCoefficient,
    /// `x^u - c x^u` is not a binomial.
    DegenerateBinomial,
    NotInFiber,
    NotInSemigroup(Degree),
    NotPrimitive,
    /// The ideal is not A-graded; `count` standard monomials were found in `degree`.
    NotAGraded { degree: Degree, count: u64 },
    /// A weight vector left ties that no tie-break resolves.
    DegenerateWeight,
    /// A configurable size guard was hit.
    GuardExceeded { what: &'static str, limit: usize },
    Overflow,
    /// A scheme point breaks one of the quadratic equations.
    NotOnScheme,
    /// Something a theorem forbids happened; carries diagnostics.
    Inconsistent(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::InvalidGrading(msg) => write!(f, "invalid grading set: {msg}"),
            Error::DegreeMismatch => f.write_str("binomial terms have different degrees"),
            Error::ZeroCoefficient => f.write_str("binomial coefficient must be nonzero"),
            Error::DegenerateBinomial => f.write_str("binomial has identical terms"),
            Error::NotInFiber => f.write_str("point does not lie in the fiber"),
            Error::NotInSemigroup(b) => write!(f, "degree {b} is not in the semigroup"),
            Error::NotPrimitive => f.write_str("binomial is not primitive"),
            Error::NotAGraded { degree, count } => write!(
                f,
                "ideal is not A-graded: degree {degree} has {count} standard monomials"
            ),
            Error::DegenerateWeight => {
                f.write_str("weight vector is not generic and no tie-break was given")
            }
            Error::GuardExceeded { what, limit } => {
                write!(f, "size guard exceeded: {what} (limit {limit})")
            }
            Error::Overflow => f.write_str("integer overflow in degree arithmetic"),
            Error::NotOnScheme => f.write_str("point does not satisfy the scheme equations"),
            Error::Inconsistent(msg) => write!(f, "internal consistency failure: {msg}"),
        }
    }
}
