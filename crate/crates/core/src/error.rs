use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A generator index outside `0..rank`.
    IndexOutOfRange {
        index: usize,
        rank: usize,
    },
    RankMismatch {
        expected: usize,
        found: usize,
    },
    InvalidCartan(String),
    /// A reduced word was required.
    NotReduced,
    /// Subword mask and ambient word disagree in length.
    MaskLength {
        expected: usize,
        found: usize,
    },
    WordTooLong {
        len: usize,
        max: usize,
    },
    FlavorMismatch,
    /// The group is infinite or larger than the requested bound.
    GroupTooLarge {
        limit: usize,
    },
    Precondition(String),
    /// A sample hit a zero denominator; draw another.
    ZeroDenominator,
    /// An exact division left a remainder.
    Inexact(String),
    /// Term budget exhausted during an operator product.
    BudgetExceeded {
        terms: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::IndexOutOfRange { index, rank } => {
                write!(f, "generator index {} out of range for rank {}", index + 1, rank)
            }
            Error::RankMismatch { expected, found } => {
                write!(f, "rank mismatch: expected {expected}, found {found}")
            }
            Error::InvalidCartan(msg) => write!(f, "invalid Cartan matrix: {msg}"),
            Error::NotReduced => write!(f, "word is not reduced"),
            Error::MaskLength { expected, found } => {
                write!(f, "subword mask has length {found}, ambient word has length {expected}")
            }
            Error::WordTooLong { len, max } => write!(f, "word of length {len} exceeds {max}"),
            Error::FlavorMismatch => write!(f, "operator flavors do not match"),
            Error::GroupTooLarge { limit } => {
                write!(f, "Weyl group has more than {limit} elements")
            }
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::ZeroDenominator => write!(f, "zero denominator at sample point"),
            Error::Inexact(msg) => write!(f, "inexact division: {msg}"),
            Error::BudgetExceeded { terms } => write!(f, "term budget exceeded ({terms} terms)"),
        }
    }
}

impl core::error::Error for Error {}
