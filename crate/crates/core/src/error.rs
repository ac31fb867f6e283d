use std::fmt;

/// Errors from word construction, parsing, or operations called outside
/// their domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A digit outside the word's alphabet.
    DigitOutOfRange { digit: i8, alphabet: &'static str },
    /// A character outside the word's text alphabet.
    BadDigitChar { ch: char, alphabet: &'static str },
    /// 2-adic valuation of zero requested; zero has no odd part.
    OddPartOfZero,
    /// Calkin-Wilf ratio at r = 0: 0/1 is not a positive rational.
    RatioIndexZero,
    /// Enumeration refused: the output can be astronomically large, so
    /// widths beyond the guard are rejected rather than attempted.
    EnumerationLimitExceeded { bits: u32, limit: u32 },
    /// Closed form evaluated below its minimum width (needs bits >= k).
    WidthBelowExponent { exponent: u64, bits: u64 },
    /// Closed form needs exponent k >= 1.
    ExponentZero,
    /// Fraction constructor given a pair that is not coprime.
    FractionNotReduced,
    /// Fraction constructor given a zero denominator.
    FractionZeroDenominator,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DigitOutOfRange { digit, alphabet } => {
                write!(f, "digit {digit} is outside the alphabet {alphabet}")
            }
            Error::BadDigitChar { ch, alphabet } => {
                write!(f, "character {ch:?} is outside the alphabet {alphabet}")
            }
            Error::OddPartOfZero => write!(f, "zero has no 2-adic valuation"),
            Error::RatioIndexZero => write!(f, "ratio index must be at least 1"),
            Error::EnumerationLimitExceeded { bits, limit } => {
                write!(
                    f,
                    "enumeration at {bits} bits exceeds the guard limit {limit}"
                )
            }
            Error::WidthBelowExponent { exponent, bits } => {
                write!(f, "width {bits} is below the exponent {exponent}")
            }
            Error::ExponentZero => write!(f, "exponent must be at least 1"),
            Error::FractionNotReduced => write!(f, "fraction is not in lowest terms"),
            Error::FractionZeroDenominator => write!(f, "fraction denominator is zero"),
        }
    }
}

impl std::error::Error for Error {}
