//! Stern's diatomic sequence (OEIS A002487, Dijkstra's fusc) and the
//! Calkin-Wilf fractions built from consecutive terms.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::Count;

/// Stern's diatomic sequence:
///
/// ```text
/// c(0) = 0,  c(1) = 1,  c(2m) = c(m),  c(2m+1) = c(m) + c(m+1)
/// ```
///
/// Computed by the two-register fusc scan, one addition per bit of `r`
/// from least to most significant. The naive recursion is exponential;
/// agreement with the recurrence is checked exhaustively in tests.
pub fn stern(r: &BigUint) -> Count {
    let mut even_path = Count::one();
    let mut result = Count::zero();
    for pos in 0..r.bits() {
        if r.bit(pos) {
            result += &even_path;
        } else {
            even_path += &result;
        }
    }
    result
}

/// Fibonacci numbers with F(0) = 0, F(1) = 1.
pub fn fib(k: u64) -> Count {
    let mut a = Count::zero();
    let mut b = Count::one();
    for _ in 0..k {
        a += &b;
        std::mem::swap(&mut a, &mut b);
    }
    a
}

/// A non-negative rational in lowest terms with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedFraction {
    numerator: Count,
    denominator: Count,
}

impl ReducedFraction {
    /// Accepts only an already-reduced pair: the constructor checks
    /// gcd = 1 rather than reducing.
    pub fn new(numerator: Count, denominator: Count) -> Result<Self, Error> {
        if denominator.is_zero() {
            return Err(Error::FractionZeroDenominator);
        }
        if !numerator.gcd(&denominator).is_one() {
            return Err(Error::FractionNotReduced);
        }
        Ok(ReducedFraction {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &Count {
        &self.numerator
    }

    pub fn denominator(&self) -> &Count {
        &self.denominator
    }
}

impl std::fmt::Display for ReducedFraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// The r-th Calkin-Wilf fraction c(r)/c(r+1), for r >= 1.
///
/// Walking r = 1, 2, 3, ... hits every positive rational exactly once,
/// already in lowest terms; the constructor asserts the coprimality
/// instead of reducing.
pub fn stern_ratio(r: &BigUint) -> Result<ReducedFraction, Error> {
    if r.is_zero() {
        return Err(Error::RatioIndexZero);
    }
    ReducedFraction::new(stern(r), stern(&(r + 1u32)))
}
