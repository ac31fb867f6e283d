//! Binary signed-digit (BSD) integers and Stern's diatomic sequence.
//!
//! A BSD word writes an integer as a fixed-width, most-significant-first
//! vector of digits in {-1, 0, +1}. The representation is redundant, and
//! this crate counts and lists the representations of a value:
//!
//! - [`count_bsd`]: the count at one width, by an interval-bisection scan
//!   costing one big-integer addition per width position.
//! - [`count_bsd_fast`]: the same count in O(log n) arithmetic steps no
//!   matter the width, via the arithmetic progression the counts follow.
//! - [`enumerate_bsd`]: the words themselves, in a fixed order.
//! - [`stern`]: Stern's diatomic sequence c (OEIS A002487); the width-i
//!   count of n equals c(2^i - n) for 0 < n < 2^i, which is what makes the
//!   fast route work.
//! - [`count_hyper`] / [`count_hyper_bits`]: hyperbinary representation
//!   counts over the digit alphabet {0, 1, 2}; the digitwise map d -> 1 - d
//!   pairs width-i BSD words of n with hyperbinary words of 2^i - 1 - n.
//! - [`stern_ratio`]: the Calkin-Wilf fraction c(r)/c(r+1), always already
//!   in lowest terms.
//!
//! Counts grow like powers of the golden ratio in the width, so every count
//! is a [`Count`] (arbitrary precision); fixed-width arithmetic is never
//! used for them.

mod count;
mod enumerate;
mod error;
mod stern;
mod word;

pub use count::{
    ceil_log2, closed_form_pow_minus_1, closed_form_pow_plus_1, count_bsd, count_bsd_fast,
    count_hyper, count_hyper_bits, odd_decompose, ScanState,
};
pub use enumerate::{enumerate_bsd, enumerate_bsd_with_limit, DEFAULT_ENUMERATION_LIMIT};
pub use error::Error;
pub use stern::{fib, stern, stern_ratio, ReducedFraction};
pub use word::{BsdWord, HyperWord};

/// Arbitrary-precision natural number used for every representation count.
pub type Count = num_bigint::BigUint;
