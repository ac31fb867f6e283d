//! Exhaustive listing of the signed-digit words of a value at one width.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::word::BsdWord;

/// Widths past this are refused by [`enumerate_bsd`]: the output size grows
/// like a Fibonacci number of the width.
pub const DEFAULT_ENUMERATION_LIMIT: u32 = 64;

/// Every width-`bits` signed-digit word with value n, each exactly once.
///
/// Deterministic order: positions are filled most significant first, trying
/// digit -1, then 0, then +1; a branch dies as soon as the residual target
/// exceeds what the remaining positions can represent. Since -1 < 0 < +1,
/// the output is in ascending lexicographic digit order.
pub fn enumerate_bsd(n: &BigInt, bits: u32) -> Result<Vec<BsdWord>, Error> {
    enumerate_bsd_with_limit(n, bits, DEFAULT_ENUMERATION_LIMIT)
}

/// [`enumerate_bsd`] with an explicit guard limit in place of
/// [`DEFAULT_ENUMERATION_LIMIT`].
pub fn enumerate_bsd_with_limit(n: &BigInt, bits: u32, limit: u32) -> Result<Vec<BsdWord>, Error> {
    if bits > limit {
        return Err(Error::EnumerationLimitExceeded { bits, limit });
    }
    // weight[p] = 2^p
    let weights: Vec<BigInt> = (0..bits).map(|p| BigInt::one() << p).collect();
    let mut words = Vec::new();
    let mut digits = vec![0i8; bits as usize];
    descend(n, bits, &weights, &mut digits, &mut words);
    Ok(words)
}

fn descend(
    target: &BigInt,
    remaining: u32,
    weights: &[BigInt],
    digits: &mut [i8],
    words: &mut Vec<BsdWord>,
) {
    if remaining == 0 {
        if target.is_zero() {
            words.push(BsdWord::new(digits.to_vec()).expect("digits stay in range"));
        }
        return;
    }
    let pos = remaining - 1;
    let slot = digits.len() - remaining as usize;
    for digit in [-1i8, 0, 1] {
        let rest = target - i64::from(digit) * &weights[pos as usize];
        // the remaining positions cover [-(2^pos - 1), 2^pos - 1]
        if rest.magnitude().bits() <= u64::from(pos) {
            digits[slot] = digit;
            descend(&rest, pos, weights, digits, words);
        }
    }
    digits[slot] = 0;
}
