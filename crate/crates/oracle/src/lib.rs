//! Brute-force ground truth for representation counts.
//!
//! Everything here counts by walking every one of the 3^i digit vectors of a
//! width and comparing values: no recurrence, no closed form, no scan. That
//! makes it slow and trustworthy, which is the point - the fast routes in
//! `bsd-stern` are tested against these functions, never the other way
//! around.
//!
//! The walk is an odometer over the digit vector (least significant position
//! cycling fastest) with an incrementally maintained value, so a full
//! histogram of a width is one pass. Widths are guarded: the defaults allow
//! about 4.8 million vectors for signed-digit work and 59 thousand for
//! hyperbinary sweeps, and every entry point has a `_with_limit` variant for
//! deliberately going past that.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;

use bsd_stern::{BsdWord, Count};

/// Default guard for signed-digit sweeps: 3^14 is a few million vectors.
pub const DEFAULT_BSD_LIMIT: u32 = 14;

/// Default guard for hyperbinary sweeps.
pub const DEFAULT_HYPER_LIMIT: u32 = 10;

/// Hard ceiling keeping the incremental odometer value inside an i64.
const VALUE_SAFE_MAX_BITS: u32 = 45;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    /// The requested width is past the guard (or past what the odometer's
    /// fixed-width arithmetic can hold).
    LimitExceeded { bits: u32, limit: u32 },
    /// The operation needs a wider row than requested.
    BitsTooSmall { bits: u32, min: u32 },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::LimitExceeded { bits, limit } => {
                write!(
                    f,
                    "brute-force sweep at {bits} bits exceeds the limit {limit}"
                )
            }
            OracleError::BitsTooSmall { bits, min } => {
                write!(f, "operation needs at least {min} bits, got {bits}")
            }
        }
    }
}

impl std::error::Error for OracleError {}

fn check_limit(bits: u32, limit: u32) -> Result<(), OracleError> {
    let effective = limit.min(VALUE_SAFE_MAX_BITS);
    if bits > effective {
        return Err(OracleError::LimitExceeded {
            bits,
            limit: effective,
        });
    }
    Ok(())
}

/// Walk every width-`bits` digit vector over `lo..=hi` in odometer order,
/// least significant position cycling fastest. `f` sees the vector with
/// index p holding the weight-2^p digit, plus the vector's value.
fn for_each_vector(bits: u32, lo: i8, hi: i8, mut f: impl FnMut(&[i8], i64)) {
    let n = bits as usize;
    let mut digits = vec![lo; n];
    let mut value: i64 = if bits == 0 {
        0
    } else {
        i64::from(lo) * ((1i64 << bits) - 1)
    };
    loop {
        f(&digits, value);
        let mut p = 0;
        loop {
            if p == n {
                return;
            }
            if digits[p] < hi {
                digits[p] += 1;
                value += 1i64 << p;
                break;
            }
            digits[p] = lo;
            value -= i64::from(hi - lo) << p;
            p += 1;
        }
    }
}

/// Exhaustive count of the width-`bits` signed-digit vectors with value n.
pub fn brute_count_bsd(n: &BigInt, bits: u32) -> Result<Count, OracleError> {
    brute_count_bsd_with_limit(n, bits, DEFAULT_BSD_LIMIT)
}

pub fn brute_count_bsd_with_limit(n: &BigInt, bits: u32, limit: u32) -> Result<Count, OracleError> {
    check_limit(bits, limit)?;
    let target = match n.to_i64() {
        Some(t) if t.unsigned_abs() < (1u64 << bits) => t,
        _ => return Ok(Count::from(0u32)), // out of the representable range
    };
    let mut hits: u64 = 0;
    for_each_vector(bits, -1, 1, |_, value| {
        if value == target {
            hits += 1;
        }
    });
    Ok(Count::from(hits))
}

/// The representation counts of every value at one width.
///
/// The counts cover the whole range [-(2^bits - 1), 2^bits - 1]; they sum to
/// 3^bits, and the row is symmetric because a digitwise sign flip pairs the
/// vectors of v and -v.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HistogramRow {
    bits: u32,
    counts: BTreeMap<i64, Count>,
}

impl HistogramRow {
    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Count for one value; zero outside the representable range.
    pub fn count(&self, value: i64) -> Count {
        self.counts.get(&value).cloned().unwrap_or_default()
    }

    pub fn counts(&self) -> &BTreeMap<i64, Count> {
        &self.counts
    }

    pub fn total(&self) -> Count {
        self.counts.values().sum()
    }
}

/// One odometer pass producing the counts of every representable value.
pub fn brute_histogram(bits: u32) -> Result<HistogramRow, OracleError> {
    brute_histogram_with_limit(bits, DEFAULT_BSD_LIMIT)
}

pub fn brute_histogram_with_limit(bits: u32, limit: u32) -> Result<HistogramRow, OracleError> {
    check_limit(bits, limit)?;
    let span = (1i64 << bits) - 1;
    let mut tallies = vec![0u64; (2 * span + 1) as usize];
    for_each_vector(bits, -1, 1, |_, value| {
        tallies[(value + span) as usize] += 1;
    });
    let counts = tallies
        .into_iter()
        .enumerate()
        .map(|(idx, hits)| (idx as i64 - span, Count::from(hits)))
        .collect();
    Ok(HistogramRow { bits, counts })
}

/// Exhaustive count of the width-`bits` hyperbinary vectors with value n.
pub fn brute_count_hyper(n: &BigUint, bits: u32) -> Result<Count, OracleError> {
    brute_count_hyper_with_limit(n, bits, DEFAULT_HYPER_LIMIT)
}

pub fn brute_count_hyper_with_limit(
    n: &BigUint,
    bits: u32,
    limit: u32,
) -> Result<Count, OracleError> {
    check_limit(bits, limit)?;
    let target = match n.to_i64() {
        Some(t) if t <= 2 * ((1i64 << bits) - 1) => t,
        _ => return Ok(Count::from(0u32)),
    };
    let mut hits: u64 = 0;
    for_each_vector(bits, 0, 2, |_, value| {
        if value == target {
            hits += 1;
        }
    });
    Ok(Count::from(hits))
}

/// One odometer pass over the hyperbinary vectors of a width, counting every
/// value in [0, 2 * (2^bits - 1)].
pub fn brute_hyper_histogram(bits: u32) -> Result<BTreeMap<u64, Count>, OracleError> {
    brute_hyper_histogram_with_limit(bits, DEFAULT_HYPER_LIMIT)
}

pub fn brute_hyper_histogram_with_limit(
    bits: u32,
    limit: u32,
) -> Result<BTreeMap<u64, Count>, OracleError> {
    check_limit(bits, limit)?;
    let top = 2 * ((1u64 << bits) - 1);
    let mut tallies = vec![0u64; (top + 1) as usize];
    for_each_vector(bits, 0, 2, |_, value| {
        tallies[value as usize] += 1;
    });
    Ok(tallies
        .into_iter()
        .enumerate()
        .map(|(value, hits)| (value as u64, Count::from(hits)))
        .collect())
}

/// The largest count in a row restricted to 0 <= n < 2^bits, with every
/// maximizing n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowMaxima {
    pub bits: u32,
    pub max: Count,
    /// Maximizing values, ascending.
    pub argmax: Vec<u64>,
}

/// Read the row maximum off the exhaustive histogram. Needs bits >= 2.
pub fn brute_maxima(bits: u32) -> Result<RowMaxima, OracleError> {
    brute_maxima_with_limit(bits, DEFAULT_BSD_LIMIT)
}

pub fn brute_maxima_with_limit(bits: u32, limit: u32) -> Result<RowMaxima, OracleError> {
    if bits < 2 {
        return Err(OracleError::BitsTooSmall { bits, min: 2 });
    }
    let row = brute_histogram_with_limit(bits, limit)?;
    let mut max = Count::from(0u32);
    let mut argmax = Vec::new();
    for n in 0..(1i64 << bits) {
        let count = row.count(n);
        if count > max {
            max = count;
            argmax.clear();
            argmax.push(n as u64);
        } else if count == max {
            argmax.push(n as u64);
        }
    }
    Ok(RowMaxima { bits, max, argmax })
}

/// The width-`bits` signed-digit words with value n, as words, in odometer
/// order. Backs set-wise checks of the deterministic enumerator.
pub fn brute_bsd_words(n: &BigInt, bits: u32) -> Result<Vec<BsdWord>, OracleError> {
    brute_bsd_words_with_limit(n, bits, DEFAULT_BSD_LIMIT)
}

pub fn brute_bsd_words_with_limit(
    n: &BigInt,
    bits: u32,
    limit: u32,
) -> Result<Vec<BsdWord>, OracleError> {
    check_limit(bits, limit)?;
    let mut words = Vec::new();
    let target = match n.to_i64() {
        Some(t) if t.unsigned_abs() < (1u64 << bits) => t,
        _ => return Ok(words),
    };
    for_each_vector(bits, -1, 1, |digits, value| {
        if value == target {
            // the walker is least-significant-first; words read the other way
            let msb_first: Vec<i8> = digits.iter().rev().copied().collect();
            words.push(BsdWord::new(msb_first).expect("walker digits are in range"));
        }
    });
    Ok(words)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: i64, bits: u32) -> u64 {
        brute_count_bsd(&BigInt::from(n), bits)
            .unwrap()
            .to_u64()
            .unwrap()
    }

    #[test]
    fn brute_count_examples() {
        assert_eq!(count(5, 4), 5);
        assert_eq!(count(0, 3), 1);
        assert_eq!(count(8, 3), 0);
        assert_eq!(count(-5, 4), 5);
        assert_eq!(count(0, 0), 1);
        assert_eq!(count(2, 0), 0);
    }

    #[test]
    fn histogram_tiny_rows() {
        let row = brute_histogram(1).unwrap();
        let expected: BTreeMap<i64, Count> = [(-1, 1u32), (0, 1), (1, 1)]
            .map(|(v, c)| (v, Count::from(c)))
            .into();
        assert_eq!(row.counts(), &expected);

        let row = brute_histogram(2).unwrap();
        let expected: BTreeMap<i64, Count> =
            [(-3, 1u32), (-2, 1), (-1, 2), (0, 1), (1, 2), (2, 1), (3, 1)]
                .map(|(v, c)| (v, Count::from(c)))
                .into();
        assert_eq!(row.counts(), &expected);
        assert_eq!(row.total(), Count::from(9u32));
    }

    #[test]
    fn histogram_row_total_is_a_power_of_three() {
        assert_eq!(brute_histogram(8).unwrap().total(), Count::from(6561u32));
    }

    #[test]
    fn hyper_count_examples() {
        let h = |n: u64, bits| {
            brute_count_hyper(&BigUint::from(n), bits)
                .unwrap()
                .to_u64()
                .unwrap()
        };
        assert_eq!(h(4, 3), 3);
        for bits in 0..=6 {
            assert_eq!(h(0, bits), 1);
        }
        for bits in 1..=6u32 {
            assert_eq!(h(2 * ((1 << bits) - 1) + 1, bits), 0);
        }
    }

    #[test]
    fn maxima_examples() {
        let m4 = brute_maxima(4).unwrap();
        assert_eq!(m4.max, Count::from(5u32));
        assert_eq!(m4.argmax, vec![3, 5]);

        let m5 = brute_maxima(5).unwrap();
        assert_eq!(m5.max, Count::from(8u32));
        assert_eq!(m5.argmax, vec![5, 11]);
    }

    #[test]
    fn words_match_counts() {
        let words = brute_bsd_words(&BigInt::from(5), 4).unwrap();
        assert_eq!(words.len(), 5);
        for w in &words {
            assert_eq!(w.value(), BigInt::from(5));
        }
    }

    #[test]
    fn guards() {
        assert_eq!(
            brute_count_bsd(&BigInt::from(1), 15),
            Err(OracleError::LimitExceeded {
                bits: 15,
                limit: 14
            })
        );
        assert_eq!(
            brute_count_hyper(&BigUint::from(1u32), 11),
            Err(OracleError::LimitExceeded {
                bits: 11,
                limit: 10
            })
        );
        assert_eq!(
            brute_maxima(1),
            Err(OracleError::BitsTooSmall { bits: 1, min: 2 })
        );
        assert!(brute_count_bsd_with_limit(&BigInt::from(1), 15, 15).is_ok());
    }
}
