//! Counting the width-i signed-digit words of a value.
//!
//! Two routes are provided and must agree everywhere:
//!
//! - [`count_bsd`]: an interval-bisection scan over the bits of the target,
//!   one arbitrary-precision addition per width position.
//! - [`count_bsd_fast`]: the counts at widths beyond the target's own
//!   bitlength form an arithmetic progression, so the answer at any width
//!   follows from two short scans at the bitlength. Cost is O(log n)
//!   regardless of the width.
//!
//! Both normalize first: the count is even in the value (a digitwise sign
//! flip pairs the representations of n and -n), and trailing zero bits can
//! be stripped since count(2^j * m, i) = count(m, i - j).

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::Error;
use crate::stern::stern;
use crate::Count;

/// Loop state of the bisection scan. The scan maintains a value interval
/// bracketing the target; `lower` and `upper` are the representation counts
/// at the interval endpoints, and `num_reps` is the count at the most
/// recently computed midpoint, always `lower + upper` after a step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanState {
    pub lower: Count,
    pub upper: Count,
    pub num_reps: Count,
}

impl ScanState {
    /// Start on the interval [0, 2^i]: one representation of 0 (the all-zero
    /// word), none of 2^i itself.
    pub fn new() -> Self {
        ScanState {
            lower: Count::one(),
            upper: Count::zero(),
            num_reps: Count::one(),
        }
    }

    /// One bisection step: the midpoint count is the sum of the endpoint
    /// counts; the next bit of the target picks which half to keep
    /// (set bit = upper half).
    pub fn step(&mut self, bit: bool) {
        self.num_reps = &self.lower + &self.upper;
        if bit {
            self.lower = self.num_reps.clone();
        } else {
            self.upper = self.num_reps.clone();
        }
    }
}

impl Default for ScanState {
    fn default() -> Self {
        Self::new()
    }
}

/// The scan proper: counts width-`width` words for an odd target m < 2^width,
/// reading m's bits most significant first.
fn scan_count(m: &BigUint, width: u64) -> Count {
    debug_assert!(m.bit(0), "scan target must be odd");
    debug_assert!(m.bits() <= width);
    let mut state = ScanState::new();
    for step in 1..=width {
        state.step(m.bit(width - step));
    }
    state.num_reps
}

/// Number of width-`bits` signed-digit words with value n.
///
/// Zero when |n| >= 2^bits, except that the empty word represents 0, so the
/// count of (0, 0) is 1. Runs in `bits` arbitrary-precision additions.
pub fn count_bsd(n: &BigInt, bits: u64) -> Count {
    if n.is_zero() {
        return Count::one();
    }
    let mag = n.magnitude();
    if mag.bits() > bits {
        return Count::zero();
    }
    let j = mag.trailing_zeros().unwrap_or(0);
    scan_count(&(mag >> j), bits - j)
}

/// Same count as [`count_bsd`], in O(log n) arithmetic steps regardless of
/// the width.
///
/// After normalizing to an odd target m with bitlength k, the counts at
/// widths k, k+1, k+2, ... form an arithmetic progression whose first term
/// is count(m, k) and whose difference is count(2^k - m, k); both come from
/// scans of width k.
pub fn count_bsd_fast(n: &BigInt, bits: u64) -> Count {
    if n.is_zero() {
        return Count::one();
    }
    let mag = n.magnitude();
    if mag.bits() > bits {
        return Count::zero();
    }
    let j = mag.trailing_zeros().unwrap_or(0);
    let m = mag >> j;
    let width = bits - j;
    if m.is_one() {
        // count(1, w) = w: the progression degenerates to the difference alone
        return Count::from(width);
    }
    let k = m.bits(); // ceiling log2 of an odd m >= 3
    let mirror = (BigUint::one() << k) - &m;
    scan_count(&m, k) + Count::from(width - k) * scan_count(&mirror, k)
}

/// 2-adic valuation: n = 2^j * m with m odd. The sign stays on m.
/// Zero is rejected (its valuation is undefined).
pub fn odd_decompose(n: &BigInt) -> Result<(u64, BigInt), Error> {
    if n.is_zero() {
        return Err(Error::OddPartOfZero);
    }
    let j = n.magnitude().trailing_zeros().unwrap_or(0);
    Ok((j, n >> j))
}

/// Ceiling log2: the smallest k with n <= 2^k, and 0 for n <= 1.
pub fn ceil_log2(n: &BigUint) -> u64 {
    if n <= &BigUint::one() {
        0
    } else if n.count_ones() == 1 {
        n.bits() - 1
    } else {
        n.bits()
    }
}

/// Number of hyperbinary representations of n over all sufficient widths;
/// equals stern(n + 1).
pub fn count_hyper(n: &BigUint) -> Count {
    stern(&(n + 1u32))
}

/// Number of width-`bits` hyperbinary words with value n.
///
/// The digitwise translation d -> 1 - d pairs these words with the
/// signed-digit words of 2^bits - 1 - n, so the count is
/// count_bsd(2^bits - 1 - n, bits); zero outside 0 <= n <= 2 * (2^bits - 1).
pub fn count_hyper_bits(n: &BigUint, bits: u64) -> Count {
    if n.bits() > bits + 1 {
        return Count::zero();
    }
    let mirror = (BigInt::one() << bits) - 1 - BigInt::from(n.clone());
    count_bsd(&mirror, bits)
}

/// Closed form 1 + (bits - k) * k for the count of 2^k - 1 at width `bits`.
/// Requires bits >= k.
pub fn closed_form_pow_minus_1(k: u64, bits: u64) -> Result<Count, Error> {
    if bits < k {
        return Err(Error::WidthBelowExponent { exponent: k, bits });
    }
    Ok(Count::one() + Count::from(bits - k) * Count::from(k))
}

/// Closed form (k - 1) + (bits - k) * k for the count of 2^(k-1) + 1 at
/// width `bits`. Requires bits >= k >= 1.
pub fn closed_form_pow_plus_1(k: u64, bits: u64) -> Result<Count, Error> {
    if k == 0 {
        return Err(Error::ExponentZero);
    }
    if bits < k {
        return Err(Error::WidthBelowExponent { exponent: k, bits });
    }
    Ok(Count::from(k - 1) + Count::from(bits - k) * Count::from(k))
}
