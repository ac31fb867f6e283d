//! Fixed-width digit words over the two ternary alphabets.
//!
//! A [`BsdWord`] is a most-significant-first vector of digits in {-1, 0, +1}
//! and denotes the integer sum of digit * 2^position. A [`HyperWord`] is the
//! same over {0, 1, 2}. The digitwise map d -> 1 - d swaps the alphabets and
//! sends a width-i word of value n to a word of value 2^i - 1 - n; it is its
//! own inverse.
//!
//! Text form uses one character per digit, most significant first:
//! `+`, `0`, `-` for signed digits and `0`, `1`, `2` for hyperbinary ones.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::Error;

const BSD_ALPHABET: &str = "{-1, 0, +1}";
const BSD_CHARS: &str = "'+', '0', '-'";
const HYPER_ALPHABET: &str = "{0, 1, 2}";
const HYPER_CHARS: &str = "'0', '1', '2'";

/// A width-i binary signed-digit word: digits in {-1, 0, +1}, most
/// significant first. Width zero (the empty word) is allowed and has
/// value zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BsdWord {
    digits: Vec<i8>,
}

impl BsdWord {
    pub fn new(digits: Vec<i8>) -> Result<Self, Error> {
        for &d in &digits {
            if !(-1..=1).contains(&d) {
                return Err(Error::DigitOutOfRange {
                    digit: d,
                    alphabet: BSD_ALPHABET,
                });
            }
        }
        Ok(BsdWord { digits })
    }

    /// The width i (number of digit positions).
    pub fn bits(&self) -> usize {
        self.digits.len()
    }

    /// Digits, most significant first.
    pub fn digits(&self) -> &[i8] {
        &self.digits
    }

    /// The represented integer, sum of digit * 2^position.
    pub fn value(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for &d in &self.digits {
            acc <<= 1;
            acc += i64::from(d);
        }
        acc
    }

    /// Digitwise sign flip: negates the value and keeps the width.
    pub fn negated(&self) -> BsdWord {
        BsdWord {
            digits: self.digits.iter().map(|&d| -d).collect(),
        }
    }

    /// Digitwise d -> 1 - d; the resulting hyperbinary word has value
    /// 2^i - 1 - n where n is this word's value.
    pub fn to_hyper(&self) -> HyperWord {
        HyperWord {
            digits: self.digits.iter().map(|&d| (1 - d) as u8).collect(),
        }
    }
}

impl fmt::Display for BsdWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.digits {
            f.write_str(match d {
                1 => "+",
                0 => "0",
                _ => "-",
            })?;
        }
        Ok(())
    }
}

impl FromStr for BsdWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut digits = Vec::with_capacity(s.len());
        for ch in s.chars() {
            digits.push(match ch {
                '+' => 1,
                '0' => 0,
                '-' => -1,
                _ => {
                    return Err(Error::BadDigitChar {
                        ch,
                        alphabet: BSD_CHARS,
                    })
                }
            });
        }
        Ok(BsdWord { digits })
    }
}

/// A width-i hyperbinary word: digits in {0, 1, 2}, most significant first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HyperWord {
    digits: Vec<u8>,
}

impl HyperWord {
    pub fn new(digits: Vec<u8>) -> Result<Self, Error> {
        for &d in &digits {
            if d > 2 {
                return Err(Error::DigitOutOfRange {
                    digit: d as i8,
                    alphabet: HYPER_ALPHABET,
                });
            }
        }
        Ok(HyperWord { digits })
    }

    pub fn bits(&self) -> usize {
        self.digits.len()
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// The represented non-negative integer, at most 2 * (2^i - 1).
    pub fn value(&self) -> BigUint {
        let mut acc = BigUint::zero();
        for &d in &self.digits {
            acc <<= 1;
            acc += u64::from(d);
        }
        acc
    }

    /// Digitwise d -> 1 - d; inverse of [`BsdWord::to_hyper`].
    pub fn to_bsd(&self) -> BsdWord {
        BsdWord {
            digits: self.digits.iter().map(|&d| 1 - d as i8).collect(),
        }
    }
}

impl fmt::Display for HyperWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.digits {
            f.write_str(match d {
                0 => "0",
                1 => "1",
                _ => "2",
            })?;
        }
        Ok(())
    }
}

impl FromStr for HyperWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut digits = Vec::with_capacity(s.len());
        for ch in s.chars() {
            digits.push(match ch {
                '0' => 0,
                '1' => 1,
                '2' => 2,
                _ => {
                    return Err(Error::BadDigitChar {
                        ch,
                        alphabet: HYPER_CHARS,
                    })
                }
            });
        }
        Ok(HyperWord { digits })
    }
}
