//! The 3-strand braid group.
//!
//! Words are sequences of signed generator letters: `1` is `σ₁`, `-2` is
//! `σ₂⁻¹`. Equality is decided through the Garside left-weighted normal form
//! ([`normal_form`]) and conjugacy through super summit sets
//! ([`is_conjugate`]).

mod conjugacy;
mod garside;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use conjugacy::{is_conjugate, super_summit_set};
pub use garside::{is_equal, normal_form, NormalForm, Simple};

/// A word in `σ₁^{±1}`, `σ₂^{±1}`. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord(Vec<i8>);

impl BraidWord {
    pub fn new(letters: Vec<i8>) -> Result<Self> {
        if let Some(index) = letters.iter().position(|l| !matches!(l, 1 | -1 | 2 | -2)) {
            return Err(Error::Parse {
                index,
                offset: 0,
                reason: format!("letter {} is not one of 1, -1, 2, -2", letters[index]),
            });
        }
        Ok(BraidWord(letters))
    }

    pub fn identity() -> Self {
        BraidWord(Vec::new())
    }

    /// `σ_generator ^ exponent`. Panics unless `generator` is 1 or 2.
    pub fn power(generator: u8, exponent: i64) -> Self {
        assert!(
            generator == 1 || generator == 2,
            "B3 has generators 1 and 2"
        );
        let letter = if exponent < 0 {
            -(generator as i8)
        } else {
            generator as i8
        };
        BraidWord(vec![letter; exponent.unsigned_abs() as usize])
    }

    /// The half twist `Δ = σ₁σ₂σ₁` raised to `n`.
    pub fn delta(n: i64) -> Self {
        let unit: &[i8] = if n >= 0 { &[1, 2, 1] } else { &[-1, -2, -1] };
        BraidWord(unit.repeat(n.unsigned_abs() as usize))
    }

    /// The full twist `Δ² = (σ₁σ₂)³` raised to `n`.
    pub fn full_twist(n: i64) -> Self {
        let unit: &[i8] = if n >= 0 { &[1, 2] } else { &[-2, -1] };
        BraidWord(unit.repeat(3 * n.unsigned_abs() as usize))
    }

    pub fn letters(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.0.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Negates every letter.
    pub fn mirror(&self) -> Self {
        BraidWord(self.0.iter().map(|&l| -l).collect())
    }

    pub fn reverse(&self) -> Self {
        BraidWord(self.0.iter().rev().copied().collect())
    }

    pub fn invert(&self) -> Self {
        BraidWord(self.0.iter().rev().map(|&l| -l).collect())
    }

    /// Swaps `σ₁ ↔ σ₂`, i.e. conjugation by `Δ`.
    pub fn flip(&self) -> Self {
        BraidWord(self.0.iter().map(|&l| l.signum() * (3 - l.abs())).collect())
    }

    pub fn concat(&self, other: &BraidWord) -> Self {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        BraidWord(letters)
    }

    /// `u · self · u⁻¹`.
    pub fn conjugate_by(&self, u: &BraidWord) -> Self {
        u.concat(self).concat(&u.invert())
    }

    /// Appends `2n` full twists, left-handed for `n > 0`: the braid-side
    /// effect of `1/n` surgery on the lifted axis.
    pub fn surgery_twist(&self, n: i64) -> Self {
        self.concat(&BraidWord::full_twist(-2 * n))
    }
}

pub fn parse_word(text: &str) -> Result<BraidWord> {
    text.parse()
}

pub fn format_word(w: &BraidWord) -> String {
    w.to_string()
}

pub fn exponent_sum(w: &BraidWord) -> i64 {
    w.exponent_sum()
}

pub fn mirror(w: &BraidWord) -> BraidWord {
    w.mirror()
}

pub fn reverse(w: &BraidWord) -> BraidWord {
    w.reverse()
}

pub fn invert(w: &BraidWord) -> BraidWord {
    w.invert()
}

pub fn concat(w1: &BraidWord, w2: &BraidWord) -> BraidWord {
    w1.concat(w2)
}

pub fn conjugate_by(w: &BraidWord, u: &BraidWord) -> BraidWord {
    w.conjugate_by(u)
}

pub fn surgery_twist(w: &BraidWord, n: i64) -> BraidWord {
    w.surgery_twist(n)
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Tokens are `1`, `-1`, `2`, `-2`, separated by a run of spaces or by a
/// single comma. Leading and trailing separators are rejected.
impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bytes = text.as_bytes();
        let mut letters = Vec::new();
        let mut pos = 0;
        if bytes.is_empty() {
            return Ok(BraidWord::identity());
        }
        loop {
            let index = letters.len();
            let start = pos;
            while pos < bytes.len() && !matches!(bytes[pos], b' ' | b',') {
                pos += 1;
            }
            let token = &text[start..pos];
            let letter = match token {
                "1" => 1,
                "-1" => -1,
                "2" => 2,
                "-2" => -2,
                "" => {
                    return Err(Error::Parse {
                        index,
                        offset: start,
                        reason: "missing token".into(),
                    })
                }
                other => {
                    return Err(Error::Parse {
                        index,
                        offset: start,
                        reason: format!("`{other}` is not one of 1, -1, 2, -2"),
                    })
                }
            };
            letters.push(letter);
            if pos == bytes.len() {
                break;
            }
            if bytes[pos] == b',' {
                pos += 1;
            } else {
                while pos < bytes.len() && bytes[pos] == b' ' {
                    pos += 1;
                }
            }
            if pos == bytes.len() {
                return Err(Error::Parse {
                    index: index + 1,
                    offset: pos,
                    reason: "trailing separator".into(),
                });
            }
        }
        Ok(BraidWord(letters))
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}
