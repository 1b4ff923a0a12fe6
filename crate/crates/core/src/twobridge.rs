//! Two-bridge fractions `b(alpha, beta)`.
//!
//! A fraction names both a two-bridge link and the lens space double
//! covering `S^3` branched over it. Unoriented links are classified by
//! `beta` modulo `alpha`; oriented links (with `beta` odd) by `beta` modulo
//! `2 * alpha`. In both cases `beta` and its inverse name the same link and,
//! when mirrors are identified, so do their negatives.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// A validated pair `(alpha, beta)` with `alpha >= 0` and
/// `gcd(alpha, |beta|) = 1`. Not necessarily canonical.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Fraction {
    alpha: i64,
    beta: i64,
}

impl Fraction {
    /// Validates `(alpha, beta)`. A negative `alpha` is read as the mirror
    /// `(|alpha|, -beta)`.
    pub fn new(alpha: i64, beta: i64) -> Result<Self> {
        let (alpha, beta) = if alpha < 0 {
            let a = alpha
                .checked_neg()
                .ok_or(Error::Overflow { what: "fraction" })?;
            let b = beta
                .checked_neg()
                .ok_or(Error::Overflow { what: "fraction" })?;
            (a, b)
        } else {
            (alpha, beta)
        };
        if alpha == 0 && beta.abs() != 1 {
            return Err(Error::InvalidFraction {
                alpha,
                beta,
                reason: "alpha = 0 requires beta = ±1",
            });
        }
        if alpha.gcd(&beta) != 1 {
            return Err(Error::InvalidFraction {
                alpha,
                beta,
                reason: "alpha and beta are not coprime",
            });
        }
        Ok(Fraction { alpha, beta })
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    pub fn beta(&self) -> i64 {
        self.beta
    }

    /// The smallest representative of the unoriented, mirror-identified
    /// class: `0 < beta < alpha` for `alpha >= 2`, else `(0,1)` / `(1,1)`.
    pub fn canonical(&self) -> Fraction {
        match self.alpha {
            0 => Fraction { alpha: 0, beta: 1 },
            1 => Fraction { alpha: 1, beta: 1 },
            a => {
                let b = self.beta.rem_euclid(a);
                let inv = mod_inverse(b, a);
                let beta = b.min(inv).min(a - b).min(a - inv);
                Fraction { alpha: a, beta }
            }
        }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }

    /// Number of link components: two for even `alpha` (including 0).
    pub fn components(&self) -> u8 {
        if self.alpha % 2 == 0 {
            2
        } else {
            1
        }
    }

    pub fn pair(&self) -> [i64; 2] {
        [self.alpha, self.beta]
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b({},{})", self.alpha, self.beta)
    }
}

pub fn canonical(alpha: i64, beta: i64) -> Result<Fraction> {
    Fraction::new(alpha, beta).map(|f| f.canonical())
}

pub fn components(f: &Fraction) -> u8 {
    f.components()
}

/// Inverse of `x` modulo `m`; `x` must be a unit.
pub(crate) fn mod_inverse(x: i64, m: i64) -> i64 {
    debug_assert!(m >= 1);
    if m == 1 {
        return 0;
    }
    let e = x.rem_euclid(m).extended_gcd(&m);
    debug_assert_eq!(e.gcd, 1, "{x} is not invertible mod {m}");
    e.x.rem_euclid(m)
}

fn orbit_mod(m: i64, beta: i64, mirror: bool) -> BTreeSet<i64> {
    let b = beta.rem_euclid(m);
    let inv = mod_inverse(b, m);
    let mut set = BTreeSet::from([b, inv]);
    if mirror {
        set.insert((-b).rem_euclid(m));
        set.insert((-inv).rem_euclid(m));
    }
    set
}

/// The equivalence orbit of `beta`: modulo `alpha` for unoriented links,
/// modulo `2 * alpha` for oriented ones (which requires `beta` odd).
///
/// `alpha = 0` has the single class `{1}`: the two-component unlink is its
/// own mirror and has no modulus to reduce by.
pub fn orbit(alpha: i64, beta: i64, oriented: bool, mirror: bool) -> Result<BTreeSet<i64>> {
    let f = Fraction::new(alpha, beta)?;
    if oriented && f.beta % 2 == 0 {
        return Err(Error::OddFormRequired { beta: f.beta });
    }
    if f.alpha == 0 {
        return Ok(BTreeSet::from([1]));
    }
    let modulus = if oriented { 2 * f.alpha } else { f.alpha };
    Ok(orbit_mod(modulus, f.beta, mirror))
}

pub fn equivalent(f1: &Fraction, f2: &Fraction, oriented: bool, mirror: bool) -> Result<bool> {
    if oriented {
        for f in [f1, f2] {
            if f.beta % 2 == 0 {
                return Err(Error::OddFormRequired { beta: f.beta });
            }
        }
    }
    if f1.alpha != f2.alpha {
        return Ok(false);
    }
    if f1.alpha == 0 {
        return Ok(true);
    }
    let modulus = if oriented { 2 * f1.alpha } else { f1.alpha };
    let orb = orbit(f1.alpha, f1.beta, oriented, mirror)?;
    Ok(orb.contains(&f2.beta.rem_euclid(modulus)))
}

/// A class of orientations of a two-bridge link, stored as the odd
/// residues modulo `2 * alpha` naming it (mirrors identified).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrientationClass {
    pub alpha: i64,
    pub reps: BTreeSet<i64>,
}

impl OrientationClass {
    /// Residues in `(0, alpha)`, the usual Schubert range for an oriented
    /// representative.
    pub fn schubert_reps(&self) -> impl Iterator<Item = i64> + '_ {
        let alpha = self.alpha;
        self.reps
            .iter()
            .copied()
            .filter(move |&r| r > 0 && r < alpha)
    }
}

/// Orientation classes up to reversal and mirroring. Knots and the unlink
/// have one; a two-component link has one or two depending on whether
/// reversing one component lands back in the same oriented class.
pub fn orientation_classes(f: &Fraction) -> Vec<OrientationClass> {
    let alpha = f.alpha;
    if alpha == 0 {
        return vec![OrientationClass {
            alpha,
            reps: BTreeSet::from([1]),
        }];
    }
    let modulus = 2 * alpha;
    let odd_beta = if f.beta % 2 != 0 {
        f.beta
    } else {
        f.beta + alpha
    };
    let first = orbit_mod(modulus, odd_beta, true);
    if alpha % 2 == 1 {
        return vec![OrientationClass { alpha, reps: first }];
    }
    let switched = orbit_mod(modulus, odd_beta + alpha, true);
    if first == switched {
        vec![OrientationClass { alpha, reps: first }]
    } else {
        vec![
            OrientationClass { alpha, reps: first },
            OrientationClass {
                alpha,
                reps: switched,
            },
        ]
    }
}

/// Conway notation for a rational tangle closure: a nonempty sequence of
/// nonzero integers read as a continued fraction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConwayDigits(Vec<i64>);

impl ConwayDigits {
    pub fn new(digits: Vec<i64>) -> Result<Self> {
        if digits.is_empty() {
            return Err(Error::EmptyContinuedFraction);
        }
        if let Some(position) = digits.iter().position(|&d| d == 0) {
            return Err(Error::DegenerateContinuedFraction { position });
        }
        Ok(ConwayDigits(digits))
    }

    pub fn digits(&self) -> &[i64] {
        &self.0
    }
}

/// Result of evaluating a continued fraction: the raw `alpha/beta` (with
/// `alpha >= 0`) and its canonical class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CfValue {
    pub raw: Fraction,
    pub canonical: Fraction,
}

/// Evaluates `d1 + 1/(d2 + 1/(... + 1/dk))`.
pub fn cf_to_fraction(d: &ConwayDigits) -> Result<CfValue> {
    let overflow = || Error::Overflow {
        what: "continued fraction",
    };
    let digits = d.digits();
    let last = digits.len() - 1;
    let (mut num, mut den) = (digits[last], 1i64);
    for (position, &digit) in digits[..last].iter().enumerate().rev() {
        if num == 0 {
            return Err(Error::DegenerateContinuedFraction {
                position: position + 1,
            });
        }
        // digit + den/num = (digit*num + den)/num
        let next = digit
            .checked_mul(num)
            .and_then(|v| v.checked_add(den))
            .ok_or_else(overflow)?;
        den = num;
        num = next;
    }
    if num < 0 || (num == 0 && den < 0) {
        num = num.checked_neg().ok_or_else(overflow)?;
        den = den.checked_neg().ok_or_else(overflow)?;
    }
    let raw = Fraction::new(num, den)?;
    Ok(CfValue {
        raw,
        canonical: raw.canonical(),
    })
}

/// All-positive continued fraction of `alpha/beta` with an odd number of
/// digits (the last Euclidean quotient `a` is split as `a-1, 1` when needed).
pub fn fraction_to_cf(f: &Fraction) -> Result<ConwayDigits> {
    let (alpha, beta) = (f.alpha, f.beta);
    if alpha < 2 || beta <= 0 || beta >= alpha {
        return Err(Error::InvalidFraction {
            alpha,
            beta,
            reason: "expected alpha >= 2 and 0 < beta < alpha",
        });
    }
    let mut digits = Vec::new();
    let (mut a, mut b) = (alpha, beta);
    while b != 0 {
        let (q, r) = a.div_rem(&b);
        digits.push(q);
        a = b;
        b = r;
    }
    if digits.len() % 2 == 0 {
        let last = digits.pop().expect("nonempty");
        digits.push(last - 1);
        digits.push(1);
    }
    ConwayDigits::new(digits)
}
