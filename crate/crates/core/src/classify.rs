//! Closed 3-braid representatives of two-bridge links.
//!
//! A two-bridge link `b(α, β)` is a closed 3-braid in one of three ways:
//!
//! * it is the unlink `b(0,1)` (closure of `σ₂`) or the unknot `b(1,1)`;
//! * it is the `(2, α)` torus link `b(α, 1)`, closure of `σ₁^α σ₂^{±1}`;
//! * some odd `β*` in its class solves one of the two braid-index-3
//!   families, and the closure of `σ₁^p σ₂² σ₁^{±…} σ₂⁻¹` realizes it.
//!
//! Each inequivalent braid axis lifts to a distinct genus-one fibered knot
//! in `L(α, β)`, so [`gof_count`] is the number of axes.

use std::fmt;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::braid::{is_conjugate, BraidWord};
use crate::cover::{burau_matrix, closure_determinant};
use crate::error::{Error, Result};
use crate::twobridge::{orbit, Fraction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `α = 2pq + p + q`, Conway notation `(p, 2, q)`.
    One,
    /// `α = 2pq + p + q + 1`, Conway notation `(p, 1, 1, q)`.
    Two,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FamilyParams {
    pub family: Family,
    pub p: i64,
    pub q: i64,
}

impl FamilyParams {
    pub fn alpha(&self) -> i64 {
        let base = 2 * self.p * self.q + self.p + self.q;
        match self.family {
            Family::One => base,
            Family::Two => base + 1,
        }
    }

    pub fn beta_star(&self) -> i64 {
        2 * self.q + 1
    }

    /// `σ₁^p σ₂² σ₁^q σ₂⁻¹` for family one, `σ₁^p σ₂² σ₁^{-(q+1)} σ₂⁻¹`
    /// for family two.
    pub fn witness(&self) -> BraidWord {
        let middle = match self.family {
            Family::One => self.q,
            Family::Two => -(self.q + 1),
        };
        BraidWord::power(1, self.p)
            .concat(&BraidWord::power(2, 2))
            .concat(&BraidWord::power(1, middle))
            .concat(&BraidWord::power(2, -1))
    }
}

/// Decides whether `b(α, β*)`, `β*` odd, lies in one of the two
/// braid-index-3 families with `p, q >= 1`.
pub fn family_membership(alpha: i64, beta_star: i64) -> Result<Option<FamilyParams>> {
    if beta_star % 2 == 0 {
        return Err(Error::OddFormRequired { beta: beta_star });
    }
    if alpha < 2 || beta_star <= 0 || beta_star >= alpha || alpha.gcd(&beta_star) != 1 {
        return Err(Error::InvalidFraction {
            alpha,
            beta: beta_star,
            reason: "expected alpha >= 2, 0 < beta* < alpha, coprime",
        });
    }
    let q = (beta_star - 1) / 2;
    if q < 1 {
        return Ok(None);
    }
    for (family, offset) in [(Family::One, 0), (Family::Two, 1)] {
        let (p, r) = (alpha - q - offset).div_rem(&beta_star);
        if r == 0 && p >= 1 {
            return Ok(Some(FamilyParams { family, p, q }));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessLabel {
    /// `σ₁^α σ₂`
    TorusPositive,
    /// `σ₁^α σ₂⁻¹`
    TorusNegative,
    FlypeFamily(FamilyParams),
}

impl fmt::Display for WitnessLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessLabel::TorusPositive => f.write_str("torus-positive"),
            WitnessLabel::TorusNegative => f.write_str("torus-negative"),
            WitnessLabel::FlypeFamily(params) => {
                let family = match params.family {
                    Family::One => "one",
                    Family::Two => "two",
                };
                write!(f, "flype-family({family},p={},q={})", params.p, params.q)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub word: BraidWord,
    pub label: WitnessLabel,
}

fn fraction_pair<S: Serializer>(f: &Fraction, s: S) -> std::result::Result<S::Ok, S::Error> {
    f.pair().serialize(s)
}

/// Axis classes of one two-bridge link, equivalently GOF-knots of one lens
/// space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxisReport {
    #[serde(serialize_with = "fraction_pair")]
    pub canonical: Fraction,
    pub count: usize,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
}

/// Attached to the report for `b(17,5)`.
pub const L17_5_NOTE: &str = "L(17,5): a published remark states this lens space contains no \
GOF-knots, but b(17,7) = (2,2,3) solves the first braid-index-3 family with (p,q) = (2,3) and \
the witness 1 1 2 2 1 1 1 -2 has determinant 17; one GOF-knot is reported";

fn torus_witnesses(alpha: i64) -> Vec<Witness> {
    vec![
        Witness {
            word: BraidWord::power(1, alpha).concat(&BraidWord::power(2, 1)),
            label: WitnessLabel::TorusPositive,
        },
        Witness {
            word: BraidWord::power(1, alpha).concat(&BraidWord::power(2, -1)),
            label: WitnessLabel::TorusNegative,
        },
    ]
}

/// The family hit used as witness: odd members of the unoriented orbit are
/// scanned from the largest down, which picks the solution with `p <= q`.
pub fn family_witness(f: &Fraction) -> Option<FamilyParams> {
    let alpha = f.alpha();
    if alpha < 2 {
        return None;
    }
    let members = orbit(alpha, f.beta(), false, true).expect("valid fraction");
    members
        .into_iter()
        .rev()
        .filter(|b| b % 2 == 1)
        .find_map(|b| family_membership(alpha, b).expect("orbit member is valid"))
}

pub fn axis_classes(alpha: i64, beta: i64) -> Result<AxisReport> {
    let canonical = Fraction::new(alpha, beta)?.canonical();
    Ok(report_for(canonical))
}

/// Number of genus-one fibered knots in `L(α, β)`, with the braids whose
/// axes lift to them.
pub fn gof_count(alpha: i64, beta: i64) -> Result<AxisReport> {
    axis_classes(alpha, beta)
}

pub(crate) fn report_for(canonical: Fraction) -> AxisReport {
    let alpha = canonical.alpha();
    let witnesses = match alpha {
        0 => vec![Witness {
            word: BraidWord::power(2, 1),
            label: WitnessLabel::TorusPositive,
        }],
        _ if canonical.beta() == 1 => {
            let mut ws = torus_witnesses(alpha);
            if alpha == 4 {
                let params = FamilyParams {
                    family: Family::One,
                    p: 1,
                    q: 1,
                };
                ws.push(Witness {
                    word: params.witness(),
                    label: WitnessLabel::FlypeFamily(params),
                });
            }
            ws
        }
        _ => family_witness(&canonical)
            .map(|params| Witness {
                word: params.witness(),
                label: WitnessLabel::FlypeFamily(params),
            })
            .into_iter()
            .collect(),
    };
    let mut notes = Vec::new();
    if canonical.alpha() == 17 && canonical.beta() == 5 {
        notes.push(L17_5_NOTE.to_string());
    }
    AxisReport {
        canonical,
        count: witnesses.len(),
        witnesses,
        notes,
    }
}

/// Result of matching a braid closure against the witness lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureId {
    #[serde(serialize_with = "fraction_pair")]
    pub fraction: Fraction,
    pub mirrored: bool,
    pub matched_witness: BraidWord,
}

/// Every canonical fraction with the given `alpha`, by increasing `beta`.
pub fn canonical_fractions(alpha: i64) -> Vec<Fraction> {
    match alpha {
        0 => vec![Fraction::new(0, 1).expect("valid")],
        1 => vec![Fraction::new(1, 1).expect("valid")],
        a => (1..a)
            .filter(|b| a.gcd(b) == 1)
            .filter_map(|b| {
                let f = Fraction::new(a, b).expect("coprime");
                f.is_canonical().then_some(f)
            })
            .collect(),
    }
}

/// Identifies the closure of `w` as a two-bridge link by finding a witness
/// conjugate to `w` or to its mirror. `None` when no witness matches.
pub fn identify_closure(w: &BraidWord) -> Result<Option<ClosureId>> {
    let alpha = i64::try_from(closure_determinant(w)?).map_err(|_| Error::Overflow {
        what: "closure determinant",
    })?;
    let mirror = w.mirror();
    let trace = burau_matrix(w)?.trace();
    let mirror_trace = burau_matrix(&mirror)?.trace();
    let (sum, mirror_sum) = (w.exponent_sum(), mirror.exponent_sum());
    for fraction in canonical_fractions(alpha) {
        for witness in report_for(fraction).witnesses {
            let x = &witness.word;
            let x_trace = burau_matrix(x)?.trace();
            let found = if x.exponent_sum() == sum && x_trace == trace && is_conjugate(x, w) {
                Some(false)
            } else if x.exponent_sum() == mirror_sum
                && x_trace == mirror_trace
                && is_conjugate(x, &mirror)
            {
                Some(true)
            } else {
                None
            };
            if let Some(mirrored) = found {
                return Ok(Some(ClosureId {
                    fraction,
                    mirrored,
                    matched_witness: witness.word,
                }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> BraidWord {
        text.parse().unwrap()
    }

    fn count(a: i64, b: i64) -> usize {
        gof_count(a, b).unwrap().count
    }

    #[test]
    fn family_examples() {
        assert_eq!(
            family_membership(17, 7).unwrap(),
            Some(FamilyParams {
                family: Family::One,
                p: 2,
                q: 3
            })
        );
        assert_eq!(
            family_membership(5, 3).unwrap(),
            Some(FamilyParams {
                family: Family::Two,
                p: 1,
                q: 1
            })
        );
        assert_eq!(family_membership(19, 9).unwrap(), None);
        assert_eq!(family_membership(7, 1).unwrap(), None);
        assert_eq!(
            family_membership(8, 2),
            Err(Error::OddFormRequired { beta: 2 })
        );
        assert!(family_membership(9, 3).is_err());
    }

    #[test]
    fn family_params_are_consistent() {
        for family in [Family::One, Family::Two] {
            for p in 1..10 {
                for q in 1..10 {
                    let params = FamilyParams { family, p, q };
                    assert_eq!(
                        family_membership(params.alpha(), params.beta_star()).unwrap(),
                        Some(params)
                    );
                }
            }
        }
    }

    #[test]
    fn axis_class_examples() {
        let four = gof_count(4, 1).unwrap();
        assert_eq!(four.count, 3);
        let words: Vec<_> = four.witnesses.iter().map(|x| x.word.clone()).collect();
        assert_eq!(
            words,
            vec![w("1 1 1 1 2"), w("1 1 1 1 -2"), w("1 2 2 1 -2")]
        );
        assert_eq!(count(7, 1), 2);
        assert_eq!(count(19, 2), 0);
        assert_eq!(count(5, 2), 1);
        assert_eq!(count(1, 1), 2);
        assert_eq!(count(0, 1), 1);
        assert_eq!(gof_count(0, 1).unwrap().witnesses[0].word, w("2"));
        let unknot: Vec<_> = gof_count(1, 1)
            .unwrap()
            .witnesses
            .into_iter()
            .map(|x| x.word)
            .collect();
        assert_eq!(unknot, vec![w("1 2"), w("1 -2")]);
    }

    #[test]
    fn witnesses_prefer_p_at_most_q() {
        let r = gof_count(19, 3).unwrap();
        assert_eq!(r.witnesses[0].word, w("1 2 2 1 1 1 1 1 1 -2"));
        assert!(is_conjugate(
            &r.witnesses[0].word,
            &w("1 1 1 1 1 1 2 2 1 -2")
        ));
        let r = gof_count(17, 5).unwrap();
        assert_eq!(r.witnesses[0].word, w("1 1 2 2 1 1 1 -2"));
        assert_eq!(r.notes, vec![L17_5_NOTE.to_string()]);
        assert!(gof_count(17, 3).unwrap().notes.is_empty());
    }

    #[test]
    fn identify_examples() {
        let id = identify_closure(&w("-1 -1 -1 -1 -1 -2")).unwrap().unwrap();
        assert_eq!(id.fraction, Fraction::new(5, 1).unwrap());
        assert!(id.mirrored);
        let id = identify_closure(&w("1 2 -1")).unwrap().unwrap();
        assert_eq!(id.fraction, Fraction::new(0, 1).unwrap());
        assert!(!id.mirrored);
        let id = identify_closure(&w("1 1 1 2")).unwrap().unwrap();
        assert_eq!(id.fraction, Fraction::new(3, 1).unwrap());
        assert!(!id.mirrored);
        let id = identify_closure(&w("-1 -2")).unwrap().unwrap();
        assert_eq!(id.fraction, Fraction::new(1, 1).unwrap());
        assert!(id.mirrored);
    }

    #[test]
    fn identify_rejects_non_two_bridge() {
        // closure of the full twist is the (3,3) torus link
        assert_eq!(identify_closure(&BraidWord::full_twist(1)).unwrap(), None);
    }

    #[test]
    fn canonical_fraction_listing() {
        let fs: Vec<_> = canonical_fractions(19).iter().map(|f| f.beta()).collect();
        assert_eq!(fs, vec![1, 2, 3, 4, 7]);
        assert_eq!(canonical_fractions(4).len(), 1);
    }
}
