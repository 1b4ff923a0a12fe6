//! Exhaustive and randomized cross-checks of the classification.
//!
//! Every suite returns a list of [`Violation`]s, empty when everything
//! holds. A violation carries the offending parameters together with the
//! expected and computed values so it can be re-checked by hand.

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::braid::{is_conjugate, normal_form, BraidWord};
use crate::classify::{canonical_fractions, family_membership, report_for, Family, FamilyParams};
use crate::cover::closure_determinant;
use crate::par::{flat_map_range, Execution};
use crate::twobridge::{
    cf_to_fraction, equivalent, orientation_classes, ConwayDigits, Fraction, OrientationClass,
};

pub const DEFAULT_COUNTS_MAX: i64 = 5000;
pub const DEFAULT_ORIENTATION_MAX: i64 = 2000;
pub const DEFAULT_IDENTITY_MAX: i64 = 100;
pub const DEFAULT_WITNESS_MAX: i64 = 50;
pub const DEFAULT_TORUS_MAX: i64 = 2000;
pub const DEFAULT_SEED: u64 = 0x005e_edb3;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub suite: String,
    pub params: Value,
    pub expected: Value,
    pub actual: Value,
}

impl Violation {
    fn new(suite: &str, params: Value, expected: Value, actual: Value) -> Self {
        Violation {
            suite: suite.to_string(),
            params,
            expected,
            actual,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Counts,
    Orientation,
    Identity,
    Burau,
    Conjugacy,
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "all" => Suite::All,
            "counts" => Suite::Counts,
            "orientation" => Suite::Orientation,
            "identity" => Suite::Identity,
            "burau" => Suite::Burau,
            "conjugacy" => Suite::Conjugacy,
            other => return Err(format!("unknown suite `{other}`")),
        })
    }
}

/// Runs one suite (or all of them). `max` replaces the suite's bound on
/// `alpha` or on the family parameters; `None` uses the defaults.
pub fn run_suite(suite: Suite, max: Option<i64>, exec: Execution) -> Vec<Violation> {
    let mut out = Vec::new();
    let wants = |s: Suite| suite == Suite::All || suite == s;
    if wants(Suite::Counts) {
        out.extend(verify_counts(max.unwrap_or(DEFAULT_COUNTS_MAX), exec));
    }
    if wants(Suite::Orientation) {
        out.extend(verify_orientation_uniqueness(
            max.unwrap_or(DEFAULT_ORIENTATION_MAX),
            exec,
        ));
    }
    if wants(Suite::Identity) {
        let bound = max.unwrap_or(DEFAULT_IDENTITY_MAX);
        out.extend(verify_inverse_identity(bound, exec));
        out.extend(verify_conway_identity(bound.min(DEFAULT_WITNESS_MAX), exec));
    }
    if wants(Suite::Burau) {
        out.extend(verify_burau_witnesses(
            max.unwrap_or(DEFAULT_WITNESS_MAX),
            DEFAULT_TORUS_MAX,
            DEFAULT_SEED,
            exec,
        ));
    }
    if wants(Suite::Conjugacy) {
        out.extend(verify_conjugacy_suite(DEFAULT_SEED, exec));
    }
    out
}

fn pair(f: &Fraction) -> Value {
    json!([f.alpha(), f.beta()])
}

/// Counts over every canonical fraction with `alpha <= max_alpha`: at most
/// three, three only at `(4,1)`, two exactly at `beta = 1` away from
/// `alpha ∈ {0, 4}`, the same for every representative of the class, and
/// one witness of determinant `alpha` per counted axis.
pub fn verify_counts(max_alpha: i64, exec: Execution) -> Vec<Violation> {
    const SUITE: &str = "counts";
    flat_map_range(0..=max_alpha, exec, |alpha| {
        let mut out = Vec::new();
        for f in canonical_fractions(alpha) {
            let report = report_for(f);
            let count = report.count;
            let torus = f.beta() == 1 && alpha != 0;
            let expected_two = torus && alpha != 4;
            let is_four_one = alpha == 4 && f.beta() == 1;
            if count > 3 {
                out.push(Violation::new(
                    SUITE,
                    pair(&f),
                    json!("count <= 3"),
                    json!(count),
                ));
            }
            if (count == 3) != is_four_one {
                out.push(Violation::new(
                    SUITE,
                    pair(&f),
                    if is_four_one {
                        json!(3)
                    } else {
                        json!("count != 3")
                    },
                    json!(count),
                ));
            }
            if (count == 2) != expected_two {
                out.push(Violation::new(
                    SUITE,
                    pair(&f),
                    json!(if expected_two {
                        "count = 2"
                    } else {
                        "count != 2"
                    }),
                    json!(count),
                ));
            }
            if report.witnesses.len() != count {
                out.push(Violation::new(
                    SUITE,
                    pair(&f),
                    json!({ "witnesses": count }),
                    json!({ "witnesses": report.witnesses.len() }),
                ));
            }
            for w in &report.witnesses {
                let det = closure_determinant(&w.word).ok();
                if det != Some(alpha as i128) {
                    out.push(Violation::new(
                        SUITE,
                        json!({ "fraction": pair(&f), "witness": w.word }),
                        json!(alpha),
                        json!(det),
                    ));
                }
            }
        }
        // every representative, not only the canonical one
        if alpha >= 2 {
            for beta in (1..alpha).filter(|b| alpha.gcd(b) == 1) {
                let rep = Fraction::new(alpha, beta).expect("coprime");
                let direct = crate::classify::gof_count(alpha, beta)
                    .map(|r| r.count)
                    .ok();
                let via_canonical = report_for(rep.canonical()).count;
                if direct != Some(via_canonical) {
                    out.push(Violation::new(
                        SUITE,
                        json!({ "representative": pair(&rep), "canonical": pair(&rep.canonical()) }),
                        json!(via_canonical),
                        json!(direct),
                    ));
                }
            }
        }
        out
    })
}

/// Does some Schubert representative of this oriented class admit a closed
/// 3-braid: `beta* = 1` (braid index two) or a braid-index-3 family hit?
pub fn class_admits_three_braid(class: &OrientationClass) -> bool {
    if class.alpha < 2 {
        return true;
    }
    class.schubert_reps().any(|r| {
        r == 1
            || family_membership(class.alpha, r)
                .map(|hit| hit.is_some())
                .unwrap_or(false)
    })
}

/// Two-component canonical fractions (`alpha` even, `2 <= alpha <= max`)
/// with two inequivalent orientations that each admit a closed 3-braid.
pub fn orientation_exceptions(max_alpha: i64, exec: Execution) -> Vec<Fraction> {
    flat_map_range(1..=max_alpha / 2, exec, |half| {
        canonical_fractions(2 * half)
            .into_iter()
            .filter(|f| {
                let classes = orientation_classes(f);
                classes.len() == 2 && classes.iter().all(class_admits_three_braid)
            })
            .collect()
    })
}

pub fn verify_orientation_uniqueness(max_alpha: i64, exec: Execution) -> Vec<Violation> {
    const SUITE: &str = "orientation";
    let mut out = Vec::new();
    let exceptions = orientation_exceptions(max_alpha, exec);
    let expected: Vec<Fraction> = if max_alpha >= 4 {
        vec![Fraction::new(4, 1).expect("valid")]
    } else {
        vec![]
    };
    if exceptions != expected {
        out.push(Violation::new(
            SUITE,
            json!({ "max_alpha": max_alpha }),
            json!(expected.iter().map(pair).collect::<Vec<_>>()),
            json!(exceptions.iter().map(pair).collect::<Vec<_>>()),
        ));
    }
    // (8,3) ~ (8,5) up to mirror, (10,3) ~ (10,7) outright
    for (alpha, beta, other, mirror) in [(8, 3, 5, true), (10, 3, 7, false)] {
        if alpha > max_alpha {
            continue;
        }
        let f = Fraction::new(alpha, beta).expect("valid");
        let g = Fraction::new(alpha, other).expect("valid");
        let classes = orientation_classes(&f).len();
        let same = equivalent(&f, &g, true, mirror).unwrap_or(false);
        if classes != 1 || !same {
            out.push(Violation::new(
                SUITE,
                json!({ "fraction": pair(&f), "other": pair(&g), "mirror": mirror }),
                json!({ "classes": 1, "equivalent": true }),
                json!({ "classes": classes, "equivalent": same }),
            ));
        }
    }
    out
}

/// `(2p+1)(2q+1) ≡ ±1 (mod 2α)` for the two families.
pub fn verify_inverse_identity(max_pq: i64, exec: Execution) -> Vec<Violation> {
    const SUITE: &str = "identity";
    flat_map_range(1..=max_pq, exec, |p| {
        let mut out = Vec::new();
        for q in 1..=max_pq {
            let product = (2 * p + 1) * (2 * q + 1);
            for (family, residue) in [(Family::One, 1i64), (Family::Two, -1)] {
                let alpha = FamilyParams { family, p, q }.alpha();
                let got = product.rem_euclid(2 * alpha);
                let want = residue.rem_euclid(2 * alpha);
                if got != want {
                    out.push(Violation::new(
                        SUITE,
                        json!({ "family": family, "p": p, "q": q, "alpha": alpha }),
                        json!(want),
                        json!(got),
                    ));
                }
            }
        }
        out
    })
}

/// `(p,1,1,q)` and `(p,2,-q-1)` name the same unoriented link, and
/// `(p,2,q)` evaluates to `(2pq+p+q)/(2q+1)`.
pub fn verify_conway_identity(max_pq: i64, exec: Execution) -> Vec<Violation> {
    const SUITE: &str = "identity";
    flat_map_range(1..=max_pq, exec, |p| {
        let mut out = Vec::new();
        for q in 1..=max_pq {
            let eval = |d: Vec<i64>| ConwayDigits::new(d).and_then(|d| cf_to_fraction(&d)).ok();
            let a = eval(vec![p, 1, 1, q]).map(|v| v.canonical);
            let b = eval(vec![p, 2, -q - 1]).map(|v| v.canonical);
            if a.is_none() || a != b {
                out.push(Violation::new(
                    SUITE,
                    json!({ "p": p, "q": q, "digits": [[p, 1, 1, q], [p, 2, -q - 1]] }),
                    json!(a.map(|f| pair(&f))),
                    json!(b.map(|f| pair(&f))),
                ));
            }
            let raw = eval(vec![p, 2, q]).map(|v| v.raw.pair());
            let want = [2 * p * q + p + q, 2 * q + 1];
            if raw != Some(want) {
                out.push(Violation::new(
                    SUITE,
                    json!({ "p": p, "q": q, "digits": [p, 2, q] }),
                    json!(want),
                    json!(raw),
                ));
            }
        }
        out
    })
}

/// A uniformly random word of the given length.
pub fn random_word<R: Rng>(rng: &mut R, len: usize) -> BraidWord {
    const LETTERS: [i8; 4] = [1, -1, 2, -2];
    let letters = (0..len).map(|_| LETTERS[rng.gen_range(0..4)]).collect();
    BraidWord::new(letters).expect("alphabet letters")
}

/// Closure determinants of family and torus witnesses equal the predicted
/// `alpha`; appending `Δ^{4n}` leaves determinants unchanged.
pub fn verify_burau_witnesses(
    max_pq: i64,
    max_torus: i64,
    seed: u64,
    exec: Execution,
) -> Vec<Violation> {
    const SUITE: &str = "burau";
    let mut out = flat_map_range(1..=max_pq, exec, |p| {
        let mut out = Vec::new();
        for q in 1..=max_pq {
            for family in [Family::One, Family::Two] {
                let params = FamilyParams { family, p, q };
                let word = params.witness();
                let det = closure_determinant(&word).ok();
                if det != Some(params.alpha() as i128) {
                    out.push(Violation::new(
                        SUITE,
                        json!({ "family": family, "p": p, "q": q, "witness": word }),
                        json!(params.alpha()),
                        json!(det),
                    ));
                }
            }
        }
        out
    });
    out.extend(flat_map_range(0..=max_torus, exec, |k| {
        let mut out = Vec::new();
        for sign in [1, -1] {
            let word = BraidWord::power(1, k).concat(&BraidWord::power(2, sign));
            let det = closure_determinant(&word).ok();
            if det != Some(k as i128) {
                out.push(Violation::new(
                    SUITE,
                    json!({ "torus": k, "sign": sign }),
                    json!(k),
                    json!(det),
                ));
            }
        }
        out
    }));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..50 {
        let len = rng.gen_range(0..=30);
        let word = random_word(&mut rng, len);
        let n = rng.gen_range(-2..=2);
        let base = closure_determinant(&word).ok();
        let twisted = closure_determinant(&word.concat(&BraidWord::delta(4 * n))).ok();
        let surgered = closure_determinant(&word.surgery_twist(n)).ok();
        if base != twisted || base != surgered {
            out.push(Violation::new(
                SUITE,
                json!({ "trial": trial, "word": word, "n": n }),
                json!(base),
                json!([twisted, surgered]),
            ));
        }
    }
    out
}

/// Normal forms survive random insertions of `σ₁σ₂σ₁(σ₂σ₁σ₂)⁻¹` and
/// `g g⁻¹`.
pub fn verify_normal_form_rewrites(trials: usize, seed: u64) -> Vec<Violation> {
    const SUITE: &str = "conjugacy";
    const RELATOR: [i8; 6] = [1, 2, 1, -2, -1, -2];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for trial in 0..trials {
        let len = rng.gen_range(0..=40);
        let word = random_word(&mut rng, len);
        let mut letters = word.letters().to_vec();
        let at = rng.gen_range(0..=letters.len());
        if rng.gen_bool(0.5) {
            let rotate = rng.gen_range(0..RELATOR.len());
            let mut relator = RELATOR.to_vec();
            relator.rotate_left(rotate);
            if rng.gen_bool(0.5) {
                relator = relator.iter().rev().map(|&l| -l).collect();
            }
            letters.splice(at..at, relator);
        } else {
            let g = [1i8, -1, 2, -2][rng.gen_range(0..4)];
            letters.splice(at..at, [g, -g]);
        }
        let rewritten = BraidWord::new(letters).expect("alphabet letters");
        if normal_form(&word) != normal_form(&rewritten) {
            out.push(Violation::new(
                SUITE,
                json!({ "trial": trial, "word": word, "rewritten": rewritten }),
                json!(normal_form(&word)),
                json!(normal_form(&rewritten)),
            ));
        }
    }
    out
}

/// The surgery example, torus pairs that must stay apart, random
/// conjugates that must be recognized, and normal-form rewrites.
pub fn verify_conjugacy_suite(seed: u64, exec: Execution) -> Vec<Violation> {
    const SUITE: &str = "conjugacy";
    let mut out = Vec::new();
    let lhs = BraidWord::power(1, 5)
        .concat(&BraidWord::power(2, 1))
        .concat(&BraidWord::delta(-4));
    let rhs = BraidWord::power(1, -5).concat(&BraidWord::power(2, -1));
    if !is_conjugate(&lhs, &rhs) {
        out.push(Violation::new(
            SUITE,
            json!({ "lhs": lhs, "rhs": rhs }),
            json!(true),
            json!(false),
        ));
    }
    for k in 2..=10 {
        let a = BraidWord::power(1, k).concat(&BraidWord::power(2, 1));
        let b = BraidWord::power(1, k).concat(&BraidWord::power(2, -1));
        let conj = is_conjugate(&a, &b);
        let certificate = a.exponent_sum().abs() != b.exponent_sum().abs();
        if conj || !certificate {
            out.push(Violation::new(
                SUITE,
                json!({ "k": k, "lhs": a, "rhs": b }),
                json!({ "conjugate": false, "exponent_sums_differ": true }),
                json!({ "conjugate": conj, "exponent_sums_differ": certificate }),
            ));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(BraidWord, BraidWord)> = (0..200)
        .map(|_| {
            let (n, m) = (rng.gen_range(1..=20), rng.gen_range(0..=20));
            (random_word(&mut rng, n), random_word(&mut rng, m))
        })
        .collect();
    out.extend(flat_map_range(0..=pairs.len() as i64 - 1, exec, |i| {
        let (w, u) = &pairs[i as usize];
        let conjugate = w.conjugate_by(u);
        let forward = is_conjugate(w, &conjugate);
        let backward = is_conjugate(&conjugate, w);
        if forward && backward {
            vec![]
        } else {
            vec![Violation::new(
                SUITE,
                json!({ "trial": i, "word": w, "conjugator": u }),
                json!([true, true]),
                json!([forward, backward]),
            )]
        }
    }));
    out.extend(verify_normal_form_rewrites(1000, seed ^ 0xabcd));
    out
}
