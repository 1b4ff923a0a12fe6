//! Left-weighted normal form for `B₃` with Garside element `Δ = σ₁σ₂σ₁`.
//!
//! The simple elements are the six positive permutation braids. Every
//! braid is written uniquely as `Δ^k · s₁ ⋯ s_r` with each `sᵢ ∉ {e, Δ}`
//! and each pair `(sᵢ, sᵢ₊₁)` left-weighted: every generator that starts
//! `sᵢ₊₁` already ends `sᵢ`.

use serde::{Serialize, Serializer};

use super::BraidWord;

type Perm = [u8; 3];

const ID: Perm = [0, 1, 2];
const T1: Perm = [1, 0, 2];
const T2: Perm = [0, 2, 1];

fn compose(a: Perm, b: Perm) -> Perm {
    [a[b[0] as usize], a[b[1] as usize], a[b[2] as usize]]
}

fn inversions(p: Perm) -> u8 {
    let mut n = 0;
    for i in 0..3 {
        for j in i + 1..3 {
            if p[i] > p[j] {
                n += 1;
            }
        }
    }
    n
}

fn transposition(generator: u8) -> Perm {
    if generator == 1 {
        T1
    } else {
        T2
    }
}

/// A positive permutation braid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Simple {
    E,
    S1,
    S2,
    S12,
    S21,
    Delta,
}

impl Simple {
    pub const ALL: [Simple; 6] = [
        Simple::E,
        Simple::S1,
        Simple::S2,
        Simple::S12,
        Simple::S21,
        Simple::Delta,
    ];

    pub fn letters(self) -> &'static [i8] {
        match self {
            Simple::E => &[],
            Simple::S1 => &[1],
            Simple::S2 => &[2],
            Simple::S12 => &[1, 2],
            Simple::S21 => &[2, 1],
            Simple::Delta => &[1, 2, 1],
        }
    }

    /// Number of letters; also the length of the permutation.
    pub fn len(self) -> usize {
        self.letters().len()
    }

    pub fn is_empty(self) -> bool {
        self == Simple::E
    }

    pub fn generator(generator: u8) -> Simple {
        if generator == 1 {
            Simple::S1
        } else {
            Simple::S2
        }
    }

    fn perm(self) -> Perm {
        self.letters()
            .iter()
            .fold(ID, |p, &l| compose(p, transposition(l as u8)))
    }

    fn from_perm(p: Perm) -> Simple {
        *Simple::ALL
            .iter()
            .find(|s| s.perm() == p)
            .expect("every permutation of three points is a simple braid")
    }

    /// Conjugation by `Δ`: swaps `σ₁` and `σ₂`.
    pub fn flip(self) -> Simple {
        match self {
            Simple::S1 => Simple::S2,
            Simple::S2 => Simple::S1,
            Simple::S12 => Simple::S21,
            Simple::S21 => Simple::S12,
            other => other,
        }
    }

    fn flip_if(self, flip: bool) -> Simple {
        if flip {
            self.flip()
        } else {
            self
        }
    }

    /// `self · other` when it is again simple.
    pub fn product(self, other: Simple) -> Option<Simple> {
        let p = compose(self.perm(), other.perm());
        (inversions(p) as usize == self.len() + other.len()).then(|| Simple::from_perm(p))
    }

    /// Does `σ_generator` divide `self` on the left?
    pub fn starts_with(self, generator: u8) -> bool {
        inversions(compose(transposition(generator), self.perm())) < inversions(self.perm())
    }

    /// Does `σ_generator` divide `self` on the right?
    pub fn ends_with(self, generator: u8) -> bool {
        inversions(compose(self.perm(), transposition(generator))) < inversions(self.perm())
    }

    /// `σ_generator⁻¹ · self`; requires `starts_with(generator)`.
    fn strip_front(self, generator: u8) -> Simple {
        Simple::from_perm(compose(transposition(generator), self.perm()))
    }
}

impl Serialize for Simple {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.letters().serialize(serializer)
    }
}

fn is_weighted_pair(s: Simple, t: Simple) -> bool {
    (1..=2).all(|g| !t.starts_with(g) || s.ends_with(g))
}

/// Moves generators from the front of `t` onto the end of `s` while the
/// product stays simple.
fn weight_pair(mut s: Simple, mut t: Simple) -> (Simple, Simple) {
    'outer: loop {
        for g in 1..=2 {
            if t.starts_with(g) {
                if let Some(grown) = s.product(Simple::generator(g)) {
                    s = grown;
                    t = t.strip_front(g);
                    continue 'outer;
                }
            }
        }
        return (s, t);
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NormalForm {
    pub delta_power: i64,
    pub factors: Vec<Simple>,
}

impl NormalForm {
    pub fn inf(&self) -> i64 {
        self.delta_power
    }

    pub fn sup(&self) -> i64 {
        self.delta_power + self.factors.len() as i64
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    /// Letter count of the positive factors.
    pub fn factor_length(&self) -> i64 {
        self.factors.iter().map(|s| s.len() as i64).sum()
    }

    pub fn exponent_sum(&self) -> i64 {
        3 * self.delta_power + self.factor_length()
    }

    pub fn is_left_weighted(&self) -> bool {
        self.factors
            .iter()
            .all(|&s| s != Simple::E && s != Simple::Delta)
            && self
                .factors
                .windows(2)
                .all(|w| is_weighted_pair(w[0], w[1]))
    }

    pub fn to_word(&self) -> BraidWord {
        let mut letters = BraidWord::delta(self.delta_power).0;
        for s in &self.factors {
            letters.extend_from_slice(s.letters());
        }
        BraidWord(letters)
    }
}

/// Right-multiplies a left-weighted factor list by `x`, restoring
/// left-weightedness from the right end.
fn push_simple(factors: &mut Vec<Simple>, x: Simple) {
    factors.push(x);
    let mut j = factors.len() - 1;
    while j > 0 {
        let (s, t) = weight_pair(factors[j - 1], factors[j]);
        if s == factors[j - 1] && t == factors[j] {
            break;
        }
        factors[j - 1] = s;
        factors[j] = t;
        j -= 1;
    }
    while factors.last() == Some(&Simple::E) {
        factors.pop();
    }
}

pub fn normal_form(w: &BraidWord) -> NormalForm {
    // Each σᵢ⁻¹ is rewritten as Δ⁻¹·(Δσᵢ⁻¹) and the Δ⁻¹ is pushed to the
    // front, flipping everything it passes. The positive part is kept in a
    // frame where `actual = flip^parity(stored)`; weighting commutes with
    // the flip, so the flips never have to be applied eagerly.
    let mut delta_power = 0i64;
    let mut parity = false;
    let mut stored: Vec<Simple> = Vec::new();
    for &l in w.letters() {
        let actual = if l > 0 {
            Simple::generator(l as u8)
        } else {
            parity = !parity;
            delta_power -= 1;
            if l == -1 {
                Simple::S12
            } else {
                Simple::S21
            }
        };
        push_simple(&mut stored, actual.flip_if(parity));
    }
    let mut factors: Vec<Simple> = stored.into_iter().map(|s| s.flip_if(parity)).collect();
    let leading = factors.iter().take_while(|&&s| s == Simple::Delta).count();
    NormalForm {
        delta_power: delta_power + leading as i64,
        factors: factors.split_off(leading),
    }
}

pub fn is_equal(w1: &BraidWord, w2: &BraidWord) -> bool {
    normal_form(w1) == normal_form(w2)
}
