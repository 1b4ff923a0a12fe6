//! Conjugacy in `B₃` through super summit sets.
//!
//! Cycling raises `inf` and decycling lowers `sup` until both are extremal
//! over the conjugacy class. The super summit set is then the closure of
//! that element under conjugation by simple elements, restricted to the
//! same `(inf, sup)`; two braids are conjugate exactly when their super
//! summit sets coincide.

use std::collections::{BTreeSet, VecDeque};

use super::garside::{normal_form, NormalForm, Simple};
use super::BraidWord;

/// Cycling/decycling stalls allowed before an extremum is declared. The
/// Garside bound for `B₃` is the letter length of `Δ`, which is 3; the
/// closure step below re-enters this loop if anything better turns up.
const STALL_LIMIT: usize = 6;

fn flip_if(s: Simple, odd: bool) -> Simple {
    if odd {
        s.flip()
    } else {
        s
    }
}

/// Conjugate `x = Δ^k s₁ ⋯ s_r` to `Δ^k s₂ ⋯ s_r τ^k(s₁)`.
fn cycle(x: &NormalForm) -> NormalForm {
    let Some((&first, rest)) = x.factors.split_first() else {
        return x.clone();
    };
    let mut letters = BraidWord::delta(x.delta_power).0;
    for s in rest {
        letters.extend_from_slice(s.letters());
    }
    letters.extend_from_slice(flip_if(first, x.delta_power % 2 != 0).letters());
    normal_form(&BraidWord(letters))
}

/// Conjugate `x = Δ^k s₁ ⋯ s_r` to `Δ^k τ^k(s_r) s₁ ⋯ s_{r-1}`.
fn decycle(x: &NormalForm) -> NormalForm {
    let Some((&last, rest)) = x.factors.split_last() else {
        return x.clone();
    };
    let mut letters = BraidWord::delta(x.delta_power).0;
    letters.extend_from_slice(flip_if(last, x.delta_power % 2 != 0).letters());
    for s in rest {
        letters.extend_from_slice(s.letters());
    }
    normal_form(&BraidWord(letters))
}

fn conjugate_by_simple(x: &NormalForm, s: Simple) -> NormalForm {
    let mut letters: Vec<i8> = s.letters().iter().rev().map(|&l| -l).collect();
    letters.extend_from_slice(x.to_word().letters());
    letters.extend_from_slice(s.letters());
    normal_form(&BraidWord(letters))
}

fn is_better(candidate: &NormalForm, current: &NormalForm) -> bool {
    candidate.inf() > current.inf() || candidate.sup() < current.sup()
}

fn climb(mut x: NormalForm) -> NormalForm {
    let mut stalls = 0;
    while stalls < STALL_LIMIT {
        let next = cycle(&x);
        if next.inf() > x.inf() {
            stalls = 0;
        } else {
            stalls += 1;
        }
        x = next;
    }
    stalls = 0;
    while stalls < STALL_LIMIT {
        let next = decycle(&x);
        if next.sup() < x.sup() && next.inf() >= x.inf() {
            stalls = 0;
        } else {
            stalls += 1;
        }
        x = next;
    }
    x
}

/// The super summit set of `w`, sorted.
pub fn super_summit_set(w: &BraidWord) -> Vec<NormalForm> {
    let mut seed = climb(normal_form(w));
    'restart: loop {
        let mut seen = BTreeSet::from([seed.clone()]);
        let mut queue = VecDeque::from([seed.clone()]);
        while let Some(x) = queue.pop_front() {
            for s in &Simple::ALL[1..] {
                let y = conjugate_by_simple(&x, *s);
                if is_better(&y, &seed) {
                    seed = climb(y);
                    continue 'restart;
                }
                if y.inf() == seed.inf() && y.sup() == seed.sup() && seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        return seen.into_iter().collect();
    }
}

pub fn is_conjugate(w1: &BraidWord, w2: &BraidWord) -> bool {
    if w1.exponent_sum() != w2.exponent_sum() {
        return false;
    }
    let sss1 = super_summit_set(w1);
    let sss2 = super_summit_set(w2);
    sss1 == sss2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> BraidWord {
        text.parse().unwrap()
    }

    #[test]
    fn surgery_example_is_conjugate() {
        let lhs = w("1 1 1 1 1 2").concat(&BraidWord::delta(-4));
        assert!(is_conjugate(&lhs, &w("-1 -1 -1 -1 -1 -2")));
        assert!(is_conjugate(&lhs, &w("-2 -2 -2 -2 -2 -1")));
    }

    #[test]
    fn torus_pairs_are_not_conjugate() {
        assert!(!is_conjugate(&w("1 1 1 1 2"), &w("1 1 1 1 -2")));
    }

    #[test]
    fn generators_are_conjugate() {
        assert!(is_conjugate(&w("1"), &w("2")));
        assert!(is_conjugate(&w("1 2 -1"), &w("2")));
        assert!(!is_conjugate(&w("1 2"), &w("1 1")));
        assert!(is_conjugate(&w("1 2"), &w("2 1")));
    }

    #[test]
    fn summit_sets_have_constant_inf_and_sup() {
        let sss = super_summit_set(&w("1 1 -2 1 2 2 -1 -1 2"));
        assert!(!sss.is_empty());
        assert!(sss
            .iter()
            .all(|x| x.inf() == sss[0].inf() && x.sup() == sss[0].sup()));
        assert!(sss.iter().all(|x| x.is_left_weighted()));
    }

    #[test]
    fn central_powers() {
        assert_eq!(super_summit_set(&BraidWord::delta(2)).len(), 1);
        assert!(is_conjugate(&BraidWord::delta(1), &w("2 1 2")));
        assert!(!is_conjugate(&BraidWord::delta(2), &w("1 1 1 1 1 1")));
    }
}
