use num_integer::Integer;
use proptest::prelude::*;

use gofk::twobridge::{
    canonical, cf_to_fraction, equivalent, fraction_to_cf, orbit, orientation_classes, ConwayDigits,
};
use gofk::Fraction;

/// Smallest `x` in `[1, alpha)` with `x ≡ ±beta` or `x·beta ≡ ±1 (mod alpha)`,
/// found by scanning rather than by modular inversion.
fn brute_canonical(alpha: i64, beta: i64) -> i64 {
    let b = beta.rem_euclid(alpha);
    (1..alpha)
        .find(|&x| x == b || x == alpha - b || (x * b) % alpha == 1 || (x * b) % alpha == alpha - 1)
        .unwrap()
}

#[test]
fn canonical_matches_scan() {
    for alpha in 2..=400 {
        for beta in 1..alpha {
            if alpha.gcd(&beta) != 1 {
                continue;
            }
            let f = canonical(alpha, beta).unwrap();
            assert_eq!(f.beta(), brute_canonical(alpha, beta), "({alpha},{beta})");
            assert_eq!(f.alpha(), alpha);
        }
    }
}

#[test]
fn canonical_is_idempotent_and_class_invariant() {
    for alpha in 2..=1000i64 {
        for beta in 1..alpha {
            if alpha.gcd(&beta) != 1 {
                continue;
            }
            let f = canonical(alpha, beta).unwrap();
            assert_eq!(f.canonical(), f);
            assert!(f.is_canonical());
            assert_eq!(canonical(alpha, -beta).unwrap(), f);
            assert_eq!(canonical(-alpha, beta).unwrap(), f);
        }
    }
}

#[test]
fn equivalence_agrees_with_canonical_keys() {
    for alpha in 2..=120i64 {
        let betas: Vec<i64> = (1..alpha).filter(|b| alpha.gcd(b) == 1).collect();
        for &b1 in &betas {
            let f1 = Fraction::new(alpha, b1).unwrap();
            for &b2 in &betas {
                let f2 = Fraction::new(alpha, b2).unwrap();
                let same_key = f1.canonical() == f2.canonical();
                assert_eq!(equivalent(&f1, &f2, false, true).unwrap(), same_key);
            }
        }
    }
}

#[test]
fn oriented_refines_unoriented() {
    for alpha in 2..=200i64 {
        let odd: Vec<i64> = (1..2 * alpha)
            .step_by(2)
            .filter(|b| alpha.gcd(b) == 1)
            .collect();
        for &b1 in &odd {
            let f1 = Fraction::new(alpha, b1).unwrap();
            for &b2 in &odd {
                let f2 = Fraction::new(alpha, b2).unwrap();
                for mirror in [false, true] {
                    if equivalent(&f1, &f2, true, mirror).unwrap() {
                        assert!(equivalent(&f1, &f2, false, mirror).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn orbits_are_small_and_closed() {
    for alpha in 2..=300i64 {
        for beta in (1..alpha).filter(|b| alpha.gcd(b) == 1) {
            let o = orbit(alpha, beta, false, true).unwrap();
            assert!(o.len() <= 4);
            for &x in &o {
                assert!(o.contains(&(alpha - x)));
                let inv = (1..alpha).find(|y| (x * y) % alpha == 1).unwrap();
                assert!(o.contains(&inv));
            }
        }
    }
}

#[test]
fn orientation_classes_partition_odd_residues() {
    for alpha in (2..=200i64).step_by(2) {
        for beta in (1..alpha).filter(|b| alpha.gcd(b) == 1) {
            let f = Fraction::new(alpha, beta).unwrap();
            if !f.is_canonical() {
                continue;
            }
            let classes = orientation_classes(&f);
            assert!((1..=2).contains(&classes.len()), "({alpha},{beta})");
            for c in &classes {
                assert!(c.reps.len() <= 4);
                assert!(c.reps.iter().all(|r| r % 2 == 1 && alpha.gcd(r) == 1));
            }
            if classes.len() == 2 {
                assert!(classes[0].reps.is_disjoint(&classes[1].reps));
            }
        }
    }
}

#[test]
fn conway_round_trip() {
    for alpha in 2..=1000i64 {
        for beta in (1..alpha).filter(|b| alpha.gcd(b) == 1) {
            let f = Fraction::new(alpha, beta).unwrap();
            let cf = fraction_to_cf(&f).unwrap();
            assert!(cf.digits().iter().all(|&d| d > 0));
            assert_eq!(cf.digits().len() % 2, 1);
            let v = cf_to_fraction(&cf).unwrap();
            assert_eq!(v.raw, f);
        }
    }
}

#[test]
fn flype_tangle_identity() {
    for p in 1..=50 {
        for q in 1..=50 {
            let a = cf_to_fraction(&ConwayDigits::new(vec![p, 1, 1, q]).unwrap()).unwrap();
            let b = cf_to_fraction(&ConwayDigits::new(vec![p, 2, -q - 1]).unwrap()).unwrap();
            assert_eq!(a.canonical, b.canonical, "p={p} q={q}");
            let c = cf_to_fraction(&ConwayDigits::new(vec![p, 2, q]).unwrap()).unwrap();
            assert_eq!(c.raw.pair(), [2 * p * q + p + q, 2 * q + 1]);
        }
    }
}

#[test]
fn degenerate_conway_inputs() {
    assert!(ConwayDigits::new(vec![]).is_err());
    assert!(ConwayDigits::new(vec![1, 0]).is_err());
    // 1 + 1/(-1 + 1/1) divides by zero
    assert!(cf_to_fraction(&ConwayDigits::new(vec![1, -1, 1]).unwrap()).is_err());
}

proptest! {
    #[test]
    fn canonical_is_a_class_function(alpha in 2i64..100_000, seed in 1i64..100_000) {
        let beta = (1..alpha).map(|k| (seed + k) % alpha).find(|b| *b > 0 && alpha.gcd(b) == 1).unwrap();
        let f = canonical(alpha, beta).unwrap();
        prop_assert_eq!(f.canonical(), f);
        for member in orbit(alpha, beta, false, true).unwrap() {
            prop_assert_eq!(canonical(alpha, member).unwrap(), f);
        }
    }

    #[test]
    fn cf_round_trip_large(alpha in 2i64..1_000_000_000, seed in 1i64..1_000_000_000) {
        let beta = (0..).map(|k| (seed + k) % alpha).find(|b| *b > 0 && alpha.gcd(b) == 1).unwrap();
        let f = Fraction::new(alpha, beta).unwrap();
        prop_assert_eq!(cf_to_fraction(&fraction_to_cf(&f).unwrap()).unwrap().raw, f);
    }
}
