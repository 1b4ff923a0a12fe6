//! Arithmetic of the double branched cover of a closed 3-braid.
//!
//! The reduced Burau representation at `t = -1` sends
//! `σ₁ ↦ [[1,1],[0,1]]` and `σ₂ ↦ [[1,0],[-1,1]]`, landing in `SL(2, Z)`.
//! For the image `M` of a braid, `M - I` presents the first homology of the
//! double cover of `S³` branched over the closure, and `|det(M - I)|` is
//! the determinant of the closure.

use std::fmt;
use std::ops::Mul;

use num_integer::Integer;
use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};

const OVERFLOW: Error = Error::Overflow {
    what: "Burau matrix",
};

/// A 2×2 integer matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Matrix2(pub [[i128; 2]; 2]);

impl Matrix2 {
    pub const IDENTITY: Matrix2 = Matrix2([[1, 0], [0, 1]]);

    pub fn new(a: i128, b: i128, c: i128, d: i128) -> Self {
        Matrix2([[a, b], [c, d]])
    }

    /// `σ_generator ^ exponent` in closed form.
    pub fn generator_power(generator: u8, exponent: i128) -> Self {
        match generator {
            1 => Matrix2::new(1, exponent, 0, 1),
            2 => Matrix2::new(1, 0, -exponent, 1),
            _ => panic!("B3 has generators 1 and 2"),
        }
    }

    pub fn checked_mul(&self, rhs: &Matrix2) -> Option<Matrix2> {
        let (a, b) = (self.0, rhs.0);
        let entry = |i: usize, j: usize| {
            a[i][0]
                .checked_mul(b[0][j])?
                .checked_add(a[i][1].checked_mul(b[1][j])?)
        };
        Some(Matrix2([
            [entry(0, 0)?, entry(0, 1)?],
            [entry(1, 0)?, entry(1, 1)?],
        ]))
    }

    pub fn trace(&self) -> Option<i128> {
        self.0[0][0].checked_add(self.0[1][1])
    }

    pub fn determinant(&self) -> Option<i128> {
        let m = self.0;
        m[0][0]
            .checked_mul(m[1][1])?
            .checked_sub(m[0][1].checked_mul(m[1][0])?)
    }

    pub fn minus_identity(&self) -> Option<Matrix2> {
        let m = self.0;
        Some(Matrix2([
            [m[0][0].checked_sub(1)?, m[0][1]],
            [m[1][0], m[1][1].checked_sub(1)?],
        ]))
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix2::IDENTITY
    }
}

impl Mul for Matrix2 {
    type Output = Matrix2;

    fn mul(self, rhs: Matrix2) -> Matrix2 {
        self.checked_mul(&rhs).expect("Burau matrix overflow")
    }
}

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.0;
        write!(f, "[[{},{}],[{},{}]]", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

/// Image of `w`, multiplying one run of equal letters at a time.
pub fn burau_matrix(w: &BraidWord) -> Result<Matrix2> {
    let letters = w.letters();
    let mut m = Matrix2::IDENTITY;
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        let run = letters[i..].iter().take_while(|&&x| x == l).count();
        let exponent = l.signum() as i128 * run as i128;
        m = m
            .checked_mul(&Matrix2::generator_power(l.unsigned_abs(), exponent))
            .ok_or(OVERFLOW)?;
        i += run;
    }
    Ok(m)
}

/// `|det(M - I)|`, which for `M` in `SL(2, Z)` is `|2 - tr M|`.
pub fn closure_determinant(w: &BraidWord) -> Result<i128> {
    let m = burau_matrix(w)?;
    let trace = m.trace().ok_or(OVERFLOW)?;
    2i128.checked_sub(trace).map(i128::abs).ok_or(OVERFLOW)
}

/// Invariant factors of a finitely generated abelian group presented by a
/// square integer matrix; `0` stands for an infinite cyclic summand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyClass {
    pub invariant_factors: Vec<i128>,
}

impl HomologyClass {
    /// Order of the group, or `None` when it is infinite.
    pub fn order(&self) -> Option<i128> {
        if self.invariant_factors.contains(&0) {
            None
        } else {
            Some(self.invariant_factors.iter().product())
        }
    }

    pub fn betti_number(&self) -> usize {
        self.invariant_factors.iter().filter(|&&d| d == 0).count()
    }
}

/// Smith normal form of a 2×2 matrix by row and column elimination.
pub fn smith_normal_form(m: &Matrix2) -> Result<[i128; 2]> {
    let mut a = m.0;
    loop {
        let pivot = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] != 0)
            .min_by_key(|&(i, j)| a[i][j].unsigned_abs());
        let Some((pi, pj)) = pivot else {
            return Ok([0, 0]);
        };
        a.swap(0, pi);
        for row in a.iter_mut() {
            row.swap(0, pj);
        }
        let p = a[0][0];
        let sub = |x: i128, q: i128, y: i128| -> Result<i128> {
            x.checked_sub(q.checked_mul(y).ok_or(OVERFLOW)?)
                .ok_or(OVERFLOW)
        };
        // row 1 -= q * row 0, then column 1 -= q * column 0
        let q = Integer::div_floor(&a[1][0], &p);
        a[1][0] = sub(a[1][0], q, p)?;
        a[1][1] = sub(a[1][1], q, a[0][1])?;
        let q = Integer::div_floor(&a[0][1], &p);
        a[0][1] = sub(a[0][1], q, p)?;
        a[1][1] = sub(a[1][1], q, a[1][0])?;
        if a[1][0] != 0 || a[0][1] != 0 {
            continue;
        }
        if a[1][1] % p != 0 {
            // fold row 1 into row 0 so the next pivot divides everything
            a[0][1] = a[1][1];
            continue;
        }
        return Ok([p.abs(), a[1][1].abs()]);
    }
}

/// First homology of the double branched cover of the closure of `w`.
pub fn dbc_homology(w: &BraidWord) -> Result<HomologyClass> {
    let m = burau_matrix(w)?.minus_identity().ok_or(OVERFLOW)?;
    let factors = smith_normal_form(&m)?;
    Ok(HomologyClass {
        invariant_factors: factors.to_vec(),
    })
}

/// A slope `p/q` on a torus, possibly taken as several parallel copies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SlopeSpec {
    pub p: i64,
    pub q: i64,
    pub curve_count: u8,
}

/// Lift of a slope on the braid-axis torus to the torus around the lifted
/// knot: `2p/q` for odd `q`, two parallel curves of slope `p/(q/2)` for
/// even `q`.
pub fn lift_slope(p: i64, q: i64) -> Result<SlopeSpec> {
    if q <= 0 {
        return Err(Error::InvalidSlope {
            p,
            q,
            reason: "denominator must be positive",
        });
    }
    if p.gcd(&q) != 1 {
        return Err(Error::InvalidSlope {
            p,
            q,
            reason: "numerator and denominator are not coprime",
        });
    }
    if q % 2 == 1 {
        let p2 = p.checked_mul(2).ok_or(Error::Overflow { what: "slope" })?;
        Ok(SlopeSpec {
            p: p2,
            q,
            curve_count: 1,
        })
    } else {
        Ok(SlopeSpec {
            p,
            q: q / 2,
            curve_count: 2,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> BraidWord {
        text.parse().unwrap()
    }

    #[test]
    fn burau_examples() {
        assert_eq!(
            burau_matrix(&w("1 2 1")).unwrap(),
            Matrix2::new(0, 1, -1, 0)
        );
        assert_eq!(
            burau_matrix(&w("2 1 2")).unwrap(),
            Matrix2::new(0, 1, -1, 0)
        );
        assert_eq!(
            burau_matrix(&BraidWord::full_twist(1)).unwrap(),
            Matrix2::new(-1, 0, 0, -1)
        );
        assert!(burau_matrix(&BraidWord::identity()).unwrap().is_identity());
        assert!(burau_matrix(&w("1 -1 2 -2")).unwrap().is_identity());
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(closure_determinant(&w("1 1 1 2")).unwrap(), 3);
        assert_eq!(closure_determinant(&w("1 1 1 2 2 1 1 -2")).unwrap(), 17);
        assert_eq!(closure_determinant(&w("1 2")).unwrap(), 1);
        assert_eq!(closure_determinant(&w("2")).unwrap(), 0);
    }

    #[test]
    fn homology_examples() {
        assert_eq!(
            dbc_homology(&w("1 1 1 1 2")).unwrap().invariant_factors,
            vec![1, 4]
        );
        let unlink = dbc_homology(&w("2")).unwrap();
        assert_eq!(unlink.invariant_factors, vec![1, 0]);
        assert_eq!(unlink.betti_number(), 1);
        assert_eq!(
            dbc_homology(&w("1 2")).unwrap().invariant_factors,
            vec![1, 1]
        );
        // Δ² ↦ -I, so M - I = -2I
        assert_eq!(
            dbc_homology(&BraidWord::full_twist(1))
                .unwrap()
                .invariant_factors,
            vec![2, 2]
        );
        assert_eq!(
            dbc_homology(&BraidWord::full_twist(2))
                .unwrap()
                .invariant_factors,
            vec![0, 0]
        );
    }

    #[test]
    fn smith_form_needs_gcd_step() {
        assert_eq!(
            smith_normal_form(&Matrix2::new(2, 0, 0, 3)).unwrap(),
            [1, 6]
        );
        assert_eq!(
            smith_normal_form(&Matrix2::new(4, 6, 6, 4)).unwrap(),
            [2, 10]
        );
    }

    #[test]
    fn slope_examples() {
        assert_eq!(
            lift_slope(1, 1).unwrap(),
            SlopeSpec {
                p: 2,
                q: 1,
                curve_count: 1
            }
        );
        assert_eq!(
            lift_slope(1, 2).unwrap(),
            SlopeSpec {
                p: 1,
                q: 1,
                curve_count: 2
            }
        );
        assert_eq!(
            lift_slope(0, 1).unwrap(),
            SlopeSpec {
                p: 0,
                q: 1,
                curve_count: 1
            }
        );
        assert_eq!(
            lift_slope(-3, 4).unwrap(),
            SlopeSpec {
                p: -3,
                q: 2,
                curve_count: 2
            }
        );
        assert!(lift_slope(2, 4).is_err());
        assert!(lift_slope(1, 0).is_err());
        assert!(lift_slope(1, -3).is_err());
    }
}
