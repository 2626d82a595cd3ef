//! Exact integer Laurent polynomials in one variable `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};

/// Sparse map from exponent to nonzero coefficient. The zero polynomial is
/// the empty map.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    /// Builds `c[0] t^low + c[1] t^(low+1) + ...`.
    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (low + i as i64, BigInt::from(c))),
        )
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    /// Highest exponent minus lowest exponent.
    pub fn breadth(&self) -> Result<u64> {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => Ok((hi - lo) as u64),
            _ => Err(Error::ZeroPolynomial),
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    /// Representative of the class `±t^k · self` with lowest exponent 0 and
    /// positive lowest coefficient.
    pub fn normalize(&self) -> Result<Self> {
        let (lo, lead) = self.coeffs.iter().next().ok_or(Error::ZeroPolynomial)?;
        let shifted = self.shift(-lo);
        Ok(if lead.is_negative() {
            -shifted
        } else {
            shifted
        })
    }

    /// Equality up to multiplication by a unit `±t^k`. Zero equals only zero.
    pub fn equal_up_to_units(&self, other: &Self) -> bool {
        match (self.normalize(), other.normalize()) {
            (Ok(a), Ok(b)) => a == b,
            (Err(_), Err(_)) => true,
            _ => false,
        }
    }

    /// Substitutes `t -> 1/t`.
    pub fn invert_variable(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Value at `t = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&e, x)| (e, x * c)).collect(),
        }
    }

    /// Exact quotient `self / divisor`; fails unless the division is exact
    /// over the integers.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (d_hi, d_lead) = match divisor.coeffs.iter().next_back() {
            Some((&e, c)) => (e, c.clone()),
            None => return Err(Error::InexactDivision),
        };
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let d_lo = divisor.min_exp().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        // long division from the top; the quotient's lowest exponent is
        // bounded by lo(self) - lo(divisor)
        let q_floor = self.min_exp().unwrap() - d_lo;
        while let Some((&r_hi, r_lead)) = rem.coeffs.iter().next_back() {
            let e = r_hi - d_hi;
            if e < q_floor {
                return Err(Error::InexactDivision);
            }
            let (q, r) = (r_lead / &d_lead, r_lead % &d_lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (&de, dc) in &divisor.coeffs {
                rem.add_term(de + e, -(dc * &q));
            }
            quot.add_term(e, q);
        }
        Ok(quot)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Display for LaurentPoly {
    /// `1 - t + t^2`, exponents ascending; `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.coeffs.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "t")?,
                1 => write!(f, "{mag}*t")?,
                _ if unit => write!(f, "t^{e}")?,
                _ => write!(f, "{mag}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// JSON form: list of `[exponent, coefficient]` pairs, exponent ascending.
/// Coefficients that do not fit in an `i64` are written as strings.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for (&e, c) in &self.coeffs {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&(e, v))?,
                None => seq.serialize_element(&(e, c.to_string()))?,
            }
        }
        seq.end()
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.coeffs.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, x) in &self.coeffs {
            for (&b, y) in &rhs.coeffs {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * &p)
    }
}

/// Determinant of a square matrix of Laurent polynomials by fraction-free
/// (Bareiss) elimination. Every division is exact; an inexact division
/// means a bug and is reported as [`Error::InexactDivision`].
pub fn det_poly_matrix(m: &[Vec<LaurentPoly>]) -> Result<LaurentPoly> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::NotSquare(format!("{n} rows of unequal length")));
    }
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut a: Vec<Vec<LaurentPoly>> = m.to_vec();
    let mut prev = LaurentPoly::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            // prefer the sparsest pivot to keep intermediate sizes down
            let pivot = (k + 1..n)
                .filter(|&r| !a[r][k].is_zero())
                .min_by_key(|&r| a[r][k].term_count());
            match pivot {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(LaurentPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// `V - t V^T` for an integer matrix `V`.
pub fn seifert_pencil(v: &crate::linalg::IntMatrix) -> Vec<Vec<LaurentPoly>> {
    let n = v.size();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    &LaurentPoly::constant(v.get(i, j)) - &LaurentPoly::monomial(v.get(j, i), 1)
                })
                .collect()
        })
        .collect()
}

/// `det(V - t V^T)`.
pub fn alexander_of_matrix(v: &crate::linalg::IntMatrix) -> Result<LaurentPoly> {
    det_poly_matrix(&seifert_pencil(v))
}

/// Normalized `det(V - tV^T)` of the Seifert matrix assembled from its
/// blocks and the cross-block coupling.
pub fn alexander_from_blocks(v: &crate::seifert_matrix::BlockSeifertMatrix) -> Result<LaurentPoly> {
    let acc = alexander_of_matrix(&v.assembled())?;
    if acc.is_zero() {
        return Ok(acc);
    }
    acc.normalize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::IntMatrix;

    fn p(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(low, c)
    }

    #[test]
    fn breadth_examples() {
        assert_eq!(p(0, &[1, -1, 1]).breadth().unwrap(), 2);
        assert_eq!(LaurentPoly::one().breadth().unwrap(), 0);
        let two_terms = &LaurentPoly::monomial(3, -2) + &LaurentPoly::monomial(-7, 5);
        assert_eq!(two_terms.breadth().unwrap(), 7);
        assert_eq!(LaurentPoly::zero().breadth(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(p(-1, &[-1, 1, -1]).normalize().unwrap(), p(0, &[1, -1, 1]));
        assert_eq!(LaurentPoly::one().normalize().unwrap(), LaurentPoly::one());
        assert_eq!(
            LaurentPoly::monomial(-3, 5).normalize().unwrap(),
            LaurentPoly::constant(3)
        );
        assert!(LaurentPoly::zero().normalize().is_err());
    }

    #[test]
    fn units() {
        assert!(p(0, &[1, -1, 1]).equal_up_to_units(&p(-1, &[-1, 1, -1])));
        assert!(LaurentPoly::one().equal_up_to_units(&LaurentPoly::t()));
        assert!(!p(0, &[1, -1, 1]).equal_up_to_units(&p(0, &[1, -3, 1])));
        assert!(LaurentPoly::zero().equal_up_to_units(&LaurentPoly::zero()));
        assert!(!LaurentPoly::zero().equal_up_to_units(&LaurentPoly::one()));
    }

    #[test]
    fn display() {
        assert_eq!(p(0, &[1, -1, 1]).to_string(), "1 - t + t^2");
        assert_eq!(p(-1, &[-2, 0, 3]).to_string(), "-2*t^-1 + 3*t");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        let json = serde_json::to_string(&p(0, &[1, -3, 1])).unwrap();
        assert_eq!(json, "[[0,1],[1,-3],[2,1]]");
    }

    #[test]
    fn exact_division() {
        let a = p(0, &[1, -1, 1]);
        let b = p(-2, &[2, 0, 5, 1]);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert_eq!(
            p(0, &[1, 1]).exact_div(&p(0, &[2])),
            Err(Error::InexactDivision)
        );
        assert_eq!(
            p(0, &[1, 0, 1]).exact_div(&p(0, &[1, 1])),
            Err(Error::InexactDivision)
        );
    }

    #[test]
    fn determinant_examples() {
        let tre = IntMatrix::from_rows(vec![vec![1, -1], vec![0, 1]]).unwrap();
        assert!(alexander_of_matrix(&tre)
            .unwrap()
            .equal_up_to_units(&p(0, &[1, -1, 1])));
        assert_eq!(det_poly_matrix(&[]).unwrap(), LaurentPoly::one());
        let fig8 = IntMatrix::from_rows(vec![vec![1, -1], vec![0, -1]]).unwrap();
        assert_eq!(alexander_of_matrix(&fig8).unwrap(), p(0, &[-1, 3, -1]));
    }

    #[test]
    fn determinant_needs_pivoting() {
        // zero top-left entry forces a row swap
        let m = vec![
            vec![LaurentPoly::zero(), LaurentPoly::one()],
            vec![LaurentPoly::t(), LaurentPoly::zero()],
        ];
        assert_eq!(det_poly_matrix(&m).unwrap(), -LaurentPoly::t());
        let singular = vec![
            vec![LaurentPoly::zero(); 2],
            vec![LaurentPoly::t(), LaurentPoly::one()],
        ];
        assert!(det_poly_matrix(&singular).unwrap().is_zero());
    }
}
