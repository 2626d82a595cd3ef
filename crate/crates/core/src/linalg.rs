//! Small dense integer matrices with exact determinant and rank.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Square integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct IntMatrix {
    rows: Vec<Vec<i64>>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::NotSquare(format!(
                "{n} rows but a row of length {}",
                bad.len()
            )));
        }
        Ok(Self { rows })
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            rows: vec![vec![0; n]; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.rows[i][i] = 1;
        }
        m
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.rows[i][j] = v;
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn transpose(&self) -> Self {
        let n = self.size();
        Self {
            rows: (0..n)
                .map(|i| (0..n).map(|j| self.rows[j][i]).collect())
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.size();
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.rows[i][k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.rows[i][j] += a * other.rows[k][j];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(i64, i64) -> i64) -> Self {
        Self {
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(r, s)| r.iter().zip(s).map(|(&a, &b)| f(a, b)).collect())
                .collect(),
        }
    }

    /// `P^T self P`.
    pub fn congruent(&self, p: &Self) -> Self {
        p.transpose().mul(self).mul(p)
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    /// Leading principal submatrix of size `k`.
    pub fn leading(&self, k: usize) -> Self {
        Self {
            rows: self.rows[..k].iter().map(|r| r[..k].to_vec()).collect(),
        }
    }

    fn big(&self) -> Vec<Vec<BigInt>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    /// Exact determinant (Bareiss). The empty matrix has determinant 1.
    pub fn det(&self) -> BigInt {
        let n = self.size();
        if n == 0 {
            return BigInt::from(1);
        }
        let mut a = self.big();
        let mut prev = BigInt::from(1);
        let mut negate = false;
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// Rank over the rationals, by fraction-free row reduction.
    pub fn rank(&self) -> usize {
        let n = self.size();
        let mut a = self.big();
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for i in rank + 1..n {
                if a[i][col].is_zero() {
                    continue;
                }
                let (f, g) = (a[rank][col].clone(), a[i][col].clone());
                let pivot_row = a[rank].clone();
                for (x, p) in a[i].iter_mut().zip(&pivot_row).skip(col) {
                    *x = &f * &*x - &g * p;
                }
            }
            rank += 1;
        }
        rank
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> i64 {
        self.rows
            .iter()
            .flatten()
            .map(|x| x.abs())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntMatrix {
    /// `[[a,b],[c,d]]`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, x) in r.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// A random matrix of determinant ±1: a product of `steps` elementary row
/// operations (adding a small multiple of one row to another, swapping two
/// rows, negating a row) applied to the identity.
pub fn random_unimodular<R: rand::Rng + ?Sized>(n: usize, steps: usize, rng: &mut R) -> IntMatrix {
    let mut p = IntMatrix::identity(n);
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            p.rows[0][0] = -1;
        }
        return p;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        match rng.gen_range(0..6) {
            0 => p.rows.swap(i, j),
            1 => p.rows[i].iter_mut().for_each(|x| *x = -*x),
            _ => {
                let c = [-2, -1, 1, 2][rng.gen_range(0..4)];
                for k in 0..n {
                    p.rows[i][k] += c * p.rows[j][k];
                }
            }
        }
    }
    p
}

/// Serializes a big integer as a JSON number when it fits in an `i64`,
/// otherwise as a decimal string.
pub(crate) struct BigJson<'a>(pub &'a BigInt);

impl Serialize for BigJson<'_> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

/// Sign of a big integer as -1, 0 or 1.
pub(crate) fn signum(x: &BigInt) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}
