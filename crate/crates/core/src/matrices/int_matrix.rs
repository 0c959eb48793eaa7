use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Dense square matrix over arbitrary-precision integers, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix { dim, entries: vec![BigInt::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        IntMatrix { dim, entries }
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::Ragged { row: r, len: row.len(), expected: dim });
            }
            entries.extend(row.iter().cloned().map(Into::into));
        }
        Ok(IntMatrix { dim, entries })
    }

    /// Convenience constructor for small literal matrices; panics on ragged input.
    pub fn from_i64<const N: usize>(rows: [[i64; N]; N]) -> Self {
        Self::from_fn(N, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&BigInt> {
        (i < self.dim && j < self.dim).then(|| &self.entries[i * self.dim + j])
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.dim).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Leading `k`×`k` principal submatrix.
    pub fn leading(&self, k: usize) -> IntMatrix {
        IntMatrix::from_fn(k, |i, j| self[(i, j)].clone())
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.dim, |i, j| self[(j, i)].clone())
    }

    /// Entries as `i64`, if they all fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        use num_traits::ToPrimitive;
        (0..self.dim).map(|i| self.row(i).iter().map(|x| x.to_i64()).collect()).collect()
    }

    /// Exact determinant by Bareiss fraction-free elimination with row pivoting.
    pub fn det(&self) -> BigInt {
        bareiss_det(self.rows())
    }

    /// Leading principal minors `D_1, …, D_n`.
    pub fn leading_minors(&self) -> Vec<BigInt> {
        // Bareiss without pivoting: the k-th pivot is the k-th leading minor
        // as long as every earlier pivot is non-zero.
        let n = self.dim;
        let mut a = self.rows();
        let mut minors = Vec::with_capacity(n);
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                minors.extend((k + 1..=n).map(|s| self.leading(s).det()));
                return minors;
            }
            minors.push(a[k][k].clone());
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        minors
    }

    /// Sylvester's criterion, evaluated exactly.
    pub fn is_positive_definite(&self) -> Result<bool> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(self.leading_minors().iter().all(|m| m.is_positive()))
    }

    /// Negative definiteness: leading minors alternate in sign, starting negative.
    pub fn is_negative_definite(&self) -> Result<bool> {
        self.negate().is_positive_definite()
    }

    pub fn negate(&self) -> IntMatrix {
        IntMatrix { dim: self.dim, entries: self.entries.iter().map(|x| -x).collect() }
    }

    /// Removes a ±1-framed component `k` (0-based) from a linking matrix,
    /// replacing `a_ij` by `a_ij - a_ik a_jk / a_kk` on the remaining indices.
    pub fn blow_down(&self, k: usize) -> Result<IntMatrix> {
        if k >= self.dim {
            return Err(Error::IndexOutOfRange { index: k, dim: self.dim });
        }
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let pivot = &self[(k, k)];
        if pivot.abs() != BigInt::one() {
            return Err(Error::NotUnitFraming { index: k, value: pivot.to_string() });
        }
        let keep: Vec<usize> = (0..self.dim).filter(|&i| i != k).collect();
        // 1/a_kk == a_kk for a_kk = ±1
        Ok(IntMatrix::from_fn(keep.len(), |r, c| {
            let (i, j) = (keep[r], keep[c]);
            &self[(i, j)] - pivot * &self[(i, k)] * &self[(j, k)]
        }))
    }
}

pub(crate) fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.dim && j < self.dim, "index ({i}, {j}) out of bounds for dim {}", self.dim);
        &self.entries[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.dim && j < self.dim, "index ({i}, {j}) out of bounds for dim {}", self.dim);
        &mut self.entries[i * self.dim + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.dim {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

// JSON form is an array of arrays of integers.
impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<serde_json::Value>> =
            (0..self.dim).map(|i| self.row(i).iter().map(crate::serde_int::to_value).collect()).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rows: Vec<Vec<serde_json::Value>> = Vec::deserialize(d)?;
        let parsed: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|row| row.iter().map(crate::serde_int::from_value).collect::<std::result::Result<_, _>>())
            .collect::<std::result::Result<_, String>>()
            .map_err(D::Error::custom)?;
        IntMatrix::from_rows(&parsed).map_err(D::Error::custom)
    }
}
