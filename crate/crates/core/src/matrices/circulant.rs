use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::IntMatrix;
use crate::error::{Error, Result};

/// First row `(c_1, …, c_d)` of a circulant matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CirculantFirstRow(#[serde(with = "crate::serde_int::vec")] pub Vec<BigInt>);

impl CirculantFirstRow {
    pub fn from_i64(row: &[i64]) -> Self {
        CirculantFirstRow(row.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `c_j = c_{d-j+2}` for all `j`, i.e. the circulant matrix is symmetric.
    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    fn first_asymmetry(&self) -> Option<(usize, usize)> {
        let d = self.0.len();
        (1..d).map(|k| (k, d - k)).find(|&(k, mk)| self.0[k] != self.0[mk])
    }

    pub(crate) fn check_symmetric(&self) -> Result<()> {
        match self.first_asymmetry() {
            None => Ok(()),
            Some((index, mirror)) => Err(Error::AsymmetricRow { index, mirror }),
        }
    }

    /// Row sum, which is the eigenvalue on the all-ones vector.
    pub fn row_sum(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn to_matrix(&self) -> IntMatrix {
        circulant_from_first_row(self)
    }
}

impl FromStr for CirculantFirstRow {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let row = s
            .split(',')
            .map(|t| t.trim().parse::<BigInt>().map_err(|_| Error::Parse(format!("bad integer {t:?} in row"))))
            .collect::<Result<Vec<_>>>()?;
        if row.is_empty() {
            return Err(Error::Parse("empty first row".into()));
        }
        Ok(CirculantFirstRow(row))
    }
}

impl fmt::Display for CirculantFirstRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Row `k` is the first row cyclically shifted right by `k` places.
pub fn circulant_from_first_row(row: &CirculantFirstRow) -> IntMatrix {
    let d = row.len();
    IntMatrix::from_fn(d, |i, j| row.0[(j + d - i) % d].clone())
}

pub fn is_circulant(m: &IntMatrix) -> bool {
    let d = m.dim();
    (0..d).all(|i| (0..d).all(|j| m[(i, j)] == m[((i + 1) % d, (j + 1) % d)]))
}

pub fn first_row(m: &IntMatrix) -> CirculantFirstRow {
    CirculantFirstRow(m.row(0).to_vec())
}
