//! SICUP matrices: symmetric, integral, circulant, unimodular and positive
//! definite.

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::circulant::{first_row, is_circulant, CirculantFirstRow};
use super::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SicupReport {
    pub symmetric: bool,
    pub integral: bool,
    pub circulant: bool,
    pub unimodular: bool,
    pub positive_definite: bool,
    /// Row sum of the first row, i.e. the eigenvalue on the all-ones vector
    /// when the matrix is circulant.
    #[serde(with = "crate::serde_int::scalar")]
    pub lambda1: BigInt,
    pub verdict: bool,
}

pub fn verify_sicup(m: &IntMatrix) -> SicupReport {
    let symmetric = m.is_symmetric();
    let circulant = is_circulant(m);
    let unimodular = m.det().is_one();
    let positive_definite = symmetric && m.is_positive_definite().unwrap_or(false);
    let lambda1 = if m.dim() == 0 { BigInt::from(0) } else { first_row(m).row_sum() };
    let verdict = symmetric && circulant && unimodular && positive_definite;
    if verdict {
        assert!(lambda1.is_one(), "SICUP matrix with lambda1 = {lambda1}");
    }
    SicupReport { symmetric, integral: true, circulant, unimodular, positive_definite, lambda1, verdict }
}

/// Result of a bounded SICUP search together with the bound that makes it
/// complete.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SicupEnumeration {
    pub size: usize,
    pub c1_max: i64,
    pub bound: String,
    pub first_rows: Vec<CirculantFirstRow>,
}

impl SicupEnumeration {
    pub fn matrices(&self) -> Vec<IntMatrix> {
        self.first_rows.iter().map(CirculantFirstRow::to_matrix).collect()
    }
}

pub const ENUMERATION_BOUND: &str =
    "complete for 1 <= c1 <= c1_max; off-diagonal |c_j| <= c1 (positive definiteness); row sum = 1";

/// All `d`×`d` SICUP matrices whose diagonal entry is at most `c1_max`,
/// ordered lexicographically by first row.
pub fn enumerate_sicup(d: usize, c1_max: i64) -> Vec<IntMatrix> {
    enumerate_sicup_rows(d, c1_max).matrices()
}

pub fn enumerate_sicup_rows(d: usize, c1_max: i64) -> SicupEnumeration {
    assert!(d >= 1, "size must be positive");
    let mut rows: Vec<Vec<i64>> = (1..=c1_max.max(0))
        .into_par_iter()
        .flat_map_iter(|c1| candidates_with_diagonal(d, c1))
        .filter(|row| verify_sicup(&CirculantFirstRow::from_i64(row).to_matrix()).verdict)
        .collect();
    rows.sort();
    SicupEnumeration {
        size: d,
        c1_max,
        bound: ENUMERATION_BOUND.to_string(),
        first_rows: rows.iter().map(|r| CirculantFirstRow::from_i64(r)).collect(),
    }
}

/// Symmetric first rows with diagonal `c1`, every other entry in `[-c1, c1]`
/// and row sum 1. The row is determined by `c_2, …, c_{h+1}` with
/// `h = floor(d/2)`; the last free entry is solved from the row sum.
fn candidates_with_diagonal(d: usize, c1: i64) -> Vec<Vec<i64>> {
    let h = d / 2;
    if h == 0 {
        return if c1 == 1 { vec![vec![1]] } else { vec![] };
    }
    // weight of c_{k+1} in the row sum: 2 except for the self-paired middle entry
    let weight = |k: usize| if d.is_multiple_of(2) && k == h { 1 } else { 2 };
    let mut out = Vec::new();
    let mut free = vec![-c1; h - 1];
    loop {
        let partial: i64 = c1 + free.iter().enumerate().map(|(i, &v)| weight(i + 1) * v).sum::<i64>();
        let rest = 1 - partial;
        let w = weight(h);
        if rest % w == 0 && (rest / w).abs() <= c1 {
            let mut half = vec![c1];
            half.extend_from_slice(&free);
            half.push(rest / w);
            out.push(expand_half_row(d, &half));
        }
        // odometer over free entries
        let mut i = 0;
        while i < free.len() {
            if free[i] < c1 {
                free[i] += 1;
                break;
            }
            free[i] = -c1;
            i += 1;
        }
        if i == free.len() {
            break;
        }
    }
    out
}

/// `(c_1, …, c_{h+1})` to the full symmetric row of length `d`.
pub(crate) fn expand_half_row(d: usize, half: &[i64]) -> Vec<i64> {
    (0..d).map(|k| half[k.min(d - k)]).collect()
}

/// Index reversal `c_{j} ↦ c_{d-j+2}` applied to a first row.
pub fn reversed_row(row: &CirculantFirstRow) -> CirculantFirstRow {
    let d = row.len();
    CirculantFirstRow((0..d).map(|k| row.0[(d - k) % d].clone()).collect())
}
