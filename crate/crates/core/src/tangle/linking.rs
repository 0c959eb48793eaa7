use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::braid::BraidWord;
use super::diagram::Diagram;
use crate::error::{Error, Result};
use crate::matrices::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum DiagonalRule {
    /// `l_ii = n - Σ_{j≠i} l_ij`, so every row sums to the base framing `n`.
    RowSum {
        base_framing: i64,
    },
    UserSupplied {
        framings: Vec<i64>,
    },
}

/// Signed crossing tally between two components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairTally {
    /// 1-based component ids, `a < b`.
    pub a: usize,
    pub b: usize,
    pub crossings: usize,
    pub signed_sum: i64,
    /// Signed sum split by source region of the tangle.
    pub by_region: BTreeMap<usize, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkingMatrixResult {
    pub matrix: IntMatrix,
    pub off_diagonal_provenance: Vec<PairTally>,
    pub diagonal_rule: DiagonalRule,
}

impl Diagram {
    /// Inter-component crossing tallies for every pair with at least one crossing.
    pub fn pair_tallies(&self) -> Vec<PairTally> {
        let mut map: BTreeMap<(usize, usize), PairTally> = BTreeMap::new();
        for (c, (x, y)) in self.crossing_components().into_iter().enumerate() {
            if x == y {
                continue;
            }
            let (a, b) = (x.min(y), x.max(y));
            let cr = self.crossings()[c];
            let t = map.entry((a, b)).or_insert_with(|| PairTally {
                a,
                b,
                crossings: 0,
                signed_sum: 0,
                by_region: BTreeMap::new(),
            });
            t.crossings += 1;
            t.signed_sum += cr.sign as i64;
            *t.by_region.entry(cr.region).or_insert(0) += cr.sign as i64;
        }
        map.into_values().collect()
    }

    /// Linking matrix of the closure: off-diagonal entries are half the signed
    /// inter-component crossing sums, the diagonal follows `rule`.
    pub fn linking_matrix(&self, rule: DiagonalRule) -> Result<LinkingMatrixResult> {
        let count = self.closure_components().count;
        let tallies = self.pair_tallies();
        let mut lk = vec![vec![0i64; count]; count];
        for t in &tallies {
            if t.signed_sum % 2 != 0 {
                return Err(Error::OddLinkingSum { a: t.a, b: t.b, sum: t.signed_sum });
            }
            lk[t.a - 1][t.b - 1] = t.signed_sum / 2;
            lk[t.b - 1][t.a - 1] = t.signed_sum / 2;
        }
        match &rule {
            DiagonalRule::RowSum { base_framing } => {
                for (i, row) in lk.iter_mut().enumerate() {
                    let off: i64 = row.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, x)| x).sum();
                    row[i] = base_framing - off;
                }
            }
            DiagonalRule::UserSupplied { framings } => {
                if framings.len() != count {
                    return Err(Error::ComponentCount { expected: count, got: framings.len() });
                }
                for i in 0..count {
                    lk[i][i] = framings[i];
                }
            }
        }
        let matrix = IntMatrix::from_fn(count, |i, j| BigInt::from(lk[i][j]));
        Ok(LinkingMatrixResult { matrix, off_diagonal_provenance: tallies, diagonal_rule: rule })
    }
}

/// Linking matrix of the closure of `w` with the row-sum diagonal rule.
pub fn linking_matrix_of_closure(w: &BraidWord, base_framing: i64) -> Result<LinkingMatrixResult> {
    Diagram::from_braid(w).linking_matrix(DiagonalRule::RowSum { base_framing })
}

/// True when `m` (of size `u·d`) consists of `d`×`d` blocks obeying the
/// circulant shift rule, with symmetric diagonal blocks.
pub fn circulant_block_check(m: &IntMatrix, d: usize, u: usize) -> Result<bool> {
    if d == 0 || m.dim() != u * d {
        return Err(Error::DimensionMismatch { expected: u * d, got: m.dim() });
    }
    for r in 0..u {
        for s in 0..u {
            let at = |k: usize, j: usize| &m[(r * d + k, s * d + j)];
            for k in 0..d {
                for j in 0..d {
                    if at(k, j) != at(0, (j + d - k) % d) {
                        return Ok(false);
                    }
                    if r == s && at(k, j) != at(j, k) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}
