use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::braid::BraidWord;
use super::diagram::Diagram;
use crate::error::{Error, Result};
use crate::poly::{poly_det, IntPoly, LaurentPoly};

/// Reduced Burau image of `w`, `(n-1)×(n-1)` over `Z[t, 1/t]`.
pub fn burau_reduced(w: &BraidWord) -> Vec<Vec<LaurentPoly>> {
    let n = w.strands().saturating_sub(1);
    let mut rho: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() }).collect())
        .collect();
    let t = LaurentPoly::t();
    let t_inv = LaurentPoly::monomial(1, -1);
    for &l in w.letters() {
        let m = l.unsigned_abs() as usize - 1;
        // the generator differs from the identity only in row m, whose
        // entries at columns m-1, m, m+1 are (t, -t, 1), or (1, -1/t, 1/t)
        // for the inverse; columns outside 0..n are dropped
        let (a, b, c) =
            if l > 0 { (t.clone(), -&t, LaurentPoly::one()) } else { (LaurentPoly::one(), -&t_inv, t_inv.clone()) };
        let delta: Vec<(usize, LaurentPoly)> = [(m.wrapping_sub(1), a), (m, &b - &LaurentPoly::one()), (m + 1, c)]
            .into_iter()
            .filter(|(col, _)| *col < n)
            .collect();
        for row in rho.iter_mut() {
            let pivot = row[m].clone();
            if pivot.is_zero() {
                continue;
            }
            for (col, g) in &delta {
                row[*col] = &row[*col] + &(&pivot * g);
            }
        }
    }
    rho
}

/// Alexander polynomial of the closure of `w` from
/// `det(I - ρ(w)) = Δ · (1 + t + … + t^{n-1})`.
pub fn alexander_via_burau(w: &BraidWord) -> Result<IntPoly> {
    let comps = w.closure_components();
    if comps.count != 1 {
        return Err(Error::NotAKnot(comps.count));
    }
    let rho = burau_reduced(w);
    let m: Vec<Vec<LaurentPoly>> = rho
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter().enumerate().map(|(j, x)| if i == j { &LaurentPoly::one() - x } else { -x }).collect()
        })
        .collect();
    let det = poly_det(m)?;
    let ones = LaurentPoly::new(0, vec![BigInt::one(); w.strands()]);
    Ok(det.div_exact(&ones)?.normalize())
}

/// Determinant up to a unit `±t^k`, eliminating on unit pivots first so the
/// sparse presentation matrices of long diagrams stay small.
fn det_up_to_unit(mut rows: Vec<BTreeMap<usize, LaurentPoly>>) -> Result<LaurentPoly> {
    let is_unit = |p: &LaurentPoly| p.coeffs().len() == 1 && p.coeffs()[0].abs().is_one();
    loop {
        let mut col_count: BTreeMap<usize, usize> = BTreeMap::new();
        for r in &rows {
            for &c in r.keys() {
                *col_count.entry(c).or_insert(0) += 1;
            }
        }
        let mut best: Option<(usize, usize, usize)> = None;
        for (ri, r) in rows.iter().enumerate() {
            for (&c, v) in r {
                if is_unit(v) {
                    let cost = (r.len() - 1) * (col_count[&c] - 1);
                    if best.is_none_or(|b| cost < b.2) {
                        best = Some((ri, c, cost));
                    }
                }
            }
        }
        let Some((ri, c, _)) = best else { break };
        let prow = rows.swap_remove(ri);
        let u = &prow[&c];
        let u_inv = LaurentPoly::monomial(u.coeffs()[0].clone(), -u.low_degree());
        for r in rows.iter_mut() {
            let Some(e) = r.remove(&c) else { continue };
            let f = &e * &u_inv;
            for (&k, v) in &prow {
                if k == c {
                    continue;
                }
                let nv = &r.get(&k).cloned().unwrap_or_default() - &(&f * v);
                if nv.is_zero() {
                    r.remove(&k);
                } else {
                    r.insert(k, nv);
                }
            }
        }
    }
    if rows.is_empty() {
        return Ok(LaurentPoly::one());
    }
    let mut cols: Vec<usize> = rows.iter().flat_map(|r| r.keys().copied()).collect();
    cols.sort_unstable();
    cols.dedup();
    if cols.len() < rows.len() {
        return Ok(LaurentPoly::zero());
    }
    let dense = rows.iter().map(|r| cols.iter().map(|c| r.get(c).cloned().unwrap_or_default()).collect()).collect();
    poly_det(dense)
}

impl Diagram {
    /// Alexander polynomial of a knotted closure from the Fox matrix of its
    /// Wirtinger presentation.
    pub fn alexander(&self) -> Result<IntPoly> {
        let (comps, walks) = self.traverse();
        if comps.count != 1 {
            return Err(Error::NotAKnot(comps.count));
        }
        let n = self.crossings().len();
        if n == 0 {
            return Ok(IntPoly::one());
        }
        let walk = &walks[0];
        let unders = walk.iter().filter(|v| !v.over).count();
        let mut over = vec![0; n];
        let mut incoming = vec![0; n];
        let mut outgoing = vec![0; n];
        let mut arc = 0;
        let mut seen = 0;
        for v in walk {
            if v.over {
                over[v.crossing] = arc;
            } else {
                seen += 1;
                incoming[v.crossing] = arc;
                arc = if seen == unders { 0 } else { arc + 1 };
                outgoing[v.crossing] = arc;
            }
        }
        let t = LaurentPoly::t();
        let one = LaurentPoly::one();
        let mut rows = Vec::with_capacity(n);
        for (c, cr) in self.crossings().iter().enumerate() {
            let entries = if cr.sign > 0 {
                [(over[c], &one - &t), (incoming[c], t.clone()), (outgoing[c], -&one)]
            } else {
                [(over[c], &t - &one), (incoming[c], one.clone()), (outgoing[c], -&t)]
            };
            let mut row: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
            for (col, v) in entries {
                let nv = &row.get(&col).cloned().unwrap_or_default() + &v;
                row.insert(col, nv);
            }
            row.retain(|&col, v| col != 0 && !v.is_zero());
            rows.push(row);
        }
        rows.remove(0);
        Ok(det_up_to_unit(rows)?.normalize())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "reason", rename_all = "lowercase")]
pub enum UnknotCheck {
    /// One component, `Δ ≐ 1` and `|Δ(-1)| = 1`. Necessary, not sufficient.
    Pass,
    Fail(String),
}

impl UnknotCheck {
    pub fn passed(&self) -> bool {
        matches!(self, UnknotCheck::Pass)
    }

    fn from_alexander(delta: &IntPoly) -> Self {
        let at_minus_one = delta.eval_i64(-1);
        if *delta != IntPoly::one() {
            UnknotCheck::Fail(format!("Alexander polynomial {delta} is not 1"))
        } else if !at_minus_one.abs().is_one() {
            UnknotCheck::Fail(format!("|Δ(-1)| = {} != 1", at_minus_one.abs()))
        } else {
            UnknotCheck::Pass
        }
    }
}

/// Necessary (not sufficient) test that the closure of `w` is the unknot.
pub fn unknot_necessary_check(w: &BraidWord) -> UnknotCheck {
    match alexander_via_burau(w) {
        Err(Error::NotAKnot(c)) => UnknotCheck::Fail(format!("closure has {c} components")),
        Err(e) => UnknotCheck::Fail(e.to_string()),
        Ok(delta) => UnknotCheck::from_alexander(&delta),
    }
}

/// Same test on a compiled tangle diagram, using the Wirtinger route.
pub fn unknot_necessary_check_diagram(d: &Diagram) -> UnknotCheck {
    match d.alexander() {
        Err(Error::NotAKnot(c)) => UnknotCheck::Fail(format!("closure has {c} components")),
        Err(e) => UnknotCheck::Fail(e.to_string()),
        Ok(delta) => UnknotCheck::from_alexander(&delta),
    }
}
