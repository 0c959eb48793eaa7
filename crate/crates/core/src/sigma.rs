//! The twist-box tangle family `σ(c_1, …, c_{2m-1})`: construction, the
//! closed-form linking numbers of `closure(σ^m)`, the torus-knot certificate
//! for its first component, and the adaptedness report.
//!
//! Planar model on `2m` strands, top to bottom: a vertical box of `1 - c_m`
//! twists at positions `(m, m+1)`, then box `j = 1, …, 2m-1` at positions
//! `(j, j+1)` with `c_j` twists, vertical for `j = m` and horizontal
//! otherwise.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::floer::{adapted_inequalities, nu_sharp, AdaptedCondition, Catalog, KnotClass, NuSharpInfo};
use crate::matrices::{verify_sicup, IntMatrix};
use crate::tangle::{
    compile_tangle, unknot_necessary_check_diagram, DiagonalRule, Diagram, Orientation, Permutation, Region,
    TwistTangle, UnknotCheck,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SigmaParams {
    m: usize,
    c: Vec<i64>,
}

impl SigmaParams {
    pub fn new(m: usize, c: Vec<i64>) -> Result<Self> {
        if m == 0 {
            return Err(Error::DimensionMismatch { expected: 1, got: 0 });
        }
        if c.len() != 2 * m - 1 {
            return Err(Error::DimensionMismatch { expected: 2 * m - 1, got: c.len() });
        }
        if let Some((i, &v)) = c.iter().enumerate().find(|(_, v)| *v % 2 == 0) {
            return Err(Error::EvenParameter { index: i + 1, value: v });
        }
        Ok(SigmaParams { m, c })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn c(&self) -> &[i64] {
        &self.c
    }

    /// `c_j`, 1-based.
    pub fn cj(&self, j: usize) -> i64 {
        self.c[j - 1]
    }

    pub fn c_m(&self) -> i64 {
        self.cj(self.m)
    }
}

pub fn build_sigma(p: &SigmaParams) -> TwistTangle {
    let m = p.m;
    let mut regions = vec![Region { position: m, twist: 1 - p.c_m(), orientation: Orientation::Vertical }];
    for j in 1..2 * m {
        let orientation = if j == m { Orientation::Vertical } else { Orientation::Horizontal };
        regions.push(Region { position: j, twist: p.cj(j), orientation });
    }
    TwistTangle { strands: 2 * m, regions }
}

pub fn sigma_diagram(p: &SigmaParams) -> Diagram {
    compile_tangle(&build_sigma(p)).expect("sigma tangles are well formed")
}

/// The expected connectivity `1 ↦ 2m`, `j ↦ j - 1`, 0-based.
pub fn expected_connectivity(m: usize) -> Permutation {
    let n = 2 * m;
    Permutation((0..n).map(|j| (j + n - 1) % n).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormRow {
    /// Full first row `a_11, …, a_1m`.
    pub row: Vec<i64>,
    /// `a_12, …, a_1k` with `k = ⌈(m+1)/2⌉`, straight from the formulas.
    pub formula_entries: Vec<i64>,
    /// `a_11` is completed from the row sum `λ_1 = 1`.
    pub a11_from_row_sum: bool,
}

/// Closed-form first row of the linking matrix of `closure(σ^m)`:
/// `a_12 = (c_1 + c_{m+1} + c_{m-1} + c_{2m-1} - c_m + 1) / 2` and
/// `a_1j = (c_{j-1} + c_{m+j-1} + c_{m-j+1} + c_{2m-j+1}) / 2` for
/// `3 ≤ j ≤ ⌈(m+1)/2⌉`; the rest by circulant symmetry and `a_11` by row sum.
pub fn closed_form_first_row(p: &SigmaParams) -> ClosedFormRow {
    let m = p.m;
    let c = |j: usize| p.cj(j);
    let half = |s: i64| {
        assert!(s % 2 == 0, "odd sum {s} in closed form");
        s / 2
    };
    let k = (m + 2) / 2;
    let mut formula_entries = Vec::new();
    for j in 2..=k {
        let v = if j == 2 {
            half(c(1) + c(m + 1) + c(m - 1) + c(2 * m - 1) - c(m) + 1)
        } else {
            half(c(j - 1) + c(m + j - 1) + c(m - j + 1) + c(2 * m - j + 1))
        };
        formula_entries.push(v);
    }
    let mut row = vec![0; m];
    for j in 2..=m {
        let jj = if j <= k { j } else { m + 2 - j };
        row[j - 1] = formula_entries[jj - 2];
    }
    row[0] = 1 - row[1..].iter().sum::<i64>();
    ClosedFormRow { row, formula_entries, a11_from_row_sum: true }
}

/// Linking matrix of `closure(σ^m)` with base framing `+1`, read off the diagram.
pub fn brute_force_linking(p: &SigmaParams) -> Result<IntMatrix> {
    Ok(sigma_diagram(p).power(p.m).linking_matrix(DiagonalRule::RowSum { base_framing: 1 })?.matrix)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfRegion {
    pub copy: usize,
    pub region: usize,
    pub twist: i64,
    pub orientation: Orientation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusCertificate {
    /// The first component is `T(2, q)`.
    pub q: i64,
    pub genus: u64,
    pub knot: KnotClass,
    /// Boxes both of whose strands lie on the first component.
    pub self_regions: Vec<SelfRegion>,
    pub matches_c_m: bool,
}

/// Certifies the first component `L_1` of `closure(σ^m)` as a `(2, q)` torus
/// knot. Deleting the other components leaves two strands running down
/// through the copies; their mutual crossings come from boxes met by `L_1`
/// on both sides. When each such box is vertical or a single crossing, `L_1`
/// is the closure of the 2-braid `σ_1^q` with `q` the signed crossing count.
pub fn identify_l1(p: &SigmaParams) -> Result<TorusCertificate> {
    let tangle = build_sigma(p);
    let d = compile_tangle(&tangle)?.power(p.m);
    let comps = d.crossing_components();
    let mut self_regions: Vec<SelfRegion> = Vec::new();
    let mut q = 0i64;
    for (i, cr) in d.crossings().iter().enumerate() {
        if comps[i] != (1, 1) {
            continue;
        }
        q += cr.sign as i64;
        if cr.index > 1 {
            continue;
        }
        let reg = tangle.regions[cr.region];
        if reg.orientation == Orientation::Horizontal && reg.twist.abs() != 1 {
            return Err(Error::Certificate(format!(
                "copy {} region {} is a horizontal box of {} twists with both strands on the first component",
                cr.copy, cr.region, reg.twist
            )));
        }
        self_regions.push(SelfRegion {
            copy: cr.copy,
            region: cr.region,
            twist: reg.twist,
            orientation: reg.orientation,
        });
    }
    if q % 2 == 0 {
        return Err(Error::Certificate(format!("even self-crossing count {q}: the first component is not a knot")));
    }
    Ok(TorusCertificate {
        q,
        genus: (q.unsigned_abs() - 1) / 2,
        knot: KnotClass::torus2_signed(q),
        self_regions,
        matches_c_m: q == p.c_m(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdaptedReport {
    pub unknot_check: UnknotCheck,
    pub linking_match: bool,
    pub linking_matrix: IntMatrix,
    pub target_matrix: IntMatrix,
    pub target_is_sicup: bool,
    pub first_component: std::result::Result<TorusCertificate, String>,
    pub nu: NuSharpInfo,
    pub nu_condition: AdaptedCondition,
    pub verdict: bool,
}

/// Whether `σ(p)` is adapted to `a`: closure(σ) passes the unknot check, the
/// diagram's linking matrix equals `a`, and `a_11` meets the ν♯ inequality
/// for the certified first component.
pub fn check_adapted(p: &SigmaParams, a: &IntMatrix, catalog: &Catalog) -> Result<AdaptedReport> {
    let d = sigma_diagram(p);
    let unknot_check = unknot_necessary_check_diagram(&d);
    let linking_matrix = brute_force_linking(p)?;
    let linking_match = &linking_matrix == a;
    let first_component = identify_l1(p).map_err(|e| e.to_string());
    let nu = match &first_component {
        Ok(cert) => nu_sharp(&cert.knot, catalog),
        Err(e) => NuSharpInfo::unknown(e.clone()),
    };
    let nu_condition = match a.get(0, 0).and_then(BigInt::to_i64) {
        Some(a11) => adapted_inequalities(a11, &nu),
        None => AdaptedCondition::Inconclusive,
    };
    let verdict = unknot_check.passed() && linking_match && nu_condition.is_satisfied();
    Ok(AdaptedReport {
        unknot_check,
        linking_match,
        linking_matrix,
        target_matrix: a.clone(),
        target_is_sicup: verify_sicup(a).verdict,
        first_component,
        nu,
        nu_condition,
        verdict,
    })
}
