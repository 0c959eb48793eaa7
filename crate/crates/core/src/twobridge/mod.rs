//! Two-bridge knots `b(p, q)`: even continued fractions, banded Seifert
//! matrices, Alexander polynomials, homology orders of cyclic branched
//! covers and Tristram–Levine signatures at roots of unity.

mod cyclotomic;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrices::IntMatrix;
use crate::poly::{poly_det, resultant, IntPoly, LaurentPoly};

pub use cyclotomic::{char_poly, cyclotomic_poly, CyclotomicField};

/// Continued-fraction convention used throughout:
/// `[a_1, …, a_n] = a_1 + 1/(a_2 + 1/(… + 1/a_n))`.
pub const CF_CONVENTION: &str = "p/q = a1 + 1/(a2 + 1/(... + 1/an))";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoBridgeFraction {
    pub p: i64,
    pub q: i64,
}

impl TwoBridgeFraction {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p <= 0 || p % 2 == 0 {
            return Err(Error::InvalidFraction(format!("p = {p} must be odd and positive")));
        }
        if q == 0 || q.abs() >= p {
            return Err(Error::InvalidFraction(format!("need 0 < |q| < p, got q = {q}")));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidFraction(format!("gcd({p}, {q}) != 1")));
        }
        Ok(TwoBridgeFraction { p, q })
    }

    /// Same knot (`q' ≡ q^{±1} mod p`).
    pub fn is_equivalent(&self, other: &TwoBridgeFraction) -> bool {
        self.p == other.p && {
            let (q, r) = (self.q.mod_floor(&self.p), other.q.mod_floor(&self.p));
            q == r || (q * r).mod_floor(&self.p) == 1
        }
    }

    /// Mirror image (`q ↦ -q`).
    pub fn mirror(&self) -> TwoBridgeFraction {
        TwoBridgeFraction { p: self.p, q: -self.q }
    }
}

impl FromStr for TwoBridgeFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (p, q) = s.split_once('/').ok_or_else(|| Error::Parse(format!("expected p/q, got {s:?}")))?;
        let p = p.trim().parse().map_err(|e| Error::Parse(format!("p in {s:?}: {e}")))?;
        let q = q.trim().parse().map_err(|e| Error::Parse(format!("q in {s:?}: {e}")))?;
        Self::new(p, q)
    }
}

impl fmt::Display for TwoBridgeFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EvenCF(Vec<i64>);

impl EvenCF {
    pub fn new(terms: Vec<i64>) -> Result<Self> {
        if !terms.len().is_multiple_of(2) || terms.iter().any(|&a| a == 0 || a % 2 != 0) {
            return Err(Error::InvalidEvenCf(format!("{terms:?}")));
        }
        Ok(EvenCF(terms))
    }

    pub fn terms(&self) -> &[i64] {
        &self.0
    }

    /// Genus of the knot, half the length.
    pub fn genus(&self) -> usize {
        self.0.len() / 2
    }

    /// `(p, q)` with `p/q = [a_1, …, a_n]`, `p > 0`.
    pub fn evaluate(&self) -> (BigInt, BigInt) {
        let (mut num, mut den) = (BigInt::one(), BigInt::zero());
        for &a in self.0.iter().rev() {
            // a + den/num
            let next = BigInt::from(a) * &num + &den;
            den = num;
            num = next;
        }
        if num.is_negative() {
            (-num, -den)
        } else {
            (num, den)
        }
    }
}

/// Even continued fraction of `p/q`. When `q` is odd it is first replaced by
/// `q - p·sign(q)`, which names the same knot and makes `q` even.
pub fn even_cf(f: &TwoBridgeFraction) -> EvenCF {
    let q = if f.q % 2 != 0 { f.q - f.p * f.q.signum() } else { f.q };
    let (mut num, mut den) = (f.p, q);
    let mut terms = Vec::new();
    while den != 0 {
        // the even a with |num - a·den| < |den|
        let a = nearest_even_quotient(num, den);
        terms.push(a);
        let r = num - a * den;
        num = den;
        den = r;
    }
    EvenCF::new(terms).expect("two-bridge knots have even-length even expansions")
}

fn nearest_even_quotient(num: i64, den: i64) -> i64 {
    let fl = Integer::div_floor(&num, &den);
    let cands = [fl - 1, fl, fl + 1, fl + 2];
    *cands
        .iter()
        .filter(|a| *a % 2 == 0)
        .find(|&&a| (num - a * den).abs() < den.abs())
        .expect("an even partial quotient exists")
}

/// Seifert matrix of a two-bridge knot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SeifertMatrix(pub Vec<Vec<i64>>);

impl SeifertMatrix {
    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.size(), |i, j| BigInt::from(self.0[i][j]))
    }
}

/// Banded Seifert matrix of the plumbing of twisted bands read off
/// `[2b_1, …, 2b_{2g}]`: diagonal `(-1)^{i} b_{i+1}` (0-based `i`) and a unit
/// linking each consecutive pair of bands, above the diagonal after an even
/// band and below it after an odd one.
pub fn seifert_from_even_cf(cf: &EvenCF) -> SeifertMatrix {
    let n = cf.0.len();
    let mut v = vec![vec![0i64; n]; n];
    for (i, &a) in cf.0.iter().enumerate() {
        v[i][i] = if i % 2 == 0 { a / 2 } else { -a / 2 };
        if i + 1 < n {
            if i % 2 == 0 {
                v[i][i + 1] = 1;
            } else {
                v[i + 1][i] = 1;
            }
        }
    }
    SeifertMatrix(v)
}

/// `det(V - t Vᵀ)`, normalized.
pub fn alexander_poly(v: &SeifertMatrix) -> IntPoly {
    let n = v.size();
    let t = LaurentPoly::t();
    let m = (0..n)
        .map(|i| {
            (0..n).map(|j| &LaurentPoly::constant(v.0[i][j]) - &(&t * &LaurentPoly::constant(v.0[j][i]))).collect()
        })
        .collect();
    poly_det(m).expect("integer entries divide exactly").normalize()
}

/// `|H_1|` of the `d`-fold cyclic branched cover, `|Res(Δ, 1 + t + … + t^{d-1})|`;
/// zero when the homology is infinite.
pub fn homology_order(delta: &IntPoly, d: i64) -> Result<BigInt> {
    if d <= 0 {
        return Err(Error::NonPositiveDegree(d));
    }
    let ones = IntPoly(vec![BigInt::one(); d as usize]);
    Ok(resultant(delta, &ones).abs())
}

/// Signature of `(1 - ω)V + (1 - ω̄)Vᵀ` at `ω = exp(2πi j/d)`, computed
/// exactly in `Q(ζ_d)`: the characteristic polynomial of a Hermitian matrix
/// is real-rooted, so its positive roots are counted by coefficient sign
/// changes. Signs are decided from fixed-point cosines, and an undecidable
/// sign trips the guard instead of guessing.
pub fn tl_signature(v: &SeifertMatrix, d: u32, j: u32) -> Result<i64> {
    if d == 0 {
        return Err(Error::NonPositiveDegree(0));
    }
    let n = v.size();
    if n == 0 {
        return Ok(0);
    }
    // ω = ζ_d^j is a primitive root of order d / gcd(d, j)
    let (d0, j0) = (d, j);
    let g = d.gcd(&(j % d));
    let (d, j) = (d / g, (j % d) / g);
    if d == 1 {
        return Err(Error::DegenerateForm { d: d0, j: j0 });
    }
    let f = CyclotomicField::new(d);
    let one = BigInt::one();
    // 1 - ζ and 1 - ζ^{-1}
    let a = f.sub(&f.from_int(1), &f.root_power(&one, 1));
    let b = f.sub(&f.from_int(1), &f.root_power(&one, -1));
    let h: Vec<Vec<_>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let x = f.scale(&a, &BigInt::from(v.0[r][c]).into());
                    let y = f.scale(&b, &BigInt::from(v.0[c][r]).into());
                    f.add(&x, &y)
                })
                .collect()
        })
        .collect();
    let chi = char_poly(&f, &h);
    if f.is_zero(&chi[0]) {
        return Err(Error::DegenerateForm { d: d0, j: j0 });
    }
    let mut signs = Vec::with_capacity(n + 1);
    for c in &chi {
        match f.real_sign(c, j) {
            Some(0) => {}
            Some(s) => signs.push(s),
            None => return Err(Error::SignatureGuard { d: d0, j: j0 }),
        }
    }
    let positive = signs.windows(2).filter(|w| w[0] != w[1]).count() as i64;
    Ok(2 * positive - n as i64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverDegree {
    pub d: i64,
    #[serde(with = "crate::serde_int::scalar")]
    pub homology_order: BigInt,
    pub homology_sphere: bool,
    /// `σ_ω` for `ω = exp(2πi j/d)`, `j = 1, …, d-1`, at homology-sphere degrees.
    pub signatures: Option<Vec<i64>>,
    /// Some signature at a `d`-th root of unity is non-zero.
    pub criterion_applies: Option<bool>,
    /// Every signature at the `d`-th roots of unity vanishes.
    pub thin: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchedCoverReport {
    pub fraction: TwoBridgeFraction,
    pub convention: String,
    pub even_cf: EvenCF,
    /// The expansion evaluates to this fraction, equivalent to the input.
    #[serde(with = "crate::serde_int::pair")]
    pub cf_value: (BigInt, BigInt),
    pub seifert: SeifertMatrix,
    pub alexander: IntPoly,
    pub degrees: Vec<CoverDegree>,
}

pub fn branched_cover_report(f: &TwoBridgeFraction, d_max: i64) -> Result<BranchedCoverReport> {
    if d_max < 2 {
        return Err(Error::NonPositiveDegree(d_max));
    }
    let cf = even_cf(f);
    let seifert = seifert_from_even_cf(&cf);
    let alexander = alexander_poly(&seifert);
    let degrees = (2..=d_max)
        .into_par_iter()
        .map(|d| -> Result<CoverDegree> {
            let order = homology_order(&alexander, d)?;
            let sphere = order.is_one();
            let signatures = if sphere {
                Some((1..d as u32).map(|j| tl_signature(&seifert, d as u32, j)).collect::<Result<Vec<_>>>()?)
            } else {
                None
            };
            let criterion_applies = signatures.as_ref().map(|s| s.iter().any(|&x| x != 0));
            Ok(CoverDegree {
                d,
                homology_order: order,
                homology_sphere: sphere,
                thin: criterion_applies.map(|a| !a),
                signatures,
                criterion_applies,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BranchedCoverReport {
        fraction: *f,
        convention: CF_CONVENTION.into(),
        cf_value: cf.evaluate(),
        even_cf: cf,
        seifert,
        alexander,
        degrees,
    })
}
