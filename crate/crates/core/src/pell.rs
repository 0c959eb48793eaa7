//! The generalized Pell equation `a^2 - 5b^2 = 4` and its bijection with the
//! 5×5 SICUP matrices `A(x, l, m)` (first row `(x, l, m, m, l)`).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrices::{verify_sicup, CirculantFirstRow, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PellSolution {
    #[serde(with = "crate::serde_int::scalar")]
    pub a: BigInt,
    #[serde(with = "crate::serde_int::scalar")]
    pub b: BigInt,
}

impl PellSolution {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        PellSolution { a: a.into(), b: b.into() }
    }

    pub fn is_solution(&self) -> bool {
        &self.a * &self.a - BigInt::from(5) * &self.b * &self.b == BigInt::from(4)
    }

    /// `a ≡ 2 (mod 5)` and `a > 0`: the solutions that correspond to SICUP matrices.
    pub fn is_admissible(&self) -> bool {
        self.a.is_positive() && self.a.mod_floor(&BigInt::from(5)) == BigInt::from(2)
    }
}

/// Parameters of `A(x, l, m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SicupParams5 {
    #[serde(with = "crate::serde_int::scalar")]
    pub x: BigInt,
    #[serde(with = "crate::serde_int::scalar")]
    pub l: BigInt,
    #[serde(with = "crate::serde_int::scalar")]
    pub m: BigInt,
}

impl SicupParams5 {
    pub fn new(x: impl Into<BigInt>, l: impl Into<BigInt>, m: impl Into<BigInt>) -> Self {
        SicupParams5 { x: x.into(), l: l.into(), m: m.into() }
    }

    pub fn first_row(&self) -> CirculantFirstRow {
        CirculantFirstRow(vec![self.x.clone(), self.l.clone(), self.m.clone(), self.m.clone(), self.l.clone()])
    }

    pub fn matrix(&self) -> IntMatrix {
        self.first_row().to_matrix()
    }

    /// Reads `(x, l, m)` back from a 5×5 symmetric circulant matrix.
    pub fn from_matrix(m: &IntMatrix) -> Result<Self> {
        if m.dim() != 5 {
            return Err(Error::DimensionMismatch { expected: 5, got: m.dim() });
        }
        let p = SicupParams5::new(m[(0, 0)].clone(), m[(0, 1)].clone(), m[(0, 2)].clone());
        if &p.matrix() != m {
            return Err(Error::NotSicup("not a symmetric circulant A(x, l, m)".into()));
        }
        Ok(p)
    }
}

/// Non-negative branch `(a, b)`, `b >= 0`, of the solution set in increasing
/// order: `(2,0), (3,1), (7,3), (18,8), …`, generated by
/// `(a, b) ↦ ((3a+5b)/2, (a+3b)/2)`.
fn positive_branch() -> impl Iterator<Item = PellSolution> {
    std::iter::successors(Some(PellSolution::new(2, 0)), |s| {
        let two = BigInt::from(2);
        let a = (BigInt::from(3) * &s.a + BigInt::from(5) * &s.b) / &two;
        let b = (&s.a + BigInt::from(3) * &s.b) / &two;
        Some(PellSolution { a, b })
    })
}

/// The first `count` solutions of `a^2 - 5b^2 = 4`, ordered by `|a|`
/// ascending, positive `a` before negative, then `b` descending.
///
/// `require_a_mod5` keeps only solutions with `a ≡ r (mod 5)`; every solution
/// has `a ≡ ±2`, so any other residue yields an empty list.
pub fn solve_pell_5_4(count: usize, require_a_mod5: Option<i64>, require_a_positive: bool) -> Vec<PellSolution> {
    let five = BigInt::from(5);
    let residue = require_a_mod5.map(|r| BigInt::from(r).mod_floor(&five));
    if let Some(r) = &residue {
        if *r != BigInt::from(2) && *r != BigInt::from(3) {
            return Vec::new();
        }
    }
    let mut out = Vec::with_capacity(count);
    for base in positive_branch() {
        let mut group = vec![base.clone()];
        if !base.b.is_zero() {
            group.push(PellSolution { a: base.a.clone(), b: -&base.b });
        }
        if !require_a_positive {
            let negated: Vec<_> = group.iter().map(|s| PellSolution { a: -&s.a, b: s.b.clone() }).collect();
            group.extend(negated);
        }
        for s in group {
            if residue.as_ref().is_some_and(|r| s.a.mod_floor(&five) != *r) {
                continue;
            }
            out.push(s);
            if out.len() == count {
                return out;
            }
        }
    }
    unreachable!("solution stream is infinite")
}

/// `A(x, l, m) ↦ (2x - l - m, l - m)`.
pub fn phi(params: &SicupParams5) -> Result<PellSolution> {
    let report = verify_sicup(&params.matrix());
    if !report.verdict {
        return Err(Error::NotSicup(format!("A({}, {}, {})", params.x, params.l, params.m)));
    }
    let a = BigInt::from(2) * &params.x - &params.l - &params.m;
    let b = &params.l - &params.m;
    let s = PellSolution { a, b };
    debug_assert!(s.is_solution() && s.is_admissible());
    Ok(s)
}

/// `(a, b) ↦ A((2a+1)/5, (2-a+5b)/10, (2-a-5b)/10)`, defined for admissible
/// solutions with `a > 0`.
pub fn phi_inverse(s: &PellSolution) -> Result<SicupParams5> {
    if !s.is_solution() {
        return Err(Error::NotPellSolution { a: s.a.to_string(), b: s.b.to_string() });
    }
    let five = BigInt::from(5);
    let ten = BigInt::from(10);
    if s.a.mod_floor(&five) != BigInt::from(2) {
        return Err(Error::NotAdmissible(s.a.to_string()));
    }
    if !s.a.is_positive() {
        return Err(Error::NegativeBranch(s.a.to_string()));
    }
    let exact = |num: BigInt, den: &BigInt, what: &str| -> Result<BigInt> {
        let (q, r) = num.div_rem(den);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Divisibility(format!("{den} does not divide {what} = {num}")))
        }
    };
    let two = BigInt::from(2);
    let fb = &five * &s.b;
    let x = exact(&two * &s.a + 1, &five, "2a+1")?;
    let l = exact(&two - &s.a + &fb, &ten, "2-a+5b")?;
    let m = exact(&two - &s.a - &fb, &ten, "2-a-5b")?;
    Ok(SicupParams5 { x, l, m })
}

/// First `count` elements of the set of 5×5 SICUP matrices, in the order of
/// their Pell solutions.
pub fn enumerate_m5(count: usize) -> Vec<(PellSolution, IntMatrix)> {
    solve_pell_5_4(count, Some(2), true)
        .into_iter()
        .map(|s| {
            let m = phi_inverse(&s).expect("admissible solution").matrix();
            (s, m)
        })
        .collect()
}
