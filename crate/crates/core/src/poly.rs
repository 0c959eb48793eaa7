//! Integer Laurent polynomials in one variable `t`, exact division, and
//! determinants of polynomial matrices.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `t^shift · (c_0 + c_1 t + …)`, kept trimmed so that `c_0` and the last
/// coefficient are non-zero. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    shift: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(0, vec![c.into()])
    }

    /// `c · t^k`
    pub fn monomial(c: impl Into<BigInt>, k: i64) -> Self {
        Self::new(k, vec![c.into()])
    }

    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn new(shift: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { shift, coeffs };
        p.trim();
        p
    }

    pub fn from_i64(shift: i64, coeffs: &[i64]) -> Self {
        Self::new(shift, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.shift = 0;
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.shift += lead as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low_degree(&self) -> i64 {
        self.shift
    }

    pub fn high_degree(&self) -> i64 {
        self.shift + self.coeffs.len() as i64 - 1
    }

    /// Coefficients from the lowest power upward.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        let i = k - self.shift;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.shift, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn shifted(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly { shift: self.shift + k, coeffs: self.coeffs.clone() }
    }

    /// `p(t) ↦ p(1/t)`
    pub fn invert_variable(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.coeffs.clone();
        c.reverse();
        LaurentPoly { shift: -self.high_degree(), coeffs: c }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval_i64(&self, x: i64) -> Option<BigInt> {
        if x == 0 && self.shift < 0 {
            return None;
        }
        let xb = BigInt::from(x);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &xb + c;
        }
        if self.shift >= 0 {
            Some(acc * xb.pow(self.shift as u32))
        } else {
            // only x = ±1 keeps the value integral in general
            let p = xb.pow((-self.shift) as u32);
            let (q, r) = acc.div_rem(&p);
            r.is_zero().then_some(q)
        }
    }

    pub fn eval_complex(&self, re: f64, im: f64) -> (f64, f64) {
        let (mut ar, mut ai) = (0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let nr = ar * re - ai * im + c;
            let ni = ar * im + ai * re;
            ar = nr;
            ai = ni;
        }
        // multiply by z^shift (|z| = 1 assumed for negative shifts)
        let (mut pr, mut pi) = (1.0, 0.0);
        let (br, bi) = if self.shift >= 0 { (re, im) } else { (re, -im) };
        for _ in 0..self.shift.unsigned_abs() {
            let nr = pr * br - pi * bi;
            let ni = pr * bi + pi * br;
            pr = nr;
            pi = ni;
        }
        (ar * pr - ai * pi, ar * pi + ai * pr)
    }

    /// Exact division in `Z[t, 1/t]`; errors when `divisor` does not divide.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // both coefficient vectors have non-zero constant terms after trimming
        let mut rem = self.coeffs.clone();
        let d = &divisor.coeffs;
        if rem.len() < d.len() {
            return Err(Error::InexactDivision);
        }
        let lead = d.last().unwrap();
        let qlen = rem.len() - d.len() + 1;
        let mut q = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &rem[i + d.len() - 1];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (k, dk) in d.iter().enumerate() {
                rem[i + k] -= &c * dk;
            }
            q[i] = c;
        }
        if rem.iter().any(|x| !x.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(LaurentPoly::new(self.shift - divisor.shift, q))
    }

    /// Normal form of an Alexander-type polynomial: multiply by `±t^k` so the
    /// lowest power is `t^0` and the leading coefficient is positive.
    pub fn normalize(&self) -> IntPoly {
        let mut c = self.coeffs.clone();
        if c.last().is_some_and(|x| x.is_negative()) {
            for x in c.iter_mut() {
                *x = -&*x;
            }
        }
        IntPoly(c)
    }

    /// `p ≐ p(1/t)` up to a unit `±t^k`.
    pub fn is_symmetric_up_to_units(&self) -> bool {
        self.normalize() == self.invert_variable().normalize()
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = self.shift + i as i64;
            let sign = if c.is_negative() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            let body = match (k, mag.is_one()) {
                (0, _) => mag.to_string(),
                (1, true) => "t".to_string(),
                (1, false) => format!("{mag}t"),
                (_, true) => format!("t^{k}"),
                (_, false) => format!("{mag}t^{k}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.shift.min(rhs.shift);
        let hi = self.high_degree().max(rhs.high_degree());
        let coeffs = (lo..=hi).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        LaurentPoly::new(lo, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { shift: self.shift, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.shift + rhs.shift, c)
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
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Normalized integer polynomial `c_0 + c_1 t + … + c_n t^n` (lowest degree 0,
/// positive leading coefficient when non-zero).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPoly(#[serde(with = "crate::serde_int::vec")] pub Vec<BigInt>);

impl IntPoly {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        LaurentPoly::from_i64(0, coeffs).normalize()
    }

    pub fn one() -> Self {
        IntPoly(vec![BigInt::one()])
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::new(0, self.0.clone())
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.to_laurent().eval_i64(x).expect("non-negative powers")
    }

    pub fn is_palindromic(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|c| c.to_i64()).collect()
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.to_laurent(), f)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.to_laurent(), f)
    }
}

/// Determinant of a square matrix over `Z[t, 1/t]` by Bareiss elimination.
pub fn poly_det(mut a: Vec<Vec<LaurentPoly>>) -> Result<LaurentPoly> {
    let n = a.len();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
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
                a[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -&d } else { d })
}

/// Resultant of two integer polynomials via the Sylvester matrix.
pub fn resultant(p: &IntPoly, q: &IntPoly) -> BigInt {
    let (m, n) = (p.degree(), q.degree());
    if m + n == 0 {
        return BigInt::one();
    }
    let size = m + n;
    let mut rows = vec![vec![BigInt::zero(); size]; size];
    // coefficients written from the leading term down
    let pc: Vec<BigInt> = p.0.iter().rev().cloned().collect();
    let qc: Vec<BigInt> = q.0.iter().rev().cloned().collect();
    for i in 0..n {
        for (k, c) in pc.iter().enumerate() {
            rows[i][i + k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in qc.iter().enumerate() {
            rows[n + i][i + k] = c.clone();
        }
    }
    crate::matrices::bareiss_det(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(shift: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64(shift, c)
    }

    #[test]
    fn trims_and_shifts() {
        let p = lp(-2, &[0, 0, 1, 2, 0]);
        assert_eq!(p.low_degree(), 0);
        assert_eq!(p.high_degree(), 1);
        assert!(lp(3, &[0, 0]).is_zero());
    }

    #[test]
    fn arithmetic() {
        let a = lp(0, &[1, 1]);
        let b = lp(0, &[1, -1]);
        assert_eq!(&a * &b, lp(0, &[1, 0, -1]));
        assert_eq!(&a + &b, lp(0, &[2]));
        assert_eq!(&a - &a, LaurentPoly::zero());
        assert_eq!(lp(-1, &[1]).invert_variable(), lp(1, &[1]));
    }

    #[test]
    fn exact_division() {
        let num = lp(-1, &[1, 0, 0, 1]); // t^-1 + t^2
        let den = lp(0, &[1, 1]);
        assert_eq!(num.div_exact(&den).unwrap(), lp(-1, &[1, -1, 1]));
        assert_eq!(lp(0, &[1, 0, 1]).div_exact(&den), Err(Error::InexactDivision));
        assert_eq!(lp(0, &[2, 2]).div_exact(&lp(0, &[2])).unwrap(), den);
        assert_eq!(lp(0, &[3]).div_exact(&lp(0, &[2])), Err(Error::InexactDivision));
    }

    #[test]
    fn normalize_alexander() {
        let p = lp(-2, &[-1, 1, -1]);
        assert_eq!(p.normalize(), IntPoly::from_i64(&[1, -1, 1]));
        assert!(p.is_symmetric_up_to_units());
        assert!(!lp(0, &[1, 2]).is_symmetric_up_to_units());
    }

    #[test]
    fn evaluation() {
        let p = lp(-1, &[1, -3, 1]);
        assert_eq!(p.eval_i64(1), Some(BigInt::from(-1)));
        assert_eq!(p.eval_i64(-1), Some(BigInt::from(-5)));
        let (re, im) = p.eval_complex(0.0, 1.0);
        // i^-1 - 3 + i = -3
        assert!((re + 3.0).abs() < 1e-12 && im.abs() < 1e-12);
    }

    #[test]
    fn determinant_2x2() {
        let t = LaurentPoly::t();
        let one = LaurentPoly::one();
        let m = vec![vec![&one - &t, one.clone()], vec![-&t, &one - &t]];
        assert_eq!(poly_det(m).unwrap().normalize(), IntPoly::from_i64(&[1, -1, 1]));
    }

    #[test]
    fn sylvester_resultant() {
        // Res(t - 2, t^2 + 1) = 2^2 + 1
        let r = resultant(&IntPoly::from_i64(&[-2, 1]), &IntPoly::from_i64(&[1, 0, 1]));
        assert_eq!(r.abs(), BigInt::from(5));
        // common root
        let r = resultant(&IntPoly::from_i64(&[-1, 1]), &IntPoly::from_i64(&[-1, 0, 1]));
        assert!(r.is_zero());
    }
}
