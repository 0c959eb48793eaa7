//! Arithmetic in `Q(ζ_d)` and exact signatures of Hermitian matrices over it.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::LaurentPoly;

/// Coefficients of the `d`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_poly(d: u32) -> Vec<BigInt> {
    assert!(d >= 1);
    let mut num = LaurentPoly::from_i64(0, &{
        let mut v = vec![0i64; d as usize + 1];
        v[0] = -1;
        v[d as usize] = 1;
        v
    });
    for k in 1..d {
        if d.is_multiple_of(k) {
            let phi = LaurentPoly::new(0, cyclotomic_poly(k));
            num = num.div_exact(&phi).expect("cyclotomic factor divides");
        }
    }
    num.coeffs().to_vec()
}

/// The field `Q(ζ_d)` as `Q[x] / Φ_d(x)`.
#[derive(Clone, Debug)]
pub struct CyclotomicField {
    d: u32,
    modulus: Vec<BigInt>,
}

/// Element of a [`CyclotomicField`]: coefficients of `1, ζ, …, ζ^{φ(d)-1}`.
pub type Elem = Vec<BigRational>;

impl CyclotomicField {
    pub fn new(d: u32) -> Self {
        CyclotomicField { d, modulus: cyclotomic_poly(d) }
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn zero(&self) -> Elem {
        vec![BigRational::zero(); self.degree()]
    }

    pub fn from_int(&self, c: i64) -> Elem {
        let mut e = self.zero();
        e[0] = BigRational::from_integer(c.into());
        e
    }

    /// `c · ζ^k`, any integer `k`.
    pub fn root_power(&self, c: &BigInt, k: i64) -> Elem {
        let k = k.mod_floor(&(self.d as i64)) as usize;
        let mut raw = vec![BigRational::zero(); k + 1];
        raw[k] = BigRational::from_integer(c.clone());
        self.reduce(raw)
    }

    fn reduce(&self, mut raw: Vec<BigRational>) -> Elem {
        let n = self.degree();
        // modulus is monic
        while raw.len() > n {
            let top = raw.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = raw.len() - n;
            for (i, m) in self.modulus[..n].iter().enumerate() {
                raw[shift + i] -= &top * BigRational::from_integer(m.clone());
            }
        }
        raw.resize(n, BigRational::zero());
        raw
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(&self, a: &Elem, c: &BigRational) -> Elem {
        a.iter().map(|x| x * c).collect()
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let n = self.degree();
        let mut raw = vec![BigRational::zero(); 2 * n - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        self.reduce(raw)
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        a.iter().all(Zero::is_zero)
    }

    /// Sign of the real part of `a` at `ζ = exp(2πi j/d)`, evaluated with
    /// fixed-point cosines to `PRECISION_BITS` bits; `None` if the value is
    /// too close to zero to decide.
    pub fn real_sign(&self, a: &Elem, j: u32) -> Option<i8> {
        if self.is_zero(a) {
            return Some(0);
        }
        let den = a.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let nums: Vec<BigInt> = a.iter().map(|x| x.numer() * (&den / x.denom())).collect();
        let pi = fixed_pi();
        let mut sum = BigInt::zero();
        let mut bound = BigInt::zero();
        for (i, n) in nums.iter().enumerate() {
            if n.is_zero() {
                continue;
            }
            let k = (i as u64 * j as u64) % self.d as u64;
            sum += n * fixed_cos_fraction(&pi, k, self.d as u64);
            bound += n.abs() * BigInt::from(COS_ERROR_ULPS);
        }
        match sum.abs().cmp(&bound) {
            std::cmp::Ordering::Greater => Some(if sum.sign() == Sign::Minus { -1 } else { 1 }),
            _ => None,
        }
    }
}

const PRECISION_BITS: u32 = 480;
const COS_ERROR_ULPS: u64 = 1 << 16;

fn fixed_one() -> BigInt {
    BigInt::one() << PRECISION_BITS
}

/// `atan(1/x)` in fixed point.
fn fixed_atan_inv(x: u64) -> BigInt {
    let one = fixed_one();
    let x2 = BigInt::from(x * x);
    let mut term = &one / BigInt::from(x);
    let mut sum = term.clone();
    let mut k = 1u64;
    loop {
        term = &term / &x2;
        if term.is_zero() {
            break;
        }
        let t = &term / BigInt::from(2 * k + 1);
        if k % 2 == 1 {
            sum -= t;
        } else {
            sum += t;
        }
        k += 1;
    }
    sum
}

fn fixed_pi() -> BigInt {
    BigInt::from(16) * fixed_atan_inv(5) - BigInt::from(4) * fixed_atan_inv(239)
}

/// `cos(2π k / d)` in fixed point.
fn fixed_cos_fraction(pi: &BigInt, k: u64, d: u64) -> BigInt {
    // reduce to x ∈ [-π, π]
    let (k, d) = if 2 * k > d { (d - k, d) } else { (k, d) };
    let x = BigInt::from(2 * k) * pi / BigInt::from(d);
    let one = fixed_one();
    let x2 = (&x * &x) >> PRECISION_BITS;
    let mut term = one.clone();
    let mut sum = one;
    let mut n = 1u64;
    loop {
        term = -((&term * &x2) >> PRECISION_BITS) / BigInt::from((2 * n - 1) * (2 * n));
        if term.is_zero() {
            break;
        }
        sum += &term;
        n += 1;
    }
    sum
}

/// Characteristic polynomial coefficients `c_0, …, c_n` (`c_n = 1`) of a
/// square matrix over the field, by Faddeev–LeVerrier.
pub fn char_poly(f: &CyclotomicField, h: &[Vec<Elem>]) -> Vec<Elem> {
    let n = h.len();
    let mut c = vec![f.zero(); n + 1];
    c[n] = f.from_int(1);
    let mut m: Vec<Vec<Elem>> = vec![vec![f.zero(); n]; n];
    for k in 1..=n {
        // M_k = H M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![f.zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = f.zero();
                for l in 0..n {
                    if !f.is_zero(&m[l][j]) && !f.is_zero(&h[i][l]) {
                        acc = f.add(&acc, &f.mul(&h[i][l], &m[l][j]));
                    }
                }
                if i == j {
                    acc = f.add(&acc, &c[n - k + 1]);
                }
                next[i][j] = acc;
            }
        }
        m = next;
        let mut tr = f.zero();
        for i in 0..n {
            for l in 0..n {
                tr = f.add(&tr, &f.mul(&h[i][l], &m[l][i]));
            }
        }
        c[n - k] = f.scale(&tr, &BigRational::new(BigInt::from(-1), BigInt::from(k as u64)));
    }
    c
}
