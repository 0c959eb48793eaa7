use std::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::circulant::CirculantFirstRow;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Eigenvalue {
    pub value: f64,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralDecomposition {
    /// `λ_1` first (multiplicity 1), then `λ_2, …, λ_{r+1}` each of multiplicity 2.
    pub eigenvalues: Vec<Eigenvalue>,
    #[serde(with = "crate::serde_int::scalar")]
    pub lambda1_exact: BigInt,
}

impl SpectralDecomposition {
    /// Floating product of all eigenvalues counted with multiplicity.
    pub fn det_approx(&self) -> f64 {
        self.eigenvalues.iter().map(|e| e.value.powi(e.multiplicity as i32)).product()
    }
}

/// Spectrum of a symmetric circulant matrix of odd size `d = 2r+1`:
/// `λ_j = c_1 + 2 Σ_k c_{k+1} cos(2πjk/d)`, where `λ_j = λ_{d-j}`.
pub fn circulant_spectrum(row: &CirculantFirstRow) -> Result<SpectralDecomposition> {
    let d = row.len();
    if d.is_multiple_of(2) {
        return Err(Error::EvenSize(d));
    }
    row.check_symmetric()?;
    let r = d / 2;
    let c: Vec<f64> = row.0.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect();
    let lambda =
        |j: usize| c[0] + 2.0 * (1..=r).map(|k| c[k] * (2.0 * PI * (j * k) as f64 / d as f64).cos()).sum::<f64>();
    let lambda1_exact = row.row_sum();
    let mut eigenvalues = vec![Eigenvalue { value: lambda1_exact.to_f64().unwrap_or(f64::NAN), multiplicity: 1 }];
    eigenvalues.extend((1..=r).map(|j| Eigenvalue { value: lambda(j), multiplicity: 2 }));
    Ok(SpectralDecomposition { eigenvalues, lambda1_exact })
}

/// Closed forms for `A(x, l, m)` with first row `(x, l, m, m, l)`:
/// `(λ_2, λ_3) = ((2x-l-m) ± √5 (l-m)) / 2`.
pub fn size_five_closed_form(x: f64, l: f64, m: f64) -> (f64, f64) {
    let s5 = 5f64.sqrt();
    let base = 2.0 * x - l - m;
    ((base + s5 * (l - m)) / 2.0, (base - s5 * (l - m)) / 2.0)
}
