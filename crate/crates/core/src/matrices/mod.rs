//! Exact integer matrices: circulants, SICUP verification and enumeration,
//! circulant spectra, and blow-downs of linking matrices.

mod circulant;
mod int_matrix;
mod sicup;
mod spectrum;

pub use circulant::{circulant_from_first_row, first_row, is_circulant, CirculantFirstRow};
pub(crate) use int_matrix::bareiss_det;
pub use int_matrix::IntMatrix;
pub use sicup::{
    enumerate_sicup, enumerate_sicup_rows, reversed_row, verify_sicup, SicupEnumeration, SicupReport, ENUMERATION_BOUND,
};
pub use spectrum::{circulant_spectrum, size_five_closed_form, Eigenvalue, SpectralDecomposition};

use num_bigint::BigInt;

use crate::error::Result;

pub fn det_exact(m: &IntMatrix) -> BigInt {
    m.det()
}

pub fn is_positive_definite(m: &IntMatrix) -> Result<bool> {
    m.is_positive_definite()
}

pub fn negate(m: &IntMatrix) -> IntMatrix {
    m.negate()
}

/// Blow down the ±1-framed component `k` (0-based).
pub fn blow_down(m: &IntMatrix, k: usize) -> Result<IntMatrix> {
    m.blow_down(k)
}
