//! Exact combinatorics for equivariant surgery descriptions of cyclic
//! branched covers: SICUP matrices and their Pell parametrization, braid and
//! twist-tangle closures with their linking matrices, the `σ` tangle family,
//! ν♯-based decision predicates, and two-bridge knot invariants.

pub mod error;
pub mod floer;
pub mod matrices;
pub mod pell;
pub mod pipeline;
pub mod poly;
pub mod serde_int;
pub mod sigma;
pub mod tangle;
pub mod twobridge;

pub use error::{Error, Result};
