//! Braid words, twist-region tangles, closures and their linking matrices,
//! and Alexander polynomials of knotted closures.

mod alexander;
mod braid;
mod diagram;
mod linking;

pub use alexander::{
    alexander_via_burau, burau_reduced, unknot_necessary_check, unknot_necessary_check_diagram, UnknotCheck,
};
pub use braid::{BraidWord, ClosureComponents, Permutation};
pub use diagram::{compile_tangle, Crossing, Diagram, Orientation, Region, TwistTangle, Visit};
pub use linking::{circulant_block_check, linking_matrix_of_closure, DiagonalRule, LinkingMatrixResult, PairTally};

/// Endpoint permutation of `w`.
pub fn braid_permutation(w: &BraidWord) -> Permutation {
    w.permutation()
}

pub fn power(w: &BraidWord, d: usize) -> BraidWord {
    w.power(d)
}

pub fn closure_components(w: &BraidWord) -> ClosureComponents {
    w.closure_components()
}

/// The 10-strand braid whose fifth power closes to a 5-component link with
/// linking matrix `circulant(3,-2,1,1,-2)` under base framing `+1`.
pub fn example_ten_braid() -> BraidWord {
    BraidWord::new(10, vec![-2, -2, -2, -2, -1, 2, 2, 2, 2, 2, -3, -4, 5, 6, -7, -8, 9]).expect("valid word")
}
