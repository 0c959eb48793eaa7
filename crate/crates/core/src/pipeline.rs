//! End-to-end check for a braid `β` with `d`-fold periodic closure: closure(β)
//! should pass the unknot test, the linking matrix `A` of closure(β^d) should
//! be SICUP, and the surgery theorem should apply to `-A` with mirrored data.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::floer::{thm_nu_applies, NuSharpInfo, ThmNuVerdict};
use crate::matrices::{verify_sicup, IntMatrix, SicupReport};
use crate::tangle::{circulant_block_check, linking_matrix_of_closure, unknot_necessary_check, BraidWord, UnknotCheck};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineReport {
    pub unknot_check: UnknotCheck,
    pub components: usize,
    pub linking_matrix: IntMatrix,
    pub circulant_blocks: bool,
    pub sicup: SicupReport,
    pub mirrored_matrix: IntMatrix,
    pub thm_nu: std::result::Result<ThmNuVerdict, String>,
    pub verdict: bool,
}

/// `components` holds the data of each component of closure(β^d) itself;
/// it is mirrored along with the matrix.
pub fn branched_cover_pipeline(
    w: &BraidWord,
    d: usize,
    base_framing: i64,
    components: &[NuSharpInfo],
) -> Result<PipelineReport> {
    if d == 0 {
        return Err(Error::NonPositiveDegree(0));
    }
    let unknot_check = unknot_necessary_check(w);
    let lk = linking_matrix_of_closure(&w.power(d), base_framing)?;
    let a = lk.matrix;
    if components.len() != a.dim() {
        return Err(Error::ComponentCount { expected: a.dim(), got: components.len() });
    }
    let circulant_blocks = circulant_block_check(&a, a.dim(), 1)?;
    let sicup = verify_sicup(&a);
    let mirrored_matrix = a.negate();
    let mirrored: Vec<NuSharpInfo> = components.iter().map(NuSharpInfo::mirror).collect();
    let thm_nu = thm_nu_applies(&mirrored_matrix, &mirrored).map_err(|e| e.to_string());
    let verdict = unknot_check.passed() && sicup.verdict && thm_nu.as_ref().is_ok_and(|v| v.applies);
    Ok(PipelineReport {
        unknot_check,
        components: a.dim(),
        linking_matrix: a,
        circulant_blocks,
        sicup,
        mirrored_matrix,
        thm_nu,
        verdict,
    })
}
