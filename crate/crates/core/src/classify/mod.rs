//! Classification of orthogonal sublattices and the supporting determinant computations.
//!
//! An orthogonal sublattice is cubiquitous exactly when, up to signed permutations of
//! coordinates, it splits into blocks `[1]`, `[2]` and `[[1, -1], [1, 1]]`.

mod catalog;
mod decompose;
mod det4;
mod torus;

pub use catalog::{catalog_blocks, CatalogBlock, EMPTY_CUBE_BASE, FIRST_BLOCK, SECOND_BLOCK};
pub use decompose::{decompose, Block, BlockDecomposition, BlockKind};
pub use det4::{det4_formula, det4_matrix, det4_zero_solutions, DEFAULT_SOLUTION_BOUND};
pub use torus::{orthogonal_realizations, torus_sum_bounds_qball};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::obstructions::{is_cubiquitous_bruteforce, Limits, Status, Verdict};
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub decomposition: BlockDecomposition,
    pub verdict: Verdict,
    /// Index into `decomposition.blocks` of the first block not of a cubiquitous form.
    pub offending_block: Option<usize>,
}

/// Decides cubiquity of an orthogonal subset from its block decomposition.
///
/// For a negative answer the offending block is reported; when the brute-force oracle on
/// that block alone fits under `limits`, its empty cube is lifted to a witness for the
/// whole lattice (zero on the other coordinates).
pub fn classify_orthogonal(s: &Subset, limits: Limits) -> Result<Classification> {
    if let Some(why) = s.orthogonality_violation() {
        return Err(Error::NotOrthogonal(why));
    }
    let decomposition = decompose(s);
    let offending_block = decomposition.blocks.iter().position(|b| !b.kind.is_cubiquitous_form());
    let verdict = match offending_block {
        None => Verdict::cubiquitous(),
        Some(i) => Verdict::not_cubiquitous(block_witness(s, &decomposition.blocks[i], limits)),
    };
    Ok(Classification { decomposition, verdict, offending_block })
}

fn block_witness(s: &Subset, block: &Block, limits: Limits) -> Option<Vec<i64>> {
    let basis = block.basis(s)?;
    let local = is_cubiquitous_bruteforce(&basis, limits.resource_cap).ok()?;
    if local.status != Status::NotCubiquitous {
        return None;
    }
    let mut x = vec![0; s.dim()];
    for (k, &c) in block.coords.iter().enumerate() {
        x[c] = local.witness.as_ref()?[k];
    }
    Some(x)
}
