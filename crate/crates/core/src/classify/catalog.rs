//! The two exceptional 8×8 blocks among orthogonal subsets with `p_4 = I = n = 8`.
//!
//! Both have pairwise orthogonal columns, exactly four ±1 entries in every row and
//! determinant below `2^8`; neither lattice is cubiquitous.

use crate::lattice::{BasisMatrix, SquareMatrix};

pub const FIRST_BLOCK: [[i64; 8]; 8] = [
    [1, 1, 1, 1, 0, 0, 0, 0],
    [1, -1, -1, -1, 0, 0, 0, 0],
    [0, 1, -1, -1, 1, 0, 0, 0],
    [0, -1, 1, 1, 1, 0, 0, 0],
    [0, 0, 1, -1, 0, 1, 1, 0],
    [0, 0, -1, 1, 0, 1, -1, 0],
    [0, 0, 1, -1, 0, 0, -1, 1],
    [0, 0, -1, 1, 0, 0, 1, 1],
];

pub const SECOND_BLOCK: [[i64; 8]; 8] = [
    [1, 1, 1, 1, 0, 0, 0, 0],
    [1, -1, -1, -1, 0, 0, 0, 0],
    [0, -1, 1, 0, 1, 1, 0, 0],
    [0, 1, -1, 0, 1, -1, 0, 0],
    [0, 1, 0, -1, 0, 1, 1, 0],
    [0, -1, 0, 1, 0, -1, 1, 0],
    [0, 0, -1, 1, 0, 1, 0, 1],
    [0, 0, 1, -1, 0, -1, 0, 1],
];

/// Base point of a unit cube missed by both blocks.
pub const EMPTY_CUBE_BASE: [i64; 8] = [-2, 1, 1, 1, 1, 1, 1, 1];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogBlock {
    pub name: &'static str,
    pub basis: BasisMatrix,
}

fn block(name: &'static str, rows: &[[i64; 8]; 8]) -> CatalogBlock {
    let m = SquareMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).expect("8x8");
    CatalogBlock { name, basis: BasisMatrix::new(m).expect("catalog blocks are nonsingular") }
}

pub fn catalog_blocks() -> (CatalogBlock, CatalogBlock) {
    (block("first", &FIRST_BLOCK), block("second", &SECOND_BLOCK))
}
