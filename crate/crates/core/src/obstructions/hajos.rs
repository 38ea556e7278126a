use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use super::verdict::{Inequality, Verdict};
use crate::error::{Error, Result};
use crate::lattice::{BasisMatrix, EchelonBuilder, SquareMatrix};

/// Largest dimension for which the row-order search runs by default.
pub const DEFAULT_PERMUTATION_CAP: usize = 8;

/// A lower-triangular basis with 2 on the diagonal and 0/1 below it, found after
/// reordering coordinates so that row `i` is original coordinate `row_order[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HajosBasis {
    pub basis: SquareMatrix<i64>,
    pub row_order: Vec<usize>,
}

/// Searches coordinate orders for a Hajós basis.
///
/// A Hajós matrix is itself in Hermite normal form, so for a fixed coordinate order the
/// lattice has one exactly when its normal form has every diagonal entry equal to 2. The
/// row-by-row echelon reduction exposes each pivot as soon as its row is placed, which
/// prunes the search over orders. Returns `None` at once when `|det| ≠ 2^n`.
pub fn hajos_basis(b: &BasisMatrix, max_dim: usize) -> Result<Option<HajosBasis>> {
    let n = b.dim();
    if b.index() != BigInt::one() << n {
        return Ok(None);
    }
    if n > max_dim {
        return Err(Error::ResourceLimit {
            required: format!("{n}! row orders"),
            cap: max_dim as u64,
        });
    }
    let mut remaining: Vec<usize> = (0..n).collect();
    let Some(builder) = search(EchelonBuilder::new(b.matrix()), &mut remaining) else {
        return Ok(None);
    };
    let row_order = builder.processed().to_vec();
    let basis = builder.finish()?;
    Ok(Some(HajosBasis { basis, row_order }))
}

fn search(state: EchelonBuilder, remaining: &mut Vec<usize>) -> Option<EchelonBuilder> {
    if remaining.is_empty() {
        return Some(state);
    }
    let two = BigInt::from(2);
    for idx in 0..remaining.len() {
        let r = remaining[idx];
        let mut next = state.clone();
        if next.push_row(r) != two {
            continue;
        }
        remaining.remove(idx);
        let found = search(next, remaining);
        remaining.insert(idx, r);
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Checks the Hajós shape directly: lower triangular, 2 on the diagonal, 0/1 below.
pub fn is_hajos_matrix(m: &SquareMatrix<i64>) -> bool {
    let n = m.dim();
    (0..n).all(|i| {
        (0..n).all(|j| match i.cmp(&j) {
            std::cmp::Ordering::Equal => m[(i, j)] == 2,
            std::cmp::Ordering::Less => m[(i, j)] == 0,
            std::cmp::Ordering::Greater => matches!(m[(i, j)], 0 | 1),
        })
    })
}

/// Determinant gate: `|det B| > 2^n` obstructs; `|det B| = 2^n` is decided by the Hajós
/// search; smaller determinants are inconclusive.
///
/// When `|det B| = 2^n` and no Hajós basis exists the verdict is `Obstructed` with no
/// inequality attached: the lattice is not cubiquitous but no cube has been exhibited.
pub fn det_gate(b: &BasisMatrix, max_dim: usize) -> Result<Verdict> {
    let index = b.det().abs();
    let bound = BigInt::one() << b.dim();
    if index > bound {
        return Ok(Verdict::obstructed(Some(Inequality { lhs: index, rhs: bound })));
    }
    if index < bound {
        return Ok(Verdict::inconclusive());
    }
    Ok(match hajos_basis(b, max_dim)? {
        Some(h) => Verdict { hajos_basis: Some(h.basis), ..Verdict::cubiquitous() },
        None => Verdict::obstructed(None),
    })
}
