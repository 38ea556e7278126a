//! Cubiquity obstructions, the Hajós/determinant criteria and the brute-force oracle.

mod bruteforce;
mod hajos;
mod verdict;
mod wu;

pub use bruteforce::{bruteforce_cost, cube_hits_lattice, cube_lattice_points, is_cubiquitous_bruteforce};
pub use hajos::{det_gate, hajos_basis, is_hajos_matrix, HajosBasis, DEFAULT_PERMUTATION_CAP};
pub use verdict::{Inequality, Status, Verdict};
pub use wu::{wu_element, wu_inequality, wu_obstruction, wu_obstruction_orthogonal, WuData};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice::{BasisMatrix, DEFAULT_RESOURCE_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum `|det B| · 2^n` for the brute-force oracle.
    pub resource_cap: u64,
    /// Maximum dimension for the Hajós row-order search.
    pub permutation_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self { resource_cap: DEFAULT_RESOURCE_CAP, permutation_cap: DEFAULT_PERMUTATION_CAP }
    }
}

/// Full decision pipeline: the determinant gate, then the brute-force oracle whenever it
/// is affordable and the gate has not already produced a Hajós basis.
///
/// An obstruction from the gate is upgraded to `NotCubiquitous` with an explicit witness
/// cube when the oracle fits under the cap; the gate's inequality is kept alongside.
pub fn check(b: &BasisMatrix, limits: Limits) -> Result<Verdict> {
    let gate = match det_gate(b, limits.permutation_cap) {
        Ok(v) => v,
        Err(Error::ResourceLimit { .. }) => Verdict::inconclusive(),
        Err(e) => return Err(e),
    };
    if gate.status == Status::Cubiquitous {
        return Ok(gate);
    }
    if bruteforce_cost(b) > BigInt::from(limits.resource_cap) {
        return Ok(gate);
    }
    let mut verdict = is_cubiquitous_bruteforce(b, limits.resource_cap)?;
    if verdict.status == Status::NotCubiquitous {
        verdict.inequality = gate.inequality;
    }
    Ok(verdict)
}
