use num_bigint::BigInt;
use rayon::prelude::*;

use super::verdict::Verdict;
use crate::error::{Error, Result};
use crate::lattice::{BasisMatrix, CosetSystem, Hnf};

// Below this many cosets a sequential scan beats spinning up the pool.
const PARALLEL_THRESHOLD: u64 = 1 << 12;

/// Work estimate `|det B| · 2^n` used for the resource cap.
pub fn bruteforce_cost(b: &BasisMatrix) -> BigInt {
    b.index() << b.dim()
}

/// Whether some vertex of `base + {0,1}^n` lies in the lattice.
pub fn cube_hits_lattice(hnf: &Hnf, base: &[i64]) -> bool {
    let n = base.len();
    let mut y = base.to_vec();
    (0u64..1 << n).any(|mask| {
        for (j, slot) in y.iter_mut().enumerate() {
            *slot = base[j] + ((mask >> (n - 1 - j)) & 1) as i64;
        }
        hnf.contains(&y)
    })
}

/// All lattice points of the cube `base + {0,1}^n`, in lexicographic order of the offset.
pub fn cube_lattice_points(b: &BasisMatrix, base: &[i64]) -> Result<Vec<Vec<i64>>> {
    let n = b.dim();
    if base.len() != n {
        return Err(Error::DimensionMismatch { expected: n, actual: base.len() });
    }
    let hnf = b.hnf_lattice();
    Ok((0u64..1 << n)
        .map(|mask| (0..n).map(|j| base[j] + ((mask >> (n - 1 - j)) & 1) as i64).collect::<Vec<_>>())
        .filter(|y| hnf.contains(y))
        .collect())
}

/// Decides cubiquity by checking one cube per coset of `Z^n / Λ`.
///
/// Translating by a lattice vector maps cubes meeting `Λ` to cubes meeting `Λ`, so it is
/// enough to test the cubes based at the coset representatives. The witness, if any, is
/// the first failing representative in lexicographic order of the HNF box, independent
/// of how the scan is scheduled.
pub fn is_cubiquitous_bruteforce(b: &BasisMatrix, cap: u64) -> Result<Verdict> {
    let cost = bruteforce_cost(b);
    if b.dim() >= 64 || cost > BigInt::from(cap) {
        return Err(Error::ResourceLimit { required: cost.to_string(), cap });
    }
    let cosets = CosetSystem::new(b, cap)?;
    let hnf = cosets.hnf();
    let misses = |i: &u64| !cube_hits_lattice(hnf, &cosets.rep(*i));

    let first = if cosets.order() < PARALLEL_THRESHOLD {
        (0..cosets.order()).find(misses)
    } else {
        (0..cosets.order()).into_par_iter().find_first(misses)
    };
    Ok(match first {
        None => Verdict::cubiquitous(),
        Some(i) => Verdict::not_cubiquitous(Some(cosets.rep(i))),
    })
}
