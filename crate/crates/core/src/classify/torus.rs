//! Connected sums of same-sign torus links `T(2, k_1) # ... # T(2, k_n)`.
//!
//! The lattice of such a sum has the diagonal Gram matrix `diag(|k_1|, ..., |k_n|)`. Its
//! double branched cover bounds a rational homology ball exactly when every `|k_i|` is
//! 1, 2 or 4 and the number of `|k_i| = 2` is even. The rule is applied to magnitudes;
//! the parameters only have to share a sign.

use crate::error::{Error, Result};
use crate::lattice::dot;
use crate::subset::Subset;

pub fn torus_sum_bounds_qball(ks: &[i64]) -> Result<bool> {
    if let Some(pos) = ks.iter().position(|&k| k == 0) {
        return Err(Error::ZeroParameter(pos));
    }
    if ks.iter().any(|&k| k > 0) && ks.iter().any(|&k| k < 0) {
        return Err(Error::MixedSigns);
    }
    let allowed = ks.iter().all(|k| matches!(k.unsigned_abs(), 1 | 2 | 4));
    let twos = ks.iter().filter(|k| k.unsigned_abs() == 2).count();
    Ok(allowed && twos % 2 == 0)
}

/// All vectors of `Z^dim` with the given squared norm, in lexicographic order.
fn vectors_of_norm(dim: usize, norm: i64) -> Vec<Vec<i64>> {
    let r = (norm as f64).sqrt() as i64 + 1;
    let mut out = Vec::new();
    let mut cur = vec![-r; dim];
    loop {
        if dot(&cur, &cur) == norm as i128 {
            out.push(cur.clone());
        }
        let mut k = dim;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < r {
                cur[k] += 1;
                break;
            }
            cur[k] = -r;
        }
    }
}

/// Every ordered orthogonal subset of `Z^n`, `n = norms.len()`, whose `i`-th vector has
/// squared norm `norms[i]`: the embeddings of the lattice with Gram matrix `diag(norms)`.
pub fn orthogonal_realizations(norms: &[i64]) -> Vec<Subset> {
    let n = norms.len();
    let pools: Vec<Vec<Vec<i64>>> = norms.iter().map(|&a| vectors_of_norm(n, a)).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<Vec<i64>> = Vec::with_capacity(n);
    extend(&pools, &mut chosen, &mut out);
    out
}

fn extend(pools: &[Vec<Vec<i64>>], chosen: &mut Vec<Vec<i64>>, out: &mut Vec<Subset>) {
    let k = chosen.len();
    if k == pools.len() {
        out.push(Subset::new(chosen.clone()).expect("square"));
        return;
    }
    for v in &pools[k] {
        if chosen.iter().all(|w| dot(v, w) == 0) {
            chosen.push(v.clone());
            extend(pools, chosen, out);
            chosen.pop();
        }
    }
}
