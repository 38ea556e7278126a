use super::verdict::{Inequality, Verdict};
use crate::error::{Error, Result};
use crate::subset::Subset;

/// The Wu element `W = Σ v_i` of a subset and the parity classes of its coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WuData {
    /// Coordinates `k_j` of `W`.
    pub w: Vec<i128>,
    /// `R_o`: coordinates with `k_j` odd.
    pub odd: Vec<usize>,
    /// `R_e`: coordinates with `k_j` even and nonzero.
    pub even: Vec<usize>,
    /// `O`: coordinates with `k_j = 0`.
    pub zero: Vec<usize>,
}

impl WuData {
    pub fn norm_squared(&self) -> i128 {
        self.w.iter().map(|k| k * k).sum()
    }
}

pub fn wu_element(s: &Subset) -> WuData {
    let n = s.dim();
    let w: Vec<i128> =
        (0..n).map(|j| s.vectors().iter().map(|v| v[j] as i128).sum()).collect();
    let mut data = WuData { w, odd: Vec::new(), even: Vec::new(), zero: Vec::new() };
    for (j, &k) in data.w.iter().enumerate() {
        if k == 0 {
            data.zero.push(j);
        } else if k % 2 == 0 {
            data.even.push(j);
        } else {
            data.odd.push(j);
        }
    }
    data
}

/// `Σ k_j² > 4n - 3|R_o|`, evaluated without any hypothesis on the subset.
pub fn wu_inequality(s: &Subset) -> Inequality {
    let wu = wu_element(s);
    Inequality::new(wu.norm_squared(), 4 * s.dim() as i128 - 3 * wu.odd.len() as i128)
}

/// Wu obstruction for a non-acute subset: `Obstructed` when the inequality holds,
/// `Inconclusive` otherwise. Never returns `Cubiquitous`.
pub fn wu_obstruction(s: &Subset) -> Result<Verdict> {
    if let Some(why) = s.non_acute_violation() {
        return Err(Error::NotNonAcute(why));
    }
    Ok(verdict_from(wu_inequality(s)))
}

/// The orthogonal form of the obstruction, `I(S) > n - 3|R_o|`. For orthogonal subsets
/// `Σ k_j² = |W|² = Σ a_i`, so this agrees with [`wu_obstruction`].
pub fn wu_obstruction_orthogonal(s: &Subset) -> Result<Verdict> {
    if let Some(why) = s.orthogonality_violation() {
        return Err(Error::NotOrthogonal(why));
    }
    let odd = wu_element(s).odd.len() as i128;
    let excess = s.stats().excess;
    Ok(verdict_from(Inequality::new(excess, s.dim() as i128 - 3 * odd)))
}

fn verdict_from(ineq: Inequality) -> Verdict {
    if ineq.holds() {
        Verdict::obstructed(Some(ineq))
    } else {
        Verdict { inequality: Some(ineq), ..Verdict::inconclusive() }
    }
}
