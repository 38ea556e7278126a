//! Ordered vector subsets `S = {v_1, ..., v_n} ⊂ Z^n` and their incidence statistics.
//!
//! Indices are zero-based throughout the library. For a subset, `E_j` is the set of
//! vectors with a nonzero `j`-th coordinate, `V_i` the support of `v_i`, `P_k` the set of
//! coordinates hit by exactly `k` vectors, and `I(S) = Σ (|v_i|² - 3)`.

use crate::error::{Error, Result};
use crate::lattice::{dot, gram, BasisMatrix, SquareMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subset {
    vectors: Vec<Vec<i64>>,
}

impl Subset {
    /// `n` vectors, each of dimension `n`. The empty subset is allowed.
    pub fn new(vectors: Vec<Vec<i64>>) -> Result<Self> {
        let n = vectors.len();
        if let Some(v) = vectors.iter().find(|v| v.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, actual: v.len() });
        }
        Ok(Self { vectors })
    }

    pub fn empty() -> Self {
        Self { vectors: Vec::new() }
    }

    /// The columns of a matrix, in order.
    pub fn from_matrix(m: &SquareMatrix<i64>) -> Self {
        Self { vectors: m.columns() }
    }

    pub fn to_matrix(&self) -> SquareMatrix<i64> {
        SquareMatrix::from_columns(&self.vectors).expect("square by construction")
    }

    /// Fails if the vectors are dependent or the subset is empty.
    pub fn to_basis(&self) -> Result<BasisMatrix> {
        BasisMatrix::new(self.to_matrix())
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<i64>] {
        &self.vectors
    }

    pub fn vector(&self, i: usize) -> &[i64] {
        &self.vectors[i]
    }

    pub fn norms(&self) -> Vec<i128> {
        self.vectors.iter().map(|v| dot(v, v)).collect()
    }

    pub fn gram(&self) -> SquareMatrix<i128> {
        gram(&self.vectors)
    }

    /// Vector `i` of the result is vector `order[i]` of `self`.
    pub fn reorder(&self, order: &[usize]) -> Self {
        Self { vectors: order.iter().map(|&i| self.vectors[i].clone()).collect() }
    }

    pub fn negate(&self, i: usize) -> Self {
        let mut vectors = self.vectors.clone();
        vectors[i].iter_mut().for_each(|x| *x = -*x);
        Self { vectors }
    }

    pub fn stats(&self) -> SubsetStats {
        SubsetStats::compute(self)
    }

    pub fn is_orthogonal(&self) -> bool {
        self.orthogonality_violation().is_none()
    }

    pub(crate) fn orthogonality_violation(&self) -> Option<String> {
        let g = self.gram();
        let n = self.dim();
        for i in 0..n {
            if g[(i, i)] < 1 {
                return Some(format!("vector {} is zero", i + 1));
            }
            for j in i + 1..n {
                if g[(i, j)] != 0 {
                    return Some(format!("<v{}, v{}> = {}", i + 1, j + 1, g[(i, j)]));
                }
            }
        }
        None
    }

    pub fn is_non_acute(&self) -> bool {
        self.non_acute_violation().is_none()
    }

    pub(crate) fn non_acute_violation(&self) -> Option<String> {
        let g = self.gram();
        let n = self.dim();
        for i in 0..n {
            if g[(i, i)] < 1 {
                return Some(format!("vector {} is zero", i + 1));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if g[(i, j)] > 0 {
                    return Some(format!("<v{}, v{}> = {} > 0", i + 1, j + 1, g[(i, j)]));
                }
            }
        }
        for i in 0..n {
            let off: i128 = (0..n).filter(|&j| j != i).map(|j| g[(i, j)]).sum();
            if g[(i, i)] < -off {
                return Some(format!("|v{}|^2 = {} < {}", i + 1, g[(i, i)], -off));
            }
        }
        None
    }
}

/// Incidence statistics of a subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetStats {
    /// `e[j]`: vectors with a nonzero `j`-th coordinate.
    pub e: Vec<Vec<usize>>,
    /// `v[i]`: coordinates in the support of vector `i`.
    pub v: Vec<Vec<usize>>,
    /// `p_classes[k]`: coordinates `j` with `|E_j| = k`, for `k` in `0..=n`.
    pub p_classes: Vec<Vec<usize>>,
    /// `q_classes[k] ⊆ p_classes[k]`: those coordinates where some vector has an entry of
    /// absolute value at least 2.
    pub q_classes: Vec<Vec<usize>>,
    pub norms: Vec<i128>,
    pub excess: i128,
    identity: IdentityCheck,
}

impl SubsetStats {
    fn compute(s: &Subset) -> Self {
        let n = s.dim();
        let vecs = s.vectors();
        let e: Vec<Vec<usize>> =
            (0..n).map(|j| (0..n).filter(|&i| vecs[i][j] != 0).collect()).collect();
        let v: Vec<Vec<usize>> =
            (0..n).map(|i| (0..n).filter(|&j| vecs[i][j] != 0).collect()).collect();

        let mut p_classes = vec![Vec::new(); n + 1];
        let mut q_classes = vec![Vec::new(); n + 1];
        for (j, ej) in e.iter().enumerate() {
            p_classes[ej.len()].push(j);
            if ej.iter().any(|&u| vecs[u][j].abs() >= 2) {
                q_classes[ej.len()].push(j);
            }
        }

        let norms = s.norms();
        let excess = norms.iter().sum::<i128>() - 3 * n as i128;

        let p = |k: usize| p_classes.get(k).map_or(0, Vec::len) as i128;
        let lhs = 2 * p(1) + p(2) + excess;
        let high: i128 = (4..=n).map(|k| (k as i128 - 3) * p(k)).sum();
        let entries: i128 = vecs
            .iter()
            .flatten()
            .filter(|&&x| x != 0)
            .map(|&x| x as i128 * x as i128 - 1)
            .sum();
        let identity = IdentityCheck { lhs, rhs: high + entries, zero_coordinates: p(0) };

        Self { e, v, p_classes, q_classes, norms, excess, identity }
    }

    pub fn dim(&self) -> usize {
        self.e.len()
    }

    /// `p_k(S)`; zero for `k > n`.
    pub fn p(&self, k: usize) -> usize {
        self.p_classes.get(k).map_or(0, Vec::len)
    }

    pub fn p_counts(&self) -> Vec<usize> {
        self.p_classes.iter().map(Vec::len).collect()
    }

    pub fn identity(&self) -> IdentityCheck {
        self.identity
    }
}

/// Both sides of `2p_1 + p_2 + I = Σ_{k≥4} (k-3) p_k + Σ_{entries ≠ 0} (x² - 1)`.
///
/// The relation assumes every coordinate is touched by some vector. In general the two
/// sides differ by exactly `3 p_0`, so [`IdentityCheck::holds`] tests the corrected form
/// `lhs + 3 p_0 = rhs`, which reduces to the plain one when `p_0 = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: i128,
    pub rhs: i128,
    pub zero_coordinates: i128,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs + 3 * self.zero_coordinates == self.rhs
    }

    /// The uncorrected relation `lhs == rhs`.
    pub fn holds_as_stated(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn check_identity(s: &Subset) -> bool {
    s.stats().identity().holds()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sub(v: &[&[i64]]) -> Subset {
        Subset::new(v.iter().map(|x| x.to_vec()).collect()).unwrap()
    }

    #[test]
    fn hyperbolic_pair() {
        let st = sub(&[&[1, 1], &[1, -1]]).stats();
        assert_eq!(st.p_counts(), vec![0, 0, 2]);
        assert_eq!(st.excess, -2);
        assert_eq!(st.e, vec![vec![0, 1], vec![0, 1]]);
        let id = st.identity();
        assert_eq!((id.lhs, id.rhs), (0, 0));
        assert!(id.holds_as_stated());
    }

    #[test]
    fn single_vector() {
        let st = sub(&[&[3]]).stats();
        assert_eq!(st.p(1), 1);
        assert_eq!(st.excess, 6);
        assert_eq!(st.q_classes[1], vec![0]);
        let id = st.identity();
        assert_eq!((id.lhs, id.rhs), (8, 8));
    }

    #[test]
    fn zero_coordinate_shifts_identity_by_three() {
        let st = sub(&[&[1, 0], &[1, 0]]).stats();
        let id = st.identity();
        assert_eq!(id.zero_coordinates, 1);
        assert_eq!(id.rhs - id.lhs, 3);
        assert!(id.holds());
        assert!(!id.holds_as_stated());
    }

    #[test]
    fn orthogonality() {
        assert!(sub(&[&[1, 1], &[1, -1]]).is_orthogonal());
        assert!(!sub(&[&[1, 1, 0], &[0, 1, 1], &[-1, 0, 1]]).is_orthogonal());
        assert!(!sub(&[&[1, 0], &[0, 0]]).is_orthogonal());
    }

    #[test]
    fn non_acuteness() {
        assert!(sub(&[&[1, 1], &[1, -1]]).is_non_acute());
        assert!(sub(&[&[1, 1, 0], &[0, -1, 3], &[-1, 1, 0]]).is_non_acute());
        let g = sub(&[&[1, 1, 0], &[0, -1, 3], &[-1, 1, 0]]).gram();
        assert_eq!(g.rows(), vec![vec![2, -1, 0], vec![-1, 10, -1], vec![0, -1, 2]]);
        assert!(!sub(&[&[1, 1, 0], &[1, 0, 1], &[0, 0, 1]]).is_non_acute());
        // pairwise obtuse but the norm is dominated by the row sum
        assert!(!sub(&[&[1, 0, 0], &[-1, 1, 0], &[-1, -1, 1]]).is_non_acute());
    }

    #[test]
    fn reorder_and_negate() {
        let s = sub(&[&[1, 2], &[3, 4]]);
        assert_eq!(s.reorder(&[1, 0]).vectors(), &[vec![3, 4], vec![1, 2]]);
        assert_eq!(s.negate(1).vectors(), &[vec![1, 2], vec![-3, -4]]);
    }

    fn arb_subset() -> impl Strategy<Value = Subset> {
        (1usize..=6).prop_flat_map(|n| {
            prop::collection::vec(prop::collection::vec(-3i64..=3, n), n)
                .prop_map(|v| Subset::new(v).unwrap())
        })
    }

    proptest! {
        #[test]
        fn counts_are_consistent(s in arb_subset()) {
            let st = s.stats();
            prop_assert_eq!(st.p_counts().iter().sum::<usize>(), s.dim());
            let e_total: usize = st.e.iter().map(Vec::len).sum();
            let v_total: usize = st.v.iter().map(Vec::len).sum();
            prop_assert_eq!(e_total, v_total);
            for (k, q) in st.q_classes.iter().enumerate() {
                prop_assert!(q.iter().all(|j| st.p_classes[k].contains(j)));
            }
            prop_assert!(st.identity().holds());
        }

        #[test]
        fn orthogonal_implies_non_acute(s in arb_subset()) {
            if s.is_orthogonal() {
                prop_assert!(s.is_non_acute());
            }
        }
    }
}
