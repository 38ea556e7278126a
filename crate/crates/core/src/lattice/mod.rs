//! Exact integer linear algebra for full-rank sublattices of `Z^n`.

mod det;
pub mod format;
mod hnf;
mod matrix;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

pub use det::det;
pub use hnf::{hermite_normal_form, hermite_normal_form_with_order, EchelonBuilder, Hnf};
pub use matrix::SquareMatrix;

use crate::error::{Error, Result};

/// Default cap on brute-force work (coset count, or coset count times cube size).
pub const DEFAULT_RESOURCE_CAP: u64 = 1 << 24;

/// Square integer matrix whose columns are a basis of a full-rank sublattice of `Z^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct BasisMatrix {
    m: SquareMatrix<i64>,
}

impl BasisMatrix {
    /// Checks full rank; rejects the empty matrix.
    pub fn new(m: SquareMatrix<i64>) -> Result<Self> {
        if m.dim() == 0 {
            return Err(Error::EmptyBasis);
        }
        if det(&m).is_zero() {
            return Err(Error::Singular);
        }
        Ok(Self { m })
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        Self::new(SquareMatrix::from_rows(rows)?)
    }

    pub fn from_columns(columns: &[Vec<i64>]) -> Result<Self> {
        Self::new(SquareMatrix::from_columns(columns)?)
    }

    pub fn identity(n: usize) -> Self {
        Self { m: SquareMatrix::identity(n) }
    }

    pub fn diagonal(diag: &[i64]) -> Result<Self> {
        Self::new(SquareMatrix::diagonal(diag))
    }

    pub fn dim(&self) -> usize {
        self.m.dim()
    }

    pub fn matrix(&self) -> &SquareMatrix<i64> {
        &self.m
    }

    pub fn into_matrix(self) -> SquareMatrix<i64> {
        self.m
    }

    pub fn columns(&self) -> Vec<Vec<i64>> {
        self.m.columns()
    }

    pub fn det(&self) -> BigInt {
        det(&self.m)
    }

    /// `|det B|`, the index of the lattice in `Z^n`.
    pub fn index(&self) -> BigInt {
        self.det().abs()
    }

    pub fn hnf(&self) -> BasisMatrix {
        Self { m: self.hnf_lattice().into_matrix() }
    }

    /// The normal form packaged for membership queries.
    ///
    /// Panics only if an entry of the normal form overflows `i64`, which requires
    /// `|det B| > i64::MAX`.
    pub fn hnf_lattice(&self) -> Hnf {
        let h = hermite_normal_form(&self.m).expect("full-rank basis has an i64 normal form");
        Hnf::from_normal_form(h)
    }

    pub fn contains(&self, x: &[i64]) -> Result<bool> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), actual: x.len() });
        }
        Ok(self.hnf_lattice().contains(x))
    }

    pub fn coset_reps(&self, cap: u64) -> Result<CosetSystem> {
        CosetSystem::new(self, cap)
    }

    pub fn gram(&self) -> SquareMatrix<i128> {
        gram(&self.columns())
    }

    /// Lattice obtained by reordering coordinates: row `i` of the result is row `order[i]`.
    pub fn permute_rows(&self, order: &[usize]) -> Self {
        Self { m: self.m.permute_rows(order) }
    }

    pub fn negate_row(&self, i: usize) -> Self {
        let mut m = self.m.clone();
        for j in 0..m.dim() {
            m[(i, j)] = -m[(i, j)];
        }
        Self { m }
    }
}

/// Block-diagonal basis of `Λ₁ ⊕ Λ₂`.
pub fn direct_sum(a: &BasisMatrix, b: &BasisMatrix) -> BasisMatrix {
    let (p, q) = (a.dim(), b.dim());
    let mut m = SquareMatrix::zeros(p + q);
    for i in 0..p {
        for j in 0..p {
            m[(i, j)] = a.m[(i, j)];
        }
    }
    for i in 0..q {
        for j in 0..q {
            m[(p + i, p + j)] = b.m[(i, j)];
        }
    }
    BasisMatrix { m }
}

/// Gram matrix `⟨v_i, v_j⟩` of a list of vectors.
pub fn gram(vectors: &[Vec<i64>]) -> SquareMatrix<i128> {
    let k = vectors.len();
    let mut g = SquareMatrix::zeros(k);
    for i in 0..k {
        for j in i..k {
            let d = dot(&vectors[i], &vectors[j]);
            g[(i, j)] = d;
            g[(j, i)] = d;
        }
    }
    g
}

pub fn dot(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

/// A complete set of coset representatives for `Z^n / Λ`, taken from the box
/// `∏ [0, H_ii)` where `H` is the Hermite normal form.
#[derive(Clone, Debug)]
pub struct CosetSystem {
    hnf: Hnf,
    radices: Vec<i64>,
    order: u64,
}

impl CosetSystem {
    pub fn new(basis: &BasisMatrix, cap: u64) -> Result<Self> {
        let index = basis.index();
        if index > BigInt::from(cap) {
            return Err(Error::ResourceLimit { required: index.to_string(), cap });
        }
        let hnf = basis.hnf_lattice();
        let radices = hnf.diagonal();
        let order = index.to_u64().expect("bounded by cap");
        Ok(Self { hnf, radices, order })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn hnf(&self) -> &Hnf {
        &self.hnf
    }

    /// The `idx`-th representative in lexicographic order (first coordinate most
    /// significant).
    pub fn rep(&self, idx: u64) -> Vec<i64> {
        let mut out = vec![0; self.radices.len()];
        let mut rest = idx;
        for (slot, &r) in out.iter_mut().zip(&self.radices).rev() {
            let r = r as u64;
            *slot = (rest % r) as i64;
            rest /= r;
        }
        out
    }

    pub fn reps(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        (0..self.order).map(move |i| self.rep(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_singular_and_empty() {
        assert_eq!(BasisMatrix::from_rows(vec![vec![1, 1], vec![1, 1]]), Err(Error::Singular));
        assert_eq!(BasisMatrix::from_rows(vec![]), Err(Error::EmptyBasis));
    }

    #[test]
    fn membership_dimension_mismatch() {
        let b = BasisMatrix::diagonal(&[2, 2]).unwrap();
        assert!(b.contains(&[2, -4]).unwrap());
        assert!(!b.contains(&[1, 0]).unwrap());
        assert_eq!(b.contains(&[1]), Err(Error::DimensionMismatch { expected: 2, actual: 1 }));
    }

    #[test]
    fn coset_examples() {
        let reps: Vec<_> = BasisMatrix::diagonal(&[2, 2]).unwrap().coset_reps(16).unwrap().reps().collect();
        assert_eq!(reps, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        let reps: Vec<_> = BasisMatrix::identity(1).coset_reps(16).unwrap().reps().collect();
        assert_eq!(reps, vec![vec![0]]);
    }

    #[test]
    fn coset_cap() {
        let b = BasisMatrix::diagonal(&[5, 5]).unwrap();
        assert!(matches!(b.coset_reps(24), Err(Error::ResourceLimit { .. })));
        assert_eq!(b.coset_reps(25).unwrap().order(), 25);
    }

    #[test]
    fn direct_sum_and_gram() {
        let s = direct_sum(&BasisMatrix::identity(1), &BasisMatrix::diagonal(&[2]).unwrap());
        assert_eq!(s, BasisMatrix::diagonal(&[1, 2]).unwrap());
        let g = gram(&[vec![1, 1], vec![1, -1]]);
        assert_eq!(g.rows(), vec![vec![2, 0], vec![0, 2]]);
        assert_eq!(gram(&[vec![2]]).rows(), vec![vec![4]]);
    }
}
