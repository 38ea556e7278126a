//! Column-style Hermite normal form.
//!
//! The normal form of a full-rank basis `B` is the unique lower-triangular matrix `H`
//! generating the same lattice with `H[i][i] > 0` and `0 <= H[i][j] < H[i][i]` for `j < i`.
//! Only unimodular column operations are used, so the lattice never changes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::matrix::SquareMatrix;
use crate::error::{Error, Result};

/// Row-at-a-time column echelon reduction.
///
/// Rows can be fed in any order; the pivot of each new row is available immediately,
/// which lets a caller prune a search over row orders after a single step.
#[derive(Clone, Debug)]
pub struct EchelonBuilder {
    cols: Vec<Vec<BigInt>>,
    order: Vec<usize>,
}

impl EchelonBuilder {
    pub fn new(basis: &SquareMatrix<i64>) -> Self {
        let cols = basis
            .columns()
            .into_iter()
            .map(|c| c.into_iter().map(BigInt::from).collect())
            .collect();
        Self { cols, order: Vec::with_capacity(basis.dim()) }
    }

    pub fn processed(&self) -> &[usize] {
        &self.order
    }

    /// Eliminates row `r` against the columns that do not yet carry a pivot and
    /// returns the new (positive) pivot, or zero if the row is already dependent.
    pub fn push_row(&mut self, r: usize) -> BigInt {
        let k = self.order.len();
        let n = self.cols.len();
        for j in k + 1..n {
            if self.cols[j][r].is_zero() {
                continue;
            }
            let a = self.cols[k][r].clone();
            let b = self.cols[j][r].clone();
            let egcd = a.extended_gcd(&b);
            let (g, s, t) = (egcd.gcd, egcd.x, egcd.y);
            let (a_g, b_g) = (&a / &g, &b / &g);
            for i in 0..n {
                let ck = &self.cols[k][i];
                let cj = &self.cols[j][i];
                let new_k = &s * ck + &t * cj;
                let new_j = &a_g * cj - &b_g * ck;
                self.cols[k][i] = new_k;
                self.cols[j][i] = new_j;
            }
        }
        if self.cols[k][r].is_negative() {
            for x in self.cols[k].iter_mut() {
                *x = -&*x;
            }
        }
        self.order.push(r);
        self.cols[k][r].clone()
    }

    /// Reduces the off-diagonal entries and returns the normal form with rows listed in
    /// the order they were pushed.
    pub fn finish(mut self) -> Result<SquareMatrix<i64>> {
        let n = self.cols.len();
        assert_eq!(self.order.len(), n, "all rows must be pushed before finishing");
        for i in 0..n {
            let r = self.order[i];
            let pivot = self.cols[i][r].clone();
            if pivot.is_zero() {
                return Err(Error::Singular);
            }
            for j in 0..i {
                let q = self.cols[j][r].div_floor(&pivot);
                if q.is_zero() {
                    continue;
                }
                for row in 0..n {
                    let delta = &q * &self.cols[i][row];
                    self.cols[j][row] -= delta;
                }
            }
        }
        let mut out = SquareMatrix::zeros(n);
        for (i, &r) in self.order.iter().enumerate() {
            for j in 0..n {
                out[(i, j)] = self.cols[j][r].to_i64().ok_or(Error::Overflow)?;
            }
        }
        Ok(out)
    }
}

/// Hermite normal form of a full-rank basis, rows in their original order.
pub fn hermite_normal_form(basis: &SquareMatrix<i64>) -> Result<SquareMatrix<i64>> {
    hermite_normal_form_with_order(basis, &(0..basis.dim()).collect::<Vec<_>>())
}

/// Hermite normal form of the basis after permuting its rows by `order`.
pub fn hermite_normal_form_with_order(
    basis: &SquareMatrix<i64>,
    order: &[usize],
) -> Result<SquareMatrix<i64>> {
    let mut b = EchelonBuilder::new(basis);
    for &r in order {
        if b.push_row(r).is_zero() {
            return Err(Error::Singular);
        }
    }
    b.finish()
}

/// A lattice given by its Hermite normal form; supports exact membership and coset
/// reduction by forward substitution.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hnf {
    h: SquareMatrix<i64>,
}

impl Hnf {
    /// Wraps a matrix that is already in normal form.
    pub(crate) fn from_normal_form(h: SquareMatrix<i64>) -> Self {
        Self { h }
    }

    pub fn matrix(&self) -> &SquareMatrix<i64> {
        &self.h
    }

    pub fn into_matrix(self) -> SquareMatrix<i64> {
        self.h
    }

    pub fn dim(&self) -> usize {
        self.h.dim()
    }

    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.h.dim()).map(|i| self.h[(i, i)]).collect()
    }

    /// Whether `x` lies in the lattice. The caller guarantees `x.len() == dim`.
    pub fn contains(&self, x: &[i64]) -> bool {
        match self.contains_i128(x) {
            Some(b) => b,
            None => self.contains_big(x),
        }
    }

    fn contains_i128(&self, x: &[i64]) -> Option<bool> {
        let n = self.h.dim();
        let mut rem: Vec<i128> = x.iter().map(|&v| v as i128).collect();
        for i in 0..n {
            let d = self.h[(i, i)] as i128;
            if rem[i] % d != 0 {
                return Some(false);
            }
            let q = rem[i] / d;
            if q == 0 {
                continue;
            }
            for (k, r) in rem.iter_mut().enumerate().skip(i + 1) {
                *r = r.checked_sub((self.h[(k, i)] as i128).checked_mul(q)?)?;
            }
        }
        Some(true)
    }

    fn contains_big(&self, x: &[i64]) -> bool {
        let n = self.h.dim();
        let mut rem: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
        for i in 0..n {
            let d = BigInt::from(self.h[(i, i)]);
            let (q, r) = rem[i].div_rem(&d);
            if !r.is_zero() {
                return false;
            }
            for (k, r) in rem.iter_mut().enumerate().skip(i + 1) {
                *r -= &q * self.h[(k, i)];
            }
        }
        true
    }

    /// Canonical coset representative of `x`: the unique `y ≡ x` (mod lattice)
    /// with `0 <= y[i] < H[i][i]`.
    pub fn reduce(&self, x: &[i64]) -> Vec<i64> {
        let n = self.h.dim();
        let mut rem: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
        for i in 0..n {
            let d = BigInt::from(self.h[(i, i)]);
            let q = rem[i].div_floor(&d);
            for (k, r) in rem.iter_mut().enumerate().skip(i) {
                *r -= &q * self.h[(k, i)];
            }
        }
        rem.iter().map(|v| v.to_i64().expect("reduced entries are below the diagonal")).collect()
    }
}
