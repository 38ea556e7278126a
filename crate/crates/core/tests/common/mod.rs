#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cubiq_core::lattice::det;
use cubiq_core::{BasisMatrix, SquareMatrix};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Membership by Cramer's rule: `y = Bx` has an integral solution iff `det B` divides
/// every `det B_i(y)`.
pub fn member_by_cramer(b: &BasisMatrix, y: &[i64]) -> bool {
    let d = b.det();
    let cols = b.columns();
    (0..b.dim()).all(|i| {
        let mut replaced = cols.clone();
        replaced[i] = y.to_vec();
        let m = SquareMatrix::from_columns(&replaced).unwrap();
        det(&m).is_multiple_of(&d)
    })
}

/// Cubiquity straight from the definition. `|det| Z^n ⊆ Λ`, so it suffices to try base
/// points in `[0, |det|)^n`.
pub fn naive_cubiquitous(b: &BasisMatrix) -> bool {
    let n = b.dim();
    let d: i64 = b.index().try_into().unwrap();
    let mut x = vec![0i64; n];
    loop {
        let hit = (0..1u32 << n).any(|mask| {
            let y: Vec<i64> = (0..n).map(|k| x[k] + ((mask >> k) & 1) as i64).collect();
            member_by_cramer(b, &y)
        });
        if !hit {
            return false;
        }
        let mut k = 0;
        loop {
            if k == n {
                return true;
            }
            x[k] += 1;
            if x[k] < d {
                break;
            }
            x[k] = 0;
            k += 1;
        }
    }
}

/// All lower-triangular normal forms of dimension `n` and determinant `d`: diagonal
/// entries multiply to `d`, entries left of the diagonal lie in `[0, H_ii)`.
pub fn hnfs(n: usize, d: i64) -> Vec<BasisMatrix> {
    let mut out = Vec::new();
    for diag in factorizations(n, d) {
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..i).map(move |j| (i, j))).collect();
        let mut vals = vec![0i64; slots.len()];
        loop {
            let mut m = SquareMatrix::<i64>::diagonal(&diag);
            for (&(i, j), &v) in slots.iter().zip(&vals) {
                m[(i, j)] = v;
            }
            out.push(BasisMatrix::new(m).unwrap());
            let mut k = 0;
            loop {
                if k == slots.len() {
                    break;
                }
                vals[k] += 1;
                if vals[k] < diag[slots[k].0] {
                    break;
                }
                vals[k] = 0;
                k += 1;
            }
            if k == slots.len() {
                break;
            }
        }
    }
    out
}

/// Ordered factorizations of `d` into `n` positive factors.
pub fn factorizations(n: usize, d: i64) -> Vec<Vec<i64>> {
    if n == 0 {
        return if d == 1 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for f in (1..=d).filter(|f| d % f == 0) {
        for mut rest in factorizations(n - 1, d / f) {
            rest.insert(0, f);
            out.push(rest);
        }
    }
    out
}

/// `B U` for a random unimodular `U`, built from column additions and swaps.
pub fn random_basis_change(b: &BasisMatrix, rng: &mut impl Rng, ops: usize) -> BasisMatrix {
    let n = b.dim();
    let mut cols = b.columns();
    for _ in 0..ops {
        if n < 2 {
            break;
        }
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        match rng.gen_range(0..3) {
            0 => cols.swap(i, j),
            1 => cols[i] = cols[i].iter().map(|x| -x).collect(),
            _ => {
                let c: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
                let add: Vec<i64> = cols[j].iter().map(|x| c * x).collect();
                for (a, b) in cols[i].iter_mut().zip(add) {
                    *a += b;
                }
            }
        }
        if cols.iter().flatten().any(|x| x.abs() > 1 << 20) {
            cols = b.columns();
        }
    }
    BasisMatrix::from_columns(&cols).unwrap()
}

/// A random signed permutation of coordinates.
pub fn random_signed_permutation(n: usize, rng: &mut impl Rng) -> (Vec<usize>, Vec<bool>) {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let flips = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    (order, flips)
}

pub fn apply_signed_permutation(b: &BasisMatrix, order: &[usize], flips: &[bool]) -> BasisMatrix {
    let mut out = b.permute_rows(order);
    for (i, &f) in flips.iter().enumerate() {
        if f {
            out = out.negate_row(i);
        }
    }
    out
}

pub fn apply_to_vector(v: &[i64], order: &[usize], flips: &[bool]) -> Vec<i64> {
    order.iter().zip(flips).map(|(&o, &f)| if f { -v[o] } else { v[o] }).collect()
}

pub fn is_zero(v: &BigInt) -> bool {
    v.is_zero()
}

/// Prints one result line; the caller asserts on the returned flag.
pub fn report(id: u32, name: &str, pass: bool, detail: impl AsRef<str>) -> bool {
    let tag = if pass { "PASS" } else { "FAIL" };
    println!("[{tag}] criterion {id}: {name} -- {}", detail.as_ref());
    pass
}
