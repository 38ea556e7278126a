use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::SquareMatrix;

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Every division performed is exact, so all intermediate values stay integral and are
/// bounded by minors of the input.
pub fn det(m: &SquareMatrix<i64>) -> BigInt {
    let n = m.dim();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> =
        (0..n).map(|i| m.row(i).iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut sign = 1i32;
    let mut prev = BigInt::one();

    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }

    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cofactor(m: &[Vec<i64>]) -> i128 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] as i128 * cofactor(&minor)
            })
            .sum()
    }

    #[test]
    fn small_cases() {
        assert_eq!(det(&SquareMatrix::identity(2)), BigInt::from(1));
        assert_eq!(det(&SquareMatrix::diagonal(&[2, 2])), BigInt::from(4));
        assert_eq!(det(&SquareMatrix::zeros(3)), BigInt::from(0));
        let swap = SquareMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(det(&swap), BigInt::from(-1));
    }

    #[test]
    fn needs_pivoting() {
        let m = SquareMatrix::from_rows(vec![vec![0, 2, 1], vec![0, 1, 5], vec![3, 0, 0]]).unwrap();
        assert_eq!(det(&m), BigInt::from(cofactor(&m.rows())));
    }

    #[test]
    fn exceeds_64_bits() {
        let big = 1i64 << 40;
        let m = SquareMatrix::diagonal(&[big, big, 3]);
        assert_eq!(det(&m), BigInt::from(big) * BigInt::from(big) * 3);
    }

    proptest::proptest! {
        #[test]
        fn matches_cofactor_expansion(n in 1usize..=5, seed in proptest::collection::vec(-6i64..=6, 25)) {
            let rows: Vec<Vec<i64>> = (0..n).map(|i| seed[i * n..i * n + n].to_vec()).collect();
            let m = SquareMatrix::from_rows(rows.clone()).unwrap();
            proptest::prop_assert_eq!(det(&m), BigInt::from(cofactor(&rows)));
        }
    }
}
