//! The 4×4 matrix with diagonal `(a, b, c, d)` and every off-diagonal entry `-1`, which
//! arises as a Gram block when a coordinate shared by four orthogonal vectors is deleted.

use rayon::prelude::*;

use crate::lattice::SquareMatrix;

pub const DEFAULT_SOLUTION_BOUND: i64 = 50;

/// Closed form of the determinant.
pub fn det4_formula(a: i64, b: i64, c: i64, d: i64) -> i128 {
    let (a, b, c, d) = (a as i128, b as i128, c as i128, d as i128);
    -2 * a - a * b - 2 * b - a * c - b * c - 2 * c - a * d - b * d + a * b * c * d - c * d - 2 * d - 3
}

pub fn det4_matrix(a: i64, b: i64, c: i64, d: i64) -> SquareMatrix<i64> {
    let mut m = SquareMatrix::from_rows(vec![vec![-1; 4]; 4]).expect("4x4");
    for (i, x) in [a, b, c, d].into_iter().enumerate() {
        m[(i, i)] = x;
    }
    m
}

/// All `1 <= a <= b <= c <= d <= bound` with vanishing determinant, in lexicographic order.
pub fn det4_zero_solutions(bound: i64) -> Vec<[i64; 4]> {
    (1..=bound.max(0))
        .into_par_iter()
        .flat_map_iter(|a| {
            (a..=bound).flat_map(move |b| {
                (b..=bound).flat_map(move |c| {
                    (c..=bound).filter(move |&d| det4_formula(a, b, c, d) == 0).map(move |d| [a, b, c, d])
                })
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::det;
    use num_bigint::BigInt;

    #[test]
    fn values() {
        assert_eq!(det4_formula(3, 3, 3, 3), 0);
        assert_eq!(det4_formula(1, 5, 5, 5), 0);
        assert_eq!(det4_formula(1, 1, 1, 1), -16);
        assert_eq!(det(&det4_matrix(1, 1, 1, 1)), BigInt::from(-16));
    }

    #[test]
    fn small_table() {
        let sols = det4_zero_solutions(10);
        for s in [[1, 3, 7, 7], [1, 4, 4, 9], [1, 5, 5, 5], [3, 3, 3, 3]] {
            assert!(sols.contains(&s), "{s:?}");
        }
        assert!(sols.windows(2).all(|w| w[0] < w[1]));
        assert!(sols.iter().all(|s| s[0] <= 3));
        let with_three: Vec<_> = sols.iter().filter(|s| s[0] == 3).collect();
        assert_eq!(with_three, vec![&[3, 3, 3, 3]]);
    }
}
