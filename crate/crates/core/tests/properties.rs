mod common;

use std::collections::HashSet;

use proptest::prelude::*;
use rand::Rng;

use common::*;
use cubiq_core::classify::det4_formula;
use cubiq_core::classify::det4_zero_solutions;
use cubiq_core::lattice::CosetSystem;
use cubiq_core::obstructions::{
    check, cube_lattice_points, is_cubiquitous_bruteforce, wu_obstruction, wu_obstruction_orthogonal,
};
use cubiq_core::subset::Subset;
use cubiq_core::transforms::{reduce, reduce_with};
use cubiq_core::{BasisMatrix, Limits, SquareMatrix, Status};

const CAP: u64 = 1 << 20;

fn basis(max_n: usize, entry: i64) -> impl Strategy<Value = BasisMatrix> {
    (1..=max_n)
        .prop_flat_map(move |n| prop::collection::vec(prop::collection::vec(-entry..=entry, n), n))
        .prop_filter_map("singular", |cols| BasisMatrix::from_columns(&cols).ok())
}

fn small_index(max_n: usize, entry: i64, max_det: i64) -> impl Strategy<Value = BasisMatrix> {
    basis(max_n, entry).prop_filter("index too large", move |b| b.index() <= max_det.into())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn hnf_spans_the_same_lattice(b in basis(4, 4)) {
        let h = b.hnf();
        prop_assert_eq!(h.index(), b.index());
        for c in h.columns() {
            prop_assert!(b.contains(&c).unwrap());
        }
        for c in b.columns() {
            prop_assert!(h.contains(&c).unwrap());
        }
    }

    #[test]
    fn lattice_contains_combinations(b in basis(4, 5), z in prop::collection::vec(-5i64..=5, 4)) {
        let n = b.dim();
        let x = b.matrix().mul_vec(&z[..n]);
        prop_assert!(b.contains(&x).unwrap());
        prop_assert!(member_by_cramer(&b, &x));
        let mut off = x.clone();
        off[0] += 1;
        prop_assert_eq!(b.contains(&off).unwrap(), member_by_cramer(&b, &off));
    }

    #[test]
    fn coset_representatives_are_distinct(b in small_index(3, 4, 40)) {
        let cs = CosetSystem::new(&b, CAP).unwrap();
        let reps: Vec<Vec<i64>> = cs.reps().collect();
        prop_assert_eq!(reps.len() as u64, cs.order());
        prop_assert_eq!(u64::try_from(b.index()).unwrap(), cs.order());
        for i in 0..reps.len() {
            prop_assert_eq!(&cs.hnf().reduce(&reps[i]), &reps[i]);
            for j in 0..i {
                let diff: Vec<i64> = reps[i].iter().zip(&reps[j]).map(|(a, c)| a - c).collect();
                prop_assert!(!member_by_cramer(&b, &diff));
            }
        }
    }

    #[test]
    fn brute_force_matches_definition(b in small_index(3, 3, 12)) {
        let fast = is_cubiquitous_bruteforce(&b, CAP).unwrap().status == Status::Cubiquitous;
        prop_assert_eq!(fast, naive_cubiquitous(&b));
    }

    #[test]
    fn witnesses_are_empty_cubes(b in small_index(4, 3, 200)) {
        let v = is_cubiquitous_bruteforce(&b, CAP).unwrap();
        if let Some(w) = &v.witness {
            prop_assert!(cube_lattice_points(&b, w).unwrap().is_empty());
            let n = b.dim();
            for mask in 0..1u32 << n {
                let y: Vec<i64> = (0..n).map(|k| w[k] + ((mask >> k) & 1) as i64).collect();
                prop_assert!(!member_by_cramer(&b, &y));
            }
        } else {
            prop_assert_eq!(v.status, Status::Cubiquitous);
        }
    }

    #[test]
    fn cubiquity_is_invariant_under_signed_permutations(b in small_index(4, 3, 100), seed in any::<u64>()) {
        let mut r = rng(seed);
        let (order, flips) = random_signed_permutation(b.dim(), &mut r);
        let moved = apply_signed_permutation(&b, &order, &flips);
        let changed = random_basis_change(&moved, &mut r, 8);
        let s0 = is_cubiquitous_bruteforce(&b, CAP).unwrap().status;
        prop_assert_eq!(s0, is_cubiquitous_bruteforce(&moved, CAP).unwrap().status);
        prop_assert_eq!(s0, is_cubiquitous_bruteforce(&changed, CAP).unwrap().status);
    }

    #[test]
    fn check_agrees_with_brute_force(b in small_index(4, 3, 100)) {
        let v = check(&b, Limits { resource_cap: CAP, permutation_cap: 8 }).unwrap();
        let brute = is_cubiquitous_bruteforce(&b, CAP).unwrap().status;
        prop_assert_eq!(v.status, brute);
    }

    #[test]
    fn reduction_is_order_independent(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = random_orthogonal(&mut r, 5);
        let first = reduce(&s).unwrap();
        let any = reduce_with(&s, |c| r.gen_range(0..c.len())).unwrap();
        let set = |v: &[usize]| v.iter().copied().collect::<HashSet<_>>();
        prop_assert_eq!(set(&first.remaining_vectors), set(&any.remaining_vectors));
        prop_assert_eq!(set(&first.remaining_coords), set(&any.remaining_coords));
        prop_assert_eq!(first.result, any.result);
    }

    #[test]
    fn orthogonal_wu_forms_agree(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = random_orthogonal(&mut r, 5);
        let general = wu_obstruction(&s).unwrap();
        let orth = wu_obstruction_orthogonal(&s).unwrap();
        prop_assert_eq!(general.status, orth.status);
    }
}

/// A direct sum of small orthogonal blocks under a random signed coordinate permutation.
fn random_orthogonal(r: &mut impl Rng, max_dim: usize) -> Subset {
    let blocks: [&[&[i64]]; 8] = [
        &[&[1]],
        &[&[2]],
        &[&[3]],
        &[&[1, 1], &[1, -1]],
        &[&[1, 2], &[2, -1]],
        &[&[3, 4], &[4, -3]],
        &[&[1, 1, 0], &[1, -1, 1], &[1, -1, -2]],
        &[&[1, 1, 1, 1], &[1, -1, 1, -1], &[1, 1, -1, -1], &[1, -1, -1, 1]],
    ];
    let n = r.gen_range(1..=max_dim);
    let mut cols: Vec<Vec<i64>> = Vec::new();
    while cols.len() < n {
        let blk = blocks[r.gen_range(0..blocks.len())];
        if cols.len() + blk.len() > n {
            continue;
        }
        let offset = cols.len();
        for c in blk {
            let mut v = vec![0; n];
            v[offset..offset + c.len()].copy_from_slice(c);
            cols.push(v);
        }
    }
    let (order, flips) = random_signed_permutation(n, r);
    Subset::new(cols.iter().map(|v| apply_to_vector(v, &order, &flips)).collect()).unwrap()
}

#[test]
fn det4_solutions_are_symmetric() {
    let perms = [
        [0, 1, 2, 3], [1, 0, 2, 3], [2, 1, 0, 3], [3, 1, 2, 0], [0, 2, 1, 3], [0, 3, 2, 1],
        [0, 1, 3, 2], [1, 2, 3, 0], [3, 2, 1, 0], [2, 3, 0, 1], [1, 0, 3, 2], [2, 0, 3, 1],
    ];
    for s in det4_zero_solutions(20) {
        for p in perms {
            assert_eq!(det4_formula(s[p[0]], s[p[1]], s[p[2]], s[p[3]]), 0, "{s:?} {p:?}");
        }
    }
}

#[test]
fn hnf_enumeration_counts_sublattices() {
    // number of index-d sublattices of Z^2 is sigma(d)
    for (d, sigma) in [(1, 1), (2, 3), (4, 7), (6, 12), (9, 13)] {
        assert_eq!(hnfs(2, d).len(), sigma);
    }
    let m = SquareMatrix::from_rows(vec![vec![2, 0], vec![1, 2]]).unwrap();
    assert!(hnfs(2, 4).iter().any(|b| b.matrix() == &m));
}
