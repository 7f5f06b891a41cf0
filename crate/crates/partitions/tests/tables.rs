//! DP tables against brute-force enumeration and convolution identities.

use num_bigint::BigUint;
use num_traits::Zero;
use partitions::{count_table, g_table, j_table, partitions_with_parts, PartsSpec};
use proptest::prelude::*;

/// Counts multisets of `parts` summing to `n` by explicit recursion.
fn enumerate(parts: &[u64], n: u64) -> u64 {
    fn go(parts: &[u64], n: u64) -> u64 {
        match parts.split_first() {
            None => u64::from(n == 0),
            Some((&p, rest)) => (0..=n / p).map(|m| go(rest, n - m * p)).sum(),
        }
    }
    go(parts, n)
}

fn convolve(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let n = a.len().min(b.len());
    (0..n).map(|k| (0..=k).map(|i| &a[i] * &b[k - i]).fold(BigUint::zero(), |x, y| x + y)).collect()
}

#[test]
fn dp_matches_enumeration_up_to_twenty() {
    for parts in [vec![1u64, 3, 5, 7], vec![2, 7, 11], vec![1, 2, 5, 10], vec![3, 4]] {
        let t = count_table(&parts, 20);
        for n in 0..=20u64 {
            assert_eq!(t[n as usize], BigUint::from(enumerate(&parts, n)), "parts {parts:?}, n={n}");
        }
    }
}

#[test]
fn g_and_j_tables_match_enumeration() {
    let g_parts: Vec<u64> = (0..20).flat_map(|i| [9 + 4 * i, 11 + 4 * i]).filter(|&p| p <= 80).collect();
    let g = g_table(1, 4, 80).unwrap();
    let j_parts: Vec<u64> = (0..20).flat_map(|i| [20 + 9 * i, 16 + 9 * i]).filter(|&p| p <= 80).collect();
    let j = j_table(2, 9, 80).unwrap();
    for n in 0..=80u64 {
        assert_eq!(g[n as usize], BigUint::from(enumerate(&g_parts, n)), "g(1,4;{n})");
        assert_eq!(j[n as usize], BigUint::from(enumerate(&j_parts, n)), "j(2,9;{n})");
    }
}

#[test]
fn g_table_is_convolution_of_its_progressions() {
    let order = 600;
    let g = g_table(2, 7, order).unwrap();
    let a = partitions_with_parts(&PartsSpec::progressions(&[(16, 7)]).unwrap(), order).unwrap();
    let b = partitions_with_parts(&PartsSpec::progressions(&[(19, 7)]).unwrap(), order).unwrap();
    assert_eq!(g, convolve(&a, &b));
}

proptest! {
    #[test]
    fn disjoint_union_is_convolution(set in prop::collection::btree_set(1u64..40, 0..8), split in 0usize..8) {
        let parts: Vec<u64> = set.into_iter().collect();
        let k = split.min(parts.len());
        let (a, b) = parts.split_at(k);
        let order = 150;
        prop_assert_eq!(count_table(&parts, order), convolve(&count_table(a, order), &count_table(b, order)));
    }
}
