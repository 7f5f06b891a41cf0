//! Sandwich bounds checked exhaustively against exact DP tables.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use partitions::{count_table, p3_bound_data, p4_bound_data, PartitionError, ThreePartVariant};

/// Pairs `(r, s)` with `2 | s` whose printed three-part (PLUS) constants are
/// violated somewhere in one period `[0, Δ₁−1]`. Frozen from an exhaustive
/// search over `Δ₁ ≤ 5000`; see the project README for discussion.
const PLUS_COUNTEREXAMPLES: &[(u64, u64)] = &[(5, 2), (9, 4), (13, 6), (17, 8), (19, 8), (21, 10), (23, 10)];

fn coprime_pairs(max_r: u64) -> impl Iterator<Item = (u64, u64)> {
    (3..=max_r).flat_map(|r| (1..r).filter(move |&s| 2 * s < r && r.gcd(&s) == 1).map(move |s| (r, s)))
}

#[test]
fn four_part_sandwich_one_period_r4_s1() {
    let data = p4_bound_data(4, 1).unwrap();
    let table = count_table(&data.parts(), 104);
    assert_eq!(data.sandwich_violations(&table, 0, 104), Vec::<usize>::new());
}

#[test]
fn four_part_sandwich_all_small_pairs() {
    let mut checked = 0;
    for (r, s) in coprime_pairs(40) {
        let Ok(data) = p4_bound_data(r, s) else { continue };
        let delta = usize::try_from(&data.delta).unwrap();
        if delta > 5000 {
            continue;
        }
        let table = count_table(&data.parts(), delta - 1);
        assert!(data.sandwich_violations(&table, 0, delta - 1).is_empty(), "(r,s)=({r},{s})");
        checked += 1;
    }
    assert!(checked >= 5, "only {checked} pairs checked");
}

#[test]
fn four_part_bounds_need_even_r_and_r_plus_s_prime_to_3() {
    for (r, s) in coprime_pairs(200) {
        let ok = p4_bound_data(r, s).is_ok();
        assert_eq!(ok, r % 2 == 0 && (r + s) % 3 != 0, "(r,s)=({r},{s})");
    }
    // r even alone is not enough: {1, 7, 9, 15} shares the factor 3.
    assert!(matches!(p4_bound_data(8, 1), Err(PartitionError::CaseMismatch(_))));
}

#[test]
fn three_part_plus_r9_s2() {
    let data = p3_bound_data(9, 2, ThreePartVariant::Plus).unwrap();
    let table = count_table(&data.parts(), 153);
    assert_eq!(data.sandwich_violations(&table, 0, 153), Vec::<usize>::new());
}

#[test]
fn three_part_minus_r3_s1() {
    let data = p3_bound_data(3, 1, ThreePartVariant::Minus).unwrap();
    let table = count_table(&data.parts(), 9);
    assert_eq!(data.sandwich_violations(&table, 0, 9), Vec::<usize>::new());
}

#[test]
fn three_part_plus_all_small_pairs() {
    let mut failing = Vec::new();
    let mut checked = 0;
    for (r, s) in coprime_pairs(80).filter(|&(_, s)| s % 2 == 0) {
        let data = p3_bound_data(r, s, ThreePartVariant::Plus).unwrap();
        let delta = usize::try_from(&data.delta).unwrap();
        if delta > 5000 {
            continue;
        }
        let table = count_table(&data.parts(), delta - 1);
        if !data.sandwich_violations(&table, 0, delta - 1).is_empty() {
            failing.push((r, s));
        }
        checked += 1;
    }
    assert!(checked > PLUS_COUNTEREXAMPLES.len());
    assert_eq!(failing, PLUS_COUNTEREXAMPLES);
}

#[test]
fn three_part_minus_all_small_pairs() {
    let mut checked = 0;
    for (r, s) in coprime_pairs(80).filter(|&(_, s)| s % 2 == 1) {
        let data = p3_bound_data(r, s, ThreePartVariant::Minus).unwrap();
        let delta = usize::try_from(&data.delta).unwrap();
        if delta > 5000 {
            continue;
        }
        let table = count_table(&data.parts(), delta - 1);
        assert!(data.sandwich_violations(&table, 0, delta - 1).is_empty(), "(r,s)=({r},{s})");
        checked += 1;
    }
    assert!(checked >= 10);
}

#[test]
fn periodic_part_cancels_over_a_period() {
    for (r, s) in [(4u64, 1u64), (6, 1), (8, 3)] {
        let data = p4_bound_data(r, s).unwrap();
        let delta = usize::try_from(&data.delta).unwrap();
        let table = count_table(&data.parts(), 3 * delta);
        let big = |n: usize| BigRational::from_integer(BigInt::from(n));
        let count = |n: usize| BigRational::from_integer(BigInt::from(table[n].clone()));
        for n in 0..=2 * delta {
            let lhs = count(n + delta) - count(n);
            let rhs = data.p3(&big(n + delta)) - data.p3(&big(n));
            assert_eq!(lhs, rhs, "(r,s)=({r},{s}), n={n}");
        }
    }
}

#[test]
fn sandwich_detects_tampered_tables() {
    let data = p4_bound_data(4, 1).unwrap();
    let mut table = count_table(&data.parts(), 104);
    table[50] += BigUint::from(10_000_000u32);
    assert_eq!(data.sandwich_violations(&table, 0, 104), vec![50]);
}

#[test]
fn case_mismatch_is_an_error() {
    assert!(matches!(p4_bound_data(5, 2), Err(PartitionError::CaseMismatch(_))));
}
