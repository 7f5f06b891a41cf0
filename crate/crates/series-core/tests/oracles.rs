//! Classical identities used as independent oracles for the series engine.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use series_core::{inverse_truncated, mul_truncated, pochhammer, PochSpec, Series};

/// p(n) for n ≤ max by the plain coin-change DP over parts 1..=max.
fn partition_numbers(max: usize) -> Vec<u128> {
    let mut t = vec![0u128; max + 1];
    t[0] = 1;
    for part in 1..=max {
        for n in part..=max {
            t[n] += t[n - part];
        }
    }
    t
}

#[test]
fn inverse_euler_function_gives_partition_numbers() {
    let order = 100;
    let euler = pochhammer(&[PochSpec::infinite(1, 1).unwrap()], order);
    let inv = inverse_truncated(&euler).unwrap();
    let oracle = partition_numbers(order);
    assert_eq!(inv.coeff(10), &BigInt::from(42));
    assert_eq!(inv.coeff(100), &BigInt::from(190_569_292u64));
    for (n, &count) in oracle.iter().enumerate() {
        assert_eq!(inv.coeff(n), &BigInt::from(count), "p({n})");
    }
}

#[test]
fn jacobi_triple_product() {
    let order = 500;
    for (r, s) in [(3u64, 1u64), (5, 2), (7, 3)] {
        let product = pochhammer(
            &[
                PochSpec::infinite(s, r).unwrap(),
                PochSpec::infinite(r - s, r).unwrap(),
                PochSpec::infinite(r, r).unwrap(),
            ],
            order,
        );
        // Σ_{j∈ℤ} (−1)^j q^{r j(j+1)/2 − s j}
        let mut theta = Series::zero(order);
        let (r, s) = (r as i64, s as i64);
        for j in -200i64..=200 {
            let e = r * j * (j + 1) / 2 - s * j;
            if (0..=order as i64).contains(&e) {
                let sign = if j.rem_euclid(2) == 0 { 1 } else { -1 };
                theta.add_term(e as usize, &BigInt::from(sign));
            }
        }
        assert_eq!(product, theta, "(r,s)=({r},{s})");
    }
}

#[test]
fn truncated_pentagonal_series_is_nonnegative() {
    let order = 300;
    let inv = inverse_truncated(&pochhammer(&[PochSpec::infinite(1, 1).unwrap()], order)).unwrap();
    for k in 1i64..=3 {
        let mut partial = Series::zero(order);
        for j in -k..k {
            let e = j * (3 * j + 1) / 2;
            let sign = if j.rem_euclid(2) == 0 { 1 } else { -1 };
            partial.add_term(e as usize, &BigInt::from(sign));
        }
        let mut series = mul_truncated(&inv, &partial);
        if k % 2 == 0 {
            series = -&series;
        }
        let expected_constant = if k % 2 == 1 { 1 } else { -1 };
        assert_eq!(series.coeff(0), &BigInt::from(expected_constant), "k={k}");
        assert!(series.coeffs()[1..].iter().all(|c| !c.is_negative()), "k={k}");
    }
}

fn series_strategy(len: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(-50i64..50, 1..len).prop_map(|v| {
        let n = v.len() - 1;
        Series::from_i64(&v, n)
    })
}

fn unit_series_strategy(len: usize) -> impl Strategy<Value = Series> {
    (prop::bool::ANY, prop::collection::vec(-20i64..20, 0..len)).prop_map(|(neg, mut v)| {
        v.insert(0, if neg { -1 } else { 1 });
        let n = v.len() - 1;
        Series::from_i64(&v, n)
    })
}

proptest! {
    #[test]
    fn product_is_commutative(a in series_strategy(40), b in series_strategy(40)) {
        prop_assert_eq!(mul_truncated(&a, &b), mul_truncated(&b, &a));
    }

    #[test]
    fn product_is_associative(a in series_strategy(30), b in series_strategy(30), c in series_strategy(30)) {
        let left = mul_truncated(&mul_truncated(&a, &b), &c);
        let right = mul_truncated(&a, &mul_truncated(&b, &c));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_is_an_involution(a in unit_series_strategy(40)) {
        let inv = inverse_truncated(&a).unwrap();
        prop_assert_eq!(&inverse_truncated(&inv).unwrap(), &a);
        prop_assert_eq!(mul_truncated(&a, &inv), Series::one(a.order()));
    }

    #[test]
    fn additive_inverse(a in series_strategy(40)) {
        let z = &a + &(-&a);
        prop_assert!(z.coeffs().iter().all(|c| c.is_zero()));
    }
}
