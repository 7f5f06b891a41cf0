//! Thresholds `L`, `k` and `F`/`N`, and the end-to-end algorithm, against
//! exact series scans and the published table values.

use bound_engine::{
    compute_l, compute_l_with_family, corollary_k_threshold, family_polynomials, max_root_ceiling, refined_k_threshold,
    run_algorithm, stage2_constants, BoundError, Family, PFloorPolicy, Verdict,
};
use merca_series::{build_series, scan, DenomKind, MercaParams};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

fn params(r: u64, s: u64, k: u64) -> MercaParams {
    MercaParams::new(r, s, k).unwrap()
}

fn l_of(r: u64, s: u64, k: u64) -> BigInt {
    compute_l(&params(r, s, k)).unwrap().0
}

fn within(value: &BigInt, target: f64, rel: f64) -> bool {
    (value.to_f64().unwrap() - target).abs() <= rel * target
}

#[test]
fn four_part_closed_form_values() {
    assert_eq!(l_of(4, 1, 1), BigInt::from(8382));
    assert!(within(&l_of(10, 3, 1), 1.67e6, 0.005));
    assert!(within(&l_of(4, 1, 100), 5682.0, 0.001));
    assert!(within(&l_of(4, 1, 10_000), 98839.0, 0.001));
}

#[test]
fn three_part_root_values() {
    assert!(within(&l_of(9, 2, 10), 7769.0, 0.01));
    assert_eq!(l_of(9, 2, 100), BigInt::zero());
    assert!(within(&l_of(5, 2, 1), 175910.0, 0.001));
    assert!(within(&l_of(11, 4, 10), 60430.0, 0.001));
    assert!(within(&l_of(2, 1, 1), 216.0, 0.5));
    let (l, detail) = compute_l_with_family(&params(10, 3, 10), Family::E).unwrap();
    assert_eq!(detail.family, Family::E);
    assert!(within(&l, 48525.0, 0.001));
}

#[test]
fn family_override_checks_applicability() {
    let err = compute_l_with_family(&params(9, 2, 10), Family::E).unwrap_err();
    assert!(matches!(err, BoundError::CaseMismatch(_)));
    let err = compute_l_with_family(&params(8, 1, 10), Family::C).unwrap_err();
    assert!(matches!(err, BoundError::CaseMismatch(_)));
    assert!(compute_l_with_family(&params(8, 1, 10), Family::E).is_ok());
}

#[test]
fn p_floor_is_the_first_block_where_every_polynomial_is_nonnegative() {
    for (r, s, k, family) in
        [(9u64, 2u64, 10u64, Family::D), (9, 2, 1, Family::D), (3, 1, 1, Family::E), (2, 1, 1, Family::E)]
    {
        let (_, detail) = compute_l(&params(r, s, k)).unwrap();
        assert_eq!(detail.family, family);
        let polys = family_polynomials(family, r, s, k);
        let p_floor = detail.p_floor.to_i64().unwrap();
        for p in p_floor..p_floor + 10 {
            for poly in &polys {
                assert!(!poly.eval_int(&BigInt::from(p)).is_negative(), "{} at p={p}", poly.id);
            }
        }
        if p_floor > 0 {
            // Some polynomial still has a root at or above p_floor − 1.
            let below = BigRational::from_integer(BigInt::from(p_floor - 1));
            assert!(polys.iter().any(|poly| max_root_ceiling(poly).unwrap().bracket.is_some_and(|b| b.hi > below)));
        }
        // The root bracket z0 sits below p_floor and L is evaluated at its top.
        assert!(detail.z0.hi <= BigRational::from_integer(detail.p_floor.clone()));
    }
}

#[test]
fn root_brackets_contain_a_sign_change() {
    for poly in family_polynomials(Family::D, 9, 2, 10).iter().chain(&family_polynomials(Family::E, 3, 1, 2)) {
        let Some(b) = max_root_ceiling(poly).unwrap().bracket else { continue };
        let (lo, hi) = (poly.eval(&b.lo), poly.eval(&b.hi));
        assert!(lo.is_zero() || hi.is_zero() || lo.signum() != hi.signum(), "{}", poly.id);
        assert!(poly.eval(&(b.hi.clone() + BigRational::from_integer(1.into()))).is_positive());
    }
}

#[test]
fn l_decreases_in_k_past_the_refined_threshold() {
    let refined = refined_k_threshold(9, 2).unwrap();
    let mut prev = l_of(9, 2, refined);
    for k in refined + 1..refined + 40 {
        let l = l_of(9, 2, k);
        assert!(l <= prev, "k={k}: {l} > {prev}");
        prev = l;
    }
}

#[test]
fn corollary_thresholds() {
    assert_eq!(corollary_k_threshold(&params(9, 2, 1)), BigInt::from(130));
    assert_eq!(corollary_k_threshold(&params(4, 1, 1)), BigInt::from(2_097_152));
    assert_eq!(corollary_k_threshold(&params(3, 1, 1)), BigInt::from(72));
    assert_eq!(corollary_k_threshold(&params(2, 1, 1)), BigInt::from(1));
}

#[test]
fn refined_thresholds() {
    let r52 = refined_k_threshold(5, 2).unwrap();
    assert!(r52 > 10 && r52 <= 100, "{r52}");
    assert_eq!(refined_k_threshold(9, 2).unwrap(), 21);
    assert_eq!(refined_k_threshold(3, 1).unwrap(), 6);
    assert!(matches!(refined_k_threshold(4, 1), Err(BoundError::CaseMismatch(_))));
    assert!(matches!(refined_k_threshold(2, 1), Err(BoundError::CaseMismatch(_))));
    // From the refined k on, the bound theorem needs no scan at all.
    for (r, s) in [(9u64, 2u64), (5, 2), (3, 1), (11, 4)] {
        let k = refined_k_threshold(r, s).unwrap();
        assert_eq!(l_of(r, s, k), BigInt::zero(), "({r},{s},{k})");
    }
}

#[test]
fn stage2_worked_example() {
    let p = params(12, 1, 1);
    let ex = stage2_constants(&p, PFloorPolicy::Example);
    assert_eq!(ex.p, BigRational::from_integer(3456.into()));
    assert_eq!(ex.f, BigInt::from(286_702_838u64));
    assert_eq!(ex.n, "328794069555719825".parse::<BigInt>().unwrap());
    let formula = stage2_constants(&p, PFloorPolicy::Formula);
    assert_eq!(formula.f, BigInt::from(1_994_678u64));
    assert_eq!(formula.n, "10089975909717061".parse::<BigInt>().unwrap());
    let special = stage2_constants(&params(2, 1, 3), PFloorPolicy::Formula);
    assert_eq!(special.p, BigRational::from_integer(69.into()));
    let d = stage2_constants(&params(9, 2, 1), PFloorPolicy::Formula);
    assert_eq!(d.p, BigRational::from_integer(6561.into()));
}

#[test]
fn algorithm_verdicts() {
    let report = run_algorithm(&params(9, 2, 100), 10_000, PFloorPolicy::Formula).unwrap();
    assert_eq!(report.verdict, Verdict::CertifiedByScan);
    assert!(report.l.is_zero());
    let report = run_algorithm(&params(2, 1, 1), 10_000, PFloorPolicy::Formula).unwrap();
    assert_eq!(report.verdict, Verdict::CertifiedByCorollary);
    let report = run_algorithm(&params(12, 1, 1), 2_000, PFloorPolicy::Example).unwrap();
    // The four-part series itself dips below zero early on, so stage 2 applies.
    assert_eq!(report.verdict, Verdict::CaseSeriesNegative);
    assert!(report.l > BigInt::from(2_000));
    let stage2 = report.stage2.unwrap();
    assert_eq!(stage2.f, BigInt::from(286_702_838u64));
    assert!(report.full_scan.unwrap().is_nonnegative());
}

#[test]
fn certified_parameters_have_nonnegative_full_series() {
    for (r, s, k) in [(9u64, 2u64, 10u64), (5, 2, 10), (3, 1, 5), (4, 1, 40)] {
        let p = params(r, s, k);
        let report = run_algorithm(&p, 20_000, PFloorPolicy::Formula).unwrap();
        assert!(report.verdict.is_certified(), "({r},{s},{k}): {:?}", report.verdict);
        let hi = (report.l.to_usize().unwrap() + p.leading_shift() as usize).clamp(500, 20_000);
        let full = build_series(&p, hi, DenomKind::Full).unwrap();
        assert!(scan(&full, 0, hi).unwrap().is_nonnegative(), "({r},{s},{k})");
    }
}

#[test]
fn reports_are_deterministic() {
    let p = params(5, 2, 3);
    let a = run_algorithm(&p, 3_000, PFloorPolicy::Formula).unwrap();
    let b = run_algorithm(&p, 3_000, PFloorPolicy::Formula).unwrap();
    assert_eq!(a, b);
}
