//! Command execution: every command returns its JSON report and whether a
//! negative coefficient was found.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use asymptotics::{
    bessel_i, compare_exact_vs_main, delta_m, estimate, g_envelopes, j_main_term, n_threshold, x_of,
    AsymptoticEstimate, ENVELOPE_RATIO,
};
use bound_engine::{
    appendix_polynomial, compute_l, compute_l_with_family, corollary_k_threshold, family_polynomials,
    refined_k_threshold, run_algorithm, stage2_constants, BoundReport, Family, PFloorPolicy, Stage2,
};
use merca_series::{build_series, generalized_series, scan, DenomKind, MercaParams, ScanReport};
use series_core::{inverse_truncated, pochhammer, PochSpec};

use crate::args::ReproduceTarget;
use crate::output::{big, bracket, rat};
use crate::plan::{Command, ScanTarget};
use crate::tables::{PublishedTable, TABLE_1, TABLE_2, TABLE_3};

/// Report of one executed command.
pub struct Executed {
    pub command: &'static str,
    pub params: Value,
    pub result: Value,
    /// A scan found a negative coefficient (exit code 1).
    pub negative_found: bool,
    /// A self-test check failed.
    pub failed: bool,
}

/// Failure while executing a validated plan.
#[derive(Debug)]
pub struct ExecError(pub String);

impl<E: std::fmt::Display> From<E> for ExecError {
    fn from(e: E) -> Self {
        ExecError(e.to_string())
    }
}

fn params_json(params: &MercaParams) -> Value {
    json!({"r": params.r(), "s": params.s(), "k": params.k(), "case": params.case().name()})
}

fn null_params() -> Value {
    json!({"r": null, "s": null, "k": null, "case": null})
}

fn scan_json(report: &ScanReport) -> Value {
    json!({
        "lo": report.lo,
        "hi": report.hi,
        "min": big(&report.min_value),
        "min_index": report.min_index,
        "first_negative": report.first_negative,
        "negative_count": report.negative_count,
        "zero_count": report.zero_count,
    })
}

fn stage2_json(stage2: &Stage2) -> Value {
    json!({
        "policy": stage2.policy.name(),
        "p": rat(&stage2.p),
        "f": big(&stage2.f),
        "asymptotic_floor": big(&stage2.asymptotic_floor),
        "n": big(&stage2.n),
    })
}

pub fn execute(command: &Command) -> Result<Executed, ExecError> {
    match *command {
        Command::Scan { target, terms } => run_scan(target, terms),
        Command::Bound { params, scan_budget, policy } => run_bound(&params, scan_budget, policy),
        Command::Asymptotic { a, m, n, budget, digits } => run_asymptotic(a, m, n, budget, digits),
        Command::Reproduce { target, cell } => run_reproduce(target, cell),
        Command::Selftest => run_selftest(),
    }
}

fn run_scan(target: ScanTarget, terms: usize) -> Result<Executed, ExecError> {
    match target {
        ScanTarget::Merca(params, kind) => {
            let series = build_series(&params, terms, kind)?;
            let report = scan(&series, 0, terms)?;
            let mut result = scan_json(&report);
            result["series"] = json!(kind.name());
            result["terms"] = json!(terms);
            result["negatives"] = negatives(series.coeffs().iter().enumerate().map(|(n, c)| (n as i64, c)));
            Ok(Executed {
                command: "scan",
                params: params_json(&params),
                result,
                negative_found: !report.is_nonnegative(),
                failed: false,
            })
        }
        ScanTarget::General { big_r, big_s, k, ell } => {
            let g = generalized_series(big_r, big_s, k, ell, terms)?;
            let offset = g.offset as i64;
            let hi = g.series.order();
            let report = scan(&g.series, 0, hi)?;
            let shift = |i: usize| i as i64 - offset;
            let result = json!({
                "series": "general",
                "ell": ell,
                "terms": terms,
                "lo": -offset,
                "hi": shift(hi),
                "min": big(&report.min_value),
                "min_index": shift(report.min_index),
                "first_negative": report.first_negative.map(shift),
                "negative_count": report.negative_count,
                "zero_count": report.zero_count,
                "negatives": negatives(g.series.coeffs().iter().enumerate().map(|(i, c)| (shift(i), c))),
            });
            Ok(Executed {
                command: "scan",
                params: json!({"r": big_r, "s": big_s, "k": k, "case": null}),
                result,
                negative_found: !report.is_nonnegative(),
                failed: false,
            })
        }
    }
}

/// The first few negative coefficients as `[exponent, value]` pairs.
fn negatives<'a>(coeffs: impl Iterator<Item = (i64, &'a BigInt)>) -> Value {
    const SHOWN: usize = 10;
    Value::Array(coeffs.filter(|(_, c)| c.is_negative()).take(SHOWN).map(|(n, c)| json!([n, big(c)])).collect())
}

fn bound_json(report: &BoundReport) -> Value {
    let p = &report.params;
    let polys: Vec<Value> = family_polynomials(report.family, p.r(), p.s(), p.k())
        .iter()
        .zip(&report.poly_roots)
        .map(|(poly, (_, root))| {
            json!({
                "id": poly.id.to_string(),
                "printed": poly.to_string(),
                "root": root.as_ref().map(bracket),
            })
        })
        .collect();
    json!({
        "case": report.case.name(),
        "family": report.family.letter().to_string(),
        "polynomials": polys,
        "z0": bracket(&report.z0),
        "p_floor": big(&report.p_floor),
        "l": big(&report.l),
        "l_block": big(&report.l_block),
        "corollary_k": big(&report.corollary_k),
        "refined_k": report.refined_k,
        "scanned_series": report.scanned_series.name(),
        "scan": report.scan.as_ref().map(scan_json),
        "full_scan": report.full_scan.as_ref().map(scan_json),
        "stage2": report.stage2.as_ref().map(stage2_json),
        "verdict": report.verdict.name(),
        "certified": report.verdict.is_certified(),
    })
}

fn run_bound(params: &MercaParams, scan_budget: usize, policy: PFloorPolicy) -> Result<Executed, ExecError> {
    let report = run_algorithm(params, scan_budget, policy)?;
    let negative_found =
        [&report.scan, &report.full_scan].iter().any(|s| s.as_ref().is_some_and(|s| !s.is_nonnegative()));
    Ok(Executed {
        command: "bound",
        params: params_json(params),
        result: bound_json(&report),
        negative_found,
        failed: false,
    })
}

fn estimate_json(e: &AsymptoticEstimate, digits: u32) -> Value {
    let d = digits as usize;
    json!({
        "a": e.a,
        "m": e.m,
        "n": e.n,
        "main_term": e.main_term.to_scientific(d),
        "mellin_main_term": e.mellin_main_term.to_scientific(d),
        "lower_env": e.lower_env.to_scientific(d),
        "upper_env": e.upper_env.to_scientific(d),
        "envelope_ratio": [ENVELOPE_RATIO.0, ENVELOPE_RATIO.1],
        "exact": e.exact.as_ref().map(|x| x.to_string()),
        "ratio": e.ratio.as_ref().map(|x| x.to_scientific(d)),
        "mellin_ratio": e.mellin_ratio.as_ref().map(|x| x.to_scientific(d)),
    })
}

fn run_asymptotic(a: u64, m: u64, n: u64, budget: usize, digits: u32) -> Result<Executed, ExecError> {
    let est = if n as usize <= budget {
        compare_exact_vs_main(a, m, n, budget, digits)?
    } else {
        estimate(a, m, n, None, digits)?
    };
    let mut result = estimate_json(&est, digits);
    result["delta_m"] = json!(delta_m(a, m));
    result["j_main_term"] = json!(j_main_term(a, m, n, digits)?.to_scientific(digits as usize));
    result["x"] = json!(x_of(&n.into(), m, digits)?.to_scientific(digits as usize));
    result["n_threshold"] = json!(n_threshold(m).to_string());
    Ok(Executed {
        command: "asymptotic",
        params: json!({"r": m, "s": a, "k": null, "case": null}),
        result,
        negative_found: false,
        failed: false,
    })
}

/// Exact value of a printed table entry and its number of significant
/// figures (`None` for plain integers, which are compared exactly).
fn printed_value(printed: &str) -> (BigInt, Option<usize>) {
    match printed.split_once('e') {
        None => (printed.parse().expect("table entry"), None),
        Some((mantissa, exp)) => {
            let exp: i64 = exp.parse().expect("table exponent");
            let decimals = mantissa.split_once('.').map_or(0, |(_, f)| f.len()) as i64;
            let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
            let sig = digits.trim_start_matches('0').len().max(1);
            let value =
                digits.parse::<BigInt>().expect("table mantissa") * BigInt::from(10).pow((exp - decimals) as u32);
            (value, Some(sig))
        }
    }
}

/// `x` rounded half up to `sig` significant figures.
fn round_sig(x: &BigInt, sig: usize) -> BigInt {
    let len = x.to_string().len();
    if len <= sig {
        return x.clone();
    }
    let scale = BigInt::from(10).pow((len - sig) as u32);
    let q = (x + &scale / 2) / &scale;
    q * scale
}

fn table_cell(table: &PublishedTable, r: u64, s: u64, k: u64) -> Result<Value, ExecError> {
    let params = MercaParams::new(r, s, k)?;
    let (l, detail) = compute_l_with_family(&params, table.family)?;
    let printed = table.lookup(r, s, k);
    let (agrees, rel_delta) = match printed {
        Some(p) => {
            let (value, sig) = printed_value(p);
            let agrees = match sig {
                Some(sig) => round_sig(&l, sig) == value,
                None => l == value,
            };
            let rel = if value.is_zero() {
                None
            } else {
                Some(l.to_f64().unwrap_or(f64::INFINITY) / value.to_f64().unwrap_or(f64::INFINITY) - 1.0)
            };
            (Some(agrees), rel)
        }
        None => (None, None),
    };
    Ok(json!({
        "r": r,
        "s": s,
        "k": k,
        "family": detail.family.letter().to_string(),
        "l": big(&l),
        "z0": bracket(&detail.z0),
        "p_floor": big(&detail.p_floor),
        "printed": printed,
        "agrees_to_printed_figures": agrees,
        "rel_delta": rel_delta,
    }))
}

fn run_reproduce(target: ReproduceTarget, cell: Option<(u64, u64, u64)>) -> Result<Executed, ExecError> {
    let table = match target {
        ReproduceTarget::Table1 => Some(&TABLE_1),
        ReproduceTarget::Table2 => Some(&TABLE_2),
        ReproduceTarget::Table3 => Some(&TABLE_3),
        _ => None,
    };
    let (params, result) = if let Some(table) = table {
        let cells: Vec<(u64, u64, u64)> = match cell {
            Some(c) => vec![c],
            None => table.cells().map(|(r, s, k, _)| (r, s, k)).collect(),
        };
        let values = cells.iter().map(|&(r, s, k)| table_cell(table, r, s, k)).collect::<Result<Vec<_>, _>>()?;
        let params = match cell {
            Some((r, s, k)) => params_json(&MercaParams::new(r, s, k)?),
            None => null_params(),
        };
        (
            params,
            json!({"target": format!("table-{}", table.number), "family": table.family.letter().to_string(), "cells": values}),
        )
    } else {
        match target {
            ReproduceTarget::Example51 => example_5_1()?,
            ReproduceTarget::Example62 => example_6_2()?,
            _ => corollary_5_3()?,
        }
    };
    Ok(Executed { command: "reproduce", params, result, negative_found: false, failed: false })
}

fn example_5_1() -> Result<(Value, Value), ExecError> {
    let params = MercaParams::new(9, 2, 10)?;
    let refined = refined_k_threshold(9, 2)?;
    let forms = |k: u64| -> Value {
        family_polynomials(Family::D, 9, 2, k)
            .iter()
            .map(|p| json!({"id": p.id.to_string(), "printed": p.to_string()}))
            .collect()
    };
    let (l, _) = compute_l(&params)?;
    let result = json!({
        "target": "example-5.1",
        "corollary_k": big(&corollary_k_threshold(&params)),
        "corollary_k_printed": 130,
        "refined_k": refined,
        "refined_k_printed": 19,
        "polynomials_k1": forms(1),
        "polynomials_k10": forms(10),
        "l_k10": big(&l),
    });
    Ok((json!({"r": 9, "s": 2, "k": null, "case": params.case().name()}), result))
}

fn example_6_2() -> Result<(Value, Value), ExecError> {
    const TERMS: usize = 5000;
    let params = MercaParams::new(12, 1, 1)?;
    let series = build_series(&params, TERMS, DenomKind::Four)?;
    let report = scan(&series, 0, TERMS)?;
    let first_value = report.first_negative.map(|n| big(series.coeff(n)));
    let (l, _) = compute_l(&params)?;
    let example = stage2_constants(&params, PFloorPolicy::Example);
    let formula = stage2_constants(&params, PFloorPolicy::Formula);
    let printed_n: BigInt = "329000000000000000".parse().expect("literal");
    let result = json!({
        "target": "example-6.2",
        "four_scan": scan_json(&report),
        "first_negative_value": first_value,
        "l": big(&l),
        "stage2_example": stage2_json(&example),
        "stage2_formula": stage2_json(&formula),
        "f_printed": "286702838",
        "n_printed_lower_bound": "3.29e17",
        "n_meets_printed_bound": example.n >= printed_n,
    });
    Ok((params_json(&params), result))
}

fn corollary_5_3() -> Result<(Value, Value), ExecError> {
    const TERMS: usize = 10_000;
    let params = MercaParams::new(2, 1, 1)?;
    let series = build_series(&params, TERMS, DenomKind::ThreeMinus)?;
    let report = scan(&series, 0, TERMS)?;
    Ok((params_json(&params), json!({"target": "corollary-5.3", "three_minus_scan": scan_json(&report)})))
}

fn check(name: &str, expected: impl ToString, actual: impl ToString) -> Value {
    let (expected, actual) = (expected.to_string(), actual.to_string());
    json!({"name": name, "pass": expected == actual, "expected": expected, "actual": actual})
}

fn run_selftest() -> Result<Executed, ExecError> {
    let p = inverse_truncated(&pochhammer(&[PochSpec::infinite(1, 1)?], 100))?;
    let four = build_series(&MercaParams::new(12, 1, 1)?, 200, DenomKind::Four)?;
    let minus = build_series(&MercaParams::new(2, 1, 1)?, 2000, DenomKind::ThreeMinus)?;
    let d0 = appendix_polynomial(Family::D, 0, 9, 2, 1)?;
    let stage2 = stage2_constants(&MercaParams::new(12, 1, 1)?, PFloorPolicy::Example);
    let i0 = bessel_i(0, &astro_float::BigFloat::from_u64(0, 128), 20)?;
    let env = g_envelopes(1, 4, 1000, 20)?;
    let env_ratio = env.upper.to_f64() / env.lower.to_f64();
    let checks = vec![
        check("p(10)", 42, p.coeff(10)),
        check("p(100)", 190_569_292, p.coeff(100)),
        check("four(12,1,1) first negative", 49, scan(&four, 0, 200)?.first_negative.unwrap_or(0)),
        check("four(12,1,1) b(49)", -1, four.coeff(49)),
        check("three-minus(2,1,1) nonnegative to 2000", true, scan(&minus, 0, 2000)?.is_nonnegative()),
        check("L1(4,1,1)", 8382, compute_l(&MercaParams::new(4, 1, 1)?)?.0),
        check("corollary k (9,2)", 130, corollary_k_threshold(&MercaParams::new(9, 2, 1)?)),
        check("D0(t1,p) at (9,2,1)", "32*p^2 - 8932*p", &d0),
        check("refined k (9,2)", 21, refined_k_threshold(9, 2)?),
        check("F1 (12,1,1) example policy", 286_702_838, &stage2.f),
        check("I0(0)", 1, i0.to_f64()),
        check("envelope ratio 101/99", format!("{:.12}", 101.0 / 99.0), format!("{env_ratio:.12}")),
    ];
    let failed = checks.iter().filter(|c| c["pass"] == json!(false)).count();
    let result = json!({"checks": checks, "passed": checks.len() - failed, "failed": failed});
    Ok(Executed { command: "selftest", params: null_params(), result, negative_found: false, failed: failed > 0 })
}
