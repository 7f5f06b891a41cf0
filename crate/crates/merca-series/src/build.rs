use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use partitions::count_table;
use rayon::prelude::*;
use series_core::Series;

use crate::{t_exponents, Case, MercaError, MercaParams};

/// Below this order the sparse product runs sequentially.
const PARALLEL_THRESHOLD: usize = 2048;

/// Denominator of a series built from the common numerator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DenomKind {
    /// `(q^s, q^{r−s}; q^r)_∞`, with the numerator shifted by
    /// `q^{rk(k+1)/2−sk}` so that coefficients match the conjecture index for
    /// index.
    Full,
    /// `(1−q^s)(1−q^{r−s})(1−q^{r+s})(1−q^{2r−s})`.
    Four,
    /// `(1−q^s)(1−q^{r−s})(1−q^{r+s})`; requires `2 | s`.
    ThreePlus,
    /// `(1−q^s)(1−q^{r−s})(1−q^{2r−s})`; requires `s` odd.
    ThreeMinus,
    /// `(q^s, q^{r−s}; q^r)_∞` without the shift.
    H,
}

impl DenomKind {
    /// Stable lowercase name used in reports.
    pub fn name(self) -> &'static str {
        match self {
            DenomKind::Full => "full",
            DenomKind::Four => "four",
            DenomKind::ThreePlus => "three-plus",
            DenomKind::ThreeMinus => "three-minus",
            DenomKind::H => "h",
        }
    }
}

/// Nonzero numerator terms `(exponent, coefficient)` up to `order`, in
/// increasing exponent order. Coinciding exponents are merged (this happens
/// only for `(r, s) = (2, 1)`, where `t₂ = t₃`).
pub fn numerator_terms(params: &MercaParams, order: usize) -> Vec<(usize, i64)> {
    let mut terms: Vec<(usize, i64)> = Vec::new();
    for j in 0u64.. {
        let t = t_exponents(params, j);
        if t.t1 > order as u128 {
            break;
        }
        for (e, c) in t.as_array().into_iter().zip([1, -1, -1, 1]) {
            if e <= order as u128 {
                terms.push((e as usize, c));
            }
        }
    }
    merge_terms(terms)
}

/// Sorts terms by exponent, adds coefficients of equal exponents and drops
/// zeros.
pub(crate) fn merge_terms(mut terms: Vec<(usize, i64)>) -> Vec<(usize, i64)> {
    terms.sort_unstable_by_key(|&(e, _)| e);
    let mut merged: Vec<(usize, i64)> = Vec::with_capacity(terms.len());
    for (e, c) in terms {
        match merged.last_mut() {
            Some(last) if last.0 == e => last.1 += c,
            _ => merged.push((e, c)),
        }
    }
    merged.retain(|&(_, c)| c != 0);
    merged
}

/// `Σ_{j≥0} (q^{t₁,j} − q^{t₂,j} − q^{t₃,j} + q^{t₄,j})` truncated to `order`.
pub fn numerator_series(params: &MercaParams, order: usize) -> Series {
    let mut series = Series::zero(order);
    for (e, c) in numerator_terms(params, order) {
        series.add_term(e, &BigInt::from(c));
    }
    series
}

/// Part sizes (with multiplicity) whose reciprocal product is the denominator
/// of `kind`, restricted to parts `≤ order`.
pub fn denominator_parts(params: &MercaParams, kind: DenomKind, order: usize) -> Result<Vec<u64>, MercaError> {
    let (r, s) = (params.r(), params.s());
    let parts = match kind {
        DenomKind::Four => vec![s, r - s, r + s, 2 * r - s],
        DenomKind::ThreePlus => {
            if s % 2 != 0 {
                return Err(MercaError::CaseMismatch(format!("three-plus denominator needs s even, got s={s}")));
            }
            vec![s, r - s, r + s]
        }
        DenomKind::ThreeMinus => {
            if s % 2 == 0 {
                return Err(MercaError::CaseMismatch(format!("three-minus denominator needs s odd, got s={s}")));
            }
            vec![s, r - s, 2 * r - s]
        }
        DenomKind::Full | DenomKind::H => progression_parts(&[s, r - s], r, order),
    };
    Ok(parts.into_iter().filter(|&a| a as usize <= order).collect())
}

/// All `a + mr ≤ order` for each start `a`.
fn progression_parts(starts: &[u64], step: u64, order: usize) -> Vec<u64> {
    starts.iter().flat_map(|&a| (a..=order as u64).step_by(step as usize)).collect()
}

/// The numerator divided by the denominator of `kind`, truncated to `order`.
///
/// The reciprocal denominator is a partition-count table with nonnegative
/// coefficients, so the series is the sparse signed sum of shifted copies of
/// that table.
pub fn build_series(params: &MercaParams, order: usize, kind: DenomKind) -> Result<Series, MercaError> {
    let parts = denominator_parts(params, kind, order)?;
    if kind == DenomKind::Full {
        let shift = params.leading_shift();
        if shift > order as u128 {
            return Ok(Series::zero(order));
        }
        let shift = shift as usize;
        let inner = order - shift;
        let table = count_table(&parts, inner);
        let mut coeffs = vec![BigInt::zero(); shift];
        coeffs.extend(sparse_product(&numerator_terms(params, inner), &table).into_coeffs());
        return Ok(Series::from_coeffs(coeffs).expect("nonempty"));
    }
    let table = count_table(&parts, order);
    Ok(sparse_product(&numerator_terms(params, order), &table))
}

/// `Σ c·q^e·T(q)` truncated to the order of `table`, for sparse terms sorted
/// by exponent. Coefficients are computed independently, so the parallel and
/// sequential evaluations agree exactly.
pub(crate) fn sparse_product(terms: &[(usize, i64)], table: &[BigUint]) -> Series {
    let table: Vec<BigInt> = table.iter().map(|c| BigInt::from(c.clone())).collect();
    let coeff = |n: usize| {
        let mut acc = BigInt::zero();
        for &(e, c) in terms.iter().take_while(|&&(e, _)| e <= n) {
            match c {
                1 => acc += &table[n - e],
                -1 => acc -= &table[n - e],
                _ => acc += &table[n - e] * c,
            }
        }
        acc
    };
    let coeffs: Vec<BigInt> = if table.len() > PARALLEL_THRESHOLD {
        (0..table.len()).into_par_iter().with_min_len(256).map(coeff).collect()
    } else {
        (0..table.len()).map(coeff).collect()
    };
    Series::from_coeffs(coeffs).expect("table has at least one entry")
}

/// Finite factors and `(α, β)` of the case's product decomposition
/// `(q^s,q^{r−s};q^r)_∞ = (q^s;q^r)_α (q^{r−s};q^r)_β · tail`, where the tail
/// is `G_{s,r}` (CASE1), `j_{s,r}` (CASE2) or `J_{r−s,r}` (CASE3), and
/// `(α, β) = (2,2), (2,1), (1,2)` respectively.
pub fn case_decomposition(params: &MercaParams) -> Result<(Vec<u64>, (u64, u64)), MercaError> {
    let (r, s) = (params.r(), params.s());
    match params.case() {
        Case::Case1 => Ok((vec![s, r - s, r + s, 2 * r - s], (2, 2))),
        Case::Case2 => Ok((vec![s, r - s, r + s], (2, 1))),
        Case::Case3 => Ok((vec![s, r - s, 2 * r - s], (1, 2))),
        Case::SpecialR2S => Err(MercaError::CaseMismatch("(r,s) = (2,1) has no coprime decomposition".into())),
    }
}
