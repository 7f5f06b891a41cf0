use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use series_core::Series;

use crate::MercaError;

/// Exact sign summary of the coefficients in `lo..=hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub lo: usize,
    pub hi: usize,
    pub min_value: BigInt,
    pub min_index: usize,
    pub first_negative: Option<usize>,
    pub negative_count: usize,
    pub zero_count: usize,
}

impl ScanReport {
    /// Whether every scanned coefficient is `≥ 0`.
    pub fn is_nonnegative(&self) -> bool {
        self.first_negative.is_none()
    }
}

/// Scans `lo..=hi` of `series`; the minimum index is the first one attaining
/// the minimum.
pub fn scan(series: &Series, lo: usize, hi: usize) -> Result<ScanReport, MercaError> {
    if lo > hi || hi > series.order() {
        return Err(MercaError::Range { lo, hi, order: series.order() });
    }
    let (min_index, min_value) = series.min_in(lo, hi);
    let mut first_negative = None;
    let mut negative_count = 0;
    let mut zero_count = 0;
    for (n, c) in series.coeffs().iter().enumerate().take(hi + 1).skip(lo) {
        if c.is_negative() {
            negative_count += 1;
            first_negative.get_or_insert(n);
        } else if c.is_zero() {
            zero_count += 1;
        }
    }
    Ok(ScanReport { lo, hi, min_value: min_value.clone(), min_index, first_negative, negative_count, zero_count })
}
