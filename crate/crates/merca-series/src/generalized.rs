use num_bigint::BigInt;
use num_traits::Zero;
use partitions::count_table;
use series_core::Series;

use crate::build::{merge_terms, sparse_product};
use crate::MercaError;

/// A series `Σ_{e ≥ −offset} c_e q^e` truncated at `q^N`, stored with the
/// coefficient of `q^e` at index `e + offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedSeries {
    pub offset: usize,
    pub series: Series,
}

impl GeneralizedSeries {
    /// Coefficient of `q^e` (zero below the stored range).
    pub fn coeff(&self, e: i64) -> BigInt {
        let idx = e + self.offset as i64;
        if idx < 0 || idx as usize > self.series.order() {
            return BigInt::zero();
        }
        self.series.coeff(idx as usize).clone()
    }

    /// Largest stored exponent `N`.
    pub fn order(&self) -> usize {
        self.series.order() - self.offset
    }

    /// The coefficients of `q^0 ..= q^N`.
    pub fn nonnegative_part(&self) -> Series {
        Series::from_coeffs(self.series.coeffs()[self.offset..].to_vec()).expect("nonempty")
    }
}

/// `(−1)^{k−1} (Σ_{j=−k+1}^{k} − Σ_{j=−ℓ+1}^{ℓ}) (−1)^j q^{Rj(j+1)/2+Sj} / (q^S, q^{R−S}, q^R; q^R)_∞`
/// truncated at `q^N`.
///
/// For `j = −m` the exponent is `m(R(m−1)/2 − S)`, which is negative when
/// `S > R(m−1)/2` (always for `ℓ = 1`); such terms are kept and the result
/// records how far below `q^0` it starts.
pub fn generalized_series(
    big_r: u64,
    big_s: u64,
    k: u64,
    ell: u64,
    order: usize,
) -> Result<GeneralizedSeries, MercaError> {
    if big_s == 0 || big_s >= big_r {
        return Err(MercaError::BadParams(format!("need 1 ≤ S < R, got R={big_r}, S={big_s}")));
    }
    if ell == 0 || k <= ell || k < 4 {
        return Err(MercaError::BadParams(format!("need k > ℓ ≥ 1 and k ≥ 4, got k={k}, ℓ={ell}")));
    }
    let (r, s) = (big_r as i128, big_s as i128);
    let (k, ell) = (k as i128, ell as i128);
    let sign = if (k - 1) % 2 == 0 { 1 } else { -1 };
    let raw: Vec<(i128, i64)> = (-k + 1..=-ell)
        .chain(ell + 1..=k)
        .map(|j| (r * j * (j + 1) / 2 + s * j, if j.rem_euclid(2) == 0 { sign } else { -sign }))
        .collect();
    let offset = raw.iter().map(|&(e, _)| (-e).max(0)).max().unwrap_or(0) as usize;
    let len = order + offset;
    let mut terms: Vec<(usize, i64)> = Vec::new();
    for (e, c) in raw {
        let idx = e + offset as i128;
        if idx <= len as i128 {
            terms.push((idx as usize, c));
        }
    }
    let merged = merge_terms(terms);
    let parts: Vec<u64> =
        [big_s, big_r - big_s, big_r].iter().flat_map(|&a| (a..=len as u64).step_by(big_r as usize)).collect();
    let table = count_table(&parts, len);
    Ok(GeneralizedSeries { offset, series: sparse_product(&merged, &table) })
}
