use astro_float::BigFloat;

use crate::real::{bits_for, Real, RM};
use crate::AsymptoticError;

/// Decimal digits of `e^z`, an upper bound on the size of `I_v(z)`.
fn magnitude_digits(z: f64) -> u32 {
    (z.max(0.0) * std::f64::consts::LOG10_E).ceil() as u32 + 1
}

/// `I_v(z) = Σ_{m≥0} (z/2)^{2m+|v|} / (m!(m+|v|)!)` for integer `v` and
/// `z ≥ 0`, with absolute error below `10^{−digits}`.
///
/// The working precision covers `digits` fractional digits on top of the
/// `e^z` magnitude of the result. Summation stops once the term ratio
/// `(z/2)²/((m+1)(m+1+|v|))` is at most `1/2` (it decreases in `m`, so the
/// tail is at most twice the next term) and twice the next term is below
/// `10^{−digits−1}`.
pub fn bessel_i(v: i64, z: &BigFloat, digits: u32) -> Result<Real, AsymptoticError> {
    if digits < 15 {
        return Err(AsymptoticError::BadParams(format!("need at least 15 digits, got {digits}")));
    }
    if z.is_negative() || z.is_nan() || z.is_inf() {
        return Err(AsymptoticError::BadParams("need a finite z ≥ 0".into()));
    }
    let z_approx = Real::new(z.clone(), 20).to_f64();
    let p = bits_for(digits + magnitude_digits(z_approx) + 10);
    let order = v.unsigned_abs();
    let half_z = z.div(&BigFloat::from_u64(2, p), p, RM);
    let x = half_z.mul(&half_z, p, RM);
    let mut term = half_z.powi(order as usize, p, RM);
    for i in 2..=order {
        term = term.div(&BigFloat::from_u64(i, p), p, RM);
    }
    let eps = BigFloat::from_u64(10, p).powi(digits as usize + 1, p, RM).reciprocal(p, RM);
    let half = BigFloat::from_f64(0.5, p);
    let two = BigFloat::from_u64(2, p);
    let mut sum = BigFloat::from_u64(0, p);
    let mut m = 0u64;
    loop {
        sum = sum.add(&term, p, RM);
        let denom = BigFloat::from_u64((m + 1) * (m + 1 + order), p);
        let ratio = x.div(&denom, p, RM);
        term = term.mul(&ratio, p, RM);
        m += 1;
        let small_ratio = ratio.cmp(&half).is_some_and(|c| c <= 0);
        if small_ratio && term.mul(&two, p, RM).cmp(&eps).is_some_and(|c| c < 0) {
            break;
        }
    }
    Ok(Real::new(sum, digits))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn at(v: i64, z: u64) -> f64 {
        bessel_i(v, &BigFloat::from_u64(z, 256), 30).unwrap().to_f64()
    }

    #[test]
    fn trivial_values() {
        assert_eq!(at(5, 0), 0.0);
        assert_eq!(at(0, 0), 1.0);
        assert_eq!(at(-5, 7), at(5, 7));
    }

    #[test]
    fn low_digit_requests_are_rejected() {
        assert!(bessel_i(0, &BigFloat::from_u64(1, 64), 10).is_err());
    }
}
