use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::SeriesError;

/// Below this order the product is evaluated sequentially; above it each
/// output coefficient is an independent parallel task.
const PARALLEL_THRESHOLD: usize = 512;

/// A truncated power series `Σ_{n=0}^{N} c_n q^n` with exact integer
/// coefficients. The order `N` is inclusive, so there are always `N + 1`
/// stored coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    /// Wraps a coefficient vector; its length fixes the order.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        Ok(Self { coeffs })
    }

    /// Builds a series of the given order from machine integers, padding with
    /// zeros or dropping terms beyond the order.
    pub fn from_i64(values: &[i64], order: usize) -> Self {
        let mut coeffs: Vec<BigInt> = values.iter().take(order + 1).map(|&v| BigInt::from(v)).collect();
        coeffs.resize(order + 1, BigInt::zero());
        Self { coeffs }
    }

    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![BigInt::zero(); order + 1] }
    }

    /// The constant series `1` of the given order.
    pub fn one(order: usize) -> Self {
        Self::monomial(BigInt::one(), 0, order)
    }

    /// `c·q^e` truncated to `order` (the zero series when `e > order`).
    pub fn monomial(c: BigInt, e: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if e <= order {
            s.coeffs[e] = c;
        }
        s
    }

    /// Truncation order `N` (inclusive).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// All coefficients, index `n` holding the coefficient of `q^n`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Consumes the series, returning its coefficient vector.
    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^n`.
    ///
    /// # Panics
    ///
    /// If `n` exceeds the order.
    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    /// Adds `c` to the coefficient of `q^n`; terms beyond the order are dropped.
    pub fn add_term(&mut self, n: usize, c: &BigInt) {
        if let Some(slot) = self.coeffs.get_mut(n) {
            *slot += c;
        }
    }

    /// The same series truncated to `min(order, self.order())`.
    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order()) + 1;
        Self { coeffs: self.coeffs[..keep].to_vec() }
    }

    /// Multiplies by `q^e`, keeping the order.
    pub fn shift(&self, e: usize) -> Self {
        let n = self.coeffs.len();
        let mut coeffs = vec![BigInt::zero(); n];
        if e < n {
            coeffs[e..].clone_from_slice(&self.coeffs[..n - e]);
        }
        Self { coeffs }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigInt) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// In-place multiplication by `1 − q^a` (`a ≥ 1`).
    pub fn mul_one_minus_q_pow(&mut self, a: usize) {
        assert!(a >= 1, "factor exponent must be positive");
        for n in (a..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0] -= &lo[n - a];
        }
    }

    /// In-place division by `1 − q^a` (`a ≥ 1`), i.e. multiplication by the
    /// geometric series `Σ q^{ja}`. Runs in `O(N)` additions.
    pub fn div_one_minus_q_pow(&mut self, a: usize) {
        assert!(a >= 1, "factor exponent must be positive");
        for n in a..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0] += &lo[n - a];
        }
    }

    /// Index and value of the smallest coefficient in `lo..=hi`.
    pub fn min_in(&self, lo: usize, hi: usize) -> (usize, &BigInt) {
        let mut best = lo;
        for n in lo..=hi {
            if self.coeffs[n] < self.coeffs[best] {
                best = n;
            }
        }
        (best, &self.coeffs[best])
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        let len = self.coeffs.len().min(other.coeffs.len());
        Self { coeffs: (0..len).map(|i| f(&self.coeffs[i], &other.coeffs[i])).collect() }
    }
}

/// Truncated product: coefficient `n` is `Σ_{i=0}^{n} A_i B_{n−i}` for
/// `n ≤ min(order A, order B)`.
///
/// Large products are evaluated with one parallel task per output
/// coefficient; integer addition is exact, so the result does not depend on
/// scheduling or on the number of worker threads.
pub fn mul_truncated(a: &Series, b: &Series) -> Series {
    let order = a.order().min(b.order());
    let term = |n: usize| -> BigInt {
        let mut acc = BigInt::zero();
        for i in 0..=n {
            let (x, y) = (&a.coeffs[i], &b.coeffs[n - i]);
            if !x.is_zero() && !y.is_zero() {
                acc += x * y;
            }
        }
        acc
    };
    let coeffs = if order >= PARALLEL_THRESHOLD {
        (0..=order).into_par_iter().map(term).collect()
    } else {
        (0..=order).map(term).collect()
    };
    Series { coeffs }
}

/// Reciprocal of a series whose constant term is `±1`, by the recurrence
/// `R_n = −A_0^{−1} Σ_{i=1}^{n} A_i R_{n−i}`.
pub fn inverse_truncated(a: &Series) -> Result<Series, SeriesError> {
    let a0 = &a.coeffs[0];
    if !(a0.abs().is_one()) {
        return Err(SeriesError::NonUnitConstantTerm(a0.clone()));
    }
    let negate = a0.is_positive();
    let order = a.order();
    // Sparse inputs (products of a few binomials, theta sums) are common:
    // iterate only over the nonzero coefficients of A.
    let support: Vec<usize> = (1..=order).filter(|&i| !a.coeffs[i].is_zero()).collect();
    let mut r: Vec<BigInt> = Vec::with_capacity(order + 1);
    r.push(a0.clone()); // 1/a0 == a0 for a0 = ±1
    for n in 1..=order {
        let mut acc = BigInt::zero();
        for &i in support.iter().take_while(|&&i| i <= n) {
            acc += &a.coeffs[i] * &r[n - i];
        }
        r.push(if negate { -acc } else { acc });
    }
    Ok(Series { coeffs: r })
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        self.zip_with(rhs, |x, y| x + y)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self.zip_with(rhs, |x, y| x - y)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|x| -x).collect() }
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        mul_truncated(self, rhs)
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series(order={}, {:?})", self.order(), self.coeffs)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}q")?,
                _ => write!(f, "{c}q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_pair_product() {
        let a = Series::from_i64(&[1, 1], 2);
        let b = Series::from_i64(&[1, -1], 2);
        assert_eq!(mul_truncated(&a, &b), Series::from_i64(&[1, 0, -1], 2));
    }

    #[test]
    fn geometric_series_telescopes() {
        let geo = Series::from_i64(&[1; 11], 10);
        let one_minus_q = Series::from_i64(&[1, -1], 10);
        assert_eq!(&geo * &one_minus_q, Series::one(10));
    }

    #[test]
    fn product_truncates_to_smaller_order() {
        let a = Series::from_i64(&[1, 2, 3, 4], 3);
        let b = Series::from_i64(&[1, 1], 1);
        assert_eq!((&a * &b).order(), 1);
        assert_eq!((&a + &b).order(), 1);
    }

    #[test]
    fn inverse_of_one_minus_q() {
        let inv = inverse_truncated(&Series::from_i64(&[1, -1], 5)).unwrap();
        assert_eq!(inv, Series::from_i64(&[1; 6], 5));
    }

    #[test]
    fn inverse_with_negative_unit() {
        let a = Series::from_i64(&[-1, 3, 0, 2], 8);
        let inv = inverse_truncated(&a).unwrap();
        assert_eq!(&a * &inv, Series::one(8));
    }

    #[test]
    fn non_unit_constant_rejected() {
        let err = inverse_truncated(&Series::from_i64(&[2, 1], 4)).unwrap_err();
        assert_eq!(err, SeriesError::NonUnitConstantTerm(BigInt::from(2)));
        assert!(inverse_truncated(&Series::zero(3)).is_err());
    }

    #[test]
    fn binomial_in_place_ops_are_inverse() {
        let mut s = Series::from_i64(&[3, -1, 4, 1, -5, 9, 2, 6], 7);
        let orig = s.clone();
        s.div_one_minus_q_pow(3);
        s.mul_one_minus_q_pow(3);
        assert_eq!(s, orig);
    }

    #[test]
    fn shift_and_monomial() {
        let s = Series::from_i64(&[1, 2, 3], 4).shift(2);
        assert_eq!(s, Series::from_i64(&[0, 0, 1, 2, 3], 4));
        assert_eq!(Series::monomial(BigInt::from(7), 9, 4), Series::zero(4));
    }

    #[test]
    fn parallel_product_matches_sequential_reference() {
        let n = PARALLEL_THRESHOLD + 40;
        let a = Series::from_i64(&(0..=n as i64).map(|i| (i * 7919) % 23 - 11).collect::<Vec<_>>(), n);
        let b = Series::from_i64(&(0..=n as i64).map(|i| (i * 104729) % 17 - 8).collect::<Vec<_>>(), n);
        let fast = mul_truncated(&a, &b);
        for k in [0, 1, 100, n] {
            let slow: BigInt = (0..=k).map(|i| a.coeff(i) * b.coeff(k - i)).sum();
            assert_eq!(fast.coeff(k), &slow);
        }
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(Series::from_i64(&[1, 0, -1], 2).to_string(), "1 + -1q^2 + O(q^3)");
    }
}
