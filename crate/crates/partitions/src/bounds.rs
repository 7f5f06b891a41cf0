//! Quasi-polynomial sandwich bounds for partitions into the part sets
//! `{s, r−s, r+s, 2r−s}` (four parts) and `{s, r−s, r+s}` / `{s, r−s, 2r−s}`
//! (three parts).
//!
//! All constants are exact rationals; nothing here is ever rounded.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::PartitionError;

/// Largest `r` accepted: every intermediate then fits comfortably in `i128`.
const MAX_R: i128 = 1_000_000;

fn q(v: i128) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn frac(num: i128, den: i128) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn validate(r: u64, s: u64) -> Result<(i128, i128), PartitionError> {
    let (ri, si) = (r as i128, s as i128);
    if s == 0 || 2 * s >= r || r.gcd(&s) != 1 || ri > MAX_R {
        return Err(PartitionError::BadParams(format!(
            "need 1 ≤ s < r/2, gcd(r, s) = 1, r ≤ {MAX_R}; got r={r}, s={s}"
        )));
    }
    Ok((ri, si))
}

fn pairwise_coprime(parts: &[i128]) -> bool {
    parts.iter().enumerate().all(|(i, a)| parts[i + 1..].iter().all(|b| a.gcd(b) == 1))
}

fn poly_at(coeffs: &[BigRational], n: &BigRational) -> BigRational {
    coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * n + c)
}

/// Indices in `lo..=hi` where `lower(n) ≤ table[n] ≤ upper(n)` fails; the
/// comparison is strict when `strict` is set.
fn violations(
    table: &[BigUint],
    lo: usize,
    hi: usize,
    strict: bool,
    lower: impl Fn(&BigRational) -> BigRational,
    upper: impl Fn(&BigRational) -> BigRational,
) -> Vec<usize> {
    (lo..=hi)
        .filter(|&n| {
            let x = q(n as i128);
            let count = BigRational::from_integer(BigInt::from(table[n].clone()));
            let (l, u) = (lower(&x), upper(&x));
            if strict {
                !(l < count && count < u)
            } else {
                !(l <= count && count <= u)
            }
        })
        .collect()
}

/// Bound data for `p₄(n)`, partitions into `{s, r−s, r+s, 2r−s}`:
/// `P₃(n) + C₄ᵈ(Δ−1) < p₄(n) < P₃(n) + C₄ᵘ(Δ−1)` for all `n ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct P4BoundData {
    pub r: u64,
    pub s: u64,
    /// `Δ = s(r−s)(r+s)(2r−s)`.
    pub delta: BigInt,
    /// Coefficients of `P₃(n)`, lowest degree first.
    pub p3_coeffs: [BigRational; 4],
    pub ad: BigRational,
    pub bd: BigRational,
    pub au: BigRational,
    pub bu: BigRational,
    /// `C₄ᵈ(Δ−1)`.
    pub c4d_end: BigRational,
    /// `C₄ᵘ(Δ−1)`.
    pub c4u_end: BigRational,
    /// `J = C₄ᵘ(Δ−1) − C₄ᵈ(Δ−1)`.
    pub j: BigRational,
}

impl P4BoundData {
    pub fn parts(&self) -> [u64; 4] {
        let (r, s) = (self.r, self.s);
        [s, r - s, r + s, 2 * r - s]
    }

    /// `P₃(n)`.
    pub fn p3(&self, n: &BigRational) -> BigRational {
        poly_at(&self.p3_coeffs, n)
    }

    pub fn lower(&self, n: &BigRational) -> BigRational {
        self.p3(n) + &self.c4d_end
    }

    pub fn upper(&self, n: &BigRational) -> BigRational {
        self.p3(n) + &self.c4u_end
    }

    /// Indices in `lo..=hi` where the strict sandwich fails against an exact
    /// table of `p₄`.
    pub fn sandwich_violations(&self, table: &[BigUint], lo: usize, hi: usize) -> Vec<usize> {
        violations(table, lo, hi, true, |n| self.lower(n), |n| self.upper(n))
    }
}

/// Exact bound data for the four-part count. Requires `1 ≤ s < r/2`,
/// `gcd(r,s) = 1` and a pairwise coprime part set, which holds exactly when
/// `r` is even and `3 ∤ r+s`.
pub fn p4_bound_data(r: u64, s: u64) -> Result<P4BoundData, PartitionError> {
    let (r, s) = validate(r, s)?;
    let parts = [s, r - s, r + s, 2 * r - s];
    if !pairwise_coprime(&parts) {
        return Err(PartitionError::CaseMismatch(format!("parts {parts:?} are not pairwise coprime")));
    }
    let delta = s * (r - s) * (r + s) * (2 * r - s);
    let d6 = 6 * delta;
    // P₃(n) = (n³ + 6n²r + n(21r² + 2rs − 2s²)/2) / (6Δ)
    let p3_coeffs = [q(0), frac(21 * r * r + 2 * r * s - 2 * s * s, 2 * d6), frac(6 * r, d6), frac(1, d6)];
    let ad = q(-6 * r - 6 * r * r + 6 * r * s - 6 * s * s);
    let au = q(-6 * r + 6 * r * r + 6 * r * s - 6 * s * s);
    let tail = 12 * r * r * r * s - 6 * r * r * s * s - 12 * r * s * s * s + 6 * s * s * s * s;
    let bd = frac(-2 - 33 * r * r + 14 * r * s - 14 * s * s + 2 * tail, 2);
    let bu = frac(-2 - 9 * r * r + 10 * r * s - 10 * s * s + 2 * tail, 2);
    let end = q(delta - 1);
    let c4 = |a: &BigRational, b: &BigRational| (a * &end * &end + b * &end + q(d6)) / q(d6);
    let c4d_end = c4(&ad, &bd);
    let c4u_end = c4(&au, &bu);
    let j = &c4u_end - &c4d_end;
    Ok(P4BoundData {
        r: r as u64,
        s: s as u64,
        delta: BigInt::from(delta),
        p3_coeffs,
        ad,
        bd,
        au,
        bu,
        c4d_end,
        c4u_end,
        j,
    })
}

/// Which three-part set: `PLUS = {s, r−s, r+s}` (used when `2 | s`) or
/// `MINUS = {s, r−s, 2r−s}` (used when `s` is odd and the four-part set is
/// not pairwise coprime).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ThreePartVariant {
    Plus,
    Minus,
}

/// Bound data for `p₃(n)`: `P₂(n) + C₃ᵈ ≤ p₃(n) ≤ P₂(n) + C₃ᵘ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct P3BoundData {
    pub r: u64,
    pub s: u64,
    pub variant: ThreePartVariant,
    /// `Δ₁ = s(r−s)(r+s)` or `Δ₂ = s(r−s)(2r−s)`.
    pub delta: BigInt,
    /// Coefficients of `P₂(n)`, lowest degree first.
    pub p2_coeffs: [BigRational; 3],
    pub c3u: BigRational,
    pub c3d: BigRational,
}

impl P3BoundData {
    pub fn parts(&self) -> [u64; 3] {
        let (r, s) = (self.r, self.s);
        match self.variant {
            ThreePartVariant::Plus => [s, r - s, r + s],
            ThreePartVariant::Minus => [s, r - s, 2 * r - s],
        }
    }

    /// `P₂(n)`.
    pub fn p2(&self, n: &BigRational) -> BigRational {
        poly_at(&self.p2_coeffs, n)
    }

    pub fn lower(&self, n: &BigRational) -> BigRational {
        self.p2(n) + &self.c3d
    }

    pub fn upper(&self, n: &BigRational) -> BigRational {
        self.p2(n) + &self.c3u
    }

    /// Indices in `lo..=hi` where the (non-strict) sandwich fails against an
    /// exact table of `p₃`.
    pub fn sandwich_violations(&self, table: &[BigUint], lo: usize, hi: usize) -> Vec<usize> {
        violations(table, lo, hi, false, |n| self.lower(n), |n| self.upper(n))
    }
}

/// Exact bound data for the three-part counts. `Plus` requires `2 | s`,
/// `Minus` requires `s` odd; either way the three parts are pairwise coprime.
pub fn p3_bound_data(r: u64, s: u64, variant: ThreePartVariant) -> Result<P3BoundData, PartitionError> {
    let (r, s) = validate(r, s)?;
    let (p2_coeffs, c3u, c3d, delta) = match variant {
        ThreePartVariant::Plus => {
            if s % 2 != 0 {
                return Err(PartitionError::CaseMismatch(format!("PLUS bounds need s even, got s={s}")));
            }
            let d = s * (r - s) * (r + s);
            let d2 = 2 * d;
            let p2 = [frac(2 * r + s - 1, d2), frac(2 * r + s, d2), frac(1, d2)];
            let (r2, r3) = (r * r, r * r * r);
            let (s2, s3, s4, s5) = (s * s, s * s * s, s * s * s * s, s * s * s * s * s);
            let cu = r3 * s * (2 * s - 1)
                + 2 * r2 * s * (1 - 2 * s2)
                + r * (-2 * s4 + s3 - 2 * s - 1)
                + 2 * s * (s4 - 2 * s2 + 2 * s - 1)
                + 1;
            let cd = r3 * (-2 * s2 - s) + 2 * r2 * s3 + r * (2 * s4 + s3 + 2 * s - 1) - 2 * s5 - 2 * s2 - s + 1;
            (p2, frac(cu, d2), frac(cd, d2), d)
        }
        ThreePartVariant::Minus => {
            if s % 2 == 0 {
                return Err(PartitionError::CaseMismatch(format!("MINUS bounds need s odd, got s={s}")));
            }
            let d = s * (r - s) * (2 * r - s);
            let d2 = 2 * d;
            let p2 = [frac(-1 + 3 * r - s, d2), frac(3 * r - s, d2), frac(1, d2)];
            let (r2, r3) = (r * r, r * r * r);
            let (s2, s3, s4, s5) = (s * s, s * s * s, s * s * s * s, s * s * s * s * s);
            let cu = r3 * (4 * s2 - 2 * s) + r2 * (-10 * s3 + 3 * s2 + 4 * s) + r * (8 * s4 - s3 - 6 * s2 - 2 * s - 2)
                - 2 * s5
                + 2 * s3
                + 2 * s2
                + s
                + 1;
            let cd = r3 * (-4 * s2 - 2 * s) + r2 * (10 * s3 + 3 * s2) + r * (-8 * s4 - s3 + 2 * s - 2) + 2 * s5
                - 2 * s2
                + s
                + 1;
            (p2, frac(cu, d2), frac(cd, d2), d)
        }
    };
    Ok(P3BoundData { r: r as u64, s: s as u64, variant, delta: BigInt::from(delta), p2_coeffs, c3u, c3d })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_part_delta() {
        let d = p4_bound_data(4, 1).unwrap();
        assert_eq!(d.delta, BigInt::from(105));
        assert!(d.c4d_end < d.c4u_end);
        assert!(d.j > BigRational::zero());
        // P₃ leading coefficient 1/(6Δ)
        assert_eq!(d.p3_coeffs[3], frac(1, 630));
    }

    #[test]
    fn four_part_case_mismatch() {
        assert!(matches!(p4_bound_data(5, 2), Err(PartitionError::CaseMismatch(_))));
        assert!(matches!(p4_bound_data(9, 2), Err(PartitionError::CaseMismatch(_))));
        assert!(matches!(p4_bound_data(6, 3), Err(PartitionError::BadParams(_))));
    }

    #[test]
    fn three_part_deltas() {
        let plus = p3_bound_data(9, 2, ThreePartVariant::Plus).unwrap();
        assert_eq!(plus.delta, BigInt::from(154));
        assert!(plus.c3d <= plus.c3u);
        let minus = p3_bound_data(3, 1, ThreePartVariant::Minus).unwrap();
        assert_eq!(minus.delta, BigInt::from(10));
        assert_eq!(minus.parts(), [1, 2, 5]);
    }

    #[test]
    fn three_part_parity_checks() {
        assert!(matches!(p3_bound_data(9, 1, ThreePartVariant::Plus), Err(PartitionError::CaseMismatch(_))));
        assert!(matches!(p3_bound_data(9, 2, ThreePartVariant::Minus), Err(PartitionError::CaseMismatch(_))));
        assert!(p3_bound_data(8, 1, ThreePartVariant::Minus).is_ok());
    }
}
