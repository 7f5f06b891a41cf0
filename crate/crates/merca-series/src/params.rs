use num_integer::Integer;

use crate::MercaError;

/// Which reduction of the full series applies to a normalised pair `(r, s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    /// `{s, r−s, r+s, 2r−s}` pairwise coprime (`r` even, `3 ∤ r+s`): four-part
    /// denominator, tail `g_{s,r}`.
    Case1,
    /// Not pairwise coprime and `s` even: three parts `{s, r−s, r+s}`, tail
    /// `j_{s,r}`.
    Case2,
    /// Not pairwise coprime and `s` odd: three parts `{s, r−s, 2r−s}`, tail
    /// `J_{r−s,r}`.
    Case3,
    /// `R = 2S`, normalised to `(r, s) = (2, 1)`.
    SpecialR2S,
}

impl Case {
    /// Stable lowercase name used in reports.
    pub fn name(self) -> &'static str {
        match self {
            Case::Case1 => "case1",
            Case::Case2 => "case2",
            Case::Case3 => "case3",
            Case::SpecialR2S => "special_r2s",
        }
    }

    /// Case of a normalised pair with `1 ≤ s < r/2`, or `(2, 1)`.
    pub fn of(r: u64, s: u64) -> Case {
        if (r, s) == (2, 1) {
            Case::SpecialR2S
        } else if r % 2 == 0 && (r + s) % 3 != 0 {
            Case::Case1
        } else if s % 2 == 0 {
            Case::Case2
        } else {
            Case::Case3
        }
    }
}

/// Normalised parameters: `gcd(r, s) = 1`, `1 ≤ s < r/2` (or `(2, 1)`), `k ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MercaParams {
    r: u64,
    s: u64,
    k: u64,
    case: Case,
}

/// Largest accepted `r`; keeps every exponent computation well inside `u128`.
pub const MAX_R: u64 = 1_000_000;

impl MercaParams {
    /// Validates an already normalised triple.
    pub fn new(r: u64, s: u64, k: u64) -> Result<Self, MercaError> {
        if k == 0 {
            return Err(MercaError::BadParams("k must be at least 1".into()));
        }
        if r > MAX_R {
            return Err(MercaError::BadParams(format!("r must be at most {MAX_R}")));
        }
        if s == 0 || r.gcd(&s) != 1 || !(2 * s < r || (r, s) == (2, 1)) {
            return Err(MercaError::BadParams(format!(
                "need gcd(r,s) = 1 and 1 ≤ s < r/2 (or (r,s) = (2,1)), got ({r},{s})"
            )));
        }
        Ok(Self { r, s, k, case: Case::of(r, s) })
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn case(&self) -> Case {
        self.case
    }

    /// Same `(r, s)` with a different `k`.
    pub fn with_k(&self, k: u64) -> Result<Self, MercaError> {
        Self::new(self.r, self.s, k)
    }

    /// Exponent `rk(k+1)/2 − sk` of the leading monomial of the full series.
    pub fn leading_shift(&self) -> u128 {
        let (r, s, k) = (self.r as u128, self.s as u128, self.k as u128);
        r * k * (k + 1) / 2 - s * k
    }
}

/// Reduces `(R, S, k)` to normalised parameters: divides by `gcd(R, S)`,
/// replaces `s` by `r − s` when `s > r/2`, and maps `R = 2S` to `(2, 1)`.
pub fn normalize_params(big_r: u64, big_s: u64, k: u64) -> Result<MercaParams, MercaError> {
    if big_s == 0 || big_s >= big_r {
        return Err(MercaError::BadParams(format!("need 1 ≤ S < R, got R={big_r}, S={big_s}")));
    }
    let g = big_r.gcd(&big_s);
    let (r, mut s) = (big_r / g, big_s / g);
    if 2 * s > r {
        s = r - s;
    }
    MercaParams::new(r, s, k)
}

/// The four exponents of block `j` of the numerator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TExponents {
    pub t1: u128,
    pub t2: u128,
    pub t3: u128,
    pub t4: u128,
}

impl TExponents {
    pub fn as_array(&self) -> [u128; 4] {
        [self.t1, self.t2, self.t3, self.t4]
    }
}

/// `t₁…t₄` of block `j`:
///
/// - `t₁ = 2j²r + 2jkr + jr − 2js`
/// - `t₂ = 2j²r + 2jkr + jr + 2js + 2ks + s`
/// - `t₃ = 2j²r + 2jkr + 3jr − 2js + kr + r − s`
/// - `t₄ = 2j²r + 2jkr + 3jr + 2js + kr + 2ks + r + 2s`
pub fn t_exponents(params: &MercaParams, j: u64) -> TExponents {
    let (r, s, k, j) = (params.r as u128, params.s as u128, params.k as u128, j as u128);
    let base = 2 * j * j * r + 2 * j * k * r;
    TExponents {
        t1: base + j * r - 2 * j * s,
        t2: base + j * r + 2 * j * s + 2 * k * s + s,
        t3: base + 3 * j * r - 2 * j * s + k * r + r - s,
        t4: base + 3 * j * r + 2 * j * s + k * r + 2 * k * s + r + 2 * s,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalisation_examples() {
        let p = normalize_params(6, 2, 1).unwrap();
        assert_eq!((p.r(), p.s(), p.case()), (3, 1, Case::Case3));
        assert_eq!(normalize_params(10, 5, 1).unwrap().case(), Case::SpecialR2S);
        let p = normalize_params(12, 7, 1).unwrap();
        assert_eq!((p.r(), p.s(), p.case()), (12, 5, Case::Case1));
        assert!(normalize_params(5, 5, 1).is_err());
        assert!(normalize_params(5, 0, 1).is_err());
        assert!(normalize_params(5, 1, 0).is_err());
    }

    #[test]
    fn dispatch() {
        assert_eq!(Case::of(4, 1), Case::Case1);
        assert_eq!(Case::of(9, 2), Case::Case2);
        assert_eq!(Case::of(3, 1), Case::Case3);
        // r even but {1, 7, 9, 15} shares the factor 3.
        assert_eq!(Case::of(8, 1), Case::Case3);
        assert_eq!(Case::of(10, 3), Case::Case1);
    }

    #[test]
    fn exponent_examples() {
        let p = MercaParams::new(4, 1, 1).unwrap();
        assert_eq!(t_exponents(&p, 0).as_array(), [0, 3, 7, 12]);
        let p = MercaParams::new(2, 1, 1).unwrap();
        assert_eq!(t_exponents(&p, 5).t4, 168);
        assert_eq!(p.leading_shift(), 1);
    }
}
