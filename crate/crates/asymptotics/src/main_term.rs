use astro_float::{BigFloat, Consts, Radix};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::One;

use crate::bessel::bessel_i;
use crate::real::{bits_for, Real, RM};
use crate::AsymptoticError;

/// `upper/lower` of the envelopes: the constants `1.01` and `0.99`.
pub const ENVELOPE_RATIO: (u32, u32) = (101, 99);

/// Guard digits added on top of the requested precision for intermediate
/// steps (the Bessel factor is small for small `n`).
const GUARD_DIGITS: u32 = 20;

fn check(a: u64, m: u64) -> Result<(), AsymptoticError> {
    if a == 0 || 2 * a >= m || a.gcd(&m) != 1 {
        return Err(AsymptoticError::BadParams(format!("need 1 ≤ a < M/2 and gcd(a, M) = 1; got a={a}, M={m}")));
    }
    Ok(())
}

fn check_n(n: u64) -> Result<(), AsymptoticError> {
    if n == 0 {
        return Err(AsymptoticError::BadParams("the main terms are undefined at n = 0".into()));
    }
    Ok(())
}

/// `Δ_M = a(M−a)(M+a)(2M−a)`.
pub fn delta_m(a: u64, m: u64) -> u64 {
    a * (m - a) * (m + a) * (2 * m - a)
}

/// Working context: binary precision and the constants cache.
struct Ctx {
    p: usize,
    cc: Consts,
    digits: u32,
}

impl Ctx {
    fn new(digits: u32) -> Result<Self, AsymptoticError> {
        if digits < 15 {
            return Err(AsymptoticError::BadParams(format!("need at least 15 digits, got {digits}")));
        }
        let cc = Consts::new().map_err(|e| AsymptoticError::BadParams(format!("constants cache: {e:?}")))?;
        Ok(Self { p: bits_for(digits + GUARD_DIGITS), cc, digits })
    }

    fn int(&self, x: u64) -> BigFloat {
        BigFloat::from_u64(x, self.p)
    }

    fn big(&mut self, x: &BigUint) -> BigFloat {
        BigFloat::parse(&x.to_string(), Radix::Dec, self.p, RM, &mut self.cc)
    }

    fn pi(&mut self) -> BigFloat {
        self.cc.pi(self.p, RM)
    }

    fn mul(&self, x: &BigFloat, y: &BigFloat) -> BigFloat {
        x.mul(y, self.p, RM)
    }

    fn div(&self, x: &BigFloat, y: &BigFloat) -> BigFloat {
        x.div(y, self.p, RM)
    }

    fn sqrt(&self, x: &BigFloat) -> BigFloat {
        x.sqrt(self.p, RM)
    }

    fn exp(&mut self, x: &BigFloat) -> BigFloat {
        x.exp(self.p, RM, &mut self.cc)
    }

    /// `x^{k/4}` for `x > 0` and `k ≥ 0`.
    fn quarter_power(&self, x: &BigFloat, k: usize) -> BigFloat {
        let root4 = self.sqrt(&self.sqrt(x));
        root4.powi(k, self.p, RM)
    }

    /// `sin(aπ/M)`.
    fn sin_ratio(&mut self, a: u64, m: u64) -> BigFloat {
        let pi = self.pi();
        let angle = self.div(&self.mul(&pi, &self.int(a)), &self.int(m));
        angle.sin(self.p, RM, &mut self.cc)
    }

    /// `2π√(n/(3M))`, the Bessel argument.
    fn bessel_arg(&mut self, n: u64, m: u64) -> BigFloat {
        let pi = self.pi();
        let ratio = self.div(&self.int(n), &self.int(3 * m));
        self.mul(&self.mul(&self.int(2), &pi), &self.sqrt(&ratio))
    }

    /// `π²/(3Mn)`.
    fn pi_sq_over(&mut self, n: u64, m: u64) -> BigFloat {
        let pi = self.pi();
        self.div(&self.mul(&pi, &pi), &self.mul(&self.int(3 * m), &self.int(n)))
    }

    fn real(&self, x: BigFloat) -> Real {
        Real::new(x, self.digits)
    }
}

/// `(π²/(3Mn))^{5/2} I_{−5}(2π√(n/(3M)))`, the part shared by both
/// normalisations of the `g` main term.
fn g_shape(ctx: &mut Ctx, m: u64, n: u64) -> Result<BigFloat, AsymptoticError> {
    let w = ctx.pi_sq_over(n, m);
    let w52 = ctx.mul(&ctx.mul(&w, &w), &ctx.sqrt(&w));
    let z = ctx.bessel_arg(n, m);
    let bessel = bessel_i(-5, &z, ctx.digits + GUARD_DIGITS)?;
    Ok(ctx.mul(&w52, bessel.value()))
}

/// Main term of `g_{a,M}(n)` as printed:
/// `(1/(2Δ_M sin(aπ/M))) (π²/(3Mn))^{5/2} I_{−5}(2π√(n/(3M)))`.
///
/// Exact coefficients show that this constant is off by a factor `Δ_M²`
/// (see [`g_main_term_mellin`]); it is kept verbatim for reference.
pub fn g_main_term(a: u64, m: u64, n: u64, digits: u32) -> Result<Real, AsymptoticError> {
    check(a, m)?;
    check_n(n)?;
    let mut ctx = Ctx::new(digits)?;
    let shape = g_shape(&mut ctx, m, n)?;
    let sin = ctx.sin_ratio(a, m);
    let denom = ctx.mul(&ctx.int(2 * delta_m(a, m)), &sin);
    Ok(ctx.real(ctx.div(&shape, &denom)))
}

/// Main term of `g_{a,M}(n)` with the constant from the Mellin asymptotics
/// of the product, `Γ(2+a/M)Γ(3−a/M)/(2π) = Δ_M/(2 sin(aπ/M))`:
/// `(Δ_M/(2 sin(aπ/M))) (π²/(3Mn))^{5/2} I_{−5}(2π√(n/(3M)))`.
///
/// Near `q = 1`, `1/(q^b; q^M)_∞ ≈ Γ(b/M)/√(2π) (Mτ)^{b/M−1/2} e^{π²/(6Mτ)}`;
/// the two progressions `b = 2M+a, 3M−a` give `Δ_M/(2 sin(aπ/M)) τ⁴
/// e^{π²/(3Mτ)}`, whose coefficients are the expression above.
pub fn g_main_term_mellin(a: u64, m: u64, n: u64, digits: u32) -> Result<Real, AsymptoticError> {
    check(a, m)?;
    check_n(n)?;
    let mut ctx = Ctx::new(digits)?;
    let shape = g_shape(&mut ctx, m, n)?;
    let sin = ctx.sin_ratio(a, m);
    let c = ctx.div(&ctx.int(delta_m(a, m)), &ctx.mul(&ctx.int(2), &sin));
    Ok(ctx.real(ctx.mul(&shape, &c)))
}

/// The printed main term with `I_{−5}(z)` replaced by its leading
/// asymptotic `e^z/√(2πz)`.
pub fn g_main_term_bessel_leading(a: u64, m: u64, n: u64, digits: u32) -> Result<Real, AsymptoticError> {
    check(a, m)?;
    check_n(n)?;
    let mut ctx = Ctx::new(digits)?;
    let w = ctx.pi_sq_over(n, m);
    let w52 = ctx.mul(&ctx.mul(&w, &w), &ctx.sqrt(&w));
    let z = ctx.bessel_arg(n, m);
    let pi = ctx.pi();
    let e = ctx.exp(&z);
    let lead = ctx.div(&e, &ctx.sqrt(&ctx.mul(&ctx.mul(&ctx.int(2), &pi), &z)));
    let sin = ctx.sin_ratio(a, m);
    let denom = ctx.mul(&ctx.int(2 * delta_m(a, m)), &sin);
    Ok(ctx.real(ctx.div(&ctx.mul(&w52, &lead), &denom)))
}

/// Lower and upper envelopes `g^d = 0.99·B`, `g^u = 1.01·B` with
/// `B = π⁴/(2(3r)^{11/4} Δ sin(sπ/r)) n^{−11/4} exp(2π√(n/(3r)))`.
#[derive(Debug, Clone)]
pub struct Envelopes {
    pub base: Real,
    pub lower: Real,
    pub upper: Real,
}

/// The envelopes for `g_{s,r}(n)` exactly as printed.
pub fn g_envelopes(s: u64, r: u64, n: u64, digits: u32) -> Result<Envelopes, AsymptoticError> {
    check(s, r)?;
    check_n(n)?;
    let mut ctx = Ctx::new(digits)?;
    let pi = ctx.pi();
    let pi4 = pi.powi(4, ctx.p, RM);
    let three_r = ctx.quarter_power(&ctx.int(3 * r), 11);
    let n_pow = ctx.quarter_power(&ctx.int(n), 11);
    let sin = ctx.sin_ratio(s, r);
    let z = ctx.bessel_arg(n, r);
    let e = ctx.exp(&z);
    let denom = ctx.mul(&ctx.mul(&ctx.mul(&ctx.int(2), &three_r), &ctx.int(delta_m(s, r))), &ctx.mul(&sin, &n_pow));
    let base = ctx.div(&ctx.mul(&pi4, &e), &denom);
    let hundred = ctx.int(100);
    let lower = ctx.div(&ctx.mul(&base, &ctx.int(u64::from(ENVELOPE_RATIO.1))), &hundred);
    let upper = ctx.div(&ctx.mul(&base, &ctx.int(u64::from(ENVELOPE_RATIO.0))), &hundred);
    Ok(Envelopes { base: ctx.real(base), lower: ctx.real(lower), upper: ctx.real(upper) })
}

/// `J(n) = (1/(2Δ₁ sin(aπ/M))) (π²/(3Mn))² exp(2π√(n/(3M)))` with
/// `Δ₁ = a(M−a)(M+a)`.
pub fn j_main_term(a: u64, m: u64, n: u64, digits: u32) -> Result<Real, AsymptoticError> {
    check(a, m)?;
    check_n(n)?;
    let mut ctx = Ctx::new(digits)?;
    let w = ctx.pi_sq_over(n, m);
    let z = ctx.bessel_arg(n, m);
    let e = ctx.exp(&z);
    let sin = ctx.sin_ratio(a, m);
    let denom = ctx.mul(&ctx.int(2 * a * (m - a) * (m + a)), &sin);
    Ok(ctx.real(ctx.div(&ctx.mul(&ctx.mul(&w, &w), &e), &denom)))
}

/// `X = √(3Mn/π²)`, the saddle-point scale of the circle method.
pub fn x_of(n: &BigUint, m: u64, digits: u32) -> Result<Real, AsymptoticError> {
    let mut ctx = Ctx::new(digits)?;
    let pi = ctx.pi();
    let n = ctx.big(n);
    let num = ctx.mul(&ctx.int(3 * m), &n);
    Ok(ctx.real(ctx.div(&ctx.sqrt(&num), &pi)))
}

/// `⌈(4.63M)⁹⌉`, the smallest integer `n` with `n ≥ (4.63M)⁹`.
pub fn n_threshold(m: u64) -> BigUint {
    let num = (BigInt::from(463u32) * BigInt::from(m)).pow(9);
    let den = BigInt::from(100u32).pow(9);
    let (q, r) = num.div_rem(&den);
    let q = if r == BigInt::from(0) { q } else { q + BigInt::one() };
    q.to_biguint().expect("nonnegative")
}

/// Exact `g_{a,M}(n)` next to the main terms and envelopes.
#[derive(Debug, Clone)]
pub struct AsymptoticEstimate {
    pub a: u64,
    pub m: u64,
    pub n: u64,
    /// The printed main term ([`g_main_term`]).
    pub main_term: Real,
    /// The Mellin-normalised main term ([`g_main_term_mellin`]).
    pub mellin_main_term: Real,
    pub lower_env: Real,
    pub upper_env: Real,
    /// `None` when `n` is beyond the exact-table budget.
    pub exact: Option<BigUint>,
    /// `exact / main_term`.
    pub ratio: Option<Real>,
    /// `exact / mellin_main_term`.
    pub mellin_ratio: Option<Real>,
}

/// Main terms and envelopes at `n`, with ratios when `exact` is given.
pub fn estimate(
    a: u64,
    m: u64,
    n: u64,
    exact: Option<BigUint>,
    digits: u32,
) -> Result<AsymptoticEstimate, AsymptoticError> {
    let main_term = g_main_term(a, m, n, digits)?;
    let mellin_main_term = g_main_term_mellin(a, m, n, digits)?;
    let env = g_envelopes(a, m, n, digits)?;
    let mut ctx = Ctx::new(digits)?;
    let (ratio, mellin_ratio) = match &exact {
        Some(e) => {
            let e = ctx.big(e);
            (Some(ctx.real(ctx.div(&e, main_term.value()))), Some(ctx.real(ctx.div(&e, mellin_main_term.value()))))
        }
        None => (None, None),
    };
    Ok(AsymptoticEstimate {
        a,
        m,
        n,
        main_term,
        mellin_main_term,
        lower_env: env.lower,
        upper_env: env.upper,
        exact,
        ratio,
        mellin_ratio,
    })
}

/// Exact `g_{a,M}(n)` from the partition table against the main terms.
///
/// `n = 0` is rejected (the main terms are undefined there; the exact value
/// is 1) and `n > budget` is [`AsymptoticError::BudgetExceeded`].
pub fn compare_exact_vs_main(
    a: u64,
    m: u64,
    n: u64,
    budget: usize,
    digits: u32,
) -> Result<AsymptoticEstimate, AsymptoticError> {
    Ok(compare_exact_vs_main_many(a, m, &[n], budget, digits)?.remove(0))
}

/// [`compare_exact_vs_main`] for several `n`, sharing one exact table.
pub fn compare_exact_vs_main_many(
    a: u64,
    m: u64,
    ns: &[u64],
    budget: usize,
    digits: u32,
) -> Result<Vec<AsymptoticEstimate>, AsymptoticError> {
    check(a, m)?;
    let Some(&max) = ns.iter().max() else {
        return Ok(Vec::new());
    };
    for &n in ns {
        check_n(n)?;
        if n as usize > budget {
            return Err(AsymptoticError::BudgetExceeded { n: n as usize, budget });
        }
    }
    let table = partitions::g_table(a, m, max as usize).map_err(|e| AsymptoticError::BadParams(e.to_string()))?;
    ns.iter().map(|&n| estimate(a, m, n, Some(table[n as usize].clone()), digits)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_values() {
        assert_eq!(delta_m(1, 4), 105);
        assert_eq!(2 * 7 * 11, 154);
    }

    #[test]
    fn parameter_checks() {
        assert!(g_main_term(2, 4, 10, 20).is_err());
        assert!(g_main_term(1, 4, 0, 20).is_err());
        assert!(g_main_term(1, 4, 10, 10).is_err());
        assert!(matches!(
            compare_exact_vs_main(1, 4, 100, 50, 20),
            Err(AsymptoticError::BudgetExceeded { n: 100, budget: 50 })
        ));
    }

    #[test]
    fn threshold_is_a_ceiling() {
        // (4.63·4)⁹ = 18.52⁹ is not an integer.
        let t = n_threshold(4);
        assert_eq!(t.to_string(), "256311941974");
    }
}
