use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use merca_series::{Case, MercaParams};

use crate::poly::{family_polynomials, Family, PolyId};
use crate::roots::{max_root_ceiling, MaxRootIsolator, RootBracket};
use crate::BoundError;

/// Bisection steps after the target width is met before accepting a ceiling
/// that may sit one above the exact value (only when the exact value is an
/// integer reached by an irrational argument from above).
const EXTRA_STEPS: usize = 200;

fn rat(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

fn ceil_int(x: &BigRational) -> BigInt {
    x.ceil().to_integer()
}

/// Smallest `lo ≤ z ≤ hi` bracket search: `above(m)` says whether the target
/// exceeds `m`. Bisects until the width is below `10⁻⁶` and `⌈f(lo)⌉ =
/// ⌈f(hi)⌉` (for monotone nondecreasing `f`), and returns the final bracket
/// with `⌈f(hi)⌉`, an upper bound on `⌈f(z)⌉` that equals it unless `f(z)` is
/// an integer approached only from above.
fn certified_ceiling(
    mut lo: BigRational,
    mut hi: BigRational,
    above: impl Fn(&BigRational) -> bool,
    f: impl Fn(&BigRational) -> BigRational,
) -> (RootBracket, BigInt) {
    let width = BigRational::new(BigInt::one(), BigInt::from(1_000_000));
    let two = rat(2);
    let mut extra = 0;
    loop {
        let narrow = &hi - &lo < width;
        if narrow && (ceil_int(&f(&lo)) == ceil_int(&f(&hi)) || extra >= EXTRA_STEPS) {
            break;
        }
        if narrow {
            extra += 1;
        }
        let mid = (&lo + &hi) / &two;
        if above(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let value = ceil_int(&f(&hi));
    (RootBracket { lo, hi }, value)
}

/// Bracket for the real cube root of `x > 0`, collapsed to a point when `x`
/// is the cube of a rational.
fn exact_cbrt(x: &BigRational) -> Option<BigRational> {
    let (n, d) = (x.numer(), x.denom());
    let (cn, cd) = (n.cbrt(), d.cbrt());
    (&cn * &cn * &cn == *n && &cd * &cd * &cd == *d).then(|| BigRational::new(cn, cd))
}

/// Ceiling of `f(x^{1/3})` for monotone nondecreasing `f`, with the bracket
/// used for the cube root.
fn ceiling_at_cbrt(x: &BigRational, f: impl Fn(&BigRational) -> BigRational) -> (RootBracket, BigInt) {
    if let Some(c) = exact_cbrt(x) {
        let value = ceil_int(&f(&c));
        return (RootBracket { lo: c.clone(), hi: c }, value);
    }
    let hi = if x > &BigRational::one() { x.clone() } else { BigRational::one() };
    certified_ceiling(BigRational::zero(), hi, |m| &(m * m * m) < x, f)
}

/// `(z + k)(2zr − r + 2s)`, the last exponent `t₄` of block `z − 1`.
fn block_end(params: &MercaParams, z: &BigRational) -> BigRational {
    let (r, s, k) = (rat(params.r()), rat(params.s()), rat(params.k()));
    (z + &k) * (rat(2) * z * &r - &r + rat(2) * s)
}

/// Bound family used by the case: C for CASE1, D for CASE2, E otherwise.
pub fn family_for(case: Case) -> Family {
    match case {
        Case::Case1 => Family::C,
        Case::Case2 => Family::D,
        Case::Case3 | Case::SpecialR2S => Family::E,
    }
}

/// How `L` was obtained and the data behind it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LDetail {
    pub family: Family,
    /// Largest-root brackets of every family polynomial (`None`: no real root).
    pub roots: Vec<(PolyId, Option<RootBracket>)>,
    /// Bracket of the block variable `z₀` (for CASE1, `2r²(s/k)^{1/3}`); the
    /// upper end is the value used for `L`.
    pub z0: RootBracket,
    /// Integer block from which every family polynomial is nonnegative (for
    /// CASE1, `⌈2r²(s/k)^{1/3}⌉`).
    pub p_floor: BigInt,
    /// `max(0, (p_floor+k)(2·p_floor·r − r + 2s))`.
    pub l_block: BigInt,
}

/// Threshold `L`: the bound theorem gives a nonnegative case series
/// coefficient for every `n ≥ L`.
///
/// CASE1 uses the closed form `(2r²c + k)(4r³c − r + 2s)`, `c = (s/k)^{1/3}`;
/// the other cases use the largest nonnegative root `z₀` of the six family
/// polynomials and `(z₀ + k)(2z₀r − r + 2s)`. Both are ceilings evaluated at
/// rational upper bounds; values `≤ 0` give `L = 0`.
pub fn compute_l(params: &MercaParams) -> Result<(BigInt, LDetail), BoundError> {
    compute_l_with_family(params, family_for(params.case()))
}

/// [`compute_l`] with an explicit bound family, for parameters where more
/// than one bound theorem applies (e.g. an `(r, s)` with `r` even and `s` odd
/// has both the four-part and the three-part MINUS bounds).
///
/// C needs pairwise coprime four-part denominators, D an even `s`, E an odd
/// `s`; anything else is a [`BoundError::CaseMismatch`].
pub fn compute_l_with_family(params: &MercaParams, family: Family) -> Result<(BigInt, LDetail), BoundError> {
    let applies = match family {
        Family::C => params.case() == Case::Case1,
        Family::D => params.s() % 2 == 0,
        Family::E => params.s() % 2 == 1,
    };
    if !applies {
        return Err(BoundError::CaseMismatch(format!(
            "family {} does not apply to (r, s) = ({}, {})",
            family.letter(),
            params.r(),
            params.s()
        )));
    }
    let polys = family_polynomials(family, params.r(), params.s(), params.k());
    let mut roots = Vec::with_capacity(polys.len());
    let mut poly_floor = BigInt::zero();
    for poly in &polys {
        let m = max_root_ceiling(poly)?;
        poly_floor = poly_floor.max(m.p_floor);
        roots.push((poly.id, m.bracket));
    }
    let two_r_sq = rat(2 * params.r() as u128 * params.r() as u128);
    let (z0, l_value, p_floor) = if family == Family::C {
        let x = BigRational::new(params.s().into(), params.k().into());
        let (c, l) = ceiling_at_cbrt(&x, |c| block_end(params, &(&two_r_sq * c)));
        let z0 = RootBracket { lo: &two_r_sq * &c.lo, hi: &two_r_sq * &c.hi };
        let p_floor = ceil_int(&z0.hi);
        (z0, l, p_floor)
    } else {
        let isolators: Vec<MaxRootIsolator> = polys.iter().map(MaxRootIsolator::new).collect();
        let above = |m: &BigRational| isolators.iter().any(|iso| iso.roots_above(m) > 0);
        let zero = BigRational::zero();
        let (z0, l) = if above(&zero) {
            let hi = polys.iter().map(|p| crate::roots::cauchy_bound(&p.coeffs)).max().unwrap();
            certified_ceiling(zero, hi, above, |z| block_end(params, z))
        } else {
            (RootBracket { lo: zero.clone(), hi: zero.clone() }, ceil_int(&block_end(params, &zero)))
        };
        (z0, l, poly_floor)
    };
    let l = l_value.max(BigInt::zero());
    let l_block = block_end(params, &rat(p_floor.clone())).to_integer().max(BigInt::zero());
    Ok((l, LDetail { family, roots, z0, p_floor, l_block }))
}

/// Smallest `k` from which the corollaries prove the conjecture for all `n`.
///
/// - CASE1: `k ≥ 64r⁹s/(r−2s)³` (ceiling)
/// - CASE2: `k > (4r³s − 2s(r−2s))/(r(r−2s))` (floor + 1)
/// - CASE3: `k > (8r³s − 2s(r−2s))/(r(r−2s))` (floor + 1)
/// - `(r,s) = (2,1)`: every `k ≥ 1`
pub fn corollary_k_threshold(params: &MercaParams) -> BigInt {
    let (r, s) = (BigInt::from(params.r()), BigInt::from(params.s()));
    let gap: BigInt = &r - 2 * &s;
    let strict = |lead: BigInt| {
        let num: BigInt = lead * r.pow(3) * &s - 2 * &s * &gap;
        num.div_floor(&(&r * &gap)) + 1
    };
    match params.case() {
        Case::Case1 => {
            let num: BigInt = 64 * r.pow(9) * &s;
            let den = gap.pow(3);
            Integer::div_ceil(&num, &den)
        }
        Case::Case2 => strict(BigInt::from(4)),
        Case::Case3 => strict(BigInt::from(8)),
        Case::SpecialR2S => BigInt::one(),
    }
}

/// Smallest `k ≥ 1` at which every nonnegative root `z` of the six D (CASE2)
/// or E (CASE3) polynomials satisfies `2zr − r + 2s ≤ 0`, so that `L = 0`.
///
/// Exact: each `k` is decided by a Sturm count of roots above
/// `(r − 2s)/(2r)`. The search stops at the corollary threshold, which is
/// returned if no smaller `k` qualifies.
pub fn refined_k_threshold(r: u64, s: u64) -> Result<u64, BoundError> {
    let params = MercaParams::new(r, s, 1)?;
    let family = match params.case() {
        Case::Case2 => Family::D,
        Case::Case3 => Family::E,
        other => {
            return Err(BoundError::CaseMismatch(format!(
                "refined k threshold needs CASE2 or CASE3 parameters, got {}",
                other.name()
            )))
        }
    };
    let limit = corollary_k_threshold(&params);
    let theta = BigRational::new(BigInt::from(r) - 2 * BigInt::from(s), BigInt::from(2 * r));
    let mut k = 1u64;
    while BigInt::from(k) < limit {
        let clear = family_polynomials(family, r, s, k)
            .iter()
            .all(|poly| poly.leading().is_positive() && MaxRootIsolator::new(poly).roots_above(&theta) == 0);
        if clear {
            return Ok(k);
        }
        k += 1;
    }
    Ok(u64::try_from(limit).expect("threshold below the k search range"))
}

/// How the block index of the four-part stage-2 constant is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum PFloorPolicy {
    /// `p = 2r²s^{1/3}`, as in the stage-2 formula.
    #[default]
    Formula,
    /// `p = ⌈2r³s^{1/3}⌉`, the block used in the worked `(12,1,1)` example.
    Example,
}

impl PFloorPolicy {
    pub fn name(self) -> &'static str {
        match self {
            PFloorPolicy::Formula => "formula",
            PFloorPolicy::Example => "example",
        }
    }
}

/// Stage-2 constants: the block `p`, the threshold `F = (p+k)(2pr−r+2s)` and
/// the effective bound `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stage2 {
    pub policy: PFloorPolicy,
    /// Block used (an exact rational upper bound when irrational).
    pub p: BigRational,
    pub f: BigInt,
    /// `⌈2(4.63r)⁹⌉`.
    pub asymptotic_floor: BigInt,
    pub n: BigInt,
}

/// `F` and `N = max{4F², ⌈2(4.63r)⁹⌉} + F + rk(k+1)/2 − sk`.
///
/// - CASE1: `p = 2r²s^{1/3}` (FORMULA, `F` is a ceiling) or
///   `p = ⌈2r³s^{1/3}⌉` (EXAMPLE)
/// - CASE2: `p = r⁴`
/// - CASE3 and `(2,1)`: `p = ⌈64r⁴/15⌉`
pub fn stage2_constants(params: &MercaParams, policy: PFloorPolicy) -> Stage2 {
    let (r, s) = (BigInt::from(params.r()), BigInt::from(params.s()));
    let int_block = |p: BigInt| {
        let f = block_end(params, &rat(p.clone())).to_integer();
        (rat(p), f)
    };
    let (p, f): (BigRational, BigInt) = match (params.case(), policy) {
        (Case::Case1, PFloorPolicy::Formula) => {
            let two_r_sq = rat(2 * &r * &r);
            let (c, f) = ceiling_at_cbrt(&rat(s.clone()), |c| block_end(params, &(&two_r_sq * c)));
            (&two_r_sq * &c.hi, f)
        }
        (Case::Case1, PFloorPolicy::Example) => {
            let two_r_cube = rat(2 * r.pow(3));
            let (_, p) = ceiling_at_cbrt(&rat(s.clone()), |c| &two_r_cube * c);
            int_block(p)
        }
        (Case::Case2, _) => int_block(r.pow(4)),
        (Case::Case3 | Case::SpecialR2S, _) => int_block(Integer::div_ceil(&(64 * r.pow(4)), &BigInt::from(15))),
    };
    let asymptotic_floor = ceil_int(&(rat(2) * (BigRational::new(463.into(), 100.into()) * rat(r)).pow(9)));
    let four_f_sq: BigInt = BigInt::from(4) * &f * &f;
    let n = four_f_sq.max(asymptotic_floor.clone()) + &f + BigInt::from(params.leading_shift());
    Stage2 { policy, p, f, asymptotic_floor, n }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(r: u64, s: u64, k: u64) -> MercaParams {
        MercaParams::new(r, s, k).unwrap()
    }

    #[test]
    fn cube_roots() {
        assert_eq!(exact_cbrt(&BigRational::new(8.into(), 27.into())), Some(BigRational::new(2.into(), 3.into())));
        assert_eq!(exact_cbrt(&rat(2)), None);
        let (b, v) = ceiling_at_cbrt(&rat(2), |c| c * rat(1_000_000));
        assert_eq!(v, BigInt::from(1_259_922));
        assert!(&b.lo * &b.lo * &b.lo < rat(2) && &b.hi * &b.hi * &b.hi >= rat(2));
    }

    #[test]
    fn corollary_thresholds() {
        assert_eq!(corollary_k_threshold(&params(9, 2, 1)), BigInt::from(130));
        assert_eq!(corollary_k_threshold(&params(4, 1, 1)), BigInt::from(2_097_152));
        assert_eq!(corollary_k_threshold(&params(3, 1, 1)), BigInt::from(72));
        assert_eq!(corollary_k_threshold(&params(2, 1, 1)), BigInt::one());
    }

    #[test]
    fn stage2_example_and_formula() {
        let ex = stage2_constants(&params(12, 1, 1), PFloorPolicy::Example);
        assert_eq!(ex.p, rat(3456));
        assert_eq!(ex.f, BigInt::from(286_702_838u64));
        assert_eq!(ex.asymptotic_floor, BigInt::from(10_089_975_907_722_372u64));
        assert_eq!(ex.n, BigInt::from(328_794_069_555_719_825u64));
        let fo = stage2_constants(&params(12, 1, 1), PFloorPolicy::Formula);
        assert_eq!(fo.p, rat(288));
        assert_eq!(fo.f, BigInt::from(1_994_678));
        assert_eq!(fo.n, BigInt::from(10_089_975_909_717_061u64));
    }

    #[test]
    fn stage2_three_part_blocks() {
        let c3 = stage2_constants(&params(2, 1, 1), PFloorPolicy::Formula);
        assert_eq!(c3.p, rat(69));
        assert_eq!(c3.f, BigInt::from(70 * (2 * 69 * 2 - 2 + 2)));
        let c2 = stage2_constants(&params(9, 2, 3), PFloorPolicy::Formula);
        assert_eq!(c2.f, BigInt::from((6561u64 + 3) * (2 * 59049 - 9 + 4)));
    }
}
