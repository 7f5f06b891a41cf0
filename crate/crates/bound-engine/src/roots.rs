use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{BoundError, PolyInP};

/// Width below which an isolating interval is considered tight.
fn target_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(1_000_000))
}

/// Polynomial over the rationals, lowest degree first, no trailing zeros.
type RatPoly = Vec<BigRational>;

fn trim(mut p: RatPoly) -> RatPoly {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn eval(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn derivative(p: &[BigRational]) -> RatPoly {
    if p.len() <= 1 {
        return vec![BigRational::zero()];
    }
    trim(p.iter().enumerate().skip(1).map(|(i, c)| c * BigRational::from_integer(BigInt::from(i))).collect())
}

/// Remainder of `a` divided by `b` (`b` nonzero).
fn remainder(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    let mut r = a.to_vec();
    let lead = b.last().expect("nonzero divisor");
    while r.len() >= b.len() && !(r.len() == 1 && r[0].is_zero()) {
        let shift = r.len() - b.len();
        let q = r.last().unwrap() / lead;
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &q * c;
        }
        r.pop();
        if r.is_empty() {
            r.push(BigRational::zero());
        }
        r = trim(r);
    }
    r
}

fn is_zero_poly(p: &[BigRational]) -> bool {
    p.iter().all(Zero::is_zero)
}

/// Sturm sequence `f, f', −rem(f, f'), …`.
pub(crate) struct Sturm {
    seq: Vec<RatPoly>,
}

impl Sturm {
    pub(crate) fn new(coeffs: &[BigInt]) -> Self {
        let f = trim(coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect());
        let mut seq = vec![f.clone()];
        let mut cur = derivative(&f);
        let mut prev = f;
        while !is_zero_poly(&cur) {
            seq.push(cur.clone());
            let next: RatPoly = remainder(&prev, &cur).into_iter().map(|c| -c).collect();
            prev = cur;
            cur = next;
        }
        Self { seq }
    }

    fn sign_changes(&self, x: &BigRational) -> usize {
        let signs: Vec<i8> = self
            .seq
            .iter()
            .map(|p| eval(p, x))
            .filter(|v| !v.is_zero())
            .map(|v| if v.is_positive() { 1 } else { -1 })
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of distinct real roots in `(a, b]`.
    pub(crate) fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.sign_changes(a) - self.sign_changes(b)
    }
}

/// Strict bound on the absolute value of every root (Cauchy).
pub(crate) fn cauchy_bound(coeffs: &[BigInt]) -> BigRational {
    let lead = BigRational::from_integer(coeffs.last().unwrap().abs());
    let max = coeffs[..coeffs.len() - 1].iter().map(|c| BigRational::from_integer(c.abs())).max().unwrap_or_default();
    BigRational::one() + max / lead
}

/// A rational interval `(lo, hi]` containing exactly the largest real root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootBracket {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootBracket {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }
}

/// Largest real root bracket and the integer block floor of a polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxRoot {
    /// `None` when the polynomial has no real root.
    pub bracket: Option<RootBracket>,
    /// Smallest integer `≥ 0` with no real root above it; the polynomial is
    /// nonnegative there and at every larger integer.
    pub p_floor: BigInt,
}

/// Isolates the largest real root of `poly` to width `< 10⁻⁶` with exact
/// Sturm counts and bisection on dyadic rationals.
pub fn max_root_ceiling(poly: &PolyInP) -> Result<MaxRoot, BoundError> {
    if !poly.leading().is_positive() {
        return Err(BoundError::LeadingNotPositive(poly.id.to_string()));
    }
    let isolator = MaxRootIsolator::new(poly);
    let bracket = isolator.bracket().map(|mut b| {
        isolator.refine(&mut b, &target_width());
        b
    });
    // The largest root lies in (lo, hi], so the smallest integer at or above
    // it is ⌈lo⌉ or ⌈hi⌉ (the bracket is narrower than 1); a Sturm count
    // decides which.
    let mut p_floor = match &bracket {
        Some(b) => b.lo.ceil().to_integer().max(BigInt::zero()),
        None => BigInt::zero(),
    };
    while isolator.roots_above(&BigRational::from_integer(p_floor.clone())) > 0 {
        p_floor += 1;
    }
    debug_assert!(!poly.eval_int(&p_floor).is_negative());
    Ok(MaxRoot { bracket, p_floor })
}

/// Bisection state for the largest real root of one polynomial.
pub(crate) struct MaxRootIsolator {
    sturm: Sturm,
    bound: BigRational,
}

impl MaxRootIsolator {
    pub(crate) fn new(poly: &PolyInP) -> Self {
        Self { sturm: Sturm::new(&poly.coeffs), bound: cauchy_bound(&poly.coeffs) }
    }

    /// Number of distinct real roots greater than `x`.
    pub(crate) fn roots_above(&self, x: &BigRational) -> usize {
        if x >= &self.bound {
            return 0;
        }
        self.sturm.count(x, &self.bound)
    }

    /// Initial bracket `(−B, B]`, or `None` without real roots.
    pub(crate) fn bracket(&self) -> Option<RootBracket> {
        let lo = -self.bound.clone();
        (self.roots_above(&lo) > 0).then(|| RootBracket { lo, hi: self.bound.clone() })
    }

    /// Halves the bracket until its width is below `width`.
    pub(crate) fn refine(&self, b: &mut RootBracket, width: &BigRational) {
        while &b.width() >= width {
            self.halve(b);
        }
    }

    /// One bisection step keeping the half that contains the largest root.
    pub(crate) fn halve(&self, b: &mut RootBracket) {
        let mid = (&b.lo + &b.hi) / BigRational::from_integer(BigInt::from(2));
        if self.roots_above(&mid) > 0 {
            b.lo = mid;
        } else {
            b.hi = mid;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{appendix_polynomial, Family, PolyId};

    fn poly(coeffs: &[i64]) -> PolyInP {
        PolyInP::from_coeffs(
            PolyId::new(Family::D, 0).unwrap(),
            coeffs.iter().map(|&c| BigInt::from(c)).collect(),
            BigInt::one(),
        )
    }

    fn contains(b: &RootBracket, x: (i64, i64)) -> bool {
        let x = BigRational::new(x.0.into(), x.1.into());
        b.lo < x && x <= b.hi
    }

    #[test]
    fn factored_quadratic() {
        let m = max_root_ceiling(&poly(&[15, -8, 1])).unwrap();
        let b = m.bracket.unwrap();
        assert!(contains(&b, (5, 1)));
        assert!(b.width() < target_width());
        assert_eq!(m.p_floor, BigInt::from(5));
    }

    #[test]
    fn root_at_four() {
        let m = max_root_ceiling(&poly(&[0, -32, 8])).unwrap();
        assert!(contains(m.bracket.as_ref().unwrap(), (4, 1)));
        assert_eq!(m.p_floor, BigInt::from(4));
    }

    #[test]
    fn no_real_root() {
        let m = max_root_ceiling(&poly(&[10, 0, 8])).unwrap();
        assert_eq!(m.bracket, None);
        assert_eq!(m.p_floor, BigInt::zero());
    }

    #[test]
    fn negative_roots_only() {
        let m = max_root_ceiling(&poly(&[6, 5, 1])).unwrap();
        assert!(contains(m.bracket.as_ref().unwrap(), (-2, 1)));
        assert_eq!(m.p_floor, BigInt::zero());
    }

    #[test]
    fn double_root_and_quartic() {
        // 2(p − 3)²(p + 1)(p − 7/2)
        let quartic = [-63, -3, 41, -17, 2];
        let err = max_root_ceiling(&poly(&quartic.map(|c| -c))).unwrap_err();
        assert!(matches!(err, BoundError::LeadingNotPositive(_)));
        let m = max_root_ceiling(&poly(&quartic)).unwrap();
        assert!(contains(m.bracket.as_ref().unwrap(), (7, 2)));
        assert_eq!(m.p_floor, BigInt::from(4));
        let m = max_root_ceiling(&poly(&[9, -6, 1])).unwrap();
        assert!(contains(m.bracket.as_ref().unwrap(), (3, 1)));
    }

    #[test]
    fn appendix_root_e_family() {
        let e2 = appendix_polynomial(Family::E, 2, 2, 1, 1).unwrap();
        let m = max_root_ceiling(&e2).unwrap();
        assert_eq!(m.bracket, None);
        assert_eq!(m.p_floor, BigInt::zero());
    }
}
