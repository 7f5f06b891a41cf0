use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::tables::{self, Monomial};
use crate::BoundError;

/// The three bound families: four parts (C), three parts `{s, r−s, r+s}` (D)
/// and three parts `{s, r−s, 2r−s}` (E).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    C,
    D,
    E,
}

impl Family {
    /// Number of polynomials in the family.
    pub fn polynomial_count(self) -> usize {
        match self {
            Family::C => 4,
            Family::D | Family::E => 6,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
        }
    }

    /// `6Δ`, `2Δ₁` or `2Δ₂`.
    pub fn base_scale(self, r: u64, s: u64) -> BigInt {
        let (r, s) = (BigInt::from(r), BigInt::from(s));
        let common = &s * (&r - &s);
        match self {
            Family::C => 6 * common * (&r + &s) * (2 * &r - &s),
            Family::D => 2 * common * (&r + &s),
            Family::E => 2 * common * (2 * &r - &s),
        }
    }
}

/// Identifies one polynomial: the bound of case `i` evaluated at the
/// endpoint that makes it smallest.
///
/// C: `0 = C₀(t₄,ₚ₋₁)`, `1 = C₁(t₁,ₚ)`, `2 = C₂(t₂,ₚ)`, `3 = C₃(t₃,ₚ)`.
/// D and E: `0 = ·₀(t₁,ₚ)`, `1 = ·₁(t₁,ₚ)`, `2 = ·₂(t₂,ₚ)`, `3 = ·₃(t₃,ₚ)`,
/// `4 = ·₃(t₄,ₚ)`, `5 = ·₁` at the vertex of the case-1 quadratic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyId {
    pub family: Family,
    pub index: usize,
}

impl PolyId {
    pub fn new(family: Family, index: usize) -> Result<Self, BoundError> {
        if index >= family.polynomial_count() {
            return Err(BoundError::UnknownPolynomial { family: family.letter(), index });
        }
        Ok(Self { family, index })
    }

    /// All polynomials of a family, in index order.
    pub fn all(family: Family) -> impl Iterator<Item = PolyId> {
        (0..family.polynomial_count()).map(move |index| PolyId { family, index })
    }

    fn monomials(self) -> &'static [Monomial] {
        use tables::*;
        match (self.family, self.index) {
            (Family::C, 0) => C0,
            (Family::C, 1) => C1,
            (Family::C, 2) => C2,
            (Family::C, 3) => C3,
            (Family::D, 0) => D0,
            (Family::D, 1) => D1,
            (Family::D, 2) => D2,
            (Family::D, 3) => D3,
            (Family::D, 4) => D4,
            (Family::D, 5) => D5,
            (Family::E, 0) => E0,
            (Family::E, 1) => E1,
            (Family::E, 2) => E2,
            (Family::E, 3) => E3,
            (Family::E, 4) => E4,
            (Family::E, 5) => E5,
            _ => unreachable!("index validated on construction"),
        }
    }

    /// Whether the expression carries an overall factor `r` that the worked
    /// examples divide out.
    fn printed_with_r_removed(self) -> bool {
        self.family != Family::C && (self.index == 3 || self.index == 4)
    }
}

impl fmt::Display for PolyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = match (self.family, self.index) {
            (Family::C, 0) => "0(t4,p-1)",
            (Family::C, i) => return write!(f, "C{i}(t{i},p)"),
            (_, 0) => "0(t1,p)",
            (_, 1) => "1(t1,p)",
            (_, 2) => "2(t2,p)",
            (_, 3) => "3(t3,p)",
            (_, 4) => "3(t4,p)",
            _ => "1(vertex)",
        };
        write!(f, "{}{}", self.family.letter(), at)
    }
}

/// An integer polynomial in `p` (lowest degree first) whose value divided by
/// `scale > 0` is the bound it represents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyInP {
    pub id: PolyId,
    pub coeffs: Vec<BigInt>,
    pub scale: BigInt,
    /// `coeffs / printed_divisor` is the normalisation used in worked
    /// examples (fractions restored, the overall factor `r` of the
    /// third-case polynomials removed).
    printed_divisor: BigInt,
}

impl PolyInP {
    /// Builds a polynomial from integer coefficients with an explicit scale.
    pub fn from_coeffs(id: PolyId, coeffs: Vec<BigInt>, scale: BigInt) -> Self {
        let mut poly = Self { id, coeffs, scale, printed_divisor: BigInt::one() };
        poly.trim();
        poly
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("at least one coefficient")
    }

    /// Value of the integer polynomial at a rational point.
    pub fn eval(&self, p: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * p + BigRational::from_integer(c.clone()))
    }

    /// Value at an integer point.
    pub fn eval_int(&self, p: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * p + c)
    }

    /// The bound itself: `poly(p) / scale`.
    pub fn bound_at(&self, p: &BigRational) -> BigRational {
        self.eval(p) / BigRational::from_integer(self.scale.clone())
    }

    /// Coefficients in the worked-example normalisation.
    pub fn printed(&self) -> Vec<BigRational> {
        let d = BigRational::from_integer(self.printed_divisor.clone());
        self.coeffs.iter().map(|c| BigRational::from_integer(c.clone()) / &d).collect()
    }
}

impl fmt::Display for PolyInP {
    /// Printed normalisation, highest degree first, e.g. `32*p^2 - 8932*p`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (deg, c) in self.printed().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, _) => write!(f, " {sign} ")?,
            }
            first = false;
            let a = c.abs();
            let mono = match deg {
                0 => String::new(),
                1 => "p".into(),
                _ => format!("p^{deg}"),
            };
            match (a.is_one(), mono.is_empty()) {
                (true, false) => write!(f, "{mono}")?,
                (_, true) => write!(f, "{a}")?,
                (false, false) => write!(f, "{a}*{mono}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The bound polynomial `family`/`index` with `(r, s, k)` substituted.
///
/// The integer coefficients are the appendix expression times the least
/// common denominator of its rational monomials; `scale` is the family scale
/// times that same factor (and times `r` for the third-case polynomials,
/// whose expressions carry an overall factor `r`).
pub fn appendix_polynomial(family: Family, index: usize, r: u64, s: u64, k: u64) -> Result<PolyInP, BoundError> {
    let id = PolyId::new(family, index)?;
    let monomials = id.monomials();
    let degree = monomials.iter().map(|m| m.5 as usize).max().unwrap_or(0);
    let lcd = monomials.iter().fold(BigInt::one(), |acc, m| acc.lcm(&BigInt::from(m.1)));
    let (r, s, k) = (BigInt::from(r), BigInt::from(s), BigInt::from(k));
    let mut coeffs = vec![BigInt::zero(); degree + 1];
    for &(num, den, er, es, ek, ep) in monomials {
        let factor = &lcd / den;
        coeffs[ep as usize] += factor * num * r.pow(er) * s.pow(es) * k.pow(ek);
    }
    let mut printed_divisor = lcd.clone();
    if id.printed_with_r_removed() {
        printed_divisor *= &r;
    }
    let scale = family.base_scale(u64::try_from(&r).unwrap(), u64::try_from(&s).unwrap()) * &printed_divisor;
    let mut poly = PolyInP { id, coeffs, scale, printed_divisor };
    poly.trim();
    Ok(poly)
}

/// All polynomials of a family at `(r, s, k)`.
pub fn family_polynomials(family: Family, r: u64, s: u64, k: u64) -> Vec<PolyInP> {
    PolyId::all(family).map(|id| appendix_polynomial(family, id.index, r, s, k).expect("valid index")).collect()
}
