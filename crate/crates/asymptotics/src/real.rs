use std::fmt;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};

/// Rounding mode used for every intermediate operation.
pub(crate) const RM: RoundingMode = RoundingMode::ToEven;

/// Binary precision carrying `digits` decimal digits plus guard bits.
pub(crate) fn bits_for(digits: u32) -> usize {
    (f64::from(digits) * std::f64::consts::LOG2_10).ceil() as usize + 64
}

/// A high-precision real number together with the number of decimal digits
/// it is reported to.
#[derive(Debug, Clone)]
pub struct Real {
    value: BigFloat,
    digits: u32,
}

impl Real {
    pub(crate) fn new(value: BigFloat, digits: u32) -> Self {
        Self { value, digits }
    }

    /// Wraps an arbitrary-precision value reported to `digits` digits.
    pub fn from_bigfloat(value: BigFloat, digits: u32) -> Self {
        Self::new(value, digits)
    }

    pub fn value(&self) -> &BigFloat {
        &self.value
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Nearest `f64` (via the full decimal expansion).
    pub fn to_f64(&self) -> f64 {
        self.full_decimal().parse().unwrap_or(f64::NAN)
    }

    fn full_decimal(&self) -> String {
        let mut cc = Consts::new().expect("constants cache");
        self.value.format(Radix::Dec, RM, &mut cc).unwrap_or_else(|_| "NaN".into())
    }

    /// Scientific notation with `sig` significant digits, rounded half up on
    /// the decimal expansion, e.g. `6.7655e64`.
    pub fn to_scientific(&self, sig: usize) -> String {
        let full = self.full_decimal();
        let (negative, body) = match full.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, full.as_str()),
        };
        if body.bytes().filter(u8::is_ascii_digit).all(|b| b == b'0') {
            return "0".into();
        }
        let Some((mantissa, exp)) = body.split_once('e') else {
            return full;
        };
        let mut exp: i64 = exp.parse().unwrap_or(0);
        let mut digits: Vec<u8> = mantissa.bytes().filter(u8::is_ascii_digit).map(|b| b - b'0').collect();
        let sig = sig.max(1);
        digits.resize(digits.len().max(sig + 1), 0);
        let round_up = digits[sig] >= 5;
        digits.truncate(sig);
        if round_up {
            let mut i = sig;
            loop {
                if i == 0 {
                    digits.insert(0, 1);
                    digits.truncate(sig);
                    exp += 1;
                    break;
                }
                i -= 1;
                if digits[i] == 9 {
                    digits[i] = 0;
                } else {
                    digits[i] += 1;
                    break;
                }
            }
        }
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        out.push(char::from(b'0' + digits[0]));
        if sig > 1 {
            out.push('.');
            out.extend(digits[1..].iter().map(|&d| char::from(b'0' + d)));
        }
        out.push_str(&format!("e{exp}"));
        out
    }
}

impl fmt::Display for Real {
    /// Scientific notation with the reported number of significant digits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_scientific(self.digits as usize))
    }
}
