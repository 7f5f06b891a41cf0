use crate::{Series, SeriesError};

/// Number of factors in a q-Pochhammer symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Count {
    Finite(u64),
    Infinite,
}

/// The symbol `(q^start; q^step)_count = Π_{j<count} (1 − q^{start + j·step})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PochSpec {
    start: u64,
    step: u64,
    count: Count,
}

impl PochSpec {
    /// Validates `start ≥ 1` and `step ≥ 1`.
    pub fn new(start: u64, step: u64, count: Count) -> Result<Self, SeriesError> {
        if start == 0 || step == 0 {
            return Err(SeriesError::InvalidPochSpec { start, step });
        }
        Ok(Self { start, step, count })
    }

    /// `(q^start; q^step)_∞`.
    pub fn infinite(start: u64, step: u64) -> Result<Self, SeriesError> {
        Self::new(start, step, Count::Infinite)
    }

    /// `(q^start; q^step)_count`.
    pub fn finite(start: u64, step: u64, count: u64) -> Result<Self, SeriesError> {
        Self::new(start, step, Count::Finite(count))
    }

    pub fn start(&self) -> u64 {
        self.start
    }

    pub fn step(&self) -> u64 {
        self.step
    }

    pub fn count(&self) -> Count {
        self.count
    }

    /// Exponents `start + j·step` of the factors that survive truncation at
    /// `order`.
    pub fn exponents(&self, order: usize) -> impl Iterator<Item = usize> + '_ {
        let limit = match self.count {
            Count::Finite(c) => c,
            Count::Infinite => u64::MAX,
        };
        (0..limit)
            .map(move |j| self.start.saturating_add(j.saturating_mul(self.step)))
            .take_while(move |&e| e <= order as u64)
            .map(|e| e as usize)
    }
}

/// Product of all listed q-Pochhammer symbols, truncated to `order`. Infinite
/// symbols stop contributing once their exponent exceeds the order.
pub fn pochhammer(specs: &[PochSpec], order: usize) -> Series {
    let mut s = Series::one(order);
    for spec in specs {
        for e in spec.exponents(order) {
            s.mul_one_minus_q_pow(e);
        }
    }
    s
}

/// Reciprocal of [`pochhammer`], computed directly by one geometric-series
/// division per factor (exactly equal to `inverse_truncated(pochhammer(..))`).
pub fn pochhammer_inverse(specs: &[PochSpec], order: usize) -> Series {
    let mut s = Series::one(order);
    for spec in specs {
        for e in spec.exponents(order) {
            s.div_one_minus_q_pow(e);
        }
    }
    s
}
