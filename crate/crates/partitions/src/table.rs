use num_bigint::BigUint;
use num_integer::Integer;

use crate::{PartitionError, PartsSpec};

/// Number of partitions of every `n ≤ order` into the allowed parts.
///
/// `table[0] = 1`; the DP makes one unbounded-knapsack pass per part.
pub fn partitions_with_parts(spec: &PartsSpec, order: usize) -> Result<Vec<BigUint>, PartitionError> {
    Ok(count_table(&spec.materialize(order)?, order))
}

/// Knapsack DP over an explicit list of positive parts. A part listed `m`
/// times contributes the factor `1/(1−q^a)^m`.
///
/// Entries are held as fixed-width little-endian `u64` limb vectors whose
/// width at index `n` comes from an a-priori bound on the count (the
/// Hardy–Ramanujan bound `p(n) < exp(π√(2n/3))` extended to parts repeated
/// up to `m` times, or `(n+1)^{ℓ−1}` for `ℓ` parts), so the inner loop is
/// carry-propagating word addition with no allocation. Overflow of the bound
/// is checked and would panic.
pub fn count_table(parts: &[u64], order: usize) -> Vec<BigUint> {
    let parts: Vec<usize> = parts.iter().map(|&p| p as usize).filter(|&p| p >= 1 && p <= order).collect();
    let mut sorted = parts.clone();
    sorted.sort_unstable();
    let multiplicity = sorted.chunk_by(|a, b| a == b).map(<[usize]>::len).max().unwrap_or(1);
    let width: Vec<usize> = (0..=order).map(|n| limbs_for(n, parts.len(), multiplicity)).collect();
    let stride = width[order];
    let mut t = vec![0u64; (order + 1) * stride];
    t[0] = 1;
    let mut overflow = 0u64;
    for &part in &parts {
        for n in part..=order {
            let (lo, hi) = t.split_at_mut(n * stride);
            let src = &lo[(n - part) * stride..(n - part) * stride + width[n - part]];
            let dst = &mut hi[..width[n]];
            let mut carry = 0u64;
            for (d, &s) in dst.iter_mut().zip(src) {
                let (x, c1) = d.overflowing_add(s);
                let (y, c2) = x.overflowing_add(carry);
                *d = y;
                carry = (c1 | c2) as u64;
            }
            for d in dst[src.len()..].iter_mut() {
                if carry == 0 {
                    break;
                }
                let (y, c) = d.overflowing_add(carry);
                *d = y;
                carry = c as u64;
            }
            overflow |= carry;
        }
    }
    assert_eq!(overflow, 0, "partition count exceeded its a-priori size bound");
    (0..=order)
        .map(|n| {
            let digits: Vec<u32> =
                t[n * stride..n * stride + width[n]].iter().flat_map(|&w| [w as u32, (w >> 32) as u32]).collect();
            BigUint::new(digits)
        })
        .collect()
}

/// 64-bit limbs sufficient for any partition count of `n` with `nparts`
/// allowed part sizes, none repeated more than `m` times.
///
/// With `m` copies of each part the count is at most the coefficient of
/// `1/(q;q)_∞^m`, a sum of at most `(n+1)^{m−1}` products
/// `p(n₁)⋯p(n_m)`, each below `exp(π√(2mn/3))` by concavity of `√`.
fn limbs_for(n: usize, nparts: usize, m: usize) -> usize {
    let nf = n as f64;
    let mf = m as f64;
    let hr_bits =
        std::f64::consts::PI * (2.0 * mf * nf / 3.0).sqrt() / std::f64::consts::LN_2 + (mf - 1.0) * (nf + 1.0).log2();
    let poly_bits = nparts.saturating_sub(1) as f64 * (nf + 1.0).log2();
    let bits = hr_bits.min(poly_bits) + 2.0;
    (bits / 64.0).ceil().max(1.0) as usize
}

/// Result of the two-part floor formula: the true count `p₂(n)` with coprime
/// parts `a₁, a₂` is `floor` or `floor + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct P2Window {
    pub floor: u64,
}

impl P2Window {
    /// Whether `count` lies in `{floor, floor + 1}`.
    pub fn contains(&self, count: u64) -> bool {
        count == self.floor || count == self.floor + 1
    }
}

/// `⌊n/(a₁a₂)⌋` together with the guarantee that the number of partitions of
/// `n` into parts `a₁, a₂` is that value or one more.
pub fn p2_window(n: u64, a1: u64, a2: u64) -> Result<P2Window, PartitionError> {
    if a1 == 0 || a2 == 0 {
        return Err(PartitionError::ZeroPart);
    }
    if a1.gcd(&a2) != 1 {
        return Err(PartitionError::NotCoprime { a1, a2 });
    }
    Ok(P2Window { floor: n / (a1 * a2) })
}

fn check_progression_params(a: u64, m: u64) -> Result<(), PartitionError> {
    if a == 0 || 2 * a >= m || a.gcd(&m) != 1 {
        return Err(PartitionError::BadParams(format!("need 1 ≤ a < M/2 and gcd(a, M) = 1, got a={a}, M={m}")));
    }
    Ok(())
}

/// `g_{a,M}(n)`: partitions into parts `≡ a (mod M)` that are `≥ 2M+a` and
/// parts `≡ −a (mod M)` that are `≥ 3M−a`, i.e. the coefficients of
/// `1/(q^{2M+a}, q^{3M−a}; q^M)_∞`.
pub fn g_table(a: u64, m: u64, order: usize) -> Result<Vec<BigUint>, PartitionError> {
    check_progression_params(a, m)?;
    partitions_with_parts(&PartsSpec::progressions(&[(2 * m + a, m), (3 * m - a, m)])?, order)
}

/// `J_{a,M}(n)`: coefficients of `1/(q^{2M+a}, q^{2M−a}; q^M)_∞`.
pub fn j_table(a: u64, m: u64, order: usize) -> Result<Vec<BigUint>, PartitionError> {
    check_progression_params(a, m)?;
    partitions_with_parts(&PartsSpec::progressions(&[(2 * m + a, m), (2 * m - a, m)])?, order)
}
