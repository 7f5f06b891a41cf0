//! Exact bound polynomials, root isolation and the three-case threshold
//! algorithm for nonnegativity of truncated theta quotients.
//!
//! - [`appendix_polynomial`]: the C/D/E bound polynomials in the block
//!   variable `p` with `(r, s, k)` substituted, as exact integers with a scale
//! - [`max_root_ceiling`]: largest real root via Sturm sequences and
//!   bisection over the rationals, plus the integer block floor
//! - [`compute_l`], [`corollary_k_threshold`], [`refined_k_threshold`],
//!   [`stage2_constants`]: the thresholds `L`, `k` and `F`/`N`
//! - [`run_algorithm`]: the full pipeline with a bounded exact scan
//!
//! No floating point is used: every threshold is an exact integer obtained
//! as a ceiling at a rational upper bound of the relevant real number.

mod error;
mod poly;
mod report;
mod roots;
mod tables;
mod threshold;

pub use error::BoundError;
pub use poly::{appendix_polynomial, family_polynomials, Family, PolyId, PolyInP};
pub use report::{case_series, run_algorithm, BoundReport, Verdict};
pub use roots::{max_root_ceiling, MaxRoot, RootBracket};
pub use threshold::{
    compute_l, compute_l_with_family, corollary_k_threshold, family_for, refined_k_threshold, stage2_constants,
    LDetail, PFloorPolicy, Stage2,
};
