//! Truncated theta quotients from the truncated Jacobi triple product and
//! exact scans of their coefficient signs.
//!
//! For normalised parameters `(r, s, k)` every series here shares the
//! numerator `Σ_{j≥0} (q^{t₁,j} − q^{t₂,j} − q^{t₃,j} + q^{t₄,j})`
//! ([`numerator_series`]) and differs only in the denominator
//! ([`DenomKind`]):
//!
//! - `Full`: the infinite product `(q^s, q^{r−s}; q^r)_∞`, shifted so the
//!   coefficients are indexed exactly as in the nonnegativity conjecture
//! - `Four`, `ThreePlus`, `ThreeMinus`: the finite products used to prove it
//! - `H`: the infinite product without the shift
//!
//! [`generalized_series`] builds the two-parameter `(k, ℓ)` generalisation, and
//! [`scan`] reports the exact minimum and negative/zero counts of a range.

mod build;
mod error;
mod generalized;
mod params;
mod scan;

pub use build::{build_series, case_decomposition, denominator_parts, numerator_series, numerator_terms, DenomKind};
pub use error::MercaError;
pub use generalized::{generalized_series, GeneralizedSeries};
pub use params::{normalize_params, t_exponents, Case, MercaParams, TExponents, MAX_R};
pub use scan::{scan, ScanReport};
