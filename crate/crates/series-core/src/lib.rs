//! Exact truncated formal power series with arbitrary-precision integer
//! coefficients.
//!
//! A [`Series`] stores the coefficients of `q^0 ..= q^N` densely. Every binary
//! operation truncates to the smaller of the two participating orders, so
//! precision can never be silently inflated.
//!
//! - [`mul_truncated`]: schoolbook product, optionally evaluated in parallel
//!   (results are bit-identical to the sequential evaluation)
//! - [`inverse_truncated`]: reciprocal of a series with unit constant term
//! - [`pochhammer`] / [`pochhammer_inverse`]: products `(q^a; q^m)_n` and their
//!   reciprocals, finite or infinite, truncated to a given order

mod error;
mod pochhammer;
mod series;

pub use error::SeriesError;
pub use pochhammer::{pochhammer, pochhammer_inverse, Count, PochSpec};
pub use series::{inverse_truncated, mul_truncated, Series};
