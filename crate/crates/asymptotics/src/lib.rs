//! Circle-method main terms and envelopes for partitions into the two
//! progressions of `G_{a,M}` and `J_{a,M}`, evaluated in arbitrary precision
//! and compared against exact coefficient tables.
//!
//! - [`bessel_i`]: modified Bessel function `I_v(z)` of integer order by its
//!   ascending series, with a rigorous bound on the truncated tail
//! - [`g_main_term`], [`g_main_term_mellin`], [`g_envelopes`],
//!   [`j_main_term`]: the closed forms
//! - [`compare_exact_vs_main`]: exact `g_{a,M}(n)` against the main terms
//! - [`x_of`], [`n_threshold`]: the saddle-point radius and the admissibility
//!   threshold `n ≥ (4.63M)⁹`

mod bessel;
mod error;
mod main_term;
mod real;

pub use bessel::bessel_i;
pub use error::AsymptoticError;
pub use main_term::{
    compare_exact_vs_main, compare_exact_vs_main_many, delta_m, estimate, g_envelopes, g_main_term,
    g_main_term_bessel_leading, g_main_term_mellin, j_main_term, n_threshold, x_of, AsymptoticEstimate, Envelopes,
    ENVELOPE_RATIO,
};
pub use real::Real;
