//! Exact partition-counting tables for restricted part sets, and the
//! closed-form quasi-polynomial bounds for partitions into three and four
//! pairwise coprime parts.
//!
//! - [`partitions_with_parts`] / [`count_table`]: unbounded-knapsack DP over a
//!   set of allowed parts
//! - [`g_table`] / [`j_table`]: partitions into the two residue progressions
//!   that appear in the nonmodular products `G_{a,M}` and `J_{a,M}`
//! - [`p2_window`]: the two-part floor formula `p₂(n) ∈ {⌊n/(a₁a₂)⌋, ⌊n/(a₁a₂)⌋+1}`
//! - [`p4_bound_data`] / [`p3_bound_data`]: exact rational sandwich bounds
//!   `P(n) + C^d ≤ p(n) ≤ P(n) + C^u`

mod bounds;
mod error;
mod parts;
mod table;

pub use bounds::{p3_bound_data, p4_bound_data, P3BoundData, P4BoundData, ThreePartVariant};
pub use error::PartitionError;
pub use parts::{PartsSpec, Progression};
pub use table::{count_table, g_table, j_table, p2_window, partitions_with_parts, P2Window};
