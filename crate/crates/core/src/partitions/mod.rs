//! Partitions, hook lengths, beta-sets and the p-abacus.
//!
//! The abacus convention is fixed once: a partition with `k` parts is placed
//! on `m` beads, `m` the least multiple of `p` with `m >= k`, and runner `i`
//! (1-based) carries the positions congruent to `i - 1` mod `p`. Adding `p`
//! beads shifts every runner by one level, so cores, quotients and the
//! differences between runner offsets do not depend on the choice of `m`.

mod abacus;
mod partition;
mod qdegree;

pub use abacus::{bead_count, combine, core_and_quotient, is_core, Abacus, BetaSet, CoreQuotient};
pub use partition::{enumerate_partitions, Partition};
pub use qdegree::gl_degree_poly;

/// The `p`-cores of size `n`.
pub fn cores_of_size(n: usize, p: usize) -> Vec<Partition> {
    enumerate_partitions(n).into_iter().filter(|l| is_core(l, p)).collect()
}
