#![no_std]

//! Commuting graphs of finite groups.
//!
//! Given a finite group `G` as a Cayley table, this crate builds the graph on
//! the elements of `G` in which two distinct elements are adjacent when they
//! commute, and then computes:
//!
//! * the Laplacian spectrum in closed form from centralizer data (abelian
//!   groups and groups whose non-central centralizers are pairwise equal or
//!   meet exactly in the center), together with explicit integer eigenvectors;
//! * partial spectrum certificates for arbitrary non-abelian groups;
//! * an independent numerical spectrum (cyclic Jacobi) used as an oracle;
//! * the graph invariants that the centralizer structure determines: edge
//!   boundaries, isoperimetric number, bipartition width, clique and
//!   independence numbers, distances.
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the CLI
//! live in the companion `cgspec` crate.

extern crate alloc;

pub mod catalog;
pub mod graph;
pub mod group;
pub mod invariants;
pub mod perm;
pub mod spectrum;
pub mod subset;

pub use catalog::{catalog, CATALOG_ORDER_CAP, SYMMETRIC_DEGREE_CAP};
pub use graph::{CommutingGraph, GraphError};
pub use group::{Centralizers, ConCheckResult, GroupError, GroupTable, NotAGroup};
pub use perm::{PermError, Permutation};
pub use subset::Subset;

/// Exact non-negative rational used by every ratio-valued invariant.
pub type Ratio = num_rational::Ratio<u64>;
