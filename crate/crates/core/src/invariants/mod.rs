//! Graph invariants of commuting graphs: edge boundaries, isoperimetric
//! number, bipartition width, clique and independence numbers, distances.
//!
//! Most invariants come in up to three flavours: an exhaustive ground truth
//! (exponential, capped by the number of vertices), a closed formula from
//! the centralizer structure, and a bound interval. [`full_report`] runs all
//! of them and records whether they agree.

mod boundary;
mod clique;
mod distance;
mod isoperimetric;
mod report;

use alloc::vec::Vec;
use core::fmt;

pub use boundary::{
    boundary_formula, boundary_lower_bounds_check, edge_boundary, lemma_case,
    subset_ratio_bounds_check, LemmaCase, SubsetBoundary,
};
pub use clique::{
    clique_formula, clique_number, independence_bounds, independence_number, third_eigenvalue_bound,
};
pub use distance::{big_c_set, mean_distance, MeanDistance};
pub use isoperimetric::{
    bipartition_lower_bound, bipartition_width, isoperimetric_bounds, isoperimetric_exact,
    isoperimetric_theorem, smallest_component, Isoperimetric, IsoperimetricClaim, TheoremCase,
};
pub use report::{
    full_report, full_report_for_graph, Claim, Entry, InvariantReport, ReportOptions, Status, Value,
};

use crate::graph::CommutingGraph;
use crate::subset::Subset;

/// Exhaustive scans run by default up to this many vertices.
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 16;
/// No override may push exhaustive scans past this many vertices.
pub const MAX_EXHAUSTIVE_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvariantError {
    EmptyOrFullSubset,
    /// The subset lives in a different universe than the graph.
    UniverseMismatch {
        subset: usize,
        order: usize,
    },
    HypothesisViolated(&'static str),
    SizeCapExceeded {
        order: usize,
        cap: usize,
    },
    /// No subset satisfies the size constraint (one vertex, or two vertices
    /// under the strict convention).
    TooFewVertices {
        order: usize,
    },
}

impl fmt::Display for InvariantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantError::EmptyOrFullSubset => write!(f, "subset must be nonempty and proper"),
            InvariantError::UniverseMismatch { subset, order } => {
                write!(
                    f,
                    "subset over {subset} elements used with a graph on {order} vertices"
                )
            }
            InvariantError::HypothesisViolated(what) => write!(f, "hypothesis violated: {what}"),
            InvariantError::SizeCapExceeded { order, cap } => {
                write!(
                    f,
                    "{order} vertices exceed the exhaustive-search cap of {cap}"
                )
            }
            InvariantError::TooFewVertices { order } => {
                write!(f, "no admissible subset on {order} vertices")
            }
        }
    }
}

impl core::error::Error for InvariantError {}

/// Limits for exhaustive subset scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    pub cap: usize,
    /// Restrict to `2|S| < n` instead of `|S| ≤ ⌊n/2⌋`.
    pub strict: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self {
            cap: DEFAULT_EXHAUSTIVE_CAP,
            strict: false,
        }
    }
}

pub(crate) fn check_cap(n: usize, cap: usize) -> Result<(), InvariantError> {
    let cap = cap.min(MAX_EXHAUSTIVE_CAP);
    if n > cap {
        return Err(InvariantError::SizeCapExceeded { order: n, cap });
    }
    Ok(())
}

/// Adjacency rows as single-word masks; only valid for at most 64 vertices.
pub(crate) fn adjacency_masks(g: &CommutingGraph) -> Vec<u64> {
    (0..g.order())
        .map(|u| g.neighbors(u).to_mask().expect("at most 64 vertices"))
        .collect()
}

/// Calls `visit(mask, |S|, |∂S|)` for every nonempty subset, in Gray-code
/// order so that each step flips one vertex and updates the boundary
/// incrementally.
pub(crate) fn gray_scan(adj: &[u64], mut visit: impl FnMut(u64, usize, usize)) {
    let n = adj.len();
    debug_assert!(n < 64);
    let degree: Vec<i64> = adj.iter().map(|a| a.count_ones() as i64).collect();
    let mut mask = 0u64;
    let mut size = 0usize;
    let mut boundary = 0i64;
    for i in 1..(1u64 << n) {
        let v = i.trailing_zeros() as usize;
        let bit = 1u64 << v;
        if mask & bit == 0 {
            boundary += degree[v] - 2 * (adj[v] & mask).count_ones() as i64;
            mask |= bit;
            size += 1;
        } else {
            mask &= !bit;
            size -= 1;
            boundary += 2 * (adj[v] & mask).count_ones() as i64 - degree[v];
        }
        visit(mask, size, boundary as usize);
    }
}

pub(crate) fn subset_of_mask(n: usize, mask: u64) -> Subset {
    Subset::from_mask(n, mask)
}
