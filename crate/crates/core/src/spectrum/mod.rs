//! Laplacian spectra of commuting graphs.
//!
//! Two independent routes are provided. The closed-form route reads the
//! spectrum and an explicit integer eigenbasis off the centralizer structure
//! of the group. The numeric route diagonalizes the Laplacian with cyclic
//! Jacobi rotations and clusters the result. All exact claims are checked in
//! integer arithmetic; floating point only appears inside the numeric oracle.

mod certificates;
mod closed_form;
mod cluster;
mod cross_check;
mod exact;
mod jacobi;
mod laplacian;

use alloc::vec::Vec;
use core::fmt;

pub use certificates::{spectrum_certificates, Certificate, CertificateSet, Provenance};
pub(crate) use closed_form::closed_form_from_centralizers;
pub use closed_form::{closed_form_spectrum, ClosedForm};
pub use cluster::{cluster_multiplicities, DEFAULT_CLUSTER_GAP};
pub use cross_check::{analyze_spectrum, SpectrumAnalysis, Verdict};
pub use exact::{basis_rank, verify_eigenpair};
pub use jacobi::{
    numeric_spectrum, numeric_spectrum_with, JacobiConfig, DEFAULT_MAX_SWEEPS, DEFAULT_TOLERANCE,
};
pub use laplacian::{laplacian, LaplacianMatrix};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpectrumError {
    /// The group is non-abelian and fails the centralizer trichotomy.
    ConditionNotSatisfied {
        witness: (usize, usize),
    },
    /// Certificates are only defined for non-abelian groups.
    AbelianGroup,
    NoConvergence {
        sweeps: usize,
        off_diagonal: f64,
    },
    /// Two neighbouring eigenvalues are neither clearly equal nor clearly
    /// apart; tighten the solver tolerance.
    AmbiguousClustering {
        left: f64,
        right: f64,
    },
}

impl fmt::Display for SpectrumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectrumError::ConditionNotSatisfied { witness: (u, v) } => {
                write!(
                    f,
                    "centralizers of {u} and {v} are distinct but meet outside the center"
                )
            }
            SpectrumError::AbelianGroup => write!(f, "group is abelian"),
            SpectrumError::NoConvergence {
                sweeps,
                off_diagonal,
            } => {
                write!(
                    f,
                    "Jacobi did not converge in {sweeps} sweeps (off-diagonal {off_diagonal:e})"
                )
            }
            SpectrumError::AmbiguousClustering { left, right } => {
                write!(f, "ambiguous eigenvalue gap between {left} and {right}")
            }
        }
    }
}

impl core::error::Error for SpectrumError {}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Eigenvalue {
    Exact(u64),
    /// A numeric cluster that is not within the clustering gap of an integer.
    Approx(f64),
}

impl Eigenvalue {
    pub fn as_f64(self) -> f64 {
        match self {
            Eigenvalue::Exact(v) => v as f64,
            Eigenvalue::Approx(v) => v,
        }
    }

    pub fn exact(self) -> Option<u64> {
        match self {
            Eigenvalue::Exact(v) => Some(v),
            Eigenvalue::Approx(_) => None,
        }
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eigenvalue::Exact(v) => write!(f, "{v}"),
            Eigenvalue::Approx(v) => write!(f, "{v:.9}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumSource {
    ClosedForm,
    Numeric,
    Certificate,
}

impl SpectrumSource {
    pub fn as_str(self) -> &'static str {
        match self {
            SpectrumSource::ClosedForm => "closed_form",
            SpectrumSource::Numeric => "numeric",
            SpectrumSource::Certificate => "certificate",
        }
    }
}

/// A spectrum as a multiset: strictly increasing eigenvalues with
/// multiplicities.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    pub source: SpectrumSource,
    pub pairs: Vec<(Eigenvalue, usize)>,
}

impl SpectrumReport {
    /// Sum of multiplicities.
    pub fn total(&self) -> usize {
        self.pairs.iter().map(|&(_, m)| m).sum()
    }

    pub fn multiplicity_of(&self, value: u64) -> usize {
        self.pairs
            .iter()
            .find(|(e, _)| e.exact() == Some(value))
            .map_or(0, |&(_, m)| m)
    }

    /// Whether every eigenvalue is an exact integer.
    pub fn is_exact(&self) -> bool {
        self.pairs.iter().all(|(e, _)| e.exact().is_some())
    }

    /// `(value, multiplicity)` pairs when every eigenvalue is exact.
    pub fn exact_pairs(&self) -> Option<Vec<(u64, usize)>> {
        self.pairs
            .iter()
            .map(|&(e, m)| e.exact().map(|v| (v, m)))
            .collect()
    }

    /// `Σ multiplicity · eigenvalue`, when exact.
    pub fn weighted_sum(&self) -> Option<u64> {
        self.pairs
            .iter()
            .map(|&(e, m)| e.exact().map(|v| v * m as u64))
            .sum()
    }

    /// Eigenvalues listed with repetition, ascending.
    pub fn expanded(&self) -> Vec<f64> {
        self.pairs
            .iter()
            .flat_map(|&(e, m)| core::iter::repeat_n(e.as_f64(), m))
            .collect()
    }

    /// The `k`-th smallest distinct eigenvalue (0-based).
    pub fn distinct(&self, k: usize) -> Option<Eigenvalue> {
        self.pairs.get(k).map(|&(e, _)| e)
    }

    /// Second-smallest eigenvalue counted with multiplicity.
    pub fn algebraic_connectivity(&self) -> Option<Eigenvalue> {
        let mut seen = 0;
        for &(e, m) in &self.pairs {
            seen += m;
            if seen >= 2 {
                return Some(e);
            }
        }
        None
    }
}

/// Integer eigenvectors for one eigenvalue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenBasis {
    pub eigenvalue: u64,
    pub vectors: Vec<Vec<i64>>,
}

impl EigenBasis {
    /// Every vector is a nonzero exact eigenvector of `l`.
    pub fn verify(&self, l: &LaplacianMatrix) -> bool {
        self.vectors
            .iter()
            .all(|y| verify_eigenpair(l, self.eigenvalue as i64, y))
    }

    pub fn is_full_rank(&self) -> bool {
        basis_rank(&self.vectors) == self.vectors.len()
    }
}

pub(crate) fn report_from_exact(
    source: SpectrumSource,
    mut pairs: Vec<(u64, usize)>,
) -> SpectrumReport {
    pairs.sort_unstable();
    let mut merged: Vec<(Eigenvalue, usize)> = Vec::new();
    for (v, m) in pairs.into_iter().filter(|&(_, m)| m > 0) {
        match merged.last_mut() {
            Some((Eigenvalue::Exact(last), count)) if *last == v => *count += m,
            _ => merged.push((Eigenvalue::Exact(v), m)),
        }
    }
    SpectrumReport {
        source,
        pairs: merged,
    }
}

/// Groups basis vectors by eigenvalue, concatenating coinciding values.
pub(crate) fn merge_bases(mut bases: Vec<EigenBasis>) -> Vec<EigenBasis> {
    bases.sort_by_key(|b| b.eigenvalue);
    let mut out: Vec<EigenBasis> = Vec::new();
    for b in bases.into_iter().filter(|b| !b.vectors.is_empty()) {
        match out.last_mut() {
            Some(last) if last.eigenvalue == b.eigenvalue => last.vectors.extend(b.vectors),
            _ => out.push(b),
        }
    }
    out
}
