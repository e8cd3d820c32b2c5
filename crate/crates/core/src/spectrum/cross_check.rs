use alloc::vec::Vec;

use super::{
    closed_form_spectrum, cluster_multiplicities, laplacian, numeric_spectrum,
    spectrum_certificates, CertificateSet, ClosedForm, LaplacianMatrix, SpectrumError,
    SpectrumReport, DEFAULT_CLUSTER_GAP,
};
use crate::graph::CommutingGraph;
use crate::group::GroupTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Closed form and numeric multisets coincide.
    Agree,
    Disagree,
    /// Every certified multiplicity is met by the numeric spectrum.
    CertificatesConsistent,
    CertificatesInconsistent,
    /// The numeric route produced no multiset to compare against.
    NumericFailed,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Agree => "agree",
            Verdict::Disagree => "disagree",
            Verdict::CertificatesConsistent => "certificates-consistent",
            Verdict::CertificatesInconsistent => "certificates-inconsistent",
            Verdict::NumericFailed => "numeric-failed",
        }
    }

    pub fn is_ok(self) -> bool {
        matches!(self, Verdict::Agree | Verdict::CertificatesConsistent)
    }
}

/// Both spectrum routes for one group, compared.
#[derive(Debug, Clone)]
pub struct SpectrumAnalysis {
    pub laplacian: LaplacianMatrix,
    pub closed_form: Result<ClosedForm, SpectrumError>,
    /// Present for non-abelian groups.
    pub certificates: Option<CertificateSet>,
    /// Raw eigenvalues, ascending.
    pub numeric_values: Result<Vec<f64>, SpectrumError>,
    pub numeric: Result<SpectrumReport, SpectrumError>,
    /// Every closed-form (or, failing that, certificate) basis vector is an
    /// exact eigenvector of the Laplacian and each basis has full rank.
    pub bases_sound: bool,
    pub verdict: Verdict,
}

/// Runs the closed form (or certificates) from `g` and the numeric solver on
/// `graph`, and compares them.
pub fn analyze_spectrum(
    g: &GroupTable,
    graph: &CommutingGraph,
    tolerance: f64,
) -> SpectrumAnalysis {
    let l = laplacian(graph);
    let closed_form = closed_form_spectrum(g);
    let certificates = spectrum_certificates(g).ok();
    let numeric_values = numeric_spectrum(&l, tolerance);
    let numeric = numeric_values
        .clone()
        .and_then(|v| cluster_multiplicities(&v, DEFAULT_CLUSTER_GAP));

    let bases_sound = match (&closed_form, &certificates) {
        (Ok(cf), _) => cf.bases.iter().all(|b| b.verify(&l) && b.is_full_rank()),
        (Err(_), Some(set)) => set
            .certificates
            .iter()
            .all(|c| c.basis.verify(&l) && c.basis.is_full_rank()),
        (Err(_), None) => false,
    };

    let verdict = match (&numeric, &closed_form, &certificates) {
        (Err(_), _, _) => Verdict::NumericFailed,
        (Ok(num), Ok(cf), _) => {
            if num.pairs == cf.report.pairs {
                Verdict::Agree
            } else {
                Verdict::Disagree
            }
        }
        (Ok(num), Err(_), Some(set)) => {
            if set
                .certificates
                .iter()
                .all(|c| num.multiplicity_of(c.eigenvalue) >= c.min_multiplicity)
            {
                Verdict::CertificatesConsistent
            } else {
                Verdict::CertificatesInconsistent
            }
        }
        (Ok(_), Err(_), None) => Verdict::Disagree,
    };

    SpectrumAnalysis {
        laplacian: l,
        closed_form,
        certificates,
        numeric_values,
        numeric,
        bases_sound,
        verdict,
    }
}
