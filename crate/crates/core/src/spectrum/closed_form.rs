use alloc::vec::Vec;

use super::{
    merge_bases, report_from_exact, EigenBasis, SpectrumError, SpectrumReport, SpectrumSource,
};
use crate::group::{Centralizers, GroupTable};
use crate::subset::Subset;

/// Spectrum and eigenbases read off the centralizer structure.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedForm {
    pub report: SpectrumReport,
    /// One basis per distinct eigenvalue, ascending; sizes equal the
    /// multiplicities in `report`.
    pub bases: Vec<EigenBasis>,
}

/// Closed-form Laplacian spectrum for abelian groups and for non-abelian
/// groups satisfying the centralizer trichotomy.
///
/// For an abelian group of order `n` the graph is `Kₙ` and the spectrum is
/// `{0¹, nⁿ⁻¹}`. Otherwise, with `Z` the center and `F₀ … F_{r−1}` the blocks
/// `C(u) ∖ Z`, the spectrum is `0` once, `|Z|` with multiplicity `r − 1`,
/// `|C(u)|` with multiplicity `|Fᵢ| − 1` for each block, and `|G|` with
/// multiplicity `|Z|`.
pub fn closed_form_spectrum(g: &GroupTable) -> Result<ClosedForm, SpectrumError> {
    closed_form_from_centralizers(&Centralizers::of(g))
}

pub(crate) fn closed_form_from_centralizers(
    cz: &Centralizers,
) -> Result<ClosedForm, SpectrumError> {
    let n = cz.order();
    let ones = alloc::vec![1i64; n];
    let mut bases = alloc::vec![EigenBasis {
        eigenvalue: 0,
        vectors: alloc::vec![ones]
    }];

    if cz.is_abelian() {
        let vectors = (0..n.saturating_sub(1)).map(|i| spike(n, i)).collect();
        bases.push(EigenBasis {
            eigenvalue: n as u64,
            vectors,
        });
    } else {
        let check = cz.con_check();
        if let Some(witness) = check.witness {
            return Err(SpectrumError::ConditionNotSatisfied { witness });
        }
        let z = cz.center();
        let blocks = centralizer_blocks(cz);
        let first = &blocks[0];
        bases.push(EigenBasis {
            eigenvalue: z.len() as u64,
            vectors: blocks[1..]
                .iter()
                .map(|b| balancing_vector(n, first, b))
                .collect(),
        });
        for block in &blocks {
            let rep = block.first().expect("blocks are nonempty");
            let lambda = cz.of_element(rep).len();
            assert!(
                lambda > z.len(),
                "non-central centralizer no larger than the center"
            );
            bases.push(EigenBasis {
                eigenvalue: lambda as u64,
                vectors: difference_vectors(n, block),
            });
        }
        bases.push(EigenBasis {
            eigenvalue: n as u64,
            vectors: z.iter().map(|c| spike(n, c)).collect(),
        });
    }

    let bases = merge_bases(bases);
    let report = report_from_exact(
        SpectrumSource::ClosedForm,
        bases
            .iter()
            .map(|b| (b.eigenvalue, b.vectors.len()))
            .collect(),
    );
    debug_assert_eq!(report.total(), n);
    Ok(ClosedForm { report, bases })
}

/// Distinct sets `C(u) ∖ Z` over non-central `u`, ordered by smallest member.
pub(crate) fn centralizer_blocks(cz: &Centralizers) -> Vec<Subset> {
    let mut blocks: Vec<Subset> = Vec::new();
    for u in cz.noncentral().iter() {
        if !blocks.iter().any(|b| b.contains(u)) {
            blocks.push(cz.component_of(u));
        }
    }
    blocks.sort_by_key(|a| a.first());
    blocks
}

/// `n − 1` at `at`, `−1` elsewhere: eigenvector for `|G|` when `at` is
/// central.
pub(crate) fn spike(n: usize, at: usize) -> Vec<i64> {
    let mut y = alloc::vec![-1i64; n];
    y[at] = n as i64 - 1;
    y
}

/// `+1` on each member of `block` but the last, `−1` on the last.
pub(crate) fn difference_vectors(n: usize, block: &Subset) -> Vec<Vec<i64>> {
    let members = block.to_vec();
    let Some((&last, rest)) = members.split_last() else {
        return Vec::new();
    };
    rest.iter()
        .map(|&v| {
            let mut y = alloc::vec![0i64; n];
            y[v] = 1;
            y[last] = -1;
            y
        })
        .collect()
}

/// `|F₀|` on `other`, `−|other|` on `F₀`, zero elsewhere.
pub(crate) fn balancing_vector(n: usize, first: &Subset, other: &Subset) -> Vec<i64> {
    let mut y = alloc::vec![0i64; n];
    for v in other {
        y[v] = first.len() as i64;
    }
    for v in first {
        y[v] = -(other.len() as i64);
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::graph::CommutingGraph;
    use crate::spectrum::laplacian;
    use alloc::vec;

    fn pairs(spec: &str) -> Vec<(u64, usize)> {
        closed_form_spectrum(&catalog(spec).unwrap())
            .unwrap()
            .report
            .exact_pairs()
            .unwrap()
    }

    #[test]
    fn small_nonabelian_spectra() {
        assert_eq!(pairs("symmetric:3"), vec![(0, 1), (1, 3), (3, 1), (6, 1)]);
        assert_eq!(pairs("dihedral:8"), vec![(0, 1), (2, 2), (4, 3), (8, 2)]);
        assert_eq!(pairs("quaternion:8"), vec![(0, 1), (2, 2), (4, 3), (8, 2)]);
        assert_eq!(pairs("cyclic:8"), vec![(0, 1), (8, 7)]);
        assert_eq!(pairs("cyclic:1"), vec![(0, 1)]);
    }

    #[test]
    fn s4_is_rejected_with_a_witness() {
        let err = closed_form_spectrum(&catalog("symmetric:4").unwrap()).unwrap_err();
        assert!(matches!(err, SpectrumError::ConditionNotSatisfied { .. }));
    }

    #[test]
    fn bases_are_exact_and_independent() {
        for spec in [
            "symmetric:3",
            "dihedral:8",
            "quaternion:8",
            "dihedral:18",
            "cyclic:5",
            "product:cyclic:3xsymmetric:3",
        ] {
            let g = catalog(spec).unwrap();
            let l = laplacian(&CommutingGraph::build(&g));
            let cf = closed_form_spectrum(&g).unwrap();
            let dims: usize = cf.bases.iter().map(|b| b.vectors.len()).sum();
            assert_eq!(dims, g.order(), "{spec}");
            for b in &cf.bases {
                assert!(b.verify(&l), "{spec} λ={}", b.eigenvalue);
                assert!(b.is_full_rank(), "{spec} λ={}", b.eigenvalue);
            }
        }
    }
}
