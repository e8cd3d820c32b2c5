use alloc::vec::Vec;

use super::closed_form::{balancing_vector, centralizer_blocks, difference_vectors, spike};
use super::{EigenBasis, SpectrumError};
use crate::group::{Centralizers, GroupTable};

/// Which argument produced a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// The graph is connected, so `0` is simple with the all-ones vector.
    Connected,
    /// One spike vector per central element, eigenvalue `|G|`.
    CentralElements,
    /// Difference vectors on `C(u) ∖ Z` for each listed class
    /// representative `u`, eigenvalue `|C(u)|`.
    CentralizerClasses { representatives: Vec<usize> },
    /// Balancing vectors between non-central components, eigenvalue `|Z|`.
    ComponentBalance,
}

/// A lower bound on the multiplicity of an eigenvalue, witnessed by an
/// explicit integer basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub eigenvalue: u64,
    pub min_multiplicity: usize,
    pub basis: EigenBasis,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateSet {
    pub certificates: Vec<Certificate>,
    /// Class representatives `u` with `|C(u) ∖ Z| = 1`, where the
    /// single-element condition holds but yields no eigenvector.
    pub inconclusive: Vec<usize>,
    /// Whether the global trichotomy holds (and the certificates then
    /// cover the whole spectrum).
    pub con_holds: bool,
}

impl CertificateSet {
    /// Sum of all certified multiplicities.
    pub fn certified_dimension(&self) -> usize {
        self.certificates.iter().map(|c| c.min_multiplicity).sum()
    }
}

/// Certified eigenvalues of a non-abelian group, whether or not the global
/// trichotomy holds.
///
/// Classes of elements satisfying the single-element condition are taken
/// once per distinct centralizer; classes sharing the same `|C(u)|` are
/// merged into one certificate since their supports are disjoint.
pub fn spectrum_certificates(g: &GroupTable) -> Result<CertificateSet, SpectrumError> {
    let n = g.order();
    let cz = Centralizers::of(g);
    if cz.is_abelian() {
        return Err(SpectrumError::AbelianGroup);
    }
    let z = cz.center();
    let mut certificates = alloc::vec![
        certificate(0, alloc::vec![alloc::vec![1; n]], Provenance::Connected),
        certificate(
            n as u64,
            z.iter().map(|c| spike(n, c)).collect(),
            Provenance::CentralElements
        ),
    ];

    let mut inconclusive = Vec::new();
    let mut classes: Vec<(u64, Vec<usize>, Vec<Vec<i64>>)> = Vec::new();
    let mut covered = crate::subset::Subset::empty(n);
    for u in cz.condi_elements() {
        if covered.contains(u) {
            continue;
        }
        let block = cz.component_of(u);
        covered = covered.union(&block);
        if block.len() == 1 {
            inconclusive.push(u);
            continue;
        }
        let lambda = cz.of_element(u).len() as u64;
        let vectors = difference_vectors(n, &block);
        match classes.iter_mut().find(|(l, _, _)| *l == lambda) {
            Some((_, reps, vs)) => {
                reps.push(u);
                vs.extend(vectors);
            }
            None => classes.push((lambda, alloc::vec![u], vectors)),
        }
    }
    classes.sort_by_key(|(l, _, _)| *l);
    for (lambda, representatives, vectors) in classes {
        certificates.push(certificate(
            lambda,
            vectors,
            Provenance::CentralizerClasses { representatives },
        ));
    }

    let con_holds = cz.con_check().holds;
    if con_holds {
        let blocks = centralizer_blocks(&cz);
        let vectors = blocks[1..]
            .iter()
            .map(|b| balancing_vector(n, &blocks[0], b))
            .collect();
        certificates.push(certificate(
            z.len() as u64,
            vectors,
            Provenance::ComponentBalance,
        ));
    }
    certificates.sort_by_key(|c| c.eigenvalue);
    Ok(CertificateSet {
        certificates,
        inconclusive,
        con_holds,
    })
}

fn certificate(eigenvalue: u64, vectors: Vec<Vec<i64>>, provenance: Provenance) -> Certificate {
    Certificate {
        eigenvalue,
        min_multiplicity: vectors.len(),
        basis: EigenBasis {
            eigenvalue,
            vectors,
        },
        provenance,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::graph::CommutingGraph;
    use crate::spectrum::{closed_form_spectrum, laplacian};
    use alloc::vec;

    #[test]
    fn s4_three_cycle_certificate() {
        let g = catalog("symmetric:4").unwrap();
        let set = spectrum_certificates(&g).unwrap();
        assert!(!set.con_holds);
        let three = set.certificates.iter().find(|c| c.eigenvalue == 3).unwrap();
        assert_eq!(three.min_multiplicity, 4);
        match &three.provenance {
            Provenance::CentralizerClasses { representatives } => {
                assert_eq!(representatives.len(), 4)
            }
            other => panic!("unexpected provenance {other:?}"),
        }
        let top = set
            .certificates
            .iter()
            .find(|c| c.eigenvalue == 24)
            .unwrap();
        assert_eq!(top.min_multiplicity, 1);
        let l = laplacian(&CommutingGraph::build(&g));
        for c in &set.certificates {
            assert!(
                c.basis.verify(&l) && c.basis.is_full_rank(),
                "λ={}",
                c.eigenvalue
            );
        }
    }

    #[test]
    fn dihedral8_certificates_reproduce_the_closed_form() {
        let g = catalog("dihedral:8").unwrap();
        let set = spectrum_certificates(&g).unwrap();
        let got: Vec<(u64, usize)> = set
            .certificates
            .iter()
            .map(|c| (c.eigenvalue, c.min_multiplicity))
            .collect();
        let cf = closed_form_spectrum(&g)
            .unwrap()
            .report
            .exact_pairs()
            .unwrap();
        assert_eq!(got, cf);
        assert_eq!(set.certified_dimension(), 8);
        assert!(set.inconclusive.is_empty());
    }

    #[test]
    fn s3_reflections_are_inconclusive() {
        let g = catalog("symmetric:3").unwrap();
        let set = spectrum_certificates(&g).unwrap();
        assert_eq!(set.inconclusive, vec![3, 4, 5]);
        assert_eq!(set.certified_dimension(), 6);
    }

    #[test]
    fn abelian_is_rejected() {
        assert_eq!(
            spectrum_certificates(&catalog("cyclic:4").unwrap()),
            Err(SpectrumError::AbelianGroup)
        );
    }
}
