use super::{adjacency_masks, check_cap, gray_scan, subset_of_mask, InvariantError, ScanOptions};
use crate::graph::CommutingGraph;
use crate::group::Centralizers;
use crate::subset::{mask_lex_less, Subset};
use crate::Ratio;

/// Minimum of `|∂S| / |S|` with a minimizing subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isoperimetric {
    pub ratio: Ratio,
    pub boundary: usize,
    /// Lexicographically smallest minimizer (by sorted member list).
    pub witness: Subset,
}

/// Exact isoperimetric number by scanning every admissible subset.
///
/// Admissible means `0 < |S| ≤ ⌊n/2⌋`, or `0 < 2|S| < n` with
/// `options.strict`.
pub fn isoperimetric_exact(
    g: &CommutingGraph,
    options: ScanOptions,
) -> Result<Isoperimetric, InvariantError> {
    let n = g.order();
    check_cap(n, options.cap)?;
    let limit = if options.strict {
        n.saturating_sub(1) / 2
    } else {
        n / 2
    };
    if limit == 0 {
        return Err(InvariantError::TooFewVertices { order: n });
    }
    let adj = adjacency_masks(g);
    // (boundary, size, mask) of the best subset so far.
    let mut best: Option<(usize, usize, u64)> = None;
    gray_scan(&adj, |mask, size, boundary| {
        if size == 0 || size > limit {
            return;
        }
        let better = match best {
            None => true,
            Some((bb, bs, bm)) => {
                let (lhs, rhs) = (boundary * bs, bb * size);
                lhs < rhs || (lhs == rhs && mask_lex_less(mask, bm))
            }
        };
        if better {
            best = Some((boundary, size, mask));
        }
    });
    let (boundary, size, mask) = best.expect("limit ≥ 1 admits singletons");
    Ok(Isoperimetric {
        ratio: Ratio::new(boundary as u64, size as u64),
        boundary,
        witness: subset_of_mask(n, mask),
    })
}

/// Which closed-form case determined the isoperimetric number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremCase {
    /// Complete graph: `⌈n/2⌉`.
    Abelian,
    /// Trichotomy with trivial center: `1`.
    TrivialCenter,
    /// Trichotomy, `|Z| = 2`, all blocks of size `l < n/2` with
    /// `l ∤ (n/2 − 1)`: `2`.
    CenterOfOrderTwo { block: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsoperimetricClaim {
    Exact {
        value: Ratio,
        case: TheoremCase,
    },
    /// `lower ≤ i ≤ √upper_squared`.
    Bounds {
        lower: Ratio,
        upper_squared: u64,
    },
    Unknown,
}

/// The isoperimetric number as far as the centralizer structure determines
/// it without search.
pub fn isoperimetric_theorem(cz: &Centralizers) -> IsoperimetricClaim {
    let n = cz.order();
    if cz.is_abelian() {
        if n < 2 {
            return IsoperimetricClaim::Unknown;
        }
        return IsoperimetricClaim::Exact {
            value: Ratio::from_integer(n.div_ceil(2) as u64),
            case: TheoremCase::Abelian,
        };
    }
    let Some((lower, upper_squared)) = isoperimetric_bounds(cz) else {
        return IsoperimetricClaim::Unknown;
    };
    let z = cz.center().len();
    if z == 1 {
        return IsoperimetricClaim::Exact {
            value: Ratio::from_integer(1),
            case: TheoremCase::TrivialCenter,
        };
    }
    if z == 2 {
        let noncentral = cz.noncentral();
        let mut sizes = noncentral.iter().map(|u| cz.component_of(u).len());
        let l = sizes.next().expect("non-abelian");
        if sizes.all(|m| m == l) && 2 * l < n && !(n / 2 - 1).is_multiple_of(l) {
            return IsoperimetricClaim::Exact {
                value: Ratio::from_integer(2),
                case: TheoremCase::CenterOfOrderTwo { block: l },
            };
        }
    }
    IsoperimetricClaim::Bounds {
        lower,
        upper_squared,
    }
}

/// `(|Z|/2, |Z|(2(n−1) − |Z|))`: the lower bound and the square of the upper
/// bound, for non-abelian groups with the centralizer trichotomy.
pub fn isoperimetric_bounds(cz: &Centralizers) -> Option<(Ratio, u64)> {
    if cz.is_abelian() || !cz.con_check().holds {
        return None;
    }
    let (n, z) = (cz.order() as u64, cz.center().len() as u64);
    Some((Ratio::new(z, 2), z * (2 * (n - 1) - z)))
}

/// A smallest block `C(u) ∖ Z` (first by smallest member among ties), for
/// non-abelian groups with the centralizer trichotomy.
pub fn smallest_component(cz: &Centralizers) -> Option<Subset> {
    if cz.is_abelian() || !cz.con_check().holds {
        return None;
    }
    cz.noncentral()
        .iter()
        .map(|u| cz.component_of(u))
        .min_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(b)))
}

/// Minimum `|∂S|` over `|S| = ⌊n/2⌋`, with the lexicographically smallest
/// minimizer.
pub fn bipartition_width(
    g: &CommutingGraph,
    cap: usize,
) -> Result<(usize, Subset), InvariantError> {
    let n = g.order();
    check_cap(n, cap)?;
    let half = n / 2;
    if half == 0 {
        return Err(InvariantError::TooFewVertices { order: n });
    }
    let adj = adjacency_masks(g);
    let mut best: Option<(usize, u64)> = None;
    gray_scan(&adj, |mask, size, boundary| {
        if size != half {
            return;
        }
        if best.is_none_or(|(bb, bm)| boundary < bb || (boundary == bb && mask_lex_less(mask, bm)))
        {
            best = Some((boundary, mask));
        }
    });
    let (width, mask) = best.expect("half ≥ 1");
    Ok((width, subset_of_mask(n, mask)))
}

/// `n|Z|/4` for even `n`, `(n² − 1)|Z|/(4n)` for odd `n`, for non-abelian
/// groups with the centralizer trichotomy.
pub fn bipartition_lower_bound(cz: &Centralizers) -> Option<Ratio> {
    if cz.is_abelian() || !cz.con_check().holds {
        return None;
    }
    let (n, z) = (cz.order() as u64, cz.center().len() as u64);
    Some(if n % 2 == 0 {
        Ratio::new(n * z, 4)
    } else {
        Ratio::new((n * n - 1) * z, 4 * n)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::group::GroupTable;
    use crate::invariants::edge_boundary;
    use crate::perm::Permutation;
    use alloc::vec::Vec;

    fn graph(spec: &str) -> (Centralizers, CommutingGraph) {
        let g = catalog(spec).unwrap();
        (Centralizers::of(&g), CommutingGraph::build(&g))
    }

    fn iso(spec: &str) -> Ratio {
        isoperimetric_exact(&graph(spec).1, ScanOptions::default())
            .unwrap()
            .ratio
    }

    /// Independent oracle: enumerate subsets as index lists, no bit tricks.
    fn brute_force(g: &CommutingGraph, limit: usize) -> Ratio {
        let n = g.order();
        let mut best: Option<Ratio> = None;
        for mask in 1u64..(1 << n) {
            let members: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            if members.len() > limit {
                continue;
            }
            let b = members
                .iter()
                .flat_map(|&u| (0..n).map(move |v| (u, v)))
                .filter(|&(u, v)| g.adjacent(u, v) && mask >> v & 1 == 0)
                .count();
            let r = Ratio::new(b as u64, members.len() as u64);
            best = Some(best.map_or(r, |x| x.min(r)));
        }
        best.unwrap()
    }

    #[test]
    fn documented_values() {
        assert_eq!(iso("symmetric:3"), Ratio::from_integer(1));
        assert_eq!(iso("dihedral:8"), Ratio::from_integer(2));
        assert_eq!(iso("quaternion:8"), Ratio::from_integer(2));
        for n in 2u64..=9 {
            assert_eq!(
                iso(&alloc::format!("cyclic:{n}")),
                Ratio::from_integer(n.div_ceil(2))
            );
        }
    }

    #[test]
    fn agrees_with_brute_force() {
        for spec in [
            "symmetric:3",
            "dihedral:8",
            "dihedral:10",
            "dihedral:12",
            "cyclic:5",
            "product:cyclic:2xsymmetric:3",
        ] {
            let (_, g) = graph(spec);
            assert_eq!(iso(spec), brute_force(&g, g.order() / 2), "{spec}");
            let strict = isoperimetric_exact(
                &g,
                ScanOptions {
                    strict: true,
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(strict.ratio, brute_force(&g, (g.order() - 1) / 2), "{spec}");
        }
    }

    #[test]
    fn witness_is_a_minimizer_and_lexicographically_first() {
        let (_, g) = graph("dihedral:8");
        let r = isoperimetric_exact(&g, ScanOptions::default()).unwrap();
        assert_eq!(edge_boundary(&g, &r.witness).unwrap().ratio, r.ratio);
        for mask in 1u64..256 {
            let s = Subset::from_mask(8, mask);
            if s.len() <= 4 && edge_boundary(&g, &s).unwrap().ratio == r.ratio {
                assert_ne!(
                    s.lex_cmp(&r.witness),
                    core::cmp::Ordering::Less,
                    "{s:?} precedes {:?}",
                    r.witness
                );
            }
        }
    }

    #[test]
    fn strict_convention_differs_on_even_complete_graphs() {
        let (_, g) = graph("cyclic:4");
        let strict = isoperimetric_exact(
            &g,
            ScanOptions {
                strict: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(strict.ratio, Ratio::from_integer(3));
        let (_, g) = graph("cyclic:2");
        assert_eq!(
            isoperimetric_exact(
                &g,
                ScanOptions {
                    strict: true,
                    ..Default::default()
                }
            ),
            Err(InvariantError::TooFewVertices { order: 2 })
        );
        let (_, g) = graph("cyclic:1");
        assert!(isoperimetric_exact(&g, ScanOptions::default()).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        let (_, g) = graph("symmetric:4");
        assert_eq!(
            isoperimetric_exact(&g, ScanOptions::default()),
            Err(InvariantError::SizeCapExceeded { order: 24, cap: 16 })
        );
    }

    #[test]
    fn theorem_cases() {
        let (cz, _) = graph("cyclic:10");
        assert_eq!(
            isoperimetric_theorem(&cz),
            IsoperimetricClaim::Exact {
                value: Ratio::from_integer(5),
                case: TheoremCase::Abelian
            }
        );
        let (cz, _) = graph("symmetric:3");
        assert!(matches!(
            isoperimetric_theorem(&cz),
            IsoperimetricClaim::Exact {
                case: TheoremCase::TrivialCenter,
                ..
            }
        ));
        let (cz, _) = graph("dihedral:8");
        assert_eq!(
            isoperimetric_theorem(&cz),
            IsoperimetricClaim::Exact {
                value: Ratio::from_integer(2),
                case: TheoremCase::CenterOfOrderTwo { block: 2 }
            }
        );
        let (cz, _) = graph("dihedral:12");
        assert!(matches!(
            isoperimetric_theorem(&cz),
            IsoperimetricClaim::Bounds { .. }
        ));
        let (cz, _) = graph("symmetric:4");
        assert_eq!(isoperimetric_theorem(&cz), IsoperimetricClaim::Unknown);
    }

    #[test]
    fn smallest_component_ratio_is_center_order() {
        for spec in [
            "symmetric:3",
            "dihedral:8",
            "quaternion:8",
            "dihedral:12",
            "product:cyclic:3xsymmetric:3",
        ] {
            let (cz, g) = graph(spec);
            let f0 = smallest_component(&cz).unwrap();
            assert_eq!(
                edge_boundary(&g, &f0).unwrap().ratio,
                Ratio::from_integer(cz.center().len() as u64),
                "{spec}"
            );
        }
    }

    #[test]
    fn bipartition_examples() {
        let (cz, g) = graph("dihedral:8");
        let (w, s) = bipartition_width(&g, 16).unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(edge_boundary(&g, &s).unwrap().boundary_size, w);
        assert_eq!(bipartition_lower_bound(&cz), Some(Ratio::from_integer(4)));
        assert!(Ratio::from_integer(w as u64) >= Ratio::from_integer(4));

        let (_, g) = graph("cyclic:4");
        assert_eq!(bipartition_width(&g, 16).unwrap().0, 4);

        let (cz, g) = graph("symmetric:3");
        assert_eq!(bipartition_lower_bound(&cz), Some(Ratio::new(3, 2)));
        let (w, _) = bipartition_width(&g, 16).unwrap();
        let direct = (0u64..64)
            .filter(|m| m.count_ones() == 3)
            .map(|m| {
                edge_boundary(&g, &Subset::from_mask(6, m))
                    .unwrap()
                    .boundary_size
            })
            .min()
            .unwrap();
        assert_eq!(w, direct);
        assert!(Ratio::from_integer(w as u64) >= Ratio::new(3, 2));
    }

    #[test]
    fn odd_order_bipartition_bound() {
        // Frobenius group of order 21.
        let gens = [
            Permutation::parse_cycles("(1 2 3 4 5 6 7)", Some(7)).unwrap(),
            Permutation::parse_cycles("(2 3 5)(4 7 6)", Some(7)).unwrap(),
        ];
        let g = GroupTable::from_generators(&gens).unwrap();
        assert_eq!(g.order(), 21);
        let cz = Centralizers::of(&g);
        assert!(cz.con_check().holds);
        assert_eq!(bipartition_lower_bound(&cz), Some(Ratio::new(440, 84)));
        assert_eq!(
            isoperimetric_theorem(&cz),
            IsoperimetricClaim::Exact {
                value: Ratio::from_integer(1),
                case: TheoremCase::TrivialCenter
            }
        );
        let graph = CommutingGraph::build(&g);
        let (w, _) = bipartition_width(&graph, 24).unwrap();
        assert!(Ratio::from_integer(w as u64) >= Ratio::new(440, 84));
        assert_eq!(
            isoperimetric_exact(
                &graph,
                ScanOptions {
                    cap: 24,
                    strict: false
                }
            )
            .unwrap()
            .ratio,
            Ratio::from_integer(1)
        );
    }
}
