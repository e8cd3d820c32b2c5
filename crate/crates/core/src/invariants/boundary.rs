use super::InvariantError;
use crate::graph::CommutingGraph;
use crate::group::Centralizers;
use crate::subset::Subset;
use crate::Ratio;

/// `∂S`: the edges with exactly one endpoint in `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetBoundary {
    pub subset: Subset,
    pub boundary_size: usize,
    /// `|∂S| / |S|` in lowest terms.
    pub ratio: Ratio,
}

fn proper_nonempty(order: usize, s: &Subset) -> Result<(), InvariantError> {
    if s.universe() != order {
        return Err(InvariantError::UniverseMismatch {
            subset: s.universe(),
            order,
        });
    }
    if s.is_empty() || s.len() == order {
        return Err(InvariantError::EmptyOrFullSubset);
    }
    Ok(())
}

pub fn edge_boundary(g: &CommutingGraph, s: &Subset) -> Result<SubsetBoundary, InvariantError> {
    proper_nonempty(g.order(), s)?;
    let boundary_size: usize = s.iter().map(|u| g.neighbors(u).difference_len(s)).sum();
    Ok(SubsetBoundary {
        subset: s.clone(),
        boundary_size,
        ratio: Ratio::new(boundary_size as u64, s.len() as u64),
    })
}

/// Which hypothesis of the boundary lemma a subset falls under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaCase {
    /// `S ∩ Z = ∅`.
    DisjointFromCenter,
    /// `S ⊆ Z`.
    InsideCenter,
    /// `Z ⊆ S` and `|S| ≤ |G|/2`.
    ContainsCenter,
    /// `S` meets `Z` and misses part of it: the exact boundary formula applies.
    SplitsCenter,
}

/// Classifies a nonempty proper subset; `None` when `Z ⊆ S` but `S` is more
/// than half the group.
pub fn lemma_case(center: &Subset, s: &Subset) -> Option<LemmaCase> {
    let order = center.universe();
    let meet = s.intersection_len(center);
    if meet == 0 {
        Some(LemmaCase::DisjointFromCenter)
    } else if meet == s.len() {
        Some(LemmaCase::InsideCenter)
    } else if meet == center.len() {
        (2 * s.len() <= order).then_some(LemmaCase::ContainsCenter)
    } else {
        Some(LemmaCase::SplitsCenter)
    }
}

/// `|S||Z| + |Z ∩ S|(|G| − 2|S| − |Z ∖ S|) + Σ_{u ∈ S∖Z} |F_u ∖ S|` with
/// `F_u = C(u) ∖ Z`, for a non-abelian group and a subset that meets the
/// center without containing it.
pub fn boundary_formula(cz: &Centralizers, s: &Subset) -> Result<i64, InvariantError> {
    proper_nonempty(cz.order(), s)?;
    if cz.is_abelian() {
        return Err(InvariantError::HypothesisViolated("group is abelian"));
    }
    let z = cz.center();
    let meet = s.intersection_len(z) as i64;
    let missed = z.difference_len(s) as i64;
    if meet == 0 || missed == 0 {
        return Err(InvariantError::HypothesisViolated(
            "subset must meet the center without containing it",
        ));
    }
    let (n, size) = (cz.order() as i64, s.len() as i64);
    let tail: usize = s
        .difference(z)
        .iter()
        .map(|u| cz.component_of(u).difference_len(s))
        .sum();
    Ok(size * z.len() as i64 + meet * (n - 2 * size - missed) + tail as i64)
}

/// `|∂S| / |S| ≥ |Z|` for a subset covered by one of the lemma's first
/// three hypotheses, in a non-abelian group.
pub fn boundary_lower_bounds_check(g: &CommutingGraph, s: &Subset) -> Result<bool, InvariantError> {
    proper_nonempty(g.order(), s)?;
    let z = g.center();
    if z.len() == g.order() {
        return Err(InvariantError::HypothesisViolated("group is abelian"));
    }
    match lemma_case(z, s) {
        Some(LemmaCase::SplitsCenter) | None => Err(InvariantError::HypothesisViolated(
            "subset is not disjoint from, inside, or a small superset of the center",
        )),
        Some(_) => Ok(edge_boundary(g, s)?.boundary_size >= z.len() * s.len()),
    }
}

/// `|Z|/|G| ≤ |∂S| / (|S||Sᶜ|) ≤ 1`, for groups satisfying the centralizer
/// trichotomy.
pub fn subset_ratio_bounds_check(
    g: &CommutingGraph,
    cz: &Centralizers,
    s: &Subset,
) -> Result<bool, InvariantError> {
    proper_nonempty(g.order(), s)?;
    if cz.is_abelian() || !cz.con_check().holds {
        return Err(InvariantError::HypothesisViolated(
            "group must be non-abelian with the centralizer trichotomy",
        ));
    }
    let b = edge_boundary(g, s)?.boundary_size;
    let product = s.len() * (g.order() - s.len());
    Ok(cz.center().len() * product <= g.order() * b && b <= product)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::group::GroupTable;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    fn setup(spec: &str) -> (GroupTable, CommutingGraph, Centralizers) {
        let g = catalog(spec).unwrap();
        let graph = CommutingGraph::build(&g);
        let cz = Centralizers::of(&g);
        (g, graph, cz)
    }

    fn named(g: &GroupTable, names: &[&str]) -> Subset {
        Subset::from_indices(g.order(), names.iter().map(|s| g.index_of(s).unwrap()))
    }

    #[test]
    fn documented_boundaries() {
        let (g, graph, _) = setup("dihedral:8");
        let b = edge_boundary(&graph, &named(&g, &["x", "x^3"])).unwrap();
        assert_eq!((b.boundary_size, b.ratio), (4, Ratio::from_integer(2)));
        let b = edge_boundary(&graph, &Subset::singleton(8, g.identity())).unwrap();
        assert_eq!(b.boundary_size, 7);

        let (g, graph, _) = setup("symmetric:3");
        assert_eq!(
            edge_boundary(&graph, &named(&g, &["(1 2)"]))
                .unwrap()
                .boundary_size,
            1
        );
        assert_eq!(
            edge_boundary(&graph, &Subset::full(6)),
            Err(InvariantError::EmptyOrFullSubset)
        );
        assert_eq!(
            edge_boundary(&graph, &Subset::empty(6)),
            Err(InvariantError::EmptyOrFullSubset)
        );
        assert!(matches!(
            edge_boundary(&graph, &Subset::singleton(7, 0)),
            Err(InvariantError::UniverseMismatch { .. })
        ));
    }

    #[test]
    fn formula_examples() {
        let (g, graph, cz) = setup("quaternion:8");
        let s = named(&g, &["id", "b"]);
        assert_eq!(
            boundary_formula(&cz, &s).unwrap(),
            edge_boundary(&graph, &s).unwrap().boundary_size as i64
        );
        let z = cz.center().clone();
        assert!(matches!(
            boundary_formula(&cz, &z.union(&named(&g, &["b"]))),
            Err(InvariantError::HypothesisViolated(_))
        ));
        let (_, _, cz) = setup("cyclic:4");
        assert!(matches!(
            boundary_formula(&cz, &Subset::singleton(4, 0)),
            Err(InvariantError::HypothesisViolated(_))
        ));
    }

    #[test]
    fn lower_bound_examples() {
        let (g, graph, _) = setup("dihedral:8");
        assert!(boundary_lower_bounds_check(&graph, &named(&g, &["y"])).unwrap());
        assert_eq!(
            edge_boundary(&graph, &named(&g, &["y"])).unwrap().ratio,
            Ratio::from_integer(3)
        );
        assert!(boundary_lower_bounds_check(&graph, &named(&g, &["id", "x^2", "x"])).unwrap());
        let big = named(&g, &["id", "x^2", "x", "y", "xy"]);
        assert!(matches!(
            boundary_lower_bounds_check(&graph, &big),
            Err(InvariantError::HypothesisViolated(_))
        ));

        let (g, graph, _) = setup("symmetric:3");
        let s = Subset::singleton(6, g.identity());
        assert_eq!(
            lemma_case(graph.center(), &s),
            Some(LemmaCase::InsideCenter)
        );
        assert!(boundary_lower_bounds_check(&graph, &s).unwrap());
        assert_eq!(
            edge_boundary(&graph, &s).unwrap().ratio,
            Ratio::from_integer(5)
        );
    }

    #[test]
    fn ratio_bounds_examples() {
        let (g, graph, cz) = setup("quaternion:8");
        let cb = cz.of_element(g.index_of("b").unwrap()).clone();
        let b = edge_boundary(&graph, &cb).unwrap().boundary_size;
        assert_eq!(Ratio::new(b as u64, 16), Ratio::new(1, 2));
        assert!(subset_ratio_bounds_check(&graph, &cz, &cb).unwrap());
        let id = Subset::singleton(8, g.identity());
        assert_eq!(edge_boundary(&graph, &id).unwrap().boundary_size, 7);
        assert!(subset_ratio_bounds_check(&graph, &cz, &id).unwrap());

        let (_, graph, cz) = setup("symmetric:4");
        assert!(subset_ratio_bounds_check(&graph, &cz, &Subset::singleton(24, 0)).is_err());
    }

    #[test]
    fn formula_matches_count_exhaustively_on_dihedral8() {
        let (_, graph, cz) = setup("dihedral:8");
        let mut checked = 0;
        for mask in 1..255u64 {
            let s = Subset::from_mask(8, mask);
            if let Ok(f) = boundary_formula(&cz, &s) {
                assert_eq!(
                    f,
                    edge_boundary(&graph, &s).unwrap().boundary_size as i64,
                    "{s:?}"
                );
                checked += 1;
            }
        }
        // Subsets meeting the two-element center in exactly one point.
        assert_eq!(checked, 2 * 64);
    }

    proptest! {
        #[test]
        fn boundary_counts_edges_across(mask in 1u64..(1 << 12) - 1) {
            let (_, graph, _) = setup("dihedral:12");
            let s = Subset::from_mask(12, mask);
            let across = graph.edges().filter(|&(u, v)| s.contains(u) != s.contains(v)).count();
            prop_assert_eq!(edge_boundary(&graph, &s).unwrap().boundary_size, across);
            let complement = edge_boundary(&graph, &s.complement()).unwrap().boundary_size;
            prop_assert_eq!(complement, across);
        }

        #[test]
        fn lower_bound_holds_where_applicable(mask in 1u64..(1 << 10) - 1) {
            let (_, graph, _) = setup("dihedral:10");
            let s = Subset::from_mask(10, mask);
            if let Ok(ok) = boundary_lower_bounds_check(&graph, &s) {
                prop_assert!(ok);
            }
        }
    }

    #[test]
    fn lemma_cases_partition_the_admissible_subsets() {
        let (_, graph, _) = setup("dihedral:8");
        let cases: Vec<Option<LemmaCase>> = (1..255u64)
            .map(|m| lemma_case(graph.center(), &Subset::from_mask(8, m)))
            .collect();
        assert!(cases.contains(&None));
        assert!(cases.contains(&Some(LemmaCase::ContainsCenter)));
    }
}
