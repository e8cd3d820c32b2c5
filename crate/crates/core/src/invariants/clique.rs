use alloc::vec::Vec;

use super::{adjacency_masks, big_c_set, check_cap, subset_of_mask, InvariantError};
use crate::graph::CommutingGraph;
use crate::group::Centralizers;
use crate::spectrum::closed_form_from_centralizers;
use crate::subset::Subset;

/// Largest clique, by branch and bound with a greedy-colouring bound.
pub fn clique_number(g: &CommutingGraph, cap: usize) -> Result<(usize, Subset), InvariantError> {
    check_cap(g.order(), cap)?;
    let mask = max_clique(&adjacency_masks(g));
    Ok((mask.count_ones() as usize, subset_of_mask(g.order(), mask)))
}

/// Largest independent set, as a largest clique of the complement.
pub fn independence_number(
    g: &CommutingGraph,
    cap: usize,
) -> Result<(usize, Subset), InvariantError> {
    let n = g.order();
    check_cap(n, cap)?;
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let complement: Vec<u64> = adjacency_masks(g)
        .iter()
        .enumerate()
        .map(|(v, a)| !a & all & !(1 << v))
        .collect();
    let mask = max_clique(&complement);
    Ok((mask.count_ones() as usize, subset_of_mask(n, mask)))
}

/// Clique number read off the centralizer structure: `|G|` for abelian
/// groups; under the trichotomy, the second largest distinct Laplacian
/// eigenvalue when some non-central vertex has degree above `|Z|`, and
/// `|Z| + 1` otherwise.
pub fn clique_formula(cz: &Centralizers) -> Option<u64> {
    let n = cz.order() as u64;
    if cz.is_abelian() {
        return Some(n);
    }
    let closed = closed_form_from_centralizers(cz).ok()?;
    let z = cz.center();
    if big_c_set(cz).is_subset(z) {
        return Some(z.len() as u64 + 1);
    }
    let values: Vec<u64> = closed.bases.iter().map(|b| b.eigenvalue).collect();
    values.len().checked_sub(2).map(|i| values[i])
}

/// `[1, |G| − c + 1]` with `c` the smallest centralizer order.
pub fn independence_bounds(cz: &Centralizers) -> (u64, u64) {
    (1, (cz.order() - cz.min_size() + 1) as u64)
}

/// The third smallest distinct Laplacian eigenvalue `λ₃`, for groups with
/// the centralizer trichotomy in which every vertex has degree above `|Z|`.
/// Then `λ₃` is the smallest centralizer order and `α ≤ |G| − λ₃ + 1`.
pub fn third_eigenvalue_bound(cz: &Centralizers) -> Option<u64> {
    if cz.is_abelian() || big_c_set(cz).len() != cz.order() {
        return None;
    }
    let closed = closed_form_from_centralizers(cz).ok()?;
    closed.bases.get(2).map(|b| b.eigenvalue)
}

fn max_clique(adj: &[u64]) -> u64 {
    let n = adj.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut search = Search {
        adj,
        best: 0,
        best_size: 0,
    };
    if n > 0 {
        search.expand(0, 0, all);
    }
    search.best
}

struct Search<'a> {
    adj: &'a [u64],
    best: u64,
    best_size: usize,
}

impl Search<'_> {
    fn expand(&mut self, current: u64, size: usize, mut candidates: u64) {
        let (order, colors) = self.colour(candidates);
        for i in (0..order.len()).rev() {
            if size + colors[i] <= self.best_size {
                return;
            }
            let v = order[i];
            let next = candidates & self.adj[v];
            let with_v = current | 1 << v;
            if next == 0 {
                if size + 1 > self.best_size {
                    self.best = with_v;
                    self.best_size = size + 1;
                }
            } else {
                self.expand(with_v, size + 1, next);
            }
            candidates &= !(1 << v);
        }
    }

    /// Greedy sequential colouring; vertices come out in non-decreasing
    /// colour, and the colour of each bounds the clique size among the
    /// vertices up to it.
    fn colour(&self, candidates: u64) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::new();
        let mut colors = Vec::new();
        let mut uncoloured = candidates;
        let mut colour = 0;
        while uncoloured != 0 {
            colour += 1;
            let mut available = uncoloured;
            while available != 0 {
                let v = available.trailing_zeros() as usize;
                order.push(v);
                colors.push(colour);
                uncoloured &= !(1 << v);
                available &= !(1 << v) & !self.adj[v];
            }
        }
        (order, colors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use proptest::prelude::*;

    fn setup(spec: &str) -> (Centralizers, CommutingGraph) {
        let g = catalog(spec).unwrap();
        (Centralizers::of(&g), CommutingGraph::build(&g))
    }

    /// Oracle: largest subset whose members are pairwise related.
    fn brute(adj: &[u64]) -> usize {
        let n = adj.len();
        (0u64..1 << n)
            .filter(|&m| {
                (0..n)
                    .filter(|&v| m >> v & 1 == 1)
                    .all(|v| m & !(1 << v) & !adj[v] == 0)
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn documented_values() {
        let (cz, g) = setup("dihedral:8");
        let (w, s) = clique_number(&g, 16).unwrap();
        assert_eq!(w, 4);
        assert!(s
            .iter()
            .all(|u| s.iter().all(|v| u == v || g.adjacent(u, v))));
        assert_eq!(clique_formula(&cz), Some(4));
        assert_eq!(independence_number(&g, 16).unwrap().0, 3);
        assert_eq!(independence_bounds(&cz), (1, 5));
        assert_eq!(third_eigenvalue_bound(&cz), Some(4));

        let (cz, g) = setup("symmetric:3");
        assert_eq!(clique_number(&g, 16).unwrap().0, 3);
        assert_eq!(clique_formula(&cz), Some(3));
        // The three reflections together with one rotation are pairwise
        // non-commuting.
        let (a, s) = independence_number(&g, 16).unwrap();
        assert_eq!(a, 4);
        assert_eq!(s.len(), 4);
        assert!(s.iter().all(|u| s.iter().all(|v| !g.adjacent(u, v))));
        assert_eq!(independence_bounds(&cz), (1, 5));
        assert_eq!(third_eigenvalue_bound(&cz), None);

        let (cz, g) = setup("cyclic:8");
        assert_eq!(clique_number(&g, 16).unwrap().0, 8);
        assert_eq!(clique_formula(&cz), Some(8));
        assert_eq!(independence_number(&g, 16).unwrap().0, 1);
        assert_eq!(independence_bounds(&cz), (1, 1));
    }

    #[test]
    fn agrees_with_brute_force() {
        for spec in [
            "symmetric:3",
            "dihedral:10",
            "dihedral:12",
            "quaternion:8",
            "product:cyclic:2xsymmetric:3",
        ] {
            let (_, g) = setup(spec);
            let adj = adjacency_masks(&g);
            assert_eq!(clique_number(&g, 16).unwrap().0, brute(&adj), "{spec}");
            let n = g.order();
            let comp: Vec<u64> = adj
                .iter()
                .enumerate()
                .map(|(v, a)| !a & ((1 << n) - 1) & !(1 << v))
                .collect();
            assert_eq!(
                independence_number(&g, 16).unwrap().0,
                brute(&comp),
                "{spec}"
            );
        }
    }

    #[test]
    fn non_trichotomy_groups_have_no_formula() {
        let (cz, g) = setup("symmetric:4");
        assert_eq!(clique_formula(&cz), None);
        assert!(clique_number(&g, 16).is_err());
        assert_eq!(clique_number(&g, 24).unwrap().0, 4);
    }

    proptest! {
        #[test]
        fn random_graphs_match_brute_force(edges in proptest::collection::vec(any::<bool>(), 45)) {
            let n = 10;
            let mut adj = alloc::vec![0u64; n];
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if edges[k] {
                        adj[u] |= 1 << v;
                        adj[v] |= 1 << u;
                    }
                    k += 1;
                }
            }
            let m = max_clique(&adj);
            prop_assert_eq!(m.count_ones() as usize, brute(&adj));
            for (v, &row) in adj.iter().enumerate() {
                if m >> v & 1 == 1 {
                    prop_assert_eq!(m & !(1 << v) & !row, 0);
                }
            }
        }
    }
}
