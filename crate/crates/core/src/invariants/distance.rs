use crate::graph::CommutingGraph;
use crate::group::Centralizers;
use crate::subset::Subset;
use crate::Ratio;

/// Mean of the full distance matrix, zero diagonal included.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MeanDistance {
    /// `Σ γᵢⱼ / n²` from breadth-first search.
    pub direct: Ratio,
    /// `(2n² − 2n − Σ d(v)) / n²` with `d(v) = |C(v)| − 1`, for abelian
    /// groups and groups with the centralizer trichotomy.
    pub formula: Option<Ratio>,
}

pub fn mean_distance(g: &CommutingGraph, cz: &Centralizers) -> MeanDistance {
    let n = g.order() as u64;
    let total: u64 = g
        .distance_matrix()
        .iter()
        .flatten()
        .map(|&d| d as u64)
        .sum();
    let direct = Ratio::new(total, (n * n).max(1));
    let formula = (cz.is_abelian() || cz.con_check().holds).then(|| {
        let degrees: u64 = (0..cz.order())
            .map(|v| cz.of_element(v).len() as u64 - 1)
            .sum();
        Ratio::new(2 * n * n - 2 * n - degrees, (n * n).max(1))
    });
    MeanDistance { direct, formula }
}

/// Vertices whose degree exceeds the order of the center.
pub fn big_c_set(cz: &Centralizers) -> Subset {
    let z = cz.center().len();
    Subset::from_indices(
        cz.order(),
        (0..cz.order()).filter(|&v| cz.of_element(v).len() - 1 > z),
    )
}
