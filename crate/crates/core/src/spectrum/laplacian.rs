use alloc::vec::Vec;

use crate::graph::CommutingGraph;

/// `D − A` for a commuting graph, stored densely in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaplacianMatrix {
    order: usize,
    entries: Vec<i64>,
}

impl LaplacianMatrix {
    /// Builds from explicit rows. Panics if `rows` is not square.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let order = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == order),
            "Laplacian rows must be square"
        );
        Self {
            order,
            entries: rows.concat(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.order).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn trace(&self) -> i64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    /// Exact product `L·y`. Panics on a length mismatch.
    pub fn apply(&self, y: &[i64]) -> Vec<i64> {
        assert_eq!(y.len(), self.order);
        (0..self.order)
            .map(|i| self.row(i).iter().zip(y).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Symmetric, zero row sums, off-diagonal entries in `{0, −1}`.
    pub fn is_well_formed(&self) -> bool {
        let n = self.order;
        (0..n).all(|i| {
            self.row(i).iter().sum::<i64>() == 0
                && (0..n).all(|j| {
                    i == j || (self.get(i, j) == self.get(j, i) && matches!(self.get(i, j), 0 | -1))
                })
        })
    }

    pub(crate) fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(|&x| x as f64).collect()
    }
}

pub fn laplacian(g: &CommutingGraph) -> LaplacianMatrix {
    let n = g.order();
    let mut entries = alloc::vec![0i64; n * n];
    for u in 0..n {
        entries[u * n + u] = g.degree(u) as i64;
        for v in g.neighbors(u) {
            entries[u * n + v] = -1;
        }
    }
    LaplacianMatrix { order: n, entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use alloc::vec;

    fn lap(spec: &str) -> LaplacianMatrix {
        laplacian(&CommutingGraph::build(&catalog(spec).unwrap()))
    }

    #[test]
    fn s3_matches_the_displayed_matrix() {
        let expected = LaplacianMatrix::from_rows(&[
            vec![5, -1, -1, -1, -1, -1],
            vec![-1, 2, -1, 0, 0, 0],
            vec![-1, -1, 2, 0, 0, 0],
            vec![-1, 0, 0, 1, 0, 0],
            vec![-1, 0, 0, 0, 1, 0],
            vec![-1, 0, 0, 0, 0, 1],
        ]);
        assert_eq!(lap("symmetric:3"), expected);
    }

    #[test]
    fn trivial_group_is_1x1_zero() {
        let l = lap("cyclic:1");
        assert_eq!(l.to_rows(), vec![vec![0]]);
    }

    #[test]
    fn well_formed_and_trace_is_degree_sum() {
        for spec in ["symmetric:4", "dihedral:10", "quaternion:8", "cyclic:6"] {
            let grp = catalog(spec).unwrap();
            let g = CommutingGraph::build(&grp);
            let l = laplacian(&g);
            assert!(l.is_well_formed());
            assert_eq!(l.trace(), g.degree_sum() as i64);
        }
    }
}
