//! The commuting graph: vertices are group elements, distinct elements are
//! adjacent when they commute.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::group::GroupTable;
use crate::subset::Subset;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphError {
    /// The group is abelian, so there are no non-central vertices.
    EmptyNoncentralPart,
    VertexOutOfRange {
        vertex: usize,
        order: usize,
    },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::EmptyNoncentralPart => {
                write!(f, "group is abelian: no non-central vertices")
            }
            GraphError::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range 0..{order}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutingGraph {
    adjacency: Vec<Subset>,
    degrees: Vec<usize>,
    center: Subset,
    components: Vec<Subset>,
    names: Vec<String>,
}

impl CommutingGraph {
    pub fn build(g: &GroupTable) -> Self {
        let n = g.order();
        let adjacency: Vec<Subset> = (0..n)
            .map(|u| Subset::from_indices(n, (0..n).filter(|&v| v != u && g.commutes(u, v))))
            .collect();
        let degrees: Vec<usize> = adjacency.iter().map(Subset::len).collect();
        let center = Subset::from_indices(n, (0..n).filter(|&v| degrees[v] + 1 == n));
        let components = noncentral_components(&adjacency, &center);
        Self {
            adjacency,
            degrees,
            center,
            components,
            names: g.names().to_vec(),
        }
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn neighbors(&self, u: usize) -> &Subset {
        &self.adjacency[u]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.degrees[u]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn degree_sum(&self) -> usize {
        self.degrees.iter().sum()
    }

    pub fn edge_count(&self) -> usize {
        self.degree_sum() / 2
    }

    /// Vertices adjacent to every other vertex, i.e. the center of the group.
    pub fn center(&self) -> &Subset {
        &self.center
    }

    /// Closed neighbourhood `{u} ∪ N(u)`, which is the centralizer `C(u)`.
    pub fn closed_neighborhood(&self, u: usize) -> Subset {
        let mut s = self.adjacency[u].clone();
        s.insert(u);
        s
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, adj)| adj.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Connected components of the subgraph induced on the non-central
    /// vertices, ordered by smallest member. Empty for abelian groups.
    pub fn components(&self) -> &[Subset] {
        &self.components
    }

    pub fn components_noncentral(&self) -> Result<&[Subset], GraphError> {
        if self.center.len() == self.order() {
            return Err(GraphError::EmptyNoncentralPart);
        }
        Ok(&self.components)
    }

    /// Shortest-path distances from `source`. Unreachable vertices get
    /// `usize::MAX`, which never happens for a graph built from a group.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<usize>, GraphError> {
        let n = self.order();
        if source >= n {
            return Err(GraphError::VertexOutOfRange {
                vertex: source,
                order: n,
            });
        }
        let mut dist = alloc::vec![usize::MAX; n];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for v in &self.adjacency[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        Ok(dist)
    }

    /// Rows of the all-pairs distance matrix, one BFS per source.
    pub fn distance_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.order())
            .map(|s| self.bfs_distances(s).expect("source in range"))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0
            || self
                .bfs_distances(0)
                .is_ok_and(|d| d.iter().all(|&x| x != usize::MAX))
    }

    pub fn diameter(&self) -> usize {
        self.distance_matrix()
            .iter()
            .flatten()
            .copied()
            .max()
            .unwrap_or(0)
    }

    /// Flips the edge `{u, v}` and updates the degrees, leaving center and
    /// components as computed from the group. Only meant for fault-injection
    /// checks of the verification harness.
    #[doc(hidden)]
    pub fn corrupt_edge(&mut self, u: usize, v: usize) {
        for (a, b) in [(u, v), (v, u)] {
            if !self.adjacency[a].remove(b) {
                self.adjacency[a].insert(b);
            }
            self.degrees[a] = self.adjacency[a].len();
        }
    }
}

fn noncentral_components(adjacency: &[Subset], center: &Subset) -> Vec<Subset> {
    let n = adjacency.len();
    let mut label = alloc::vec![usize::MAX; n];
    let mut blocks = Vec::new();
    for start in 0..n {
        if center.contains(start) || label[start] != usize::MAX {
            continue;
        }
        let mut block = Subset::empty(n);
        let mut queue = VecDeque::from([start]);
        label[start] = blocks.len();
        while let Some(u) = queue.pop_front() {
            block.insert(u);
            for v in adjacency[u].difference(center).iter() {
                if label[v] == usize::MAX {
                    label[v] = blocks.len();
                    queue.push_back(v);
                }
            }
        }
        blocks.push(block);
    }
    blocks
}
