//! Simple undirected graphs over dense vertex ids `0..n`.

mod decompose;
mod enumerate;
mod families;
mod io;

pub use decompose::{decompose, Decomposition, MaximalPath, PendantPath};
pub use enumerate::{
    canonical_code, enumerate_small, from_labeled_index, labeled_pair_count, EnumerateOptions,
    DEFAULT_ENUMERATION_CEILING,
};
pub use families::{generate, FamilySpec};
pub use io::{parse_edge_list, write_edge_list};

use std::collections::VecDeque;

use thiserror::Error;

/// Errors raised while building, editing, generating or parsing graphs.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex id {id} out of range for a graph of order {n}")]
    OutOfRange { id: usize, n: usize },
    #[error("edge {0}-{1} already present")]
    EdgeExists(usize, usize),
    #[error("edge {0}-{1} not present")]
    EdgeMissing(usize, usize),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("order {n} exceeds the enumeration ceiling {ceiling}")]
    AboveCeiling { n: usize, ceiling: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Maps every vertex of a source graph to its id in a derived graph, or `None`
/// when the vertex was removed.
pub type VertexMap = Vec<Option<usize>>;

/// An immutable simple undirected graph stored as sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate and reversed pairs collapse
    /// into one edge.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::OutOfRange { id: u, n });
            }
            if v >= n {
                return Err(GraphError::OutOfRange { id: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Ok(Self::from_adjacency_unchecked(adjacency))
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Sorts and deduplicates the lists. Callers guarantee symmetry and the
    /// absence of self-loops.
    pub(crate) fn from_adjacency_unchecked(mut adjacency: Vec<Vec<usize>>) -> Self {
        let mut total = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            total += list.len();
        }
        Self {
            adjacency,
            edge_count: total / 2,
        }
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Δ(G); zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// δ(G); zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Closed neighborhood N[v], sorted.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = self.adjacency[v].clone();
        let pos = out.binary_search(&v).unwrap_err();
        out.insert(pos, v);
        out
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// Subgraph induced by `vertices`; the returned map sends each old id to
    /// its new id. New ids follow the order of `vertices`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, VertexMap), GraphError> {
        let n = self.order();
        let mut map: VertexMap = vec![None; n];
        for (new, &old) in vertices.iter().enumerate() {
            if old >= n {
                return Err(GraphError::OutOfRange { id: old, n });
            }
            map[old] = Some(new);
        }
        let adjacency = vertices
            .iter()
            .map(|&old| {
                self.adjacency[old]
                    .iter()
                    .filter_map(|&w| map[w])
                    .collect::<Vec<_>>()
            })
            .collect();
        Ok((Self::from_adjacency_unchecked(adjacency), map))
    }

    /// Removes a vertex set. Surviving vertices keep their relative order.
    pub fn delete_vertices(&self, removed: &[usize]) -> Result<(Graph, VertexMap), GraphError> {
        let n = self.order();
        let mut gone = vec![false; n];
        for &v in removed {
            if v >= n {
                return Err(GraphError::OutOfRange { id: v, n });
            }
            gone[v] = true;
        }
        let kept: Vec<usize> = (0..n).filter(|&v| !gone[v]).collect();
        self.induced_subgraph(&kept)
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(GraphError::EdgeExists(u.min(v), u.max(v)));
        }
        let mut adjacency = self.adjacency.clone();
        adjacency[u].push(v);
        adjacency[v].push(u);
        Ok(Self::from_adjacency_unchecked(adjacency))
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::EdgeMissing(u.min(v), u.max(v)));
        }
        let mut adjacency = self.adjacency.clone();
        adjacency[u].retain(|&w| w != v);
        adjacency[v].retain(|&w| w != u);
        Ok(Self::from_adjacency_unchecked(adjacency))
    }

    /// Vertex-disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut adjacency = self.adjacency.clone();
        adjacency.extend(
            other
                .adjacency
                .iter()
                .map(|list| list.iter().map(|&w| w + shift).collect()),
        );
        Self::from_adjacency_unchecked(adjacency)
    }

    /// Adds and deletes edges in one pass. Pairs that are loops, out of range,
    /// already present (for additions) or absent (for deletions) are skipped.
    pub(crate) fn edit_edges(&self, add: &[(usize, usize)], delete: &[(usize, usize)]) -> Graph {
        let n = self.order();
        let mut adjacency = self.adjacency.clone();
        for &(u, v) in delete {
            if u < n && v < n {
                adjacency[u].retain(|&w| w != v);
                adjacency[v].retain(|&w| w != u);
            }
        }
        for &(u, v) in add {
            if u < n && v < n && u != v {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
        Self::from_adjacency_unchecked(adjacency)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.order();
        for id in [u, v] {
            if id >= n {
                return Err(GraphError::OutOfRange { id, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(())
    }

    /// True when the graph is a single cycle (connected, 2-regular, n ≥ 3).
    pub fn is_cycle(&self) -> bool {
        self.order() >= 3 && self.adjacency.iter().all(|l| l.len() == 2) && self.is_connected()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degrees(), vec![2, 2, 2]);
        assert!(g.is_cycle());
    }

    #[test]
    fn reversed_pair_collapses() {
        let g = Graph::new(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(0), &[1]);
    }

    #[test]
    fn self_loop_rejected() {
        assert_eq!(Graph::new(4, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
    }

    #[test]
    fn out_of_range_rejected() {
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(GraphError::OutOfRange { id: 2, n: 2 })
        );
    }

    #[test]
    fn cycle_minus_vertex_is_path() {
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        let (g, map) = c5.delete_vertices(&[2]).unwrap();
        assert_eq!(map, vec![Some(0), Some(1), None, Some(2), Some(3)]);
        // 3-4-0-1 becomes 2-3-0-1, a path on four vertices.
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.max_degree(), 2);
        assert!(g.is_connected());
        let ends: Vec<_> = (0..4).filter(|&v| g.degree(v) == 1).collect();
        assert_eq!(ends, vec![1, 2]);
    }

    #[test]
    fn tadpole_minus_tail_is_cycle() {
        let t = generate(&FamilySpec::Tadpole { m: 5, k: 6 }).unwrap();
        let tail: Vec<usize> = (5..11).collect();
        let (g, _) = t.delete_vertices(&tail).unwrap();
        assert_eq!(g, generate(&FamilySpec::Cycle(5)).unwrap());
    }

    #[test]
    fn add_edge_on_adjacent_pair_fails() {
        let g = generate(&FamilySpec::Path(3)).unwrap();
        assert_eq!(g.add_edge(1, 0), Err(GraphError::EdgeExists(0, 1)));
        let g2 = g.add_edge(0, 2).unwrap();
        assert!(g2.is_cycle());
        assert_eq!(g2.delete_edge(2, 0).unwrap(), g);
        assert_eq!(g.delete_edge(0, 2), Err(GraphError::EdgeMissing(0, 2)));
    }

    #[test]
    fn components_and_union() {
        let a = generate(&FamilySpec::Cycle(3)).unwrap();
        let b = generate(&FamilySpec::Path(2)).unwrap();
        let u = a.disjoint_union(&b);
        assert_eq!(u.components(), vec![vec![0, 1, 2], vec![3, 4]]);
        assert!(!u.is_connected());
        assert_eq!(u.edge_count(), 4);
    }

    #[test]
    fn closed_neighborhood_sorted() {
        let g = Graph::new(4, &[(2, 0), (2, 3)]).unwrap();
        assert_eq!(g.closed_neighborhood(2), vec![0, 2, 3]);
        assert_eq!(g.closed_neighborhood(1), vec![1]);
    }
}
