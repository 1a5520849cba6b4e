//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! A [`Graph`] is immutable once built. Products and edits construct new
//! graphs, so any orbit data cached on a graph stays valid for its lifetime.

mod edgelist;
mod families;
mod graph6;

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

pub use edgelist::{parse_edge_list, to_edge_list};
pub use families::{
    make_complete, make_complete_multipartite, make_cycle, make_empty, make_hypercube, make_path, make_petersen,
    make_star,
};
pub use graph6::{parse_graph6, to_graph6};

use crate::error::{Error, Result};
use crate::orbits::OrbitPartition;

/// Vertex index in `0..n` of the graph it belongs to.
pub type VertexId = usize;

/// Largest vertex count accepted anywhere in the crate.
pub const MAX_VERTICES: usize = 1 << 20;

#[derive(Clone)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
    edge_count: usize,
    pub(crate) orbit_cache: OnceLock<OrbitPartition>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, repeated edges and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::InvalidSize(format!("{n} vertices exceeds the limit of {MAX_VERTICES}")));
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            edge_count += 1;
        }
        for (v, nbrs) in adjacency.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidGraph(format!("duplicate edge {} {}", v, w[0])));
            }
        }
        Ok(Graph { adjacency, edge_count, orbit_cache: OnceLock::new() })
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        let (a, b) = if self.adjacency[u].len() <= self.adjacency[v].len() { (u, v) } else { (v, u) };
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.order()
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.order() })
        }
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.vertices().map(|v| self.degree(v)).collect()
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap() + 1;
            for &w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Checks the structural invariants: symmetric, loop-free, no repeated
    /// neighbours, consistent edge count.
    pub fn validate(&self) -> Result<()> {
        let mut half_edges = 0;
        for (v, nbrs) in self.adjacency.iter().enumerate() {
            half_edges += nbrs.len();
            for (i, &w) in nbrs.iter().enumerate() {
                if w == v {
                    return Err(Error::InvalidGraph(format!("self-loop at {v}")));
                }
                if i > 0 && nbrs[i - 1] >= w {
                    return Err(Error::InvalidGraph(format!("unsorted or repeated neighbours at {v}")));
                }
                if self.adjacency[w].binary_search(&v).is_err() {
                    return Err(Error::InvalidGraph(format!("asymmetric edge {v} {w}")));
                }
            }
        }
        if half_edges != 2 * self.edge_count {
            return Err(Error::InvalidGraph("edge count mismatch".into()));
        }
        Ok(())
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adjacency == other.adjacency
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.order()).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_duplicates_and_range() {
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(matches!(Graph::from_edges(3, [(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, n: 3 })));
    }

    #[test]
    fn edges_are_sorted_pairs() {
        let g = Graph::from_edges(4, [(3, 0), (2, 1), (0, 1)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2)]);
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(3, 0) && !g.has_edge(2, 3));
        g.validate().unwrap();
    }

    #[test]
    fn connectivity() {
        assert!(make_path(6).unwrap().is_connected());
        assert!(!Graph::from_edges(3, [(0, 1)]).unwrap().is_connected());
        assert!(Graph::from_edges(1, []).unwrap().is_connected());
    }

    #[test]
    fn bfs_distances() {
        let c6 = make_cycle(6).unwrap();
        let d: Vec<_> = c6.distances_from(0).into_iter().map(Option::unwrap).collect();
        assert_eq!(d, vec![0, 1, 2, 3, 2, 1]);
    }
}
