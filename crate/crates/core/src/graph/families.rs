use super::Graph;
use crate::error::{Error, Result};

fn size_error(msg: impl Into<String>) -> Error {
    Error::InvalidSize(msg.into())
}

/// Path on `n` vertices: `0 - 1 - ... - (n-1)`.
///
/// Paths are sized by vertex count throughout the crate, so `make_path(n)`
/// has `n - 1` edges.
pub fn make_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(size_error("a path needs at least one vertex"));
    }
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(size_error(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

pub fn make_complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(size_error("a complete graph needs at least one vertex"));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `n` isolated vertices.
pub fn make_empty(n: usize) -> Result<Graph> {
    Graph::from_edges(n, [])
}

/// The `k`-dimensional cube: vertices are bit strings, adjacent when they
/// differ in one bit.
pub fn make_hypercube(k: u32) -> Result<Graph> {
    if !(1..=20).contains(&k) {
        return Err(size_error(format!("hypercube dimension must be in 1..=20, got {k}")));
    }
    let n = 1usize << k;
    Graph::from_edges(n, (0..n).flat_map(|v| (0..k).map(move |b| (v, v ^ (1 << b))).filter(|&(u, w)| u < w)))
}

/// Complete multipartite graph; parts occupy consecutive id ranges in order.
pub fn make_complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(size_error("parts must be a nonempty list of positive sizes"));
    }
    let mut part_of = Vec::new();
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, size));
    }
    let n = part_of.len();
    let part_of = &part_of;
    Graph::from_edges(
        n,
        (0..n).flat_map(|u| (u + 1..n).filter(move |&v| part_of[u] != part_of[v]).map(move |v| (u, v))),
    )
}

/// Star `K_{1,k}` with centre 0.
pub fn make_star(k: usize) -> Result<Graph> {
    if k == 0 {
        return make_complete(1);
    }
    make_complete_multipartite(&[1, k])
}

/// Petersen graph: outer 5-cycle `0..5`, spokes `i - i+5`, inner pentagram.
pub fn make_petersen() -> Graph {
    let edges = (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]);
    Graph::from_edges(10, edges).expect("static construction")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paths() {
        assert_eq!(make_path(1).unwrap(), make_complete(1).unwrap());
        assert_eq!(make_path(2).unwrap(), make_complete(2).unwrap());
        assert_eq!(make_path(5).unwrap().degree_sequence(), vec![1, 2, 2, 2, 1]);
        assert!(make_path(0).is_err());
    }

    #[test]
    fn standard_sizes() {
        let q3 = make_hypercube(3).unwrap();
        assert_eq!((q3.order(), q3.edge_count()), (8, 12));
        assert_eq!(make_complete(4).unwrap().edge_count(), 6);
        let p = make_petersen();
        assert_eq!((p.order(), p.edge_count()), (10, 15));
        assert!(p.degree_sequence().iter().all(|&d| d == 3));
        let k33 = make_complete_multipartite(&[3, 3]).unwrap();
        assert_eq!(k33.edge_count(), 9);
        assert_eq!(make_star(4).unwrap().degree_sequence(), vec![4, 1, 1, 1, 1]);
        for g in [q3, p, k33, make_cycle(7).unwrap()] {
            g.validate().unwrap();
        }
    }

    #[test]
    fn size_constraints() {
        assert!(make_cycle(2).is_err());
        assert!(make_hypercube(0).is_err());
        assert!(make_complete_multipartite(&[]).is_err());
        assert!(make_complete_multipartite(&[2, 0]).is_err());
        assert!(make_complete(0).is_err());
    }
}
