//! Vertex orbits of Aut(G): the transitivity partition, the transitivity
//! number `r`, minimum-id representatives and interchangeability queries.
//!
//! Orbits are the connected components of the union of the generators'
//! functional graphs, found with a disjoint-set forest. Each graph caches
//! its partition after the first successful search.

use serde::Serialize;

use crate::aut::{automorphism_generators_with_budget, AutGenerators, Permutation, DEFAULT_NODE_BUDGET};
use crate::error::Result;
use crate::graph::{Graph, VertexId};

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    pub fn union_permutation(&mut self, p: &Permutation) {
        for (v, &w) in p.images().iter().enumerate() {
            self.union(v, w);
        }
    }
}

/// The quotient `V / Aut(G)`.
///
/// Orbits are sorted ascending internally and ordered by their smallest
/// vertex, which is also the orbit's representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitPartition {
    n: usize,
    r: usize,
    orbits: Vec<Vec<VertexId>>,
    representatives: Vec<VertexId>,
    #[serde(skip)]
    orbit_of: Vec<usize>,
}

impl OrbitPartition {
    fn from_sets(mut sets: DisjointSets) -> Self {
        let n = sets.parent.len();
        let mut orbit_of = vec![usize::MAX; n];
        let mut index_of_root = vec![usize::MAX; n];
        let mut orbits: Vec<Vec<VertexId>> = Vec::new();
        // ascending scan: orbits are created in order of their minimum
        for v in 0..n {
            let root = sets.find(v);
            if index_of_root[root] == usize::MAX {
                index_of_root[root] = orbits.len();
                orbits.push(Vec::new());
            }
            orbit_of[v] = index_of_root[root];
            orbits[orbit_of[v]].push(v);
        }
        let representatives = orbits.iter().map(|o| o[0]).collect();
        OrbitPartition { n, r: orbits.len(), orbits, representatives, orbit_of }
    }

    /// Builds a partition from arbitrary disjoint sets covering `0..n`.
    pub fn from_orbits(n: usize, orbits: &[Vec<VertexId>]) -> Self {
        let mut sets = DisjointSets::new(n);
        for o in orbits {
            for w in o.windows(2) {
                sets.union(w[0], w[1]);
            }
        }
        OrbitPartition::from_sets(sets)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of orbits, the transitivity number.
    pub fn count(&self) -> usize {
        self.r
    }

    pub fn orbits(&self) -> &[Vec<VertexId>] {
        &self.orbits
    }

    pub fn representatives(&self) -> &[VertexId] {
        &self.representatives
    }

    pub fn orbit_index(&self, v: VertexId) -> usize {
        self.orbit_of[v]
    }

    pub fn orbit_containing(&self, v: VertexId) -> &[VertexId] {
        &self.orbits[self.orbit_of[v]]
    }

    pub fn same_orbit(&self, u: VertexId, v: VertexId) -> bool {
        self.orbit_of[u] == self.orbit_of[v]
    }

    /// `s` is a union of whole orbits.
    pub fn is_union_of_orbits(&self, s: &[VertexId]) -> bool {
        let mut hit = vec![0usize; self.r];
        let mut member = vec![false; self.n];
        for &v in s {
            if !std::mem::replace(&mut member[v], true) {
                hit[self.orbit_of[v]] += 1;
            }
        }
        hit.iter().zip(&self.orbits).all(|(&h, o)| h == 0 || h == o.len())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("orbit partition serializes")
    }
}

/// Orbits of the group generated by `gens`.
pub fn orbit_partition(gens: &AutGenerators) -> OrbitPartition {
    let mut sets = DisjointSets::new(gens.order());
    for p in gens.generators() {
        sets.union_permutation(p);
    }
    OrbitPartition::from_sets(sets)
}

/// Orbit partition of Aut(g), computed once per graph and cached.
pub fn orbits_with_budget(g: &Graph, node_budget: u64) -> Result<&OrbitPartition> {
    if let Some(cached) = g.orbit_cache.get() {
        return Ok(cached);
    }
    let partition = orbit_partition(&automorphism_generators_with_budget(g, node_budget)?);
    Ok(g.orbit_cache.get_or_init(|| partition))
}

pub fn orbits(g: &Graph) -> Result<&OrbitPartition> {
    orbits_with_budget(g, DEFAULT_NODE_BUDGET)
}

pub fn transitivity_number(g: &Graph) -> Result<usize> {
    Ok(orbits(g)?.count())
}

/// Whether some automorphism maps `u` to `v`.
pub fn interchangeable(g: &Graph, u: VertexId, v: VertexId) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    Ok(orbits(g)?.same_orbit(u, v))
}

/// Minimum vertex of each orbit, ascending.
pub fn representatives(g: &Graph) -> Result<Vec<VertexId>> {
    Ok(orbits(g)?.representatives().to_vec())
}

pub fn orbit_of_vertex(g: &Graph, v: VertexId) -> Result<Vec<VertexId>> {
    g.check_vertex(v)?;
    Ok(orbits(g)?.orbit_containing(v).to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::brute_force_automorphisms;
    use crate::error::Error;
    use crate::graph::{make_complete, make_cycle, make_path, make_petersen, make_star};

    #[test]
    fn trivial_group_gives_singletons() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (1, 3)]).unwrap();
        let gens = AutGenerators::from_permutations(5, vec![]).unwrap();
        let p = orbit_partition(&gens);
        assert_eq!(p.count(), 5);
        // the graph above has only the 2<->3 swap
        assert_eq!(orbits(&g).unwrap().orbits(), &[vec![0], vec![1], vec![2, 3]]);
    }

    #[test]
    fn path4_from_oracle() {
        let gens = brute_force_automorphisms(&make_path(4).unwrap()).unwrap();
        assert_eq!(orbit_partition(&gens).orbits(), &[vec![0, 3], vec![1, 2]]);
    }

    #[test]
    fn c5_one_orbit() {
        assert_eq!(transitivity_number(&make_cycle(5).unwrap()).unwrap(), 1);
    }

    #[test]
    fn transitivity_numbers() {
        for n in 1..=6 {
            assert_eq!(transitivity_number(&make_complete(n).unwrap()).unwrap(), 1);
        }
        assert_eq!(transitivity_number(&make_path(5).unwrap()).unwrap(), 3);
        assert_eq!(transitivity_number(&make_petersen()).unwrap(), 1);
    }

    #[test]
    fn queries() {
        let p5 = make_path(5).unwrap();
        assert!(interchangeable(&p5, 3, 3).unwrap());
        assert!(interchangeable(&p5, 0, 4).unwrap());
        assert!(!interchangeable(&p5, 0, 2).unwrap());
        assert!(matches!(interchangeable(&p5, 0, 5), Err(Error::VertexOutOfRange { vertex: 5, n: 5 })));
        assert_eq!(representatives(&p5).unwrap(), vec![0, 1, 2]);
        assert_eq!(orbit_of_vertex(&p5, 0).unwrap(), vec![0, 4]);
        assert!(orbit_of_vertex(&p5, 9).is_err());

        assert_eq!(representatives(&make_complete(4).unwrap()).unwrap(), vec![0]);
        let star = make_star(4).unwrap();
        assert_eq!(representatives(&star).unwrap(), vec![0, 1]);
        assert_eq!(orbit_of_vertex(&star, 0).unwrap(), vec![0]);
        assert_eq!(orbit_of_vertex(&make_cycle(6).unwrap(), 3).unwrap(), (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn json_schema() {
        let p5 = make_path(5).unwrap();
        assert_eq!(
            orbits(&p5).unwrap().to_json(),
            r#"{"n":5,"r":3,"orbits":[[0,4],[1,3],[2]],"representatives":[0,1,2]}"#
        );
    }

    #[test]
    fn union_check() {
        let p5 = make_path(5).unwrap();
        let o = orbits(&p5).unwrap();
        assert!(o.is_union_of_orbits(&[0, 4]));
        assert!(o.is_union_of_orbits(&[4, 2, 0]));
        assert!(!o.is_union_of_orbits(&[0]));
        assert!(o.is_union_of_orbits(&[]));
    }
}
