//! Individualization-refinement search for automorphism group generators.
//!
//! The first path of the search tree individualizes, at each level, the
//! smallest vertex of the first non-singleton cell. Walking that path back
//! up, every other vertex `w` of the target cell at level `i` is tried: if
//! some leaf below `w` induces an automorphism relative to the first leaf,
//! that automorphism maps `v_i` to `w` while fixing `v_0..v_{i-1}`. Vertices
//! already in the orbit of `v_i` under the generators found so far (or in
//! the orbit of a vertex that failed) are skipped. The generators found at
//! levels `>= i` therefore generate the pointwise stabiliser of
//! `v_0..v_{i-1}`, and at the root they generate all of Aut(G).

use super::partition::{refine_in_place, OrderedPartition, Trace};
use super::permutation::{is_automorphism, Permutation};
use super::AutGenerators;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::orbits::DisjointSets;

pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000;

struct Searcher<'g> {
    graph: &'g Graph,
    budget: u64,
    nodes: u64,
    /// Trace of the first-path node at each level; the last entry is the first leaf's.
    first_traces: Vec<Trace>,
    first_leaf: Vec<VertexId>,
}

impl Searcher<'_> {
    fn refine(&mut self, p: &mut OrderedPartition, seeds: &[usize]) -> Result<Trace> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::NodeBudgetExceeded { budget: self.budget });
        }
        let mut trace = Trace::new();
        refine_in_place(self.graph, p, seeds, &mut trace);
        Ok(trace)
    }

    fn child(&mut self, node: &OrderedPartition, v: VertexId) -> Result<(OrderedPartition, Trace)> {
        let mut child = node.clone();
        let start = child.individualize(v);
        let mut trace = self.refine(&mut child, &[start])?;
        trace.mix(start);
        Ok((child, trace))
    }

    fn leaf_automorphism(&self, leaf: &OrderedPartition) -> Result<Option<Permutation>> {
        let mut images = vec![0; self.first_leaf.len()];
        for (&from, &to) in self.first_leaf.iter().zip(leaf.elements()) {
            images[from] = to;
        }
        let perm = Permutation::from_images_unchecked(images);
        Ok(is_automorphism(self.graph, &perm)?.then_some(perm))
    }

    /// Depth-first search below `node` (at `level`, trace already matched)
    /// for a leaf equivalent to the first leaf.
    fn find_equivalent(&mut self, node: &OrderedPartition, level: usize) -> Result<Option<Permutation>> {
        let Some(target) = node.first_nonsingleton() else {
            return self.leaf_automorphism(node);
        };
        if level + 1 >= self.first_traces.len() {
            return Ok(None);
        }
        let mut cell = node.cell_at(target).to_vec();
        cell.sort_unstable();
        for w in cell {
            let (child, trace) = self.child(node, w)?;
            if trace != self.first_traces[level + 1] {
                continue;
            }
            if let Some(perm) = self.find_equivalent(&child, level + 1)? {
                return Ok(Some(perm));
            }
        }
        Ok(None)
    }
}

/// Generators of a group with the same vertex orbits as Aut(G).
///
/// Deterministic for a given graph. Fails with
/// [`Error::NodeBudgetExceeded`] rather than returning a partial answer.
pub fn automorphism_generators_with_budget(g: &Graph, node_budget: u64) -> Result<AutGenerators> {
    let n = g.order();
    let mut s = Searcher { graph: g, budget: node_budget, nodes: 0, first_traces: Vec::new(), first_leaf: Vec::new() };

    let mut root = OrderedPartition::unit(n);
    let seeds: Vec<usize> = if n > 0 { vec![0] } else { vec![] };
    let root_trace = s.refine(&mut root, &seeds)?;
    s.first_traces.push(root_trace);

    // (node, chosen vertex) along the first path
    let mut path: Vec<(OrderedPartition, VertexId)> = Vec::new();
    let mut node = root;
    while let Some(target) = node.first_nonsingleton() {
        let v = *node.cell_at(target).iter().min().unwrap();
        let (child, trace) = s.child(&node, v)?;
        s.first_traces.push(trace);
        path.push((node, v));
        node = child;
    }
    s.first_leaf = node.elements().to_vec();

    let mut gens: Vec<Permutation> = Vec::new();
    let mut orbits = DisjointSets::new(n);
    for level in (0..path.len()).rev() {
        let (node, v) = &path[level];
        let target = node.first_nonsingleton().unwrap();
        let mut cell = node.cell_at(target).to_vec();
        cell.sort_unstable();
        let mut failed: Vec<VertexId> = Vec::new();
        for w in cell {
            if w == *v || orbits.same(w, *v) || failed.iter().any(|&f| orbits.same(f, w)) {
                continue;
            }
            let (child, trace) = s.child(node, w)?;
            let found = if trace == s.first_traces[level + 1] { s.find_equivalent(&child, level + 1)? } else { None };
            match found {
                Some(perm) => {
                    orbits.union_permutation(&perm);
                    gens.push(perm);
                }
                None => failed.push(w),
            }
        }
    }

    Ok(AutGenerators { n, gens, search_nodes: s.nodes })
}

pub fn automorphism_generators(g: &Graph) -> Result<AutGenerators> {
    automorphism_generators_with_budget(g, DEFAULT_NODE_BUDGET)
}
