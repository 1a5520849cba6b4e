//! Automorphism groups: refinement-based generator search and a
//! brute-force oracle for small graphs.

mod brute;
mod partition;
mod permutation;
mod search;

pub use brute::{brute_force_automorphisms, brute_force_isomorphic, BRUTE_FORCE_LIMIT};
pub use partition::{equitable_refine, is_equitable, OrderedPartition};
pub use permutation::{is_automorphism, Permutation};
pub use search::{automorphism_generators, automorphism_generators_with_budget, DEFAULT_NODE_BUDGET};

/// A set of automorphisms of some graph on `n` vertices. The identity is
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutGenerators {
    n: usize,
    gens: Vec<Permutation>,
    search_nodes: u64,
}

impl AutGenerators {
    /// Wraps permutations of `0..n`; identities are dropped. Whether they
    /// are automorphisms of any particular graph is not checked here.
    pub fn from_permutations(n: usize, perms: Vec<Permutation>) -> crate::error::Result<Self> {
        if let Some(p) = perms.iter().find(|p| p.len() != n) {
            return Err(crate::error::Error::PermutationLength { expected: n, found: p.len() });
        }
        let gens = perms.into_iter().filter(|p| !p.is_identity()).collect();
        Ok(AutGenerators { n, gens, search_nodes: 0 })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Search-tree nodes (or permutations, for the oracle) examined.
    pub fn search_nodes(&self) -> u64 {
        self.search_nodes
    }
}
