use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// A bijection on `0..n`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<VertexId>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn from_images(images: Vec<VertexId>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation(n));
            }
        }
        Ok(Permutation(images))
    }

    /// Skips the bijection check; callers construct images from a bijection.
    pub(crate) fn from_images_unchecked(images: Vec<VertexId>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation(images)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: VertexId) -> VertexId {
        self.0[v]
    }

    pub fn images(&self) -> &[VertexId] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Permutation(inv)
    }

    /// `self` followed by `other`: `v -> other(self(v))`.
    pub fn then(&self, other: &Permutation) -> Self {
        Permutation(self.0.iter().map(|&v| other.apply(v)).collect())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // cycle notation, fixed points omitted
        let mut seen = vec![false; self.len()];
        let mut wrote = false;
        for start in 0..self.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut v = start;
            let mut first = true;
            while !seen[v] {
                seen[v] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
                first = false;
                v = self.0[v];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// True iff `s` maps edges to edges and non-edges to non-edges.
pub fn is_automorphism(g: &Graph, s: &Permutation) -> Result<bool> {
    if s.len() != g.order() {
        return Err(Error::PermutationLength { expected: g.order(), found: s.len() });
    }
    // A bijection that maps every edge to an edge maps E onto E, hence also
    // non-edges onto non-edges.
    Ok(g.vertices().all(|v| g.degree(v) == g.degree(s.apply(v)))
        && g.edges().all(|(u, v)| g.has_edge(s.apply(u), s.apply(v))))
}
