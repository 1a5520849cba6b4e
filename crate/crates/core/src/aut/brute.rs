//! Factorial-time reference implementations. They test every permutation
//! of the vertex set and share no code with the refinement search.

use super::permutation::Permutation;
use super::AutGenerators;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const BRUTE_FORCE_LIMIT: usize = 10;

fn adjacency_masks(g: &Graph) -> Vec<u16> {
    g.vertices().map(|v| g.neighbors(v).iter().fold(0u16, |m, &w| m | (1 << w))).collect()
}

fn check_size(g: &Graph) -> Result<()> {
    if g.order() > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLargeForBruteForce { n: g.order(), limit: BRUTE_FORCE_LIMIT });
    }
    Ok(())
}

/// `perm` maps graph `a` onto graph `b`: every row of `a`, relabelled,
/// equals the corresponding row of `b`.
fn maps_onto(a: &[u16], b: &[u16], perm: &[usize]) -> bool {
    a.iter().enumerate().all(|(v, &row)| {
        let mut image = 0u16;
        let mut bits = row;
        while bits != 0 {
            let w = bits.trailing_zeros() as usize;
            image |= 1 << perm[w];
            bits &= bits - 1;
        }
        image == b[perm[v]]
    })
}

/// Calls `visit` on every permutation of `0..n` (Heap's algorithm); stops
/// early when `visit` returns `true`.
fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    if visit(&p) {
        return;
    }
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            if visit(&p) {
                return;
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Every non-identity automorphism of `g` (the identity is implicit), in
/// lexicographic order of image arrays. Limited to 10 vertices.
pub fn brute_force_automorphisms(g: &Graph) -> Result<AutGenerators> {
    check_size(g)?;
    let rows = adjacency_masks(g);
    let mut gens = Vec::new();
    let mut tested = 0u64;
    for_each_permutation(g.order(), |p| {
        tested += 1;
        if maps_onto(&rows, &rows, p) && p.iter().enumerate().any(|(i, &v)| i != v) {
            gens.push(Permutation::from_images_unchecked(p.to_vec()));
        }
        false
    });
    gens.sort();
    Ok(AutGenerators { n: g.order(), gens, search_nodes: tested })
}

/// Whether `a` and `b` are isomorphic, by testing every bijection.
pub fn brute_force_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    check_size(a)?;
    check_size(b)?;
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let (ra, rb) = (adjacency_masks(a), adjacency_masks(b));
    let mut found = false;
    for_each_permutation(a.order(), |p| {
        found = maps_onto(&ra, &rb, p);
        found
    });
    Ok(found)
}
