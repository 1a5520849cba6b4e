//! Ordered vertex partitions and equitable refinement.
//!
//! Cells are contiguous ranges of one element array and are identified by
//! the index where they start, so cell order is position order. Refinement
//! only ever looks at positions and neighbour counts, never at vertex ids,
//! which makes it commute with relabelling: refining `γ(π)` yields `γ` of
//! refining `π`. The automorphism search relies on this.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedPartition {
    elements: Vec<VertexId>,
    position: Vec<usize>,
    /// Start index of the cell holding each vertex.
    cell_of: Vec<usize>,
    /// End index (exclusive) of the cell starting at each index; other slots unused.
    cell_end: Vec<usize>,
    cells: usize,
}

impl OrderedPartition {
    /// One cell holding every vertex.
    pub fn unit(n: usize) -> Self {
        let mut cell_end = vec![0; n];
        if n > 0 {
            cell_end[0] = n;
        }
        OrderedPartition {
            elements: (0..n).collect(),
            position: (0..n).collect(),
            cell_of: vec![0; n],
            cell_end,
            cells: usize::from(n > 0),
        }
    }

    /// Builds a partition from explicit cells; they must be disjoint,
    /// nonempty and cover `0..n`.
    pub fn from_cells(n: usize, cells: &[Vec<VertexId>]) -> Result<Self> {
        let mut p = OrderedPartition::unit(n);
        let mut seen = vec![false; n];
        let mut at = 0;
        for cell in cells {
            if cell.is_empty() {
                return Err(Error::InvalidGraph("partition has an empty cell".into()));
            }
            for &v in cell {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidGraph(format!("vertex {v} appears in two cells")));
                }
            }
            for (i, &v) in cell.iter().enumerate() {
                p.elements[at + i] = v;
                p.position[v] = at + i;
                p.cell_of[v] = at;
            }
            p.cell_end[at] = at + cell.len();
            at += cell.len();
        }
        if at != n {
            return Err(Error::InvalidGraph("partition does not cover every vertex".into()));
        }
        p.cells = cells.len();
        Ok(p)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn cell_count(&self) -> usize {
        self.cells
    }

    pub fn is_discrete(&self) -> bool {
        self.cells == self.order()
    }

    /// Cells in order.
    pub fn cells(&self) -> impl Iterator<Item = &[VertexId]> + '_ {
        let mut start = 0;
        std::iter::from_fn(move || {
            (start < self.order()).then(|| {
                let end = self.cell_end[start];
                let cell = &self.elements[start..end];
                start = end;
                cell
            })
        })
    }

    /// Cells as sorted vectors, in partition order.
    pub fn to_cells(&self) -> Vec<Vec<VertexId>> {
        self.cells()
            .map(|c| {
                let mut c = c.to_vec();
                c.sort_unstable();
                c
            })
            .collect()
    }

    /// Index of the cell containing `v`, counting cells in order.
    pub fn cell_index(&self, v: VertexId) -> usize {
        self.cells().position(|c| c.contains(&v)).unwrap()
    }

    pub fn same_cell(&self, u: VertexId, v: VertexId) -> bool {
        self.cell_of[u] == self.cell_of[v]
    }

    /// Every cell of `self` lies inside a cell of `coarser`.
    pub fn is_finer_than(&self, coarser: &OrderedPartition) -> bool {
        self.cells().all(|c| c.iter().all(|&v| coarser.same_cell(c[0], v)))
    }

    /// Vertex order of a discrete partition.
    pub(crate) fn elements(&self) -> &[VertexId] {
        &self.elements
    }

    pub(crate) fn first_nonsingleton(&self) -> Option<usize> {
        let mut start = 0;
        while start < self.order() {
            let end = self.cell_end[start];
            if end - start > 1 {
                return Some(start);
            }
            start = end;
        }
        None
    }

    pub(crate) fn cell_at(&self, start: usize) -> &[VertexId] {
        &self.elements[start..self.cell_end[start]]
    }

    fn swap_positions(&mut self, i: usize, j: usize) {
        self.elements.swap(i, j);
        self.position[self.elements[i]] = i;
        self.position[self.elements[j]] = j;
    }

    /// Splits `v` off the front of its cell; returns the start of the new
    /// singleton cell.
    pub(crate) fn individualize(&mut self, v: VertexId) -> usize {
        let start = self.cell_of[v];
        let end = self.cell_end[start];
        if end - start == 1 {
            return start;
        }
        self.swap_positions(start, self.position[v]);
        self.cell_end[start] = start + 1;
        self.cell_end[start + 1] = end;
        for i in start + 1..end {
            self.cell_of[self.elements[i]] = start + 1;
        }
        self.cells += 1;
        start
    }

    fn cell_starts(&self) -> Vec<usize> {
        let mut starts = Vec::with_capacity(self.cells);
        let mut start = 0;
        while start < self.order() {
            starts.push(start);
            start = self.cell_end[start];
        }
        starts
    }
}

/// Running fingerprint of a refinement. Equal inputs up to relabelling give
/// equal traces; unequal traces prove two nodes are not related by an
/// automorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Trace(u64);

impl Trace {
    pub(crate) fn new() -> Self {
        Trace(0xcbf2_9ce4_8422_2325)
    }

    pub(crate) fn mix(&mut self, x: usize) {
        self.0 = (self.0 ^ x as u64).wrapping_mul(0x0000_0100_0000_01b3);
        self.0 ^= self.0 >> 29;
    }
}

struct Worklist {
    queue: BTreeSet<(usize, usize)>,
    member: Vec<bool>,
}

impl Worklist {
    fn new(n: usize) -> Self {
        Worklist { queue: BTreeSet::new(), member: vec![false; n] }
    }

    fn push(&mut self, start: usize, size: usize) {
        if !self.member[start] {
            self.member[start] = true;
            self.queue.insert((size, start));
        }
    }

    /// Smallest cell first; ties go to the earlier cell.
    fn pop(&mut self) -> Option<usize> {
        let (_, start) = self.queue.pop_first()?;
        self.member[start] = false;
        Some(start)
    }

    fn remove(&mut self, start: usize, size: usize) -> bool {
        if self.member[start] {
            self.member[start] = false;
            self.queue.remove(&(size, start));
            true
        } else {
            false
        }
    }
}

/// Refines `p` in place to the coarsest equitable partition finer than it.
/// `seeds` are the starts of the cells to use as initial splitters; passing
/// every cell is always correct, passing only cells that changed since `p`
/// was last equitable is sufficient.
pub(crate) fn refine_in_place(g: &Graph, p: &mut OrderedPartition, seeds: &[usize], trace: &mut Trace) {
    let n = p.order();
    let mut work = Worklist::new(n);
    for &s in seeds {
        work.push(s, p.cell_end[s] - s);
    }
    let mut count = vec![0usize; n];
    let mut touched: Vec<VertexId> = Vec::new();
    let mut touched_cells: Vec<usize> = Vec::new();
    let mut splitter: Vec<VertexId> = Vec::new();

    while let Some(w_start) = work.pop() {
        if p.is_discrete() {
            break;
        }
        splitter.clear();
        splitter.extend_from_slice(p.cell_at(w_start));
        for &u in &splitter {
            for &x in g.neighbors(u) {
                if count[x] == 0 {
                    touched.push(x);
                }
                count[x] += 1;
            }
        }
        touched_cells.clear();
        touched_cells.extend(touched.iter().map(|&x| p.cell_of[x]));
        touched_cells.sort_unstable();
        touched_cells.dedup();

        for &c_start in &touched_cells {
            let c_end = p.cell_end[c_start];
            if c_end - c_start == 1 {
                continue;
            }
            let cell = &mut p.elements[c_start..c_end];
            let first = count[cell[0]];
            if cell.iter().all(|&v| count[v] == first) {
                continue;
            }
            cell.sort_unstable_by_key(|&v| count[v]);
            let was_queued = work.remove(c_start, c_end - c_start);

            trace.mix(w_start);
            trace.mix(c_start);
            let mut fragments = Vec::new();
            let mut frag_start = c_start;
            for i in c_start..c_end {
                let v = p.elements[i];
                p.position[v] = i;
                if i + 1 == c_end || count[p.elements[i + 1]] != count[v] {
                    fragments.push((frag_start, i + 1));
                    trace.mix(count[v]);
                    trace.mix(i + 1 - frag_start);
                    frag_start = i + 1;
                }
            }
            for &(s, e) in &fragments {
                p.cell_end[s] = e;
                for i in s..e {
                    p.cell_of[p.elements[i]] = s;
                }
            }
            p.cells += fragments.len() - 1;

            let skip = if was_queued {
                None
            } else {
                // first largest fragment stays out of the worklist
                let largest = fragments.iter().map(|&(s, e)| e - s).max().unwrap();
                fragments.iter().position(|&(s, e)| e - s == largest)
            };
            for (i, &(s, e)) in fragments.iter().enumerate() {
                if Some(i) != skip {
                    work.push(s, e - s);
                }
            }
        }
        for &x in &touched {
            count[x] = 0;
        }
        touched.clear();
    }
    trace.mix(p.cells);
    for c in p.cells() {
        trace.mix(c.len());
    }
}

/// Coarsest equitable partition finer than `p`: every vertex of a cell has
/// the same number of neighbours in each cell.
pub fn equitable_refine(g: &Graph, p: &OrderedPartition) -> Result<OrderedPartition> {
    if p.order() != g.order() {
        return Err(Error::InvalidGraph(format!("partition covers {} vertices, graph has {}", p.order(), g.order())));
    }
    let mut out = p.clone();
    let seeds = out.cell_starts();
    refine_in_place(g, &mut out, &seeds, &mut Trace::new());
    Ok(out)
}

/// Checks equitability directly from the definition.
pub fn is_equitable(g: &Graph, p: &OrderedPartition) -> bool {
    let cells: Vec<&[VertexId]> = p.cells().collect();
    cells.iter().all(|cell| {
        cells.iter().all(|target| {
            let k = |v: VertexId| g.neighbors(v).iter().filter(|&&x| p.same_cell(x, target[0])).count();
            let first = k(cell[0]);
            cell.iter().all(|&v| k(v) == first)
        })
    })
}
