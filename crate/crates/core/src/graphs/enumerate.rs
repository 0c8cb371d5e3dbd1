//! Canonical forms and exhaustive enumeration of small graphs.
//!
//! The canonical code of a graph is the least upper-triangle adjacency bit
//! string (graph6 column order: `(0,1), (0,2), (1,2), (0,3), …`) over all
//! vertex orderings whose degree sequence is non-decreasing. Isomorphic graphs
//! share the same set of such orderings up to relabelling, so the minimum is
//! an isomorphism invariant. Enumeration walks every edge subset in bit-string
//! order and keeps the graphs that are their own canonical form.

use crate::par::Execution;

use super::{default_labels, GraphError, Result, SimpleGraph};

/// Largest vertex count accepted by [`canonical_code`] (codes fit in `u64`).
pub const MAX_CANONICAL_VERTICES: usize = 11;
/// Largest vertex count accepted by [`enumerate_graphs`].
pub const MAX_ENUMERATION_VERTICES: usize = 7;

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Column `j` of the ordering `perm`, most significant bit for row 0.
fn column(g: &SimpleGraph, perm: &[usize], j: usize) -> u64 {
    let vj = perm[j];
    (0..j).fold(0, |acc, i| acc << 1 | g.adjacent(perm[i], vj) as u64)
}

fn pack(columns: &[u64]) -> u64 {
    columns.iter().enumerate().fold(0, |acc, (j, &c)| (acc << j) | c)
}

struct Search<'g> {
    g: &'g SimpleGraph,
    /// degree required at each position
    slots: Vec<usize>,
    /// best code found so far, column by column
    best: Vec<u64>,
    perm: Vec<usize>,
    /// stop at the first ordering beating `best`
    witness_only: bool,
    improved: bool,
}

impl Search<'_> {
    // Every partial ordering that respects the degree slots extends to a
    // full one, so `best` may be tightened as soon as a column beats it.
    fn run(&mut self, used: u64) -> bool {
        let j = self.perm.len();
        if j == self.g.n() {
            return false;
        }
        for v in 0..self.g.n() {
            if used >> v & 1 == 1 || self.g.degree(v) != self.slots[j] {
                continue;
            }
            self.perm.push(v);
            let c = column(self.g, &self.perm, j);
            if c < self.best[j] {
                self.improved = true;
                if self.witness_only {
                    return true;
                }
                self.best[j] = c;
                self.best[j + 1..].fill(u64::MAX);
            }
            if c == self.best[j] && self.run(used | 1 << v) {
                return true;
            }
            self.perm.pop();
        }
        false
    }
}

fn sorted_slots(g: &SimpleGraph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.n()).map(|i| g.degree(i)).collect();
    d.sort_unstable();
    d
}

/// Canonical adjacency code of a graph with at most eleven vertices.
pub fn canonical_code(g: &SimpleGraph) -> Result<u64> {
    if g.n() > MAX_CANONICAL_VERTICES {
        return Err(GraphError::OutOfRange { what: "vertex count", value: g.n() });
    }
    let mut search = Search {
        g,
        slots: sorted_slots(g),
        best: vec![u64::MAX; g.n()],
        perm: Vec::new(),
        witness_only: false,
        improved: false,
    };
    search.run(0);
    Ok(pack(&search.best))
}

/// Whether the stored vertex order already realises the canonical code.
fn is_canonical(g: &SimpleGraph) -> bool {
    let n = g.n();
    if (1..n).any(|i| g.degree(i - 1) > g.degree(i)) {
        return false;
    }
    let identity: Vec<usize> = (0..n).collect();
    let best = (0..n).map(|j| column(g, &identity, j)).collect();
    let mut search = Search { g, slots: sorted_slots(g), best, perm: Vec::new(), witness_only: true, improved: false };
    search.run(0);
    !search.improved
}

/// Graph on `n` default-labelled vertices whose upper-triangle bit string is
/// `code` (first pair in the most significant position).
pub fn graph_from_code(n: usize, code: u64) -> SimpleGraph {
    let m = pair_count(n);
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (m - 1 - k) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    SimpleGraph::from_parts(default_labels(n), adj)
}

/// One representative per isomorphism class of graphs on `n` vertices, in
/// increasing canonical-code (equivalently graph6) order.
pub struct GraphEnumeration {
    n: usize,
    next: u64,
    end: u64,
}

impl Iterator for GraphEnumeration {
    type Item = SimpleGraph;

    fn next(&mut self) -> Option<SimpleGraph> {
        while self.next < self.end {
            let g = graph_from_code(self.n, self.next);
            self.next += 1;
            if is_canonical(&g) {
                return Some(g);
            }
        }
        None
    }
}

fn check_range(n: usize) -> Result<()> {
    if (1..=MAX_ENUMERATION_VERTICES).contains(&n) {
        Ok(())
    } else {
        Err(GraphError::OutOfRange { what: "enumeration vertex count", value: n })
    }
}

pub fn enumerate_graphs(n: usize) -> Result<GraphEnumeration> {
    check_range(n)?;
    Ok(GraphEnumeration { n, next: 0, end: 1 << pair_count(n) })
}

/// Same output as [`enumerate_graphs`], collected with the given strategy.
pub fn all_graphs(n: usize, exec: Execution) -> Result<Vec<SimpleGraph>> {
    check_range(n)?;
    let total = 1u64 << pair_count(n);
    let chunk = (total / 256).max(1);
    let chunks = exec.map_range(0..total.div_ceil(chunk), |c| {
        GraphEnumeration { n, next: c * chunk, end: ((c + 1) * chunk).min(total) }.collect::<Vec<_>>()
    });
    Ok(chunks.into_iter().flatten().collect())
}
