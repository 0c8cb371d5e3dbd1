//! Induced cycles: holes, antiholes, weak chordality, chordality and clique
//! separators.
//!
//! Everything here is an exhaustive vertex-subset search. Subsets are visited
//! by size and then in lexicographic order of their sorted vertex positions,
//! which fixes the witness returned by every query.

use itertools::Itertools;

use super::{members, GraphError, Result, SimpleGraph, VertexSet};

/// An induced cycle, listed in cyclic order starting from its earliest vertex
/// and continuing towards the earlier of that vertex's two cycle neighbours.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hole {
    pub cycle: Vec<usize>,
}

impl Hole {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.cycle.iter().fold(0, |acc, &i| acc | 1 << i)
    }

    pub fn labels<'g>(&self, g: &'g SimpleGraph) -> Vec<&'g str> {
        self.cycle.iter().map(|&i| g.label(i)).collect()
    }
}

/// Outcome of the weak-chordality test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeakChordality {
    WeaklyChordal,
    /// Induced cycle of length at least five in the graph.
    Hole(Hole),
    /// Induced cycle of length at least five in the opposite graph.
    Antihole(Hole),
}

impl WeakChordality {
    pub fn is_weakly_chordal(&self) -> bool {
        matches!(self, Self::WeaklyChordal)
    }
}

/// Split of a graph along a complete separator: `first ∪ second` covers the
/// graph, `first ∩ second = separator` is a clique and no edge joins
/// `first ∖ separator` to `second ∖ separator`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompleteSeparator {
    pub first: VertexSet,
    pub second: VertexSet,
    pub separator: VertexSet,
}

/// If the induced subgraph on `set` is a cycle of length ≥ 3, return it in
/// canonical order.
pub(crate) fn as_cycle(g: &SimpleGraph, set: VertexSet) -> Option<Hole> {
    let k = set.count_ones() as usize;
    if k < 3 || members(set).any(|i| (g.neighbors(i) & set).count_ones() != 2) {
        return None;
    }
    let start = set.trailing_zeros() as usize;
    let first_step = (g.neighbors(start) & set).trailing_zeros() as usize;
    let mut cycle = vec![start, first_step];
    while cycle.len() < k {
        let (prev, cur) = (cycle[cycle.len() - 2], cycle[cycle.len() - 1]);
        let next = members(g.neighbors(cur) & set).find(|&x| x != prev)?;
        if next == start {
            // closed early: the subset is a disjoint union of cycles
            return None;
        }
        cycle.push(next);
    }
    Some(Hole { cycle })
}

impl SimpleGraph {
    /// Shortest induced cycle of length at least `min_len`, ties broken by the
    /// lexicographically least sorted vertex set.
    pub fn find_hole(&self, min_len: usize) -> Result<Option<Hole>> {
        if min_len < 4 {
            return Err(GraphError::OutOfRange { what: "minimum hole length", value: min_len });
        }
        // vertices of degree < 2 never lie on a cycle
        let candidates: Vec<usize> = (0..self.n()).filter(|&i| self.degree(i) >= 2).collect();
        for k in min_len..=candidates.len() {
            for combo in candidates.iter().combinations(k) {
                let set = combo.iter().fold(0u64, |acc, &&i| acc | 1 << i);
                if let Some(h) = as_cycle(self, set) {
                    return Ok(Some(h));
                }
            }
        }
        Ok(None)
    }

    /// Weak chordality: no hole and no antihole of length five or more.
    ///
    /// When both exist, the shorter witness is reported (holes win ties).
    pub fn weak_chordality(&self) -> WeakChordality {
        let hole = self.find_hole(5).expect("valid length");
        let anti = self.opposite().find_hole(5).expect("valid length");
        match (hole, anti) {
            (Some(h), Some(a)) if a.len() < h.len() => WeakChordality::Antihole(a),
            (Some(h), _) => WeakChordality::Hole(h),
            (None, Some(a)) => WeakChordality::Antihole(a),
            (None, None) => WeakChordality::WeaklyChordal,
        }
    }

    pub fn is_weakly_chordal(&self) -> bool {
        self.weak_chordality().is_weakly_chordal()
    }

    /// No induced cycle of length four or more.
    pub fn is_chordal(&self) -> bool {
        self.find_hole(4).expect("valid length").is_none()
    }

    /// Split a chordal, non-complete graph along a smallest clique separator
    /// (ties broken lexicographically). `first` is the separator together with
    /// the component of the rest that contains the earliest vertex.
    ///
    /// Disconnected graphs split along the empty separator. Returns `None`
    /// for complete graphs and `Err(NotChordal)` for non-chordal input.
    pub fn complete_separator(&self) -> Result<Option<CompleteSeparator>> {
        if !self.is_chordal() {
            return Err(GraphError::NotChordal);
        }
        if self.is_complete() {
            return Ok(None);
        }
        let all = self.vertex_set();
        let mut cliques = self.cliques();
        cliques.sort_by_key(|&c| (c.count_ones(), sorted_key(c)));
        for sep in cliques {
            let rest = all & !sep;
            if rest == 0 {
                continue;
            }
            let start = rest.trailing_zeros() as usize;
            let comp = self.component_within(start, rest);
            if comp != rest {
                return Ok(Some(CompleteSeparator { first: comp | sep, second: all & !comp, separator: sep }));
            }
        }
        unreachable!("non-complete chordal graphs have a clique separator")
    }
}

/// Sort key realising lexicographic order on sorted vertex lists.
fn sorted_key(set: VertexSet) -> Vec<usize> {
    members(set).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SimpleGraph {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        SimpleGraph::from_index_edges(n, &edges).unwrap()
    }

    fn path(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        SimpleGraph::from_index_edges(n, &edges).unwrap()
    }

    #[test]
    fn cycle_is_its_own_hole() {
        for m in 5..10 {
            let h = cycle(m).find_hole(5).unwrap().unwrap();
            assert_eq!(h.cycle, (0..m).collect::<Vec<_>>());
        }
    }

    #[test]
    fn hole_order_starts_at_earliest_vertex() {
        // 0-3-1-4-2-0 is a five cycle in a scrambled order
        let g = SimpleGraph::from_index_edges(5, &[(0, 3), (3, 1), (1, 4), (4, 2), (2, 0)]).unwrap();
        assert_eq!(g.find_hole(5).unwrap().unwrap().cycle, vec![0, 2, 4, 1, 3]);
    }

    #[test]
    fn min_len_is_validated() {
        assert!(cycle(5).find_hole(3).is_err());
        assert_eq!(cycle(4).find_hole(4).unwrap().unwrap().len(), 4);
        assert_eq!(cycle(4).find_hole(5).unwrap(), None);
    }

    #[test]
    fn two_disjoint_triangles_are_not_a_hexagon() {
        let g = SimpleGraph::from_index_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(g.find_hole(4).unwrap(), None);
    }

    #[test]
    fn weak_chordality_witnesses() {
        for m in 5..9 {
            assert_eq!(cycle(m).weak_chordality(), WeakChordality::Hole(Hole { cycle: (0..m).collect() }));
        }
        assert!(matches!(cycle(7).opposite().weak_chordality(), WeakChordality::Antihole(h) if h.len() == 7));
        assert!(path(6).opposite().is_weakly_chordal());
    }

    #[test]
    fn chordal_examples() {
        let k5 = cycle(5).opposite().join(&cycle(3).relabel(["x", "y", "z"]).unwrap()).unwrap();
        assert!(!k5.is_chordal());
        assert!(path(5).is_chordal());
        assert!(!cycle(4).is_chordal());
    }

    #[test]
    fn separator_of_path() {
        let p3 = path(3);
        let s = p3.complete_separator().unwrap().unwrap();
        assert_eq!((s.first, s.second, s.separator), (0b011, 0b110, 0b010));
    }

    #[test]
    fn separator_of_disconnected_graph_is_empty() {
        let g = SimpleGraph::from_index_edges(3, &[(0, 1)]).unwrap();
        let s = g.complete_separator().unwrap().unwrap();
        assert_eq!((s.first, s.second, s.separator), (0b011, 0b100, 0));
    }

    #[test]
    fn separator_edge_cases() {
        let k4 = SimpleGraph::from_index_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.complete_separator().unwrap(), None);
        assert_eq!(cycle(4).complete_separator().unwrap_err(), GraphError::NotChordal);
    }
}
