//! Finite simplicial graphs and the graph operations used throughout the
//! workbench.
//!
//! A [`SimpleGraph`] stores an ordered list of vertex labels together with a
//! bitmask adjacency matrix, so graphs are limited to [`MAX_VERTICES`]
//! vertices. Vertex subsets are passed around as `u64` bitmasks indexed by
//! vertex position.

pub mod catalog;
mod edgelist;
pub mod enumerate;
mod graph6;
mod holes;
mod iso;

use std::fmt;

use thiserror::Error;

pub use catalog::{named, NAMED_GRAPHS};
pub use enumerate::{all_graphs, canonical_code, enumerate_graphs, GraphEnumeration};
pub(crate) use holes::as_cycle;
pub use holes::{CompleteSeparator, Hole, WeakChordality};
pub use iso::Isomorphism;

/// Largest supported vertex count (vertex sets are `u64` masks).
pub const MAX_VERTICES: usize = 64;

/// A set of vertices, encoded as a bitmask over vertex positions.
pub type VertexSet = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("self-loop at `{0}`")]
    SelfLoop(String),
    #[error("`{0}`-`{1}` is not an edge")]
    NotAnEdge(String, String),
    #[error("`{0}`-`{1}` is not an edge of the opposite graph")]
    NotAnOppositeEdge(String, String),
    #[error("graph has {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("{what} = {value} is out of range")]
    OutOfRange { what: &'static str, value: usize },
    #[error("graph is not chordal")]
    NotChordal,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
}

pub type Result<T> = std::result::Result<T, GraphError>;

/// Iterate the members of a vertex set in increasing order.
pub fn members(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let i = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(i)
        }
    })
}

fn full_set(n: usize) -> VertexSet {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Default labels: `a`..`z` for up to 26 vertices, `v0`, `v1`, … beyond.
pub fn default_labels(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (0..n).map(|i| format!("v{i}")).collect()
    }
}

/// A finite simplicial graph with an ordered, labelled vertex list.
///
/// Equality compares the vertex order and the edge set exactly; use
/// [`SimpleGraph::isomorphism`] to compare up to relabelling.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    labels: Vec<String>,
    adj: Vec<VertexSet>,
}

impl SimpleGraph {
    /// Graph on `labels` without edges.
    pub fn edgeless<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(labels.len()));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(GraphError::DuplicateVertex(l.clone()));
            }
        }
        let n = labels.len();
        Ok(Self { labels, adj: vec![0; n] })
    }

    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>, edges: &[(&str, &str)]) -> Result<Self> {
        let mut g = Self::edgeless(labels)?;
        for &(u, v) in edges {
            let (i, j) = (g.index_of(u)?, g.index_of(v)?);
            g.insert_edge(i, j)?;
        }
        Ok(g)
    }

    /// Graph on `n` default-labelled vertices with edges given by index.
    pub fn from_index_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::edgeless(default_labels(n))?;
        for &(i, j) in edges {
            if i >= n || j >= n {
                return Err(GraphError::OutOfRange { what: "vertex index", value: i.max(j) });
            }
            g.insert_edge(i, j)?;
        }
        Ok(g)
    }

    pub(crate) fn from_parts(labels: Vec<String>, adj: Vec<VertexSet>) -> Self {
        debug_assert_eq!(labels.len(), adj.len());
        Self { labels, adj }
    }

    pub(crate) fn insert_edge(&mut self, i: usize, j: usize) -> Result<()> {
        if i == j {
            return Err(GraphError::SelfLoop(self.labels[i].clone()));
        }
        self.adj[i] |= 1 << j;
        self.adj[j] |= 1 << i;
        Ok(())
    }

    /// Same graph with new vertex labels (same order).
    pub fn relabel<S: Into<String>>(&self, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let g = Self::edgeless(labels)?;
        if g.n() != self.n() {
            return Err(GraphError::OutOfRange { what: "label count", value: g.n() });
        }
        Ok(Self { labels: g.labels, adj: self.adj.clone() })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| GraphError::UnknownVertex(label.to_string()))
    }

    pub fn set_of(&self, labels: &[&str]) -> Result<VertexSet> {
        labels.iter().try_fold(0, |acc, l| Ok(acc | 1 << self.index_of(l)?))
    }

    pub fn set_labels(&self, set: VertexSet) -> Vec<&str> {
        members(set).map(|i| self.label(i)).collect()
    }

    pub fn vertex_set(&self) -> VertexSet {
        full_set(self.n())
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i] >> j & 1 == 1
    }

    /// Neighbourhood of vertex `i` as a set.
    pub fn neighbors(&self, i: usize) -> VertexSet {
        self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as index pairs `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n()).flat_map(|i| members(self.adj[i] >> i >> 1).map(move |d| (i, i + 1 + d))).collect()
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n()).all(|i| self.degree(i) + 1 == self.n())
    }

    /// Whether `set` spans a complete subgraph.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        members(set).all(|i| self.adj[i] & set == set & !(1 << i))
    }

    /// The vertex sets of all cliques (including the empty one), in
    /// increasing numeric order of their masks.
    pub fn cliques(&self) -> Vec<VertexSet> {
        let mut out = vec![0];
        for i in 0..self.n() {
            let len = out.len();
            for k in 0..len {
                let c = out[k];
                if self.adj[i] & c == c {
                    out.push(c | 1 << i);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Whether the induced subgraph on `set` is connected (the empty set is).
    pub fn is_connected_set(&self, set: VertexSet) -> bool {
        if set == 0 {
            return true;
        }
        let mut seen = set & set.wrapping_neg();
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for i in members(frontier) {
                next |= self.adj[i] & set;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == set
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.vertex_set())
    }

    /// Connected component of `start` inside `set`.
    pub fn component_within(&self, start: usize, set: VertexSet) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for i in members(frontier) {
                next |= self.adj[i] & set;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// The opposite (complement) graph on the same vertex list.
    pub fn opposite(&self) -> Self {
        let full = self.vertex_set();
        let adj = self.adj.iter().enumerate().map(|(i, a)| full & !a & !(1 << i)).collect();
        Self { labels: self.labels.clone(), adj }
    }

    /// Induced subgraph on a vertex set, keeping the stored vertex order.
    pub fn induced(&self, set: VertexSet) -> Self {
        let keep: Vec<usize> = members(set & self.vertex_set()).collect();
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let adj = keep
            .iter()
            .map(|&i| {
                keep.iter().enumerate().filter(|&(_, &j)| self.adjacent(i, j)).fold(0, |acc, (k, _)| acc | 1 << k)
            })
            .collect();
        Self { labels, adj }
    }

    pub fn induced_subgraph(&self, labels: &[&str]) -> Result<Self> {
        Ok(self.induced(self.set_of(labels)?))
    }

    /// Neighbours of `v`.
    pub fn link(&self, v: &str) -> Result<VertexSet> {
        Ok(self.adj[self.index_of(v)?])
    }

    /// `v` together with its neighbours.
    pub fn star(&self, v: &str) -> Result<VertexSet> {
        let i = self.index_of(v)?;
        Ok(self.adj[i] | 1 << i)
    }

    /// Simple contraction of the edge `{u, v}`.
    ///
    /// The endpoints are replaced by a single vertex labelled `u*v` (endpoints
    /// in vertex order) sitting at the position of the earlier endpoint.
    pub fn contract_edge(&self, u: &str, v: &str) -> Result<Self> {
        let (i, j) = (self.index_of(u)?, self.index_of(v)?);
        if !self.adjacent(i, j) {
            return Err(GraphError::NotAnEdge(u.into(), v.into()));
        }
        Ok(self.merge_vertices(i.min(j), i.max(j)))
    }

    fn merge_vertices(&self, keep: usize, drop: usize) -> Self {
        let merged_nbrs = (self.adj[keep] | self.adj[drop]) & !(1 << keep) & !(1 << drop);
        let mut adj = self.adj.clone();
        adj[keep] = merged_nbrs;
        for k in members(merged_nbrs) {
            adj[k] |= 1 << keep;
        }
        let mut labels = self.labels.clone();
        labels[keep] = format!("{}*{}", self.labels[keep], self.labels[drop]);
        let g = Self { labels, adj };
        g.induced(g.vertex_set() & !(1 << drop))
    }

    /// Contraction of `{u, v}` performed in the opposite graph and read back:
    /// `opposite(contract_edge(opposite(self), e))`.
    pub fn co_contract(&self, u: &str, v: &str) -> Result<Self> {
        let (i, j) = (self.index_of(u)?, self.index_of(v)?);
        if i == j || self.adjacent(i, j) {
            return Err(GraphError::NotAnOppositeEdge(u.into(), v.into()));
        }
        Ok(self.opposite().merge_vertices(i.min(j), i.max(j)).opposite())
    }

    /// Double of the graph minus the open star of `t`, along the link of `t`.
    pub fn double_along_link(&self, t: &str) -> Result<Double> {
        let ti = self.index_of(t)?;
        let link = self.adj[ti];
        let rest: Vec<usize> = (0..self.n()).filter(|&i| i != ti).collect();
        let copied: Vec<usize> = rest.iter().copied().filter(|&i| link >> i & 1 == 0).collect();

        let mut labels: Vec<String> = rest.iter().map(|&i| self.labels[i].clone()).collect();
        let mut retraction = rest.clone();
        for &i in &copied {
            let mut primed = format!("{}'", self.labels[i]);
            while labels.contains(&primed) || self.labels.contains(&primed) {
                primed.push('\'');
            }
            labels.push(primed);
            retraction.push(i);
        }
        if labels.len() > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(labels.len()));
        }
        // position of each original vertex in each copy
        let mut first = vec![usize::MAX; self.n()];
        let mut second = vec![usize::MAX; self.n()];
        for (pos, &i) in rest.iter().enumerate() {
            first[i] = pos;
            second[i] = pos;
        }
        for (k, &i) in copied.iter().enumerate() {
            second[i] = rest.len() + k;
        }
        let mut g = Self::from_parts(labels, vec![0; retraction.len()]);
        for (i, j) in self.edges() {
            if i == ti || j == ti {
                continue;
            }
            g.insert_edge(first[i], first[j])?;
            g.insert_edge(second[i], second[j])?;
        }
        Ok(Double { graph: g, retraction, first, second })
    }

    /// Disjoint union; labels must not collide.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        let labels = self.labels.iter().chain(other.labels.iter()).cloned();
        let mut g = Self::edgeless(labels)?;
        let off = self.n();
        for (i, j) in self.edges() {
            g.insert_edge(i, j)?;
        }
        for (i, j) in other.edges() {
            g.insert_edge(i + off, j + off)?;
        }
        Ok(g)
    }

    /// Join: disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Self) -> Result<Self> {
        let mut g = self.disjoint_union(other)?;
        for i in 0..self.n() {
            for j in 0..other.n() {
                g.insert_edge(i, self.n() + j)?;
            }
        }
        Ok(g)
    }
}

/// Result of [`SimpleGraph::double_along_link`].
#[derive(Debug, Clone)]
pub struct Double {
    pub graph: SimpleGraph,
    /// Original vertex index of each vertex of the double.
    pub retraction: Vec<usize>,
    /// Position of each original vertex in the first copy (`usize::MAX` for `t`).
    pub first: Vec<usize>,
    /// Position of each original vertex in the second copy; link vertices
    /// coincide with their first-copy position.
    pub second: Vec<usize>,
}

impl Double {
    pub fn first_copy(&self) -> VertexSet {
        self.first.iter().filter(|&&p| p != usize::MAX).fold(0, |acc, &p| acc | 1 << p)
    }

    pub fn second_copy(&self) -> VertexSet {
        self.second.iter().filter(|&&p| p != usize::MAX).fold(0, |acc, &p| acc | 1 << p)
    }
}

impl fmt::Display for SimpleGraph {
    /// Edge-list text format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n {}", self.n())?;
        for l in &self.labels {
            write!(f, " {l}")?;
        }
        writeln!(f)?;
        for (i, j) in self.edges() {
            writeln!(f, "e {} {}", self.labels[i], self.labels[j])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        SimpleGraph::from_index_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> SimpleGraph {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        SimpleGraph::from_index_edges(n, &edges).unwrap()
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(SimpleGraph::new(["a", "a"], &[]).unwrap_err(), GraphError::DuplicateVertex("a".into()));
        assert_eq!(SimpleGraph::new(["a"], &[("a", "a")]).unwrap_err(), GraphError::SelfLoop("a".into()));
        assert_eq!(SimpleGraph::new(["a"], &[("a", "z")]).unwrap_err(), GraphError::UnknownVertex("z".into()));
    }

    #[test]
    fn opposite_is_involution() {
        let g = path(6);
        assert_eq!(g.opposite().opposite(), g);
        assert_eq!(g.opposite().edge_count(), 15 - 5);
    }

    #[test]
    fn link_and_star() {
        let c5 = cycle(5);
        assert_eq!(c5.set_labels(c5.link("a").unwrap()), ["b", "e"]);
        let p7opp = path(7).opposite();
        assert_eq!(p7opp.set_labels(p7opp.link("d").unwrap()), ["a", "b", "f", "g"]);
        let k4 = path(4).opposite().opposite().join(&path(1).relabel(["z"]).unwrap()).unwrap();
        assert_eq!(k4.star("z").unwrap(), k4.vertex_set());
        assert!(k4.link("q").is_err());
    }

    #[test]
    fn induced_keeps_order() {
        let g = cycle(5);
        assert_eq!(g.induced(g.vertex_set()), g);
        let h = g.induced_subgraph(&["d", "a", "b"]).unwrap();
        assert_eq!(h.labels(), ["a", "b", "d"]);
        assert_eq!(h.edges(), vec![(0, 1)]);
        assert!(g.induced_subgraph(&["x"]).is_err());
    }

    #[test]
    fn contraction_labels_and_errors() {
        let g = cycle(6);
        let h = g.contract_edge("c", "b").unwrap();
        assert_eq!(h.labels(), ["a", "b*c", "d", "e", "f"]);
        assert!(h.adjacent(0, 1) && h.adjacent(1, 2));
        assert_eq!(g.contract_edge("a", "c").unwrap_err(), GraphError::NotAnEdge("a".into(), "c".into()));
        let k = g.opposite().co_contract("a", "b").unwrap();
        assert_eq!(k.n(), 5);
        assert!(g.opposite().co_contract("a", "c").is_err());
    }

    #[test]
    fn double_vertex_count() {
        let g = path(7).opposite();
        for t in 0..7 {
            let d = g.double_along_link(g.label(t)).unwrap();
            assert_eq!(d.graph.n(), 2 * 7 - 2 - g.degree(t));
        }
    }

    #[test]
    fn double_of_cone_point_is_the_rest() {
        // the apex of a cone is adjacent to everything
        let base = path(4);
        let cone = base.join(&SimpleGraph::edgeless(["t"]).unwrap()).unwrap();
        let d = cone.double_along_link("t").unwrap();
        assert_eq!(d.graph, base);
    }

    #[test]
    fn double_restricts_to_both_copies() {
        let g = cycle(6).opposite();
        let d = g.double_along_link("c").unwrap();
        let rest = g.induced(g.vertex_set() & !(1 << 2));
        assert_eq!(d.graph.induced(d.first_copy()), rest);
        for i in 0..6 {
            for j in 0..6 {
                if i != 2 && j != 2 && i != j {
                    assert_eq!(d.graph.adjacent(d.second[i], d.second[j]), g.adjacent(i, j));
                }
            }
        }
        assert!(members(d.second_copy()).all(|p| d.retraction[p] != 2));
    }

    #[test]
    fn cliques_of_triangle() {
        let k3 = cycle(3);
        assert_eq!(k3.cliques().len(), 8);
        assert!(k3.is_complete());
        assert_eq!(path(3).cliques(), vec![0, 1, 2, 3, 4, 6]);
    }
}
