//! Isomorphism and induced-subgraph search by pruned backtracking.

use itertools::Itertools;

use super::{members, SimpleGraph, VertexSet};

/// A label bijection preserving adjacency: `map[i]` is the image of vertex
/// `i` of the first graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    pub map: Vec<usize>,
}

fn degree_profile(g: &SimpleGraph) -> Vec<(usize, Vec<usize>)> {
    (0..g.n())
        .map(|i| {
            let nd: Vec<usize> = members(g.neighbors(i)).map(|j| g.degree(j)).sorted().collect();
            (g.degree(i), nd)
        })
        .collect()
}

fn extend(
    g1: &SimpleGraph,
    g2: &SimpleGraph,
    p1: &[(usize, Vec<usize>)],
    p2: &[(usize, Vec<usize>)],
    map: &mut Vec<usize>,
    used: &mut u64,
) -> bool {
    let i = map.len();
    if i == g1.n() {
        return true;
    }
    for j in 0..g2.n() {
        if *used >> j & 1 == 1 || p1[i] != p2[j] {
            continue;
        }
        if (0..i).any(|k| g1.adjacent(i, k) != g2.adjacent(j, map[k])) {
            continue;
        }
        map.push(j);
        *used |= 1 << j;
        if extend(g1, g2, p1, p2, map, used) {
            return true;
        }
        map.pop();
        *used &= !(1 << j);
    }
    false
}

impl SimpleGraph {
    /// First isomorphism found when images are tried in vertex order.
    pub fn isomorphism(&self, other: &SimpleGraph) -> Option<Isomorphism> {
        if self.n() != other.n() || self.edge_count() != other.edge_count() {
            return None;
        }
        let (p1, p2) = (degree_profile(self), degree_profile(other));
        if p1.iter().sorted().ne(p2.iter().sorted()) {
            return None;
        }
        let mut map = Vec::with_capacity(self.n());
        let mut used = 0;
        extend(self, other, &p1, &p2, &mut map, &mut used).then_some(Isomorphism { map })
    }

    pub fn is_isomorphic(&self, other: &SimpleGraph) -> bool {
        self.isomorphism(other).is_some()
    }

    /// Lexicographically first vertex subset inducing a copy of `pattern`.
    pub fn find_induced(&self, pattern: &SimpleGraph) -> Option<VertexSet> {
        let k = pattern.n();
        if k > self.n() {
            return None;
        }
        let target_edges = pattern.edge_count();
        let target_degrees: Vec<usize> = (0..k).map(|i| pattern.degree(i)).sorted().collect();
        (0..self.n()).combinations(k).find_map(|combo| {
            let set = combo.iter().fold(0u64, |acc, &i| acc | 1 << i);
            let degrees: Vec<usize> =
                combo.iter().map(|&i| (self.neighbors(i) & set).count_ones() as usize).sorted().collect();
            if degrees.iter().sum::<usize>() != 2 * target_edges || degrees != target_degrees {
                return None;
            }
            self.induced(set).is_isomorphic(pattern).then_some(set)
        })
    }
}
