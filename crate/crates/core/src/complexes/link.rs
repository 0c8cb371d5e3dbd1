use std::collections::HashSet;
use std::fmt;

use super::{ComplexError, Result};
use crate::graphs::{members, SimpleGraph};

/// Largest number of vertices a link can have (simplices are `u128` masks).
pub const MAX_LINK_VERTICES: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

/// A signed direction `(v, ±)`: the corner of an edge in direction `v`,
/// leaving towards larger (`+`) or smaller (`−`) coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedDir {
    pub vertex: usize,
    pub sign: Sign,
}

impl SignedDir {
    pub fn new(vertex: usize, sign: Sign) -> Self {
        Self { vertex, sign }
    }
}

/// A finite simplicial complex whose vertices carry signed-direction labels.
///
/// Labels of link vertices of a cube complex are distinct; hand-built
/// complexes may repeat them, which is what the local-isometry check detects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkComplex {
    labels: Vec<SignedDir>,
    simplices: HashSet<u128>,
}

fn bits(mask: u128) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            i
        })
    })
}

impl LinkComplex {
    /// Build from facets given as lists of vertex indices; every face of a
    /// facet is added.
    pub fn new(labels: Vec<SignedDir>, facets: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        if labels.len() > MAX_LINK_VERTICES {
            return Err(ComplexError::LinkTooLarge(labels.len()));
        }
        let mut simplices = HashSet::new();
        for i in 0..labels.len() {
            simplices.insert(1u128 << i);
        }
        for facet in facets {
            let mut mask = 0u128;
            for i in facet {
                if i >= labels.len() {
                    return Err(ComplexError::BadLinkVertex(i));
                }
                mask |= 1 << i;
            }
            add_faces(&mut simplices, mask);
        }
        simplices.remove(&0);
        Ok(Self { labels, simplices })
    }

    /// Build from a face-closed family of nonempty simplex masks.
    pub(crate) fn from_closed(labels: Vec<SignedDir>, simplices: HashSet<u128>) -> Self {
        Self { labels, simplices }
    }

    pub fn labels(&self) -> &[SignedDir] {
        &self.labels
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn contains(&self, simplex: &[usize]) -> bool {
        let mask = simplex.iter().fold(0u128, |m, &i| m | 1 << i);
        mask == 0 || self.simplices.contains(&mask)
    }

    /// Every nonempty simplex as a sorted vertex list, in no fixed order.
    pub fn simplices(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.simplices.iter().map(|&m| bits(m).collect())
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.simplices.contains(&(1u128 << i | 1u128 << j))
    }

    pub fn dimension(&self) -> isize {
        self.simplices.iter().map(|s| s.count_ones() as isize - 1).max().unwrap_or(-1)
    }

    /// Number of simplices of each dimension, starting at vertices.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; (self.dimension() + 1).max(0) as usize];
        for s in &self.simplices {
            f[s.count_ones() as usize - 1] += 1;
        }
        f
    }

    fn neighbours(&self, i: usize) -> u128 {
        (0..self.labels.len()).filter(|&j| self.has_edge(i, j)).fold(0, |m, j| m | 1 << j)
    }

    /// A clique of the 1-skeleton that does not span a simplex, if any.
    pub fn flag_violation(&self) -> Option<Vec<usize>> {
        let nbrs: Vec<u128> = (0..self.labels.len()).map(|i| self.neighbours(i)).collect();
        // grow cliques in increasing vertex order
        fn grow(link: &LinkComplex, nbrs: &[u128], clique: u128, cand: u128) -> Option<u128> {
            for j in bits(cand) {
                let next = clique | 1 << j;
                if !link.simplices.contains(&next) {
                    return Some(next);
                }
                let rest = cand & nbrs[j] & !((2u128 << j) - 1);
                if let Some(bad) = grow(link, nbrs, next, rest) {
                    return Some(bad);
                }
            }
            None
        }
        let all = if self.labels.len() == 128 { u128::MAX } else { (1u128 << self.labels.len()) - 1 };
        grow(self, &nbrs, 0, all).map(|m| bits(m).collect())
    }

    pub fn is_flag(&self) -> bool {
        self.flag_violation().is_none()
    }

    /// Whether the complex is a single cycle (of length at least three).
    pub fn is_cycle(&self) -> bool {
        let n = self.labels.len();
        if n < 3 || self.dimension() != 1 {
            return false;
        }
        if (0..n).any(|i| self.neighbours(i).count_ones() != 2) {
            return false;
        }
        let mut seen = 1u128;
        let mut stack = vec![0usize];
        while let Some(i) = stack.pop() {
            for j in bits(self.neighbours(i) & !seen) {
                seen |= 1 << j;
                stack.push(j);
            }
        }
        seen.count_ones() as usize == n
    }

    /// Check that the label map into `salvetti` is an injective simplicial
    /// map onto a full subcomplex.
    pub fn local_isometry_failures(&self, salvetti: &LinkComplex) -> Vec<LinkFailure> {
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        for &l in &self.labels {
            if !seen.insert(l) {
                out.push(LinkFailure::NotInjective(l));
            }
        }
        let index = |l: &SignedDir| salvetti.labels.iter().position(|x| x == l);
        let image: Vec<Option<usize>> = self.labels.iter().map(index).collect();
        for (i, img) in image.iter().enumerate() {
            if img.is_none() {
                out.push(LinkFailure::UnknownLabel(self.labels[i]));
            }
        }
        if !out.is_empty() {
            return out;
        }
        let image: Vec<usize> = image.into_iter().map(Option::unwrap).collect();
        for i in 0..self.labels.len() {
            for j in i + 1..self.labels.len() {
                let ours = self.has_edge(i, j);
                let theirs = salvetti.has_edge(image[i], image[j]);
                if ours && !theirs {
                    out.push(LinkFailure::NotSimplicial(self.labels[i], self.labels[j]));
                } else if theirs && !ours {
                    out.push(LinkFailure::NotFull(self.labels[i], self.labels[j]));
                }
            }
        }
        // with the target flag, fullness on edges plus flagness here gives
        // fullness for every simplex
        if out.is_empty() {
            if let Some(c) = self.flag_violation() {
                out.push(LinkFailure::NotFlag(c.into_iter().map(|i| self.labels[i]).collect()));
            }
        }
        out
    }
}

fn add_faces(simplices: &mut HashSet<u128>, mask: u128) {
    if !simplices.insert(mask) {
        return;
    }
    for i in bits(mask) {
        let face = mask & !(1u128 << i);
        if face != 0 {
            add_faces(simplices, face);
        }
    }
}

/// Link of the single vertex of the Salvetti complex: vertices `(v, ±)`,
/// with a simplex for every clique of the graph and every choice of signs.
pub fn salvetti_link(graph: &SimpleGraph) -> Result<LinkComplex> {
    if 2 * graph.n() > MAX_LINK_VERTICES {
        return Err(ComplexError::LinkTooLarge(2 * graph.n()));
    }
    let labels: Vec<SignedDir> =
        (0..graph.n()).flat_map(|v| [SignedDir::new(v, Sign::Plus), SignedDir::new(v, Sign::Minus)]).collect();
    let mut simplices = HashSet::new();
    for clique in graph.cliques().into_iter().filter(|&c| c != 0) {
        let dirs: Vec<usize> = members(clique).collect();
        for signs in 0u64..1 << dirs.len() {
            let mask =
                dirs.iter().enumerate().fold(0u128, |m, (k, &v)| m | 1u128 << (2 * v + (signs >> k & 1) as usize));
            simplices.insert(mask);
        }
    }
    Ok(LinkComplex::from_closed(labels, simplices))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinkFailure {
    NotInjective(SignedDir),
    UnknownLabel(SignedDir),
    NotSimplicial(SignedDir, SignedDir),
    NotFull(SignedDir, SignedDir),
    NotFlag(Vec<SignedDir>),
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}
