//! Cube complexes cut out of the standard cubulation of `ℝⁿ`.
//!
//! Coordinates are indexed by the vertices of the graph. A `k`-cube is a
//! lattice point `p` together with a clique `D` of directions; its corners
//! are `p + Σ_{d∈S} e_d` for `S ⊆ D`. [`build_z0`] keeps every such cube
//! inside a box (finite-order coordinates range over `[0, m−1]`, infinite
//! ones over a window), [`build_zf`] wraps the infinite-order coordinates
//! cyclically, giving a finite cover of the compact model.

mod io;
mod link;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::graphs::{members, VertexSet};
use crate::par::Execution;
use crate::words::{GroupSpec, Order, WordError};

pub use link::{salvetti_link, LinkComplex, LinkFailure, Sign, SignedDir, MAX_LINK_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error(transparent)]
    Spec(#[from] WordError),
    #[error("cyclic size must be at least 3, got {0}")]
    CyclicTooSmall(u32),
    #[error("empty window [{lo}, {hi}]")]
    EmptyWindow { lo: i64, hi: i64 },
    #[error("point {0:?} is outside the box")]
    OutsideBox(Vec<i64>),
    #[error("cube at {base:?} with directions {dirs:#b} is not in the box or not a clique")]
    BadCube { base: Vec<i64>, dirs: VertexSet },
    #[error("link with {0} vertices exceeds the supported size")]
    LinkTooLarge(usize),
    #[error("link vertex {0} out of range")]
    BadLinkVertex(usize),
    #[error("box has {got} ranges for {expected} vertices")]
    BoxSize { expected: usize, got: usize },
    #[error("range for a finite-order vertex must be [0, m-1]")]
    FiniteRange,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("complexes live in different boxes or over different specs")]
    Incomparable,
}

pub type Result<T, E = ComplexError> = std::result::Result<T, E>;

/// Coordinate range of one direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Range {
    /// Integer points `lo..=hi` joined by unit edges.
    Interval { lo: i64, hi: i64 },
    /// `size` points on a circle, `size ≥ 3`.
    Cyclic { size: u32 },
}

impl Range {
    pub fn points(self) -> u64 {
        match self {
            Range::Interval { lo, hi } => (hi - lo + 1) as u64,
            Range::Cyclic { size } => size as u64,
        }
    }

    pub fn edges(self) -> u64 {
        match self {
            Range::Interval { lo, hi } => (hi - lo) as u64,
            Range::Cyclic { size } => size as u64,
        }
    }

    fn first(self) -> i64 {
        match self {
            Range::Interval { lo, .. } => lo,
            Range::Cyclic { .. } => 0,
        }
    }

    pub fn contains(self, x: i64) -> bool {
        match self {
            Range::Interval { lo, hi } => (lo..=hi).contains(&x),
            Range::Cyclic { size } => (0..size as i64).contains(&x),
        }
    }

    /// The coordinate one step up, if the edge `[x, x+1]` exists.
    pub fn succ(self, x: i64) -> Option<i64> {
        match self {
            Range::Interval { hi, .. } => (x < hi).then_some(x + 1),
            Range::Cyclic { size } => Some((x + 1) % size as i64),
        }
    }

    /// The coordinate one step down, if the edge `[x−1, x]` exists.
    pub fn pred(self, x: i64) -> Option<i64> {
        match self {
            Range::Interval { lo, .. } => (x > lo).then_some(x - 1),
            Range::Cyclic { size } => Some((x + size as i64 - 1) % size as i64),
        }
    }

    fn validate(self) -> Result<Self> {
        match self {
            Range::Interval { lo, hi } if hi < lo => Err(ComplexError::EmptyWindow { lo, hi }),
            Range::Cyclic { size } if size < 3 => Err(ComplexError::CyclicTooSmall(size)),
            r => Ok(r),
        }
    }
}

/// One range per vertex of the graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CubeBox {
    ranges: Vec<Range>,
}

impl CubeBox {
    /// Finite-order vertices get `[0, m−1]`; `infinite` chooses the rest.
    pub fn for_spec(spec: &GroupSpec, mut infinite: impl FnMut(usize) -> Range) -> Result<Self> {
        let ranges = (0..spec.n())
            .map(|v| match spec.order(v) {
                Order::Finite(m) => Ok(Range::Interval { lo: 0, hi: m as i64 - 1 }),
                Order::Infinite => infinite(v).validate(),
            })
            .collect::<Result<_>>()?;
        Ok(Self { ranges })
    }

    pub fn new(spec: &GroupSpec, ranges: Vec<Range>) -> Result<Self> {
        if ranges.len() != spec.n() {
            return Err(ComplexError::BoxSize { expected: spec.n(), got: ranges.len() });
        }
        Self::for_spec(spec, |v| ranges[v]).and_then(|b| {
            if b.ranges == ranges {
                Ok(b)
            } else {
                Err(ComplexError::FiniteRange)
            }
        })
    }

    pub fn ranges(&self) -> &[Range] {
        &self.ranges
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        p.len() == self.ranges.len() && p.iter().zip(&self.ranges).all(|(&x, r)| r.contains(x))
    }

    pub fn point_count(&self) -> u64 {
        self.ranges.iter().map(|r| r.points()).product()
    }

    /// The `index`-th lattice point in lexicographic order (last coordinate
    /// fastest).
    pub fn point(&self, mut index: u64) -> Vec<i64> {
        let mut p = vec![0; self.ranges.len()];
        for (k, r) in self.ranges.iter().enumerate().rev() {
            let n = r.points();
            p[k] = r.first() + (index % n) as i64;
            index /= n;
        }
        p
    }

    pub fn points(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        (0..self.point_count()).map(|i| self.point(i))
    }

    /// Whether `self` sits inside `other` coordinate-wise (intervals only;
    /// cyclic ranges must coincide).
    pub fn is_subbox_of(&self, other: &CubeBox) -> bool {
        self.ranges.len() == other.ranges.len()
            && self.ranges.iter().zip(&other.ranges).all(|(a, b)| match (a, b) {
                (Range::Interval { lo: a0, hi: a1 }, Range::Interval { lo: b0, hi: b1 }) => b0 <= a0 && a1 <= b1,
                _ => a == b,
            })
    }
}

/// A cube: base point and direction set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cube {
    pub base: Vec<i64>,
    pub dirs: VertexSet,
}

impl Cube {
    pub fn dim(&self) -> usize {
        self.dirs.count_ones() as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Cells {
    /// Every cube of the cubulation that fits in the box.
    Full,
    /// An explicit face-closed family.
    Listed(BTreeSet<Cube>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeComplex {
    spec: Arc<GroupSpec>,
    bx: CubeBox,
    cells: Cells,
}

/// `Z0` truncated to a box: finite orders give `[0, m−1]`, infinite orders
/// the given window (default `[0, L]`, `L` the largest finite order, or 2).
pub fn build_z0(spec: &Arc<GroupSpec>, window: Option<(i64, i64)>) -> Result<CubeComplex> {
    let default_hi = spec
        .orders()
        .iter()
        .filter_map(|o| match o {
            Order::Finite(m) => Some(*m as i64),
            Order::Infinite => None,
        })
        .max()
        .unwrap_or(2);
    let (lo, hi) = window.unwrap_or((0, default_hi));
    let bx = CubeBox::for_spec(spec, |_| Range::Interval { lo, hi })?;
    Ok(CubeComplex::full(spec.clone(), bx))
}

/// Finite cover of `Zf`: infinite-order coordinates are cyclic of size `q ≥ 3`.
pub fn build_zf(spec: &Arc<GroupSpec>, q: u32) -> Result<CubeComplex> {
    if q < 3 {
        return Err(ComplexError::CyclicTooSmall(q));
    }
    let bx = CubeBox::for_spec(spec, |_| Range::Cyclic { size: q })?;
    Ok(CubeComplex::full(spec.clone(), bx))
}

/// Result of the local-isometry check against the Salvetti complex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SpecialReport {
    pub vertices_checked: u64,
    pub failures: Vec<(Vec<i64>, LinkFailure)>,
}

impl SpecialReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl CubeComplex {
    pub fn full(spec: Arc<GroupSpec>, bx: CubeBox) -> Self {
        Self { spec, bx, cells: Cells::Full }
    }

    /// A complex with the given cubes and all their faces.
    pub fn from_cubes(spec: Arc<GroupSpec>, bx: CubeBox, cubes: impl IntoIterator<Item = Cube>) -> Result<Self> {
        let mut set = BTreeSet::new();
        let graph = spec.graph();
        for cube in cubes {
            let fits = bx.contains(&cube.base)
                && graph.is_clique(cube.dirs)
                && members(cube.dirs).all(|d| bx.ranges[d].succ(cube.base[d]).is_some());
            if !fits {
                return Err(ComplexError::BadCube { base: cube.base, dirs: cube.dirs });
            }
            // faces: fix each direction at either end
            let dirs: Vec<usize> = members(cube.dirs).collect();
            for keep in 0u64..1 << dirs.len() {
                let free = dirs.iter().enumerate().filter(|(k, _)| keep >> k & 1 == 1).fold(0, |s, (_, &d)| s | 1 << d);
                let fixed: Vec<usize> = dirs.iter().copied().filter(|d| free & 1 << d == 0).collect();
                for ends in 0u64..1 << fixed.len() {
                    let mut base = cube.base.clone();
                    for (k, &d) in fixed.iter().enumerate() {
                        if ends >> k & 1 == 1 {
                            base[d] = bx.ranges[d].succ(base[d]).expect("checked above");
                        }
                    }
                    set.insert(Cube { base, dirs: free });
                }
            }
        }
        Ok(Self { spec, bx, cells: Cells::Listed(set) })
    }

    pub fn spec(&self) -> &Arc<GroupSpec> {
        &self.spec
    }

    pub fn cube_box(&self) -> &CubeBox {
        &self.bx
    }

    pub fn is_listed(&self) -> bool {
        matches!(self.cells, Cells::Listed(_))
    }

    fn fits(&self, cube: &Cube) -> bool {
        self.bx.contains(&cube.base)
            && self.spec.graph().is_clique(cube.dirs)
            && members(cube.dirs).all(|d| self.bx.ranges[d].succ(cube.base[d]).is_some())
    }

    pub fn contains_cube(&self, cube: &Cube) -> bool {
        match &self.cells {
            Cells::Full => self.fits(cube),
            Cells::Listed(set) => set.contains(cube),
        }
    }

    /// Number of cubes of each dimension `0..=max`, trailing zeros dropped
    /// (but at least the vertex count).
    pub fn cell_counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.spec.n() + 1];
        match &self.cells {
            Cells::Full => {
                for clique in self.spec.graph().cliques() {
                    let n: u64 = self
                        .bx
                        .ranges
                        .iter()
                        .enumerate()
                        .map(|(v, r)| if clique & 1 << v != 0 { r.edges() } else { r.points() })
                        .product();
                    counts[clique.count_ones() as usize] += n;
                }
            }
            Cells::Listed(set) => {
                for c in set {
                    counts[c.dim()] += 1;
                }
            }
        }
        while counts.len() > 1 && counts.last() == Some(&0) {
            counts.pop();
        }
        counts
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cell_counts().iter().enumerate().map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
    }

    pub fn dimension(&self) -> usize {
        self.cell_counts().len() - 1
    }

    /// All cubes, sorted by direction set then base point.
    pub fn cubes(&self) -> Vec<Cube> {
        match &self.cells {
            Cells::Listed(set) => {
                let mut v: Vec<Cube> = set.iter().cloned().collect();
                v.sort_by(|a, b| (a.dirs, &a.base).cmp(&(b.dirs, &b.base)));
                v
            }
            Cells::Full => {
                let mut out = Vec::new();
                for dirs in self.spec.graph().cliques() {
                    for base in self.bx.points() {
                        let cube = Cube { base, dirs };
                        if self.fits(&cube) {
                            out.push(cube);
                        }
                    }
                }
                out
            }
        }
    }

    pub fn vertices(&self) -> Vec<Vec<i64>> {
        match &self.cells {
            Cells::Full => self.bx.points().collect(),
            Cells::Listed(set) => set.iter().filter(|c| c.dirs == 0).map(|c| c.base.clone()).collect(),
        }
    }

    /// Link at `p`: one vertex per edge leaving `p`, one simplex per cube
    /// having `p` as a corner.
    pub fn vertex_link(&self, p: &[i64]) -> Result<LinkComplex> {
        if !self.bx.contains(p) || !self.contains_cube(&Cube { base: p.to_vec(), dirs: 0 }) {
            return Err(ComplexError::OutsideBox(p.to_vec()));
        }
        let n = self.spec.n();
        // a corner of a cube at p is a signed direction per cube direction
        let corner_base = |d: usize, s: Sign| match s {
            Sign::Plus => Some(p[d]),
            Sign::Minus => self.bx.ranges[d].pred(p[d]),
        };
        let mut labels = Vec::new();
        for v in 0..n {
            for s in [Sign::Plus, Sign::Minus] {
                if let Some(b) = corner_base(v, s) {
                    let mut base = p.to_vec();
                    base[v] = b;
                    if self.contains_cube(&Cube { base, dirs: 1 << v }) {
                        labels.push(SignedDir::new(v, s));
                    }
                }
            }
        }
        if labels.len() > MAX_LINK_VERTICES {
            return Err(ComplexError::LinkTooLarge(labels.len()));
        }
        let mut simplices = std::collections::HashSet::new();
        let by_dir: Vec<Vec<usize>> =
            (0..n).map(|v| (0..labels.len()).filter(|&i| labels[i].vertex == v).collect()).collect();
        for clique in self.spec.graph().cliques().into_iter().filter(|&c| c != 0) {
            let dirs: Vec<usize> = members(clique).collect();
            if dirs.iter().any(|&d| by_dir[d].is_empty()) {
                continue;
            }
            let choices = dirs.iter().map(|&d| by_dir[d].iter().copied());
            for pick in itertools::Itertools::multi_cartesian_product(choices) {
                let mut base = p.to_vec();
                for &i in &pick {
                    let l = labels[i];
                    base[l.vertex] = corner_base(l.vertex, l.sign).expect("label exists");
                }
                if self.contains_cube(&Cube { base, dirs: clique }) {
                    simplices.insert(pick.iter().fold(0u128, |m, &i| m | 1 << i));
                }
            }
        }
        Ok(LinkComplex::from_closed(labels, simplices))
    }

    /// First vertex whose link is not flag, with the offending clique.
    pub fn npc_violation(&self, exec: Execution) -> Result<Option<(Vec<i64>, Vec<SignedDir>)>> {
        let vertices = self.vertices();
        let found = exec.map(&vertices, |p| {
            self.vertex_link(p)
                .map(|l| l.flag_violation().map(|c| (p.clone(), c.iter().map(|&i| l.labels()[i]).collect())))
        });
        for r in found {
            if let Some(v) = r? {
                return Ok(Some(v));
            }
        }
        Ok(None)
    }

    pub fn is_npc(&self, exec: Execution) -> Result<bool> {
        Ok(self.npc_violation(exec)?.is_none())
    }

    /// Check at every vertex that labelling link vertices by their signed
    /// direction is an injective map onto a full subcomplex of the Salvetti
    /// link.
    pub fn check_special_map(&self, exec: Execution) -> Result<SpecialReport> {
        let salvetti = salvetti_link(self.spec.graph())?;
        let vertices = self.vertices();
        let per_vertex = exec.map(&vertices, |p| {
            self.vertex_link(p)
                .map(|l| l.local_isometry_failures(&salvetti).into_iter().map(|f| (p.clone(), f)).collect::<Vec<_>>())
        });
        let mut report = SpecialReport { vertices_checked: vertices.len() as u64, failures: Vec::new() };
        for r in per_vertex {
            report.failures.extend(r?);
        }
        Ok(report)
    }

    /// Pure 2-dimensional, every edge in exactly two squares, every vertex
    /// link a single cycle.
    pub fn is_closed_surface(&self, exec: Execution) -> Result<bool> {
        if self.dimension() != 2 {
            return Ok(false);
        }
        let cubes = self.cubes();
        let squares: Vec<&Cube> = cubes.iter().filter(|c| c.dim() == 2).collect();
        let mut on_edge = std::collections::HashMap::new();
        for sq in &squares {
            let dirs: Vec<usize> = members(sq.dirs).collect();
            for (k, &d) in dirs.iter().enumerate() {
                let other = dirs[1 - k];
                for up in [false, true] {
                    let mut base = sq.base.clone();
                    if up {
                        base[other] = self.bx.ranges[other].succ(base[other]).expect("square fits");
                    }
                    *on_edge.entry(Cube { base, dirs: 1 << d }).or_insert(0u32) += 1;
                }
            }
        }
        let edges_ok = cubes.iter().filter(|c| c.dim() == 1).all(|e| on_edge.get(e) == Some(&2));
        if !edges_ok {
            return Ok(false);
        }
        let vertices = self.vertices();
        let links = exec.map(&vertices, |p| self.vertex_link(p).map(|l| l.is_cycle()));
        for ok in links {
            if !ok? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `self` is a subcomplex of `larger` whose links are full
    /// subcomplexes of the corresponding links of `larger`.
    pub fn is_locally_isometric_in(&self, larger: &CubeComplex, exec: Execution) -> Result<bool> {
        if self.spec != larger.spec || !self.bx.is_subbox_of(&larger.bx) {
            return Err(ComplexError::Incomparable);
        }
        if !self.cubes().iter().all(|c| larger.contains_cube(c)) {
            return Ok(false);
        }
        let vertices = self.vertices();
        let checks = exec.map(&vertices, |p| -> Result<bool> {
            let small = self.vertex_link(p)?;
            let big = larger.vertex_link(p)?;
            let index: Vec<usize> =
                small.labels().iter().map(|l| big.labels().iter().position(|x| x == l).expect("subcomplex")).collect();
            // full: any simplex of the big link spanned by small-link vertices
            // is already in the small link, and conversely
            let back = |i: usize| index.iter().position(|&j| j == i);
            for simplex in big.simplices() {
                let pre: Option<Vec<usize>> = simplex.iter().map(|&i| back(i)).collect();
                if let Some(pre) = pre {
                    if !small.contains(&pre) {
                        return Ok(false);
                    }
                }
            }
            if small.simplices().any(|s| !big.contains(&s.iter().map(|&i| index[i]).collect::<Vec<_>>())) {
                return Ok(false);
            }
            Ok(true)
        });
        for c in checks {
            if !c? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `V=… E=… F=… C3=… chi=… npc=… special=… surface=…`
    pub fn stats_line(&self, exec: Execution) -> Result<String> {
        let counts = self.cell_counts();
        let at = |k: usize| counts.get(k).copied().unwrap_or(0);
        let yes = |b: bool| if b { "yes" } else { "no" };
        Ok(format!(
            "V={} E={} F={} C3={} chi={} npc={} special={} surface={}",
            at(0),
            at(1),
            at(2),
            at(3),
            self.euler_characteristic(),
            yes(self.is_npc(exec)?),
            yes(self.check_special_map(exec)?.passed()),
            yes(self.is_closed_surface(exec)?),
        ))
    }
}

impl fmt::Display for SignedDir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.vertex, self.sign)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{catalog, SimpleGraph};

    fn racg(g: SimpleGraph) -> Arc<GroupSpec> {
        Arc::new(GroupSpec::racg(g))
    }

    #[test]
    fn c5_is_a_hyperbolic_surface() {
        let z = build_z0(&racg(catalog::cycle(5).unwrap()), None).unwrap();
        assert_eq!(z.cell_counts(), vec![32, 80, 40]);
        assert_eq!(z.euler_characteristic(), -8);
        assert!(z.is_closed_surface(Execution::Sequential).unwrap());
        assert!(z.is_npc(Execution::Sequential).unwrap());
        assert!(z.check_special_map(Execution::Parallel).unwrap().passed());
        let link = z.vertex_link(&[0, 1, 0, 1, 1]).unwrap();
        assert!(link.is_cycle());
        assert_eq!(
            z.stats_line(Execution::Sequential).unwrap(),
            "V=32 E=80 F=40 C3=0 chi=-8 npc=yes special=yes surface=yes"
        );
    }

    #[test]
    fn grid_and_single_vertex() {
        let two = GroupSpec::new(SimpleGraph::edgeless(["a", "c"]).unwrap(), vec![Order::Finite(3), Order::Finite(4)]);
        let z = build_z0(&Arc::new(two.unwrap()), None).unwrap();
        assert_eq!(z.cell_counts(), vec![12, 17]);
        assert_eq!(z.euler_characteristic(), -5);
        let one = GroupSpec::uniform(catalog::path(1).unwrap(), Order::Finite(5)).unwrap();
        let z = build_z0(&Arc::new(one), None).unwrap();
        assert_eq!(z.cell_counts(), vec![5, 4]);
        assert_eq!(z.euler_characteristic(), 1);
    }

    #[test]
    fn corner_link_of_a_square() {
        let z = build_z0(&racg(catalog::path(2).unwrap()), None).unwrap();
        let link = z.vertex_link(&[0, 0]).unwrap();
        assert_eq!(link.labels(), &[SignedDir::new(0, Sign::Plus), SignedDir::new(1, Sign::Plus)]);
        assert_eq!(link.f_vector(), vec![2, 1]);
        assert!(z.vertex_link(&[2, 0]).is_err());
        assert!(!z.is_closed_surface(Execution::Sequential).unwrap());
    }

    #[test]
    fn cyclic_cover() {
        let spec = Arc::new(GroupSpec::parse("n 3 a b c\ne a b\ne b c\no a 3\no b inf\no c 4\n").unwrap());
        let z = build_zf(&spec, 4).unwrap();
        assert_eq!(z.cell_counts(), vec![48, 116, 68]);
        assert!(z.check_special_map(Execution::Sequential).unwrap().passed());
        assert_eq!(build_zf(&spec, 2), Err(ComplexError::CyclicTooSmall(2)));
    }

    #[test]
    fn hollow_cube_corner_is_not_npc() {
        let spec = racg(catalog::complete(3).unwrap());
        let bx = CubeBox::for_spec(&spec, |_| unreachable!()).unwrap();
        let squares = [0b011, 0b110, 0b101].map(|dirs| Cube { base: vec![0, 0, 0], dirs });
        let hollow = CubeComplex::from_cubes(spec.clone(), bx.clone(), squares).unwrap();
        assert_eq!(hollow.cell_counts(), vec![7, 9, 3]);
        let (p, clique) = hollow.npc_violation(Execution::Sequential).unwrap().unwrap();
        assert_eq!(p, vec![0, 0, 0]);
        assert_eq!(clique.len(), 3);
        assert!(!hollow.check_special_map(Execution::Sequential).unwrap().passed());
        let solid = CubeComplex::from_cubes(spec, bx, [Cube { base: vec![0, 0, 0], dirs: 0b111 }]).unwrap();
        assert_eq!(solid.cell_counts(), vec![8, 12, 6, 1]);
        assert!(solid.is_npc(Execution::Sequential).unwrap());
        assert_eq!(solid.euler_characteristic(), 1);
    }

    #[test]
    fn bad_cubes_are_rejected() {
        let spec = racg(catalog::path(3).unwrap());
        let bx = CubeBox::for_spec(&spec, |_| unreachable!()).unwrap();
        let not_clique = Cube { base: vec![0, 0, 0], dirs: 0b101 };
        assert!(CubeComplex::from_cubes(spec.clone(), bx.clone(), [not_clique]).is_err());
        let sticks_out = Cube { base: vec![1, 0, 0], dirs: 0b001 };
        assert!(CubeComplex::from_cubes(spec, bx, [sticks_out]).is_err());
    }
}
