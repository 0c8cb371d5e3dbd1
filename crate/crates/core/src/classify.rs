//! Hyperbolic surface subgroup verdicts for right-angled Coxeter and Artin
//! groups, witness certificates and the small-graph census.
//!
//! Up to seven vertices both questions are decided exactly: a right-angled
//! Coxeter group contains a hyperbolic surface group iff its graph is not
//! weakly chordal, and a right-angled Artin group does iff its graph contains
//! `C6opp`, `P6opp`, `P1_7`, `P2_7` or a cycle of length at least five as an
//! induced subgraph. Beyond seven vertices only the sufficient conditions
//! (holes, antiholes, the named patterns) are applied and the verdict is
//! otherwise [`Verdict::Unknown`].

use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::complexes::{build_z0, ComplexError, CubeComplex};
use crate::embeddings::{co_contraction_embedding, EmbeddingError, HomomorphismSpec};
use crate::graphs::{all_graphs, as_cycle, catalog, members, GraphError, Hole, SimpleGraph, WeakChordality};
use crate::par::Execution;
use crate::words::{GroupSpec, Order};

/// Largest vertex count for which both criteria are decisive.
pub const DECISIVE_VERTICES: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error("witness vertices do not induce {0}")]
    MalformedWitness(String),
    #[error("a cycle of length {len} gives a surface of Euler characteristic {chi}, which is not hyperbolic")]
    NotHyperbolic { len: usize, chi: i64 },
}

pub type Result<T, E = ClassifyError> = std::result::Result<T, E>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "YES",
            Verdict::No => "NO",
            Verdict::Unknown => "UNKNOWN",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    /// Induced cycle of length at least five.
    Hole,
    /// Induced subgraph whose opposite is a cycle of length at least five.
    Antihole,
    /// Induced copy of a named pattern graph.
    Named(&'static str),
}

/// An induced subgraph certifying a `YES` verdict. For holes and antiholes
/// the vertices are listed in cycle order (of the graph or of its opposite);
/// for named patterns `vertices[i]` is the image of pattern vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Witness {
    pub kind: WitnessKind,
    pub vertices: Vec<usize>,
}

impl Witness {
    fn from_hole(kind: WitnessKind, hole: Hole) -> Self {
        Self { kind, vertices: hole.cycle }
    }

    /// `hole:a,b,c,d,e`, `antihole:…` or `<pattern>:…`.
    pub fn display(&self, g: &SimpleGraph) -> String {
        let tag = match self.kind {
            WitnessKind::Hole => "hole",
            WitnessKind::Antihole => "antihole",
            WitnessKind::Named(name) => name,
        };
        let labels: Vec<&str> = self.vertices.iter().map(|&v| g.label(v)).collect();
        format!("{tag}:{}", labels.join(","))
    }

    /// Check that the listed vertices really induce the claimed subgraph.
    pub fn validate(&self, g: &SimpleGraph) -> bool {
        let n = self.vertices.len();
        if self.vertices.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let set = self.vertices.iter().fold(0u64, |s, &v| s | 1 << v);
        if set.count_ones() as usize != n {
            return false;
        }
        let cyclic = |opp: bool| {
            n >= 5
                && (0..n).all(|i| {
                    (0..n).filter(|&j| j != i).all(|j| {
                        let consecutive = (i + 1) % n == j || (j + 1) % n == i;
                        g.adjacent(self.vertices[i], self.vertices[j]) == (consecutive != opp)
                    })
                })
        };
        match self.kind {
            WitnessKind::Hole => cyclic(false),
            WitnessKind::Antihole => cyclic(true),
            WitnessKind::Named(name) => match pattern(name) {
                Some(p) if p.n() == n => (0..n).all(|i| {
                    (0..n).all(|j| i == j || p.adjacent(i, j) == g.adjacent(self.vertices[i], self.vertices[j]))
                }),
                _ => false,
            },
        }
    }
}

/// Why a verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Coxeter criterion on at most seven vertices: not weakly chordal.
    WeakChordality,
    /// Artin criterion on at most seven vertices: one of the five patterns.
    Patterns,
    /// A sufficient witness on more than seven vertices.
    Sufficient,
    /// No witness and no applicable criterion.
    OutOfScope,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::WeakChordality => "weak-chordality criterion (at most 7 vertices)",
            Basis::Patterns => "five-pattern criterion (at most 7 vertices)",
            Basis::Sufficient => "induced witness (sufficient at any size)",
            Basis::OutOfScope => "no criterion beyond 7 vertices",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub basis: Basis,
    pub note: Option<&'static str>,
}

const FIG8_NOTE: &str =
    "known YES: the Coxeter group contains the Artin group of P6opp with index 64; beyond the seven-vertex criterion";

impl Classification {
    fn yes(witness: Witness, g: &SimpleGraph) -> Self {
        let basis = if g.n() <= DECISIVE_VERTICES { Basis::WeakChordality } else { Basis::Sufficient };
        Self { verdict: Verdict::Yes, witness: Some(witness), basis, note: None }
    }

    /// `YES <witness>`, `NO` or `UNKNOWN (<note>)`.
    pub fn summary(&self, g: &SimpleGraph) -> String {
        match (&self.witness, self.note) {
            (Some(w), _) => format!("{} {}", self.verdict, w.display(g)),
            (None, Some(note)) => format!("{} ({note})", self.verdict),
            (None, None) => self.verdict.to_string(),
        }
    }

    /// Witness column of the census: the witness or `-`.
    pub fn witness_field(&self, g: &SimpleGraph) -> String {
        self.witness.as_ref().map_or_else(|| "-".to_string(), |w| w.display(g))
    }
}

fn is_fig8(g: &SimpleGraph) -> bool {
    static FIG8: OnceLock<SimpleGraph> = OnceLock::new();
    g.n() == 12 && g.is_isomorphic(FIG8.get_or_init(catalog::fig8))
}

/// Does the right-angled Coxeter group over `g` contain a hyperbolic surface
/// group?
pub fn racg_surface_subgroup(g: &SimpleGraph) -> Classification {
    match g.weak_chordality() {
        WeakChordality::Hole(h) => Classification::yes(Witness::from_hole(WitnessKind::Hole, h), g),
        WeakChordality::Antihole(h) => Classification::yes(Witness::from_hole(WitnessKind::Antihole, h), g),
        WeakChordality::WeaklyChordal if g.n() <= DECISIVE_VERTICES => {
            Classification { verdict: Verdict::No, witness: None, basis: Basis::WeakChordality, note: None }
        }
        WeakChordality::WeaklyChordal => Classification {
            verdict: Verdict::Unknown,
            witness: None,
            basis: Basis::OutOfScope,
            note: is_fig8(g).then_some(FIG8_NOTE),
        },
    }
}

/// Pattern graphs of the Artin criterion besides long cycles, in the order
/// they are searched.
pub const RAAG_PATTERNS: [&str; 4] = ["C6opp", "P6opp", "P1_7", "P2_7"];

fn pattern(name: &str) -> Option<&'static SimpleGraph> {
    static PATTERNS: OnceLock<Vec<SimpleGraph>> = OnceLock::new();
    let all = PATTERNS.get_or_init(|| RAAG_PATTERNS.iter().map(|p| catalog::named(p).expect("catalog name")).collect());
    RAAG_PATTERNS.iter().position(|&p| p == name).map(|i| &all[i])
}

/// Does the right-angled Artin group over `g` contain a hyperbolic surface
/// group?
pub fn raag_surface_subgroup(g: &SimpleGraph) -> Classification {
    let basis = if g.n() <= DECISIVE_VERTICES { Basis::Patterns } else { Basis::Sufficient };
    if let Some(h) = g.find_hole(5).expect("valid length") {
        return Classification {
            verdict: Verdict::Yes,
            witness: Some(Witness::from_hole(WitnessKind::Hole, h)),
            basis,
            note: None,
        };
    }
    for name in RAAG_PATTERNS {
        let p = pattern(name).expect("listed pattern");
        if let Some(set) = g.find_induced(p) {
            let sub: Vec<usize> = members(set).collect();
            let iso = p.isomorphism(&g.induced(set)).expect("found as induced subgraph");
            let vertices = iso.map.iter().map(|&k| sub[k]).collect();
            let witness = Witness { kind: WitnessKind::Named(name), vertices };
            return Classification { verdict: Verdict::Yes, witness: Some(witness), basis, note: None };
        }
    }
    if g.n() <= DECISIVE_VERTICES {
        Classification { verdict: Verdict::No, witness: None, basis: Basis::Patterns, note: None }
    } else {
        Classification { verdict: Verdict::Unknown, witness: None, basis: Basis::OutOfScope, note: None }
    }
}

/// A finite certificate behind a hole or antihole witness.
#[derive(Debug, Clone)]
pub enum Certificate {
    /// `Z0` of the hole with all orders two: a closed surface whose Euler
    /// characteristic is negative.
    Surface { cycle: Vec<String>, complex: CubeComplex, chi: i64 },
    /// Co-contractions taking the antihole to a five-cycle (its own opposite),
    /// the composite embedding verified on relators, and the surface of that
    /// five-cycle.
    Chain { steps: Vec<(String, String)>, embedding: HomomorphismSpec, surface: Box<Certificate> },
}

impl Certificate {
    pub fn is_hyperbolic_surface(&self) -> bool {
        match self {
            Certificate::Surface { chi, .. } => *chi < 0,
            Certificate::Chain { embedding, surface, .. } => embedding.is_verified() && surface.is_hyperbolic_surface(),
        }
    }

    /// Human-readable certificate block.
    pub fn report(&self) -> String {
        match self {
            Certificate::Surface { cycle, chi, .. } => {
                format!("cycle {}\nsurface=yes chi={chi}\n", cycle.join(","))
            }
            Certificate::Chain { steps, embedding, surface } => {
                let mut out = String::new();
                for (x, t) in steps {
                    out.push_str(&format!("cocontract {x},{t}\n"));
                }
                let status = if embedding.is_verified() { "PASS" } else { "FAIL" };
                out.push_str(&format!("relators: {status}\n"));
                out.push_str(&surface.report());
                out
            }
        }
    }
}

fn surface_certificate(cycle_graph: &SimpleGraph, order: &[usize], exec: Execution) -> Result<Certificate> {
    let m = order.len();
    let spec = Arc::new(GroupSpec::racg(cycle_graph.clone()));
    let complex = build_z0(&spec, None)?;
    let chi = complex.euler_characteristic();
    if chi >= 0 {
        return Err(ClassifyError::NotHyperbolic { len: m, chi });
    }
    if !complex.is_closed_surface(exec)? {
        return Err(ClassifyError::MalformedWitness(format!("a cycle of length {m}")));
    }
    let cycle = order.iter().map(|&v| cycle_graph.label(v).to_string()).collect();
    Ok(Certificate::Surface { cycle, complex, chi })
}

/// Certify a hole or antihole witness.
///
/// A hole `C_m` gets the closed surface `Z0(C_m)` with all orders two, whose
/// Euler characteristic `2^(m−2)(4−m)` must be negative (so `m = 4` is
/// rejected). An antihole is co-contracted step by step down to five vertices,
/// the composite embedding is relator-checked and the resulting five-cycle is
/// certified as a hole.
pub fn witness_complex(g: &SimpleGraph, witness: &Witness, exec: Execution) -> Result<Certificate> {
    let set = witness.vertices.iter().fold(0u64, |s, &v| s | 1 << v);
    match witness.kind {
        WitnessKind::Hole => {
            let distinct = set.count_ones() as usize == witness.vertices.len();
            if !distinct || witness.vertices.iter().any(|&v| v >= g.n()) {
                return Err(ClassifyError::MalformedWitness("a cycle".into()));
            }
            let sub = g.induced(set);
            let hole =
                as_cycle(&sub, sub.vertex_set()).ok_or_else(|| ClassifyError::MalformedWitness("a cycle".into()))?;
            surface_certificate(&sub, &hole.cycle, exec)
        }
        WitnessKind::Antihole => {
            if !witness.validate(g) {
                return Err(ClassifyError::MalformedWitness("an anticycle of length at least five".into()));
            }
            let mut current = g.induced(set);
            let mut steps = Vec::new();
            let mut composite: Option<HomomorphismSpec> = None;
            while current.n() > 5 {
                let (x, t) = current.opposite().edges()[0];
                let (x, t) = (current.label(x).to_string(), current.label(t).to_string());
                let orders = vec![Order::Finite(2); current.n()];
                let step = co_contraction_embedding(&current, &x, &t, &orders, None, false)?;
                current = step.source().graph().clone();
                composite = Some(match composite {
                    None => step,
                    Some(outer) => step.then(&outer)?,
                });
                steps.push((x, t));
            }
            let mut embedding =
                composite.unwrap_or_else(|| HomomorphismSpec::identity(&Arc::new(GroupSpec::racg(current.clone()))));
            embedding.relator_check(exec);
            let hole = current.find_hole(5)?.ok_or_else(|| ClassifyError::MalformedWitness("a five-cycle".into()))?;
            let surface = surface_certificate(&current, &hole.cycle, exec)?;
            Ok(Certificate::Chain { steps, embedding, surface: Box::new(surface) })
        }
        WitnessKind::Named(name) => Err(ClassifyError::MalformedWitness(format!(
            "a hole or antihole (pattern {name} has no surface certificate)"
        ))),
    }
}

/// One census row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub graph: SimpleGraph,
    pub graph6: String,
    pub weakly_chordal: bool,
    pub racg: Classification,
    pub raag: Classification,
}

impl CensusRow {
    pub fn new(graph: SimpleGraph) -> Self {
        let racg = racg_surface_subgroup(&graph);
        let raag = raag_surface_subgroup(&graph);
        Self { graph6: graph.to_graph6(), weakly_chordal: racg.witness.is_none(), racg, raag, graph }
    }

    pub fn tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.graph6,
            self.graph.n(),
            self.weakly_chordal,
            self.racg.verdict,
            self.racg.witness_field(&self.graph),
            self.raag.verdict,
            self.raag.witness_field(&self.graph),
        )
    }
}

pub const CENSUS_HEADER: &str = "graph6\tn\tweakly_chordal\tracg\tracg_witness\traag\traag_witness";

/// Every isomorphism class on `n` vertices, in graph6 order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub n: usize,
    pub rows: Vec<CensusRow>,
}

impl Census {
    pub fn count(&self, pick: impl Fn(&CensusRow) -> bool) -> usize {
        self.rows.iter().filter(|r| pick(r)).count()
    }

    /// Header plus one line per row, each newline-terminated.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from(CENSUS_HEADER);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.tsv());
            out.push('\n');
        }
        out
    }

    /// Aggregate counts on one line.
    pub fn summary(&self) -> String {
        let yes = |f: fn(&CensusRow) -> Verdict| self.count(|r| f(r) == Verdict::Yes);
        format!(
            "n={} classes={} weakly_chordal={} racg_yes={} raag_yes={}",
            self.n,
            self.rows.len(),
            self.count(|r| r.weakly_chordal),
            yes(|r| r.racg.verdict),
            yes(|r| r.raag.verdict),
        )
    }
}

pub fn census(n: usize, exec: Execution) -> Result<Census> {
    let graphs = all_graphs(n, exec)?;
    let rows = exec.map(&graphs, |g| CensusRow::new(g.clone()));
    Ok(Census { n, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::named;

    #[test]
    fn named_verdicts() {
        let c5 = named("C5").unwrap();
        let v = racg_surface_subgroup(&c5);
        assert_eq!(v.summary(&c5), "YES hole:a,b,c,d,e");
        assert_eq!(racg_surface_subgroup(&named("P1_7").unwrap()).verdict, Verdict::No);
        let p1 = named("P1_7").unwrap();
        let raag = raag_surface_subgroup(&p1);
        assert_eq!(raag.verdict, Verdict::Yes);
        assert!(raag.witness.unwrap().validate(&p1));
        let fig8 = named("Fig8").unwrap();
        let v = racg_surface_subgroup(&fig8);
        assert_eq!(v.verdict, Verdict::Unknown);
        assert!(v.summary(&fig8).starts_with("UNKNOWN (known YES"));
        assert_eq!(raag_surface_subgroup(&fig8).verdict, Verdict::Yes);
    }

    #[test]
    fn certificates() {
        let c5 = named("C5").unwrap();
        let w = racg_surface_subgroup(&c5).witness.unwrap();
        let cert = witness_complex(&c5, &w, Execution::Sequential).unwrap();
        assert!(cert.is_hyperbolic_surface());
        assert_eq!(cert.report(), "cycle a,b,c,d,e\nsurface=yes chi=-8\n");

        let c4 = named("C4").unwrap();
        let square = Witness { kind: WitnessKind::Hole, vertices: vec![0, 1, 2, 3] };
        assert!(matches!(
            witness_complex(&c4, &square, Execution::Sequential),
            Err(ClassifyError::NotHyperbolic { len: 4, chi: 0 })
        ));
        let bogus = Witness { kind: WitnessKind::Hole, vertices: vec![0, 1, 2] };
        assert!(witness_complex(&named("P3").unwrap(), &bogus, Execution::Sequential).is_err());

        let c7opp = named("C7opp").unwrap();
        let w = racg_surface_subgroup(&c7opp).witness.unwrap();
        assert_eq!(w.kind, WitnessKind::Antihole);
        let cert = witness_complex(&c7opp, &w, Execution::Sequential).unwrap();
        assert!(cert.is_hyperbolic_surface());
        let report = cert.report();
        assert_eq!(report.lines().filter(|l| l.starts_with("cocontract")).count(), 2);
        assert!(report.contains("relators: PASS\n") && report.ends_with("surface=yes chi=-8\n"));
    }
}
