//! Homomorphisms between graph products given by generator images, the
//! maps induced by doubles and co-contractions, and finite checks of them.
//!
//! File format:
//!
//! ```text
//! source
//! n 2 a b
//! o a 2
//! o b 2
//! target
//! n 2 x y
//! o x 2
//! o y 2
//! im a x
//! im b y x y
//! ```

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::graphs::{GraphError, SimpleGraph};
use crate::par::Execution;
use crate::words::{enumerate_elements_capped, GroupSpec, NormalForm, Order, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("expected {expected} generator images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("generator image is not a word over the target spec")]
    ForeignImage,
    #[error("no image given for `{0}`")]
    MissingImage(String),
    #[error("the co-contracted vertex has order {x_order} but the merged vertex was given order {y_order}")]
    OrderMismatch { x_order: Order, y_order: Order },
    #[error("expected {expected} orders, got {got}")]
    OrderCount { expected: usize, got: usize },
    #[error("the target of the first map is not the source of the second")]
    NotComposable,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = EmbeddingError> = std::result::Result<T, E>;

/// A homomorphism `GP(source) → GP(target)` determined by generator images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomomorphismSpec {
    source: Arc<GroupSpec>,
    target: Arc<GroupSpec>,
    images: Vec<NormalForm>,
    verified: bool,
}

/// A defining relator of the source group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relator {
    /// `v^m` for a vertex of finite order `m`.
    Power { vertex: usize, order: u32 },
    /// `[u, w]` for an edge `{u, w}`.
    Commutator { u: usize, w: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelatorReport {
    pub checked: usize,
    /// Relators whose image is nontrivial, in relator order.
    pub failures: Vec<Relator>,
}

impl RelatorReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InjectivityReport {
    pub radius: u64,
    pub sampled: usize,
    /// First pair of distinct source elements with equal images.
    pub collision: Option<(NormalForm, NormalForm)>,
}

impl InjectivityReport {
    pub fn passed(&self) -> bool {
        self.collision.is_none()
    }
}

impl HomomorphismSpec {
    pub fn new(source: Arc<GroupSpec>, target: Arc<GroupSpec>, images: Vec<Word>) -> Result<Self> {
        if images.len() != source.n() {
            return Err(EmbeddingError::ImageCount { expected: source.n(), got: images.len() });
        }
        if images.iter().any(|w| !(Arc::ptr_eq(w.spec(), &target) || **w.spec() == *target)) {
            return Err(EmbeddingError::ForeignImage);
        }
        let images = images.iter().map(Word::normalize).collect();
        Ok(Self { source, target, images, verified: false })
    }

    pub fn identity(spec: &Arc<GroupSpec>) -> Self {
        let images = (0..spec.n()).map(|v| Word::generator(spec, v).expect("in range").normalize()).collect();
        Self { source: spec.clone(), target: spec.clone(), images, verified: false }
    }

    pub fn source(&self) -> &Arc<GroupSpec> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GroupSpec> {
        &self.target
    }

    pub fn images(&self) -> &[NormalForm] {
        &self.images
    }

    pub fn image(&self, v: usize) -> &NormalForm {
        &self.images[v]
    }

    /// Set once [`HomomorphismSpec::relator_check`] has passed.
    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// Image of a source word, in normal form.
    pub fn apply(&self, w: &Word) -> Result<NormalForm> {
        if !(Arc::ptr_eq(w.spec(), &self.source) || **w.spec() == *self.source) {
            return Err(WordError::SpecMismatch.into());
        }
        let mut acc = NormalForm::identity(&self.target);
        for s in w.syllables() {
            acc = acc.multiply(&self.images[s.vertex].pow(&s.exp))?;
        }
        Ok(acc)
    }

    /// Every defining relator of the source, powers first, then commutators
    /// in edge order.
    pub fn relators(&self) -> Vec<Relator> {
        let mut out: Vec<Relator> = (0..self.source.n())
            .filter_map(|v| match self.source.order(v) {
                Order::Finite(m) => Some(Relator::Power { vertex: v, order: m }),
                Order::Infinite => None,
            })
            .collect();
        out.extend(self.source.graph().edges().into_iter().map(|(u, w)| Relator::Commutator { u, w }));
        out
    }

    fn relator_image(&self, r: Relator) -> NormalForm {
        let mul = |a: &NormalForm, b: &NormalForm| a.multiply(b).expect("same target");
        match r {
            Relator::Power { vertex, order } => self.images[vertex].power(order as i64),
            Relator::Commutator { u, w } => {
                let (a, b) = (&self.images[u], &self.images[w]);
                mul(&mul(&mul(a, b), &a.invert()), &b.invert())
            }
        }
    }

    /// Check that every source relator maps to the identity. Marks the map
    /// verified when all pass.
    pub fn relator_check(&mut self, exec: Execution) -> RelatorReport {
        let relators = self.relators();
        let trivial = exec.map(&relators, |&r| self.relator_image(r).is_identity());
        let failures: Vec<Relator> = relators.iter().zip(trivial).filter(|(_, ok)| !ok).map(|(&r, _)| r).collect();
        self.verified = failures.is_empty();
        RelatorReport { checked: relators.len(), failures }
    }

    /// Compare images of all source elements of length at most `radius`.
    pub fn injectivity_sample(&self, radius: u64, cap: usize, exec: Execution) -> Result<InjectivityReport> {
        let ball = enumerate_elements_capped(&self.source, radius, cap)?;
        let images = exec.map(&ball, |w| self.apply(w).expect("ball lies in the source"));
        let mut seen: HashMap<&NormalForm, usize> = HashMap::with_capacity(ball.len());
        for (k, img) in images.iter().enumerate() {
            if let Some(&first) = seen.get(img) {
                let collision = Some((ball[first].clone(), ball[k].clone()));
                return Ok(InjectivityReport { radius, sampled: ball.len(), collision });
            }
            seen.insert(img, k);
        }
        Ok(InjectivityReport { radius, sampled: ball.len(), collision: None })
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &HomomorphismSpec) -> Result<HomomorphismSpec> {
        if *self.target != *next.source {
            return Err(EmbeddingError::NotComposable);
        }
        let images = self
            .images
            .iter()
            .map(|w| {
                next.apply(&Word::from_raw(next.source.clone(), w.syllables().to_vec())).map(NormalForm::into_word)
            })
            .collect::<Result<Vec<_>>>()?;
        HomomorphismSpec::new(self.source.clone(), next.target.clone(), images)
    }

    pub fn relator_line(report: &RelatorReport, source: &GroupSpec) -> String {
        if report.passed() {
            return "relators: PASS".into();
        }
        let label = |v: usize| source.graph().label(v).to_string();
        let items: Vec<String> = report
            .failures
            .iter()
            .map(|r| match *r {
                Relator::Power { vertex, order } => format!("{}^{order}", label(vertex)),
                Relator::Commutator { u, w } => format!("[{},{}]", label(u), label(w)),
            })
            .collect();
        format!("relators: FAIL[{}]", items.join(" "))
    }

    pub fn injectivity_line(report: &InjectivityReport) -> String {
        match &report.collision {
            None => format!("injectivity(L={}): PASS", report.radius),
            Some((u, v)) => format!("injectivity(L={}): FAIL({u},{v})", report.radius),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        #[derive(PartialEq)]
        enum Section {
            None,
            Source,
            Target,
        }
        let mut section = Section::None;
        let (mut src, mut tgt) = (String::new(), String::new());
        let mut ims: Vec<(usize, String, String)> = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            match line.split_whitespace().next() {
                Some("source") => section = Section::Source,
                Some("target") => section = Section::Target,
                Some("im") => {
                    let rest = line["im".len()..].trim();
                    let (v, w) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                    if v.is_empty() {
                        return Err(EmbeddingError::Parse { line: no + 1, msg: "`im` needs a vertex".into() });
                    }
                    ims.push((no + 1, v.to_string(), w.trim().to_string()));
                }
                _ => {
                    // keep line numbers meaningful inside each section
                    let buf = match section {
                        Section::Source => &mut src,
                        Section::Target => &mut tgt,
                        Section::None if line.is_empty() => continue,
                        Section::None => {
                            return Err(EmbeddingError::Parse { line: no + 1, msg: "expected `source`".into() })
                        }
                    };
                    buf.push_str(line);
                    buf.push('\n');
                }
            }
        }
        let source = Arc::new(GroupSpec::parse(&src)?);
        let target = Arc::new(GroupSpec::parse(&tgt)?);
        let mut images: Vec<Option<Word>> = vec![None; source.n()];
        for (line, v, w) in ims {
            let i = source.graph().index_of(&v)?;
            let word = Word::parse(&target, &w)?;
            if images[i].replace(word).is_some() {
                return Err(EmbeddingError::Parse { line, msg: format!("repeated image for `{v}`") });
            }
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, w)| w.ok_or_else(|| EmbeddingError::MissingImage(source.graph().label(i).to_string())))
            .collect::<Result<Vec<_>>>()?;
        HomomorphismSpec::new(source, target, images)
    }
}

impl fmt::Display for HomomorphismSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "source")?;
        write!(f, "{}", self.source)?;
        writeln!(f, "target")?;
        write!(f, "{}", self.target)?;
        for (v, img) in self.images.iter().enumerate() {
            writeln!(f, "im {} {img}", self.source.graph().label(v))?;
        }
        Ok(())
    }
}

fn conjugate(target: &Arc<GroupSpec>, t: usize, x: usize, mirror: bool) -> Word {
    let e = if mirror { -1 } else { 1 };
    Word::from_pairs(target, [(t, e), (x, 1), (t, -e)]).expect("vertices in range")
}

fn check_orders(g: &SimpleGraph, orders: &[Order]) -> Result<()> {
    if orders.len() != g.n() {
        return Err(EmbeddingError::OrderCount { expected: g.n(), got: orders.len() });
    }
    Ok(())
}

/// Map from the group over the double of `g` along the link of `t` into the
/// group over `g`: first-copy vertices map to themselves, second-copy
/// vertices `u'` to `t u t⁻¹` (`t⁻¹ u t` with `mirror`).
pub fn double_homomorphism(g: &SimpleGraph, t: &str, orders: &[Order], mirror: bool) -> Result<HomomorphismSpec> {
    check_orders(g, orders)?;
    let d = g.double_along_link(t)?;
    let ti = g.index_of(t)?;
    let target = Arc::new(GroupSpec::new(g.clone(), orders.to_vec())?);
    let source_orders = d.retraction.iter().map(|&u| orders[u]).collect();
    let source = Arc::new(GroupSpec::new(d.graph.clone(), source_orders)?);
    let first = d.first_copy();
    let images = d
        .retraction
        .iter()
        .enumerate()
        .map(|(pos, &u)| {
            if first >> pos & 1 == 1 {
                Word::generator(&target, u).map_err(Into::into)
            } else {
                Ok(conjugate(&target, ti, u, mirror))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    HomomorphismSpec::new(source, target, images)
}

/// Map from the group over the co-contraction of `g` along the opposite
/// edge `{x, t}` into the group over `g`: the merged vertex `y` (order of
/// `x`) maps to `t x t⁻¹` (`t⁻¹ x t` with `mirror`), everything else to
/// itself. `y_order`, when given, must equal the order of `x`.
pub fn co_contraction_embedding(
    g: &SimpleGraph,
    x: &str,
    t: &str,
    orders: &[Order],
    y_order: Option<Order>,
    mirror: bool,
) -> Result<HomomorphismSpec> {
    check_orders(g, orders)?;
    let source_graph = g.co_contract(x, t)?;
    let (xi, ti) = (g.index_of(x)?, g.index_of(t)?);
    if let Some(y) = y_order.filter(|&y| y != orders[xi]) {
        return Err(EmbeddingError::OrderMismatch { x_order: orders[xi], y_order: y });
    }
    let target = Arc::new(GroupSpec::new(g.clone(), orders.to_vec())?);
    let (keep, drop) = (xi.min(ti), xi.max(ti));
    // source vertex k is original vertex k, skipping `drop`; `keep` is y
    let original = |k: usize| if k < drop { k } else { k + 1 };
    let source_orders =
        (0..source_graph.n()).map(|k| if original(k) == keep { orders[xi] } else { orders[original(k)] }).collect();
    let source = Arc::new(GroupSpec::new(source_graph, source_orders)?);
    let images = (0..source.n())
        .map(|k| {
            if original(k) == keep {
                Ok(conjugate(&target, ti, xi, mirror))
            } else {
                Word::generator(&target, original(k)).map_err(Into::into)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    HomomorphismSpec::new(source, target, images)
}
