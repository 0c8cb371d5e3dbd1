//! Elements of graph products of cyclic groups.
//!
//! A [`Word`] is a sequence of syllables `v^e` over a shared [`GroupSpec`].
//! [`Word::normalize`] produces the canonical [`NormalForm`]: a reduced word
//! (no trivial syllables, no syllable that can be shuffled next to another
//! of the same vertex) whose vertex sequence is lexicographically least
//! among its commutation shuffles.

mod exponent;
mod normal;
mod spec;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

use crate::graphs::GraphError;

pub use exponent::Exponent;
pub use normal::{enumerate_elements, enumerate_elements_capped, NormalForm};
pub use spec::{GroupSpec, Order};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("invalid order `{0}` (expected an integer ≥ 2 or `inf`)")]
    BadOrder(String),
    #[error("no order given for vertex `{0}`")]
    MissingOrder(String),
    #[error("expected {expected} orders, got {got}")]
    OrderCount { expected: usize, got: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid syllable `{0}`")]
    BadSyllable(String),
    #[error("words belong to different group specs")]
    SpecMismatch,
    #[error("more than {cap} elements in the ball")]
    BallTooLarge { cap: usize },
}

pub type Result<T, E = WordError> = std::result::Result<T, E>;

/// A power `v^e` of a vertex generator, with `e ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub vertex: usize,
    pub exp: Exponent,
}

/// A word in the vertex generators of a graph product.
#[derive(Debug, Clone)]
pub struct Word {
    spec: Arc<GroupSpec>,
    syllables: Vec<Syllable>,
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.syllables == other.syllables && self.same_spec(other)
    }
}

impl Eq for Word {}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.syllables.hash(state);
    }
}

impl Word {
    pub fn identity(spec: &Arc<GroupSpec>) -> Self {
        Self { spec: spec.clone(), syllables: Vec::new() }
    }

    /// Assemble a word from `(vertex, exponent)` pairs. Exponents of
    /// finite-order vertices are reduced; trivial syllables are dropped.
    /// Adjacent syllables are kept apart, so the result need not be reduced.
    pub fn from_pairs<E: Into<Exponent>>(
        spec: &Arc<GroupSpec>,
        pairs: impl IntoIterator<Item = (usize, E)>,
    ) -> Result<Self> {
        let mut syllables = Vec::new();
        for (vertex, exp) in pairs {
            if vertex >= spec.n() {
                return Err(WordError::UnknownVertex(vertex.to_string()));
            }
            if let Some(s) = reduce_syllable(spec, vertex, exp.into()) {
                syllables.push(s);
            }
        }
        Ok(Self { spec: spec.clone(), syllables })
    }

    /// Generator `v` (exponent 1).
    pub fn generator(spec: &Arc<GroupSpec>, v: usize) -> Result<Self> {
        Self::from_pairs(spec, [(v, 1i64)])
    }

    /// Parse whitespace-separated syllables `v` or `v^e`; an empty string or
    /// `1` is the identity.
    pub fn parse(spec: &Arc<GroupSpec>, text: &str) -> Result<Self> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let graph = spec.graph();
        if tokens == ["1"] && graph.index_of("1").is_err() {
            return Ok(Self::identity(spec));
        }
        let mut pairs = Vec::with_capacity(tokens.len());
        for tok in tokens {
            let (name, exp) = match tok.split_once('^') {
                Some((name, e)) => {
                    let exp: Exponent = e.parse().map_err(|_| WordError::BadSyllable(tok.to_string()))?;
                    (name, exp)
                }
                None => (tok, Exponent::ONE),
            };
            let v = graph.index_of(name).map_err(|_| WordError::UnknownVertex(name.to_string()))?;
            pairs.push((v, exp));
        }
        Self::from_pairs(spec, pairs)
    }

    pub(crate) fn from_raw(spec: Arc<GroupSpec>, syllables: Vec<Syllable>) -> Self {
        Self { spec, syllables }
    }

    pub fn spec(&self) -> &Arc<GroupSpec> {
        &self.spec
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn same_spec(&self, other: &Word) -> bool {
        Arc::ptr_eq(&self.spec, &other.spec) || self.spec == other.spec
    }

    /// Word length: `|e|` per infinite-order syllable and `min(e, m−e)` per
    /// finite-order one.
    pub fn length(&self) -> u64 {
        self.syllables.iter().map(|s| syllable_length(&self.spec, s)).fold(0u64, u64::saturating_add)
    }

    /// Concatenation, without reducing.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        if !self.same_spec(other) {
            return Err(WordError::SpecMismatch);
        }
        let mut syllables = self.syllables.clone();
        syllables.extend_from_slice(&other.syllables);
        Ok(Self { spec: self.spec.clone(), syllables })
    }

    /// Formal inverse: reversed, with negated exponents.
    pub fn inverse_word(&self) -> Word {
        let syllables = self
            .syllables
            .iter()
            .rev()
            .map(|s| reduce_syllable(&self.spec, s.vertex, -&s.exp).expect("nonzero stays nonzero"))
            .collect();
        Self { spec: self.spec.clone(), syllables }
    }

    /// Image of the word under the projection to the group at `v`: the sum
    /// of its `v`-exponents, reduced mod `m_v` when finite.
    pub fn project(&self, v: usize) -> Exponent {
        let sum = self.syllables.iter().filter(|s| s.vertex == v).fold(Exponent::ZERO, |acc, s| &acc + &s.exp);
        match self.spec.order(v) {
            Order::Finite(m) => Exponent::from(sum.rem_euclid(m) as i64),
            Order::Infinite => sum,
        }
    }

    pub fn project_label(&self, v: &str) -> Result<Exponent> {
        let i = self.spec.graph().index_of(v).map_err(|_| WordError::UnknownVertex(v.to_string()))?;
        Ok(self.project(i))
    }

    /// Residues of the projections to the finite-order vertices, in vertex
    /// order: the coset of the word modulo `KPf`.
    pub fn finite_projection(&self) -> Vec<u32> {
        crate::graphs::members(self.spec.finite_part())
            .map(|v| match self.spec.order(v) {
                Order::Finite(m) => self.project(v).rem_euclid(m),
                Order::Infinite => unreachable!(),
            })
            .collect()
    }

    /// Whether `self` and `other` represent the same element.
    pub fn equal(&self, other: &Word) -> Result<bool> {
        Ok(self.inverse_word().concat(other)?.normalize().is_identity())
    }
}

pub(crate) fn reduce_syllable(spec: &GroupSpec, vertex: usize, exp: Exponent) -> Option<Syllable> {
    let exp = match spec.order(vertex) {
        Order::Finite(m) => Exponent::from(exp.rem_euclid(m) as i64),
        Order::Infinite => exp,
    };
    (!exp.is_zero()).then_some(Syllable { vertex, exp })
}

pub(crate) fn syllable_length(spec: &GroupSpec, s: &Syllable) -> u64 {
    match spec.order(s.vertex) {
        Order::Finite(m) => {
            let e = s.exp.rem_euclid(m) as u64;
            e.min(m as u64 - e)
        }
        Order::Infinite => s.exp.magnitude(),
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (k, s) in self.syllables.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.spec.graph().label(s.vertex))?;
            if s.exp != Exponent::ONE {
                write!(f, "^{}", s.exp)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::catalog;

    fn fig() -> Arc<GroupSpec> {
        Arc::new(GroupSpec::parse("n 3 a b c\ne a b\ne b c\no a 3\no b inf\no c 4\n").unwrap())
    }

    #[test]
    fn parse_and_display() {
        let spec = fig();
        let w = Word::parse(&spec, "a b^-2 c^5 a^3 c^-1").unwrap();
        assert_eq!(w.to_string(), "a b^-2 c c^3");
        assert_eq!(w.length(), 1 + 2 + 1 + 1);
        assert_eq!(Word::parse(&spec, "").unwrap().to_string(), "1");
        assert!(Word::parse(&spec, "1").unwrap().is_identity());
        assert!(matches!(Word::parse(&spec, "z"), Err(WordError::UnknownVertex(_))));
        assert!(matches!(Word::parse(&spec, "a^x"), Err(WordError::BadSyllable(_))));
        let big = Word::parse(&spec, "b^123456789012345678901234567890").unwrap();
        assert_eq!(big.to_string(), "b^123456789012345678901234567890");
    }

    #[test]
    fn projections() {
        let spec = fig();
        let w = Word::parse(&spec, "a b a^2").unwrap();
        assert_eq!(w.project(0), Exponent::ZERO);
        assert_eq!(w.project_label("b").unwrap(), Exponent::ONE);
        assert!(w.project_label("q").is_err());
        assert_eq!(Word::identity(&spec).project(2), Exponent::ZERO);
        let c4 = Arc::new(GroupSpec::racg(catalog::cycle(4).unwrap()));
        let w = Word::parse(&c4, "a b a b").unwrap();
        assert_eq!(w.project(0), Exponent::ZERO);
    }

    #[test]
    fn mismatched_specs() {
        let a = fig();
        let b = Arc::new(GroupSpec::raag(catalog::path(3).unwrap()));
        let u = Word::parse(&a, "a").unwrap();
        let v = Word::parse(&b, "a").unwrap();
        assert_eq!(u.concat(&v), Err(WordError::SpecMismatch));
        let a2 = Arc::new((*a).clone());
        assert!(u.concat(&Word::parse(&a2, "b").unwrap()).is_ok());
    }
}
