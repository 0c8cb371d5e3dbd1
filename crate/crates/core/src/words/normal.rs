use std::collections::HashSet;
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use super::{reduce_syllable, GroupSpec, Order, Result, Syllable, Word, WordError};
use crate::graphs::VertexSet;

/// A word in canonical form. Two words represent the same element exactly
/// when their normal forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm(Word);

impl Deref for NormalForm {
    type Target = Word;

    fn deref(&self) -> &Word {
        &self.0
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Left-to-right insertion: each syllable slides left past commuting
/// syllables and merges with the first same-vertex syllable it meets.
fn reduce(spec: &GroupSpec, input: &[Syllable]) -> Vec<Syllable> {
    let mut out: Vec<Syllable> = Vec::with_capacity(input.len());
    for s in input {
        let mut merged = false;
        for k in (0..out.len()).rev() {
            let t = &out[k];
            if t.vertex == s.vertex {
                match reduce_syllable(spec, s.vertex, &t.exp + &s.exp) {
                    Some(m) => out[k] = m,
                    None => {
                        out.remove(k);
                    }
                }
                merged = true;
                break;
            }
            if !spec.commute(t.vertex, s.vertex) {
                break;
            }
        }
        if !merged {
            out.push(s.clone());
        }
    }
    out
}

/// The lexicographically least shuffle of a reduced word: repeatedly emit
/// the smallest-vertex syllable that commutes with everything before it.
fn lex_least(spec: &GroupSpec, mut rest: Vec<Syllable>) -> Vec<Syllable> {
    let graph = spec.graph();
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut seen: VertexSet = 0;
        let mut best: Option<usize> = None;
        for (k, s) in rest.iter().enumerate() {
            let v = s.vertex;
            let free = seen & !graph.neighbors(v) == 0 && seen & (1 << v) == 0;
            if free && best.is_none_or(|b| v < rest[b].vertex) {
                best = Some(k);
            }
            seen |= 1 << v;
        }
        out.push(rest.remove(best.expect("some syllable is always free")));
    }
    out
}

impl Word {
    pub fn normalize(&self) -> NormalForm {
        let spec = self.spec();
        let reduced = reduce(spec, self.syllables());
        NormalForm(Word::from_raw(spec.clone(), lex_least(spec, reduced)))
    }

    /// Membership in the kernel of the projection onto the direct product
    /// of all vertex groups.
    pub fn in_kp0(&self) -> bool {
        self.normalize().kernel_condition(false)
    }

    /// Membership in the kernel of the projections to the finite-order
    /// vertex groups.
    pub fn in_kpf(&self) -> bool {
        self.normalize().kernel_condition(true)
    }
}

impl NormalForm {
    pub fn identity(spec: &Arc<GroupSpec>) -> Self {
        Self(Word::identity(spec))
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn multiply(&self, other: &NormalForm) -> Result<NormalForm> {
        Ok(self.0.concat(&other.0)?.normalize())
    }

    pub fn invert(&self) -> NormalForm {
        self.0.inverse_word().normalize()
    }

    /// `self^e` by repeated squaring; negative powers invert first.
    pub fn power(&self, e: i64) -> NormalForm {
        let mut base = if e < 0 { self.invert() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = NormalForm::identity(self.spec());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.multiply(&base).expect("same spec");
            }
            base = base.multiply(&base).expect("same spec");
            e >>= 1;
        }
        acc
    }

    /// `self^e` for an arbitrary-precision exponent.
    pub fn pow(&self, e: &super::Exponent) -> NormalForm {
        if let Some(small) = e.checked_i64() {
            return self.power(small);
        }
        let big = e.to_big();
        let mut base = if e.is_negative() { self.invert() } else { self.clone() };
        let mut acc = NormalForm::identity(self.spec());
        for bit in 0..big.bits() {
            if big.magnitude().bit(bit) {
                acc = acc.multiply(&base).expect("same spec");
            }
            base = base.multiply(&base).expect("same spec");
        }
        acc
    }

    /// Per-vertex products of the syllable exponents are trivial, for every
    /// vertex or only for the finite-order ones.
    pub fn kernel_condition(&self, finite_only: bool) -> bool {
        let spec = self.spec();
        (0..spec.n()).filter(|&v| !finite_only || spec.order(v).is_finite()).all(|v| {
            let sum =
                self.syllables().iter().filter(|s| s.vertex == v).fold(super::Exponent::ZERO, |acc, s| &acc + &s.exp);
            match spec.order(v) {
                Order::Finite(m) => sum.rem_euclid(m) == 0,
                Order::Infinite => sum.is_zero(),
            }
        })
    }

    /// Syntactic check of reducedness: nonzero exponents, no equal
    /// neighbours, and a non-commuting syllable between any two syllables of
    /// the same vertex.
    pub fn is_reduced(&self) -> bool {
        is_reduced(self.spec(), self.syllables())
    }

    /// Whether the vertex sequence is lexicographically least among the
    /// commutation shuffles of the word.
    pub fn is_canonical(&self) -> bool {
        lex_least(self.spec(), self.syllables().to_vec()) == self.syllables()
    }

    /// Conjugate away syllables that can be moved to both ends. Returns
    /// `(w', c)` with `self = c w' c⁻¹` and `w'` cyclically reduced.
    pub fn cyclically_reduce(&self) -> (NormalForm, NormalForm) {
        let spec = self.spec().clone();
        let mut w = self.clone();
        let mut conj = NormalForm::identity(&spec);
        while let Some(k) = strippable(&spec, w.syllables()) {
            let s = w.syllables()[k].clone();
            let c = Word::from_raw(spec.clone(), vec![s]).normalize();
            // w = c · (w with syllable k removed), so c⁻¹ w c is shorter.
            w = c.invert().multiply(&w).and_then(|x| x.multiply(&c)).expect("same spec");
            conj = conj.multiply(&c).expect("same spec");
        }
        (w, conj)
    }
}

pub(crate) fn is_reduced(spec: &GroupSpec, syllables: &[Syllable]) -> bool {
    for (i, s) in syllables.iter().enumerate() {
        if s.exp.is_zero() {
            return false;
        }
        if let Order::Finite(m) = spec.order(s.vertex) {
            if s.exp.is_negative() || s.exp >= super::Exponent::from(m as i64) {
                return false;
            }
        }
        if i + 1 < syllables.len() && syllables[i + 1].vertex == s.vertex {
            return false;
        }
        for (j, t) in syllables.iter().enumerate().skip(i + 1) {
            if t.vertex == s.vertex {
                if syllables[i + 1..j].iter().all(|u| spec.commute(u.vertex, s.vertex)) {
                    return false;
                }
                break;
            }
        }
    }
    true
}

/// A syllable that can be shuffled to the front while a different syllable
/// of the same vertex can be shuffled to the back.
fn strippable(spec: &GroupSpec, syl: &[Syllable]) -> Option<usize> {
    let front = |k: usize| syl[..k].iter().all(|t| spec.commute(t.vertex, syl[k].vertex));
    let back = |k: usize| syl[k + 1..].iter().all(|t| spec.commute(t.vertex, syl[k].vertex));
    (0..syl.len())
        .filter(|&i| front(i))
        .find(|&i| (0..syl.len()).any(|j| j != i && syl[j].vertex == syl[i].vertex && back(j)))
}

/// Every element of word length at most `max_len`, once each, sorted by
/// length and then by syllables.
pub fn enumerate_elements(spec: &Arc<GroupSpec>, max_len: u64) -> Vec<NormalForm> {
    enumerate_elements_capped(spec, max_len, usize::MAX).expect("uncapped")
}

/// As [`enumerate_elements`], failing once more than `cap` elements appear.
pub fn enumerate_elements_capped(spec: &Arc<GroupSpec>, max_len: u64, cap: usize) -> Result<Vec<NormalForm>> {
    let mut gens = Vec::new();
    for v in 0..spec.n() {
        for e in [1i64, -1] {
            let g = Word::from_pairs(spec, [(v, e)])?.normalize();
            if !gens.contains(&g) {
                gens.push(g);
            }
        }
    }
    let mut seen: HashSet<NormalForm> = HashSet::new();
    let identity = NormalForm::identity(spec);
    seen.insert(identity.clone());
    let mut all = vec![identity.clone()];
    let mut frontier = vec![identity];
    for len in 1..=max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for g in &gens {
                let x = w.multiply(g)?;
                if x.length() == len && seen.insert(x.clone()) {
                    next.push(x);
                }
            }
        }
        if seen.len() > cap {
            return Err(WordError::BallTooLarge { cap });
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.syllables().cmp(b.syllables())));
    Ok(all)
}
