use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use super::word::Word;
use crate::error::Result;
use crate::qscalar::Ring;

/// A finite scalar-weighted sum of words. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct NCPoly<S> {
    terms: BTreeMap<Word, S>,
}

impl<S> Default for NCPoly<S> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<S: Ring> NCPoly<S> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(Word::empty(), c)
    }

    pub fn monomial(w: Word, c: S) -> Self {
        let mut out = Self::zero();
        out.add_term(w, c);
        out
    }

    pub fn word(w: Word) -> Self {
        Self::monomial(w, S::one())
    }

    pub fn gen(g: usize, e: i32) -> Self {
        Self::word(Word::gen(g, e))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, S)>) -> Self {
        let mut out = Self::zero();
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &S)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, S)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &Word) -> Option<&S> {
        self.terms.get(w)
    }

    pub fn add_term(&mut self, w: Word, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub(crate) fn pop_first(&mut self) -> Option<(Word, S)> {
        self.terms.pop_first()
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, x)| (w.clone(), x.mul(c))))
    }

    /// The unnormalized product: words are concatenated.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, x) in &self.terms {
            for (v, y) in &other.terms {
                out.add_term(u.concat(v), x.mul(y));
            }
        }
        out
    }

    /// The value as a scalar, if it has no word other than the empty one.
    pub fn as_scalar(&self) -> Option<S> {
        match self.terms.len() {
            0 => Some(S::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    /// Whether every coefficient is negligible relative to `scale`.
    pub fn negligible(&self, scale: f64) -> bool {
        self.terms.values().all(|c| c.negligible(scale))
    }

    pub fn magnitude(&self) -> f64 {
        self.terms.values().map(|c| c.magnitude()).fold(0.0, f64::max)
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&S) -> Result<T>) -> Result<NCPoly<T>> {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Renames generators word-by-word.
    pub fn map_words(&self, f: impl Fn(&Word) -> Word) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (f(w), c.clone())))
    }

    pub fn is_normal(&self) -> bool {
        self.terms.keys().all(Word::is_ordered)
    }
}

impl<S: Ring> Add for &NCPoly<S> {
    type Output = NCPoly<S>;
    fn add(self, rhs: &NCPoly<S>) -> NCPoly<S> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl<S: Ring> Sub for &NCPoly<S> {
    type Output = NCPoly<S>;
    fn sub(self, rhs: &NCPoly<S>) -> NCPoly<S> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.neg());
        }
        out
    }
}

impl<S: Ring> Neg for &NCPoly<S> {
    type Output = NCPoly<S>;
    fn neg(self) -> NCPoly<S> {
        NCPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect() }
    }
}

impl<S: Ring> Add for NCPoly<S> {
    type Output = NCPoly<S>;
    fn add(self, rhs: NCPoly<S>) -> NCPoly<S> {
        &self + &rhs
    }
}

impl<S: Ring> Sub for NCPoly<S> {
    type Output = NCPoly<S>;
    fn sub(self, rhs: NCPoly<S>) -> NCPoly<S> {
        &self - &rhs
    }
}

impl<S: std::fmt::Debug> std::fmt::Debug for NCPoly<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({c:?}){w:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
