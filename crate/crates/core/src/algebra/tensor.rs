//! The tensor algebra on a generator set, used as the equality oracle for
//! Lie elements.

use std::collections::BTreeMap;
use std::ops::{Add, Sub};
use std::sync::Arc;

use super::basis::BasisKey;
use super::element::LieElement;
use crate::error::{Error, Result};
use crate::generators::{Gen, GeneratorSet};
use crate::scalar::Scalar;

/// A finitely supported combination of words.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorElement<C> {
    terms: BTreeMap<Vec<Gen>, C>,
}

impl<C: Scalar> TensorElement<C> {
    pub fn zero() -> Self {
        TensorElement { terms: BTreeMap::new() }
    }

    pub fn word(word: Vec<Gen>) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(word, C::one());
        TensorElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Gen>, C> {
        &self.terms
    }

    pub fn coefficient(&self, word: &[Gen]) -> C {
        self.terms.get(word).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, word: Vec<Gen>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(mut self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        for v in self.terms.values_mut() {
            *v = v.clone() * c.clone();
        }
        self
    }

    /// Concatenation product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, a.clone() * b.clone());
            }
        }
        out
    }

    /// Recovers the Lie element with this expansion by repeatedly peeling off
    /// the smallest word: a Lyndon word `w` is the leading word of `P_w` with
    /// coefficient 1, and `uu` is the leading word of `[P_u, P_u]` with
    /// coefficient 2. Fails if the smallest remaining word is neither.
    pub fn to_lie(&self, set: &Arc<GeneratorSet>) -> Result<LieElement<C>> {
        let mut rest = self.clone();
        let mut out = LieElement::zero(set);
        let two = C::from_int(2);
        while let Some((word, c)) = rest.leading() {
            let key = BasisKey::from_word(set, &word).ok_or_else(|| {
                Error::NotALieElement(word.iter().map(|&g| set.name(g)).collect::<Vec<_>>().join(" "))
            })?;
            let c = if key.is_square() { c / two.clone() } else { c };
            let piece = LieElement::basis(set, key).scale(&c);
            rest = rest - piece.tensor_expand();
            out += piece;
        }
        Ok(out)
    }

    /// Smallest word, ordered by length then lexicographically.
    fn leading(&self) -> Option<(Vec<Gen>, C)> {
        self.terms
            .iter()
            .min_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(b.0)))
            .map(|(w, c)| (w.clone(), c.clone()))
    }
}

impl<C: Scalar> Add for TensorElement<C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (w, c) in rhs.terms {
            self.add_term(w, c);
        }
        self
    }
}

impl<C: Scalar> Sub for TensorElement<C> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        for (w, c) in rhs.terms {
            self.add_term(w, -c);
        }
        self
    }
}

/// Integer expansion of one basis element.
pub(crate) fn expand_key(set: &GeneratorSet, key: &BasisKey) -> Vec<(Vec<Gen>, i64)> {
    match key.children(set) {
        None => vec![(key.word().to_vec(), 1)],
        Some((l, r)) => {
            let a = expand_key(set, &l);
            let b = if l == r { a.clone() } else { expand_key(set, &r) };
            let sign = crate::scalar::koszul(l.degree(set), r.degree(set));
            let mut acc: BTreeMap<Vec<Gen>, i64> = BTreeMap::new();
            for (u, x) in &a {
                for (v, y) in &b {
                    let mut w = u.clone();
                    w.extend_from_slice(v);
                    *acc.entry(w).or_default() += x * y;
                    let mut w = v.clone();
                    w.extend_from_slice(u);
                    *acc.entry(w).or_default() -= sign * x * y;
                }
            }
            acc.into_iter().filter(|(_, c)| *c != 0).collect()
        }
    }
}
