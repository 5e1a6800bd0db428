//! Elements of a free graded Lie algebra in canonical form.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use super::basis::{bracket_keys, BasisKey};
use super::tensor::{expand_key, TensorElement};
use crate::error::{Error, Result};
use crate::generators::{Gen, GeneratorSet};
use crate::scalar::Scalar;

/// A linear combination of basis elements with nonzero coefficients.
#[derive(Clone)]
pub struct LieElement<C> {
    set: Arc<GeneratorSet>,
    terms: BTreeMap<BasisKey, C>,
}

impl<C: Scalar> LieElement<C> {
    pub fn zero(set: &Arc<GeneratorSet>) -> Self {
        LieElement { set: set.clone(), terms: BTreeMap::new() }
    }

    pub fn generator(set: &Arc<GeneratorSet>, g: Gen) -> Self {
        Self::basis(set, BasisKey::letter(set, g))
    }

    pub fn named(set: &Arc<GeneratorSet>, name: &str) -> Result<Self> {
        Ok(Self::generator(set, set.require(name)?))
    }

    pub fn basis(set: &Arc<GeneratorSet>, key: BasisKey) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(key, C::one());
        LieElement { set: set.clone(), terms }
    }

    pub fn set(&self) -> &Arc<GeneratorSet> {
        &self.set
    }

    pub fn terms(&self) -> &BTreeMap<BasisKey, C> {
        &self.terms
    }

    pub fn coefficient(&self, key: &BasisKey) -> C {
        self.terms.get(key).cloned().unwrap_or_else(C::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// No stored terms. Since stored terms are canonical this agrees with
    /// [`LieElement::is_zero`], which is the independent check.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Zero test through the tensor-algebra embedding.
    pub fn is_zero(&self) -> bool {
        self.tensor_expand().is_zero()
    }

    /// Equality through the tensor-algebra embedding.
    pub fn equals(&self, other: &Self) -> bool {
        self.set.same_as(&other.set) && (self.clone() - other.clone()).is_zero()
    }

    pub fn add_term(&mut self, key: BasisKey, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.set);
        }
        let terms = self.terms.iter().map(|(k, v)| (k.clone(), v.clone() * c.clone())).collect();
        LieElement { set: self.set.clone(), terms }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&C::from_int(n))
    }

    /// The Lie bracket. Panics if the operands live over different sets; see
    /// [`LieElement::try_bracket`].
    pub fn bracket(&self, other: &Self) -> Self {
        self.try_bracket(other).expect("bracket of elements over different generator sets")
    }

    pub fn try_bracket(&self, other: &Self) -> Result<Self> {
        self.bracket_truncated(other, None)
    }

    /// Bracket that drops every product of total degree above `max_degree`.
    pub fn bracket_truncated(&self, other: &Self, max_degree: Option<u32>) -> Result<Self> {
        if !self.set.same_as(&other.set) {
            return Err(Error::MismatchedSets);
        }
        let mut out = Self::zero(&self.set);
        for (kx, cx) in &self.terms {
            let dx = kx.degree(&self.set);
            for (ky, cy) in &other.terms {
                if max_degree.is_some_and(|m| dx + ky.degree(&self.set) > m) {
                    continue;
                }
                let prod = cx.clone() * cy.clone();
                for (k, s) in bracket_keys(&self.set, kx, ky).iter() {
                    out.add_term(k.clone(), prod.clone() * C::from_int(*s));
                }
            }
        }
        Ok(out)
    }

    /// Common degree of all terms; `None` for zero or inhomogeneous elements.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|k| k.degree(&self.set));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_empty() || self.homogeneous_degree().is_some()
    }

    /// Degree of a homogeneous element; `Ok(None)` for zero.
    pub fn degree(&self) -> Result<Option<u32>> {
        if self.is_empty() {
            return Ok(None);
        }
        self.homogeneous_degree().map(Some).ok_or(Error::Inhomogeneous)
    }

    pub fn homogeneous_components(&self) -> BTreeMap<u32, Self> {
        let mut out: BTreeMap<u32, Self> = BTreeMap::new();
        for (k, c) in &self.terms {
            out.entry(k.degree(&self.set))
                .or_insert_with(|| Self::zero(&self.set))
                .terms
                .insert(k.clone(), c.clone());
        }
        out
    }

    /// Smallest bracket length among the terms.
    pub fn min_bracket_length(&self) -> Option<usize> {
        self.terms.keys().map(|k| k.len()).min()
    }

    /// Generators occurring in some term.
    pub fn letters(&self) -> BTreeSet<Gen> {
        self.terms.keys().flat_map(|k| k.word().iter().copied()).collect()
    }

    /// Extends `image` on generators to a Lie algebra morphism into `target`.
    pub fn map_generators<F>(&self, target: &Arc<GeneratorSet>, mut image: F) -> LieElement<C>
    where
        F: FnMut(Gen) -> LieElement<C>,
    {
        let mut memo: HashMap<BasisKey, LieElement<C>> = HashMap::new();
        let mut out = LieElement::zero(target);
        for (k, c) in &self.terms {
            out += map_key(&self.set, k, &mut image, &mut memo).scale(c);
        }
        out
    }

    /// Moves the element to another generator set by renaming generators.
    pub fn transport(&self, target: &Arc<GeneratorSet>, rename: impl Fn(Gen) -> Gen) -> Self {
        self.map_generators(target, |g| LieElement::generator(target, rename(g)))
    }

    pub fn tensor_expand(&self) -> TensorElement<C> {
        let mut out = TensorElement::zero();
        for (k, c) in &self.terms {
            for (w, n) in expand_key(&self.set, k) {
                out.add_term(w, c.clone() * C::from_int(n));
            }
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisKey, &C)> {
        self.terms.iter()
    }

    /// Keeps only the terms satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&BasisKey) -> bool) -> Self {
        let terms = self.terms.iter().filter(|(k, _)| keep(k)).map(|(k, c)| (k.clone(), c.clone()));
        LieElement { set: self.set.clone(), terms: terms.collect() }
    }
}

fn map_key<C: Scalar, F>(
    set: &GeneratorSet,
    key: &BasisKey,
    image: &mut F,
    memo: &mut HashMap<BasisKey, LieElement<C>>,
) -> LieElement<C>
where
    F: FnMut(Gen) -> LieElement<C>,
{
    if let Some(hit) = memo.get(key) {
        return hit.clone();
    }
    let value = match key.children(set) {
        None => image(key.word()[0]),
        Some((l, r)) => {
            let a = map_key(set, &l, image, memo);
            let b = if l == r { a.clone() } else { map_key(set, &r, image, memo) };
            a.bracket(&b)
        }
    };
    memo.insert(key.clone(), value.clone());
    value
}

impl<C: Scalar> PartialEq for LieElement<C> {
    fn eq(&self, other: &Self) -> bool {
        self.set.same_as(&other.set) && self.terms == other.terms
    }
}

impl<C: Scalar> AddAssign for LieElement<C> {
    fn add_assign(&mut self, rhs: Self) {
        assert!(self.set.same_as(&rhs.set), "sum of elements over different generator sets");
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
    }
}

impl<C: Scalar> SubAssign for LieElement<C> {
    fn sub_assign(&mut self, rhs: Self) {
        assert!(self.set.same_as(&rhs.set), "difference of elements over different generator sets");
        for (k, c) in rhs.terms {
            self.add_term(k, -c);
        }
    }
}

impl<C: Scalar> Add for LieElement<C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<C: Scalar> Sub for LieElement<C> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= rhs;
        self
    }
}

impl<C: Scalar> Neg for LieElement<C> {
    type Output = Self;
    fn neg(mut self) -> Self {
        for v in self.terms.values_mut() {
            *v = -v.clone();
        }
        self
    }
}

impl<C: Scalar> fmt::Display for LieElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "{}", k.display(&self.set))?;
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Debug for LieElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieElement({self})")
    }
}
