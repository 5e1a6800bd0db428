//! The free graded magma: planar binary trees, not quotiented by anything.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};
use std::sync::Arc;

use crate::algebra::{BracketTree, LieElement};
use crate::error::{Error, Result};
use crate::generators::{Gen, GeneratorSet};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MagmaTree {
    Leaf(Gen),
    Node(Arc<MagmaTree>, Arc<MagmaTree>),
}

impl MagmaTree {
    pub fn node(left: MagmaTree, right: MagmaTree) -> Self {
        MagmaTree::Node(Arc::new(left), Arc::new(right))
    }

    pub fn degree(&self, set: &GeneratorSet) -> u32 {
        match self {
            MagmaTree::Leaf(g) => set.degree(*g),
            MagmaTree::Node(l, r) => l.degree(set) + r.degree(set),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            MagmaTree::Leaf(_) => 1,
            MagmaTree::Node(l, r) => l.len() + r.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn leaves(&self, out: &mut BTreeSet<Gen>) {
        match self {
            MagmaTree::Leaf(g) => {
                out.insert(*g);
            }
            MagmaTree::Node(l, r) => {
                l.leaves(out);
                r.leaves(out);
            }
        }
    }

    pub fn from_bracket_tree(t: &BracketTree) -> Self {
        match t {
            BracketTree::Leaf(g) => MagmaTree::Leaf(*g),
            BracketTree::Node(l, r) => {
                MagmaTree::node(Self::from_bracket_tree(l), Self::from_bracket_tree(r))
            }
        }
    }

    pub fn to_bracket_tree(&self) -> BracketTree {
        match self {
            MagmaTree::Leaf(g) => BracketTree::Leaf(*g),
            MagmaTree::Node(l, r) => BracketTree::node(l.to_bracket_tree(), r.to_bracket_tree()),
        }
    }

    pub fn map_leaves(&self, f: &impl Fn(Gen) -> Gen) -> Self {
        match self {
            MagmaTree::Leaf(g) => MagmaTree::Leaf(f(*g)),
            MagmaTree::Node(l, r) => MagmaTree::node(l.map_leaves(f), r.map_leaves(f)),
        }
    }

    pub fn display<'a>(&'a self, set: &'a GeneratorSet) -> impl fmt::Display + 'a {
        TreeDisplay { tree: self, set, top: true }
    }
}

struct TreeDisplay<'a> {
    tree: &'a MagmaTree,
    set: &'a GeneratorSet,
    top: bool,
}

impl fmt::Display for TreeDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tree {
            MagmaTree::Leaf(g) => f.write_str(self.set.name(*g)),
            MagmaTree::Node(l, r) => {
                let inner = |t| TreeDisplay { tree: t, set: self.set, top: false };
                if self.top {
                    write!(f, "{}*{}", inner(l), inner(r))
                } else {
                    write!(f, "({}*{})", inner(l), inner(r))
                }
            }
        }
    }
}

/// A linear combination of magma trees.
#[derive(Clone)]
pub struct MagmaElement<C> {
    set: Arc<GeneratorSet>,
    terms: BTreeMap<MagmaTree, C>,
}

impl<C: Scalar> MagmaElement<C> {
    pub fn zero(set: &Arc<GeneratorSet>) -> Self {
        MagmaElement { set: set.clone(), terms: BTreeMap::new() }
    }

    pub fn tree(set: &Arc<GeneratorSet>, tree: MagmaTree) -> Self {
        let mut out = Self::zero(set);
        out.add_term(tree, C::one());
        out
    }

    pub fn leaf(set: &Arc<GeneratorSet>, g: Gen) -> Self {
        Self::tree(set, MagmaTree::Leaf(g))
    }

    pub fn named(set: &Arc<GeneratorSet>, name: &str) -> Result<Self> {
        Ok(Self::leaf(set, set.require(name)?))
    }

    pub fn set(&self) -> &Arc<GeneratorSet> {
        &self.set
    }

    pub fn terms(&self) -> &BTreeMap<MagmaTree, C> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MagmaTree, &C)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, tree: MagmaTree, c: C) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(tree).or_insert_with(C::zero);
        *e = e.clone() + c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(&self.set);
        for (t, v) in &self.terms {
            out.add_term(t.clone(), v.clone() * c.clone());
        }
        out
    }

    /// The magma product. Panics on mismatched sets; see [`MagmaElement::try_mul`].
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("product of magma elements over different generator sets")
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if !self.set.same_as(&other.set) {
            return Err(Error::MismatchedSets);
        }
        let mut out = Self::zero(&self.set);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(MagmaTree::node(a.clone(), b.clone()), x.clone() * y.clone());
            }
        }
        Ok(out)
    }

    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|t| t.degree(&self.set));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn homogeneous_components(&self) -> BTreeMap<u32, Self> {
        let mut out: BTreeMap<u32, Self> = BTreeMap::new();
        for (t, c) in &self.terms {
            out.entry(t.degree(&self.set))
                .or_insert_with(|| Self::zero(&self.set))
                .add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn letters(&self) -> BTreeSet<Gen> {
        let mut out = BTreeSet::new();
        for t in self.terms.keys() {
            t.leaves(&mut out);
        }
        out
    }

    /// Projection to the free Lie algebra.
    pub fn underline(&self) -> LieElement<C> {
        let mut out = LieElement::zero(&self.set);
        for (t, c) in &self.terms {
            out += t.to_bracket_tree().evaluate::<C>(&self.set).scale(c);
        }
        out
    }

    /// The canonical lift: each basis element becomes its bracket tree.
    pub fn lift(x: &LieElement<C>) -> Self {
        let set = x.set();
        let mut out = Self::zero(set);
        for (k, c) in x.iter() {
            out.add_term(MagmaTree::from_bracket_tree(&k.tree(set)), c.clone());
        }
        out
    }

    /// `J(A,B,C) = A(BC) - (AB)C - (-1)^{|A||B|} B(AC)`, extended over
    /// homogeneous components of `A` and `B`.
    pub fn jacobiator(a: &Self, b: &Self, c: &Self) -> Self {
        let mut out = Self::zero(&a.set);
        for (da, ai) in a.homogeneous_components() {
            for (db, bi) in b.homogeneous_components() {
                let sign = C::sign((da * db) as i64);
                out += ai.mul(&bi.mul(c)) - ai.mul(&bi).mul(c) - bi.mul(&ai.mul(c)).scale(&sign);
            }
        }
        out
    }

    /// Moves the element to another generator set by renaming leaves.
    pub fn transport(&self, target: &Arc<GeneratorSet>, rename: impl Fn(Gen) -> Gen) -> Self {
        let mut out = Self::zero(target);
        for (t, c) in &self.terms {
            out.add_term(t.map_leaves(&rename), c.clone());
        }
        out
    }
}

impl<C: Scalar> PartialEq for MagmaElement<C> {
    fn eq(&self, other: &Self) -> bool {
        self.set.same_as(&other.set) && self.terms == other.terms
    }
}

impl<C: Scalar> AddAssign for MagmaElement<C> {
    fn add_assign(&mut self, rhs: Self) {
        assert!(self.set.same_as(&rhs.set), "sum of magma elements over different generator sets");
        for (t, c) in rhs.terms {
            self.add_term(t, c);
        }
    }
}

impl<C: Scalar> Add for MagmaElement<C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<C: Scalar> Sub for MagmaElement<C> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self += -rhs;
        self
    }
}

impl<C: Scalar> Neg for MagmaElement<C> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(&-C::one())
    }
}

impl<C: Scalar> fmt::Display for MagmaElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let compound = matches!(t, MagmaTree::Node(..));
            match (abs.is_one(), compound) {
                (true, _) => write!(f, "{}", t.display(&self.set))?,
                (false, false) => write!(f, "{abs}*{}", t.display(&self.set))?,
                (false, true) => write!(f, "{abs}*({})", t.display(&self.set))?,
            }
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Debug for MagmaElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MagmaElement({self})")
    }
}
