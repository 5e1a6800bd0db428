//! Raw, unnormalized bracket expressions.

use std::fmt;
use std::sync::Arc;

use super::element::LieElement;
use super::tensor::TensorElement;
use crate::error::Result;
use crate::generators::{Gen, GeneratorSet};
use crate::scalar::Scalar;

/// A planar binary bracket tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BracketTree {
    Leaf(Gen),
    Node(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    pub fn node(left: BracketTree, right: BracketTree) -> Self {
        BracketTree::Node(Box::new(left), Box::new(right))
    }

    pub fn degree(&self, set: &GeneratorSet) -> u32 {
        match self {
            BracketTree::Leaf(g) => set.degree(*g),
            BracketTree::Node(l, r) => l.degree(set) + r.degree(set),
        }
    }

    /// Number of leaves.
    pub fn len(&self) -> usize {
        match self {
            BracketTree::Leaf(_) => 1,
            BracketTree::Node(l, r) => l.len() + r.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn leaves(&self, out: &mut Vec<Gen>) {
        match self {
            BracketTree::Leaf(g) => out.push(*g),
            BracketTree::Node(l, r) => {
                l.leaves(out);
                r.leaves(out);
            }
        }
    }

    /// Evaluates the tree in the free Lie algebra.
    pub fn evaluate<C: Scalar>(&self, set: &Arc<GeneratorSet>) -> LieElement<C> {
        match self {
            BracketTree::Leaf(g) => LieElement::generator(set, *g),
            BracketTree::Node(l, r) => l.evaluate(set).bracket(&r.evaluate(set)),
        }
    }

    /// Tensor expansion computed directly from the tree, bypassing the basis.
    pub fn expand<C: Scalar>(&self, set: &GeneratorSet) -> TensorElement<C> {
        match self {
            BracketTree::Leaf(g) => TensorElement::word(vec![*g]),
            BracketTree::Node(l, r) => {
                let (a, b) = (l.expand::<C>(set), r.expand::<C>(set));
                let sign = C::sign((l.degree(set) * r.degree(set)) as i64);
                a.mul(&b) - b.mul(&a).scale(&sign)
            }
        }
    }

    pub fn display<'a>(&'a self, set: &'a GeneratorSet) -> impl fmt::Display + 'a {
        TreeDisplay { tree: self, set }
    }
}

struct TreeDisplay<'a> {
    tree: &'a BracketTree,
    set: &'a GeneratorSet,
}

impl fmt::Display for TreeDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tree {
            BracketTree::Leaf(g) => f.write_str(self.set.name(*g)),
            BracketTree::Node(l, r) => {
                write!(f, "[{},{}]", l.display(self.set), r.display(self.set))
            }
        }
    }
}

/// A linear combination of bracket trees, not reduced in any way.
#[derive(Clone, Debug)]
pub struct LieExpr<C> {
    pub set: Arc<GeneratorSet>,
    pub terms: Vec<(C, BracketTree)>,
}

impl<C: Scalar> LieExpr<C> {
    pub fn new(set: &Arc<GeneratorSet>) -> Self {
        LieExpr { set: set.clone(), terms: Vec::new() }
    }

    pub fn push(&mut self, c: C, tree: BracketTree) {
        self.terms.push((c, tree));
    }

    /// Canonical form by rewriting into the Lyndon basis.
    pub fn normalize(&self) -> LieElement<C> {
        let mut out = LieElement::zero(&self.set);
        for (c, t) in &self.terms {
            out += t.evaluate::<C>(&self.set).scale(c);
        }
        out
    }

    /// Canonical form by tensor expansion followed by leading-word peeling;
    /// an independent route to the same answer as [`LieExpr::normalize`].
    pub fn normalize_by_peeling(&self) -> Result<LieElement<C>> {
        self.expand().to_lie(&self.set)
    }

    pub fn expand(&self) -> TensorElement<C> {
        let mut out = TensorElement::zero();
        for (c, t) in &self.terms {
            out = out + t.expand::<C>(&self.set).scale(c);
        }
        out
    }
}
