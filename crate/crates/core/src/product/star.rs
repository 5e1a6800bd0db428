//! The star operator `𝕄(V) ⊗ 𝕃(W) → 𝕃(V ⊕ W ⊕ s(V⊗W))`.

use std::collections::HashMap;

use super::ProductGenerators;
use crate::algebra::LieElement;
use crate::error::{Error, Result};
use crate::magma::{MagmaElement, MagmaTree};
use crate::scalar::Scalar;

impl<C: Scalar> ProductGenerators<C> {
    /// `A ⋆ T`, with `a ⋆ T = 0` on leaves and
    /// `AB ⋆ T = (-1)^{|A|} σ_A σ_B (T) + (-1)^{|B||T|} [A ⋆ T, B] + [A, B ⋆ T]`
    /// (underlines implied). Bilinear; inhomogeneous `T` is split into
    /// components.
    pub fn star(&self, a: &MagmaElement<C>, t: &LieElement<C>) -> Result<LieElement<C>> {
        if !a.set().same_as(self.set()) || !t.set().same_as(self.set()) {
            return Err(Error::MismatchedSets);
        }
        if let Some(g) = a.letters().into_iter().find(|&g| !self.is_left(g)) {
            return Err(Error::OutsideDomain(format!(
                "star needs a magma element over V, found {}",
                self.set().name(g)
            )));
        }
        if let Some(g) = t.letters().into_iter().find(|&g| !self.is_right(g)) {
            return Err(Error::OutsideDomain(format!(
                "star needs a Lie element over W, found {}",
                self.set().name(g)
            )));
        }
        let mut out = LieElement::zero(self.set());
        for (dt, part) in t.homogeneous_components() {
            let mut ctx = StarContext { gens: self, t: &part, dt, memo: HashMap::new(), under: HashMap::new() };
            for (tree, c) in a.iter() {
                out += ctx.star(tree)?.scale(c);
            }
        }
        Ok(out)
    }
}

struct StarContext<'a, C> {
    gens: &'a ProductGenerators<C>,
    t: &'a LieElement<C>,
    dt: u32,
    memo: HashMap<MagmaTree, LieElement<C>>,
    under: HashMap<MagmaTree, LieElement<C>>,
}

impl<C: Scalar> StarContext<'_, C> {
    fn underline(&mut self, tree: &MagmaTree) -> LieElement<C> {
        if let Some(hit) = self.under.get(tree) {
            return hit.clone();
        }
        let value = match tree {
            MagmaTree::Leaf(g) => LieElement::generator(self.gens.set(), *g),
            MagmaTree::Node(l, r) => self.underline(l).bracket(&self.underline(r)),
        };
        self.under.insert(tree.clone(), value.clone());
        value
    }

    fn star(&mut self, tree: &MagmaTree) -> Result<LieElement<C>> {
        if let Some(hit) = self.memo.get(tree) {
            return Ok(hit.clone());
        }
        let set = self.gens.set().clone();
        let value = match tree {
            MagmaTree::Leaf(_) => LieElement::zero(&set),
            MagmaTree::Node(l, r) => {
                let da = l.degree(&set) as i64;
                let db = r.degree(&set) as i64;
                let ua = self.underline(l);
                let ub = self.underline(r);
                let inner = self.gens.sigma_of(&ub)?.apply(self.t);
                let first = self.gens.sigma_of(&ua)?.apply(&inner).scale(&C::sign(da));
                let second = self.star(l)?.bracket(&ub).scale(&C::sign(db * self.dt as i64));
                let third = ua.bracket(&self.star(r)?);
                first + second + third
            }
        };
        self.memo.insert(tree.clone(), value.clone());
        Ok(value)
    }
}
