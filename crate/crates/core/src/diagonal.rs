//! The diagonal `Δ: (𝕃(V), ∂) → (𝕃(V ⊕ V' ⊕ s(V⊗V')), D)` of a 2-cone.

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::LieElement;
use crate::dgl::DglPresentation;
use crate::error::{Error, Result};
use crate::generators::{Gen, GeneratorSet};
use crate::magma::{MagmaElement, MagmaTree};
use crate::product::{build_product_model, ProductModel};
use crate::scalar::Scalar;

pub struct DiagonalModel<C> {
    base: DglPresentation<C>,
    copy: DglPresentation<C>,
    product: ProductModel<C>,
    /// Base generator index → product generator of the copy.
    prime: Vec<Gen>,
    /// Base generator index → product generator of the original.
    embed: Vec<Gen>,
    delta: Vec<LieElement<C>>,
}

/// Diagonal model with the copy named by appending a prime.
pub fn build_diagonal<C: Scalar>(x: &DglPresentation<C>) -> Result<DiagonalModel<C>> {
    build_diagonal_with(x, |n| format!("{n}'"))
}

/// Diagonal model with the copy's generator names chosen by `rename`.
pub fn build_diagonal_with<C: Scalar>(
    x: &DglPresentation<C>,
    rename: impl Fn(&str) -> String,
) -> Result<DiagonalModel<C>> {
    let copy = x.renamed(format!("{}'", x.label()), &rename)?;
    let product = build_product_model(x, &copy)?;
    let gens = product.gens();
    let base_set = x.set();
    let embed: Vec<Gen> = base_set.gens().map(|g| gens.left_gens()[g.index()]).collect();
    let prime: Vec<Gen> = base_set
        .gens()
        .map(|g| {
            let j = copy.set().require(&rename(base_set.name(g)))?;
            Ok(gens.right_gens()[j.index()])
        })
        .collect::<Result<_>>()?;
    let mut model = DiagonalModel {
        base: x.clone(),
        copy,
        product,
        prime,
        embed,
        delta: Vec::new(),
    };
    let mut delta = Vec::with_capacity(base_set.len());
    for g in base_set.gens() {
        let mut value = model.linear(g);
        let dg = x.d(g);
        if !dg.is_empty() {
            value += model.gamma(&MagmaElement::lift(dg))?;
        }
        delta.push(value);
    }
    model.delta = delta;
    let failures = model.chain_map_failures();
    if !failures.is_empty() {
        let names: Vec<_> = failures.iter().map(|&g| base_set.name(g).to_string()).collect();
        return Err(Error::Verification(format!("diagonal is not a chain map on {names:?}")));
    }
    Ok(model)
}

impl<C: Scalar> DiagonalModel<C> {
    pub fn base(&self) -> &DglPresentation<C> {
        &self.base
    }

    pub fn copy(&self) -> &DglPresentation<C> {
        &self.copy
    }

    pub fn product(&self) -> &ProductModel<C> {
        &self.product
    }

    pub fn set(&self) -> &Arc<GeneratorSet> {
        self.product.set()
    }

    /// `Δ(g)` for a base generator.
    pub fn delta(&self, g: Gen) -> &LieElement<C> {
        &self.delta[g.index()]
    }

    pub fn delta_named(&self, name: &str) -> Result<&LieElement<C>> {
        Ok(self.delta(self.base.set().require(name)?))
    }

    /// `v + v'`.
    fn linear(&self, g: Gen) -> LieElement<C> {
        LieElement::generator(self.set(), self.embed[g.index()])
            + LieElement::generator(self.set(), self.prime[g.index()])
    }

    /// Base element included as the left factor.
    pub fn embed(&self, x: &LieElement<C>) -> LieElement<C> {
        x.transport(self.set(), |g| self.embed[g.index()])
    }

    /// Base element included as the copy.
    pub fn primed(&self, x: &LieElement<C>) -> LieElement<C> {
        x.transport(self.set(), |g| self.prime[g.index()])
    }

    /// `Δ` extended to a Lie morphism.
    pub fn apply_delta(&self, x: &LieElement<C>) -> LieElement<C> {
        x.map_generators(self.set(), |g| self.delta[g.index()].clone())
    }

    fn stage_zero(&self, x: &MagmaElement<C>) -> Result<()> {
        if !x.set().same_as(self.base.set()) {
            return Err(Error::MismatchedSets);
        }
        match x.letters().into_iter().find(|&g| !self.base.d(g).is_empty()) {
            Some(g) => Err(Error::OutsideDomain(format!(
                "Γ is defined on cycles only, but d({}) ≠ 0",
                self.base.set().name(g)
            ))),
            None => Ok(()),
        }
    }

    /// The Γ operator on magma elements over the cycles `V_0` of the base.
    pub fn gamma(&self, a: &MagmaElement<C>) -> Result<LieElement<C>> {
        self.stage_zero(a)?;
        let mut ctx = GammaContext { model: self, gamma: HashMap::new(), under: HashMap::new() };
        let mut out = LieElement::zero(self.set());
        for (t, c) in a.iter() {
            out += ctx.gamma(t)?.scale(c);
        }
        Ok(out)
    }

    /// `(D Γ A, Δ A - A - A')`, which agree.
    pub fn gamma_boundary_check(
        &self,
        a: &MagmaElement<C>,
    ) -> Result<(LieElement<C>, LieElement<C>)> {
        let lhs = self.product.apply(&self.gamma(a)?);
        let ua = a.underline();
        let rhs = self.apply_delta(&ua) - self.embed(&ua) - self.primed(&ua);
        Ok((lhs, rhs))
    }

    /// The explicit element whose boundary is `Γ J(A, B, C)`, for
    /// homogeneous `A`, `B`, `C`.
    pub fn gamma_jacobiator_witness(
        &self,
        a: &MagmaElement<C>,
        b: &MagmaElement<C>,
        c: &MagmaElement<C>,
    ) -> Result<LieElement<C>> {
        for x in [a, b, c] {
            self.stage_zero(x)?;
        }
        let deg = |x: &MagmaElement<C>| x.homogeneous_degree().map(|d| d as i64).ok_or(Error::Inhomogeneous);
        let (da, db, dc) = (deg(a)?, deg(b)?, deg(c)?);
        let gens = self.product.gens();
        let (ua, ub, uc) = (self.embed(&a.underline()), self.embed(&b.underline()), self.embed(&c.underline()));
        let prime = |x: &MagmaElement<C>| self.primed(&x.underline());
        let (pa, pb, pc) = (prime(a), prime(b), prime(c));
        let (ga, gb, gc) = (self.gamma(a)?, self.gamma(b)?, self.gamma(c)?);
        let d = |x: &LieElement<C>| self.product.apply(x);
        let (dga, dgb, dgc) = (d(&ga), d(&gb), d(&gc));
        let sigma = |x: &LieElement<C>, y: &LieElement<C>| gens.apply_sigma(x, y);
        let sign = |e: i64| C::sign(e);
        let half = C::from_fraction(1, 2);
        let sixth = C::from_fraction(1, 6);

        // σ_X(Y') - (-1)^{|X||Y|} σ_Y(X') - 1/6 (-1)^{|X|} [DΓX, ΓY] - 1/6 [ΓX, DΓY]
        let inner = |ux: &LieElement<C>,
                     px: &LieElement<C>,
                     gx: &LieElement<C>,
                     dgx: &LieElement<C>,
                     dx: i64,
                     uy: &LieElement<C>,
                     py: &LieElement<C>,
                     gy: &LieElement<C>,
                     dgy: &LieElement<C>,
                     dy: i64|
         -> Result<LieElement<C>> {
            Ok(sigma(ux, py)? - sigma(uy, px)?.scale(&sign(dx * dy))
                - dgx.bracket(gy).scale(&(sixth.clone() * sign(dx)))
                - gx.bracket(dgy).scale(&sixth))
        };

        let mut out = sigma(&ua, &sigma(&ub, &pc)?)?.scale(&sign(da));
        out -= sigma(&ua, &sigma(&uc, &pb)?)?.scale(&sign(da + db * dc));
        out += sigma(&ub, &sigma(&uc, &pa)?)?.scale(&sign(da * db + da * dc + db));
        let bc = inner(&ub, &pb, &gb, &dgb, db, &uc, &pc, &gc, &dgc, dc)?;
        out += ga.bracket(&bc).scale(&(half.clone() * sign(da)));
        let ab = inner(&ua, &pa, &ga, &dga, da, &ub, &pb, &gb, &dgb, db)?;
        out += ab.bracket(&gc).scale(&(half.clone() * sign(da + db)));
        let ac = inner(&ua, &pa, &ga, &dga, da, &uc, &pc, &gc, &dgc, dc)?;
        out -= gb.bracket(&ac).scale(&(half * sign(da * db + db)));
        Ok(out)
    }

    /// Base generators where `D Δ(g) ≠ Δ(∂g)`.
    pub fn chain_map_failures(&self) -> Vec<Gen> {
        self.base
            .set()
            .gens()
            .filter(|&g| !self.product.apply(self.delta(g)).equals(&self.apply_delta(self.base.d(g))))
            .collect()
    }

    /// Both projections of `Δ` are identities.
    pub fn projection_identities(&self) -> bool {
        let gens = self.product.gens();
        self.base.set().gens().all(|g| {
            let left = gens.project_left(self.delta(g));
            let right = gens.project_right(self.delta(g));
            let prime = gens.project_right(&LieElement::generator(self.set(), self.prime[g.index()]));
            left == LieElement::generator(self.base.set(), g) && right == prime
        })
    }
}

struct GammaContext<'a, C> {
    model: &'a DiagonalModel<C>,
    gamma: HashMap<MagmaTree, LieElement<C>>,
    under: HashMap<MagmaTree, LieElement<C>>,
}

impl<C: Scalar> GammaContext<'_, C> {
    /// Underline of a base tree, included as the left factor.
    fn underline(&mut self, tree: &MagmaTree) -> LieElement<C> {
        if let Some(hit) = self.under.get(tree) {
            return hit.clone();
        }
        let value = match tree {
            MagmaTree::Leaf(g) => LieElement::generator(self.model.set(), self.model.embed[g.index()]),
            MagmaTree::Node(l, r) => self.underline(l).bracket(&self.underline(r)),
        };
        self.under.insert(tree.clone(), value.clone());
        value
    }

    fn prime(&self, x: &LieElement<C>) -> LieElement<C> {
        let m = self.model;
        let gens = m.product.gens();
        x.map_generators(m.set(), |g| {
            let i = gens.left_gens().iter().position(|&h| h == g).expect("left generator");
            LieElement::generator(m.set(), m.prime[i])
        })
    }

    /// `ΔX + X + X'` for `X` over the cycles, i.e. `2(X + X')` on letters.
    fn delta_plus(&self, x: &LieElement<C>) -> LieElement<C> {
        let m = self.model;
        let gens = m.product.gens();
        let delta = x.map_generators(m.set(), |g| {
            let i = gens.left_gens().iter().position(|&h| h == g).expect("left generator");
            LieElement::generator(m.set(), g) + LieElement::generator(m.set(), m.prime[i])
        });
        delta + x.clone() + self.prime(x)
    }

    fn gamma(&mut self, tree: &MagmaTree) -> Result<LieElement<C>> {
        if let Some(hit) = self.gamma.get(tree) {
            return Ok(hit.clone());
        }
        let set = self.model.set().clone();
        let value = match tree {
            MagmaTree::Leaf(_) => LieElement::zero(&set),
            MagmaTree::Node(l, r) => {
                let gens = self.model.product.gens();
                let base = self.model.base.set();
                let da = l.degree(base) as i64;
                let db = r.degree(base) as i64;
                let ua = self.underline(l);
                let ub = self.underline(r);
                let half = C::from_fraction(1, 2);
                let mut out = gens.apply_sigma(&ua, &self.prime(&ub))?;
                out -= gens.apply_sigma(&ub, &self.prime(&ua))?.scale(&C::sign(da * db));
                let ga = self.gamma(l)?;
                let gb = self.gamma(r)?;
                out += self.delta_plus(&ua).bracket(&gb).scale(&(half.clone() * C::sign(da)));
                out += ga.bracket(&self.delta_plus(&ub)).scale(&half);
                out
            }
        };
        self.gamma.insert(tree.clone(), value.clone());
        Ok(value)
    }
}
