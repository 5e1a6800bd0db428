//! The product algebra `𝕃(V ⊕ W ⊕ s(V⊗W))` and its special derivations.

mod model;
mod star;

pub use model::{
    build_candidate_model, build_product_model, lupton_smith_model, Branch, ModelKind,
    ProductModel, ResidualEntry, ResidualReport,
};

use std::sync::Arc;

use crate::algebra::LieElement;
use crate::dgl::{Derivation, DglPresentation};
use crate::error::{Error, Result};
use crate::generators::{Gen, Generator, GeneratorSet, Origin};
use crate::magma::MagmaElement;
use crate::scalar::Scalar;

/// Where a product generator comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    /// Generator of the left factor, by its index there.
    Left(Gen),
    /// Generator of the right factor, by its index there.
    Right(Gen),
    /// `s(v⊗w)`, by the product indices of `v` and `w`.
    Suspension { left: Gen, right: Gen },
}

/// The generator set `V ⊕ W ⊕ s(V⊗W)` of the product of two presentations.
pub struct ProductGenerators<C> {
    left: DglPresentation<C>,
    right: DglPresentation<C>,
    set: Arc<GeneratorSet>,
    left_map: Vec<Gen>,
    right_map: Vec<Gen>,
    suspensions: Vec<Vec<Gen>>,
    roles: Vec<Role>,
}

impl<C: Scalar> Clone for ProductGenerators<C> {
    fn clone(&self) -> Self {
        ProductGenerators {
            left: self.left.clone(),
            right: self.right.clone(),
            set: self.set.clone(),
            left_map: self.left_map.clone(),
            right_map: self.right_map.clone(),
            suspensions: self.suspensions.clone(),
            roles: self.roles.clone(),
        }
    }
}

impl<C: Scalar> ProductGenerators<C> {
    /// Right-factor names that clash with left-factor names get primes
    /// appended until unique.
    pub fn new(left: &DglPresentation<C>, right: &DglPresentation<C>) -> Result<Self> {
        let lset = left.set();
        let rset = right.set();
        let mut gens: Vec<Generator> = lset
            .generators()
            .iter()
            .map(|g| Generator::with_origin(&g.name, g.degree, Origin::LeftFactor))
            .collect();
        let mut right_names = Vec::with_capacity(rset.len());
        for g in rset.generators() {
            let mut name = g.name.clone();
            while lset.lookup(&name).is_some() || right_names.contains(&name) {
                name.push('\'');
            }
            right_names.push(name.clone());
            gens.push(Generator::with_origin(name, g.degree, Origin::RightFactor));
        }
        let factor_count = gens.len();
        for l in 0..lset.len() {
            for r in 0..rset.len() {
                let s = Generator::suspension(&gens[l], &gens[lset.len() + r]);
                gens.push(s);
            }
        }
        debug_assert_eq!(gens.len(), factor_count + lset.len() * rset.len());
        let set = GeneratorSet::new(gens)?;
        let left_map: Vec<Gen> = lset.generators().iter().map(|g| set.require(&g.name)).collect::<Result<_>>()?;
        let right_map: Vec<Gen> = right_names.iter().map(|n| set.require(n)).collect::<Result<_>>()?;
        let mut suspensions = vec![Vec::with_capacity(rset.len()); lset.len()];
        let mut roles = vec![Role::Left(Gen(0)); set.len()];
        for (i, &p) in left_map.iter().enumerate() {
            roles[p.index()] = Role::Left(Gen(i as u32));
        }
        for (j, &p) in right_map.iter().enumerate() {
            roles[p.index()] = Role::Right(Gen(j as u32));
        }
        for (i, &v) in left_map.iter().enumerate() {
            for &w in &right_map {
                let name = crate::generators::suspension_name(set.name(v), set.name(w));
                let s = set.require(&name)?;
                suspensions[i].push(s);
                roles[s.index()] = Role::Suspension { left: v, right: w };
            }
        }
        Ok(ProductGenerators {
            left: left.clone(),
            right: right.clone(),
            set,
            left_map,
            right_map,
            suspensions,
            roles,
        })
    }

    pub fn set(&self) -> &Arc<GeneratorSet> {
        &self.set
    }

    pub fn left(&self) -> &DglPresentation<C> {
        &self.left
    }

    pub fn right(&self) -> &DglPresentation<C> {
        &self.right
    }

    pub fn role(&self, g: Gen) -> Role {
        self.roles[g.index()]
    }

    /// Product indices of the left factor's generators.
    pub fn left_gens(&self) -> &[Gen] {
        &self.left_map
    }

    pub fn right_gens(&self) -> &[Gen] {
        &self.right_map
    }

    pub fn is_left(&self, g: Gen) -> bool {
        matches!(self.roles[g.index()], Role::Left(_))
    }

    pub fn is_right(&self, g: Gen) -> bool {
        matches!(self.roles[g.index()], Role::Right(_))
    }

    /// `s(v⊗w)` for product indices `v ∈ V`, `w ∈ W`.
    pub fn suspension(&self, v: Gen, w: Gen) -> Result<Gen> {
        match (self.roles[v.index()], self.roles[w.index()]) {
            (Role::Left(i), Role::Right(j)) => Ok(self.suspensions[i.index()][j.index()]),
            _ => Err(Error::OutsideDomain(format!(
                "s({},{}) needs a left and a right generator",
                self.set.name(v),
                self.set.name(w)
            ))),
        }
    }

    /// All suspension generators, in `(v, w)` order of the factors.
    pub fn suspension_gens(&self) -> impl Iterator<Item = Gen> + '_ {
        self.suspensions.iter().flatten().copied()
    }

    pub fn left_name(&self, name: &str) -> Result<Gen> {
        let g = self.set.require(name)?;
        if self.is_left(g) { Ok(g) } else { Err(not_in("V", &self.set, g)) }
    }

    pub fn right_name(&self, name: &str) -> Result<Gen> {
        let g = self.set.require(name)?;
        if self.is_right(g) { Ok(g) } else { Err(not_in("W", &self.set, g)) }
    }

    pub fn generator(&self, name: &str) -> Result<LieElement<C>> {
        LieElement::named(&self.set, name)
    }

    pub fn embed_left(&self, x: &LieElement<C>) -> LieElement<C> {
        x.transport(&self.set, |g| self.left_map[g.index()])
    }

    pub fn embed_right(&self, x: &LieElement<C>) -> LieElement<C> {
        x.transport(&self.set, |g| self.right_map[g.index()])
    }

    pub fn embed_left_magma(&self, x: &MagmaElement<C>) -> MagmaElement<C> {
        x.transport(&self.set, |g| self.left_map[g.index()])
    }

    pub fn embed_right_magma(&self, x: &MagmaElement<C>) -> MagmaElement<C> {
        x.transport(&self.set, |g| self.right_map[g.index()])
    }

    /// First component of the projection onto `𝕃(V) × 𝕃(W)`.
    pub fn project_left(&self, x: &LieElement<C>) -> LieElement<C> {
        let target = self.left.set();
        x.map_generators(target, |g| match self.roles[g.index()] {
            Role::Left(i) => LieElement::generator(target, i),
            _ => LieElement::zero(target),
        })
    }

    pub fn project_right(&self, x: &LieElement<C>) -> LieElement<C> {
        let target = self.right.set();
        x.map_generators(target, |g| match self.roles[g.index()] {
            Role::Right(j) => LieElement::generator(target, j),
            _ => LieElement::zero(target),
        })
    }

    /// `σ_v`: `w ↦ s(v⊗w)`, zero on `V` and on suspensions.
    pub fn sigma_left(&self, v: Gen) -> Result<Derivation<C>> {
        let Role::Left(i) = self.roles[v.index()] else {
            return Err(not_in("V", &self.set, v));
        };
        let degree = self.set.degree(v) as i64 + 1;
        Derivation::new(&self.set, degree, |g| match self.roles[g.index()] {
            Role::Right(j) => LieElement::generator(&self.set, self.suspensions[i.index()][j.index()]),
            _ => LieElement::zero(&self.set),
        })
    }

    /// `σ_w`: `v ↦ (-1)^{|v||w|} s(v⊗w)`, zero on `W` and on suspensions.
    pub fn sigma_right(&self, w: Gen) -> Result<Derivation<C>> {
        let Role::Right(j) = self.roles[w.index()] else {
            return Err(not_in("W", &self.set, w));
        };
        let dw = self.set.degree(w);
        Derivation::new(&self.set, dw as i64 + 1, |g| match self.roles[g.index()] {
            Role::Left(i) => {
                let s = LieElement::generator(&self.set, self.suspensions[i.index()][j.index()]);
                s.scale(&C::sign((self.set.degree(g) * dw) as i64))
            }
            _ => LieElement::zero(&self.set),
        })
    }

    /// `σ_A` for a homogeneous `A ∈ 𝕃(V ⊕ W)`:
    /// `σ_A(v) = (-1)^{|v||A|} σ_v(A)`, `σ_A(w) = (-1)^{|w||A|} σ_w(A)`,
    /// zero on suspensions. The zero element gives the zero derivation of
    /// degree 1.
    pub fn sigma_of(&self, a: &LieElement<C>) -> Result<Derivation<C>> {
        if let Some(g) = a.letters().into_iter().find(|&g| self.set.is_suspension(g)) {
            return Err(Error::OutsideDomain(format!(
                "σ_A needs A free of suspension generators, found {}",
                self.set.name(g)
            )));
        }
        let Some(da) = a.degree()? else {
            return Ok(Derivation::zero(&self.set, 1));
        };
        let letters = a.letters();
        let has_left = letters.iter().any(|&g| self.is_left(g));
        let has_right = letters.iter().any(|&g| self.is_right(g));
        let values = self
            .set
            .gens()
            .map(|g| {
                let dg = self.set.degree(g);
                let sign = C::sign((dg * da) as i64);
                match self.roles[g.index()] {
                    Role::Left(_) if has_right => self.sigma_left(g).unwrap().apply(a).scale(&sign),
                    Role::Right(_) if has_left => self.sigma_right(g).unwrap().apply(a).scale(&sign),
                    _ => LieElement::zero(&self.set),
                }
            })
            .collect();
        let values: Vec<LieElement<C>> = values;
        Derivation::new(&self.set, da as i64 + 1, |g| values[g.index()].clone())
    }

    /// `σ_A(x)` with `σ` extended linearly over the homogeneous components
    /// of `A`.
    pub fn apply_sigma(&self, a: &LieElement<C>, x: &LieElement<C>) -> Result<LieElement<C>> {
        let mut out = LieElement::zero(&self.set);
        for part in a.homogeneous_components().into_values() {
            out += self.sigma_of(&part)?.try_apply(x)?;
        }
        Ok(out)
    }

    /// `ad_x(g) = [x, g]` for homogeneous `x`; zero gives degree 0.
    pub fn ad(&self, x: &LieElement<C>) -> Result<Derivation<C>> {
        ad(x)
    }
}

/// `ad_x(g) = [x, g]` for homogeneous `x`; zero gives degree 0.
pub fn ad<C: Scalar>(x: &LieElement<C>) -> Result<Derivation<C>> {
    let set = x.set();
    let degree = x.degree()?.unwrap_or(0) as i64;
    Derivation::new(set, degree, |g| x.bracket(&LieElement::generator(set, g)))
}

fn not_in(space: &str, set: &GeneratorSet, g: Gen) -> Error {
    Error::OutsideDomain(format!("{} is not a generator of {space}", set.name(g)))
}
