//! Product models `(𝕃(V ⊕ W ⊕ s(V⊗W)), D)`.

use serde::Serialize;

use super::{ProductGenerators, Role};
use crate::algebra::LieElement;
use crate::dgl::{Derivation, DglPresentation};
use crate::error::{Error, Result};
use crate::generators::{Gen, GeneratorSet};
use crate::magma::MagmaElement;
use crate::scalar::Scalar;
use std::sync::Arc;

/// Which case of the differential formula produced a generator's value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    LeftFactor,
    RightFactor,
    /// `∂v = 0` and `∂w = 0`: `D s(v⊗w) = [v,w]`.
    BothCycles,
    /// `∂v ≠ 0`, `∂w = 0`.
    LeftBoundary,
    /// `∂v = 0`, `∂w ≠ 0`.
    RightBoundary,
    /// Both differentials nonzero; the star term contributes.
    Mixed,
    /// The co-H-space formula `[v,w] - (-1)^{|v|} σ_v(∂w)`.
    CoH,
    /// Formula value plus user-supplied correction terms.
    Corrected,
    /// Value replaced by the user.
    Replaced,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelKind {
    /// Built for 2-cones and checked to square to zero.
    Verified,
    /// Built from a co-H factor and checked to square to zero.
    CoH,
    /// Formula applied outside its proven range; never claimed valid.
    Candidate,
}

pub struct ProductModel<C> {
    label: String,
    gens: ProductGenerators<C>,
    differential: Derivation<C>,
    branches: Vec<Branch>,
    kind: ModelKind,
}

impl<C: Scalar> Clone for ProductModel<C> {
    fn clone(&self) -> Self {
        ProductModel {
            label: self.label.clone(),
            gens: self.gens.clone(),
            differential: self.differential.clone(),
            branches: self.branches.clone(),
            kind: self.kind,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidualEntry {
    pub generator: String,
    pub differential: String,
    pub residual: String,
    pub zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidualReport {
    pub label: String,
    pub pass: bool,
    pub entries: Vec<ResidualEntry>,
}

impl ResidualReport {
    /// `d²(g)` for every generator of a degree `-1` derivation.
    pub fn new<C: Scalar>(label: &str, d: &Derivation<C>) -> Self {
        let set = d.set();
        let entries: Vec<ResidualEntry> = set
            .gens()
            .map(|g| {
                let r = d.apply(d.value(g));
                ResidualEntry {
                    generator: set.name(g).to_string(),
                    differential: d.value(g).to_string(),
                    residual: r.to_string(),
                    zero: r.is_zero(),
                }
            })
            .collect();
        ResidualReport { label: label.to_string(), pass: entries.iter().all(|e| e.zero), entries }
    }

    pub fn of_presentation<C: Scalar>(p: &DglPresentation<C>) -> Self {
        Self::new(p.label(), p.differential())
    }

    pub fn failures(&self) -> impl Iterator<Item = &ResidualEntry> {
        self.entries.iter().filter(|e| !e.zero)
    }

    pub fn entry(&self, generator: &str) -> Option<&ResidualEntry> {
        self.entries.iter().find(|e| e.generator == generator)
    }
}

fn check_factor<C: Scalar>(p: &DglPresentation<C>, max_cone: Option<usize>) -> Result<()> {
    let report = p.validate();
    if !report.valid {
        return Err(Error::InvalidPresentation {
            label: p.label().to_string(),
            reason: report.failure_summary(),
        });
    }
    if !report.minimal {
        return Err(Error::InvalidPresentation {
            label: p.label().to_string(),
            reason: "differential has a linear term".into(),
        });
    }
    let cone = p.cone_filtration()?.cone_length();
    match max_cone {
        Some(allowed) if cone > allowed => Err(Error::ConeLengthExceeded { found: cone, allowed }),
        _ => Ok(()),
    }
}

impl<C: Scalar> ProductGenerators<C> {
    /// `D(v) = ∂v`, `D(w) = ∂w` transported into the product.
    fn factor_differential(&self, g: Gen) -> LieElement<C> {
        match self.role(g) {
            Role::Left(i) => self.embed_left(self.left().d(i)),
            Role::Right(j) => self.embed_right(self.right().d(j)),
            Role::Suspension { .. } => LieElement::zero(self.set()),
        }
    }

    /// `[v,w] - (-1)^{(|v|+1)|w|} σ_w(∂v) - (-1)^{|v|} σ_v(∂w)
    ///  + (-1)^{|v|} lift(∂v) ⋆ ∂w`.
    pub fn suspension_differential(&self, v: Gen, w: Gen) -> Result<LieElement<C>> {
        self.suspension(v, w)?;
        let (dv_deg, dw_deg) = (self.set().degree(v) as i64, self.set().degree(w) as i64);
        let ev = LieElement::generator(self.set(), v);
        let ew = LieElement::generator(self.set(), w);
        let dv = self.factor_differential(v);
        let dw = self.factor_differential(w);
        let mut out = ev.bracket(&ew);
        out -= self.sigma_right(w)?.apply(&dv).scale(&C::sign((dv_deg + 1) * dw_deg));
        out -= self.sigma_left(v)?.apply(&dw).scale(&C::sign(dv_deg));
        if !dv.is_empty() && !dw.is_empty() {
            out += self.star(&MagmaElement::lift(&dv), &dw)?.scale(&C::sign(dv_deg));
        }
        Ok(out)
    }

    /// `[v,w] - (-1)^{|v|} σ_v(∂w)`.
    pub fn co_h_differential(&self, v: Gen, w: Gen) -> Result<LieElement<C>> {
        self.suspension(v, w)?;
        let ev = LieElement::generator(self.set(), v);
        let ew = LieElement::generator(self.set(), w);
        let dw = self.factor_differential(w);
        let sign = C::sign(self.set().degree(v) as i64);
        Ok(ev.bracket(&ew) - self.sigma_left(v)?.apply(&dw).scale(&sign))
    }
}

fn assemble<C: Scalar>(
    gens: ProductGenerators<C>,
    kind: ModelKind,
    mut formula: impl FnMut(&ProductGenerators<C>, Gen, Gen) -> Result<(LieElement<C>, Branch)>,
) -> Result<ProductModel<C>> {
    let set = gens.set().clone();
    let mut values = Vec::with_capacity(set.len());
    let mut branches = Vec::with_capacity(set.len());
    for g in set.gens() {
        let (value, branch) = match gens.role(g) {
            Role::Left(_) => (gens.factor_differential(g), Branch::LeftFactor),
            Role::Right(_) => (gens.factor_differential(g), Branch::RightFactor),
            Role::Suspension { left, right } => formula(&gens, left, right)?,
        };
        values.push(value);
        branches.push(branch);
    }
    let differential = Derivation::new(&set, -1, |g| values[g.index()].clone())?;
    let label = format!("{}×{}", gens.left().label(), gens.right().label());
    Ok(ProductModel { label, gens, differential, branches, kind })
}

fn two_cone_formula<C: Scalar>(
    gens: &ProductGenerators<C>,
    v: Gen,
    w: Gen,
) -> Result<(LieElement<C>, Branch)> {
    let value = gens.suspension_differential(v, w)?;
    let branch = match (gens.factor_differential(v).is_empty(), gens.factor_differential(w).is_empty()) {
        (true, true) => Branch::BothCycles,
        (false, true) => Branch::LeftBoundary,
        (true, false) => Branch::RightBoundary,
        (false, false) => Branch::Mixed,
    };
    Ok((value, branch))
}

fn require_zero_residuals<C: Scalar>(model: &ProductModel<C>) -> Result<()> {
    let report = model.d_squared_residual();
    if report.pass {
        return Ok(());
    }
    let detail: Vec<String> =
        report.failures().map(|e| format!("D²({}) = {}", e.generator, e.residual)).collect();
    Err(Error::Verification(detail.join("; ")))
}

/// The product model of two minimal 2-cones.
pub fn build_product_model<C: Scalar>(
    x: &DglPresentation<C>,
    y: &DglPresentation<C>,
) -> Result<ProductModel<C>> {
    check_factor(x, Some(2))?;
    check_factor(y, Some(2))?;
    let model = assemble(ProductGenerators::new(x, y)?, ModelKind::Verified, two_cone_formula)?;
    require_zero_residuals(&model)?;
    Ok(model)
}

/// The product model when the left factor has zero differential; the right
/// factor may have any cone length.
pub fn lupton_smith_model<C: Scalar>(
    x: &DglPresentation<C>,
    y: &DglPresentation<C>,
) -> Result<ProductModel<C>> {
    if let Some(g) = x.set().gens().find(|&g| !x.d(g).is_empty()) {
        return Err(Error::OutsideDomain(format!(
            "left factor must have zero differential, but d({}) ≠ 0",
            x.set().name(g)
        )));
    }
    check_factor(x, None)?;
    check_factor(y, None)?;
    let model = assemble(ProductGenerators::new(x, y)?, ModelKind::CoH, |gens, v, w| {
        Ok((gens.co_h_differential(v, w)?, Branch::CoH))
    })?;
    require_zero_residuals(&model)?;
    Ok(model)
}

/// The 2-cone formula applied to factors of any cone length, with correction
/// terms added to the listed generators. Returns the model and its residual
/// report; nothing is claimed about validity.
pub fn build_candidate_model<C: Scalar>(
    x: &DglPresentation<C>,
    y: &DglPresentation<C>,
    corrections: &[(Gen, LieElement<C>)],
) -> Result<(ProductModel<C>, ResidualReport)> {
    check_factor(x, None)?;
    check_factor(y, None)?;
    let mut model = assemble(ProductGenerators::new(x, y)?, ModelKind::Candidate, two_cone_formula)?;
    for (g, value) in corrections {
        model = model.with_correction(*g, value)?;
    }
    let report = model.d_squared_residual();
    Ok((model, report))
}

impl<C: Scalar> ProductModel<C> {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn gens(&self) -> &ProductGenerators<C> {
        &self.gens
    }

    pub fn set(&self) -> &Arc<GeneratorSet> {
        self.gens.set()
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn differential(&self) -> &Derivation<C> {
        &self.differential
    }

    pub fn d(&self, g: Gen) -> &LieElement<C> {
        self.differential.value(g)
    }

    /// `D` of a named generator.
    pub fn d_named(&self, name: &str) -> Result<&LieElement<C>> {
        Ok(self.d(self.set().require(name)?))
    }

    pub fn apply(&self, x: &LieElement<C>) -> LieElement<C> {
        self.differential.apply(x)
    }

    pub fn branch(&self, g: Gen) -> Branch {
        self.branches[g.index()]
    }

    /// Adds `extra` to `D(g)`. The result is a candidate model.
    pub fn with_correction(&self, g: Gen, extra: &LieElement<C>) -> Result<Self> {
        let value = self.d(g).clone() + self.checked(g, extra)?;
        Ok(self.replaced(g, value, Branch::Corrected))
    }

    /// Sets `D(g) = value`. The result is a candidate model.
    pub fn with_replacement(&self, g: Gen, value: &LieElement<C>) -> Result<Self> {
        let value = self.checked(g, value)?;
        Ok(self.replaced(g, value, Branch::Replaced))
    }

    fn checked(&self, g: Gen, value: &LieElement<C>) -> Result<LieElement<C>> {
        if !value.set().same_as(self.set()) {
            return Err(Error::MismatchedSets);
        }
        let expected = self.set().degree(g) as i64 - 1;
        match value.degree()? {
            Some(d) if d as i64 != expected => Err(Error::DegreeMismatch {
                generator: self.set().name(g).to_string(),
                expected,
                found: d as i64,
            }),
            _ => Ok(value.clone()),
        }
    }

    fn replaced(&self, g: Gen, value: LieElement<C>, branch: Branch) -> Self {
        let mut values = self.differential.values().to_vec();
        values[g.index()] = value;
        let mut branches = self.branches.clone();
        branches[g.index()] = branch;
        ProductModel {
            label: self.label.clone(),
            gens: self.gens.clone(),
            differential: Derivation::from_values_unchecked(self.set(), -1, values),
            branches,
            kind: ModelKind::Candidate,
        }
    }

    /// `D²(g)` for every generator.
    pub fn residuals(&self) -> Vec<(Gen, LieElement<C>)> {
        self.set().gens().map(|g| (g, self.apply(self.d(g)))).collect()
    }

    pub fn d_squared_residual(&self) -> ResidualReport {
        ResidualReport::new(&self.label, &self.differential)
    }

    /// Generators on which the projection to `𝕃(V) × 𝕃(W)` fails to commute
    /// with the differentials.
    pub fn projection_failures(&self) -> Vec<Gen> {
        let left = self.gens.left();
        let right = self.gens.right();
        self.set()
            .gens()
            .filter(|&g| {
                let eg = LieElement::generator(self.set(), g);
                let dg = self.d(g);
                let ok_left = self.gens.project_left(dg).equals(&left.apply(&self.gens.project_left(&eg)));
                let ok_right =
                    self.gens.project_right(dg).equals(&right.apply(&self.gens.project_right(&eg)));
                !(ok_left && ok_right)
            })
            .collect()
    }

    /// The projection `φ` is a chain map.
    pub fn projection_check(&self) -> bool {
        self.projection_failures().is_empty()
    }

    /// Every `D(g)` has bracket length at least 2.
    pub fn minimality_check(&self) -> bool {
        self.differential.values().iter().all(|v| v.min_bracket_length().is_none_or(|l| l >= 2))
    }

    /// Every term of `D(s(v⊗w)) - [v,w]` contains a suspension generator.
    pub fn suspension_ideal_check(&self) -> bool {
        self.gens.suspension_gens().all(|s| {
            let Role::Suspension { left, right } = self.gens.role(s) else { unreachable!() };
            let vw = LieElement::generator(self.set(), left).bracket(&LieElement::generator(self.set(), right));
            let rest = self.d(s).clone() - vw;
            let ok = rest.iter().all(|(k, _)| k.suspension_count() > 0);
            ok
        })
    }

    pub fn to_presentation(&self) -> DglPresentation<C> {
        DglPresentation::new(
            self.label.clone(),
            self.set(),
            self.set().gens().map(|g| (g, self.d(g).clone())),
        )
        .expect("differential lives over the product set")
    }
}
