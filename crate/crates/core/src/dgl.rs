//! Derivations and differential graded Lie algebra presentations.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::algebra::{BasisKey, LieElement};
use crate::error::{Error, Result};
use crate::generators::{Gen, Generator, GeneratorSet, Origin};
use crate::scalar::Scalar;

/// A derivation of a free graded Lie algebra, stored by its values on
/// generators and extended by the graded Leibniz rule.
pub struct Derivation<C> {
    degree: i64,
    set: Arc<GeneratorSet>,
    values: Vec<LieElement<C>>,
    memo: Mutex<HashMap<BasisKey, LieElement<C>>>,
}

impl<C: Scalar> Clone for Derivation<C> {
    fn clone(&self) -> Self {
        Derivation {
            degree: self.degree,
            set: self.set.clone(),
            values: self.values.clone(),
            memo: Mutex::default(),
        }
    }
}

impl<C: Scalar> Derivation<C> {
    pub fn zero(set: &Arc<GeneratorSet>, degree: i64) -> Self {
        Self::from_values_unchecked(set, degree, vec![LieElement::zero(set); set.len()])
    }

    /// Builds a derivation from its value on every generator, checking that
    /// each value is homogeneous of degree `|g| + degree`.
    pub fn new(
        set: &Arc<GeneratorSet>,
        degree: i64,
        mut value: impl FnMut(Gen) -> LieElement<C>,
    ) -> Result<Self> {
        let values: Vec<_> = set.gens().map(&mut value).collect();
        for (g, v) in set.gens().zip(&values) {
            check_value(set, g, degree, v)?;
        }
        Ok(Self::from_values_unchecked(set, degree, values))
    }

    /// Like [`Derivation::new`] without the degree check.
    pub fn from_values_unchecked(
        set: &Arc<GeneratorSet>,
        degree: i64,
        values: Vec<LieElement<C>>,
    ) -> Self {
        assert_eq!(values.len(), set.len());
        assert!(values.iter().all(|v| v.set().same_as(set)), "value over a foreign generator set");
        Derivation { degree, set: set.clone(), values, memo: Mutex::default() }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn set(&self) -> &Arc<GeneratorSet> {
        &self.set
    }

    pub fn value(&self, g: Gen) -> &LieElement<C> {
        &self.values[g.index()]
    }

    pub fn values(&self) -> &[LieElement<C>] {
        &self.values
    }

    /// Applies the Leibniz extension. Panics on a foreign element; see
    /// [`Derivation::try_apply`].
    pub fn apply(&self, x: &LieElement<C>) -> LieElement<C> {
        self.try_apply(x).expect("derivation applied to an element over another generator set")
    }

    pub fn try_apply(&self, x: &LieElement<C>) -> Result<LieElement<C>> {
        if !x.set().same_as(&self.set) {
            return Err(Error::MismatchedSets);
        }
        let mut out = LieElement::zero(&self.set);
        for (k, c) in x.iter() {
            out += self.apply_key(k).scale(c);
        }
        Ok(out)
    }

    fn apply_key(&self, key: &BasisKey) -> LieElement<C> {
        if let Some(hit) = self.memo.lock().unwrap().get(key) {
            return hit.clone();
        }
        let value = match key.children(&self.set) {
            None => self.values[key.word()[0].index()].clone(),
            Some((a, b)) => {
                let ea = LieElement::basis(&self.set, a.clone());
                let eb = LieElement::basis(&self.set, b.clone());
                let sa = self.apply_key(&a);
                let sb = if a == b { sa.clone() } else { self.apply_key(&b) };
                let sign = C::sign(self.degree * a.degree(&self.set) as i64);
                sa.bracket(&eb) + ea.bracket(&sb).scale(&sign)
            }
        };
        self.memo.lock().unwrap().insert(key.clone(), value.clone());
        value
    }

    /// `[σ, τ] = στ - (-1)^{|σ||τ|} τσ`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        if !self.set.same_as(&other.set) {
            return Err(Error::MismatchedSets);
        }
        let sign = C::sign(self.degree * other.degree);
        let values = self
            .set
            .gens()
            .map(|g| {
                self.apply(other.value(g)) - other.apply(self.value(g)).scale(&sign)
            })
            .collect();
        Ok(Self::from_values_unchecked(&self.set, self.degree + other.degree, values))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if !self.set.same_as(&other.set) {
            return Err(Error::MismatchedSets);
        }
        let values =
            self.values.iter().zip(&other.values).map(|(a, b)| a.clone() + b.clone()).collect();
        Ok(Self::from_values_unchecked(&self.set, self.degree, values))
    }

    pub fn scale(&self, c: &C) -> Self {
        let values = self.values.iter().map(|v| v.scale(c)).collect();
        Self::from_values_unchecked(&self.set, self.degree, values)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }
}

impl<C: Scalar> fmt::Debug for Derivation<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (g, v) in self.set.gens().zip(&self.values) {
            if !v.is_empty() {
                m.entry(&self.set.name(g), &format_args!("{v}"));
            }
        }
        m.finish()
    }
}

fn check_value<C: Scalar>(set: &GeneratorSet, g: Gen, degree: i64, v: &LieElement<C>) -> Result<()> {
    let expected = set.degree(g) as i64 + degree;
    match v.degree() {
        Ok(None) => Ok(()),
        Ok(Some(d)) if d as i64 == expected => Ok(()),
        Ok(Some(d)) => Err(Error::DegreeMismatch {
            generator: set.name(g).to_string(),
            expected,
            found: d as i64,
        }),
        Err(e) => Err(e),
    }
}

/// Generator stages `V_0, V_1, ...` with `∂V_i ⊂ 𝕃(V_0 ⊕ ... ⊕ V_{i-1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeFiltration {
    pub stages: Vec<Vec<Gen>>,
}

impl ConeFiltration {
    pub fn cone_length(&self) -> usize {
        self.stages.len()
    }

    pub fn stage_of(&self, g: Gen) -> Option<usize> {
        self.stages.iter().position(|s| s.contains(&g))
    }

    pub fn names(&self, set: &GeneratorSet) -> Vec<Vec<String>> {
        self.stages
            .iter()
            .map(|s| s.iter().map(|&g| set.name(g).to_string()).collect())
            .collect()
    }
}

/// A free dgl `(𝕃(V), ∂)` given on generators.
pub struct DglPresentation<C> {
    label: String,
    differential: Derivation<C>,
}

impl<C: Scalar> Clone for DglPresentation<C> {
    fn clone(&self) -> Self {
        DglPresentation { label: self.label.clone(), differential: self.differential.clone() }
    }
}

impl<C: Scalar> DglPresentation<C> {
    /// Builds a presentation. Differentials default to zero; values are not
    /// checked here, see [`DglPresentation::validate`].
    pub fn new(
        label: impl Into<String>,
        set: &Arc<GeneratorSet>,
        differentials: impl IntoIterator<Item = (Gen, LieElement<C>)>,
    ) -> Result<Self> {
        let mut values = vec![LieElement::zero(set); set.len()];
        for (g, v) in differentials {
            if !v.set().same_as(set) {
                return Err(Error::MismatchedSets);
            }
            values[g.index()] = v;
        }
        Ok(DglPresentation {
            label: label.into(),
            differential: Derivation::from_values_unchecked(set, -1, values),
        })
    }

    /// [`DglPresentation::new`] followed by validation; fails unless the
    /// report is valid.
    pub fn validated(
        label: impl Into<String>,
        set: &Arc<GeneratorSet>,
        differentials: impl IntoIterator<Item = (Gen, LieElement<C>)>,
    ) -> Result<Self> {
        let p = Self::new(label, set, differentials)?;
        let report = p.validate();
        if !report.valid {
            return Err(Error::InvalidPresentation {
                label: p.label.clone(),
                reason: report.failure_summary(),
            });
        }
        Ok(p)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn set(&self) -> &Arc<GeneratorSet> {
        self.differential.set()
    }

    pub fn differential(&self) -> &Derivation<C> {
        &self.differential
    }

    pub fn d(&self, g: Gen) -> &LieElement<C> {
        self.differential.value(g)
    }

    pub fn apply(&self, x: &LieElement<C>) -> LieElement<C> {
        self.differential.apply(x)
    }

    /// A copy with every generator renamed by `rename`.
    pub fn renamed(&self, label: impl Into<String>, rename: impl Fn(&str) -> String) -> Result<Self> {
        let old = self.set();
        let gens = old
            .generators()
            .iter()
            .map(|g| {
                let origin = match &g.origin {
                    Origin::Suspension { left, right } => {
                        Origin::Suspension { left: rename(left), right: rename(right) }
                    }
                    o => o.clone(),
                };
                Generator::with_origin(rename(&g.name), g.degree, origin)
            })
            .collect();
        let set = GeneratorSet::new(gens)?;
        let map: Vec<Gen> = old.generators().iter().map(|g| set.require(&rename(&g.name))).collect::<Result<_>>()?;
        let diffs = old.gens().map(|g| (map[g.index()], self.d(g).transport(&set, |h| map[h.index()])));
        Self::new(label, &set, diffs.collect::<Vec<_>>())
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn is_minimal(&self) -> bool {
        self.differential.values().iter().all(|v| v.min_bracket_length().is_none_or(|l| l >= 2))
    }

    /// Greedy cone filtration: stage `i` holds every unplaced generator whose
    /// differential only involves generators of earlier stages.
    pub fn cone_filtration(&self) -> Result<ConeFiltration> {
        let set = self.set();
        let letters: Vec<BTreeSet<Gen>> =
            set.gens().map(|g| self.d(g).letters()).collect();
        let mut placed: BTreeSet<Gen> = BTreeSet::new();
        let mut stages = Vec::new();
        while placed.len() < set.len() {
            let stage: Vec<Gen> = set
                .gens()
                .filter(|g| !placed.contains(g) && letters[g.index()].is_subset(&placed))
                .collect();
            if stage.is_empty() {
                let stuck = set
                    .gens()
                    .filter(|g| !placed.contains(g))
                    .map(|g| set.name(g).to_string())
                    .collect();
                return Err(Error::NotWellFounded(stuck));
            }
            placed.extend(stage.iter().copied());
            stages.push(stage);
        }
        Ok(ConeFiltration { stages })
    }

    pub fn validate(&self) -> ValidationReport {
        let set = self.set();
        let generators: Vec<GeneratorCheck> = set
            .gens()
            .map(|g| {
                let d = self.d(g);
                let d2 = self.apply(d);
                let homogeneous = check_value(set, g, -1, d).is_ok();
                GeneratorCheck {
                    name: set.name(g).to_string(),
                    degree: set.degree(g),
                    differential: d.to_string(),
                    homogeneous,
                    d_squared: d2.to_string(),
                    d_squared_zero: d2.is_zero(),
                    minimal: d.min_bracket_length().is_none_or(|l| l >= 2),
                    line: None,
                }
            })
            .collect();
        let (filtration, filtration_error) = match self.cone_filtration() {
            Ok(f) => (Some(f.names(set)), None),
            Err(e) => (None, Some(e.to_string())),
        };
        let valid = generators.iter().all(|g| g.homogeneous && g.d_squared_zero);
        let minimal = generators.iter().all(|g| g.minimal);
        ValidationReport {
            label: self.label.clone(),
            valid,
            minimal,
            cone_length: filtration.as_ref().map(|f| f.len()),
            filtration,
            filtration_error,
            generators,
        }
    }
}

impl<C: Scalar> fmt::Debug for DglPresentation<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DglPresentation")
            .field("label", &self.label)
            .field("generators", self.set())
            .field("differential", &self.differential)
            .finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorCheck {
    pub name: String,
    pub degree: u32,
    pub differential: String,
    pub homogeneous: bool,
    pub d_squared: String,
    pub d_squared_zero: bool,
    pub minimal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub label: String,
    pub valid: bool,
    pub minimal: bool,
    pub cone_length: Option<usize>,
    pub filtration: Option<Vec<Vec<String>>>,
    pub filtration_error: Option<String>,
    pub generators: Vec<GeneratorCheck>,
}

impl ValidationReport {
    pub fn failure_summary(&self) -> String {
        let mut parts = Vec::new();
        for g in &self.generators {
            if !g.homogeneous {
                parts.push(format!("d({}) = {} is not of degree {}", g.name, g.differential, g.degree as i64 - 1));
            }
            if !g.d_squared_zero {
                parts.push(format!("d²({}) = {}", g.name, g.d_squared));
            }
        }
        parts.join("; ")
    }
}
