//! Graded generator sets.
//!
//! A [`GeneratorSet`] is the ordered alphabet of a free graded Lie algebra.
//! Generators are addressed by [`Gen`], their position in the set's total
//! order: ordinary generators first, sorted by degree and then by name,
//! followed by suspension generators sorted by `(|v|, |w|, v, w)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::basis::BracketCache;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen(pub u32);

impl Gen {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Origin {
    LeftFactor,
    RightFactor,
    /// `s(left ⊗ right)`, referenced by generator names.
    Suspension { left: String, right: String },
}

impl Origin {
    pub fn is_suspension(&self) -> bool {
        matches!(self, Origin::Suspension { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
    pub origin: Origin,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        Generator { name: name.into(), degree, origin: Origin::LeftFactor }
    }

    pub fn with_origin(name: impl Into<String>, degree: u32, origin: Origin) -> Self {
        Generator { name: name.into(), degree, origin }
    }

    /// The suspension `s(v ⊗ w)`, named `s(v,w)`, of degree `|v| + |w| + 1`.
    pub fn suspension(left: &Generator, right: &Generator) -> Self {
        Generator {
            name: suspension_name(&left.name, &right.name),
            degree: left.degree + right.degree + 1,
            origin: Origin::Suspension { left: left.name.clone(), right: right.name.clone() },
        }
    }
}

pub fn suspension_name(left: &str, right: &str) -> String {
    format!("s({left},{right})")
}

/// An ordered, immutable set of graded generators.
pub struct GeneratorSet {
    gens: Vec<Generator>,
    by_name: HashMap<String, Gen>,
    pub(crate) brackets: BracketCache,
}

impl GeneratorSet {
    pub fn new(gens: Vec<Generator>) -> Result<Arc<Self>> {
        let mut by_name: HashMap<&str, &Generator> = HashMap::new();
        for g in &gens {
            if g.degree == 0 {
                return Err(Error::InvalidDegree { name: g.name.clone(), degree: 0 });
            }
            if by_name.insert(g.name.as_str(), g).is_some() {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
        }
        let mut keyed = Vec::with_capacity(gens.len());
        for g in &gens {
            let key = match &g.origin {
                Origin::Suspension { left, right } => {
                    let l = by_name
                        .get(left.as_str())
                        .ok_or_else(|| Error::UnknownGenerator(left.clone()))?;
                    let r = by_name
                        .get(right.as_str())
                        .ok_or_else(|| Error::UnknownGenerator(right.clone()))?;
                    let expected = l.degree + r.degree + 1;
                    if g.degree != expected {
                        return Err(Error::SuspensionDegree {
                            name: g.name.clone(),
                            expected,
                            found: g.degree,
                        });
                    }
                    (1u8, l.degree, r.degree, left.clone(), right.clone())
                }
                _ => (0u8, g.degree, 0, g.name.clone(), String::new()),
            };
            keyed.push((key, g.clone()));
        }
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        let gens: Vec<Generator> = keyed.into_iter().map(|(_, g)| g).collect();
        let by_name = gens
            .iter()
            .enumerate()
            .map(|(i, g)| (g.name.clone(), Gen(i as u32)))
            .collect();
        Ok(Arc::new(GeneratorSet { gens, by_name, brackets: BracketCache::default() }))
    }

    /// Convenience constructor from `(name, degree)` pairs.
    pub fn from_degrees<S: AsRef<str>>(gens: &[(S, u32)]) -> Result<Arc<Self>> {
        Self::new(gens.iter().map(|(n, d)| Generator::new(n.as_ref(), *d)).collect())
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generator(&self, g: Gen) -> &Generator {
        &self.gens[g.index()]
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn iter(&self) -> impl Iterator<Item = (Gen, &Generator)> {
        self.gens.iter().enumerate().map(|(i, g)| (Gen(i as u32), g))
    }

    pub fn gens(&self) -> impl Iterator<Item = Gen> {
        (0..self.gens.len() as u32).map(Gen)
    }

    #[inline]
    pub fn degree(&self, g: Gen) -> u32 {
        self.gens[g.index()].degree
    }

    pub fn name(&self, g: Gen) -> &str {
        &self.gens[g.index()].name
    }

    pub fn origin(&self, g: Gen) -> &Origin {
        &self.gens[g.index()].origin
    }

    pub fn lookup(&self, name: &str) -> Option<Gen> {
        self.by_name.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<Gen> {
        self.lookup(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn is_suspension(&self, g: Gen) -> bool {
        self.gens[g.index()].origin.is_suspension()
    }

    /// Structural equality: same generators in the same order.
    pub fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || self.gens == other.gens
    }
}

impl PartialEq for GeneratorSet {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens
    }
}

impl Eq for GeneratorSet {}

impl fmt::Debug for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.gens.iter().map(|g| format!("{}:{}", g.name, g.degree)))
            .finish()
    }
}
