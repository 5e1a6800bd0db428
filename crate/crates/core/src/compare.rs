//! Comparing a computed element against a printed sum of terms.
//!
//! Printed terms are normalized one by one. If the residual
//! `computed - Σ printed` is not zero, it is explained where possible by
//! rescaling individual printed terms: a factor of `-1` is a sign flip,
//! `0` a spurious term, anything else a coefficient deviation.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::BasisKey;
use crate::io::PrintedTerm;
use crate::{Lie, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum TermStatus {
    Match,
    SignFlip,
    Spurious,
    /// The computed coefficient is `factor` times the printed one.
    Rescaled { factor: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct TermReport {
    pub printed: String,
    #[serde(flatten)]
    pub status: TermStatus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Exact,
    Deviations,
    Unexplained,
}

#[derive(Clone, Debug, Serialize)]
pub struct Comparison {
    pub key: String,
    pub computed: String,
    pub printed_terms: usize,
    pub terms: Vec<TermReport>,
    pub residual: String,
    pub verdict: Verdict,
}

impl Comparison {
    pub fn deviations(&self) -> impl Iterator<Item = &TermReport> {
        self.terms.iter().filter(|t| t.status != TermStatus::Match)
    }
}

/// Compares `computed` with the printed `terms`.
pub fn compare(key: impl Into<String>, computed: &Lie, terms: &[PrintedTerm]) -> Comparison {
    let mut residual = computed.clone();
    for t in terms {
        residual -= t.value.clone();
    }
    let mut factors = vec![Rational::one(); terms.len()];
    let verdict = if residual.is_empty() {
        Verdict::Exact
    } else if let Some(lambda) = single_term_fix(&residual, terms).or_else(|| solve(&residual, terms)) {
        for (f, l) in factors.iter_mut().zip(lambda) {
            *f += l;
        }
        Verdict::Deviations
    } else {
        Verdict::Unexplained
    };
    let reports = terms
        .iter()
        .zip(&factors)
        .map(|(t, f)| TermReport {
            printed: t.text.clone(),
            status: if f.is_one() {
                TermStatus::Match
            } else if *f == -Rational::one() {
                TermStatus::SignFlip
            } else if f.is_zero() {
                TermStatus::Spurious
            } else {
                TermStatus::Rescaled { factor: f.to_string() }
            },
        })
        .collect();
    Comparison {
        key: key.into(),
        computed: computed.to_string(),
        printed_terms: terms.len(),
        terms: reports,
        residual: if verdict == Verdict::Deviations { "0".into() } else { residual.to_string() },
        verdict,
    }
}

fn single_term_fix(residual: &Lie, terms: &[PrintedTerm]) -> Option<Vec<Rational>> {
    let (key, rc) = residual.iter().next()?;
    let mut best: Option<(usize, Rational)> = None;
    for (i, t) in terms.iter().enumerate() {
        let tc = t.value.coefficient(key);
        if tc.is_zero() {
            continue;
        }
        let lambda = rc / &tc;
        if (residual.clone() - t.value.scale(&lambda)).is_empty() {
            let flip = lambda == Rational::from_integer((-2).into());
            if flip || best.is_none() {
                best = Some((i, lambda));
            }
            if flip {
                break;
            }
        }
    }
    let (i, lambda) = best?;
    let mut out = vec![Rational::zero(); terms.len()];
    out[i] = lambda;
    Some(out)
}

/// Solves `residual = Σ λ_i term_i` by Gaussian elimination.
fn solve(residual: &Lie, terms: &[PrintedTerm]) -> Option<Vec<Rational>> {
    let mut keys: BTreeMap<&BasisKey, usize> = BTreeMap::new();
    for k in residual.terms().keys().chain(terms.iter().flat_map(|t| t.value.terms().keys())) {
        let n = keys.len();
        keys.entry(k).or_insert(n);
    }
    let n = terms.len();
    let mut rows = vec![vec![Rational::zero(); n + 1]; keys.len()];
    for (j, t) in terms.iter().enumerate() {
        for (k, c) in t.value.iter() {
            rows[keys[k]][j] = c.clone();
        }
    }
    for (k, c) in residual.iter() {
        rows[keys[k]][n] = c.clone();
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][col];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= p * &f;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut out = vec![Rational::zero(); n];
    for (i, &col) in pivots.iter().enumerate() {
        out[col] = rows[i][n].clone();
    }
    Some(out)
}
