//! Structured command results with a plain-text rendering.

use std::fmt::Write;

use serde::Serialize;

use crate::compare::{TermStatus, Verdict};
use crate::dgl::ValidationReport;
use crate::diagonal::DiagonalModel;
use crate::product::{Branch, ModelKind, ProductModel, ResidualReport};
use crate::reproduce::{Check, Reproduction};
use crate::scalar::Scalar;

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorListing {
    pub name: String,
    pub degree: u32,
    pub differential: String,
    pub branch: Branch,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModelListing {
    pub label: String,
    pub kind: ModelKind,
    pub generators: Vec<GeneratorListing>,
    pub residual: ResidualReport,
    pub projection: bool,
    pub minimal: bool,
}

impl ModelListing {
    pub fn new<C: Scalar>(model: &ProductModel<C>) -> Self {
        let set = model.set();
        ModelListing {
            label: model.label().to_string(),
            kind: model.kind(),
            generators: set
                .gens()
                .map(|g| GeneratorListing {
                    name: set.name(g).to_string(),
                    degree: set.degree(g),
                    differential: model.d(g).to_string(),
                    branch: model.branch(g),
                })
                .collect(),
            residual: model.d_squared_residual(),
            projection: model.projection_check(),
            minimal: model.minimality_check(),
        }
    }

    pub fn passed(&self) -> bool {
        self.residual.pass && self.projection
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DeltaEntry {
    pub generator: String,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagonalListing {
    pub label: String,
    pub delta: Vec<DeltaEntry>,
    pub chain_map: bool,
    pub chain_map_failures: Vec<String>,
    pub projections: bool,
    pub model: ModelListing,
}

impl DiagonalListing {
    pub fn new<C: Scalar>(diagonal: &DiagonalModel<C>) -> Self {
        let set = diagonal.base().set();
        let failures: Vec<String> =
            diagonal.chain_map_failures().into_iter().map(|g| set.name(g).to_string()).collect();
        DiagonalListing {
            label: diagonal.base().label().to_string(),
            delta: set
                .gens()
                .map(|g| DeltaEntry { generator: set.name(g).to_string(), value: diagonal.delta(g).to_string() })
                .collect(),
            chain_map: failures.is_empty(),
            chain_map_failures: failures,
            projections: diagonal.projection_identities(),
            model: ModelListing::new(diagonal.product()),
        }
    }
}

/// A single computed value, as printed by `star` and `normalize`.
#[derive(Clone, Debug, Serialize)]
pub struct ValueReport {
    pub operation: String,
    pub input: String,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "report", rename_all = "kebab-case")]
pub enum Report {
    Validation(ValidationReport),
    Model(ModelListing),
    Diagonal(DiagonalListing),
    Residual(ResidualReport),
    Value(ValueReport),
    Reproduction(Reproduction),
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "FAIL"
    }
}

impl Report {
    /// Whether every verification carried by the report succeeded.
    pub fn passed(&self) -> bool {
        match self {
            Report::Validation(v) => v.valid,
            Report::Model(m) => m.passed(),
            Report::Diagonal(d) => d.chain_map && d.projections && d.model.passed(),
            Report::Residual(r) => r.pass,
            Report::Value(_) => true,
            Report::Reproduction(r) => r.pass,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Validation(v) => validation_text(&mut out, v),
            Report::Model(m) => model_text(&mut out, m),
            Report::Diagonal(d) => {
                let _ = writeln!(out, "diagonal of {}", d.label);
                for e in &d.delta {
                    let _ = writeln!(out, "  Delta({}) = {}", e.generator, e.value);
                }
                let _ = writeln!(out, "chain map: {}", verdict(d.chain_map));
                if !d.chain_map_failures.is_empty() {
                    let _ = writeln!(out, "  failing generators: {}", d.chain_map_failures.join(", "));
                }
                let _ = writeln!(out, "projections are identities: {}", verdict(d.projections));
                out.push('\n');
                model_text(&mut out, &d.model);
            }
            Report::Residual(r) => residual_text(&mut out, r),
            Report::Value(v) => {
                let _ = writeln!(out, "{}: {}", v.operation, v.input);
                let _ = writeln!(out, "{}", v.value);
            }
            Report::Reproduction(r) => reproduction_text(&mut out, r),
        }
        out
    }
}

fn validation_text(out: &mut String, v: &ValidationReport) {
    let _ = writeln!(out, "presentation {}: {}", v.label, if v.valid { "valid" } else { "INVALID" });
    let _ = writeln!(out, "minimal: {}", if v.minimal { "yes" } else { "no" });
    match (&v.filtration, &v.filtration_error) {
        (Some(stages), _) => {
            let _ = writeln!(out, "cone length: {}", v.cone_length.unwrap_or(stages.len()));
            for (i, stage) in stages.iter().enumerate() {
                let _ = writeln!(out, "  V{i} = {{{}}}", stage.join(", "));
            }
        }
        (None, Some(e)) => {
            let _ = writeln!(out, "cone length: none ({e})");
        }
        (None, None) => {
            let _ = writeln!(out, "cone length: none");
        }
    }
    for g in &v.generators {
        let line = g.line.map(|l| format!(", line {l}")).unwrap_or_default();
        let _ = writeln!(out, "  {} (degree {}{line})", g.name, g.degree);
        let _ = writeln!(out, "    d = {}", g.differential);
        if !g.homogeneous {
            let _ = writeln!(out, "    FAIL: not homogeneous of degree {}", g.degree as i64 - 1);
        }
        if g.d_squared_zero {
            let _ = writeln!(out, "    d^2 = {}", g.d_squared);
        } else {
            let _ = writeln!(out, "    FAIL: d^2 = {}", g.d_squared);
        }
        if !g.minimal {
            let _ = writeln!(out, "    not minimal: d has a linear term");
        }
    }
}

fn model_text(out: &mut String, m: &ModelListing) {
    let kind = match m.kind {
        ModelKind::Verified => "verified",
        ModelKind::CoH => "co-h",
        ModelKind::Candidate => "candidate",
    };
    let _ = writeln!(out, "model {} ({kind})", m.label);
    for g in &m.generators {
        let branch = branch_name(&g.branch);
        let _ = writeln!(out, "  D({}) = {}    [degree {}, {branch}]", g.name, g.differential, g.degree);
    }
    let _ = writeln!(out, "projection chain map: {}", verdict(m.projection));
    let _ = writeln!(out, "minimal: {}", verdict(m.minimal));
    residual_text(out, &m.residual);
}

fn branch_name(branch: &Branch) -> &'static str {
    match branch {
        Branch::LeftFactor => "left-factor",
        Branch::RightFactor => "right-factor",
        Branch::BothCycles => "both-cycles",
        Branch::LeftBoundary => "left-boundary",
        Branch::RightBoundary => "right-boundary",
        Branch::Mixed => "mixed",
        Branch::CoH => "co-h",
        Branch::Corrected => "corrected",
        Branch::Replaced => "replaced",
    }
}

fn residual_text(out: &mut String, r: &ResidualReport) {
    let _ = writeln!(out, "D^2 residuals for {}: {}", r.label, verdict(r.pass));
    for e in &r.entries {
        let mark = if e.zero { "" } else { "FAIL " };
        let _ = writeln!(out, "  {mark}D^2({}) = {}", e.generator, e.residual);
        let _ = writeln!(out, "    D({}) = {}", e.generator, e.differential);
    }
}

fn check_text(out: &mut String, c: &Check) {
    let _ = write!(out, "  [{}] {}", verdict(c.pass), c.name);
    if let Some(d) = &c.detail {
        let _ = write!(out, " ({d})");
    }
    out.push('\n');
}

fn reproduction_text(out: &mut String, r: &Reproduction) {
    let _ = writeln!(out, "{}: {}", r.target, r.description);
    let _ = writeln!(out, "checks:");
    for c in &r.checks {
        check_text(out, c);
    }
    let _ = writeln!(out, "comparisons with the printed displays:");
    for c in &r.comparisons {
        let v = match c.verdict {
            Verdict::Exact => "exact",
            Verdict::Deviations => "deviations",
            Verdict::Unexplained => "UNEXPLAINED",
        };
        let _ = writeln!(out, "  {} [{v}, {} printed terms]", c.key, c.printed_terms);
        let _ = writeln!(out, "    computed: {}", c.computed);
        for t in &c.terms {
            let note = match &t.status {
                TermStatus::Match => "match".to_string(),
                TermStatus::SignFlip => "sign-flip".to_string(),
                TermStatus::Spurious => "spurious".to_string(),
                TermStatus::Rescaled { factor } => format!("rescaled, factor {factor}"),
            };
            let _ = writeln!(out, "    printed {} : {note}", t.printed);
        }
        let _ = writeln!(out, "    unexplained residual: {}", c.residual);
    }
    let _ = writeln!(out, "result: {}", verdict(r.pass));
}
