//! Worked examples recomputed and compared with their printed displays.
//!
//! Each target recomputes the elements named in its data file and compares
//! them term by term. A target passes when all of its structural checks hold
//! and every printed display is explained by the computation up to
//! per-term rescaling; sign deviations are reported, not failed.

use std::sync::Arc;

use serde::Serialize;

use crate::compare::{compare, Comparison, Verdict};
use crate::diagonal::{build_diagonal_with, DiagonalModel};
use crate::error::{Error, Result};
use crate::io::{parse_dgl, parse_lie_expr, parse_lie_terms, parse_magma_expr};
use crate::magma::MagmaElement;
use crate::product::{build_candidate_model, build_product_model, lupton_smith_model, ProductGenerators, ProductModel};
use crate::{Dgl, GeneratorSet, Lie, Rational};

pub const TARGETS: [&str; 6] = ["ex2.4ii", "ex3.10", "ex3.11", "ex3.14", "diag4.1", "cone3"];

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool) -> Self {
        Check { name: name.into(), pass, detail: None }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Reproduction {
    pub target: String,
    pub description: String,
    pub comparisons: Vec<Comparison>,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl Reproduction {
    pub fn comparison(&self, key: &str) -> Option<&Comparison> {
        self.comparisons.iter().find(|c| c.key == key)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// The `expect` and `correct` statements of a data file.
#[derive(Clone, Debug, Default)]
pub struct ExpectedData {
    pub expects: Vec<(String, String)>,
    pub corrections: Vec<(String, String)>,
}

/// Parses `expect KEY = EXPR` and `correct GEN = EXPR` statements. A
/// statement runs until the next statement keyword; `#` starts a comment.
pub fn parse_expected(text: &str) -> Result<ExpectedData> {
    let mut out = ExpectedData::default();
    let mut current: Option<(bool, String)> = None;
    let flush = |cur: Option<(bool, String)>, out: &mut ExpectedData| -> Result<()> {
        let Some((is_expect, body)) = cur else { return Ok(()) };
        let (key, expr) = split_statement(&body)?;
        if is_expect { out.expects.push((key, expr)) } else { out.corrections.push((key, expr)) }
        Ok(())
    };
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        let trimmed = line.trim_start();
        let start = [("expect ", true), ("correct ", false)]
            .into_iter()
            .find(|(kw, _)| trimmed.starts_with(kw));
        if let Some((kw, is_expect)) = start {
            flush(current.take(), &mut out)?;
            current = Some((is_expect, trimmed[kw.len()..].to_string()));
        } else if let Some((_, body)) = current.as_mut() {
            body.push(' ');
            body.push_str(line.trim());
        } else if !trimmed.is_empty() {
            return Err(Error::OutsideDomain(format!("stray line in expected data: {trimmed}")));
        }
    }
    flush(current, &mut out)?;
    Ok(out)
}

fn split_statement(body: &str) -> Result<(String, String)> {
    let (key, expr) = body
        .rsplit_once(" = ")
        .ok_or_else(|| Error::OutsideDomain(format!("expected `KEY = EXPR`, found {body}")))?;
    Ok((key.trim().to_string(), expr.trim().to_string()))
}

fn data(target: &str) -> &'static str {
    match target {
        "ex2.4ii" => include_str!("../data/ex2_4ii.txt"),
        "ex3.10" => include_str!("../data/ex3_10.txt"),
        "ex3.11" => include_str!("../data/ex3_11.txt"),
        "ex3.14" => include_str!("../data/ex3_14.txt"),
        "diag4.1" => include_str!("../data/diag4_1.txt"),
        "cone3" => include_str!("../data/cone3.txt"),
        _ => unreachable!("checked by the caller"),
    }
}

/// What a data-file key may refer to.
struct Context<'a> {
    set: &'a Arc<GeneratorSet>,
    gens: Option<&'a ProductGenerators<Rational>>,
    model: Option<&'a ProductModel<Rational>>,
    diagonal: Option<&'a DiagonalModel<Rational>>,
}

impl Context<'_> {
    fn evaluate(&self, key: &str) -> Result<Lie> {
        if let Some(inner) = strip_call(key, "D") {
            let model = self.model.ok_or_else(|| unsupported(key))?;
            return Ok(model.d_named(inner)?.clone());
        }
        if let Some(inner) = strip_call(key, "Delta") {
            let diagonal = self.diagonal.ok_or_else(|| unsupported(key))?;
            return Ok(diagonal.delta_named(inner)?.clone());
        }
        if let Some(inner) = strip_call(key, "Gamma") {
            let diagonal = self.diagonal.ok_or_else(|| unsupported(key))?;
            let a = parse_magma_expr(inner, diagonal.base().set())?;
            return diagonal.gamma(&a);
        }
        if let Some((a, t)) = key.split_once(" star ") {
            let gens = self.gens.ok_or_else(|| unsupported(key))?;
            let a = parse_magma_expr(a, self.set)?;
            let t = parse_lie_expr(t, self.set)?;
            return gens.star(&a, &t);
        }
        if key.starts_with("sigma(") {
            let gens = self.gens.ok_or_else(|| unsupported(key))?;
            let mut rest = key;
            let mut sigmas = Vec::new();
            while let Some(tail) = rest.strip_prefix("sigma(") {
                let (name, tail) = tail.split_once(')').ok_or_else(|| unsupported(key))?;
                sigmas.push(gens.generator(name)?);
                rest = tail.trim_start();
            }
            let mut x = parse_lie_expr(rest, self.set)?;
            for s in sigmas.iter().rev() {
                x = gens.apply_sigma(s, &x)?;
            }
            return Ok(x);
        }
        Err(unsupported(key))
    }

    fn compare_all(&self, data: &ExpectedData, suffix: &str) -> Result<Vec<Comparison>> {
        data.expects
            .iter()
            .map(|(key, expr)| {
                let computed = self.evaluate(key)?;
                let printed = parse_lie_terms(expr, self.set)?;
                Ok(compare(format!("{key}{suffix}"), &computed, &printed))
            })
            .collect()
    }
}

fn strip_call<'a>(key: &'a str, name: &str) -> Option<&'a str> {
    key.strip_prefix(name)?.strip_prefix('(')?.strip_suffix(')')
}

fn unsupported(key: &str) -> Error {
    Error::OutsideDomain(format!("cannot evaluate `{key}` in this example"))
}

fn dgl(text: &str) -> Dgl {
    parse_dgl(text).expect("built-in presentation parses").presentation
}

fn copy_name(name: &str) -> String {
    match name {
        "a" => "x",
        "b" => "y",
        "c" => "z",
        "v" => "w",
        other => other,
    }
    .to_string()
}

fn model_checks(model: &ProductModel<Rational>) -> Vec<Check> {
    let residual = model.d_squared_residual();
    let failures: Vec<_> = residual.failures().map(|e| e.generator.clone()).collect();
    let mut d2 = Check::new("D^2 = 0 on every generator", residual.pass);
    if !failures.is_empty() {
        d2 = d2.with_detail(failures.join(", "));
    }
    vec![
        d2,
        Check::new("projection is a chain map", model.projection_check()),
        Check::new("model is minimal", model.minimality_check()),
    ]
}

/// Runs one target. Unknown targets are input errors.
pub fn reproduce(target: &str) -> Result<Reproduction> {
    if !TARGETS.contains(&target) {
        return Err(Error::OutsideDomain(format!(
            "unknown target `{target}`; expected one of {}",
            TARGETS.join(", ")
        )));
    }
    let expected = parse_expected(data(target))?;
    let (description, comparisons, checks) = match target {
        "ex2.4ii" => sphere_times_cp2(&expected)?,
        "ex3.10" => star_example(&expected, false)?,
        "ex3.11" => star_example(&expected, true)?,
        "ex3.14" => two_cone_product(&expected)?,
        "diag4.1" => diagonal_example(&expected)?,
        _ => three_cone_product(&expected)?,
    };
    let pass = checks.iter().all(|c| c.pass) && comparisons.iter().all(|c| c.verdict != Verdict::Unexplained);
    Ok(Reproduction { target: target.to_string(), description, comparisons, checks, pass })
}

type Outcome = (String, Vec<Comparison>, Vec<Check>);

fn sphere_times_cp2(expected: &ExpectedData) -> Result<Outcome> {
    let cp2 = dgl("dgl CP2; gen x 1; gen y 3; diff y = [x,x]");
    let mut comparisons = Vec::new();
    let mut checks = Vec::new();
    for degree in [2, 3] {
        let sphere = dgl(&format!("dgl S; gen v {degree}"));
        let model = build_product_model(&sphere, &cp2)?;
        let ctx = Context { set: model.set(), gens: Some(model.gens()), model: Some(&model), diagonal: None };
        comparisons.extend(ctx.compare_all(expected, &format!(" with |v| = {degree}"))?);
        for mut c in model_checks(&model) {
            c.name = format!("{} with |v| = {degree}", c.name);
            checks.push(c);
        }
        let ls = lupton_smith_model(&sphere, &cp2)?;
        let agree = model.gens().suspension_gens().all(|g| model.d(g).equals(ls.d(g)));
        checks.push(Check::new(format!("co-H formula agrees with |v| = {degree}"), agree));
    }
    Ok(("sphere times CP^2, |x| = 1, |y| = 3, dy = [x,x]".into(), comparisons, checks))
}

fn star_example(expected: &ExpectedData, with_x: bool) -> Result<Outcome> {
    let left = dgl("dgl V; gen a 2; gen b 3; gen c 7");
    let right = if with_x { dgl("dgl W; gen x 2; gen y 3; gen z 7") } else { dgl("dgl W; gen y 3; gen z 7") };
    let model = build_product_model(&left, &right)?;
    let gens = model.gens();
    let set = gens.set();
    let ctx = Context { set, gens: Some(gens), model: Some(&model), diagonal: None };
    let comparisons = ctx.compare_all(expected, "")?;
    let j = MagmaElement::jacobiator(
        &MagmaElement::named(set, "a")?,
        &MagmaElement::named(set, "b")?,
        &MagmaElement::named(set, "c")?,
    );
    let mut checks = Vec::new();
    if with_x {
        let t = parse_lie_expr("[x,[y,z]]", set)?;
        let js = gens.star(&j, &t)?;
        let triple = ctx.evaluate("sigma(a) sigma(b) sigma(c) [x,[y,z]]")?;
        checks.push(Check::new("J(a,b,c) star [x,[y,z]] is nonzero", !js.is_zero()));
        checks.push(Check::new(
            "J(a,b,c) star [x,[y,z]] = -D(sigma_a sigma_b sigma_c [x,[y,z]])",
            (js + model.apply(&triple)).is_zero(),
        ));
        Ok(("star products of a(bc), (ab)c, b(ac) against [x,[y,z]]".into(), comparisons, checks))
    } else {
        let t = parse_lie_expr("[y,z]", set)?;
        checks.push(Check::new("J(a,b,c) star [y,z] = 0", gens.star(&j, &t)?.is_zero()));
        Ok(("star products of a(bc), (ab)c, b(ac) against [y,z]".into(), comparisons, checks))
    }
}

fn two_cone_product(expected: &ExpectedData) -> Result<Outcome> {
    let x = dgl("dgl X; gen a 2; gen b 3; gen c 7; gen v 13; diff v = [a,[b,c]]");
    let y = x.renamed("X'", copy_name)?;
    let model = build_product_model(&x, &y)?;
    let ctx = Context { set: model.set(), gens: Some(model.gens()), model: Some(&model), diagonal: None };
    let comparisons = ctx.compare_all(expected, "")?;
    let mut checks = model_checks(&model);
    checks.push(Check::new("suspension terms lie in the ideal", model.suspension_ideal_check()));
    Ok(("product of two copies of the 2-cone dv = [a,[b,c]]".into(), comparisons, checks))
}

fn diagonal_example(expected: &ExpectedData) -> Result<Outcome> {
    let x = dgl("dgl X; gen a 2; gen b 2; gen c 2; gen v 7; diff v = [a,[b,c]]");
    let diagonal = build_diagonal_with(&x, copy_name)?;
    let ctx = Context { set: diagonal.set(), gens: None, model: Some(diagonal.product()), diagonal: Some(&diagonal) };
    let comparisons = ctx.compare_all(expected, "")?;
    let failures = diagonal.chain_map_failures();
    let mut chain = Check::new("D(Delta g) = Delta(dg) on every generator", failures.is_empty());
    if !failures.is_empty() {
        let names: Vec<_> = failures.iter().map(|&g| x.set().name(g).to_string()).collect();
        chain = chain.with_detail(names.join(", "));
    }
    let abc = parse_magma_expr("a*(b*c)", x.set())?;
    let (lhs, rhs) = diagonal.gamma_boundary_check(&abc)?;
    let checks = vec![
        chain,
        Check::new("both projections of Delta are the identity", diagonal.projection_identities()),
        Check::new("D Gamma(a(bc)) = Delta[a,[b,c]] - [a,[b,c]] - [x,[y,z]]", lhs.equals(&rhs)),
    ];
    Ok(("diagonal of the 2-cone dv = [a,[b,c]] with all low degrees 2".into(), comparisons, checks))
}

fn three_cone_product(expected: &ExpectedData) -> Result<Outcome> {
    let y = dgl("dgl Y; gen a 2; gen b 3; gen c 7; gen v 13; diff c = [b,b]; diff v = [a,[b,c]]");
    let copy = y.renamed("Y'", copy_name)?;
    let (model, report) = build_candidate_model(&y, &copy, &[])?;
    let ctx = Context { set: model.set(), gens: Some(model.gens()), model: Some(&model), diagonal: None };
    let comparisons = ctx.compare_all(expected, "")?;
    let failing: Vec<_> = report.failures().map(|e| e.generator.clone()).collect();
    let mut checks = vec![Check::new(
        "uncorrected D^2 fails exactly on s(v,w)",
        failing == ["s(v,w)"],
    )
    .with_detail(format!("failing: {}", if failing.is_empty() { "none".into() } else { failing.join(", ") }))];
    let mut corrected = model.clone();
    for (name, expr) in &expected.corrections {
        let g = model.set().require(name)?;
        corrected = corrected.with_correction(g, &parse_lie_expr(expr, model.set())?)?;
    }
    let after = corrected.d_squared_residual();
    checks.push(Check::new("corrected D^2 = 0 on every generator", after.pass));
    checks.push(Check::new("corrected projection is a chain map", corrected.projection_check()));
    Ok(("product of two copies of the 3-cone dc = [b,b], dv = [a,[b,c]]".into(), comparisons, checks))
}
