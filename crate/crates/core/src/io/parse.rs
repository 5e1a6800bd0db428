//! Parsers for presentation files, Lie expressions and magma expressions.
//!
//! ```text
//! file    := (stmt (NEWLINE | ';'))*
//! stmt    := 'dgl' NAME | 'gen' GEN INT ['left' | 'right'] | 'diff' GEN '=' EXPR
//! EXPR    := ['-'] TERM (('+' | '-') TERM)*
//! TERM    := [RATIONAL '*'] FACTOR
//! FACTOR  := IDENT | 's(' IDENT ',' IDENT ')' | '[' EXPR ',' EXPR ']' | '0'
//! MEXPR   := ['-'] MTERM (('+' | '-') MTERM)*
//! MTERM   := [RATIONAL '*'] (MATOM | MATOM '*' MATOM)
//! MATOM   := IDENT | 's(' IDENT ',' IDENT ')' | '(' MATOM '*' MATOM ')'
//! ```
//!
//! `#` starts a comment. Identifiers start with a letter, `_` or a
//! non-ASCII character and continue with those, digits and `'`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::LieElement;
use crate::dgl::DglPresentation;
use crate::generators::{suspension_name, Generator, GeneratorSet, Origin};
use crate::magma::{MagmaElement, MagmaTree};
use crate::{Lie, Magma, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(" or "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    Newline,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::Newline => f.write_str("end of line"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

fn err(pos: Pos, message: impl Into<String>, expected: &[&str]) -> ParseError {
    ParseError {
        line: pos.line,
        column: pos.column,
        message: message.into(),
        expected: expected.iter().map(|s| s.to_string()).collect(),
    }
}

fn lex(text: &str, line_offset: usize) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1 + line_offset;
        let chars: Vec<char> = line.chars().collect();
        let mut j = 0;
        while j < chars.len() {
            let c = chars[j];
            let pos = Pos { line: line_no, column: j + 1 };
            if c == '#' {
                break;
            } else if c.is_whitespace() {
                j += 1;
            } else if c.is_ascii_digit() {
                let start = j;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let s: String = chars[start..j].iter().collect();
                out.push((Tok::Int(s.parse().expect("digits")), pos));
            } else if c.is_alphabetic() || c == '_' || !c.is_ascii() {
                let start = j;
                while j < chars.len() && is_ident_char(chars[j]) {
                    j += 1;
                }
                out.push((Tok::Ident(chars[start..j].iter().collect()), pos));
            } else if "[](),=+-*/;".contains(c) {
                out.push((Tok::Sym(c), pos));
                j += 1;
            } else {
                return Err(err(pos, format!("unexpected character `{c}`"), &[]));
            }
        }
        out.push((Tok::Newline, Pos { line: line_no, column: chars.len() + 1 }));
    }
    let end = out.last().map(|t| t.1).unwrap_or(Pos { line: 1, column: 1 });
    out.push((Tok::Eof, end));
    Ok(out)
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\'' || !(c.is_ascii() || c.is_whitespace())
}

/// Unresolved expression syntax.
#[derive(Clone, Debug)]
enum Factor {
    Name(String, Pos),
    Bracket(Box<Sum>, Box<Sum>),
    Product(Box<Factor>, Box<Factor>),
    Zero,
}

type Sum = Vec<(Rational, Factor)>;

struct Parser {
    toks: Vec<(Tok, Pos)>,
    i: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.i].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.i].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.i].clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn at_sym(&self, c: char) -> bool {
        *self.peek() == Tok::Sym(c)
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        if self.at_sym(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&[&format!("`{c}`")]))
        }
    }

    fn unexpected(&self, expected: &[&str]) -> ParseError {
        err(self.pos(), format!("unexpected {}", self.peek()), expected)
    }

    fn ident(&mut self) -> Result<(String, Pos), ParseError> {
        match self.bump() {
            (Tok::Ident(s), p) => Ok((s, p)),
            (_, _) => {
                self.i -= 1;
                Err(self.unexpected(&["identifier"]))
            }
        }
    }

    /// A generator name: `IDENT` or `s(IDENT,IDENT)`.
    fn gen_name(&mut self) -> Result<(String, Pos), ParseError> {
        let (name, pos) = self.ident()?;
        if name == "s" && self.at_sym('(') {
            self.bump();
            let (l, _) = self.ident()?;
            self.expect_sym(',')?;
            let (r, _) = self.ident()?;
            self.expect_sym(')')?;
            return Ok((suspension_name(&l, &r), pos));
        }
        Ok((name, pos))
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let Tok::Int(n) = self.bump().0 else { unreachable!() };
        if self.at_sym('/') {
            self.bump();
            let pos = self.pos();
            match self.bump().0 {
                Tok::Int(d) if !d.is_zero() => Ok(Rational::new(n, d)),
                Tok::Int(_) => Err(err(pos, "zero denominator", &[])),
                _ => {
                    self.i -= 1;
                    Err(self.unexpected(&["integer"]))
                }
            }
        } else {
            Ok(Rational::from_integer(n))
        }
    }

    fn sum(&mut self, magma: bool) -> Result<Sum, ParseError> {
        let mut out = Vec::new();
        let mut sign = Rational::one();
        if self.at_sym('-') {
            self.bump();
            sign = -sign;
        } else if self.at_sym('+') {
            self.bump();
        }
        loop {
            let (c, f) = self.term(magma)?;
            out.push((c * sign.clone(), f));
            if self.at_sym('+') {
                sign = Rational::one();
            } else if self.at_sym('-') {
                sign = -Rational::one();
            } else {
                break;
            }
            self.bump();
        }
        Ok(out)
    }

    fn term(&mut self, magma: bool) -> Result<(Rational, Factor), ParseError> {
        if let Tok::Int(n) = self.peek() {
            let is_zero_literal = n.is_zero() && self.toks[self.i + 1].0 != Tok::Sym('/');
            if is_zero_literal && self.toks[self.i + 1].0 != Tok::Sym('*') {
                self.bump();
                return Ok((Rational::one(), Factor::Zero));
            }
            let c = self.rational()?;
            if !self.at_sym('*') {
                return Err(self.unexpected(&["`*`"]));
            }
            self.bump();
            let f = if magma { self.magma_product()? } else { self.factor()? };
            return Ok((c, f));
        }
        let f = if magma { self.magma_product()? } else { self.factor()? };
        Ok((Rational::one(), f))
    }

    fn factor(&mut self) -> Result<Factor, ParseError> {
        match self.peek() {
            Tok::Ident(_) => {
                let (name, pos) = self.gen_name()?;
                Ok(Factor::Name(name, pos))
            }
            Tok::Sym('[') => {
                self.bump();
                let a = self.sum(false)?;
                self.expect_sym(',')?;
                let b = self.sum(false)?;
                self.expect_sym(']')?;
                Ok(Factor::Bracket(Box::new(a), Box::new(b)))
            }
            Tok::Int(n) if n.is_zero() => {
                self.bump();
                Ok(Factor::Zero)
            }
            _ => Err(self.unexpected(&["identifier", "`[`", "`0`"])),
        }
    }

    fn magma_atom(&mut self) -> Result<Factor, ParseError> {
        match self.peek() {
            Tok::Ident(_) => {
                let (name, pos) = self.gen_name()?;
                Ok(Factor::Name(name, pos))
            }
            Tok::Sym('(') => {
                self.bump();
                let a = self.magma_atom()?;
                self.expect_sym('*')?;
                let b = self.magma_atom()?;
                self.expect_sym(')')?;
                Ok(Factor::Product(Box::new(a), Box::new(b)))
            }
            _ => Err(self.unexpected(&["identifier", "`(`"])),
        }
    }

    fn magma_product(&mut self) -> Result<Factor, ParseError> {
        let a = self.magma_atom()?;
        if !self.at_sym('*') {
            return Ok(a);
        }
        self.bump();
        let b = self.magma_atom()?;
        if self.at_sym('*') {
            return Err(err(self.pos(), "ambiguous product; add parentheses", &[]));
        }
        Ok(Factor::Product(Box::new(a), Box::new(b)))
    }

    fn end_of_statement(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            Tok::Newline | Tok::Sym(';') | Tok::Eof => Ok(()),
            _ => Err(self.unexpected(&["end of statement"])),
        }
    }
}

fn resolve_lie(sum: &Sum, set: &Arc<GeneratorSet>) -> Result<Lie, ParseError> {
    let mut out = LieElement::zero(set);
    for (c, f) in sum {
        out += resolve_lie_factor(f, set)?.scale(c);
    }
    Ok(out)
}

fn resolve_lie_factor(f: &Factor, set: &Arc<GeneratorSet>) -> Result<Lie, ParseError> {
    match f {
        Factor::Name(n, pos) => match set.lookup(n) {
            Some(g) => Ok(LieElement::generator(set, g)),
            None => Err(err(*pos, format!("unknown generator `{n}`"), &[])),
        },
        Factor::Bracket(a, b) => Ok(resolve_lie(a, set)?.bracket(&resolve_lie(b, set)?)),
        Factor::Zero => Ok(LieElement::zero(set)),
        Factor::Product(..) => unreachable!("products only occur in magma expressions"),
    }
}

fn resolve_magma_tree(f: &Factor, set: &GeneratorSet) -> Result<Option<MagmaTree>, ParseError> {
    match f {
        Factor::Name(n, pos) => match set.lookup(n) {
            Some(g) => Ok(Some(MagmaTree::Leaf(g))),
            None => Err(err(*pos, format!("unknown generator `{n}`"), &[])),
        },
        Factor::Product(a, b) => {
            let (a, b) = (resolve_magma_tree(a, set)?, resolve_magma_tree(b, set)?);
            Ok(a.zip(b).map(|(a, b)| MagmaTree::node(a, b)))
        }
        Factor::Zero => Ok(None),
        Factor::Bracket(..) => unreachable!("brackets only occur in Lie expressions"),
    }
}

fn parser_for(text: &str) -> Result<Parser, ParseError> {
    let toks: Vec<_> = lex(text, 0)?
        .into_iter()
        .filter(|(t, _)| *t != Tok::Newline)
        .collect();
    Ok(Parser { toks, i: 0 })
}

fn finish(p: &Parser) -> Result<(), ParseError> {
    if *p.peek() == Tok::Eof {
        Ok(())
    } else {
        Err(p.unexpected(&["`+`", "`-`", "end of input"]))
    }
}

/// Parses and normalizes a Lie expression over `set`.
pub fn parse_lie_expr(text: &str, set: &Arc<GeneratorSet>) -> Result<Lie, ParseError> {
    let mut p = parser_for(text)?;
    let sum = p.sum(false)?;
    finish(&p)?;
    resolve_lie(&sum, set)
}

/// Parses a magma expression over `set`, without any normalization.
pub fn parse_magma_expr(text: &str, set: &Arc<GeneratorSet>) -> Result<Magma, ParseError> {
    let mut p = parser_for(text)?;
    let sum = p.sum(true)?;
    finish(&p)?;
    let mut out = MagmaElement::zero(set);
    for (c, f) in &sum {
        if let Some(t) = resolve_magma_tree(f, set)? {
            out.add_term(t, c.clone());
        }
    }
    Ok(out)
}

/// One top-level term of a sum, kept apart from its neighbours.
#[derive(Clone, Debug)]
pub struct PrintedTerm {
    pub text: String,
    pub value: Lie,
}

fn render_sum(sum: &Sum) -> String {
    let mut out = String::new();
    for (i, (c, f)) in sum.iter().enumerate() {
        out.push_str(&render_term(c, f, i == 0));
    }
    out
}

fn render_term(c: &Rational, f: &Factor, first: bool) -> String {
    let mut out = String::new();
    let negative = *c < Rational::zero();
    match (first, negative) {
        (true, true) => out.push('-'),
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
        (true, false) => {}
    }
    let abs = if negative { -c.clone() } else { c.clone() };
    if !abs.is_one() {
        out.push_str(&format!("{abs}*"));
    }
    render_factor(f, &mut out);
    out
}

fn render_factor(f: &Factor, out: &mut String) {
    match f {
        Factor::Name(n, _) => out.push_str(n),
        Factor::Zero => out.push('0'),
        Factor::Bracket(a, b) => {
            out.push('[');
            out.push_str(&render_sum(a));
            out.push(',');
            out.push_str(&render_sum(b));
            out.push(']');
        }
        Factor::Product(a, b) => {
            out.push('(');
            render_factor(a, out);
            out.push('*');
            render_factor(b, out);
            out.push(')');
        }
    }
}

/// Parses a Lie expression and normalizes each top-level term separately.
pub fn parse_lie_terms(text: &str, set: &Arc<GeneratorSet>) -> Result<Vec<PrintedTerm>, ParseError> {
    let mut p = parser_for(text)?;
    let sum = p.sum(false)?;
    finish(&p)?;
    let mut out = Vec::new();
    for (c, f) in &sum {
        if matches!(f, Factor::Zero) {
            continue;
        }
        let value = resolve_lie_factor(f, set)?.scale(c);
        out.push(PrintedTerm { text: render_term(c, f, true), value });
    }
    Ok(out)
}

/// A parsed presentation with the source line of each declaration.
#[derive(Clone, Debug)]
pub struct DglFile {
    pub presentation: DglPresentation<Rational>,
    pub gen_lines: HashMap<String, usize>,
    pub diff_lines: HashMap<String, usize>,
}

impl DglFile {
    pub fn line_of(&self, generator: &str) -> Option<usize> {
        self.diff_lines.get(generator).or_else(|| self.gen_lines.get(generator)).copied()
    }
}

/// Parses a presentation file. Differentials must be homogeneous of degree
/// one less than their generator; further checks are left to validation.
pub fn parse_dgl(text: &str) -> Result<DglFile, ParseError> {
    let mut p = Parser { toks: lex(text, 0)?, i: 0 };
    let mut label: Option<String> = None;
    let mut gens: Vec<(Generator, Pos)> = Vec::new();
    let mut diffs: Vec<(String, Pos, Sum)> = Vec::new();
    loop {
        match p.peek().clone() {
            Tok::Eof => break,
            Tok::Newline | Tok::Sym(';') => {
                p.bump();
                continue;
            }
            Tok::Ident(kw) if kw == "dgl" => {
                let pos = p.bump().1;
                let (name, _) = p.ident()?;
                if label.replace(name).is_some() {
                    return Err(err(pos, "duplicate `dgl` line", &[]));
                }
            }
            Tok::Ident(kw) if kw == "gen" => {
                p.bump();
                let (name, pos) = p.gen_name()?;
                let dpos = p.pos();
                let degree = match p.bump().0 {
                    Tok::Int(d) => d,
                    _ => {
                        p.i -= 1;
                        return Err(p.unexpected(&["degree"]));
                    }
                };
                let degree: u32 = match u32::try_from(&degree) {
                    Ok(d) if d >= 1 => d,
                    _ => return Err(err(dpos, format!("degree {degree} of `{name}` must be a positive integer"), &[])),
                };
                let mut origin = Origin::LeftFactor;
                if let Tok::Ident(tag) = p.peek().clone() {
                    origin = match tag.as_str() {
                        "left" => Origin::LeftFactor,
                        "right" => Origin::RightFactor,
                        _ => return Err(p.unexpected(&["`left`", "`right`", "end of statement"])),
                    };
                    p.bump();
                }
                if let Some((l, r)) = split_suspension(&name) {
                    origin = Origin::Suspension { left: l, right: r };
                }
                if gens.iter().any(|(g, _)| g.name == name) {
                    return Err(err(pos, format!("duplicate generator `{name}`"), &[]));
                }
                gens.push((Generator::with_origin(name, degree, origin), pos));
            }
            Tok::Ident(kw) if kw == "diff" => {
                p.bump();
                let (name, pos) = p.gen_name()?;
                p.expect_sym('=')?;
                let sum = p.sum(false)?;
                if diffs.iter().any(|(n, _, _)| *n == name) {
                    return Err(err(pos, format!("second differential for `{name}`"), &[]));
                }
                diffs.push((name, pos, sum));
            }
            _ => return Err(p.unexpected(&["`dgl`", "`gen`", "`diff`"])),
        }
        p.end_of_statement()?;
    }
    let first = gens.first().map(|g| g.1).unwrap_or(Pos { line: 1, column: 1 });
    let gen_lines = gens.iter().map(|(g, p)| (g.name.clone(), p.line)).collect();
    let set = GeneratorSet::new(gens.into_iter().map(|(g, _)| g).collect())
        .map_err(|e| err(first, e.to_string(), &[]))?;
    let mut values = Vec::new();
    let mut diff_lines = HashMap::new();
    for (name, pos, sum) in diffs {
        let g = set.lookup(&name).ok_or_else(|| err(pos, format!("unknown generator `{name}`"), &[]))?;
        let value = resolve_lie(&sum, &set)?;
        let expected = set.degree(g) as i64 - 1;
        match value.degree() {
            Ok(None) => {}
            Ok(Some(d)) if d as i64 == expected => {}
            Ok(Some(d)) => {
                return Err(err(pos, format!("d({name}) has degree {d}, expected {expected}"), &[]));
            }
            Err(_) => return Err(err(pos, format!("d({name}) is not homogeneous"), &[])),
        }
        diff_lines.insert(name, pos.line);
        values.push((g, value));
    }
    let presentation = DglPresentation::new(label.unwrap_or_else(|| "dgl".into()), &set, values)
        .expect("values built over the parsed set");
    Ok(DglFile { presentation, gen_lines, diff_lines })
}

fn split_suspension(name: &str) -> Option<(String, String)> {
    let inner = name.strip_prefix("s(")?.strip_suffix(')')?;
    let (l, r) = inner.split_once(',')?;
    Some((l.to_string(), r.to_string()))
}
