//! The graded Lyndon basis and its structure constants.
//!
//! Basis elements are standard bracketings `P_w` of Lyndon words `w`, plus a
//! square `[P_u, P_u]` for every Lyndon word `u` of odd degree. Brackets of
//! basis elements are rewritten back into the basis by the usual Lyndon
//! rewriting, extended by the graded Jacobi identity for squares.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use smallvec::SmallVec;

use super::expr::BracketTree;
use super::lyndon::{is_lyndon, square_root, standard_split};
use crate::generators::{Gen, GeneratorSet};
use crate::scalar::koszul;

pub type Word = SmallVec<[Gen; 8]>;

/// A basis element of the free graded Lie algebra.
///
/// The derived order (bracket length, number of suspension letters, word,
/// square flag) is the canonical print order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisKey {
    length: u32,
    suspensions: u32,
    word: Word,
    square: bool,
}

impl BasisKey {
    pub fn letter(set: &GeneratorSet, g: Gen) -> Self {
        Self::build(set, SmallVec::from_slice(&[g]), false)
    }

    /// The standard bracketing of a Lyndon word.
    pub fn lyndon(set: &GeneratorSet, word: &[Gen]) -> Option<Self> {
        is_lyndon(word).then(|| Self::build(set, SmallVec::from_slice(word), false))
    }

    /// `[P_u, P_u]` for a Lyndon word `u` of odd degree.
    pub fn square(set: &GeneratorSet, root: &[Gen]) -> Option<Self> {
        let degree: u32 = root.iter().map(|&g| set.degree(g)).sum();
        if !is_lyndon(root) || degree.is_multiple_of(2) {
            return None;
        }
        let mut word = Word::from_slice(root);
        word.extend_from_slice(root);
        Some(Self::build(set, word, true))
    }

    /// Interprets a word as a basis index: a Lyndon word or the square of an
    /// odd Lyndon word.
    pub fn from_word(set: &GeneratorSet, word: &[Gen]) -> Option<Self> {
        Self::lyndon(set, word).or_else(|| square_root(word).and_then(|u| Self::square(set, u)))
    }

    fn build(set: &GeneratorSet, word: Word, square: bool) -> Self {
        let suspensions = word.iter().filter(|&&g| set.is_suspension(g)).count() as u32;
        BasisKey { length: word.len() as u32, suspensions, word, square }
    }

    pub fn word(&self) -> &[Gen] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn is_square(&self) -> bool {
        self.square
    }

    pub fn is_letter(&self) -> bool {
        self.word.len() == 1
    }

    pub fn as_letter(&self) -> Option<Gen> {
        self.is_letter().then(|| self.word[0])
    }

    pub fn suspension_count(&self) -> u32 {
        self.suspensions
    }

    pub fn degree(&self, set: &GeneratorSet) -> u32 {
        self.word.iter().map(|&g| set.degree(g)).sum()
    }

    /// The root `u` of a square `[P_u, P_u]`.
    pub fn square_root(&self) -> Option<&[Gen]> {
        self.square.then(|| &self.word[..self.word.len() / 2])
    }

    /// Left and right factors of the top bracket, `None` for letters.
    pub fn children(&self, set: &GeneratorSet) -> Option<(BasisKey, BasisKey)> {
        if self.square {
            let u = Self::build(set, Word::from_slice(&self.word[..self.word.len() / 2]), false);
            return Some((u.clone(), u));
        }
        if self.word.len() < 2 {
            return None;
        }
        let i = standard_split(&self.word);
        Some((
            Self::build(set, Word::from_slice(&self.word[..i]), false),
            Self::build(set, Word::from_slice(&self.word[i..]), false),
        ))
    }

    /// The bracket tree this basis element stands for.
    pub fn tree(&self, set: &GeneratorSet) -> BracketTree {
        match self.children(set) {
            None => BracketTree::Leaf(self.word[0]),
            Some((l, r)) => BracketTree::node(l.tree(set), r.tree(set)),
        }
    }

    pub fn display<'a>(&'a self, set: &'a GeneratorSet) -> impl fmt::Display + 'a {
        KeyDisplay { key: self, set }
    }
}

struct KeyDisplay<'a> {
    key: &'a BasisKey,
    set: &'a GeneratorSet,
}

impl fmt::Display for KeyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.key.children(self.set) {
            None => f.write_str(self.set.name(self.key.word[0])),
            Some((l, r)) => {
                write!(f, "[{},{}]", l.display(self.set), r.display(self.set))
            }
        }
    }
}

pub(crate) type Structure = Arc<[(BasisKey, i64)]>;

/// Memo table of basis brackets, owned by the generator set.
#[derive(Default)]
pub(crate) struct BracketCache(Mutex<HashMap<(BasisKey, BasisKey), Structure>>);

/// Guards against a rewriting loop; far beyond any depth reached in practice.
const MAX_DEPTH: usize = 10_000;

/// `[P_x, P_y]` expanded in the basis, with integer structure constants.
pub(crate) fn bracket_keys(set: &GeneratorSet, x: &BasisKey, y: &BasisKey) -> Structure {
    bracket_at(set, x, y, 0)
}

fn bracket_at(set: &GeneratorSet, x: &BasisKey, y: &BasisKey, depth: usize) -> Structure {
    assert!(depth < MAX_DEPTH, "basis rewriting did not terminate");
    let key = (x.clone(), y.clone());
    if let Some(hit) = set.brackets.0.lock().unwrap().get(&key) {
        return hit.clone();
    }
    let value: Structure = compute(set, x, y, depth).into();
    set.brackets.0.lock().unwrap().insert(key, value.clone());
    value
}

#[derive(Default)]
struct Acc(HashMap<BasisKey, i64>);

impl Acc {
    fn add(&mut self, key: BasisKey, c: i64) {
        let e = self.0.entry(key).or_insert(0);
        *e += c;
    }

    fn add_all(&mut self, terms: &[(BasisKey, i64)], c: i64) {
        for (k, v) in terms {
            self.add(k.clone(), v * c);
        }
    }

    fn finish(self) -> Vec<(BasisKey, i64)> {
        let mut out: Vec<_> = self.0.into_iter().filter(|(_, c)| *c != 0).collect();
        out.sort();
        out
    }
}

/// `[P_x, Σ c_k P_k]` accumulated into `acc` with factor `c`.
fn bracket_left_with(
    set: &GeneratorSet,
    acc: &mut Acc,
    x: &BasisKey,
    ys: &[(BasisKey, i64)],
    c: i64,
    depth: usize,
) {
    for (y, cy) in ys {
        acc.add_all(&bracket_at(set, x, y, depth + 1), c * cy);
    }
}

fn compute(set: &GeneratorSet, x: &BasisKey, y: &BasisKey, depth: usize) -> Vec<(BasisKey, i64)> {
    let dx = x.degree(set);
    let dy = y.degree(set);
    let mut acc = Acc::default();

    if x.square {
        let u = BasisKey::build(set, Word::from_slice(x.square_root().unwrap()), false);
        if *y == u || *y == *x {
            return Vec::new();
        }
        // [[u,u],y] = 2[u,[u,y]] for u odd.
        let inner = bracket_at(set, &u, y, depth + 1);
        bracket_left_with(set, &mut acc, &u, &inner, 2, depth);
        return acc.finish();
    }
    if y.square {
        // |y| is even, so [x,y] = -[y,x].
        acc.add_all(&bracket_at(set, y, x, depth + 1), -1);
        return acc.finish();
    }
    match x.word.cmp(&y.word) {
        std::cmp::Ordering::Equal => {
            if dx % 2 == 1 {
                vec![(BasisKey::build(set, joined(x, y), true), 1)]
            } else {
                Vec::new()
            }
        }
        std::cmp::Ordering::Greater => {
            acc.add_all(&bracket_at(set, y, x, depth + 1), -koszul(dx, dy));
            acc.finish()
        }
        std::cmp::Ordering::Less => {
            let split = (x.word.len() > 1).then(|| standard_split(&x.word));
            match split {
                Some(i) if x.word[i..] < y.word[..] => {
                    let x1 = BasisKey::build(set, Word::from_slice(&x.word[..i]), false);
                    let x2 = BasisKey::build(set, Word::from_slice(&x.word[i..]), false);
                    // [[x1,x2],y] = [x1,[x2,y]] - (-1)^{|x1||x2|}[x2,[x1,y]]
                    let sign = koszul(x1.degree(set), x2.degree(set));
                    let a = bracket_at(set, &x2, y, depth + 1);
                    bracket_left_with(set, &mut acc, &x1, &a, 1, depth);
                    let b = bracket_at(set, &x1, y, depth + 1);
                    bracket_left_with(set, &mut acc, &x2, &b, -sign, depth);
                    acc.finish()
                }
                _ => vec![(BasisKey::build(set, joined(x, y), false), 1)],
            }
        }
    }
}

fn joined(x: &BasisKey, y: &BasisKey) -> Word {
    let mut w = x.word.clone();
    w.extend_from_slice(&y.word);
    w
}
