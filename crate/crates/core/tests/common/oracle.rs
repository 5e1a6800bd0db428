//! Independent dimension oracles for the free graded Lie algebra.
//!
//! Per content (multiset of letters), the Lie part of the tensor algebra is
//! the image of the right-normed bracketing map `θ`, and `θ` restricted to it
//! is multiplication by the length. So the dimension of a content component
//! is either the rank of `θ`'s image (explicit elimination) or `tr θ / n`.

use std::collections::BTreeMap;

use num_traits::Zero;
use qmodel_core::{BracketTree, Gen, GeneratorSet, Rational, Tensor};

/// All contents `counts[i]` with `Σ counts[i] * deg[i] == n`.
pub fn contents(degrees: &[u32], n: u32) -> Vec<Vec<usize>> {
    fn rec(degrees: &[u32], left: u32, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == degrees.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let d = degrees[cur.len()];
        for k in 0..=(left / d) {
            cur.push(k as usize);
            rec(degrees, left - k * d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(degrees, n, &mut Vec::new(), &mut out);
    out
}

/// All words with the given content.
pub fn words_of_content(counts: &[usize]) -> Vec<Vec<Gen>> {
    fn rec(counts: &mut [usize], cur: &mut Vec<Gen>, total: usize, out: &mut Vec<Vec<Gen>>) {
        if cur.len() == total {
            out.push(cur.clone());
            return;
        }
        for i in 0..counts.len() {
            if counts[i] > 0 {
                counts[i] -= 1;
                cur.push(Gen(i as u32));
                rec(counts, cur, total, out);
                cur.pop();
                counts[i] += 1;
            }
        }
    }
    let total = counts.iter().sum();
    let mut out = Vec::new();
    rec(&mut counts.to_vec(), &mut Vec::new(), total, &mut out);
    out
}

pub fn right_normed(word: &[Gen]) -> BracketTree {
    let mut t = BracketTree::Leaf(*word.last().unwrap());
    for &g in word[..word.len() - 1].iter().rev() {
        t = BracketTree::node(BracketTree::Leaf(g), t);
    }
    t
}

/// Rank over ℚ of a family of tensors, by Gaussian elimination.
pub fn rank(rows: Vec<Tensor>) -> usize {
    let mut pivots: BTreeMap<Vec<Gen>, BTreeMap<Vec<Gen>, Rational>> = BTreeMap::new();
    for t in rows {
        let mut row: BTreeMap<Vec<Gen>, Rational> =
            t.terms().iter().map(|(w, c)| (w.clone(), c.clone())).collect();
        while let Some(lead) = row.keys().find(|w| pivots.contains_key(*w)).cloned() {
            let p = &pivots[&lead];
            let f = row[&lead].clone() / p[&lead].clone();
            for (w, c) in p {
                let e = row.entry(w.clone()).or_insert_with(Rational::zero);
                *e -= f.clone() * c.clone();
                if e.is_zero() {
                    row.remove(w);
                }
            }
        }
        if let Some(lead) = row.keys().next().cloned() {
            pivots.insert(lead, row);
        }
    }
    pivots.len()
}

/// Dimension of a content component by explicit elimination of all
/// right-normed brackets.
pub fn dimension_by_elimination(set: &GeneratorSet, counts: &[usize]) -> usize {
    let rows = words_of_content(counts)
        .iter()
        .map(|w| right_normed(w).expand::<Rational>(set))
        .collect();
    rank(rows)
}

/// Coefficient of `w` in the expansion of the right-normed bracket of `w`.
fn theta_diagonal(set: &GeneratorSet, w: &[Gen]) -> i64 {
    let n = w.len();
    // dp[(i, j)]: signed number of ways the letters w_k..w_n built w[i..j].
    let mut dp: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for i in 0..n {
        if w[i] == w[n - 1] {
            dp.insert((i, i + 1), 1);
        }
    }
    let mut inner_degree = set.degree(w[n - 1]);
    for k in (0..n - 1).rev() {
        let letter = w[k];
        let d = set.degree(letter);
        let append_sign = if d % 2 == 1 && inner_degree % 2 == 1 { 1 } else { -1 };
        let mut next: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for (&(i, j), &c) in &dp {
            if i > 0 && w[i - 1] == letter {
                *next.entry((i - 1, j)).or_default() += c;
            }
            if j < n && w[j] == letter {
                *next.entry((i, j + 1)).or_default() += append_sign * c;
            }
        }
        dp = next;
        inner_degree += d;
    }
    dp.get(&(0, n)).copied().unwrap_or(0)
}

/// Dimension of a content component as `tr θ / n`.
pub fn dimension_by_trace(set: &GeneratorSet, counts: &[usize]) -> usize {
    let n: usize = counts.iter().sum();
    let trace: i64 = words_of_content(counts).iter().map(|w| theta_diagonal(set, w)).sum();
    assert_eq!(trace % n as i64, 0, "trace not divisible by length");
    assert!(trace >= 0);
    (trace / n as i64) as usize
}

/// Number of words with the given content.
pub fn multinomial(counts: &[usize]) -> usize {
    let mut r: u128 = 1;
    let mut m = 0u128;
    for &c in counts {
        for i in 1..=c as u128 {
            m += 1;
            r = r * m / i;
        }
    }
    r as usize
}

/// Dimension of a content component, by elimination when small enough.
pub fn dimension_oracle(set: &GeneratorSet, counts: &[usize], elimination_limit: usize) -> usize {
    if multinomial(counts) <= elimination_limit {
        dimension_by_elimination(set, counts)
    } else {
        dimension_by_trace(set, counts)
    }
}
