//! Lyndon words over a generator alphabet.
//!
//! Words compare lexicographically through the generator order, with a
//! proper prefix smaller than its extensions.

use crate::generators::Gen;

/// `true` iff `w` is non-empty and strictly smaller than each proper suffix.
pub fn is_lyndon(w: &[Gen]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// Split point of the standard factorization `w = u v`, where `v` is the
/// longest proper suffix of `w` that is itself Lyndon. `w` must be a Lyndon
/// word of length at least 2.
pub fn standard_split(w: &[Gen]) -> usize {
    debug_assert!(w.len() >= 2);
    (1..w.len())
        .find(|&i| is_lyndon(&w[i..]))
        .expect("every word of length >= 2 has a Lyndon suffix")
}

/// If `w = u u` with `u` Lyndon, returns `u`.
pub fn square_root(w: &[Gen]) -> Option<&[Gen]> {
    if !w.len().is_multiple_of(2) || w.is_empty() {
        return None;
    }
    let (u, v) = w.split_at(w.len() / 2);
    (u == v && is_lyndon(u)).then_some(u)
}

/// All Lyndon words over `alphabet` (already in increasing order) whose
/// letter degrees sum to exactly `degree`. Generated by Duval's algorithm in
/// lexicographic order.
pub fn lyndon_words_of_degree(alphabet: &[(Gen, u32)], degree: u32) -> Vec<Vec<Gen>> {
    let Some(min_deg) = alphabet.iter().map(|&(_, d)| d).min() else {
        return Vec::new();
    };
    let max_len = (degree / min_deg) as usize;
    let k = alphabet.len();
    let mut out = Vec::new();
    if max_len == 0 {
        return out;
    }
    let mut w: Vec<usize> = vec![0];
    loop {
        let total: u32 = w.iter().map(|&i| alphabet[i].1).sum();
        if total == degree {
            out.push(w.iter().map(|&i| alphabet[i].0).collect());
        }
        let m = w.len();
        while w.len() < max_len {
            w.push(w[w.len() - m]);
        }
        while w.last() == Some(&(k - 1)) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}
