//! Enumeration of the canonical basis by degree.

use super::basis::BasisKey;
use super::lyndon::lyndon_words_of_degree;
use crate::generators::GeneratorSet;

/// Canonical basis elements of total degree `n`, in print order.
pub fn basis_of_degree(set: &GeneratorSet, n: u32) -> Vec<BasisKey> {
    let alphabet: Vec<_> = set.gens().map(|g| (g, set.degree(g))).collect();
    let mut out: Vec<BasisKey> = lyndon_words_of_degree(&alphabet, n)
        .iter()
        .map(|w| BasisKey::lyndon(set, w).expect("Duval output is Lyndon"))
        .collect();
    if n.is_multiple_of(2) && (n / 2) % 2 == 1 {
        out.extend(
            lyndon_words_of_degree(&alphabet, n / 2)
                .iter()
                .filter_map(|u| BasisKey::square(set, u)),
        );
    }
    out.sort();
    out
}

/// Dimension of the degree-`n` part of the free graded Lie algebra.
pub fn dimension_of_degree(set: &GeneratorSet, n: u32) -> usize {
    basis_of_degree(set, n).len()
}
