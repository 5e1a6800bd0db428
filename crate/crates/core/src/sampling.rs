//! Seeded random elements, trees and 2-cone presentations.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{BracketTree, LieElement};
use crate::dgl::DglPresentation;
use crate::generators::{Gen, Generator, GeneratorSet};
use crate::magma::{MagmaElement, MagmaTree};
use crate::scalar::Scalar;

pub struct Sampler {
    rng: ChaCha8Rng,
}

const COEFFICIENTS: [i64; 4] = [-2, -1, 1, 2];

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn coefficient<C: Scalar>(&mut self) -> C {
        C::from_int(*COEFFICIENTS.choose(&mut self.rng).expect("nonempty"))
    }

    /// One generator per name, with degrees in `1..=max_degree`.
    pub fn generator_set(&mut self, names: &[&str], max_degree: u32) -> Arc<GeneratorSet> {
        let gens = names.iter().map(|n| Generator::new(*n, self.rng.gen_range(1..=max_degree))).collect();
        GeneratorSet::new(gens).expect("distinct names")
    }

    fn leaves(&mut self, from: &[Gen], count: usize) -> Vec<Gen> {
        (0..count).map(|_| *from.choose(&mut self.rng).expect("nonempty alphabet")).collect()
    }

    fn shape<T>(&mut self, leaves: &[Gen], leaf: &impl Fn(Gen) -> T, node: &impl Fn(T, T) -> T) -> T {
        if leaves.len() == 1 {
            return leaf(leaves[0]);
        }
        let split = self.rng.gen_range(1..leaves.len());
        let l = self.shape(&leaves[..split], leaf, node);
        let r = self.shape(&leaves[split..], leaf, node);
        node(l, r)
    }

    /// A bracket tree with a uniformly random shape on the given leaves.
    pub fn bracket_tree_on(&mut self, leaves: &[Gen]) -> BracketTree {
        self.shape(leaves, &BracketTree::Leaf, &BracketTree::node)
    }

    pub fn magma_tree_on(&mut self, leaves: &[Gen]) -> MagmaTree {
        self.shape(leaves, &MagmaTree::Leaf, &MagmaTree::node)
    }

    /// A bracket tree with `1..=max_leaves` leaves drawn from `from`.
    pub fn bracket_tree(&mut self, from: &[Gen], max_leaves: usize) -> BracketTree {
        let n = self.rng.gen_range(1..=max_leaves);
        let leaves = self.leaves(from, n);
        self.bracket_tree_on(&leaves)
    }

    pub fn magma_tree(&mut self, from: &[Gen], max_leaves: usize) -> MagmaTree {
        let n = self.rng.gen_range(1..=max_leaves);
        let leaves = self.leaves(from, n);
        self.magma_tree_on(&leaves)
    }

    /// A homogeneous sum of up to `terms` bracket trees that share a leaf
    /// multiset, with coefficients in `{-2,-1,1,2}`. May be zero.
    pub fn lie_element<C: Scalar>(
        &mut self,
        set: &Arc<GeneratorSet>,
        from: &[Gen],
        max_leaves: usize,
        terms: usize,
    ) -> LieElement<C> {
        let n = self.rng.gen_range(1..=max_leaves);
        let mut leaves = self.leaves(from, n);
        let mut out = LieElement::zero(set);
        for _ in 0..self.rng.gen_range(1..=terms) {
            leaves.shuffle(&mut self.rng);
            let c: C = self.coefficient();
            out += self.bracket_tree_on(&leaves).evaluate::<C>(set).scale(&c);
        }
        out
    }

    /// Like [`lie_element`](Self::lie_element) but never zero.
    pub fn nonzero_lie_element<C: Scalar>(
        &mut self,
        set: &Arc<GeneratorSet>,
        from: &[Gen],
        max_leaves: usize,
        terms: usize,
    ) -> LieElement<C> {
        loop {
            let x = self.lie_element(set, from, max_leaves, terms);
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// A homogeneous magma element: up to `terms` trees on one shuffled leaf
    /// multiset.
    pub fn magma_element<C: Scalar>(
        &mut self,
        set: &Arc<GeneratorSet>,
        from: &[Gen],
        max_leaves: usize,
        terms: usize,
    ) -> MagmaElement<C> {
        let n = self.rng.gen_range(1..=max_leaves);
        let mut leaves = self.leaves(from, n);
        let mut out = MagmaElement::zero(set);
        for _ in 0..self.rng.gen_range(1..=terms) {
            leaves.shuffle(&mut self.rng);
            let c: C = self.coefficient();
            out.add_term(self.magma_tree_on(&leaves), c);
        }
        out
    }

    /// A minimal 2-cone of cone length exactly 2. Stage 0 takes a nonempty
    /// prefix of `stage0`, stage 1 a nonempty prefix of `stage1`; stage 1
    /// differentials have bracket length 2 or 3 and all degrees are at most
    /// `max_degree`.
    pub fn two_cone<C: Scalar>(
        &mut self,
        label: &str,
        stage0: &[&str],
        stage1: &[&str],
        max_degree: u32,
    ) -> DglPresentation<C> {
        assert!(max_degree >= 3, "a 2-cone needs room for a bracket");
        loop {
            let n0 = self.rng.gen_range(1..=stage0.len());
            let low = (max_degree - 1) / 2;
            let degrees0: Vec<u32> = (0..n0).map(|_| self.rng.gen_range(1..=low.max(1))).collect();
            let base_set = GeneratorSet::new(
                stage0[..n0].iter().zip(&degrees0).map(|(n, &d)| Generator::new(*n, d)).collect(),
            )
            .expect("distinct names");
            let base: Vec<Gen> = base_set.gens().collect();
            let n1 = self.rng.gen_range(1..=stage1.len());
            let mut values = Vec::new();
            for _ in 0..n1 {
                let len = self.rng.gen_range(2..=3);
                let leaves = self.leaves(&base, len);
                let degree: u32 = leaves.iter().map(|&g| base_set.degree(g)).sum();
                if degree + 1 > max_degree {
                    continue;
                }
                let mut value = LieElement::<C>::zero(&base_set);
                let mut shuffled = leaves.clone();
                for _ in 0..self.rng.gen_range(1..=2) {
                    shuffled.shuffle(&mut self.rng);
                    let c: C = self.coefficient();
                    value += self.bracket_tree_on(&shuffled).evaluate::<C>(&base_set).scale(&c);
                }
                if !value.is_zero() {
                    values.push((degree + 1, value));
                }
            }
            if values.is_empty() {
                continue;
            }
            let mut gens: Vec<Generator> = base_set.generators().to_vec();
            for (i, (d, _)) in values.iter().enumerate() {
                gens.push(Generator::new(stage1[i], *d));
            }
            let set = GeneratorSet::new(gens).expect("distinct names");
            let differentials = values.iter().enumerate().map(|(i, (_, v))| {
                let g = set.require(stage1[i]).expect("declared");
                (g, v.transport(&set, |h| set.require(base_set.name(h)).expect("declared")))
            });
            return DglPresentation::new(label, &set, differentials.collect::<Vec<_>>()).expect("same set");
        }
    }
}
