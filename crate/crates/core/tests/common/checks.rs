//! Seeded identity checks shared by the property tests and the acceptance
//! run. Every check draws its inputs from a seed and reports the first
//! mismatch.

use std::sync::Arc;

use qmodel_core::diagonal::build_diagonal;
use qmodel_core::io::{parse_dgl, parse_lie_expr, parse_magma_expr, print_dgl};
use qmodel_core::product::{ad, build_product_model, ProductGenerators};
use qmodel_core::sampling::Sampler;
use qmodel_core::{BracketTree, Deriv, Diagonal, Gen, GeneratorSet, Lie, LieExpr, Magma, Product, Rational, Scalar};

pub type Check = Result<(), String>;

pub fn sign(e: i64) -> Rational {
    <Rational as Scalar>::sign(e)
}

fn deg(x: &Lie) -> i64 {
    x.homogeneous_degree().map_or(0, i64::from)
}

fn magma_deg(x: &Magma) -> i64 {
    x.homogeneous_degree().map_or(0, i64::from)
}

pub fn expect_eq(what: &str, lhs: &Lie, rhs: &Lie) -> Check {
    if lhs.equals(rhs) {
        Ok(())
    } else {
        Err(format!("{what}: {lhs} != {rhs}"))
    }
}

fn expect_zero(what: &str, x: &Lie) -> Check {
    if x.is_zero() {
        Ok(())
    } else {
        Err(format!("{what}: {x} != 0"))
    }
}

fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Runs `check` on `cases` consecutive seeds from `first`, spread over the
/// available cores; reports the failure with the smallest seed.
pub fn run_seeds(first: u64, cases: u64, check: impl Fn(u64) -> Check + Sync) -> Check {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()) as u64;
    let failures: Vec<(u64, String)> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|k| {
                let check = &check;
                scope.spawn(move || {
                    (first + k..first + cases)
                        .step_by(workers as usize)
                        .find_map(|seed| check(seed).err().map(|e| (seed, e)))
                })
            })
            .collect();
        handles.into_iter().filter_map(|h| h.join().expect("check panicked")).collect()
    });
    match failures.into_iter().min_by_key(|(seed, _)| *seed) {
        Some((seed, e)) => Err(format!("seed {seed}: {e}")),
        None => Ok(()),
    }
}

/// A random product of two 2-cones with `V = {a,b,c,u,v}` and
/// `W = {x,y,z,t,w}` (prefixes), degrees at most 8.
pub struct Pair {
    pub sampler: Sampler,
    pub model: Product,
    pub v: Vec<Gen>,
    pub v0: Vec<Gen>,
    pub w: Vec<Gen>,
    pub w0: Vec<Gen>,
}

impl Pair {
    pub fn new(seed: u64) -> Self {
        let mut sampler = Sampler::new(seed);
        let x = sampler.two_cone::<Rational>("X", &["a", "b", "c"], &["u", "v"], 8);
        let y = sampler.two_cone::<Rational>("Y", &["x", "y", "z"], &["t", "w"], 8);
        let model = build_product_model(&x, &y).expect("2-cones have a product model");
        let gens = model.gens();
        let v = gens.left_gens().to_vec();
        let w = gens.right_gens().to_vec();
        let cycles = |gs: &[Gen]| gs.iter().copied().filter(|&g| model.d(g).is_zero()).collect();
        let (v0, w0) = (cycles(&v), cycles(&w));
        Pair { sampler, model, v, v0, w, w0 }
    }

    pub fn gens(&self) -> &ProductGenerators<Rational> {
        self.model.gens()
    }

    fn set(&self) -> Arc<GeneratorSet> {
        self.model.set().clone()
    }

    /// Nonzero homogeneous element of bracket length at most 4.
    pub fn element(&mut self, from: &[Gen]) -> Lie {
        let set = self.set();
        self.sampler.nonzero_lie_element(&set, from, 4, 2)
    }

    pub fn small_element(&mut self, from: &[Gen]) -> Lie {
        let set = self.set();
        self.sampler.nonzero_lie_element(&set, from, 2, 2)
    }

    pub fn magma(&mut self, from: &[Gen], max_leaves: usize) -> Magma {
        let set = self.set();
        loop {
            let m = self.sampler.magma_element(&set, from, max_leaves, 2);
            if !m.is_zero() {
                return m;
            }
        }
    }

    pub fn sigma(&self, a: &Lie) -> Deriv {
        self.gens().sigma_of(a).expect("σ of a homogeneous element of V ⊕ W")
    }

    pub fn s(&self, a: &Lie, x: &Lie) -> Lie {
        self.gens().apply_sigma(a, x).expect("σ of an element of V ⊕ W")
    }

    pub fn d(&self, x: &Lie) -> Lie {
        self.model.apply(x)
    }

    fn d_bracket(&self, sigma: &Deriv) -> Deriv {
        self.model.differential().bracket(sigma).expect("same generator set")
    }
}

/// `[D, σ_S] = ad_S - σ_{∂S}` on `𝕃(W_0)` for `S ∈ 𝕃(V)`.
pub fn commutator_with_left_sigma(seed: u64) -> Check {
    let mut p = Pair::new(seed);
    let (v, w0) = (p.v.clone(), p.w0.clone());
    let s = p.element(&v);
    let t = p.element(&w0);
    let lhs = p.d_bracket(&p.sigma(&s)).apply(&t);
    let rhs = ad(&s).map_err(fail)?.apply(&t) - p.s(&p.d(&s), &t);
    expect_eq("[D,σ_S](T)", &lhs, &rhs)
}

/// `[D, σ_T] = -ad_T - σ_{∂T}` on `𝕃(V_0)` for `T ∈ 𝕃(W)`.
pub fn commutator_with_right_sigma(seed: u64) -> Check {
    let mut p = Pair::new(seed);
    let (w, v0) = (p.w.clone(), p.v0.clone());
    let t = p.element(&w);
    let s = p.element(&v0);
    let lhs = p.d_bracket(&p.sigma(&t)).apply(&s);
    let rhs = -ad(&t).map_err(fail)?.apply(&s) - p.s(&p.d(&t), &s);
    expect_eq("[D,σ_T](S)", &lhs, &rhs)
}

/// `σ_A σ_B (w) = 0` for `A, B ∈ 𝕃(V)` and every `w ∈ W`.
pub fn double_sigma_kills_right_generators(seed: u64) -> Check {
    let mut p = Pair::new(seed);
    let v = p.v.clone();
    let (a, b) = (p.element(&v), p.element(&v));
    let (sa, sb) = (p.sigma(&a), p.sigma(&b));
    for &w in &p.w {
        let w = Lie::generator(p.model.set(), w);
        expect_zero("σ_A σ_B (w)", &sa.apply(&sb.apply(&w)))?;
    }
    Ok(())
}

/// `[σ_A, σ_B] = 0` as a derivation, for `A, B ∈ 𝕃(V)`.
pub fn left_sigmas_commute(seed: u64) -> Check {
    let mut p = Pair::new(seed);
    let v = p.v.clone();
    let (a, b) = (p.element(&v), p.element(&v));
    let c = p.sigma(&a).bracket(&p.sigma(&b)).map_err(fail)?;
    if c.is_zero() {
        Ok(())
    } else {
        Err(format!("[σ_A,σ_B] = {c:?} for A = {a}, B = {b}"))
    }
}

/// `[[D, σ_A], σ_B] = (-1)^{|A|+1} σ_{[A,B]}` on `𝕃(W_0)`, and the closed
/// form of `D(σ_A σ_B (T))` for `A, B ∈ 𝕃(V_0)`.
pub fn double_commutator(seed: u64) -> Check {
    let mut p = Pair::new(seed);
    let (v, v0, w0) = (p.v.clone(), p.v0.clone(), p.w0.clone());
    let (a, b) = (p.element(&v), p.element(&v));
    let t = p.element(&w0);
    let lhs = p.d_bracket(&p.sigma(&a)).bracket(&p.sigma(&b)).map_err(fail)?.apply(&t);
    let rhs = p.s(&a.bracket(&b), &t).scale(&sign(deg(&a) + 1));
    expect_eq("[[D,σ_A],σ_B](T)", &lhs, &rhs)?;

    let (a, b) = (p.element(&v0), p.element(&v0));
    let (da, db, dt) = (deg(&a), deg(&b), deg(&t));
    let lhs = p.d(&p.s(&a, &p.s(&b, &t)));
    let rhs = p.s(&a.bracket(&b), &t).scale(&sign(da + 1))
        + p.s(&a, &t).bracket(&b).scale(&sign(da + db * dt))
        + a.bracket(&p.s(&b, &t));
    expect_eq("D(σ_A σ_B (T))", &lhs, &rhs)
}

/// `[[[D, σ_A], σ_B], σ_C] = 0` on `𝕃(W_0)`.
pub fn triple_commutator_vanishes(seed: u64) -> Check {
    let mut p = Pair::new(seed);
    let (v, w0) = (p.v.clone(), p.w0.clone());
    let (a, b, c) = (p.element(&v), p.element(&v), p.element(&v));
    let t = p.element(&w0);
    let x = p.d_bracket(&p.sigma(&a)).bracket(&p.sigma(&b)).map_err(fail)?;
    let x = x.bracket(&p.sigma(&c)).map_err(fail)?;
    expect_zero("[[[D,σ_A],σ_B],σ_C](T)", &x.apply(&t))
}

/// The closed form of `D(σ_A σ_B σ_C (T))` for `A, B, C ∈ 𝕃(V_0)`.
pub fn triple_sigma_boundary(seed: u64) -> Check {
    let mut p = Pair::new(seed);
    let (v0, w0) = (p.v0.clone(), p.w0.clone());
    let (a, b, c) = (p.element(&v0), p.element(&v0), p.element(&v0));
    let t = p.element(&w0);
    let (da, db, dc, dt) = (deg(&a), deg(&b), deg(&c), deg(&t));
    let (sa, sb, sc) = (p.sigma(&a), p.sigma(&b), p.sigma(&c));
    let (sbt, sct) = (sb.apply(&t), sc.apply(&t));
    let sbct = sb.apply(&sct);
    let lhs = p.d(&sa.apply(&sbct));
    let rhs = sa.apply(&p.s(&b.bracket(&c), &t)).scale(&sign(da + db))
        - sb.apply(&p.s(&a.bracket(&c), &t)).scale(&sign(da * db))
        - p.s(&a.bracket(&b), &sct).scale(&sign(da))
        - sa.apply(&sbt).bracket(&c).scale(&sign(da + db + dc * dt))
        + a.bracket(&sbct)
        - b.bracket(&sa.apply(&sct)).scale(&sign(da + db + da * db));
    expect_eq("D(σ_A σ_B σ_C (T))", &lhs, &rhs)
}

/// `(AB + (-1)^{|A||B|} BA) ⋆ T = 0`.
pub fn star_respects_antisymmetry(seed: u64) -> Check {
    let mut p = Pair::new(seed);
    let (v, w) = (p.v.clone(), p.w.clone());
    let (a, b) = (p.magma(&v, 3), p.magma(&v, 3));
    let t = p.element(&w);
    let sym = a.mul(&b) + b.mul(&a).scale(&sign(magma_deg(&a) * magma_deg(&b)));
    let x = p.gens().star(&sym, &t).map_err(fail)?;
    expect_zero("(AB ± BA) ⋆ T", &x)?;
    let at = p.gens().star(&a, &t).map_err(fail)?;
    match at.homogeneous_degree() {
        Some(d) if i64::from(d) != magma_deg(&a) + deg(&t) + 2 => Err(format!("|A ⋆ T| = {d}")),
        _ => Ok(()),
    }
}

/// `J(A,B,C) ⋆ T = (-1)^{|B|} D(σ_A σ_B σ_C (T))` over the cycles.
pub fn jacobiator_star(seed: u64) -> Check {
    let mut p = Pair::new(seed);
    let (v0, w0) = (p.v0.clone(), p.w0.clone());
    let (a, b, c) = (p.magma(&v0, 2), p.magma(&v0, 2), p.magma(&v0, 2));
    let t = p.element(&w0);
    let j = Magma::jacobiator(&a, &b, &c);
    let lhs = p.gens().star(&j, &t).map_err(fail)?;
    let (ua, ub, uc) = (a.underline(), b.underline(), c.underline());
    let rhs = p.d(&p.s(&ua, &p.s(&ub, &p.s(&uc, &t)))).scale(&sign(magma_deg(&b)));
    expect_eq("J(A,B,C) ⋆ T", &lhs, &rhs)
}

/// `D(A ⋆ T) = -σ_A(T) + (-1)^{|A||T|} σ_T(A)` for every lift of `A`, in
/// particular two lifts differ by a cycle.
pub fn star_boundary_is_lift_independent(seed: u64) -> Check {
    let mut p = Pair::new(seed);
    let (v0, w0) = (p.v0.clone(), p.w0.clone());
    let m = p.magma(&v0, 4);
    let a = m.underline();
    let t = p.element(&w0);
    let rhs = -p.s(&a, &t) + p.s(&t, &a).scale(&sign(magma_deg(&m) * deg(&t)));
    let canonical = Magma::lift(&a);
    let mut stars = Vec::new();
    for lift in [&m, &canonical] {
        let x = p.gens().star(lift, &t).map_err(fail)?;
        expect_eq("D(lift ⋆ T)", &p.d(&x), &rhs)?;
        stars.push(x);
    }
    expect_zero("D(lift₁ ⋆ T - lift₂ ⋆ T)", &p.d(&(stars[0].clone() - stars[1].clone())))
}

/// Leibniz for `D`, `σ_S` and `[D, σ_S]`, and `D² = 0`, on random elements
/// of the whole product algebra.
pub fn derivations_obey_leibniz(seed: u64) -> Check {
    let mut p = Pair::new(seed);
    let all: Vec<Gen> = p.model.set().gens().collect();
    let v = p.v.clone();
    let (x, y) = (p.small_element(&all), p.small_element(&all));
    let s = p.small_element(&v);
    let sigma = p.sigma(&s);
    let commutator = p.d_bracket(&sigma);
    for (name, d) in [("D", p.model.differential()), ("σ_S", &sigma), ("[D,σ_S]", &commutator)] {
        let lhs = d.apply(&x.bracket(&y));
        let rhs = d.apply(&x).bracket(&y) + x.bracket(&d.apply(&y)).scale(&sign(d.degree() * deg(&x)));
        expect_eq(&format!("{name}([x,y])"), &lhs, &rhs)?;
    }
    expect_zero("D²(x)", &p.d(&p.d(&x)))
}

/// A random 2-cone `X` over `{a,b,c,d}` / `{u,v,t}` and its diagonal.
pub struct Cone {
    pub sampler: Sampler,
    pub diagonal: Diagonal,
    pub cycles: Vec<Gen>,
}

impl Cone {
    pub fn new(seed: u64) -> Self {
        let mut sampler = Sampler::new(seed);
        let x = sampler.two_cone::<Rational>("X", &["a", "b", "c", "d"], &["u", "v", "t"], 8);
        let diagonal = build_diagonal(&x).expect("2-cones have a diagonal");
        let cycles = x.set().gens().filter(|&g| x.d(g).is_zero()).collect();
        Cone { sampler, diagonal, cycles }
    }

    pub fn magma(&mut self, max_leaves: usize) -> Magma {
        let set = self.diagonal.base().set().clone();
        loop {
            let m = self.sampler.magma_element(&set, &self.cycles, max_leaves, 2);
            if !m.is_zero() {
                return m;
            }
        }
    }
}

/// The diagonal is a chain map and both projections are identities.
pub fn diagonal_is_a_chain_map(seed: u64) -> Check {
    let cone = Cone::new(seed);
    let d = &cone.diagonal;
    let failures = d.chain_map_failures();
    if !failures.is_empty() {
        return Err(format!("chain map fails on {failures:?}"));
    }
    if !d.projection_identities() {
        return Err("a projection of Δ is not the identity".into());
    }
    if !d.product().d_squared_residual().pass {
        return Err("D² ≠ 0 on the model of X × X".into());
    }
    Ok(())
}

/// `D Γ A = Δ A - A - A'`.
pub fn gamma_boundary(seed: u64) -> Check {
    let mut cone = Cone::new(seed);
    let a = cone.magma(4);
    let (lhs, rhs) = cone.diagonal.gamma_boundary_check(&a).map_err(fail)?;
    expect_eq("D Γ A", &lhs, &rhs)
}

/// `Γ(AB + (-1)^{|A||B|} BA) = 0`.
pub fn gamma_respects_antisymmetry(seed: u64) -> Check {
    let mut cone = Cone::new(seed);
    let (a, b) = (cone.magma(2), cone.magma(2));
    let sym = a.mul(&b) + b.mul(&a).scale(&sign(magma_deg(&a) * magma_deg(&b)));
    expect_zero("Γ(AB ± BA)", &cone.diagonal.gamma(&sym).map_err(fail)?)
}

/// `D ω = Γ J(A, B, C)` for the explicit witness `ω`.
pub fn gamma_jacobiator_is_a_boundary(seed: u64) -> Check {
    let mut cone = Cone::new(seed);
    let (a, b, c) = (cone.magma(2), cone.magma(2), cone.magma(2));
    let d = &cone.diagonal;
    let witness = d.gamma_jacobiator_witness(&a, &b, &c).map_err(fail)?;
    let j = d.gamma(&Magma::jacobiator(&a, &b, &c)).map_err(fail)?;
    expect_eq("D ω", &d.product().apply(&witness), &j)
}

/// Model of a random pair of 2-cones with up to four generators per stage
/// and degrees at most 10: `D² = 0`, `φ` is a chain map, minimal.
pub fn random_product_model(seed: u64) -> Check {
    let mut s = Sampler::new(seed);
    let x = s.two_cone::<Rational>("X", &["a", "b", "c", "d"], &["u", "v", "t", "r"], 10);
    let y = s.two_cone::<Rational>("Y", &["x", "y", "z", "q"], &["w", "p", "o", "n"], 10);
    let model = build_product_model(&x, &y).map_err(fail)?;
    let residual = model.d_squared_residual();
    if !residual.pass {
        let bad: Vec<_> = residual.failures().map(|e| e.generator.clone()).collect();
        return Err(format!("D² ≠ 0 on {bad:?}\n{}\n{}", print_dgl(&x), print_dgl(&y)));
    }
    if !model.projection_check() {
        return Err(format!("φ is not a chain map\n{}\n{}", print_dgl(&x), print_dgl(&y)));
    }
    if !model.minimality_check() {
        return Err("model is not minimal".into());
    }
    let set = model.set();
    for g in model.gens().suspension_gens() {
        let name = set.name(g);
        let ok = model.gens().left_gens().iter().any(|&v| {
            model.gens().right_gens().iter().any(|&w| {
                model.gens().suspension(v, w).ok() == Some(g)
                    && set.degree(g) == set.degree(v) + set.degree(w) + 1
            })
        });
        if !ok {
            return Err(format!("{name} has the wrong degree"));
        }
    }
    Ok(())
}

/// Three generators of degree at most 3.
pub fn small_set(s: &mut Sampler) -> (Arc<GeneratorSet>, Vec<Gen>) {
    let set = s.generator_set(&["a", "b", "c"], 3);
    let gens = set.gens().collect();
    (set, gens)
}

/// Antisymmetry, Jacobi and degree additivity on random homogeneous elements.
pub fn bracket_axioms(seed: u64) -> Check {
    let mut s = Sampler::new(seed);
    let (set, gens) = small_set(&mut s);
    let x = s.lie_element::<Rational>(&set, &gens, 4, 3);
    let y = s.lie_element::<Rational>(&set, &gens, 4, 3);
    let z = s.lie_element::<Rational>(&set, &gens, 4, 3);
    let (dx, dy) = (deg(&x), deg(&y));
    expect_zero("[x,y] + (-1)^{|x||y|}[y,x]", &(x.bracket(&y) + y.bracket(&x).scale(&sign(dx * dy))))?;
    let jacobi = x.bracket(&y.bracket(&z)) - x.bracket(&y).bracket(&z) - y.bracket(&x.bracket(&z)).scale(&sign(dx * dy));
    if !jacobi.tensor_expand().is_zero() || !jacobi.is_zero() {
        return Err(format!("Jacobi fails: {jacobi}"));
    }
    let xy = x.bracket(&y);
    match xy.homogeneous_degree() {
        Some(d) if i64::from(d) != dx + dy => Err(format!("|[x,y]| = {d}, expected {}", dx + dy)),
        None if !xy.is_zero() => Err("[x,y] is not homogeneous".into()),
        _ => Ok(()),
    }
}

fn tree_degree(t: &BracketTree, set: &GeneratorSet) -> i64 {
    i64::from(t.degree(set))
}

/// A raw combination of bracket trees with up to five leaves: a relation
/// that vanishes, plus an unrelated term half of the time.
pub fn raw_combination(s: &mut Sampler, set: &Arc<GeneratorSet>, gens: &[Gen]) -> LieExpr<Rational> {
    use rand::Rng;
    let mut expr = LieExpr::new(set);
    let c: Rational = s.coefficient();
    let n = s.rng().gen_range(2..=5);
    let leaves: Vec<Gen> = (0..n).map(|_| gens[s.rng().gen_range(0..gens.len())]).collect();
    let split = s.rng().gen_range(1..n);
    let left = s.bracket_tree_on(&leaves[..split]);
    let right = s.bracket_tree_on(&leaves[split..]);
    let (dl, dr) = (tree_degree(&left, set), tree_degree(&right, set));
    if n >= 3 && s.rng().gen_bool(0.5) {
        let k = s.rng().gen_range(1..n - 1);
        let a = s.bracket_tree_on(&leaves[..k]);
        let b = s.bracket_tree_on(&leaves[k..n - 1]);
        let cc = BracketTree::Leaf(leaves[n - 1]);
        let (da, db) = (tree_degree(&a, set), tree_degree(&b, set));
        let node = BracketTree::node;
        expr.push(c.clone(), node(a.clone(), node(b.clone(), cc.clone())));
        expr.push(-c.clone(), node(node(a.clone(), b.clone()), cc.clone()));
        expr.push(-c * sign(da * db), node(b, node(a, cc)));
    } else {
        expr.push(c.clone(), BracketTree::node(left.clone(), right.clone()));
        expr.push(c * sign(dl * dr), BracketTree::node(right, left));
    }
    if s.rng().gen_bool(0.5) {
        let extra = s.bracket_tree(gens, 5);
        expr.push(s.coefficient(), extra);
    }
    expr
}

/// `normalize(x) = 0` exactly when the tensor expansion of `x` vanishes;
/// both normalizers agree and normalizing is idempotent.
pub fn normalize_agrees_with_oracle(seed: u64) -> Check {
    let mut s = Sampler::new(seed);
    let (set, gens) = small_set(&mut s);
    let raw = raw_combination(&mut s, &set, &gens);
    let normal = raw.normalize();
    if normal.is_zero() != raw.expand().is_zero() {
        return Err(format!("normalize gives {normal} but the expansion zero test says {}", raw.expand().is_zero()));
    }
    let peeled = raw.normalize_by_peeling().map_err(fail)?;
    expect_eq("normalize vs peeling", &normal, &peeled)?;
    let mut again = LieExpr::new(&set);
    for (k, c) in normal.iter() {
        again.push(c.clone(), k.tree(&set));
    }
    expect_eq("normalize twice", &again.normalize(), &normal)?;
    if normal.tensor_expand() != raw.expand() {
        return Err("normal form has a different expansion".into());
    }
    Ok(())
}

/// Printing then parsing gives back presentations, Lie elements and magma
/// elements.
pub fn printing_round_trips(seed: u64) -> Check {
    let mut s = Sampler::new(seed);
    let p = s.two_cone::<Rational>("X", &["a", "b", "c", "d"], &["u", "v", "t"], 10);
    let text = print_dgl(&p);
    let back = parse_dgl(&text).map_err(|e| format!("{e}\n{text}"))?.presentation;
    if print_dgl(&back) != text || back.set().generators() != p.set().generators() {
        return Err(format!("presentation changed:\n{text}"));
    }
    for g in p.set().gens() {
        expect_eq("differential", back.d(back.set().require(p.set().name(g)).map_err(fail)?), p.d(g))?;
    }
    let gens: Vec<Gen> = p.set().gens().collect();
    let x = s.lie_element::<Rational>(p.set(), &gens, 5, 3);
    let parsed = parse_lie_expr(&x.to_string(), p.set()).map_err(|e| format!("{e}: {x}"))?;
    expect_eq("printed element", &parsed, &x)?;
    let m = s.magma_element::<Rational>(p.set(), &gens, 5, 3);
    let parsed = parse_magma_expr(&m.to_string(), p.set()).map_err(|e| format!("{e}: {m}"))?;
    if parsed != m {
        return Err(format!("printed magma element {m} parsed as {parsed}"));
    }
    Ok(())
}

/// The underline of a Jacobiator vanishes and the canonical lift is a
/// section of the underline.
pub fn magma_projection(seed: u64) -> Check {
    let mut s = Sampler::new(seed);
    let (set, gens) = small_set(&mut s);
    let a = s.magma_element::<Rational>(&set, &gens, 3, 2);
    let b = s.magma_element::<Rational>(&set, &gens, 3, 2);
    let c = s.magma_element::<Rational>(&set, &gens, 3, 2);
    expect_zero("underline J(A,B,C)", &Magma::jacobiator(&a, &b, &c).underline())?;
    let sym = a.mul(&b) + b.mul(&a).scale(&sign(magma_deg(&a) * magma_deg(&b)));
    expect_zero("underline(AB ± BA)", &sym.underline())?;
    let x = s.lie_element::<Rational>(&set, &gens, 5, 3);
    expect_eq("underline(lift x)", &Magma::lift(&x).underline(), &x)
}
