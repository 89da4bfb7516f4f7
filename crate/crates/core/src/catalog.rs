//! Small named algebras, forms and extension data used as fixtures.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::extensions::{ander_s, double_extension, DoubleExtensionInput, GdextData};
use crate::forms::{tstar_extension, BilinearForm, PseudoEuclidean};
use crate::kernel::rational::{int, Rational};
use crate::kernel::{add_scaled, GradedDim, GradedMap, Matrix, EVEN, ODD};
use crate::representation::{central_extension, cocycle_space, Cocycle, Representation};
use crate::superalgebra::subspace::annihilator;
use crate::superalgebra::SuperAlgebra;

fn build(name: &str, dims: GradedDim, terms: &[(usize, usize, usize, i64)]) -> SuperAlgebra {
    let terms: Vec<_> = terms.iter().map(|&(i, j, k, c)| (i, j, k, int(c))).collect();
    SuperAlgebra::from_terms(name, dims, &terms).expect("fixture indices in range")
}

/// The zero-dimensional algebra.
pub fn zero() -> SuperAlgebra {
    SuperAlgebra::abelian("0", GradedDim::new(0, 0))
}

pub fn abelian(dims: GradedDim) -> SuperAlgebra {
    SuperAlgebra::abelian(format!("abelian{dims}"), dims)
}

/// `(2|0)`, `e0•e0 = e1`.
pub fn e2() -> SuperAlgebra {
    build("E2", GradedDim::new(2, 0), &[(0, 0, 1, 1)])
}

/// `(1|2)` with `z` even and `a, b` odd: `a•b = z`, `b•a = -z`.
pub fn h3() -> SuperAlgebra {
    build("H3", GradedDim::new(1, 2), &[(1, 2, 0, 1), (2, 1, 0, -1)])
}

/// `(0|2)` with `u•u = λu*`. Not supercommutative unless `λ = 0`.
pub fn g2(lambda: Rational) -> SuperAlgebra {
    let mut a = SuperAlgebra::abelian("G2", GradedDim::new(0, 2));
    a.add_term(0, 0, 1, lambda).expect("in range");
    a
}

/// Abelian `(0|2)`.
pub fn s2() -> SuperAlgebra {
    SuperAlgebra::abelian("S2", GradedDim::new(0, 2))
}

/// `(1|0)`, `e0•e0 = e0`.
pub fn idempotent() -> SuperAlgebra {
    build("idempotent", GradedDim::new(1, 0), &[(0, 0, 0, 1)])
}

/// The ground field as a `(1|0)` algebra, `1·1 = 1`.
pub fn scalars() -> SuperAlgebra {
    build("K", GradedDim::new(1, 0), &[(0, 0, 0, 1)])
}

/// Grassmann algebra on `k` odd generators. Basis: monomials ordered by
/// parity, then by bitmask.
pub fn grassmann(k: usize) -> SuperAlgebra {
    let masks: Vec<u32> = {
        let mut m: Vec<u32> = (0..1u32 << k).collect();
        m.sort_by_key(|s| (s.count_ones() % 2, *s));
        m
    };
    let even = masks.iter().filter(|s| s.count_ones() % 2 == 0).count();
    let pos = |s: u32| masks.iter().position(|&t| t == s).expect("monomial");
    let mut a = SuperAlgebra::abelian(format!("Grassmann{k}"), GradedDim::new(even, masks.len() - even));
    for &s in &masks {
        for &t in &masks {
            if s & t != 0 {
                continue;
            }
            // Sign of moving each generator of t past the larger generators of s.
            let swaps: u32 = (0..k).filter(|g| t >> g & 1 == 1).map(|g| (s >> (g + 1)).count_ones()).sum();
            let c = if swaps.is_multiple_of(2) { 1 } else { -1 };
            a.add_term(pos(s), pos(t), pos(s | t), int(c)).expect("in range");
        }
    }
    a
}

/// E2 with `B(e0, e1) = 1`.
pub fn e2_hyperbolic() -> PseudoEuclidean {
    let form = BilinearForm::from_terms(GradedDim::new(2, 0), &[(0, 1, int(1)), (1, 0, int(1))]).expect("in range");
    PseudoEuclidean::new(e2(), form).expect("valid fixture")
}

/// S2 with `B(u, u*) = 1 = -B(u*, u)`.
pub fn s2_symplectic() -> PseudoEuclidean {
    let form = BilinearForm::from_terms(GradedDim::new(0, 2), &[(0, 1, int(1)), (1, 0, int(-1))]).expect("in range");
    PseudoEuclidean::new(s2(), form).expect("valid fixture")
}

/// Abelian `(0|4)` with two symplectic pairs `(0, 3)` and `(1, 2)`; this is
/// the trivial extension of [`s2_symplectic`] in its basis layout.
pub fn s4_split() -> PseudoEuclidean {
    let dims = GradedDim::new(0, 4);
    let form = BilinearForm::from_terms(dims, &[(0, 3, int(1)), (3, 0, int(-1)), (1, 2, int(1)), (2, 1, int(-1))])
        .expect("in range");
    PseudoEuclidean::new(SuperAlgebra::abelian("S4", dims), form).expect("valid fixture")
}

/// `J⊕J*` with the canonical hyperbolic form and no cocycle.
pub fn tstar(a: &SuperAlgebra) -> PseudoEuclidean {
    let (alg, form, _) = tstar_extension(a, &Cocycle::zero(a.dim(), a.dims())).expect("mock-Lie input");
    PseudoEuclidean::new(alg, form).expect("valid T* extension")
}

/// Abelian `dims ⊕ dims*` with the canonical hyperbolic form.
pub fn abelian_split(dims: GradedDim) -> PseudoEuclidean {
    tstar(&abelian(dims))
}

/// The data behind [`d4`]: `E2` acted on by the null algebra `Ka` through
/// `φ(a) = L_{e0}`, with `σ = 0`.
pub fn d4_input() -> DoubleExtensionInput {
    let j1 = e2_hyperbolic();
    let j2 = SuperAlgebra::abelian("Ka", GradedDim::new(1, 0));
    let mut m = Matrix::zeros(2, 2);
    m[(1, 0)] = int(1);
    let phi = vec![GradedMap::new(j1.dims(), j1.dims(), EVEN, m).expect("even map")];
    DoubleExtensionInput {
        j1,
        j2,
        phi,
        sigma: BilinearForm::zero(GradedDim::new(1, 0)),
    }
}

/// `(4|0)` on `a, e0, e1, a*`: `a•e0 = e1`, `e0•e0 = e1 + a*`.
pub fn d4() -> PseudoEuclidean {
    double_extension(&d4_input()).expect("valid fixture").renamed("D4")
}

/// Base `(2|2)` abelian split algebra with `D(e0) = o3`, `D(o2) = e1` and
/// `x0 = 0`, `λ = 0`; its extension has `e0•o2 = o2•e0 = u*`.
pub fn mixed_gdext_data() -> GdextData {
    let base = abelian_split(GradedDim::new(1, 1));
    let mut d = Matrix::zeros(4, 4);
    d[(3, 0)] = int(1);
    d[(1, 2)] = int(1);
    let d = GradedMap::new(base.dims(), base.dims(), ODD, d).expect("odd map");
    GdextData {
        base,
        d,
        x0: vec![int(0); 4],
        lambda: int(0),
    }
}

/// Deterministic source of small random integers for fixture generators.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    int(rng.gen_range(-bound..=bound))
}

/// A random combination of `basis` with coefficients in `[-3, 3]`.
pub fn random_combination(rng: &mut ChaCha8Rng, basis: &[Vec<Rational>], len: usize) -> Vec<Rational> {
    let mut out = vec![int(0); len];
    for b in basis {
        let c = small(rng, 3);
        add_scaled(&mut out, &c, b);
    }
    out
}

/// Random even structure constants with about `density` percent nonzero
/// entries in `[-2, 2]`. Not mock-Lie in general.
pub fn random_even_table(rng: &mut ChaCha8Rng, dims: GradedDim, density: u32) -> SuperAlgebra {
    let n = dims.total();
    let mut a = SuperAlgebra::abelian(format!("random{dims}"), dims);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if (dims.parity(i) + dims.parity(j)) % 2 == dims.parity(k) && rng.gen_range(0..100) < density {
                    a.add_term(i, j, k, small(rng, 2)).expect("in range");
                }
            }
        }
    }
    a
}

/// A random mock-Lie superalgebra: a catalog seed followed by one to three
/// central extensions by random scalar cocycles.
pub fn random_mock_lie(rng: &mut ChaCha8Rng) -> SuperAlgebra {
    let seeds = [
        abelian(GradedDim::new(1, 1)),
        abelian(GradedDim::new(2, 0)),
        abelian(GradedDim::new(0, 2)),
        e2(),
        h3(),
    ];
    let mut a = seeds[rng.gen_range(0..seeds.len())].clone();
    for _ in 0..rng.gen_range(1..=3) {
        let module = if rng.gen_bool(0.5) { GradedDim::new(1, 0) } else { GradedDim::new(0, 1) };
        let triv = Representation::zero(a.clone(), module);
        let space: Vec<Cocycle> = cocycle_space(&a, &triv);
        let mut w = Cocycle::zero(a.dim(), module);
        for c in &space {
            let s = small(rng, 2);
            for (i, j, k, v) in c.entries() {
                w.add_term(i, j, k, &s * v).expect("in range");
            }
        }
        a = central_extension(&a, &triv, &w).expect("dims match");
    }
    a.renamed("random mock-Lie")
}

/// A random coadjoint cocycle combination on `a` (possibly zero).
pub fn random_cocycle(rng: &mut ChaCha8Rng, a: &SuperAlgebra, r: &Representation) -> Cocycle {
    let mut w = Cocycle::zero(a.dim(), r.module);
    for c in cocycle_space(a, r) {
        let s = small(rng, 2);
        for (i, j, k, v) in c.entries() {
            w.add_term(i, j, k, &s * v).expect("in range");
        }
    }
    w
}

/// Small pseudo-euclidean algebras used as bases for random extensions.
pub fn pseudo_euclidean_bases() -> Vec<PseudoEuclidean> {
    vec![
        e2_hyperbolic(),
        s2_symplectic(),
        abelian_split(GradedDim::new(1, 1)),
        tstar(&h3()),
        tstar(&e2()),
        s4_split(),
    ]
}

fn combine_maps(rng: &mut ChaCha8Rng, basis: &[GradedMap], dims: GradedDim, degree: u8) -> GradedMap {
    let mut m = Matrix::zeros(dims.total(), dims.total());
    for b in basis {
        m = m.add(&b.matrix.scale(&small(rng, 2))).expect("same shape");
    }
    GradedMap::new(dims, dims, degree, m).expect("block structure")
}

/// A random valid double-extension input: a catalog base acted on by a
/// one-dimensional null algebra through a random supersymmetric
/// anti-superderivation, with a random `σ`. Retries until the hypotheses
/// hold.
pub fn random_double_extension_input(rng: &mut ChaCha8Rng) -> DoubleExtensionInput {
    let bases = pseudo_euclidean_bases();
    loop {
        let j1 = bases[rng.gen_range(0..bases.len())].clone();
        let parity = rng.gen_range(0..2u8);
        let j2dims = if parity == EVEN { GradedDim::new(1, 0) } else { GradedDim::new(0, 1) };
        let j2 = SuperAlgebra::abelian("Ka", j2dims);
        let basis = ander_s(&j1, parity);
        let phi = vec![combine_maps(rng, &basis, j1.dims(), parity)];
        let sigma = if parity == EVEN {
            BilinearForm::from_terms(j2dims, &[(0, 0, small(rng, 2))]).expect("in range")
        } else {
            BilinearForm::zero(j2dims)
        };
        let x = DoubleExtensionInput { j1, j2, phi, sigma };
        if x.check().all_passed() {
            return x;
        }
    }
}

/// Random valid extension data over a catalog base. With `plain` set, `x0`
/// and `λ` are zero.
pub fn random_gdext_data(rng: &mut ChaCha8Rng, plain: bool) -> GdextData {
    let bases = pseudo_euclidean_bases();
    loop {
        let base = bases[rng.gen_range(0..bases.len())].clone();
        let dims = base.dims();
        let basis = ander_s(&base, ODD);
        let d = combine_maps(rng, &basis, dims, ODD);
        let mut g = GdextData::trivial(base);
        g.d = d;
        if !plain {
            let ann = annihilator(&g.base.algebra).part(EVEN);
            g.x0 = random_combination(rng, &ann, dims.total());
            g.lambda = small(rng, 2);
        }
        if g.check().all_passed() {
            return g;
        }
    }
}
