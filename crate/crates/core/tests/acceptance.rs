//! Acceptance suite: one verdict line per criterion.
//!
//! Runs without the libtest harness so every line is printed; the process
//! exits nonzero when any criterion fails.

mod common;

use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use common::{is_zero, q, supercyclic_defects, Table};
use mocklie::catalog::{self, rng};
use mocklie::cli::{parse, render_document, run};
use mocklie::extensions::{
    build_isometry, check_isometry_conditions, decompose, double_extension, gdext, iterate_decompose,
    verify_isometry, GdextConvention, GdextData, IsometryWitness, OddLayout,
};
use mocklie::forms::{
    check_ann_equals_square_perp, check_complement, check_form, check_odd_annihilator, check_supercyclic,
    flat_intertwiner, tstar_extension, FormProp, PseudoEuclidean, SCALAR_PRODUCT,
};
use mocklie::kernel::rational::frac;
use mocklie::kernel::{in_span, GradedDim, GradedMap, Matrix, Rational, EVEN, ODD};
use mocklie::representation::{
    adjoint, central_extension, check_cocycle, check_representation, coadjoint, cocycle_space, intertwiner_space,
    semidirect_product, Cocycle, Representation,
};
use mocklie::superalgebra::{
    annihilator, check_axioms, check_cube_zero, check_squared_identity, is_ideal, is_mock_lie, square_ideal, Axiom,
    Subspace,
};
use mocklie::SuperAlgebra;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn small(r: &mut ChaCha8Rng, bound: i64) -> Rational {
    q(r.gen_range(-bound..=bound))
}

fn nonzero(r: &mut ChaCha8Rng, bound: i64) -> Rational {
    loop {
        let c = small(r, bound);
        if !c.is_zero() {
            return c;
        }
    }
}

fn same_table(a: &SuperAlgebra, b: &SuperAlgebra) -> bool {
    a.dims() == b.dims() && a.entries().eq(b.entries())
}

// ---------------------------------------------------------------- criterion 1

fn random_table(r: &mut ChaCha8Rng, kind: usize) -> SuperAlgebra {
    let dims = loop {
        let d = GradedDim::new(r.gen_range(0..=3), r.gen_range(0..=3));
        if d.total() > 0 {
            break d;
        }
    };
    let n = dims.total();
    match kind {
        0 => loop {
            let a = catalog::random_mock_lie(r);
            if a.dims().even <= 3 && a.dims().odd <= 3 {
                break a;
            }
        },
        1 => {
            let density = r.gen_range(5..40);
            catalog::random_even_table(r, dims, density)
        }
        2 => {
            let mut a = SuperAlgebra::abelian("arbitrary", dims);
            for _ in 0..r.gen_range(1..=4) {
                let (i, j, k) = (r.gen_range(0..n), r.gen_range(0..n), r.gen_range(0..n));
                a.add_term(i, j, k, nonzero(r, 2)).unwrap();
            }
            a
        }
        3 => {
            let mut a = loop {
                let a = catalog::random_mock_lie(r);
                if a.dims().even <= 3 && a.dims().odd <= 3 {
                    break a;
                }
            };
            let n = a.dim();
            let (i, j) = (r.gen_range(0..n), r.gen_range(0..n));
            let p = (a.parity(i) + a.parity(j)) % 2;
            let ks: Vec<usize> = a.dims().range(p).collect();
            if !ks.is_empty() {
                let k = ks[r.gen_range(0..ks.len())];
                a.add_term(i, j, k, nonzero(r, 1)).unwrap();
            }
            a
        }
        _ => {
            // Supercommutative by construction: symmetrize a random even table.
            let density = r.gen_range(5..30);
            let t = catalog::random_even_table(r, dims, density);
            let mut a = SuperAlgebra::abelian("supercommutative", dims);
            for (i, j, k, c) in t.entries() {
                let s = if a.parity(i) * a.parity(j) == 1 { -Rational::one() } else { Rational::one() };
                a.add_term(i, j, k, c.clone()).unwrap();
                a.add_term(j, i, k, s * c).unwrap();
            }
            a
        }
    }
}

fn criterion_1() -> Verdict {
    let mut r = rng(101);
    let axioms = [Axiom::Evenness, Axiom::Supercommutativity, Axiom::SuperJacobi, Axiom::JordanSuper];
    let tables = 120;
    let mut passing = [0usize; 4];
    for t in 0..tables {
        let a = random_table(&mut r, t % 5);
        let o = Table::of(&a);
        let report = check_axioms(&a, &axioms);
        let oracle = [o.evenness(), o.supercommutative(), o.jacobi(), o.jordan()];
        for (k, ax) in axioms.iter().enumerate() {
            let entry = report.get(ax.label()).unwrap();
            ensure(entry.passed == oracle[k], || {
                format!("table {t} ({}): {} library {} oracle {}", a.dims(), ax, entry.passed, oracle[k])
            })?;
            if entry.passed {
                passing[k] += 1;
                continue;
            }
            let w = entry.witness.as_ref().ok_or(format!("table {t}: {ax} failed without witness"))?;
            let i = &w.indices;
            let replay = match ax {
                Axiom::Evenness => o.evenness_defect(i[0], i[1]),
                Axiom::Supercommutativity => o.supercomm_defect(i[0], i[1]),
                Axiom::SuperJacobi => o.jacobi_defect(i[0], i[1], i[2]),
                _ => o.jordan_defect(i[0], i[1], i[2], i[3]),
            };
            ensure(replay == w.vector && !is_zero(&replay), || {
                format!("table {t}: {ax} witness {i:?} does not replay")
            })?;
        }
    }
    Ok(format!(
        "{tables} tables, 0 disagreements; passing counts evenness {} supercommutativity {} super_jacobi {} jordan_super {}",
        passing[0], passing[1], passing[2], passing[3]
    ))
}

// ---------------------------------------------------------------- criterion 2

fn criterion_2() -> Verdict {
    let mut algebras: Vec<SuperAlgebra> = vec![
        catalog::zero(),
        catalog::e2(),
        catalog::h3(),
        catalog::s2(),
        catalog::g2(q(0)),
        catalog::abelian(GradedDim::new(2, 2)),
        catalog::d4().algebra,
        catalog::tstar(&catalog::h3()).algebra,
        catalog::idempotent(),
        catalog::grassmann(2),
    ];
    let mut r = rng(202);
    for _ in 0..40 {
        algebras.push(catalog::random_mock_lie(&mut r));
    }
    for _ in 0..200 {
        let d = GradedDim::new(r.gen_range(1..=3), r.gen_range(0..=2));
        let density = r.gen_range(3..15);
        algebras.push(catalog::random_even_table(&mut r, d, density));
    }
    let mut qualifying = 0;
    for (k, a) in algebras.iter().enumerate() {
        if !check_axioms(a, &[Axiom::Supercommutativity, Axiom::SuperJacobi]).all_passed() {
            continue;
        }
        qualifying += 1;
        let mut rep = check_axioms(a, &[Axiom::JordanSuper]);
        rep.merge(check_cube_zero(a, 8, k as u64));
        rep.merge(check_squared_identity(a, 8, k as u64));
        ensure(rep.all_passed(), || format!("algebra {k} ({}):\n{rep}", a.name))?;
    }
    ensure(qualifying >= 50, || format!("only {qualifying} qualifying algebras"))?;
    Ok(format!("{qualifying} of {} algebras qualify; all pass jordan_super, cube_zero, squared_identity", algebras.len()))
}

// ---------------------------------------------------------------- criterion 3

fn perturb_action(r: &mut ChaCha8Rng, rep: &Representation) -> Representation {
    let mut out = rep.clone();
    let n = rep.algebra.dim();
    let m = rep.module;
    if n == 0 || m.total() == 0 {
        return out;
    }
    for _ in 0..64 {
        let i = r.gen_range(0..n);
        let (row, col) = (r.gen_range(0..m.total()), r.gen_range(0..m.total()));
        if GradedMap::allowed(m, m, rep.algebra.parity(i), row, col) {
            out.action[i].matrix[(row, col)] += nonzero(r, 1);
            return out;
        }
    }
    out
}

fn criterion_3() -> Verdict {
    let mut r = rng(303);
    let (mut valid, mut broken) = (0, 0);
    let pairs = 32;
    for t in 0..pairs {
        let a = catalog::random_mock_lie(&mut r);
        let base = match t % 4 {
            0 => adjoint(&a).unwrap(),
            1 => coadjoint(&a).unwrap(),
            2 => Representation::zero(a.clone(), GradedDim::new(1, 1)),
            _ => adjoint(&a).unwrap(),
        };
        let rep = if t % 2 == 1 { perturb_action(&mut r, &base) } else { base };
        let is_rep = check_representation(&rep).all_passed();
        let s = semidirect_product(&a, &rep).map_err(|e| e.to_string())?;
        let ml = is_mock_lie(&s);
        ensure(is_rep == ml, || format!("pair {t}: representation {is_rep} semidirect mock-Lie {ml}"))?;
        if is_rep {
            valid += 1;
        } else {
            broken += 1;
        }
    }
    let e2 = catalog::e2();
    let mut bad = adjoint(&e2).unwrap();
    bad.action[1] = bad.action[0].clone();
    ensure(!check_representation(&bad).all_passed() && !is_mock_lie(&semidirect_product(&e2, &bad).unwrap()), || {
        "fixed broken action not detected".into()
    })?;
    ensure(valid > 0 && broken > 0, || format!("valid {valid} broken {broken}"))?;
    Ok(format!("{} pairs ({} valid, {} broken), both implications hold", pairs + 1, valid, broken + 1))
}

// ---------------------------------------------------------------- criterion 4

fn perturb_cocycle(r: &mut ChaCha8Rng, a: &SuperAlgebra, w: &Cocycle, symmetric: bool) -> Cocycle {
    let mut out = w.clone();
    let n = a.dim();
    let m = w.module;
    if n == 0 || m.total() == 0 {
        return out;
    }
    let (i, j) = (r.gen_range(0..n), r.gen_range(0..n));
    let c = nonzero(r, 2);
    if symmetric {
        let p = (a.parity(i) + a.parity(j)) % 2;
        let ks: Vec<usize> = m.range(p).collect();
        if ks.is_empty() {
            return out;
        }
        let k = ks[r.gen_range(0..ks.len())];
        let s = if a.parity(i) * a.parity(j) == 1 { -Rational::one() } else { Rational::one() };
        out.add_term(i, j, k, c.clone()).unwrap();
        out.add_term(j, i, k, s * c).unwrap();
    } else {
        out.add_term(i, j, r.gen_range(0..m.total()), c).unwrap();
    }
    out
}

/// Cocycle coordinates of `Ω(e_i, e_j)` against the dual basis.
fn omega_fn(w: &Cocycle) -> impl Fn(usize, usize) -> Vec<Rational> + '_ {
    move |i, j| w.get(i, j).to_vec()
}

fn supercyclic_combinations(a: &SuperAlgebra, basis: &[Cocycle]) -> Vec<Cocycle> {
    if basis.is_empty() {
        return Vec::new();
    }
    let cols: Vec<Vec<Rational>> = basis
        .iter()
        .map(|w| supercyclic_defects(a.dim(), a.dims().even, omega_fn(w)))
        .collect();
    let rows = cols[0].len();
    let m = Matrix::from_columns(&cols, rows).unwrap();
    m.nullspace()
        .into_iter()
        .map(|coeffs| {
            let mut w = Cocycle::zero(a.dim(), a.dims());
            for (c, b) in coeffs.iter().zip(basis) {
                for (i, j, k, v) in b.entries() {
                    w.add_term(i, j, k, c * v).unwrap();
                }
            }
            w
        })
        .collect()
}

fn criterion_4() -> Verdict {
    let mut r = rng(404);
    let (mut cocycles, mut non) = (0, 0);
    let trials = 30;
    for t in 0..trials {
        let a = catalog::random_mock_lie(&mut r);
        let rep = match t % 4 {
            0 => Representation::zero(a.clone(), GradedDim::new(1, 0)),
            1 => Representation::zero(a.clone(), GradedDim::new(0, 1)),
            2 => adjoint(&a).unwrap(),
            _ => coadjoint(&a).unwrap(),
        };
        let w = catalog::random_cocycle(&mut r, &a, &rep);
        let w = match t % 3 {
            0 => w,
            1 => perturb_cocycle(&mut r, &a, &w, true),
            _ => perturb_cocycle(&mut r, &a, &w, false),
        };
        let ok = check_cocycle(&a, &rep, &w).all_passed();
        let ext = central_extension(&a, &rep, &w).map_err(|e| e.to_string())?;
        let ml = is_mock_lie(&ext);
        ensure(ok == ml, || format!("central extension {t}: cocycle {ok} mock-Lie {ml}"))?;
        if ok {
            cocycles += 1;
        } else {
            non += 1;
        }
    }
    ensure(cocycles > 0 && non > 0, || format!("cocycles {cocycles} non-cocycles {non}"))?;

    let (mut cyclic, mut acyclic) = (0, 0);
    let mut tstar_trials = 0;
    let mut algs: Vec<SuperAlgebra> = vec![catalog::abelian(GradedDim::new(2, 0)), catalog::e2(), catalog::h3()];
    for _ in 0..8 {
        algs.push(catalog::random_mock_lie(&mut r));
    }
    for (t, a) in algs.iter().enumerate() {
        let co = coadjoint(a).unwrap();
        let basis = cocycle_space(a, &co);
        let cyc = supercyclic_combinations(a, &basis);
        for k in 0..4 {
            let pool = if k % 2 == 0 { &basis } else { &cyc };
            let mut w = Cocycle::zero(a.dim(), a.dims());
            for b in pool {
                let c = small(&mut r, 2);
                for (i, j, kk, v) in b.entries() {
                    w.add_term(i, j, kk, &c * v).unwrap();
                }
            }
            let (alg, form, _) = tstar_extension(a, &w).map_err(|e| e.to_string())?;
            let inv = check_form(&alg, &form, &[FormProp::Invariant]).unwrap().all_passed();
            let sc = check_supercyclic(a, &w).all_passed();
            let oracle = is_zero(&supercyclic_defects(a.dim(), a.dims().even, omega_fn(&w)));
            ensure(inv == sc && sc == oracle, || {
                format!("T* algebra {t} trial {k}: invariant {inv} supercyclic {sc} oracle {oracle}")
            })?;
            tstar_trials += 1;
            if sc {
                cyclic += 1;
            } else {
                acyclic += 1;
            }
        }
    }
    // Abelian (2|0) with Ω(e0, e0) = e1*: a cocycle that is not supercyclic.
    let a = catalog::abelian(GradedDim::new(2, 0));
    let mut w = Cocycle::zero(2, a.dims());
    w.add_term(0, 0, 1, q(1)).unwrap();
    let (alg, form, _) = tstar_extension(&a, &w).unwrap();
    ensure(!check_form(&alg, &form, &[FormProp::Invariant]).unwrap().all_passed(), || {
        "fixed non-supercyclic cocycle gave an invariant form".into()
    })?;
    ensure(cyclic > 0 && acyclic > 0, || format!("supercyclic {cyclic} other {acyclic}"))?;
    Ok(format!(
        "central extension: {trials} Ω ({cocycles} cocycles, {non} not); T*: {} Ω ({cyclic} supercyclic, {} not); zero exceptions",
        tstar_trials + 1,
        acyclic + 1
    ))
}

// ---------------------------------------------------------------- criterion 5

fn ideal_generated(a: &SuperAlgebra, v: &[Rational]) -> Subspace {
    let d = a.dims();
    let mut s = Subspace::graded_span(d, &[v.to_vec()]);
    loop {
        let mut vs = s.basis.clone();
        for b in &s.basis {
            for i in 0..a.dim() {
                let e = d.basis_vector(i);
                vs.push(a.multiply(&e, b).unwrap());
                vs.push(a.multiply(b, &e).unwrap());
            }
        }
        let next = Subspace::graded_span(d, &vs);
        if next.dim() == s.dim() {
            return s;
        }
        s = next;
    }
}

fn pseudo_euclidean_fixtures(r: &mut ChaCha8Rng) -> Vec<PseudoEuclidean> {
    let mut v = catalog::pseudo_euclidean_bases();
    v.push(catalog::d4());
    for _ in 0..4 {
        v.push(catalog::tstar(&catalog::random_mock_lie(r)));
    }
    for _ in 0..4 {
        v.push(double_extension(&catalog::random_double_extension_input(r)).unwrap());
    }
    for _ in 0..4 {
        let g = catalog::random_gdext_data(r, true);
        v.push(gdext(&g, GdextConvention::Corrected).unwrap().0);
    }
    v
}

fn criterion_5() -> Verdict {
    let mut r = rng(505);
    let fixtures = pseudo_euclidean_fixtures(&mut r);
    let mut ideals_tested = 0;
    for (f, p) in fixtures.iter().enumerate() {
        let a = &p.algebra;
        let d = p.dims();
        ensure(p.check().all_passed(), || format!("fixture {f} is not pseudo-euclidean"))?;
        let rep = check_ann_equals_square_perp(p);
        ensure(rep.all_passed(), || format!("fixture {f}: Ann = J²⊥ fails\n{rep}"))?;
        let mut ideals = vec![Subspace::zero(d), Subspace::whole(d), annihilator(a), square_ideal(a)];
        for i in 0..a.dim() {
            ideals.push(ideal_generated(a, &d.basis_vector(i)));
        }
        for (k, s) in ideals.iter().enumerate() {
            ensure(is_ideal(a, s), || format!("fixture {f}: subspace {k} is not an ideal"))?;
            let c = check_complement(p, s);
            ensure(c.all_passed(), || format!("fixture {f} ideal {k}:\n{c}"))?;
            ideals_tested += 1;
        }
        ensure(d.odd % 2 == 0, || format!("fixture {f}: odd dimension {}", d.odd))?;
        let odd_ann = annihilator(a).part(ODD);
        ensure(d.odd == 0 || !odd_ann.is_empty(), || format!("fixture {f}: Ann ∩ J₁ = 0"))?;
        ensure(check_odd_annihilator(p).all_passed(), || format!("fixture {f}: odd annihilator check"))?;
        let phi = flat_intertwiner(p).map_err(|e| format!("fixture {f}: {e}"))?;
        ensure(phi.matrix.rank() == d.total(), || format!("fixture {f}: flat map singular"))?;
        let space = intertwiner_space(&adjoint(a).unwrap(), &coadjoint(a).unwrap()).unwrap();
        let span: Vec<Vec<Rational>> = space.basis.iter().map(|m| m.matrix.entries().to_vec()).collect();
        ensure(in_span(&span, phi.matrix.entries()), || format!("fixture {f}: flat map outside intertwiner space"))?;
    }
    Ok(format!("{} fixtures, {ideals_tested} ideals; all structure statements hold", fixtures.len()))
}

// ---------------------------------------------------------------- criterion 6

/// Invariance, supersymmetry and evenness of a gram matrix, expanded directly.
fn form_oracle(p: &PseudoEuclidean) -> bool {
    let t = Table::of(&p.algebra);
    let g = &p.form.gram;
    let n = t.n;
    let b = |x: &[Rational], y: &[Rational]| -> Rational {
        let mut s = Rational::zero();
        for i in 0..n {
            for j in 0..n {
                s += &x[i] * &g[(i, j)] * &y[j];
            }
        }
        s
    };
    for x in 0..n {
        for y in 0..n {
            if t.p(x) != t.p(y) && !g[(x, y)].is_zero() {
                return false;
            }
            let s = common::sgn(t.p(x) * t.p(y));
            if g[(x, y)] != s * &g[(y, x)] {
                return false;
            }
            for z in 0..n {
                let xy = t.mul(&t.e(x), &t.e(y));
                let yz = t.mul(&t.e(y), &t.e(z));
                if b(&xy, &t.e(z)) != b(&t.e(x), &yz) {
                    return false;
                }
            }
        }
    }
    g.rank() == n
}

fn criterion_6() -> Verdict {
    let mut r = rng(606);
    let d4 = catalog::d4();
    let mut results = vec![("D4".to_string(), d4)];
    for k in 0..12 {
        let x = catalog::random_double_extension_input(&mut r);
        let p = double_extension(&x).map_err(|e| format!("input {k}: {e}"))?;
        results.push((format!("random {k}"), p));
    }
    for (name, p) in &results {
        let rep = p.check();
        ensure(rep.all_passed(), || format!("{name}:\n{rep}"))?;
        let t = Table::of(&p.algebra);
        ensure(t.evenness() && t.supercommutative() && t.jacobi(), || format!("{name}: oracle axioms fail"))?;
        ensure(form_oracle(p), || format!("{name}: oracle form properties fail"))?;
    }
    Ok(format!("D4 and {} random inputs pass the mock-Lie suite and all four form properties", results.len() - 1))
}

// ---------------------------------------------------------------- criterion 7

fn criterion_7() -> Verdict {
    let mut r = rng(707);
    let mut data: Vec<GdextData> = vec![GdextData::trivial(catalog::e2_hyperbolic()), catalog::mixed_gdext_data()];
    for _ in 0..5 {
        data.push(catalog::random_gdext_data(&mut r, true));
    }
    while data.len() < 14 {
        let g = catalog::random_gdext_data(&mut r, false);
        if !g.is_plain() {
            data.push(g);
        }
    }
    let mut problems: Vec<String> = Vec::new();
    let mut clause_failures: std::collections::BTreeMap<String, usize> = Default::default();
    let mut non_plain = 0;
    for (k, g) in data.iter().enumerate() {
        let (p, _) = gdext(g, GdextConvention::Corrected).map_err(|e| format!("data {k}: {e}"))?;
        let mut rep = check_axioms(&p.algebra, &[Axiom::SuperJacobi, Axiom::Supercommutativity]);
        rep.merge(check_form(&p.algebra, &p.form, &SCALAR_PRODUCT).unwrap());
        for label in ["super_jacobi", "even", "supersymmetric", "invariant", "nondegenerate"] {
            if rep.passed(label) != Some(true) {
                *clause_failures.entry(label.to_string()).or_default() += 1;
                if g.is_plain() {
                    problems.push(format!("data {k} (x0 = 0, λ = 0): {label} fails"));
                }
            }
        }
        let sc = rep.get("supercommutativity").unwrap();
        if sc.passed != g.is_plain() {
            problems.push(format!("data {k}: supercommutativity {} with plain = {}", sc.passed, g.is_plain()));
        }
        if !g.is_plain() {
            non_plain += 1;
            let lay = OddLayout {
                base: g.base.dims(),
                with_dual: true,
            };
            let mut expected = lay.embed(&g.x0);
            expected[lay.u_star()] += &g.lambda;
            let expected: Vec<Rational> = expected.iter().map(|c| c * q(2)).collect();
            let w = sc.witness.as_ref();
            let ok = w.is_some_and(|w| w.indices == vec![lay.u(), lay.u()] && w.vector == expected);
            if !ok {
                problems.push(format!("data {k}: (u,u) witness with defect 2(x0 + λu*) not reported"));
            }
        }
    }
    if !clause_failures.is_empty() {
        let summary: Vec<String> = clause_failures.iter().map(|(l, c)| format!("{l} fails on {c}")).collect();
        problems.push(format!(
            "with (x0, λ) ≠ (0, 0) on {non_plain} of {} data: {}; B̃(u•u, x) = B(x0, x) but B̃(u, u•x) = -B(x0, x), and B̃(u•u, u) = -λ but B̃(u, u•u) = λ",
            data.len(),
            summary.join(", ")
        ));
    }
    if problems.is_empty() {
        Ok(format!("{} data ({non_plain} with nonzero x0 or λ), every clause as stated", data.len()))
    } else {
        Err(problems.join("; "))
    }
}

// ---------------------------------------------------------------- criterion 8

fn criterion_8() -> Verdict {
    let mut r = rng(808);
    let mut fixtures = vec![catalog::s2_symplectic(), catalog::s4_split()];
    fixtures.push(gdext(&catalog::mixed_gdext_data(), GdextConvention::Corrected).unwrap().0);
    for _ in 0..6 {
        let g = catalog::random_gdext_data(&mut r, true);
        fixtures.push(gdext(&g, GdextConvention::Corrected).unwrap().0);
    }
    let mut steps = 0;
    for (f, p) in fixtures.iter().enumerate() {
        let dec = decompose(p).map_err(|e| format!("fixture {f}: {e}"))?;
        let moved_alg = p.algebra.change_basis(&dec.basis, p.dims()).unwrap();
        let moved_form = p.form.change_basis(&dec.basis, p.dims()).unwrap();
        ensure(same_table(&moved_alg, &dec.transformed.algebra) && moved_form == dec.transformed.form, || {
            format!("fixture {f}: transformed algebra is not the input in the new basis")
        })?;
        let (rebuilt, _) = gdext(&dec.data, GdextConvention::Corrected).map_err(|e| format!("fixture {f}: {e}"))?;
        ensure(same_table(&rebuilt.algebra, &moved_alg), || format!("fixture {f}: structure constants differ"))?;
        ensure(rebuilt.form.gram == moved_form.gram, || format!("fixture {f}: gram differs"))?;
        ensure(dec.report.all_passed(), || format!("fixture {f}:\n{}", dec.report))?;
        let tower = iterate_decompose(p).map_err(|e| format!("fixture {f}: {e}"))?;
        ensure(tower.residual.dims().odd == 0, || format!("fixture {f}: residual {}", tower.residual.dims()))?;
        ensure(tower.steps.len() == p.dims().odd / 2, || format!("fixture {f}: tower length {}", tower.steps.len()))?;
        ensure(tower.all_passed(), || format!("fixture {f}: a tower step failed"))?;
        steps += tower.steps.len();
    }
    Ok(format!("{} fixtures round-trip exactly; towers of total length {steps} end in odd dimension 0", fixtures.len()))
}

// ---------------------------------------------------------------- criterion 9

struct Triple {
    w: IsometryWitness,
    g1: GdextData,
    g2: GdextData,
}

fn random_triple(r: &mut ChaCha8Rng) -> Triple {
    let g1 = loop {
        let g = catalog::random_gdext_data(r, true);
        if !g.d.is_zero() {
            break g;
        }
    };
    let dims = g1.base.dims();
    let n = dims.total();
    let abelian = g1.base.algebra.is_abelian();
    let s = if abelian && r.gen_bool(0.5) {
        GradedMap::new(dims, dims, EVEN, Matrix::identity(n).scale(&-Rational::one())).unwrap()
    } else {
        GradedMap::identity(dims)
    };
    let alphas = [q(1), q(-1), q(2), frac(1, 2), q(-3)];
    let alpha = alphas[r.gen_range(0..alphas.len())].clone();
    let z0 = catalog::random_combination(r, &annihilator(&g1.base.algebra).part(ODD), n);
    let s_inv = s.matrix.inverse().unwrap();
    let d2 = s.matrix.mul(&g1.d.matrix).unwrap().mul(&s_inv).unwrap().scale(&alpha);
    let mut g2 = GdextData::trivial(g1.base.clone());
    g2.d = GradedMap::new(dims, dims, ODD, d2).unwrap();
    Triple {
        w: IsometryWitness { s, z0, alpha },
        g1,
        g2,
    }
}

/// Runs the conditions and the induced-map verification; `None` when a gdext
/// precondition rejects the data.
fn isometry_run(t: &Triple) -> Result<(mocklie::CheckReport, mocklie::CheckReport, bool), String> {
    let cond = check_isometry_conditions(&t.w, &t.g1, &t.g2).map_err(|e| e.to_string())?;
    let (p1, r1) = gdext(&t.g1, GdextConvention::Corrected).map_err(|e| e.to_string())?;
    let (p2, r2) = gdext(&t.g2, GdextConvention::Corrected).map_err(|e| e.to_string())?;
    let psi = build_isometry(&t.w, &t.g1, &t.g2).map_err(|e| e.to_string())?;
    let ver = verify_isometry(&psi, &p1, &p2).map_err(|e| e.to_string())?;
    Ok((cond, ver, r1.all_passed() && r2.all_passed()))
}

fn criterion_9() -> Verdict {
    let mut r = rng(909);
    let triples = 12;
    let mut nonzero_z0 = 0;
    for k in 0..triples {
        let t = random_triple(&mut r);
        if t.w.z0.iter().any(|c| !c.is_zero()) {
            nonzero_z0 += 1;
        }
        let (cond, ver, suites) = isometry_run(&t).map_err(|e| format!("triple {k}: {e}"))?;
        ensure(cond.all_passed() && suites, || format!("triple {k}: generated triple does not qualify\n{cond}"))?;
        ensure(ver.all_passed(), || format!("triple {k}: verify_isometry fails\n{ver}"))?;

        let mut shifted = Triple {
            w: t.w.clone(),
            g1: t.g1.clone(),
            g2: t.g2.clone(),
        };
        shifted.g2.lambda += q(1);
        let (c, v, _) = isometry_run(&shifted).map_err(|e| format!("triple {k} λ shift: {e}"))?;
        ensure(c.passed("lambda_condition") == Some(false) && !v.all_passed(), || {
            format!("triple {k}: λ shift not detected\n{c}{v}")
        })?;

        let mut scaled = Triple {
            w: t.w.clone(),
            g1: t.g1.clone(),
            g2: t.g2.clone(),
        };
        scaled.g2.d.matrix = scaled.g2.d.matrix.scale(&q(2));
        let (c, v, _) = isometry_run(&scaled).map_err(|e| format!("triple {k} scaled D2: {e}"))?;
        ensure(c.passed("d_condition") == Some(false) && !v.all_passed(), || {
            format!("triple {k}: scaled D2 not detected\n{c}{v}")
        })?;

        let mut stretched = Triple {
            w: t.w.clone(),
            g1: t.g1.clone(),
            g2: t.g2.clone(),
        };
        stretched.w.s.matrix = stretched.w.s.matrix.scale(&q(2));
        let (c, v, _) = isometry_run(&stretched).map_err(|e| format!("triple {k} non-isometric s: {e}"))?;
        ensure(c.passed("s/isometry") == Some(false) && !v.all_passed(), || {
            format!("triple {k}: non-isometric s not detected\n{c}{v}")
        })?;
    }
    Ok(format!(
        "{triples} triples ({nonzero_z0} with z0 ≠ 0) verify; λ shift, scaled D2 and non-isometric s each detected by both checks"
    ))
}

// --------------------------------------------------------------- criterion 10

fn criterion_10() -> Verdict {
    let tests = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests");
    let fixtures = tests.join("fixtures");
    let mut paths: Vec<PathBuf> = fs::read_dir(&fixtures)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "alg") && !p.ends_with("malformed.alg"))
        .collect();
    paths.sort();
    for p in &paths {
        let text = fs::read_to_string(p).unwrap();
        let doc = parse(&text).map_err(|e| format!("{}: {e:?}", p.display()))?;
        ensure(parse(&render_document(&doc)).as_ref() == Ok(&doc), || format!("{}: round trip", p.display()))?;
    }
    let f = |name: &str| fixtures.join(name).display().to_string();
    let cases: Vec<(&str, Vec<String>)> = vec![
        ("check_e2", vec!["check".into(), "--mock-lie".into(), f("e2.alg")]),
        ("check_g2lambda1", vec!["check".into(), "--mock-lie".into(), f("g2lambda1.alg")]),
        ("decompose_s2", vec!["decompose".into(), f("s2.alg")]),
        (
            "construct_d4",
            vec!["construct".into(), "double-ext".into(), f("e2_hyperbolic.alg"), f("ka.alg"), "--rep".into(), "phi".into()],
        ),
        ("construct_gdext", vec!["construct".into(), "gdext".into(), f("mixed_base.alg"), "--d".into(), "D".into()]),
    ];
    let dir = fixtures.display().to_string();
    for (name, args) in &cases {
        let mut full = vec!["mocklie".to_string()];
        full.extend(args.iter().cloned());
        let a = run(full.clone());
        let b = run(full);
        ensure(a == b, || format!("{name}: two runs differ"))?;
        let got = format!("exit {}\n{}", a.code, a.output.replace(&dir, "<fixtures>"));
        let want = fs::read_to_string(tests.join("golden").join(format!("{name}.out")))
            .map_err(|e| format!("{name}: golden file: {e}"))?;
        ensure(got == want, || format!("{name}: output differs from golden file"))?;
        if name.starts_with("construct") {
            let doc = parse(&a.output).map_err(|e| format!("{name}: emitted document: {e:?}"))?;
            ensure(render_document(&doc) == a.output, || format!("{name}: emitted document not canonical"))?;
        }
    }
    Ok(format!("{} fixtures round-trip; {} golden transcripts byte-identical across runs", paths.len(), cases.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("axiom checks agree with a brute-force oracle", criterion_1),
        ("mock-Lie implies Jordan, cube-zero and squared identities", criterion_2),
        ("semidirect product is mock-Lie iff the action is a representation", criterion_3),
        ("central extension iff cocycle; T* invariance iff supercyclic", criterion_4),
        ("pseudo-euclidean structure statements", criterion_5),
        ("double extensions are pseudo-euclidean", criterion_6),
        ("generalized double extension clause by clause", criterion_7),
        ("decomposition round trip and tower termination", criterion_8),
        ("isometry conditions versus induced map", criterion_9),
        ("CLI determinism and document round trip", criterion_10),
    ];
    let mut failed = 0;
    let start = Instant::now();
    for (k, (title, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let verdict = std::panic::catch_unwind(f).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = t.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("PASS criterion {}: {title} ({detail}) [{secs:.2}s]", k + 1),
            Err(reason) => {
                failed += 1;
                println!("FAIL criterion {}: {title} -- {reason} [{secs:.2}s]", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.2}s",
        criteria.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
