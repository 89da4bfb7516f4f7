//! Bilinear forms, pseudo-euclidean algebras and T*-extensions.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::kernel::rational::{one, sign};
use crate::kernel::{dot, GradedDim, GradedMap, Matrix, Rational, EVEN};
use crate::report::{CheckReport, Witness};
use crate::representation::{
    central_extension, check_cocycle, coadjoint_unchecked, adjoint_unchecked, intertwiner_defect, Cocycle,
};
use crate::superalgebra::check::{check_axioms, MOCK_LIE};
use crate::superalgebra::construct::{block_dims, block_index};
use crate::superalgebra::subspace::{annihilator, annihilator_of, is_ideal, square_ideal, Subspace};
use crate::superalgebra::SuperAlgebra;

/// Gram matrix `gram[(i, j)] = B(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    pub dims: GradedDim,
    pub gram: Matrix,
}

impl BilinearForm {
    pub fn new(dims: GradedDim, gram: Matrix) -> Result<Self> {
        if gram.rows() != dims.total() || gram.cols() != dims.total() {
            return Err(Error::mismatch(dims.total(), gram.rows()));
        }
        Ok(BilinearForm { dims, gram })
    }

    pub fn zero(dims: GradedDim) -> Self {
        BilinearForm {
            dims,
            gram: Matrix::zeros(dims.total(), dims.total()),
        }
    }

    pub fn from_terms(dims: GradedDim, terms: &[(usize, usize, Rational)]) -> Result<Self> {
        let mut f = BilinearForm::zero(dims);
        for (i, j, c) in terms {
            if *i >= dims.total() || *j >= dims.total() {
                return Err(Error::Invalid(format!("form entry ({i}, {j}) out of range")));
            }
            f.gram[(*i, *j)] += c;
        }
        Ok(f)
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.gram[(i, j)]
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        dot(x, &self.gram.mul_vec(y).expect("vector length"))
    }

    /// Gram matrix of the restriction to the span of `basis`.
    pub fn restricted(&self, basis: &[Vec<Rational>]) -> Matrix {
        Matrix::from_fn(basis.len(), basis.len(), |r, c| self.eval(&basis[r], &basis[c]))
    }

    /// Gram matrix in a new basis: `Pᵀ G P`.
    pub fn change_basis(&self, basis: &Matrix, dims: GradedDim) -> Result<BilinearForm> {
        let g = basis.transpose().mul(&self.gram)?.mul(basis)?;
        BilinearForm::new(dims, g)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormProp {
    Even,
    Supersymmetric,
    SkewSupersymmetric,
    Invariant,
    Nondegenerate,
}

/// The four properties of an invariant scalar product.
pub const SCALAR_PRODUCT: [FormProp; 4] = [
    FormProp::Even,
    FormProp::Supersymmetric,
    FormProp::Invariant,
    FormProp::Nondegenerate,
];

impl FormProp {
    pub const ALL: [FormProp; 5] = [
        FormProp::Even,
        FormProp::Supersymmetric,
        FormProp::SkewSupersymmetric,
        FormProp::Invariant,
        FormProp::Nondegenerate,
    ];

    pub fn label(self) -> &'static str {
        match self {
            FormProp::Even => "even",
            FormProp::Supersymmetric => "supersymmetric",
            FormProp::SkewSupersymmetric => "skew_supersymmetric",
            FormProp::Invariant => "invariant",
            FormProp::Nondegenerate => "nondegenerate",
        }
    }
}

impl fmt::Display for FormProp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for FormProp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FormProp::ALL
            .into_iter()
            .find(|p| p.label() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown form property {s:?}")))
    }
}

pub fn check_form(a: &SuperAlgebra, b: &BilinearForm, props: &[FormProp]) -> Result<CheckReport> {
    if a.dims() != b.dims {
        return Err(Error::mismatch(a.dim(), b.dims.total()));
    }
    let mut report = CheckReport::new();
    for &p in props {
        let w = match p {
            FormProp::Even => form_evenness(b),
            FormProp::Supersymmetric => form_symmetry(b, false),
            FormProp::SkewSupersymmetric => form_symmetry(b, true),
            FormProp::Invariant => form_invariance(a, b),
            FormProp::Nondegenerate => form_nondegeneracy(b),
        };
        report.verdict(p.label(), w);
    }
    Ok(report)
}

fn form_evenness(b: &BilinearForm) -> Option<Witness> {
    let n = b.dims.total();
    (0..n * n).map(|p| (p / n, p % n)).find_map(|(i, j)| {
        let c = b.get(i, j);
        (b.dims.parity(i) != b.dims.parity(j) && !c.is_zero()).then(|| Witness {
            indices: vec![i, j],
            vector: vec![c.clone()],
        })
    })
}

/// `B(x, y) ∓ (-1)^{|x||y|} B(y, x)`.
fn form_symmetry(b: &BilinearForm, skew: bool) -> Option<Witness> {
    let n = b.dims.total();
    (0..n * n).map(|p| (p / n, p % n)).find_map(|(i, j)| {
        let mut s = sign(b.dims.parity(i) * b.dims.parity(j));
        if skew {
            s = -s;
        }
        let d = b.get(i, j) - s * b.get(j, i);
        (!d.is_zero()).then(|| Witness {
            indices: vec![i, j],
            vector: vec![d],
        })
    })
}

/// `B(x•y, z) - B(x, y•z)` over all basis triples.
fn form_invariance(a: &SuperAlgebra, b: &BilinearForm) -> Option<Witness> {
    let n = a.dim();
    for x in 0..n {
        for y in 0..n {
            let xy = b.gram.transpose().mul_vec(a.product(x, y)).expect("length");
            for z in 0..n {
                let lhs = &xy[z];
                let rhs = dot(b.gram.row(x), a.product(y, z));
                let d = lhs - rhs;
                if !d.is_zero() {
                    return Some(Witness {
                        indices: vec![x, y, z],
                        vector: vec![d],
                    });
                }
            }
        }
    }
    None
}

/// Fails with a nonzero radical vector.
fn form_nondegeneracy(b: &BilinearForm) -> Option<Witness> {
    b.gram.nullspace().into_iter().next().map(|v| Witness {
        indices: Vec::new(),
        vector: v,
    })
}

/// A mock-Lie superalgebra with an even, supersymmetric, invariant,
/// nondegenerate form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoEuclidean {
    pub algebra: SuperAlgebra,
    pub form: BilinearForm,
}

impl PseudoEuclidean {
    pub fn new(algebra: SuperAlgebra, form: BilinearForm) -> Result<Self> {
        let p = PseudoEuclidean::unchecked(algebra, form)?;
        let report = p.check();
        if report.all_passed() {
            Ok(p)
        } else {
            Err(Error::precondition(format!("{} is not pseudo-euclidean", p.algebra.name), report))
        }
    }

    pub fn unchecked(algebra: SuperAlgebra, form: BilinearForm) -> Result<Self> {
        if algebra.dims() != form.dims {
            return Err(Error::mismatch(algebra.dim(), form.dims.total()));
        }
        Ok(PseudoEuclidean { algebra, form })
    }

    /// Mock-Lie axioms followed by the four form properties.
    pub fn check(&self) -> CheckReport {
        let mut r = check_axioms(&self.algebra, &MOCK_LIE);
        r.merge(check_form(&self.algebra, &self.form, &SCALAR_PRODUCT).expect("dims match"));
        r
    }

    pub fn dims(&self) -> GradedDim {
        self.algebra.dims()
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.algebra.name = name.into();
        self
    }
}

/// `{x : B(x, s) = 0 for all s in S}`.
pub fn orthogonal_complement(p: &PseudoEuclidean, s: &Subspace) -> Subspace {
    let rows: Vec<Vec<Rational>> = s
        .basis
        .iter()
        .map(|v| p.form.gram.mul_vec(v).expect("length"))
        .collect();
    Subspace::graded_kernel(p.dims(), &rows)
}

/// For an ideal `I`: `I⊥` is an ideal, `I•I⊥ = 0`, and `I⊥ ⊆ Ann(I)`.
pub fn check_complement(p: &PseudoEuclidean, s: &Subspace) -> CheckReport {
    let a = &p.algebra;
    let perp = orthogonal_complement(p, s);
    let mut r = CheckReport::new();
    let n = a.dim();
    let escape = perp.basis.iter().enumerate().find_map(|(k, v)| {
        (0..n).find_map(|i| {
            [a.mul_left_basis(i, v), a.mul_right_basis(v, i)]
                .into_iter()
                .find(|w| !perp.contains(w))
                .map(|w| (k, i, w))
        })
    });
    match escape {
        Some((k, i, w)) => r.fail("perp_is_ideal", vec![k, i], w),
        None => r.pass("perp_is_ideal"),
    };
    let prod = s.basis.iter().enumerate().find_map(|(i, x)| {
        perp.basis.iter().enumerate().find_map(|(j, y)| {
            let v = a.mul(x, y);
            (!crate::kernel::is_zero_vec(&v)).then_some((i, j, v))
        })
    });
    match prod {
        Some((i, j, v)) => r.fail("ideal_times_perp_zero", vec![i, j], v),
        None => r.pass("ideal_times_perp_zero"),
    };
    let ann = annihilator_of(a, s);
    match perp.basis.iter().position(|v| !ann.contains(v)) {
        Some(k) => r.fail("perp_in_annihilator_of_ideal", vec![k], perp.basis[k].clone()),
        None => r.pass("perp_in_annihilator_of_ideal"),
    };
    r
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdealPredicates {
    pub is_ideal: bool,
    pub is_isotropic: bool,
    pub is_nondegenerate: bool,
}

pub fn ideal_predicates(p: &PseudoEuclidean, s: &Subspace) -> IdealPredicates {
    let g = p.form.restricted(&s.basis);
    IdealPredicates {
        is_ideal: is_ideal(&p.algebra, s),
        is_isotropic: g.is_zero(),
        is_nondegenerate: g.rank() == s.dim(),
    }
}

/// `Ann(J) = (J•J)⊥`.
pub fn check_ann_equals_square_perp(p: &PseudoEuclidean) -> CheckReport {
    let ann = annihilator(&p.algebra);
    let perp = orthogonal_complement(p, &square_ideal(&p.algebra));
    let mut r = CheckReport::new();
    let missing = perp
        .basis
        .iter()
        .find(|v| !ann.contains(v))
        .or_else(|| ann.basis.iter().find(|v| !perp.contains(v)));
    match missing {
        Some(v) => r.fail("ann_equals_square_perp", vec![ann.dim(), perp.dim()], v.clone()),
        None => r.pass("ann_equals_square_perp"),
    };
    r
}

/// `dim J₁` is even, and `Ann(J) ∩ J₁ ≠ 0` when `J₁ ≠ 0`. The second entry
/// carries the first basis vector of `Ann(J) ∩ J₁` as supporting witness.
pub fn check_odd_annihilator(p: &PseudoEuclidean) -> CheckReport {
    let d = p.dims();
    let mut r = CheckReport::new();
    if d.odd.is_multiple_of(2) {
        r.pass("odd_dimension_even");
    } else {
        r.fail("odd_dimension_even", vec![d.odd], Vec::new());
    }
    if d.odd == 0 {
        r.pass("odd_annihilator").note("vacuous: no odd part");
        return r;
    }
    match odd_annihilator(&p.algebra).basis.first() {
        Some(v) => r.push(
            "odd_annihilator",
            true,
            Some(Witness {
                indices: Vec::new(),
                vector: v.clone(),
            }),
            None,
        ),
        None => r.fail("odd_annihilator", Vec::new(), Vec::new()),
    };
    r
}

pub fn odd_annihilator(a: &SuperAlgebra) -> Subspace {
    annihilator(a).odd_part()
}

/// `Ω(x, y)(z) = (-1)^{|x|(|y|+|z|)} Ω(y, z)(x)` over all basis triples.
pub fn check_supercyclic(a: &SuperAlgebra, w: &Cocycle) -> CheckReport {
    let n = a.dim();
    let mut r = CheckReport::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let s = sign(a.parity(x) * (a.parity(y) + a.parity(z)));
                let d = &w.get(x, y)[z] - s * &w.get(y, z)[x];
                if !d.is_zero() {
                    r.fail("supercyclic", vec![x, y, z], vec![d]);
                    return r;
                }
            }
        }
    }
    r.pass("supercyclic");
    r
}

/// Canonical form on `J⊕J*`: `B(x+f, y+g) = f(y) + (-1)^{|x||y|} g(x)`, in the
/// layout J even, J* even, J odd, J* odd.
pub fn hyperbolic_form(dims: GradedDim) -> BilinearForm {
    let parts = [dims, dims];
    let mut f = BilinearForm::zero(block_dims(&parts));
    for a in 0..dims.total() {
        let (x, fx) = (block_index(&parts, 0, a), block_index(&parts, 1, a));
        f.gram[(fx, x)] = one();
        f.gram[(x, fx)] = sign(dims.parity(a));
    }
    f
}

/// T*-extension `J⊕J*` with product `x•y + L*(x)g + (-1)^{|x||y|}L*(y)f +
/// Ω(x, y)` and the canonical form. The report lists the form properties,
/// the supercyclic condition, and whether invariance agrees with it.
pub fn tstar_extension(a: &SuperAlgebra, w: &Cocycle) -> Result<(SuperAlgebra, BilinearForm, CheckReport)> {
    let pre = check_axioms(a, &MOCK_LIE);
    if !pre.all_passed() {
        return Err(Error::precondition(format!("{} is not mock-Lie", a.name), pre));
    }
    let co = coadjoint_unchecked(a);
    let cocycle = check_cocycle(a, &co, w);
    if !cocycle.all_passed() {
        return Err(Error::precondition("cocycle conditions", cocycle));
    }
    let alg = central_extension(a, &co, w)?.renamed(format!("T*({})", a.name));
    let form = hyperbolic_form(a.dims());
    let mut report = check_form(&alg, &form, &SCALAR_PRODUCT)?;
    let cyc = check_supercyclic(a, w);
    let agree = cyc.all_passed() == report.passed("invariant").unwrap_or(false);
    report.merge(cyc);
    report.push("invariance_matches_supercyclic", agree, None, None);
    Ok((alg, form, report))
}

/// `Φ(x) = B(x, ·)` as an even map `J → J*`; checked to intertwine the
/// adjoint and coadjoint representations and to be invertible.
pub fn flat_intertwiner(p: &PseudoEuclidean) -> Result<GradedMap> {
    let d = p.dims();
    let phi = GradedMap::new(d, d, EVEN, p.form.gram.transpose())?;
    if phi.matrix.rank() != d.total() {
        return Err(Error::Singular);
    }
    let defect = intertwiner_defect(&adjoint_unchecked(&p.algebra), &coadjoint_unchecked(&p.algebra), &phi);
    if defect.iter().any(|c| !c.is_zero()) {
        let mut r = CheckReport::new();
        r.fail("intertwiner", Vec::new(), defect);
        return Err(Error::precondition("flat map does not intertwine", r));
    }
    Ok(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::kernel::rational::int;
    use crate::representation::cocycle_space;
    use crate::superalgebra::check::is_mock_lie;

    #[test]
    fn e2_forms() {
        let e2 = catalog::e2();
        let hyp = BilinearForm::from_terms(e2.dims(), &[(0, 1, int(1)), (1, 0, int(1))]).unwrap();
        assert!(check_form(&e2, &hyp, &SCALAR_PRODUCT).unwrap().all_passed());
        let id = BilinearForm::new(e2.dims(), Matrix::identity(2)).unwrap();
        let r = check_form(&e2, &id, &[FormProp::Invariant]).unwrap();
        let w = r.get("invariant").unwrap().witness.clone().unwrap();
        assert_eq!(w.indices, vec![0, 0, 1]);
        assert_eq!(w.vector, vec![int(1)]);
    }

    #[test]
    fn s2_symplectic() {
        let p = catalog::s2_symplectic();
        assert!(p.check().all_passed());
        let r = check_form(&p.algebra, &p.form, &[FormProp::SkewSupersymmetric]).unwrap();
        assert!(!r.all_passed());
    }

    #[test]
    fn complements() {
        let p = catalog::e2_hyperbolic();
        let d = p.dims();
        assert!(orthogonal_complement(&p, &Subspace::whole(d)).is_zero());
        assert_eq!(orthogonal_complement(&p, &Subspace::zero(d)).dim(), 2);
        let i = Subspace::coordinate(d, &[1]);
        assert!(orthogonal_complement(&p, &i).same_as(&i));
        assert!(check_complement(&p, &i).all_passed());
        let preds = ideal_predicates(&p, &i);
        assert_eq!(
            preds,
            IdealPredicates {
                is_ideal: true,
                is_isotropic: true,
                is_nondegenerate: false
            }
        );
    }

    #[test]
    fn annihilator_identities() {
        for p in [catalog::e2_hyperbolic(), catalog::s2_symplectic(), catalog::d4()] {
            assert!(check_ann_equals_square_perp(&p).all_passed(), "{}", p.algebra.name);
            assert!(check_odd_annihilator(&p).all_passed());
        }
    }

    #[test]
    fn tstar_of_e2() {
        let e2 = catalog::e2();
        let (alg, form, report) = tstar_extension(&e2, &Cocycle::zero(2, e2.dims())).unwrap();
        assert_eq!(alg.dims(), GradedDim::new(4, 0));
        assert!(is_mock_lie(&alg));
        assert!(report.all_passed(), "{report}");
        assert!(PseudoEuclidean::new(alg, form).is_ok());
    }

    #[test]
    fn tstar_cocycles_match_supercyclic() {
        for a in [catalog::e2(), catalog::h3(), catalog::s2()] {
            let co = coadjoint_unchecked(&a);
            for w in cocycle_space(&a, &co) {
                let (_, _, r) = tstar_extension(&a, &w).unwrap();
                assert_eq!(r.passed("invariance_matches_supercyclic"), Some(true), "{}: {r}", a.name);
            }
        }
    }

    #[test]
    fn tstar_violating_cocycle() {
        let a = catalog::abelian(GradedDim::new(2, 0));
        let mut w = Cocycle::zero(2, a.dims());
        w.add_term(0, 0, 1, int(1)).unwrap();
        let (_, _, r) = tstar_extension(&a, &w).unwrap();
        assert_eq!(r.get("supercyclic").unwrap().witness.as_ref().unwrap().indices, vec![0, 0, 1]);
        assert_eq!(r.passed("invariant"), Some(false));
        assert_eq!(r.passed("invariance_matches_supercyclic"), Some(true));
    }

    #[test]
    fn flat_maps() {
        let phi = flat_intertwiner(&catalog::e2_hyperbolic()).unwrap();
        assert_eq!(phi.matrix.column(0), vec![int(0), int(1)]);
        assert_eq!(phi.matrix.column(1), vec![int(1), int(0)]);
        let phi = flat_intertwiner(&catalog::s2_symplectic()).unwrap();
        assert_eq!(phi.matrix.column(0), vec![int(0), int(1)]);
        assert_eq!(phi.matrix.column(1), vec![int(-1), int(0)]);
        let bad = PseudoEuclidean::unchecked(catalog::s2(), BilinearForm::zero(GradedDim::new(0, 2))).unwrap();
        assert!(flat_intertwiner(&bad).is_err());
    }
}
