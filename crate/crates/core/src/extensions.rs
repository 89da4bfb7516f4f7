//! Double extensions, generalized double extensions by a one-dimensional odd
//! algebra, the inverse decomposition, and isometries between extensions.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forms::{check_form, odd_annihilator, orthogonal_complement, BilinearForm, FormProp, PseudoEuclidean, SCALAR_PRODUCT};
use crate::kernel::rational::{frac, sign};
use crate::kernel::{is_zero_vec, scale_vec, sub_vec, zero_vec, GradedDim, GradedMap, Matrix, Parity, Rational, EVEN, ODD};
use crate::report::CheckReport;
use crate::representation::{check_representation, coadjoint_unchecked, Representation};
use crate::superalgebra::check::{check_axioms, check_homomorphism, MOCK_LIE};
use crate::superalgebra::construct::{block_dims, block_index};
use crate::superalgebra::derivation::{derivation_defect, derivation_witness, solve_linear_maps, DerivationKind};
use crate::superalgebra::subspace::{annihilator, Subspace};
use crate::superalgebra::SuperAlgebra;

/// `B(D e_i, e_j) - (-1)^{α|i|} B(e_i, D e_j)` over all basis pairs.
pub fn symmetry_defect(b: &BilinearForm, d: &GradedMap) -> Vec<Rational> {
    let n = b.dims.total();
    let dt = d.matrix.transpose();
    // (DᵀG)[i][j] = B(D e_i, e_j) and (GD)[i][j] = B(e_i, D e_j).
    let left = dt.mul(&b.gram).expect("square");
    let right = b.gram.mul(&d.matrix).expect("square");
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        let s = sign(d.degree * b.dims.parity(i));
        for j in 0..n {
            out.push(&left[(i, j)] - &s * &right[(i, j)]);
        }
    }
    out
}

fn first_nonzero_pair(v: &[Rational], n: usize) -> Option<(usize, usize, Rational)> {
    v.iter().enumerate().find(|(_, c)| !c.is_zero()).map(|(p, c)| (p / n, p % n, c.clone()))
}

/// Anti-superderivations of the given degree that are supersymmetric with
/// respect to the form, solved as one nullspace.
pub fn ander_s(p: &PseudoEuclidean, degree: Parity) -> Vec<GradedMap> {
    let d = p.dims();
    solve_linear_maps(d, d, degree, |m| {
        let mut v = derivation_defect(&p.algebra, m, DerivationKind::AntiDerivation);
        v.extend(symmetry_defect(&p.form, m));
        v
    })
}

/// Data for a double extension of `j1` by `j2`.
#[derive(Clone, Debug)]
pub struct DoubleExtensionInput {
    pub j1: PseudoEuclidean,
    pub j2: SuperAlgebra,
    /// `φ(e_a)` acting on `j1`, one map per basis element of `j2`.
    pub phi: Vec<GradedMap>,
    pub sigma: BilinearForm,
}

impl DoubleExtensionInput {
    pub fn representation(&self) -> Representation {
        Representation {
            algebra: self.j2.clone(),
            module: self.j1.dims(),
            action: self.phi.clone(),
        }
    }

    /// Every hypothesis of the construction, as separate entries.
    pub fn check(&self) -> CheckReport {
        let mut r = CheckReport::new();
        r.merge_prefixed("J1", self.j1.check());
        r.merge_prefixed("J2", check_axioms(&self.j2, &MOCK_LIE));
        if self.phi.len() != self.j2.dim() || self.phi.iter().any(|m| m.source != self.j1.dims() || m.target != self.j1.dims()) {
            r.fail("phi/shape", vec![self.phi.len()], Vec::new());
            return r;
        }
        r.merge_prefixed("phi", check_representation(&self.representation()));
        let a1 = &self.j1.algebra;
        let n1 = a1.dim();
        let anti = self.phi.iter().enumerate().find_map(|(a, m)| derivation_witness(a1, m, DerivationKind::AntiDerivation).map(|(i, j, v)| (a, i, j, v)));
        match anti {
            Some((a, i, j, v)) => r.fail("phi/anti_derivation", vec![a, i, j], v),
            None => r.pass("phi/anti_derivation"),
        };
        let sym = self
            .phi
            .iter()
            .enumerate()
            .find_map(|(a, m)| first_nonzero_pair(&symmetry_defect(&self.j1.form, m), n1).map(|(i, j, c)| (a, i, j, c)));
        match sym {
            Some((a, i, j, c)) => r.fail("phi/supersymmetric", vec![a, i, j], vec![c]),
            None => r.pass("phi/supersymmetric"),
        };
        match check_form(&self.j2, &self.sigma, &[FormProp::Even, FormProp::Supersymmetric, FormProp::Invariant]) {
            Ok(s) => r.merge_prefixed("sigma", s),
            Err(_) => r.fail("sigma/shape", vec![self.sigma.dims.total()], Vec::new()),
        };
        r
    }

    fn require_valid(&self) -> Result<()> {
        let r = self.check();
        if r.all_passed() {
            Ok(())
        } else {
            Err(Error::precondition("double extension hypotheses", r))
        }
    }
}

/// `φ̌(x, y)(a) = (-1)^{|x|(|y|+|a|)} B(y, φ(a)x)` for basis `x, y, a`.
fn phi_check(x_in: &DoubleExtensionInput, x: usize, y: usize, a: usize) -> Rational {
    let d1 = x_in.j1.dims();
    let (px, py, pa) = (d1.parity(x), d1.parity(y), x_in.j2.parity(a));
    let ax = x_in.phi[a].matrix.column(x);
    sign(px * ((py + pa) % 2)) * crate::kernel::dot(x_in.j1.form.gram.row(y), &ax)
}

/// Central extension `J1⊕J2*` with `x•y + φ̌(x, y)`, together with the
/// extended action `φ̃(a) = φ(a) ⊕ L₂*(a)`. Layout J1 even, J2* even, J1
/// odd, J2* odd.
pub fn central_ext_dual(x_in: &DoubleExtensionInput) -> Result<(SuperAlgebra, Representation)> {
    x_in.require_valid()?;
    Ok(central_ext_dual_unchecked(x_in))
}

pub fn central_ext_dual_unchecked(x_in: &DoubleExtensionInput) -> (SuperAlgebra, Representation) {
    let (d1, d2) = (x_in.j1.dims(), x_in.j2.dims());
    let parts = [d1, d2];
    let x_ix = |i| block_index(&parts, 0, i);
    let f_ix = |i| block_index(&parts, 1, i);
    let dims = block_dims(&parts);
    let mut alg = SuperAlgebra::abelian(format!("{} + {}*", x_in.j1.algebra.name, x_in.j2.name), dims);
    for (x, y, k, c) in x_in.j1.algebra.entries() {
        alg.add_term(x_ix(x), x_ix(y), x_ix(k), c.clone()).expect("in range");
    }
    for x in 0..d1.total() {
        for y in 0..d1.total() {
            for a in 0..d2.total() {
                let c = phi_check(x_in, x, y, a);
                if !c.is_zero() {
                    alg.add_term(x_ix(x), x_ix(y), f_ix(a), c).expect("in range");
                }
            }
        }
    }
    let co = coadjoint_unchecked(&x_in.j2);
    let action = (0..d2.total())
        .map(|a| {
            let mut m = Matrix::zeros(dims.total(), dims.total());
            for c in 0..d1.total() {
                for r in 0..d1.total() {
                    m[(x_ix(r), x_ix(c))] = x_in.phi[a].matrix[(r, c)].clone();
                }
            }
            for c in 0..d2.total() {
                for r in 0..d2.total() {
                    m[(f_ix(r), f_ix(c))] = co.action[a].matrix[(r, c)].clone();
                }
            }
            GradedMap {
                source: dims,
                target: dims,
                degree: x_in.j2.parity(a),
                matrix: m,
            }
        })
        .collect();
    let rep = Representation {
        algebra: x_in.j2.clone(),
        module: dims,
        action,
    };
    (alg, rep)
}

/// `x•y + φ(a)y + (-1)^{|x||y|}φ(b)x + a•b` on `J1⊕J2`; layout J1 even, J2
/// even, J1 odd, J2 odd.
pub fn action_semidirect(j1: &SuperAlgebra, j2: &SuperAlgebra, phi: &[GradedMap]) -> Result<SuperAlgebra> {
    let mut pre = CheckReport::new();
    if phi.len() != j2.dim() {
        return Err(Error::mismatch(j2.dim(), phi.len()));
    }
    pre.merge_prefixed(
        "phi",
        check_representation(&Representation {
            algebra: j2.clone(),
            module: j1.dims(),
            action: phi.to_vec(),
        }),
    );
    let anti = phi
        .iter()
        .enumerate()
        .find_map(|(a, m)| derivation_witness(j1, m, DerivationKind::AntiDerivation).map(|(i, j, v)| (a, i, j, v)));
    match anti {
        Some((a, i, j, v)) => pre.fail("phi/anti_derivation", vec![a, i, j], v),
        None => pre.pass("phi/anti_derivation"),
    };
    if !pre.all_passed() {
        return Err(Error::precondition("action hypotheses", pre));
    }
    action_semidirect_unchecked(j1, j2, phi)
}

pub fn action_semidirect_unchecked(j1: &SuperAlgebra, j2: &SuperAlgebra, phi: &[GradedMap]) -> Result<SuperAlgebra> {
    if phi.len() != j2.dim() || phi.iter().any(|m| m.source != j1.dims() || m.target != j1.dims()) {
        return Err(Error::mismatch(j2.dim(), phi.len()));
    }
    let parts = [j1.dims(), j2.dims()];
    let x_ix = |i| block_index(&parts, 0, i);
    let a_ix = |i| block_index(&parts, 1, i);
    let mut out = SuperAlgebra::abelian(format!("{} x| {}", j1.name, j2.name), block_dims(&parts));
    for (x, y, k, c) in j1.entries() {
        out.add_term(x_ix(x), x_ix(y), x_ix(k), c.clone())?;
    }
    for (a, b, k, c) in j2.entries() {
        out.add_term(a_ix(a), a_ix(b), a_ix(k), c.clone())?;
    }
    for (a, m) in phi.iter().enumerate() {
        for y in 0..j1.dim() {
            let s = sign(j1.parity(y) * j2.parity(a));
            for r in 0..j1.dim() {
                let c = &m.matrix[(r, y)];
                if !c.is_zero() {
                    out.add_term(a_ix(a), x_ix(y), x_ix(r), c.clone())?;
                    out.add_term(x_ix(y), a_ix(a), x_ix(r), &s * c)?;
                }
            }
        }
    }
    Ok(out)
}

/// Double extension `J2⊕J1⊕J2*` with the invariant scalar product
/// `B̃(a+x+f, b+y+g) = B(x, y) + σ(a, b) + f(b) + (-1)^{|x||y|} g(a)`.
/// Layout: J2, J1, J2* even parts, then the same odd parts.
pub fn double_extension(x_in: &DoubleExtensionInput) -> Result<PseudoEuclidean> {
    x_in.require_valid()?;
    let p = double_extension_unchecked(x_in);
    PseudoEuclidean::new(p.algebra, p.form)
}

pub fn double_extension_unchecked(x_in: &DoubleExtensionInput) -> PseudoEuclidean {
    let (d1, d2) = (x_in.j1.dims(), x_in.j2.dims());
    let parts = [d2, d1, d2];
    let a_ix = |i| block_index(&parts, 0, i);
    let x_ix = |i| block_index(&parts, 1, i);
    let f_ix = |i| block_index(&parts, 2, i);
    let dims = block_dims(&parts);
    let mut alg = SuperAlgebra::abelian(format!("D({}, {})", x_in.j1.algebra.name, x_in.j2.name), dims);
    let add = |alg: &mut SuperAlgebra, i, j, k, c: Rational| {
        if !c.is_zero() {
            alg.add_term(i, j, k, c).expect("in range");
        }
    };
    for (a, b, k, c) in x_in.j2.entries() {
        add(&mut alg, a_ix(a), a_ix(b), a_ix(k), c.clone());
    }
    for (x, y, k, c) in x_in.j1.algebra.entries() {
        add(&mut alg, x_ix(x), x_ix(y), x_ix(k), c.clone());
    }
    let co = coadjoint_unchecked(&x_in.j2);
    for a in 0..d2.total() {
        let pa = d2.parity(a);
        for y in 0..d1.total() {
            let s = sign(pa * d1.parity(y));
            for r in 0..d1.total() {
                let c = x_in.phi[a].matrix[(r, y)].clone();
                add(&mut alg, a_ix(a), x_ix(y), x_ix(r), c.clone());
                add(&mut alg, x_ix(y), a_ix(a), x_ix(r), &s * c);
            }
        }
        for g in 0..d2.total() {
            let s = sign(pa * d2.parity(g));
            for r in 0..d2.total() {
                let c = co.action[a].matrix[(r, g)].clone();
                add(&mut alg, a_ix(a), f_ix(g), f_ix(r), c.clone());
                add(&mut alg, f_ix(g), a_ix(a), f_ix(r), &s * c);
            }
        }
    }
    for x in 0..d1.total() {
        for y in 0..d1.total() {
            for a in 0..d2.total() {
                add(&mut alg, x_ix(x), x_ix(y), f_ix(a), phi_check(x_in, x, y, a));
            }
        }
    }
    let mut form = BilinearForm::zero(dims);
    for i in 0..d1.total() {
        for j in 0..d1.total() {
            form.gram[(x_ix(i), x_ix(j))] = x_in.j1.form.gram[(i, j)].clone();
        }
    }
    for a in 0..d2.total() {
        for b in 0..d2.total() {
            form.gram[(a_ix(a), a_ix(b))] = x_in.sigma.gram[(a, b)].clone();
        }
        form.gram[(f_ix(a), a_ix(a))] = Rational::one();
        form.gram[(a_ix(a), f_ix(a))] = sign(d2.parity(a));
    }
    PseudoEuclidean { algebra: alg, form }
}

/// An odd map `D` and an even vector `x0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissiblePair {
    pub d: GradedMap,
    pub x0: Vec<Rational>,
}

impl AdmissiblePair {
    pub fn zero(dims: GradedDim) -> Self {
        AdmissiblePair {
            d: GradedMap::zero(dims, dims, ODD),
            x0: zero_vec(dims.total()),
        }
    }
}

/// `D` odd, anti-superderivation, `D² = 0`, `x0 ∈ Ann(J) ∩ J₀`, `D(x0) = 0`.
pub fn check_admissible_pair(a: &SuperAlgebra, d: &GradedMap, x0: &[Rational]) -> CheckReport {
    let mut r = CheckReport::new();
    let dims = a.dims();
    if d.source != dims || d.target != dims || x0.len() != dims.total() {
        r.fail("shape", vec![d.source.total(), x0.len()], Vec::new());
        return r;
    }
    match (d.degree == ODD).then(|| d.block_violation()).flatten() {
        Some((i, j)) => r.fail("d_odd", vec![i, j], vec![d.matrix[(i, j)].clone()]),
        None if d.degree != ODD => r.fail("d_odd", Vec::new(), Vec::new()),
        None => r.pass("d_odd"),
    };
    match derivation_witness(a, d, DerivationKind::AntiDerivation) {
        Some((i, j, v)) => r.fail("anti_derivation", vec![i, j], v),
        None => r.pass("anti_derivation"),
    };
    let d2 = d.matrix.mul(&d.matrix).expect("square");
    match (0..dims.total()).find(|&c| !is_zero_vec(&d2.column(c))) {
        Some(c) => r.fail("d_squared_zero", vec![c], d2.column(c)),
        None => r.pass("d_squared_zero"),
    };
    let ann = annihilator(a);
    if dims.is_homogeneous(x0, EVEN) && ann.contains(x0) {
        r.pass("x0_in_even_annihilator");
    } else {
        r.fail("x0_in_even_annihilator", Vec::new(), x0.to_vec());
    }
    let dx = d.matrix.mul_vec(x0).expect("length");
    if is_zero_vec(&dx) {
        r.pass("d_x0_zero");
    } else {
        r.fail("d_x0_zero", Vec::new(), dx);
    }
    r
}

/// Index layout of `Ku ⊕ J ⊕ Ku*` (or `Ku ⊕ J` without `u*`): `J₀`, then
/// `u`, `J₁`, and `u*` last.
#[derive(Clone, Copy, Debug)]
pub struct OddLayout {
    pub base: GradedDim,
    pub with_dual: bool,
}

impl OddLayout {
    pub fn dims(&self) -> GradedDim {
        GradedDim::new(self.base.even, self.base.odd + 1 + usize::from(self.with_dual))
    }

    pub fn u(&self) -> usize {
        self.base.even
    }

    pub fn u_star(&self) -> usize {
        self.base.total() + 1
    }

    pub fn of(&self, i: usize) -> usize {
        if i < self.base.even {
            i
        } else {
            i + 1
        }
    }

    /// Embeds a base coordinate vector.
    pub fn embed(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = zero_vec(self.dims().total());
        for (i, c) in v.iter().enumerate() {
            out[self.of(i)] = c.clone();
        }
        out
    }
}

/// `Ku ⊕ J` with `u•u = x0`, `u•x = D(x)`, `x•u = (-1)^{|x|} D(x)`.
pub fn generalized_semidirect(a: &SuperAlgebra, pair: &AdmissiblePair) -> Result<SuperAlgebra> {
    let r = check_admissible_pair(a, &pair.d, &pair.x0);
    if !r.all_passed() {
        return Err(Error::precondition("admissible pair", r));
    }
    Ok(generalized_semidirect_unchecked(a, pair))
}

pub fn generalized_semidirect_unchecked(a: &SuperAlgebra, pair: &AdmissiblePair) -> SuperAlgebra {
    let lay = OddLayout {
        base: a.dims(),
        with_dual: false,
    };
    let mut out = SuperAlgebra::abelian(format!("U x| {}", a.name), lay.dims());
    for (x, y, k, c) in a.entries() {
        out.add_term(lay.of(x), lay.of(y), lay.of(k), c.clone()).expect("in range");
    }
    out.set_product(lay.u(), lay.u(), lay.embed(&pair.x0)).expect("in range");
    for x in 0..a.dim() {
        let dx = lay.embed(&pair.d.matrix.column(x));
        out.set_product(lay.u(), lay.of(x), dx.clone()).expect("in range");
        out.set_product(lay.of(x), lay.u(), scale_vec(&sign(a.parity(x)), &dx)).expect("in range");
    }
    out
}

/// Sign convention for the `u*`-component of `x•̃y`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum GdextConvention {
    /// `B(D(x), y)`, the value forced by invariance of `B̃`.
    #[default]
    Corrected,
    /// `B(y, D(x))`, which differs by a sign when `x` is even.
    PaperLiteral,
}

impl FromStr for GdextConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "corrected" => Ok(GdextConvention::Corrected),
            "paper-literal" => Ok(GdextConvention::PaperLiteral),
            _ => Err(Error::Invalid(format!("unknown gdext convention {s:?}"))),
        }
    }
}

impl fmt::Display for GdextConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GdextConvention::Corrected => "corrected",
            GdextConvention::PaperLiteral => "paper-literal",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GdextData {
    pub base: PseudoEuclidean,
    pub d: GradedMap,
    pub x0: Vec<Rational>,
    pub lambda: Rational,
}

impl GdextData {
    /// `D = 0`, `x0 = 0`, `λ = 0`.
    pub fn trivial(base: PseudoEuclidean) -> Self {
        let dims = base.dims();
        GdextData {
            base,
            d: GradedMap::zero(dims, dims, ODD),
            x0: zero_vec(dims.total()),
            lambda: Rational::zero(),
        }
    }

    /// Base validity, admissibility, supersymmetry of `D`, and `B(x0, x0) = 0`.
    pub fn check(&self) -> CheckReport {
        let mut r = CheckReport::new();
        r.merge_prefixed("base", self.base.check());
        let adm = check_admissible_pair(&self.base.algebra, &self.d, &self.x0);
        if adm.get("shape").is_some() {
            return r.merge(adm).clone();
        }
        r.merge(adm);
        match first_nonzero_pair(&symmetry_defect(&self.base.form, &self.d), self.base.dims().total()) {
            Some((i, j, c)) => r.fail("d_supersymmetric", vec![i, j], vec![c]),
            None => r.pass("d_supersymmetric"),
        };
        let q = self.base.form.eval(&self.x0, &self.x0);
        if q.is_zero() {
            r.pass("x0_isotropic");
        } else {
            r.fail("x0_isotropic", Vec::new(), vec![q]);
        }
        r
    }

    pub fn is_plain(&self) -> bool {
        self.lambda.is_zero() && is_zero_vec(&self.x0)
    }

    fn phi(&self, convention: GdextConvention, x: usize, y: usize) -> Rational {
        let g = &self.base.form.gram;
        let dx = self.d.matrix.column(x);
        match convention {
            // B(D x, y) = Σ_k (Dx)_k G[k][y]
            GdextConvention::Corrected => dx.iter().enumerate().map(|(k, c)| c * &g[(k, y)]).sum(),
            GdextConvention::PaperLiteral => crate::kernel::dot(g.row(y), &dx),
        }
    }
}

/// `J ⊕ Ku*` with `x•y + φ(x, y)u*`; layout `J₀`, `J₁`, `u*`.
fn central_by_one(g: &GdextData, convention: GdextConvention) -> SuperAlgebra {
    let b = g.base.dims();
    let dims = GradedDim::new(b.even, b.odd + 1);
    let us = b.total();
    let mut out = SuperAlgebra::abelian(format!("{} + U*", g.base.algebra.name), dims);
    for (x, y, k, c) in g.base.algebra.entries() {
        out.add_term(x, y, k, c.clone()).expect("in range");
    }
    for x in 0..b.total() {
        for y in 0..b.total() {
            let c = g.phi(convention, x, y);
            if !c.is_zero() {
                out.add_term(x, y, us, c).expect("in range");
            }
        }
    }
    out
}

/// Builds `Ku ⊕ J ⊕ Ku*` with
/// `u•u = x0 + λu*`, `u•x = D(x) - B(x0, x)u*`, `x•u = (-1)^{|x|} u•x`,
/// `x•y = x•y + φ(x, y)u*`, `u*` central, and `B̃(u, u*) = 1`.
///
/// The report stages the intermediate central extension and extended pair,
/// then records every axiom and form property of the result separately.
pub fn gdext(g: &GdextData, convention: GdextConvention) -> Result<(PseudoEuclidean, CheckReport)> {
    let pre = g.check();
    if !pre.all_passed() {
        return Err(Error::precondition("generalized double extension data", pre));
    }
    let b = g.base.dims();
    let lay = OddLayout {
        base: b,
        with_dual: true,
    };
    let dims = lay.dims();
    let (u, us) = (lay.u(), lay.u_star());
    let mut alg = SuperAlgebra::abelian(format!("gdext({})", g.base.algebra.name), dims);
    for (x, y, k, c) in g.base.algebra.entries() {
        alg.add_term(lay.of(x), lay.of(y), lay.of(k), c.clone())?;
    }
    for x in 0..b.total() {
        for y in 0..b.total() {
            let c = g.phi(convention, x, y);
            if !c.is_zero() {
                alg.add_term(lay.of(x), lay.of(y), us, c)?;
            }
        }
    }
    let mut uu = lay.embed(&g.x0);
    uu[us] += &g.lambda;
    alg.set_product(u, u, uu)?;
    let bx0 = g.base.form.gram.transpose().mul_vec(&g.x0)?;
    for x in 0..b.total() {
        let mut ux = lay.embed(&g.d.matrix.column(x));
        ux[us] -= &bx0[x];
        alg.set_product(lay.of(x), u, scale_vec(&sign(b.parity(x)), &ux))?;
        alg.set_product(u, lay.of(x), ux)?;
    }
    let mut form = BilinearForm::zero(dims);
    for i in 0..b.total() {
        for j in 0..b.total() {
            form.gram[(lay.of(i), lay.of(j))] = g.base.form.gram[(i, j)].clone();
        }
    }
    form.gram[(u, us)] = Rational::one();
    form.gram[(us, u)] = -Rational::one();

    let mut report = CheckReport::new();
    let hat = central_by_one(g, convention);
    report.merge_prefixed("central_by_one", check_axioms(&hat, &MOCK_LIE));
    let hat_dims = hat.dims();
    let hat_us = b.total();
    let mut dhat = Matrix::zeros(hat_dims.total(), hat_dims.total());
    for x in 0..b.total() {
        for (r, c) in g.d.matrix.column(x).into_iter().enumerate() {
            dhat[(r, x)] = c;
        }
        dhat[(hat_us, x)] = -bx0[x].clone();
    }
    let mut xhat = g.x0.clone();
    xhat.push(g.lambda.clone());
    let dhat = GradedMap {
        source: hat_dims,
        target: hat_dims,
        degree: ODD,
        matrix: dhat,
    };
    report.merge_prefixed("ext_pair", check_admissible_pair(&hat, &dhat, &xhat));

    report.merge(check_axioms(&alg, &MOCK_LIE));
    let expected = g.is_plain();
    if report.passed("supercommutativity") != Some(expected) {
        report.note("unexpected: supercommutativity should hold exactly when x0 = 0 and lambda = 0");
    } else if !expected {
        report.note("odd square u.u = x0 + lambda u* is nonzero");
    }
    report.merge(check_form(&alg, &form, &SCALAR_PRODUCT)?);
    Ok((PseudoEuclidean { algebra: alg, form }, report))
}

/// Output of [`decompose`].
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub data: GdextData,
    /// Column `c` holds the old coordinates of new basis vector `c`, in the
    /// layout `J'₀`, `u`, `J'₁`, `u*`.
    pub basis: Matrix,
    /// The input algebra and form rewritten in the new basis.
    pub transformed: PseudoEuclidean,
    pub report: CheckReport,
}

/// Splits off `Ku ⊕ Ku*` with `u*` in the odd annihilator and
/// `B(u, u*) = 1`, and reads off the extension data on the complement.
pub fn decompose(p: &PseudoEuclidean) -> Result<Decomposition> {
    decompose_with(p, GdextConvention::default())
}

pub fn decompose_with(p: &PseudoEuclidean, convention: GdextConvention) -> Result<Decomposition> {
    let dims = p.dims();
    if dims.odd <= 1 {
        return Err(Error::OddDimensionTooSmall(dims.odd));
    }
    let ann = odd_annihilator(&p.algebra);
    if ann.basis.is_empty() {
        return Err(Error::NoOddAnnihilator);
    }
    // Candidate planes in order: each annihilator basis vector for u*, each
    // pivot of B(u*, u) = 1 for u. The first one whose D squares to zero wins.
    let mut first = None;
    for u_star in &ann.basis {
        let bus = p.form.gram.mul_vec(u_star)?;
        for k in dims.range(ODD) {
            if bus[k].is_zero() {
                continue;
            }
            let mut u = zero_vec(dims.total());
            u[k] = bus[k].recip();
            let dec = split(p, convention, u_star, &u)?;
            if dec.report.passed("d_squared_zero") == Some(true) {
                return Ok(dec);
            }
            first.get_or_insert(dec);
        }
    }
    first.ok_or_else(|| Error::Invalid("form is degenerate on the odd annihilator".into()))
}

fn split(p: &PseudoEuclidean, convention: GdextConvention, u_star: &[Rational], u: &[Rational]) -> Result<Decomposition> {
    let dims = p.dims();
    let plane = Subspace::graded_span(dims, &[u.to_vec(), u_star.to_vec()]);
    let complement = orthogonal_complement(p, &plane);
    let even_part = complement.part(EVEN);
    let odd_part = complement.part(ODD);
    let base_dims = GradedDim::new(even_part.len(), odd_part.len());
    if base_dims.total() + 2 != dims.total() {
        return Err(Error::Invalid("complement of the hyperbolic plane has the wrong dimension".into()));
    }
    let mut columns = even_part.clone();
    columns.push(u.to_vec());
    columns.extend(odd_part.iter().cloned());
    columns.push(u_star.to_vec());
    let basis = Matrix::from_columns(&columns, dims.total())?;
    let alg = p.algebra.change_basis(&basis, dims)?;
    let form = p.form.change_basis(&basis, dims)?;

    let lay = OddLayout {
        base: base_dims,
        with_dual: true,
    };
    let (iu, ius) = (lay.u(), lay.u_star());
    let nb = base_dims.total();
    let project = |v: &[Rational]| -> Vec<Rational> { (0..nb).map(|i| v[lay.of(i)].clone()).collect() };

    let mut base_alg = SuperAlgebra::abelian(format!("{}'", p.algebra.name), base_dims);
    for x in 0..nb {
        for y in 0..nb {
            base_alg.set_product(x, y, project(alg.product(lay.of(x), lay.of(y))))?;
        }
    }
    let base_form = BilinearForm::new(
        base_dims,
        Matrix::from_fn(nb, nb, |r, c| form.gram[(lay.of(r), lay.of(c))].clone()),
    )?;
    let d = Matrix::from_fn(nb, nb, |r, c| alg.product(iu, lay.of(c))[lay.of(r)].clone());
    let uu = alg.product(iu, iu).to_vec();
    let x0 = project(&uu);
    let lambda = uu[ius].clone();
    let alpha = uu[iu].clone();

    let mut report = CheckReport::new();
    report.push("u_star_in_odd_annihilator", true, None, None);
    if alpha.is_zero() {
        report.pass("alpha_zero");
    } else {
        report.fail("alpha_zero", vec![iu, iu], vec![alpha]);
    }
    let base = PseudoEuclidean {
        algebra: base_alg,
        form: base_form,
    };
    report.merge_prefixed("base", base.check());
    let data = GdextData {
        base,
        d: GradedMap {
            source: base_dims,
            target: base_dims,
            degree: ODD,
            matrix: d,
        },
        x0,
        lambda,
    };
    if data.is_plain() {
        report.pass("odd_square_zero");
    } else {
        let mut v = data.x0.clone();
        v.push(data.lambda.clone());
        report.fail("odd_square_zero", vec![iu, iu], v);
    }

    let d2 = data.d.matrix.mul(&data.d.matrix)?;
    match (0..nb).find(|&c| d2.column(c).iter().any(|v| !v.is_zero())) {
        Some(c) => report.fail("d_squared_zero", vec![c], d2.column(c)),
        None => report.pass("d_squared_zero"),
    };

    let bx0 = data.base.form.gram.transpose().mul_vec(&data.x0)?;
    let eta = (0..nb).find_map(|x| {
        let d = &alg.product(iu, lay.of(x))[ius] + &bx0[x];
        (!d.is_zero()).then_some((x, d))
    });
    match eta {
        Some((x, d)) => report.fail("eta_matches", vec![x], vec![d]),
        None => report.pass("eta_matches"),
    };
    let phi = (0..nb * nb).find_map(|q| {
        let (x, y) = (q / nb, q % nb);
        let d = &alg.product(lay.of(x), lay.of(y))[ius] - data.phi(convention, x, y);
        (!d.is_zero()).then_some((x, y, d))
    });
    match phi {
        Some((x, y, d)) => report.fail("phi_matches", vec![x, y], vec![d]),
        None => report.pass("phi_matches"),
    };

    let transformed = PseudoEuclidean { algebra: alg, form };
    match gdext(&data, convention) {
        Ok((rebuilt, _)) => {
            let same = rebuilt.algebra.entries().eq(transformed.algebra.entries()) && rebuilt.form.gram == transformed.form.gram;
            report.push("round_trip", same, None, None);
        }
        Err(e) => {
            report.fail("round_trip", Vec::new(), Vec::new()).note(e.to_string());
        }
    }
    Ok(Decomposition {
        data,
        basis,
        transformed,
        report,
    })
}

#[derive(Clone, Debug)]
pub struct Tower {
    pub steps: Vec<Decomposition>,
    pub residual: PseudoEuclidean,
}

impl Tower {
    pub fn all_passed(&self) -> bool {
        self.steps.iter().all(|s| s.report.all_passed())
    }
}

/// Applies [`decompose`] until the odd dimension is at most 1.
pub fn iterate_decompose(p: &PseudoEuclidean) -> Result<Tower> {
    let mut steps = Vec::new();
    let mut current = p.clone();
    while current.dims().odd > 1 {
        let step = decompose(&current)?;
        current = step.data.base.clone();
        steps.push(step);
    }
    Ok(Tower {
        steps,
        residual: current,
    })
}

/// `s` an even automorphism of the base, `z0` in the odd annihilator, and
/// `α ≠ 0`.
#[derive(Clone, Debug)]
pub struct IsometryWitness {
    pub s: GradedMap,
    pub z0: Vec<Rational>,
    pub alpha: Rational,
}

impl IsometryWitness {
    pub fn identity(dims: GradedDim) -> Self {
        IsometryWitness {
            s: GradedMap::identity(dims),
            z0: zero_vec(dims.total()),
            alpha: Rational::one(),
        }
    }
}

/// `Ψ(u₁) = u₂/α + z0 + μu₂*` with `μ = -(α/2)B(z0, z0)`, `Ψ(u₁*) = αu₂*`,
/// `Ψ(x) = s(x) - αB(z0, s(x))u₂*`.
pub fn build_isometry(w: &IsometryWitness, g1: &GdextData, g2: &GdextData) -> Result<GradedMap> {
    let b = g1.base.dims();
    if g2.base.dims() != b || w.s.source != b || w.s.target != b || w.z0.len() != b.total() {
        return Err(Error::mismatch(b.total(), g2.base.dims().total()));
    }
    if w.alpha.is_zero() {
        return Err(Error::ZeroAlpha);
    }
    if w.s.matrix.rank() != b.total() {
        return Err(Error::Singular);
    }
    let lay = OddLayout {
        base: b,
        with_dual: true,
    };
    let dims = lay.dims();
    let form = &g2.base.form;
    let mu = -(&w.alpha * frac(1, 2)) * form.eval(&w.z0, &w.z0);
    let mut m = Matrix::zeros(dims.total(), dims.total());
    let mut psi_u = lay.embed(&w.z0);
    psi_u[lay.u()] += w.alpha.recip();
    psi_u[lay.u_star()] += mu;
    for (r, c) in psi_u.into_iter().enumerate() {
        m[(r, lay.u())] = c;
    }
    m[(lay.u_star(), lay.u_star())] = w.alpha.clone();
    for x in 0..b.total() {
        let sx = w.s.matrix.column(x);
        let t = -(&w.alpha) * form.eval(&w.z0, &sx);
        for (r, c) in sx.into_iter().enumerate() {
            m[(lay.of(r), lay.of(x))] = c;
        }
        m[(lay.u_star(), lay.of(x))] = t;
    }
    Ok(GradedMap {
        source: dims,
        target: dims,
        degree: EVEN,
        matrix: m,
    })
}

/// `Ψ` even and invertible, a homomorphism, and form-preserving.
pub fn verify_isometry(psi: &GradedMap, p1: &PseudoEuclidean, p2: &PseudoEuclidean) -> Result<CheckReport> {
    if psi.source != p1.dims() || psi.target != p2.dims() {
        return Err(Error::mismatch(p1.dims().total(), psi.source.total()));
    }
    let mut r = CheckReport::new();
    let even = psi.degree == EVEN && psi.block_violation().is_none();
    let invertible = psi.matrix.rows() == psi.matrix.cols() && psi.matrix.rank() == psi.matrix.rows();
    match (even, invertible) {
        (true, true) => r.pass("even_invertible"),
        (false, _) => {
            let (i, j) = psi.block_violation().unwrap_or((0, 0));
            r.fail("even_invertible", vec![i, j], Vec::new()).note("not even")
        }
        (true, false) => {
            let v = psi.matrix.nullspace().into_iter().next().unwrap_or_default();
            r.fail("even_invertible", Vec::new(), v).note("singular")
        }
    };
    if psi.degree == EVEN {
        r.merge(check_homomorphism(&p1.algebra, &p2.algebra, psi)?);
    } else {
        r.fail("homomorphism", Vec::new(), Vec::new()).note("odd map");
    }
    // Pᵀ G₂ P against G₁.
    let pulled = psi.matrix.transpose().mul(&p2.form.gram)?.mul(&psi.matrix)?;
    let n = p1.dims().total();
    let bad = (0..n * n).map(|q| (q / n, q % n)).find_map(|(i, j)| {
        let d = &pulled[(i, j)] - &p1.form.gram[(i, j)];
        (!d.is_zero()).then_some((i, j, d))
    });
    match bad {
        Some((i, j, d)) => r.fail("isometry", vec![i, j], vec![d]),
        None => r.pass("isometry"),
    };
    Ok(r)
}

/// The base isometry, `z0` in the odd annihilator, and the three relations
/// `α³λ₁ - λ₂ = B(z0, α³s(x₁))`, `s(x₁) = x₂/α²`, `sD₁s⁻¹ = D₂/α`.
pub fn check_isometry_conditions(w: &IsometryWitness, g1: &GdextData, g2: &GdextData) -> Result<CheckReport> {
    let b = g1.base.dims();
    if g2.base.dims() != b || w.z0.len() != b.total() {
        return Err(Error::mismatch(b.total(), g2.base.dims().total()));
    }
    if w.alpha.is_zero() {
        return Err(Error::ZeroAlpha);
    }
    let s_inv = w.s.matrix.inverse()?;
    let mut r = CheckReport::new();
    r.merge_prefixed("s", verify_isometry(&w.s, &g1.base, &g2.base)?);
    if b.is_homogeneous(&w.z0, ODD) && annihilator(&g1.base.algebra).contains(&w.z0) {
        r.pass("z0_in_odd_annihilator");
    } else {
        r.fail("z0_in_odd_annihilator", Vec::new(), w.z0.clone());
    }
    let a = &w.alpha;
    let a2 = a * a;
    let a3 = &a2 * a;
    let sx1 = w.s.matrix.mul_vec(&g1.x0)?;
    let lhs = &a3 * &g1.lambda - &g2.lambda;
    let rhs = &a3 * g1.base.form.eval(&w.z0, &sx1);
    let d = lhs - rhs;
    if d.is_zero() {
        r.pass("lambda_condition");
    } else {
        r.fail("lambda_condition", Vec::new(), vec![d]);
    }
    let dx = sub_vec(&sx1, &scale_vec(&a2.recip(), &g2.x0));
    if is_zero_vec(&dx) {
        r.pass("x0_condition");
    } else {
        r.fail("x0_condition", Vec::new(), dx);
    }
    let conj = w.s.matrix.mul(&g1.d.matrix)?.mul(&s_inv)?;
    let dd = conj.sub(&g2.d.matrix.scale(&a.recip()))?;
    match (0..b.total()).find(|&c| !is_zero_vec(&dd.column(c))) {
        Some(c) => r.fail("d_condition", vec![c], dd.column(c)),
        None => r.pass("d_condition"),
    };
    Ok(r)
}
