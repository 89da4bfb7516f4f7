//! Representations, dual modules, semidirect products and 2-cocycles.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::kernel::rational::sign;
use crate::kernel::{add_scaled, is_zero_vec, zero_vec, GradedDim, GradedMap, Matrix, Rational, EVEN};
use crate::report::CheckReport;
use crate::superalgebra::check::{check_axioms, Lcg, MOCK_LIE};
use crate::superalgebra::construct::{block_dims, block_index};
use crate::superalgebra::derivation::solve_linear_maps;
use crate::superalgebra::SuperAlgebra;

/// `π(e_i)` for every basis element of the algebra, acting on `module`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub algebra: SuperAlgebra,
    pub module: GradedDim,
    pub action: Vec<GradedMap>,
}

impl Representation {
    pub fn new(algebra: SuperAlgebra, module: GradedDim, action: Vec<GradedMap>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::mismatch(algebra.dim(), action.len()));
        }
        for (i, m) in action.iter().enumerate() {
            if m.source != module || m.target != module {
                return Err(Error::mismatch(module.total(), m.source.total()));
            }
            if m.degree != algebra.parity(i) {
                return Err(Error::WrongDegree {
                    expected: algebra.parity(i),
                    found: m.degree,
                });
            }
        }
        Ok(Representation {
            algebra,
            module,
            action,
        })
    }

    pub fn zero(algebra: SuperAlgebra, module: GradedDim) -> Self {
        let action = (0..algebra.dim())
            .map(|i| GradedMap::zero(module, module, algebra.parity(i)))
            .collect();
        Representation {
            algebra,
            module,
            action,
        }
    }

    /// `π(v) = Σ v_i π(e_i)`.
    pub fn act(&self, v: &[Rational]) -> Matrix {
        let n = self.module.total();
        let mut m = Matrix::zeros(n, n);
        for (c, a) in v.iter().enumerate() {
            if !a.is_zero() {
                m = m.add(&self.action[c].matrix.scale(a)).expect("square");
            }
        }
        m
    }

    pub fn scaled(&self, i: usize, s: &Rational) -> Representation {
        let mut r = self.clone();
        r.action[i].matrix = r.action[i].matrix.scale(s);
        r
    }
}

/// `Ω(e_i, e_j)` as module vectors, stored densely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    pub algebra_dim: usize,
    pub module: GradedDim,
    values: Vec<Vec<Rational>>,
}

impl Cocycle {
    pub fn zero(algebra_dim: usize, module: GradedDim) -> Self {
        Cocycle {
            algebra_dim,
            module,
            values: vec![zero_vec(module.total()); algebra_dim * algebra_dim],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &[Rational] {
        &self.values[i * self.algebra_dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Vec<Rational>) -> Result<()> {
        if v.len() != self.module.total() {
            return Err(Error::mismatch(self.module.total(), v.len()));
        }
        if i >= self.algebra_dim || j >= self.algebra_dim {
            return Err(Error::Invalid(format!("cocycle pair ({i}, {j}) out of range")));
        }
        self.values[i * self.algebra_dim + j] = v;
        Ok(())
    }

    pub fn add_term(&mut self, i: usize, j: usize, k: usize, c: Rational) -> Result<()> {
        if i >= self.algebra_dim || j >= self.algebra_dim || k >= self.module.total() {
            return Err(Error::Invalid(format!("cocycle term ({i}, {j}, {k}) out of range")));
        }
        self.values[i * self.algebra_dim + j][k] += c;
        Ok(())
    }

    /// `Ω(x, y)` for arbitrary coordinate vectors.
    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = zero_vec(self.module.total());
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    add_scaled(&mut out, &(a * b), self.get(i, j));
                }
            }
        }
        out
    }

    /// Nonzero entries `(i, j, k, c)` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> + '_ {
        let n = self.algebra_dim;
        self.values.iter().enumerate().flat_map(move |(p, v)| {
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(k, c)| (p / n, p % n, k, c))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| is_zero_vec(v))
    }
}

/// `π(x•y) = -π(x)π(y) - (-1)^{|x||y|} π(y)π(x)` on all basis pairs. The
/// witness vector is the row-major defect matrix.
pub fn check_representation(r: &Representation) -> CheckReport {
    let a = &r.algebra;
    let mut report = CheckReport::new();
    let blocks = r.action.iter().enumerate().find_map(|(i, m)| {
        let bad = m.degree != a.parity(i) || m.block_violation().is_some();
        bad.then(|| (i, m.matrix.entries().to_vec()))
    });
    match blocks {
        Some((i, v)) => report.fail("action_degree", vec![i], v),
        None => report.pass("action_degree"),
    };
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let lhs = r.act(a.product(i, j));
            let xy = r.action[i].matrix.mul(&r.action[j].matrix).expect("square");
            let yx = r.action[j].matrix.mul(&r.action[i].matrix).expect("square");
            let defect = lhs
                .add(&xy)
                .and_then(|m| m.add(&yx.scale(&sign(a.parity(i) * a.parity(j)))))
                .expect("square");
            if !defect.is_zero() {
                report.fail("representation", vec![i, j], defect.entries().to_vec());
                return report;
            }
        }
    }
    report.pass("representation");
    report
}

fn require_mock_lie(a: &SuperAlgebra) -> Result<()> {
    let r = check_axioms(a, &MOCK_LIE);
    if r.all_passed() {
        Ok(())
    } else {
        Err(Error::precondition(format!("{} is not mock-Lie", a.name), r))
    }
}

/// `π(e_i) = L_{e_i}`.
pub fn adjoint(a: &SuperAlgebra) -> Result<Representation> {
    require_mock_lie(a)?;
    Ok(adjoint_unchecked(a))
}

pub fn adjoint_unchecked(a: &SuperAlgebra) -> Representation {
    let d = a.dims();
    let action = (0..a.dim())
        .map(|i| GradedMap {
            source: d,
            target: d,
            degree: a.parity(i),
            matrix: a.left_mul(i),
        })
        .collect();
    Representation {
        algebra: a.clone(),
        module: d,
        action,
    }
}

/// Dual module on the graded dual basis `f_a`, with
/// `(π*(x) f)(v) = (-1)^{|f||x|} f(π(x) v)`.
pub fn dual(r: &Representation) -> Result<Representation> {
    let pre = check_representation(r);
    if !pre.all_passed() {
        return Err(Error::precondition("dual of an invalid representation", pre));
    }
    let out = dual_unchecked(r);
    debug_assert!(evaluation_identity_holds(r, &out));
    Ok(out)
}

pub fn dual_unchecked(r: &Representation) -> Representation {
    let m = r.module;
    let action = r
        .action
        .iter()
        .map(|pi| {
            // Column b is π*(x) f_b, whose value on e_a is (-1)^{|b||x|} π(x)[b][a].
            let matrix = Matrix::from_fn(m.total(), m.total(), |a, b| {
                &pi.matrix[(b, a)] * sign(m.parity(b) * pi.degree)
            });
            GradedMap {
                source: m,
                target: m,
                degree: pi.degree,
                matrix,
            }
        })
        .collect();
    Representation {
        algebra: r.algebra.clone(),
        module: m,
        action,
    }
}

/// `(π*(e_i) f_b)(e_a) = (-1)^{|b||i|} f_b(π(e_i) e_a)` for all `i, a, b`.
pub fn evaluation_identity_holds(r: &Representation, d: &Representation) -> bool {
    let m = r.module;
    (0..r.algebra.dim()).all(|i| {
        let p = r.algebra.parity(i);
        (0..m.total()).all(|a| {
            (0..m.total()).all(|b| d.action[i].matrix[(a, b)] == &r.action[i].matrix[(b, a)] * sign(m.parity(b) * p))
        })
    })
}

pub fn coadjoint(a: &SuperAlgebra) -> Result<Representation> {
    dual(&adjoint(a)?)
}

pub fn coadjoint_unchecked(a: &SuperAlgebra) -> Representation {
    dual_unchecked(&adjoint_unchecked(a))
}

/// Product on `J⊕V`; layout J even, V even, J odd, V odd.
pub fn semidirect_product(a: &SuperAlgebra, r: &Representation) -> Result<SuperAlgebra> {
    central_extension(a, r, &Cocycle::zero(a.dim(), r.module))
}

/// Product `x•y + π(x)v + (-1)^{|x||y|} π(y)u + Ω(x, y)` on `J⊕V`; layout
/// J even, V even, J odd, V odd.
pub fn central_extension(a: &SuperAlgebra, r: &Representation, w: &Cocycle) -> Result<SuperAlgebra> {
    if r.algebra.dims() != a.dims() || r.action.len() != a.dim() {
        return Err(Error::mismatch(a.dim(), r.action.len()));
    }
    if w.algebra_dim != a.dim() || w.module != r.module {
        return Err(Error::mismatch(r.module.total(), w.module.total()));
    }
    let parts = [a.dims(), r.module];
    let j = |i| block_index(&parts, 0, i);
    let v = |k| block_index(&parts, 1, k);
    let mut out = SuperAlgebra::abelian(format!("{} x {}", a.name, "V"), block_dims(&parts));
    for (x, y, k, c) in a.entries() {
        out.add_term(j(x), j(y), j(k), c.clone())?;
    }
    for (x, y, k, c) in w.entries() {
        out.add_term(j(x), j(y), v(k), c.clone())?;
    }
    for x in 0..a.dim() {
        let pi = &r.action[x].matrix;
        for col in 0..r.module.total() {
            let s = sign(a.parity(x) * r.module.parity(col));
            for row in 0..r.module.total() {
                let c = &pi[(row, col)];
                if c.is_zero() {
                    continue;
                }
                out.add_term(j(x), v(col), v(row), c.clone())?;
                out.add_term(v(col), j(x), v(row), &s * c)?;
            }
        }
    }
    Ok(out)
}

/// Evenness, supersymmetry `Ω(x,y) = (-1)^{|x||y|}Ω(y,x)`, and the cyclic
/// condition `↻ (-1)^{|x||z|} (Ω(x, y•z) + π(x)Ω(y, z)) = 0`.
pub fn check_cocycle(a: &SuperAlgebra, r: &Representation, w: &Cocycle) -> CheckReport {
    let n = a.dim();
    let m = r.module;
    let mut report = CheckReport::new();

    let uneven = (0..n * n).find_map(|p| {
        let (i, j) = (p / n, p % n);
        let target = (a.parity(i) + a.parity(j)) % 2;
        (!m.is_homogeneous(w.get(i, j), target)).then(|| (i, j, w.get(i, j).to_vec()))
    });
    match uneven {
        Some((i, j, v)) => report.fail("cocycle_evenness", vec![i, j], v),
        None => report.pass("cocycle_evenness"),
    };

    let asym = (0..n * n).find_map(|p| {
        let (i, j) = (p / n, p % n);
        let mut d = w.get(i, j).to_vec();
        add_scaled(&mut d, &-sign(a.parity(i) * a.parity(j)), w.get(j, i));
        (!is_zero_vec(&d)).then_some((i, j, d))
    });
    match asym {
        Some((i, j, v)) => report.fail("cocycle_supersymmetry", vec![i, j], v),
        None => report.pass("cocycle_supersymmetry"),
    };

    let term = |x: usize, y: usize, z: usize| {
        let mut t = w.eval(&a.dims().basis_vector(x), a.product(y, z));
        let pi = r.action[x].matrix.mul_vec(w.get(y, z)).expect("module vector");
        add_scaled(&mut t, &Rational::from_integer(1.into()), &pi);
        t
    };
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (px, py, pz) = (a.parity(x), a.parity(y), a.parity(z));
                let mut d = zero_vec(m.total());
                add_scaled(&mut d, &sign(px * pz), &term(x, y, z));
                add_scaled(&mut d, &sign(py * px), &term(y, z, x));
                add_scaled(&mut d, &sign(pz * py), &term(z, x, y));
                if !is_zero_vec(&d) {
                    report.fail("cocycle_cyclic", vec![x, y, z], d);
                    return report;
                }
            }
        }
    }
    report.pass("cocycle_cyclic");
    report
}

/// Result of an intertwiner search.
#[derive(Clone, Debug)]
pub struct IntertwinerResult {
    pub basis: Vec<GradedMap>,
    /// An invertible element of the space, if the bounded search found one.
    /// `None` does not prove the representations inequivalent.
    pub witness: Option<GradedMap>,
}

/// Even maps `Φ` with `π₂(e_i)Φ = Φπ₁(e_i)`; then tries each basis element
/// and 32 deterministic combinations for an invertible one.
pub fn intertwiner_space(r1: &Representation, r2: &Representation) -> Result<IntertwinerResult> {
    if r1.algebra.dims() != r2.algebra.dims() {
        return Err(Error::mismatch(r1.algebra.dim(), r2.algebra.dim()));
    }
    let basis = solve_linear_maps(r1.module, r2.module, EVEN, |phi| intertwiner_defect(r1, r2, phi));
    let invertible = |m: &GradedMap| m.matrix.rows() == m.matrix.cols() && m.matrix.rank() == m.matrix.rows();
    let mut witness = basis.iter().find(|m| invertible(m)).cloned();
    if witness.is_none() && !basis.is_empty() {
        let mut rng = Lcg::new(0x1f2e_3d4c);
        for _ in 0..32 {
            let mut m = Matrix::zeros(r2.module.total(), r1.module.total());
            for b in &basis {
                let c = Rational::from_integer(rng.next_int().into());
                m = m.add(&b.matrix.scale(&c)).expect("same shape");
            }
            let cand = GradedMap {
                source: r1.module,
                target: r2.module,
                degree: EVEN,
                matrix: m,
            };
            if invertible(&cand) {
                witness = Some(cand);
                break;
            }
        }
    }
    Ok(IntertwinerResult { basis, witness })
}

/// Concatenated `π₂(e_i)Φ - Φπ₁(e_i)` over all basis elements.
pub fn intertwiner_defect(r1: &Representation, r2: &Representation, phi: &GradedMap) -> Vec<Rational> {
    let mut out = Vec::new();
    for i in 0..r1.algebra.dim() {
        let lhs = r2.action[i].matrix.mul(&phi.matrix).expect("shape");
        let rhs = phi.matrix.mul(&r1.action[i].matrix).expect("shape");
        out.extend(lhs.sub(&rhs).expect("shape").entries().iter().cloned());
    }
    out
}

/// Basis of the supersymmetric even bilinear maps `Ω: J×J → V` satisfying
/// the cyclic condition, found as one nullspace.
pub fn cocycle_space(a: &SuperAlgebra, r: &Representation) -> Vec<Cocycle> {
    let n = a.dim();
    let m = r.module;
    let cells: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|i| (0..n).flat_map(move |j| (0..m.total()).map(move |k| (i, j, k))))
        .filter(|&(i, j, k)| (a.parity(i) + a.parity(j)) % 2 == m.parity(k))
        .collect();
    let defect = |w: &Cocycle| {
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let mut d = w.get(i, j).to_vec();
                add_scaled(&mut d, &-sign(a.parity(i) * a.parity(j)), w.get(j, i));
                out.extend(d);
            }
        }
        let term = |x: usize, y: usize, z: usize| {
            let mut t = w.eval(&a.dims().basis_vector(x), a.product(y, z));
            let pi = r.action[x].matrix.mul_vec(w.get(y, z)).expect("module vector");
            add_scaled(&mut t, &Rational::from_integer(1.into()), &pi);
            t
        };
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (px, py, pz) = (a.parity(x), a.parity(y), a.parity(z));
                    let mut d = zero_vec(m.total());
                    add_scaled(&mut d, &sign(px * pz), &term(x, y, z));
                    add_scaled(&mut d, &sign(py * px), &term(y, z, x));
                    add_scaled(&mut d, &sign(pz * py), &term(z, x, y));
                    out.extend(d);
                }
            }
        }
        out
    };
    let columns: Vec<Vec<Rational>> = cells
        .iter()
        .map(|&(i, j, k)| {
            let mut w = Cocycle::zero(n, m);
            w.add_term(i, j, k, Rational::from_integer(1.into())).expect("in range");
            defect(&w)
        })
        .collect();
    let rows = columns.first().map_or(0, Vec::len);
    let system = Matrix::from_fn(rows, cells.len(), |r, c| columns[c][r].clone());
    system
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut w = Cocycle::zero(n, m);
            for (x, &(i, j, k)) in v.into_iter().zip(&cells) {
                w.add_term(i, j, k, x).expect("in range");
            }
            w
        })
        .collect()
}
