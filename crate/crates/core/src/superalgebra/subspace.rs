//! Graded subspaces, ideals and annihilators.

use num_traits::Zero;

use crate::kernel::{in_span, zero_vec, GradedDim, Matrix, Parity, Rational, EVEN, ODD};

use super::SuperAlgebra;

/// Graded subspace with a canonical basis: the reduced row echelon basis of
/// the even part followed by that of the odd part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub ambient: GradedDim,
    pub basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn zero(ambient: GradedDim) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn whole(ambient: GradedDim) -> Self {
        let basis = (0..ambient.total()).map(|i| ambient.basis_vector(i)).collect();
        Subspace { ambient, basis }
    }

    /// Smallest graded subspace containing every vector: each vector is split
    /// into its even and odd parts before reduction.
    pub fn graded_span(ambient: GradedDim, vectors: &[Vec<Rational>]) -> Self {
        let mut basis = Vec::new();
        for p in [EVEN, ODD] {
            let parts: Vec<Vec<Rational>> = vectors.iter().map(|v| project(ambient, v, p)).collect();
            basis.extend(reduced_rows(&parts, ambient.total()));
        }
        Subspace { ambient, basis }
    }

    /// Span of the basis vectors with the given indices.
    pub fn coordinate(ambient: GradedDim, indices: &[usize]) -> Self {
        let vs: Vec<_> = indices.iter().map(|&i| ambient.basis_vector(i)).collect();
        Subspace::graded_span(ambient, &vs)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn part(&self, p: Parity) -> Vec<Vec<Rational>> {
        self.basis
            .iter()
            .filter(|v| self.ambient.vector_parity(v) == Some(p))
            .cloned()
            .collect()
    }

    pub fn odd_part(&self) -> Subspace {
        Subspace::graded_span(self.ambient, &self.part(ODD))
    }

    pub fn even_part(&self) -> Subspace {
        Subspace::graded_span(self.ambient, &self.part(EVEN))
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        in_span(&self.basis, v)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn same_as(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains_subspace(other)
    }

    /// Graded solution space of `rows · x = 0`, solved separately on the
    /// even and odd coordinates.
    pub fn graded_kernel(ambient: GradedDim, rows: &[Vec<Rational>]) -> Self {
        let n = ambient.total();
        let mut basis = Vec::new();
        for p in [EVEN, ODD] {
            let range = ambient.range(p);
            let k = range.len();
            if k == 0 {
                continue;
            }
            let restricted: Vec<Vec<Rational>> = rows.iter().map(|r| r[range.clone()].to_vec()).collect();
            let sol = if restricted.is_empty() {
                (0..k).map(|i| unit(k, i)).collect()
            } else {
                Matrix::from_rows(restricted, k).expect("row length").nullspace()
            };
            let lifted: Vec<Vec<Rational>> = sol
                .into_iter()
                .map(|s| {
                    let mut v = zero_vec(n);
                    for (off, x) in s.into_iter().enumerate() {
                        v[range.start + off] = x;
                    }
                    v
                })
                .collect();
            basis.extend(reduced_rows(&lifted, n));
        }
        Subspace { ambient, basis }
    }
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = zero_vec(n);
    v[i] = num_traits::One::one();
    v
}

fn project(d: GradedDim, v: &[Rational], p: Parity) -> Vec<Rational> {
    let mut out = zero_vec(d.total());
    for i in d.range(p) {
        out[i] = v[i].clone();
    }
    out
}

fn reduced_rows(vectors: &[Vec<Rational>], n: usize) -> Vec<Vec<Rational>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_rows(vectors.to_vec(), n).expect("vector length");
    let (r, pivots) = m.rref();
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

/// `{x : x•e_j = 0 and e_j•x = 0 for all j}`, restricted to its graded part.
pub fn annihilator(a: &SuperAlgebra) -> Subspace {
    annihilator_of(a, &Subspace::whole(a.dims()))
}

/// `{x : x•s = 0 and s•x = 0 for all s in S}`, restricted to its graded part.
pub fn annihilator_of(a: &SuperAlgebra, s: &Subspace) -> Subspace {
    let n = a.dim();
    let mut rows = Vec::new();
    for v in &s.basis {
        // x ↦ x•v and x ↦ v•x as matrices, one row per output coordinate.
        let right: Vec<Vec<Rational>> = (0..n).map(|i| a.mul_left_basis(i, v)).collect();
        let left: Vec<Vec<Rational>> = (0..n).map(|i| a.mul_right_basis(v, i)).collect();
        for k in 0..n {
            rows.push((0..n).map(|i| right[i][k].clone()).collect());
            rows.push((0..n).map(|i| left[i][k].clone()).collect());
        }
    }
    Subspace::graded_kernel(a.dims(), &rows)
}

/// Span of all basis products.
pub fn square_ideal(a: &SuperAlgebra) -> Subspace {
    let n = a.dim();
    let products: Vec<Vec<Rational>> = (0..n * n)
        .map(|p| a.product(p / n, p % n).to_vec())
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .collect();
    Subspace::graded_span(a.dims(), &products)
}

/// `A•S ⊆ S` and `S•A ⊆ S`.
pub fn is_ideal(a: &SuperAlgebra, s: &Subspace) -> bool {
    let n = a.dim();
    s.basis.iter().all(|v| {
        (0..n).all(|i| s.contains(&a.mul_left_basis(i, v)) && s.contains(&a.mul_right_basis(v, i)))
    })
}

/// `F = {x ∈ J₁ : x•J₁ = 0}`.
pub fn compute_f(a: &SuperAlgebra) -> Subspace {
    let d = a.dims();
    let n = a.dim();
    let mut rows = Vec::new();
    for j in d.range(ODD) {
        let cols: Vec<Vec<Rational>> = (0..n).map(|i| a.product(i, j).to_vec()).collect();
        for k in 0..n {
            rows.push((0..n).map(|i| cols[i][k].clone()).collect());
        }
    }
    Subspace::graded_kernel(d, &rows).odd_part()
}
