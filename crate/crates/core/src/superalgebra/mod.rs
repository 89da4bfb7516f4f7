//! Superalgebras given by structure constants.
//!
//! A [`SuperAlgebra`] stores an arbitrary bilinear product on a graded space.
//! Being mock-Lie (supercommutative plus super-Jacobi) is a checked property,
//! see [`check::check_axioms`].

pub mod check;
pub mod construct;
pub mod derivation;
pub mod subspace;

pub use check::{
    check_axioms, check_cube_zero, check_homomorphism, check_squared_identity, is_mock_lie, Axiom, Lcg,
    MOCK_LIE,
};
pub use construct::{direct_sum, tensor_assoc, tensor_assoc_unchecked, Koszul};
pub use derivation::{derivation_defect, derivation_space, derivation_witness, solve_linear_maps, DerivationKind};
pub use subspace::{annihilator, annihilator_of, compute_f, is_ideal, square_ideal, Subspace};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::kernel::{add_scaled, zero_vec, GradedDim, Matrix, Parity, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuperAlgebra {
    pub name: String,
    dims: GradedDim,
    /// `table[i * n + j]` is the coordinate vector of `e_i • e_j`.
    table: Vec<Vec<Rational>>,
}

impl SuperAlgebra {
    /// Algebra with the zero product.
    pub fn abelian(name: impl Into<String>, dims: GradedDim) -> Self {
        let n = dims.total();
        SuperAlgebra {
            name: name.into(),
            dims,
            table: vec![zero_vec(n); n * n],
        }
    }

    /// Builds from sparse terms `(i, j, k, c)` meaning `c` is added to the
    /// `e_k` coefficient of `e_i • e_j`.
    pub fn from_terms(name: impl Into<String>, dims: GradedDim, terms: &[(usize, usize, usize, Rational)]) -> Result<Self> {
        let mut a = SuperAlgebra::abelian(name, dims);
        for (i, j, k, c) in terms {
            a.add_term(*i, *j, *k, c.clone())?;
        }
        Ok(a)
    }

    pub fn add_term(&mut self, i: usize, j: usize, k: usize, c: Rational) -> Result<()> {
        let n = self.dim();
        for idx in [i, j, k] {
            if idx >= n {
                return Err(Error::Invalid(format!("basis index {idx} out of range for dimension {n}")));
            }
        }
        self.table[i * n + j][k] += c;
        Ok(())
    }

    pub fn set_product(&mut self, i: usize, j: usize, v: Vec<Rational>) -> Result<()> {
        let n = self.dim();
        if v.len() != n {
            return Err(Error::mismatch(n, v.len()));
        }
        if i >= n || j >= n {
            return Err(Error::Invalid(format!("basis pair ({i}, {j}) out of range for dimension {n}")));
        }
        self.table[i * n + j] = v;
        Ok(())
    }

    pub fn dims(&self) -> GradedDim {
        self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.total()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.dims.parity(i)
    }

    /// `e_i • e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[Rational] {
        &self.table[i * self.dim() + j]
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|v| v.iter().all(Zero::is_zero))
    }

    /// Nonzero structure constants `(i, j, k, c)` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> + '_ {
        let n = self.dim();
        self.table.iter().enumerate().flat_map(move |(p, v)| {
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(k, c)| (p / n, p % n, k, c))
        })
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        let n = self.dim();
        if x.len() != n {
            return Err(Error::mismatch(n, x.len()));
        }
        if y.len() != n {
            return Err(Error::mismatch(n, y.len()));
        }
        Ok(self.mul(x, y))
    }

    /// Unchecked product; lengths must equal `dim()`.
    pub(crate) fn mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = zero_vec(n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                add_scaled(&mut out, &(a * b), self.product(i, j));
            }
        }
        out
    }

    /// `e_i • v`.
    pub(crate) fn mul_left_basis(&self, i: usize, v: &[Rational]) -> Vec<Rational> {
        let mut out = zero_vec(self.dim());
        for (j, b) in v.iter().enumerate() {
            add_scaled(&mut out, b, self.product(i, j));
        }
        out
    }

    /// `v • e_j`.
    pub(crate) fn mul_right_basis(&self, v: &[Rational], j: usize) -> Vec<Rational> {
        let mut out = zero_vec(self.dim());
        for (i, a) in v.iter().enumerate() {
            add_scaled(&mut out, a, self.product(i, j));
        }
        out
    }

    /// Matrix of `L_{e_i}`; column `j` is `e_i • e_j`.
    pub fn left_mul(&self, i: usize) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |r, c| self.product(i, c)[r].clone())
    }

    /// Matrix of `L_x` for an arbitrary vector `x`.
    pub fn left_mul_vec(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for c in 0..n {
                for (r, v) in self.product(i, c).iter().enumerate() {
                    if !v.is_zero() {
                        m[(r, c)] += a * v;
                    }
                }
            }
        }
        m
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Structure constants in a new basis. Column `c` of `basis` holds the
    /// old coordinates of the new basis vector `c`.
    pub fn change_basis(&self, basis: &Matrix, dims: GradedDim) -> Result<SuperAlgebra> {
        let n = self.dim();
        if basis.rows() != n || basis.cols() != n || dims.total() != n {
            return Err(Error::mismatch(n, basis.cols()));
        }
        let inv = basis.inverse()?;
        let cols: Vec<Vec<Rational>> = (0..n).map(|c| basis.column(c)).collect();
        let mut out = SuperAlgebra::abelian(self.name.clone(), dims);
        for i in 0..n {
            for j in 0..n {
                let p = self.mul(&cols[i], &cols[j]);
                out.table[i * n + j] = inv.mul_vec(&p)?;
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::kernel::rational::int;

    #[test]
    fn e2_square() {
        let e2 = catalog::e2();
        let e0 = e2.dims().basis_vector(0);
        assert_eq!(e2.multiply(&e0, &e0).unwrap(), vec![int(0), int(1)]);
    }

    #[test]
    fn h3_product() {
        let h3 = catalog::h3();
        let d = h3.dims();
        let z = d.basis_vector(0);
        assert_eq!(h3.multiply(&d.basis_vector(1), &d.basis_vector(2)).unwrap(), z);
    }

    #[test]
    fn multiply_by_zero() {
        let h3 = catalog::h3();
        let x = vec![int(1), int(2), int(-3)];
        assert_eq!(h3.multiply(&x, &zero_vec(3)).unwrap(), zero_vec(3));
        assert!(h3.multiply(&x, &zero_vec(2)).is_err());
    }

    #[test]
    fn entries_are_sparse() {
        let e: Vec<_> = catalog::h3().entries().map(|(i, j, k, c)| (i, j, k, c.clone())).collect();
        assert_eq!(e, vec![(1, 2, 0, int(1)), (2, 1, 0, int(-1))]);
    }
}
