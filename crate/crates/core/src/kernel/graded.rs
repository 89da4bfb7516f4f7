use std::fmt;

use num_traits::Zero;

use super::matrix::Matrix;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Degree of a homogeneous element, `0` for even and `1` for odd.
pub type Parity = u8;

pub const EVEN: Parity = 0;
pub const ODD: Parity = 1;

/// Dimension `(m|n)` of a Z2-graded space. Basis indices `0..m` are even and
/// `m..m+n` are odd.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GradedDim {
    pub even: usize,
    pub odd: usize,
}

impl GradedDim {
    pub const fn new(even: usize, odd: usize) -> Self {
        GradedDim { even, odd }
    }

    pub const fn total(&self) -> usize {
        self.even + self.odd
    }

    pub fn parity(&self, index: usize) -> Parity {
        debug_assert!(index < self.total());
        if index < self.even {
            EVEN
        } else {
            ODD
        }
    }

    /// Basis indices of the component of parity `p`.
    pub fn range(&self, p: Parity) -> std::ops::Range<usize> {
        if p == EVEN {
            0..self.even
        } else {
            self.even..self.total()
        }
    }

    pub fn component(&self, p: Parity) -> usize {
        if p == EVEN {
            self.even
        } else {
            self.odd
        }
    }

    pub fn add(&self, other: GradedDim) -> GradedDim {
        GradedDim::new(self.even + other.even, self.odd + other.odd)
    }

    /// Parity of a vector if it is homogeneous and nonzero.
    pub fn vector_parity(&self, v: &[Rational]) -> Option<Parity> {
        let even = v[..self.even].iter().any(|x| !x.is_zero());
        let odd = v[self.even..].iter().any(|x| !x.is_zero());
        match (even, odd) {
            (true, false) => Some(EVEN),
            (false, true) => Some(ODD),
            _ => None,
        }
    }

    pub fn is_homogeneous(&self, v: &[Rational], p: Parity) -> bool {
        self.range(1 - p).all(|i| v[i].is_zero())
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.total()];
        v[i] = num_traits::One::one();
        v
    }
}

impl fmt::Debug for GradedDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.even, self.odd)
    }
}

impl fmt::Display for GradedDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.even, self.odd)
    }
}

/// Linear map between graded spaces with a declared degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedMap {
    pub source: GradedDim,
    pub target: GradedDim,
    pub degree: Parity,
    pub matrix: Matrix,
}

impl GradedMap {
    /// Validates shape and block structure.
    pub fn new(source: GradedDim, target: GradedDim, degree: Parity, matrix: Matrix) -> Result<Self> {
        let map = GradedMap::unchecked(source, target, degree, matrix)?;
        if let Some((r, c)) = map.block_violation() {
            return Err(Error::Invalid(format!(
                "degree-{degree} map has nonzero entry at row {r}, column {c}"
            )));
        }
        Ok(map)
    }

    /// Validates shape only.
    pub fn unchecked(source: GradedDim, target: GradedDim, degree: Parity, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != target.total() {
            return Err(Error::mismatch(target.total(), matrix.rows()));
        }
        if matrix.cols() != source.total() {
            return Err(Error::mismatch(source.total(), matrix.cols()));
        }
        Ok(GradedMap {
            source,
            target,
            degree: degree % 2,
            matrix,
        })
    }

    pub fn zero(source: GradedDim, target: GradedDim, degree: Parity) -> Self {
        GradedMap {
            source,
            target,
            degree,
            matrix: Matrix::zeros(target.total(), source.total()),
        }
    }

    pub fn identity(dims: GradedDim) -> Self {
        GradedMap {
            source: dims,
            target: dims,
            degree: EVEN,
            matrix: Matrix::identity(dims.total()),
        }
    }

    /// Whether entry `(row, col)` may be nonzero for this degree.
    pub fn allowed(source: GradedDim, target: GradedDim, degree: Parity, row: usize, col: usize) -> bool {
        (source.parity(col) + degree) % 2 == target.parity(row)
    }

    /// First entry that breaks the block structure, if any.
    pub fn block_violation(&self) -> Option<(usize, usize)> {
        for r in 0..self.target.total() {
            for c in 0..self.source.total() {
                if !self.matrix[(r, c)].is_zero()
                    && !GradedMap::allowed(self.source, self.target, self.degree, r, c)
                {
                    return Some((r, c));
                }
            }
        }
        None
    }

    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMap) -> Result<GradedMap> {
        if other.target != self.source {
            return Err(Error::mismatch(self.source.total(), other.target.total()));
        }
        Ok(GradedMap {
            source: other.source,
            target: self.target,
            degree: (self.degree + other.degree) % 2,
            matrix: self.matrix.mul(&other.matrix)?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}
