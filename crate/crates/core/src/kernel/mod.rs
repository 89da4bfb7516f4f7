//! Exact scalars, dense matrices and graded linear maps.

pub mod graded;
pub mod matrix;
pub mod rational;

pub use graded::{GradedDim, GradedMap, Parity, EVEN, ODD};
pub use matrix::Matrix;
pub use rational::Rational;

use num_traits::Zero;

pub fn zero_vec(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_scaled(acc: &mut [Rational], s: &Rational, v: &[Rational]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += s * x;
        }
    }
}

pub fn sub_vec(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(s: &Rational, v: &[Rational]) -> Vec<Rational> {
    v.iter().map(|x| s * x).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// Rank of a list of vectors of common length `n`.
pub fn span_rank(vectors: &[Vec<Rational>], n: usize) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_rows(vectors.to_vec(), n).map(|m| m.rank()).unwrap_or(0)
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    if is_zero_vec(v) {
        return true;
    }
    let n = v.len();
    let mut rows = basis.to_vec();
    let r = span_rank(&rows, n);
    rows.push(v.to_vec());
    span_rank(&rows, n) == r
}
