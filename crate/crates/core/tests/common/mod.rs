//! Brute-force evaluators shared by the integration tests.
//!
//! Everything here works from a dense copy of the structure constants and
//! expands the defining identities term by term, without calling the
//! library's checkers.

#![allow(dead_code, clippy::needless_range_loop)]

use num_rational::BigRational as Q;
use num_traits::{One, Zero};

use mocklie::SuperAlgebra;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub fn sgn(e: u8) -> Q {
    if e.is_multiple_of(2) {
        Q::one()
    } else {
        -Q::one()
    }
}

/// Structure constants `c[i][j][k]` copied out of an algebra.
pub struct Table {
    pub even: usize,
    pub n: usize,
    pub c: Vec<Vec<Vec<Q>>>,
}

impl Table {
    pub fn of(a: &SuperAlgebra) -> Self {
        let n = a.dim();
        let c = (0..n).map(|i| (0..n).map(|j| a.product(i, j).to_vec()).collect()).collect();
        Table {
            even: a.dims().even,
            n,
            c,
        }
    }

    pub fn p(&self, i: usize) -> u8 {
        u8::from(i >= self.even)
    }

    pub fn e(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.n];
        v[i] = Q::one();
        v
    }

    pub fn mul(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.n];
        for i in 0..self.n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.n {
                if y[j].is_zero() {
                    continue;
                }
                let s = &x[i] * &y[j];
                for k in 0..self.n {
                    if !self.c[i][j][k].is_zero() {
                        out[k] += &s * &self.c[i][j][k];
                    }
                }
            }
        }
        out
    }

    pub fn m3(&self, x: usize, y: usize, z: usize) -> Vec<Q> {
        // x•(y•z)
        self.mul(&self.e(x), &self.mul(&self.e(y), &self.e(z)))
    }

    /// Nonzero components of `e_i • e_j` outside the degree `|i| + |j|`.
    pub fn evenness_defect(&self, i: usize, j: usize) -> Vec<Q> {
        let p = (self.p(i) + self.p(j)) % 2;
        (0..self.n)
            .map(|k| {
                if self.p(k) == p {
                    Q::zero()
                } else {
                    self.c[i][j][k].clone()
                }
            })
            .collect()
    }

    /// `x•y - (-1)^{|x||y|} y•x`
    pub fn supercomm_defect(&self, i: usize, j: usize) -> Vec<Q> {
        let s = sgn(self.p(i) * self.p(j));
        (0..self.n).map(|k| &self.c[i][j][k] - &s * &self.c[j][i][k]).collect()
    }

    /// `(-1)^{|x||z|} x•(y•z) + (-1)^{|x||y|} y•(z•x) + (-1)^{|y||z|} z•(x•y)`
    pub fn jacobi_defect(&self, x: usize, y: usize, z: usize) -> Vec<Q> {
        let (px, py, pz) = (self.p(x), self.p(y), self.p(z));
        let t1 = self.m3(x, y, z);
        let t2 = self.m3(y, z, x);
        let t3 = self.m3(z, x, y);
        (0..self.n)
            .map(|k| sgn(px * pz) * &t1[k] + sgn(px * py) * &t2[k] + sgn(py * pz) * &t3[k])
            .collect()
    }

    /// Left side minus right side of the four-variable Jordan super-identity.
    pub fn jordan_defect(&self, a: usize, b: usize, c: usize, d: usize) -> Vec<Q> {
        let (pa, pb, pc) = (self.p(a), self.p(b), self.p(c));
        let e = |i| self.e(i);
        let ab = self.mul(&e(a), &e(b));
        let bc = self.mul(&e(b), &e(c));
        let ca = self.mul(&e(c), &e(a));
        let lhs = [
            (sgn(pa * pc), self.mul(&ab, &self.mul(&e(c), &e(d)))),
            (sgn(pa * pb), self.mul(&bc, &self.mul(&e(a), &e(d)))),
            (sgn(pc * pb), self.mul(&ca, &self.mul(&e(b), &e(d)))),
        ];
        let rhs = [
            (sgn(pa * pc), self.mul(&e(a), &self.mul(&bc, &e(d)))),
            (sgn(pa * pb), self.mul(&e(b), &self.mul(&ca, &e(d)))),
            (sgn(pc * pb), self.mul(&e(c), &self.mul(&ab, &e(d)))),
        ];
        let mut out = vec![Q::zero(); self.n];
        for (s, v) in lhs {
            for k in 0..self.n {
                out[k] += &s * &v[k];
            }
        }
        for (s, v) in rhs {
            for k in 0..self.n {
                out[k] -= &s * &v[k];
            }
        }
        out
    }

    pub fn evenness(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| is_zero(&self.evenness_defect(i, j))))
    }

    pub fn supercommutative(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| is_zero(&self.supercomm_defect(i, j))))
    }

    pub fn jacobi(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| is_zero(&self.jacobi_defect(x, y, z)))))
    }

    pub fn jordan(&self) -> bool {
        let n = self.n;
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| (0..n).all(|d| is_zero(&self.jordan_defect(a, b, c, d))))))
    }
}

pub fn is_zero(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `Ω(x, y)(z) - (-1)^{|x|(|y|+|z|)} Ω(y, z)(x)` for every basis triple,
/// flattened; `omega(i, j)` is the coordinate vector of `Ω(e_i, e_j)` in the
/// dual basis.
pub fn supercyclic_defects(n: usize, even: usize, omega: impl Fn(usize, usize) -> Vec<Q>) -> Vec<Q> {
    let p = |i: usize| u8::from(i >= even);
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let s = sgn(p(x) * (p(y) + p(z)));
                out.push(&omega(x, y)[z] - s * &omega(y, z)[x]);
            }
        }
    }
    out
}
