//! Solvers for spaces of graded linear maps cut out by linear identities.

use crate::kernel::rational::sign;
use crate::kernel::{add_scaled, is_zero_vec, GradedDim, GradedMap, Matrix, Parity, Rational};

use super::SuperAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerivationKind {
    /// `D(x•y) = D(x)•y + (-1)^{α|x|} x•D(y)`
    Derivation,
    /// `D(x•y) = -D(x)•y - (-1)^{α|x|} x•D(y)`
    AntiDerivation,
}

/// Basis of all degree-`degree` maps `source -> target` annihilated by the
/// linear functional `constraint`.
///
/// The constraint is evaluated once per block-allowed matrix cell; the
/// resulting columns form the coefficient matrix whose nullspace is returned.
pub fn solve_linear_maps(
    source: GradedDim,
    target: GradedDim,
    degree: Parity,
    constraint: impl Fn(&GradedMap) -> Vec<Rational>,
) -> Vec<GradedMap> {
    let cells: Vec<(usize, usize)> = (0..target.total())
        .flat_map(|r| (0..source.total()).map(move |c| (r, c)))
        .filter(|&(r, c)| GradedMap::allowed(source, target, degree, r, c))
        .collect();
    let elementary = |&(r, c): &(usize, usize)| {
        let mut m = Matrix::zeros(target.total(), source.total());
        m[(r, c)] = num_traits::One::one();
        GradedMap {
            source,
            target,
            degree,
            matrix: m,
        }
    };
    let columns: Vec<Vec<Rational>> = cells.iter().map(|cell| constraint(&elementary(cell))).collect();
    let rows = columns.first().map_or(0, Vec::len);
    let system = Matrix::from_fn(rows, cells.len(), |r, c| columns[c][r].clone());
    let kernel = if rows == 0 {
        Matrix::zeros(0, cells.len()).nullspace()
    } else {
        system.nullspace()
    };
    kernel
        .into_iter()
        .map(|v| {
            let mut m = Matrix::zeros(target.total(), source.total());
            for (x, &(r, c)) in v.into_iter().zip(&cells) {
                m[(r, c)] = x;
            }
            GradedMap {
                source,
                target,
                degree,
                matrix: m,
            }
        })
        .collect()
}

/// Concatenated defects `D(e_i•e_j) ∓ (D(e_i)•e_j + (-1)^{α|i|} e_i•D(e_j))`
/// over all basis pairs, in lexicographic order.
pub fn derivation_defect(a: &SuperAlgebra, d: &GradedMap, kind: DerivationKind) -> Vec<Rational> {
    let n = a.dim();
    let images: Vec<Vec<Rational>> = (0..n).map(|i| d.matrix.column(i)).collect();
    let s: Rational = match kind {
        DerivationKind::Derivation => sign(1),
        DerivationKind::AntiDerivation => sign(0),
    };
    let mut out = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            let mut v = d.matrix.mul_vec(a.product(i, j)).expect("square map");
            add_scaled(&mut v, &s, &a.mul_right_basis(&images[i], j));
            let t = &s * sign(d.degree * a.parity(i));
            add_scaled(&mut v, &t, &a.mul_left_basis(i, &images[j]));
            out.extend(v);
        }
    }
    out
}

/// First basis pair where `d` violates its defining identity.
pub fn derivation_witness(a: &SuperAlgebra, d: &GradedMap, kind: DerivationKind) -> Option<(usize, usize, Vec<Rational>)> {
    let n = a.dim();
    let defect = derivation_defect(a, d, kind);
    defect.chunks(n.max(1)).enumerate().find_map(|(p, v)| {
        (!is_zero_vec(v)).then(|| (p / n, p % n, v.to_vec()))
    })
}

/// Basis of the (anti-)superderivations of the given degree.
pub fn derivation_space(a: &SuperAlgebra, kind: DerivationKind, degree: Parity) -> Vec<GradedMap> {
    let d = a.dims();
    let basis = solve_linear_maps(d, d, degree, |m| derivation_defect(a, m, kind));
    debug_assert!(basis.iter().all(|m| derivation_witness(a, m, kind).is_none()));
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::kernel::rational::int;
    use crate::kernel::{GradedDim, EVEN, ODD};

    #[test]
    fn e2_anti_derivations() {
        // D(e0) = p e0 + q e1 forces D(e1) = -2p e1.
        let space = derivation_space(&catalog::e2(), DerivationKind::AntiDerivation, EVEN);
        assert_eq!(space.len(), 2);
        for m in &space {
            let p = m.matrix[(0, 0)].clone();
            assert_eq!(m.matrix[(1, 1)], int(-2) * p);
            assert_eq!(m.matrix[(0, 1)], int(0));
        }
    }

    #[test]
    fn e2_derivations() {
        let space = derivation_space(&catalog::e2(), DerivationKind::Derivation, EVEN);
        assert_eq!(space.len(), 2);
        for m in &space {
            assert_eq!(m.matrix[(1, 1)], int(2) * m.matrix[(0, 0)].clone());
        }
    }

    #[test]
    fn abelian_has_all_maps() {
        let a = catalog::abelian(GradedDim::new(1, 2));
        assert_eq!(derivation_space(&a, DerivationKind::Derivation, EVEN).len(), 1 + 4);
        assert_eq!(derivation_space(&a, DerivationKind::AntiDerivation, ODD).len(), 2 + 2);
    }
}
