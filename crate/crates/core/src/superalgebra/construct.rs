//! Direct sums and tensor products with an associative supercommutative algebra.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::kernel::rational::sign;
use crate::kernel::{GradedDim, Parity, EVEN, ODD};
use crate::report::CheckReport;

use super::check::{check_axioms, Axiom, MOCK_LIE};
use super::SuperAlgebra;

/// Index of basis vector `i` of summand `which` inside the graded direct sum
/// of `parts`. Layout: every even block in order, then every odd block.
pub fn block_index(parts: &[GradedDim], which: usize, i: usize) -> usize {
    let d = parts[which];
    if i < d.even {
        parts[..which].iter().map(|p| p.even).sum::<usize>() + i
    } else {
        let evens: usize = parts.iter().map(|p| p.even).sum();
        evens + parts[..which].iter().map(|p| p.odd).sum::<usize>() + (i - d.even)
    }
}

pub fn block_dims(parts: &[GradedDim]) -> GradedDim {
    parts.iter().fold(GradedDim::default(), |acc, p| acc.add(*p))
}

/// Product `x₁•x₂ ⊕ y₁•y₂`; layout A1 even, A2 even, A1 odd, A2 odd.
pub fn direct_sum(a1: &SuperAlgebra, a2: &SuperAlgebra) -> SuperAlgebra {
    let parts = [a1.dims(), a2.dims()];
    let mut out = SuperAlgebra::abelian(format!("{} + {}", a1.name, a2.name), block_dims(&parts));
    for (w, a) in [a1, a2].into_iter().enumerate() {
        for (i, j, k, c) in a.entries() {
            let (i, j, k) = (block_index(&parts, w, i), block_index(&parts, w, j), block_index(&parts, w, k));
            out.add_term(i, j, k, c.clone()).expect("index in range");
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Koszul {
    /// `(x⊗a)•(y⊗b) = (-1)^{|a||y|} (x•y)⊗(a·b)`
    #[default]
    On,
    /// `(x⊗a)•(y⊗b) = (x•y)⊗(a·b)` with no sign.
    Off,
}

impl FromStr for Koszul {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "on" => Ok(Koszul::On),
            "off" | "paper-literal" => Ok(Koszul::Off),
            _ => Err(Error::Invalid(format!("unknown koszul mode {s:?}"))),
        }
    }
}

impl fmt::Display for Koszul {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Koszul::On => "on",
            Koszul::Off => "off",
        })
    }
}

/// Layout of `J⊗A`: even part `J₀⊗A₀` then `J₁⊗A₁`, odd part `J₀⊗A₁` then
/// `J₁⊗A₀`, each block in lexicographic order of `(x, a)`.
pub struct TensorLayout {
    pub dims: GradedDim,
    index: Vec<usize>,
    a_dim: usize,
}

impl TensorLayout {
    pub fn new(j: GradedDim, a: GradedDim) -> Self {
        let blocks: [(Parity, Parity); 4] = [(EVEN, EVEN), (ODD, ODD), (EVEN, ODD), (ODD, EVEN)];
        let mut index = vec![0; j.total() * a.total()];
        let mut next = 0;
        for (pj, pa) in blocks {
            for x in j.range(pj) {
                for y in a.range(pa) {
                    index[x * a.total() + y] = next;
                    next += 1;
                }
            }
        }
        let even = j.even * a.even + j.odd * a.odd;
        TensorLayout {
            dims: GradedDim::new(even, next - even),
            index,
            a_dim: a.total(),
        }
    }

    /// Index of `e_x ⊗ f_a`.
    pub fn of(&self, x: usize, a: usize) -> usize {
        self.index[x * self.a_dim + a]
    }
}

/// Checks the preconditions (`A` associative and supercommutative, `J`
/// mock-Lie) and builds the tensor product.
pub fn tensor_assoc(j: &SuperAlgebra, a: &SuperAlgebra, koszul: Koszul) -> Result<SuperAlgebra> {
    let mut pre = CheckReport::new();
    pre.merge_prefixed(
        "A",
        check_axioms(a, &[Axiom::Evenness, Axiom::Associativity, Axiom::Supercommutativity]),
    );
    pre.merge_prefixed("J", check_axioms(j, &MOCK_LIE));
    if !pre.all_passed() {
        return Err(Error::precondition("tensor factors", pre));
    }
    Ok(tensor_assoc_unchecked(j, a, koszul))
}

pub fn tensor_assoc_unchecked(j: &SuperAlgebra, a: &SuperAlgebra, koszul: Koszul) -> SuperAlgebra {
    let layout = TensorLayout::new(j.dims(), a.dims());
    let mut out = SuperAlgebra::abelian(format!("{} (x) {}", j.name, a.name), layout.dims);
    let jprod: Vec<_> = j.entries().map(|(x, y, k, c)| (x, y, k, c.clone())).collect();
    let aprod: Vec<_> = a.entries().map(|(p, q, r, c)| (p, q, r, c.clone())).collect();
    for (x, y, k, c) in &jprod {
        for (p, q, r, d) in &aprod {
            let mut coeff = c * d;
            if koszul == Koszul::On {
                coeff *= sign(a.parity(*p) * j.parity(*y));
            }
            if coeff.is_zero() {
                continue;
            }
            out.add_term(layout.of(*x, *p), layout.of(*y, *q), layout.of(*k, *r), coeff)
                .expect("index in range");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::superalgebra::check::is_mock_lie;

    #[test]
    fn direct_sum_layout() {
        let s = direct_sum(&catalog::e2(), &catalog::h3());
        assert_eq!(s.dims(), GradedDim::new(3, 2));
        assert!(is_mock_lie(&s));
        let e = direct_sum(&catalog::e2(), &catalog::zero());
        assert_eq!(e.product(0, 0), catalog::e2().product(0, 0));
        let ee = direct_sum(&catalog::e2(), &catalog::e2());
        assert_eq!(ee.dims(), GradedDim::new(4, 0));
        assert_eq!(ee.entries().count(), 2);
    }

    #[test]
    fn tensor_with_scalars() {
        let t = tensor_assoc(&catalog::e2(), &catalog::scalars(), Koszul::On).unwrap();
        assert_eq!(t.product(0, 0), catalog::e2().product(0, 0));
    }

    #[test]
    fn paper_literal_tensor_breaks_supercommutativity() {
        let j = catalog::h3();
        let a = catalog::grassmann(1);
        let on = tensor_assoc(&j, &a, Koszul::On).unwrap();
        assert_eq!(on.dims(), GradedDim::new(3, 3));
        assert!(is_mock_lie(&on));
        let off = tensor_assoc(&j, &a, Koszul::Off).unwrap();
        assert!(!check_axioms(&off, &[Axiom::Supercommutativity]).all_passed());
    }

    #[test]
    fn tensor_rejects_invalid_factor() {
        assert!(tensor_assoc(&catalog::e2(), &catalog::g2(crate::kernel::rational::int(1)), Koszul::On).is_err());
    }
}
