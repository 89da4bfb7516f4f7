//! Axiom checkers evaluated exhaustively on homogeneous basis tuples.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::kernel::rational::{int, render_vec, sign};
use crate::kernel::{add_scaled, is_zero_vec, sub_vec, GradedMap, Rational, EVEN};
use crate::report::{CheckReport, Witness};

use super::SuperAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Evenness,
    Supercommutativity,
    SuperJacobi,
    JordanSuper,
    Associativity,
}

/// Evenness, supercommutativity and super-Jacobi.
pub const MOCK_LIE: [Axiom; 3] = [Axiom::Evenness, Axiom::Supercommutativity, Axiom::SuperJacobi];

impl Axiom {
    pub const ALL: [Axiom; 5] = [
        Axiom::Evenness,
        Axiom::Supercommutativity,
        Axiom::SuperJacobi,
        Axiom::JordanSuper,
        Axiom::Associativity,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Axiom::Evenness => "evenness",
            Axiom::Supercommutativity => "supercommutativity",
            Axiom::SuperJacobi => "super_jacobi",
            Axiom::JordanSuper => "jordan_super",
            Axiom::Associativity => "associativity",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Axiom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Axiom::ALL
            .into_iter()
            .find(|a| a.label() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown axiom {s:?}")))
    }
}

/// Runs each selected axiom and records the first failing tuple.
pub fn check_axioms(a: &SuperAlgebra, axioms: &[Axiom]) -> CheckReport {
    let mut report = CheckReport::new();
    for &ax in axioms {
        let witness = match ax {
            Axiom::Evenness => evenness(a),
            Axiom::Supercommutativity => supercommutativity(a),
            Axiom::SuperJacobi => super_jacobi(a),
            Axiom::JordanSuper => jordan_super(a),
            Axiom::Associativity => associativity(a),
        };
        report.verdict(ax.label(), witness);
    }
    report
}

pub fn is_mock_lie(a: &SuperAlgebra) -> bool {
    check_axioms(a, &MOCK_LIE).all_passed()
}

fn evenness(a: &SuperAlgebra) -> Option<Witness> {
    let d = a.dims();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let p = (a.parity(i) + a.parity(j)) % 2;
            let v = a.product(i, j);
            if !d.is_homogeneous(v, p) {
                let mut stray = v.to_vec();
                for k in d.range(p) {
                    stray[k] = int(0);
                }
                return Some(Witness {
                    indices: vec![i, j],
                    vector: stray,
                });
            }
        }
    }
    None
}

fn supercommutativity(a: &SuperAlgebra) -> Option<Witness> {
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let s = sign(a.parity(i) * a.parity(j));
            let mut defect = a.product(i, j).to_vec();
            add_scaled(&mut defect, &-s, a.product(j, i));
            if !is_zero_vec(&defect) {
                return Some(Witness {
                    indices: vec![i, j],
                    vector: defect,
                });
            }
        }
    }
    None
}

fn super_jacobi(a: &SuperAlgebra) -> Option<Witness> {
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (pi, pj, pk) = (a.parity(i), a.parity(j), a.parity(k));
                let mut defect = a.mul_left_basis(i, a.product(j, k));
                for v in defect.iter_mut() {
                    *v *= sign(pi * pk);
                }
                add_scaled(&mut defect, &sign(pi * pj), &a.mul_left_basis(j, a.product(k, i)));
                add_scaled(&mut defect, &sign(pj * pk), &a.mul_left_basis(k, a.product(i, j)));
                if !is_zero_vec(&defect) {
                    return Some(Witness {
                        indices: vec![i, j, k],
                        vector: defect,
                    });
                }
            }
        }
    }
    None
}

fn associativity(a: &SuperAlgebra) -> Option<Witness> {
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let left = a.mul_right_basis(a.product(i, j), k);
                let right = a.mul_left_basis(i, a.product(j, k));
                let defect = sub_vec(&left, &right);
                if !is_zero_vec(&defect) {
                    return Some(Witness {
                        indices: vec![i, j, k],
                        vector: defect,
                    });
                }
            }
        }
    }
    None
}

/// The four-variable Jordan super-identity, `d` arbitrary:
/// `Σ s (a•b)•(c•d) = Σ s a•((b•c)•d)` over the three cyclic terms with
/// signs `(-1)^{|a||c|}`, `(-1)^{|a||b|}`, `(-1)^{|c||b|}`.
fn jordan_super(alg: &SuperAlgebra) -> Option<Witness> {
    let n = alg.dim();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (pa, pb, pc) = (alg.parity(a), alg.parity(b), alg.parity(c));
                let terms = [(sign(pa * pc), a, b, c), (sign(pa * pb), b, c, a), (sign(pc * pb), c, a, b)];
                for d in 0..n {
                    let mut defect = vec![int(0); n];
                    for (s, x, y, z) in &terms {
                        // (x•y)•(z•d) - x•((y•z)•d)
                        let lhs = alg.mul(alg.product(*x, *y), alg.product(*z, d));
                        let inner = alg.mul_right_basis(alg.product(*y, *z), d);
                        let rhs = alg.mul_left_basis(*x, &inner);
                        add_scaled(&mut defect, s, &lhs);
                        add_scaled(&mut defect, &-s.clone(), &rhs);
                    }
                    if !is_zero_vec(&defect) {
                        return Some(Witness {
                            indices: vec![a, b, c, d],
                            vector: defect,
                        });
                    }
                }
            }
        }
    }
    None
}

/// Deterministic sampler for test vectors.
///
/// `state <- state * 6364136223846793005 + 1442695040888963407 (mod 2^64)`,
/// each draw returns `((state >> 33) mod 11) - 5`, an integer in `[-5, 5]`.
#[derive(Clone, Debug)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_int(&mut self) -> i64 {
        self.state = self
            .state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        ((self.state >> 33) % 11) as i64 - 5
    }

    /// Vector of length `n` supported on `range`.
    pub fn vector(&mut self, n: usize, range: std::ops::Range<usize>) -> Vec<Rational> {
        let mut v = vec![int(0); n];
        for k in range {
            v[k] = int(self.next_int());
        }
        v
    }
}

/// `(x•x)•x = 0` on every basis element and on `samples` even-part vectors.
pub fn check_cube_zero(a: &SuperAlgebra, samples: usize, seed: u64) -> CheckReport {
    let n = a.dim();
    let cube = |x: &[Rational]| a.mul(&a.mul(x, x), x);
    let mut report = CheckReport::new();
    for i in 0..n {
        let x = a.dims().basis_vector(i);
        let c = cube(&x);
        if !is_zero_vec(&c) {
            report.fail("cube_zero", vec![i], c);
            return report;
        }
    }
    let mut rng = Lcg::new(seed);
    for s in 0..samples {
        let x = rng.vector(n, a.dims().range(EVEN));
        let c = cube(&x);
        if !is_zero_vec(&c) {
            report
                .fail("cube_zero", vec![], c)
                .note(format!("sample {s} of seed {seed}: x = {}", render_vec(&x)));
            return report;
        }
    }
    report.pass("cube_zero");
    report
}

/// Witness indices, the two sampled vectors and an optional note.
type SamplePair = (Vec<usize>, Vec<Rational>, Vec<Rational>, Option<String>);

/// `x²•(y•x) = (x²•y)•x = 0` on homogeneous basis pairs and sampled pairs
/// (`x` homogeneous of each parity, `y` arbitrary).
pub fn check_squared_identity(a: &SuperAlgebra, samples: usize, seed: u64) -> CheckReport {
    let n = a.dim();
    let d = a.dims();
    let left = |x: &[Rational], y: &[Rational]| {
        let x2 = a.mul(x, x);
        a.mul(&x2, &a.mul(y, x))
    };
    let right = |x: &[Rational], y: &[Rational]| {
        let x2 = a.mul(x, x);
        a.mul(&a.mul(&x2, y), x)
    };
    let mut pairs: Vec<SamplePair> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            pairs.push((vec![i, j], d.basis_vector(i), d.basis_vector(j), None));
        }
    }
    let mut rng = Lcg::new(seed);
    for s in 0..samples {
        for p in [EVEN, 1 - EVEN] {
            let x = rng.vector(n, d.range(p));
            let y = rng.vector(n, 0..n);
            let note = format!("sample {s} of seed {seed}: x = {}, y = {}", render_vec(&x), render_vec(&y));
            pairs.push((vec![], x, y, Some(note)));
        }
    }
    let mut report = CheckReport::new();
    for (label, f) in [
        ("squared_identity_left", &left as &dyn Fn(&[Rational], &[Rational]) -> Vec<Rational>),
        ("squared_identity_right", &right),
    ] {
        let failure = pairs.iter().find_map(|(idx, x, y, note)| {
            let v = f(x, y);
            (!is_zero_vec(&v)).then(|| (idx.clone(), v, note.clone()))
        });
        match failure {
            None => {
                report.pass(label);
            }
            Some((idx, v, note)) => {
                report.fail(label, idx, v);
                if let Some(note) = note {
                    report.note(note);
                }
            }
        }
    }
    report
}

/// `Φ(e_i • e_j) = Φ(e_i) • Φ(e_j)` on all basis pairs.
pub fn check_homomorphism(a1: &SuperAlgebra, a2: &SuperAlgebra, phi: &GradedMap) -> Result<CheckReport> {
    if phi.degree != EVEN {
        return Err(Error::WrongDegree {
            expected: EVEN,
            found: phi.degree,
        });
    }
    if phi.source != a1.dims() {
        return Err(Error::mismatch(a1.dim(), phi.source.total()));
    }
    if phi.target != a2.dims() {
        return Err(Error::mismatch(a2.dim(), phi.target.total()));
    }
    let images: Vec<Vec<Rational>> = (0..a1.dim()).map(|i| phi.matrix.column(i)).collect();
    let mut report = CheckReport::new();
    for i in 0..a1.dim() {
        for j in 0..a1.dim() {
            let lhs = phi.apply(a1.product(i, j))?;
            let rhs = a2.mul(&images[i], &images[j]);
            let defect = sub_vec(&lhs, &rhs);
            if !is_zero_vec(&defect) {
                report.fail("homomorphism", vec![i, j], defect);
                return Ok(report);
            }
        }
    }
    report.pass("homomorphism");
    Ok(report)
}
