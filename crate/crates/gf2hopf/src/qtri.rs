//! Quasitriangular structures by exhaustive search over `H (x) H`, their
//! Killing forms, and coquasitriangular functionals.
//!
//! Candidates are filtered in the order counit, hexagon, quasi-cocommutativity,
//! invertibility. The unit of `H` need not be `x^0`.

use rayon::prelude::*;
use serde::Serialize;

use crate::gf2::{kron, low_mask, ones, parity, solve_linear, Gf2Mat, Gf2Vec, LinearSolution};
use crate::structure::{
    cube_mul, flip_square, map_square, square_mul, AlgebraSC, Bialgebra, HopfAlgebra, TensorSquareElement,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum QtClass {
    /// `R = 1 (x) 1`.
    Trivial,
    /// `R21 R = 1 (x) 1` with `R` nontrivial.
    Triangular,
    /// `R21 R != 1 (x) 1`.
    Strict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuasiTriangularStructure {
    pub r: TensorSquareElement,
    pub r_inv: TensorSquareElement,
    pub q: TensorSquareElement,
    pub klass: QtClass,
    pub factorisable: bool,
}

fn unit_square(alg: &AlgebraSC) -> u64 {
    kron(alg.unit_bits(), alg.unit_bits(), alg.dim())
}

/// `(eps (x) id) R = 1 = (id (x) eps) R`.
#[must_use]
pub fn counit_ok(b: &Bialgebra, r: u64) -> bool {
    let n = b.dim();
    let eps = b.coalg.eps_bits();
    let (mut left, mut right) = (0u64, 0u64);
    for i in ones(r) {
        let (a, c) = (i / n, i % n);
        if eps >> a & 1 == 1 {
            left ^= 1 << c;
        }
        if eps >> c & 1 == 1 {
            right ^= 1 << a;
        }
    }
    left == b.alg.unit_bits() && right == b.alg.unit_bits()
}

/// Places the legs of `r` at positions `(i, j)` of the tensor cube, with the
/// unit in the remaining slot.
fn leg(alg: &AlgebraSC, r: u64, i: usize, j: usize) -> u64 {
    let n = alg.dim();
    let u = alg.unit_bits();
    let mut out = 0;
    for t in ones(r) {
        let (a, c) = (1u64 << (t / n), 1u64 << (t % n));
        let slots = match (i, j) {
            (0, 1) => [a, c, u],
            (0, 2) => [a, u, c],
            (1, 2) => [u, a, c],
            (1, 0) => [c, a, u],
            (2, 0) => [c, u, a],
            (2, 1) => [u, c, a],
            _ => unreachable!("distinct legs"),
        };
        out ^= kron(kron(slots[0], slots[1], n), slots[2], n);
    }
    out
}

/// `(Delta (x) id) R = R13 R23` and `(id (x) Delta) R = R13 R12`.
#[must_use]
pub fn hexagons_ok(b: &Bialgebra, r: u64) -> bool {
    let n = b.dim();
    let alg = &b.alg;
    let co = &b.coalg;
    let (mut dl, mut dr) = (0u64, 0u64);
    for t in ones(r) {
        let (a, c) = (t / n, t % n);
        dl ^= kron(co.coproduct(a), 1 << c, n);
        dr ^= co.coproduct(c) << (a * n * n);
    }
    let r12 = leg(alg, r, 0, 1);
    let r13 = leg(alg, r, 0, 2);
    let r23 = leg(alg, r, 1, 2);
    dl == cube_mul(alg, r13, r23) && dr == cube_mul(alg, r13, r12)
}

/// `R Delta(h) = Delta^cop(h) R` on every basis vector.
#[must_use]
pub fn quasi_cocommutative(b: &Bialgebra, r: u64) -> bool {
    let n = b.dim();
    (0..n).all(|h| {
        let d = b.coalg.coproduct(h);
        square_mul(&b.alg, r, d) == square_mul(&b.alg, flip_square(n, d), r)
    })
}

/// Two-sided inverse in `H (x) H`, found by a linear solve.
#[must_use]
pub fn square_inverse(alg: &AlgebraSC, r: u64) -> Option<u64> {
    let n = alg.dim();
    let m = n * n;
    let one = unit_square(alg);
    // column j of the left-multiplication matrix is r * e_j
    let cols: Vec<u64> = (0..m).map(|j| square_mul(alg, r, 1 << j)).collect();
    let rows = (0..m)
        .map(|i| (0..m).fold(0u64, |acc, j| acc | (cols[j] >> i & 1) << j))
        .collect();
    let sol = solve_linear(&Gf2Mat::from_rows(m, rows), &Gf2Vec::from_bits(m, one)).ok()?;
    match sol {
        LinearSolution::Solutions { particular, .. } => {
            let x = particular.bits();
            (square_mul(alg, x, r) == one).then_some(x)
        }
        LinearSolution::Inconsistent => None,
    }
}

/// `R12 R13 R23 = R23 R13 R12`.
#[must_use]
pub fn yang_baxter(alg: &AlgebraSC, r: u64) -> bool {
    let r12 = leg(alg, r, 0, 1);
    let r13 = leg(alg, r, 0, 2);
    let r23 = leg(alg, r, 1, 2);
    cube_mul(alg, cube_mul(alg, r12, r13), r23) == cube_mul(alg, cube_mul(alg, r23, r13), r12)
}

/// Killing form `Q = R21 R` with its class flags.
#[must_use]
pub fn classify_r(alg: &AlgebraSC, r: u64) -> (u64, QtClass, bool) {
    let n = alg.dim();
    let q = square_mul(alg, flip_square(n, r), r);
    let one = unit_square(alg);
    let klass = if r == one {
        QtClass::Trivial
    } else if q == one {
        QtClass::Triangular
    } else {
        QtClass::Strict
    };
    let qm = TensorSquareElement::new(n, q).matrix();
    (q, klass, qm.is_invertible())
}

/// All quasitriangular structures on `b`, in increasing bit order.
#[must_use]
pub fn enumerate_quasitriangular(b: &Bialgebra) -> Vec<QuasiTriangularStructure> {
    let n = b.dim();
    let m = n * n;
    (0..1u64 << m)
        .into_par_iter()
        .filter(|&r| counit_ok(b, r) && hexagons_ok(b, r) && quasi_cocommutative(b, r))
        .filter_map(|r| {
            let inv = square_inverse(&b.alg, r)?;
            let (q, klass, factorisable) = classify_r(&b.alg, r);
            Some(QuasiTriangularStructure {
                r: TensorSquareElement::new(n, r),
                r_inv: TensorSquareElement::new(n, inv),
                q: TensorSquareElement::new(n, q),
                klass,
                factorisable,
            })
        })
        .collect()
}

/// Hopf-case identities: `R^-1 = (S (x) id) R` and `(S (x) S) R = R`.
#[must_use]
pub fn antipode_identities(h: &HopfAlgebra, qt: &QuasiTriangularStructure) -> bool {
    let n = h.dim();
    let s = &h.s;
    let r = qt.r.coeffs;
    let s_id = ones(r).fold(0u64, |acc, t| acc ^ kron(s.row(t / n), 1 << (t % n), n));
    s_id == qt.r_inv.coeffs && map_square(s, r) == r
}

/// Nontrivial `R` on every Hopf class of dimension `n`.
#[must_use]
pub fn qt_census(n: usize) -> usize {
    let census = crate::hopfdual::Census::get(n);
    census
        .hopf_classes()
        .map(|c| {
            let list = enumerate_quasitriangular(&c.bialgebra());
            let one = unit_square(&c.algebra);
            list.iter().filter(|q| q.r.coeffs != one).count()
        })
        .sum()
}

// ============================================================================
// Coquasitriangular functionals
// ============================================================================

/// A bilinear form on `H (x) H`: entry `(a, b)` is `R(x^a (x) x^b)`.
pub type Functional = Gf2Mat;

fn entry(m: &Gf2Mat, a: usize, b: usize) -> bool {
    m.row(a) >> b & 1 == 1
}

/// `R(x (x) y)` extended bilinearly to packed vectors.
fn form(m: &Gf2Mat, x: u64, y: u64) -> bool {
    parity(m.image(x) & y)
}

/// `R` evaluated on a tensor-square element.
fn form_square(m: &Gf2Mat, n: usize, t: u64) -> bool {
    ones(t).fold(false, |acc, i| acc ^ entry(m, i / n, i % n))
}

/// Direct check of the coquasitriangular axioms on `b` for the form `m`.
#[must_use]
pub fn is_coquasitriangular(b: &Bialgebra, m: &Gf2Mat) -> bool {
    let n = b.dim();
    let alg = &b.alg;
    let co = &b.coalg;
    let unit = alg.unit_bits();
    let eps = co.eps_bits();
    // R(h (x) 1) = R(1 (x) h) = eps(h)
    for h in 0..n {
        let e = eps >> h & 1 == 1;
        if form(m, 1 << h, unit) != e || form(m, unit, 1 << h) != e {
            return false;
        }
    }
    for f in 0..n {
        for g in 0..n {
            for h in 0..n {
                // R(fg (x) h) = R(f (x) h1) R(g (x) h2)
                let lhs = form(m, alg.product(f, g), 1 << h);
                let rhs = ones(co.coproduct(h)).fold(false, |acc, i| {
                    acc ^ (entry(m, f, i / n) && entry(m, g, i % n))
                });
                if lhs != rhs {
                    return false;
                }
                // R(f (x) gh) = R(f1 (x) h) R(f2 (x) g)
                let lhs = form(m, 1 << f, alg.product(g, h));
                let rhs = ones(co.coproduct(f)).fold(false, |acc, i| {
                    acc ^ (entry(m, i / n, h) && entry(m, i % n, g))
                });
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    // g1 h1 R(h2 (x) g2) = R(h1 (x) g1) h2 g2
    for g in 0..n {
        for h in 0..n {
            let (mut lhs, mut rhs) = (0u64, 0u64);
            for i in ones(co.coproduct(g)) {
                let (g1, g2) = (i / n, i % n);
                for j in ones(co.coproduct(h)) {
                    let (h1, h2) = (j / n, j % n);
                    if entry(m, h2, g2) {
                        lhs ^= alg.product(g1, h1);
                    }
                    if entry(m, h1, g1) {
                        rhs ^= alg.product(h2, g2);
                    }
                }
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    convolution_invertible(b, m)
}

/// Existence of `m'` with `m(a1 (x) b1) m'(a2 (x) b2) = eps(a) eps(b)`.
#[must_use]
pub fn convolution_invertible(b: &Bialgebra, m: &Gf2Mat) -> bool {
    let n = b.dim();
    let co = &b.coalg;
    let eps = co.eps_bits();
    let mut rows = Vec::with_capacity(n * n);
    let mut rhs = Gf2Vec::zero(n * n);
    for a in 0..n {
        for c in 0..n {
            // unknown m'[a2][c2] at bit a2*n + c2
            let mut row = 0u64;
            for i in ones(co.coproduct(a)) {
                for j in ones(co.coproduct(c)) {
                    if entry(m, i / n, j / n) {
                        row ^= 1 << ((i % n) * n + j % n);
                    }
                }
            }
            rhs.set(rows.len(), eps >> a & eps >> c & 1 == 1);
            rows.push(row);
        }
    }
    let sys = Gf2Mat::from_rows(n * n, rows);
    matches!(solve_linear(&sys, &rhs), Ok(LinearSolution::Solutions { .. }))
}

/// Coquasitriangular forms on `h` by direct search over all `n x n` forms.
#[must_use]
pub fn coquasitriangular_direct(b: &Bialgebra) -> Vec<Functional> {
    let n = b.dim();
    (0..1u64 << (n * n))
        .into_par_iter()
        .map(|bits| Gf2Mat::from_rows(n, (0..n).map(|a| bits >> (a * n) & low_mask(n)).collect()))
        .filter(|m| is_coquasitriangular(b, m))
        .collect()
}

/// Coquasitriangular forms on `b` from quasitriangular structures on the
/// dual bialgebra in the dual basis: `R = sum m(x^a (x) x^b) y_a (x) y_b`.
#[must_use]
pub fn coquasitriangular_via_dual(b: &Bialgebra) -> Vec<Functional> {
    let n = b.dim();
    let dual = Bialgebra::new(
        crate::structure::dualize_coalgebra(&b.coalg),
        crate::structure::dualize_algebra(&b.alg),
    );
    enumerate_quasitriangular(&dual)
        .into_iter()
        .map(|qt| Gf2Mat::from_rows(n, (0..n).map(|a| qt.r.coeffs >> (a * n) & low_mask(n)).collect()))
        .collect()
}

/// Value of a form on a tensor-square element, for reports.
#[must_use]
pub fn evaluate(m: &Functional, t: &TensorSquareElement) -> bool {
    form_square(m, t.dim, t.coeffs)
}
