//! Structure constants for algebras, coalgebras, bialgebras and Hopf
//! algebras of dimension at most 4, with exact axiom evaluators.
//!
//! # Layout
//!
//! A rank-3 tensor `T[a][b][c]` over a basis of size `n` is packed into one
//! `u64` at bit `a*n*n + b*n + c`.
//!
//! * Product: `x^a x^b = sum_c V[a][b][c] x^c`.
//! * Coproduct: `Delta x^a = sum_{b,c} C[a][b][c] x^b (x) x^c`, so the
//!   `n*n`-bit slice starting at `a*n*n` is `Delta x^a` as an element of the
//!   tensor square, coefficient of `x^b (x) x^c` at bit `b*n + c`.
//! * Elements of the tensor cube use bit `a*n*n + b*n + c` for
//!   `x^a (x) x^b (x) x^c`.
//!
//! Linear maps follow the row convention of [`crate::gf2`]: row `i` of a
//! matrix is the image of `x^i`.
//!
//! # Reports
//!
//! Evaluators return the first failing axiom in a fixed order, together with
//! the lexicographically first index tuple at which it fails.

use std::fmt;

use thiserror::Error;

use crate::gf2::{invert, kron, low_mask, ones, parity, solve_linear, Gf2Mat, Gf2Vec, LinearSolution};

pub const MAX_DIM: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("basis change matrix is singular")]
    Singular,
    #[error("cannot parse {0:?}")]
    Parse(String),
}

#[inline]
#[must_use]
pub const fn slot(n: usize, a: usize, b: usize, c: usize) -> usize {
    a * n * n + b * n + c
}

#[inline]
fn bit(word: u64, i: usize) -> bool {
    word >> i & 1 == 1
}

fn split3(n: usize, i: usize) -> [usize; 3] {
    [i / (n * n), i / n % n, i % n]
}

fn split2(n: usize, i: usize) -> [usize; 2] {
    [i / n, i % n]
}

fn check_dim(dim: usize) {
    assert!((1..=MAX_DIM).contains(&dim), "dimension {dim} outside 1..=4");
}

/// Image of a tensor-square element under `P (x) P`.
#[must_use]
pub fn map_square(p: &Gf2Mat, x: u64) -> u64 {
    let n = p.rows();
    let mut out = 0;
    for i in ones(x) {
        let [b, c] = split2(n, i);
        out ^= kron(p.row(b), p.row(c), n);
    }
    out
}

/// Swaps the legs of a tensor-square element.
#[must_use]
pub fn flip_square(n: usize, x: u64) -> u64 {
    let mut out = 0;
    for i in ones(x) {
        let [b, c] = split2(n, i);
        out |= 1 << (c * n + b);
    }
    out
}

// ============================================================================
// Parsing helpers for fixtures written with basis names
// ============================================================================

/// Basis names such as `"1xyz"` or `"1sxw"`; the character at position `i`
/// names `x^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisNames(Vec<char>);

impl BasisNames {
    #[must_use]
    pub fn new(names: &str) -> Self {
        Self(names.chars().collect())
    }

    /// Default names `1`, `x`, `y`, `z` truncated to `dim`.
    #[must_use]
    pub fn standard(dim: usize) -> Self {
        Self("1xyz".chars().take(dim).collect())
    }

    #[must_use]
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    #[must_use]
    pub fn name(&self, i: usize) -> char {
        self.0[i]
    }

    pub fn index(&self, c: char) -> Result<usize, StructureError> {
        self.0
            .iter()
            .position(|&d| d == c)
            .ok_or_else(|| StructureError::Parse(c.to_string()))
    }

    /// Parses a sum of basis names such as `"1+x+y"`; `"0"` is zero.
    pub fn vector(&self, s: &str) -> Result<u64, StructureError> {
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Ok(0);
        }
        let mut v = 0;
        for term in s.split('+') {
            let mut cs = term.trim().chars();
            let (Some(c), None) = (cs.next(), cs.next()) else {
                return Err(StructureError::Parse(term.to_string()));
            };
            v ^= 1 << self.index(c)?;
        }
        Ok(v)
    }

    /// Parses a sum of two-letter terms such as `"1x+x1+xx"`, where `ab`
    /// stands for `a (x) b`.
    pub fn square(&self, s: &str) -> Result<u64, StructureError> {
        let n = self.dim();
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Ok(0);
        }
        let mut v = 0;
        for term in s.split('+') {
            let cs: Vec<char> = term.trim().chars().collect();
            if cs.len() != 2 {
                return Err(StructureError::Parse(term.to_string()));
            }
            v ^= 1 << (self.index(cs[0])? * n + self.index(cs[1])?);
        }
        Ok(v)
    }

    #[must_use]
    pub fn format_vector(&self, v: u64) -> String {
        if v == 0 {
            return "0".into();
        }
        ones(v).map(|i| self.0[i].to_string()).collect::<Vec<_>>().join("+")
    }

    #[must_use]
    pub fn format_square(&self, v: u64) -> String {
        if v == 0 {
            return "0".into();
        }
        let n = self.dim();
        ones(v)
            .map(|i| format!("{}{}", self.0[i / n], self.0[i % n]))
            .collect::<Vec<_>>()
            .join("+")
    }
}

// ============================================================================
// Algebras
// ============================================================================

/// A unital algebra given by structure constants in a fixed basis.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraSC {
    dim: usize,
    v: u64,
    eta: u64,
}

impl AlgebraSC {
    #[must_use]
    pub fn new(dim: usize, v: u64, eta: Gf2Vec) -> Self {
        check_dim(dim);
        assert_eq!(eta.len(), dim);
        Self {
            dim,
            v: v & low_mask(dim * dim * dim),
            eta: eta.bits(),
        }
    }

    /// Algebra with unit `x^0` and the given tensor.
    #[must_use]
    pub fn standard(dim: usize, v: u64) -> Self {
        Self::new(dim, v, Gf2Vec::unit(dim, 0))
    }

    /// Standard-form algebra from products of non-unit basis elements.
    #[must_use]
    pub fn from_products(dim: usize, f: impl Fn(usize, usize) -> u64) -> Self {
        check_dim(dim);
        let mut v = 0;
        for a in 0..dim {
            for b in 0..dim {
                let p = match (a, b) {
                    (0, _) => 1 << b,
                    (_, 0) => 1 << a,
                    _ => f(a, b) & low_mask(dim),
                };
                v |= p << slot(dim, a, b, 0);
            }
        }
        Self::standard(dim, v)
    }

    /// Standard-form algebra from relations like `"xy=1+z"`; products not
    /// listed are zero.
    pub fn from_relations(names: &BasisNames, relations: &[&str]) -> Result<Self, StructureError> {
        let n = names.dim();
        let mut table = vec![0u64; n * n];
        for rel in relations {
            let (lhs, rhs) = rel
                .split_once('=')
                .ok_or_else(|| StructureError::Parse(rel.to_string()))?;
            let cs: Vec<char> = lhs.trim().chars().collect();
            if cs.len() != 2 {
                return Err(StructureError::Parse(rel.to_string()));
            }
            let (a, b) = (names.index(cs[0])?, names.index(cs[1])?);
            if a == 0 || b == 0 {
                return Err(StructureError::Parse(format!("{rel}: unit products are fixed")));
            }
            table[a * n + b] = names.vector(rhs)?;
        }
        Ok(Self::from_products(n, |a, b| table[a * n + b]))
    }

    #[must_use]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[must_use]
    pub fn tensor(&self) -> u64 {
        self.v
    }

    #[must_use]
    pub fn eta(&self) -> Gf2Vec {
        Gf2Vec::from_bits(self.dim, self.eta)
    }

    #[must_use]
    pub fn unit_bits(&self) -> u64 {
        self.eta
    }

    #[must_use]
    pub fn is_standard(&self) -> bool {
        self.eta == 1
    }

    /// `x^a x^b` as a packed vector.
    #[inline]
    #[must_use]
    pub fn product(&self, a: usize, b: usize) -> u64 {
        self.v >> slot(self.dim, a, b, 0) & low_mask(self.dim)
    }

    #[must_use]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let mut out = 0;
        for i in ones(a) {
            for j in ones(b) {
                out ^= self.product(i, j);
            }
        }
        out
    }

    #[must_use]
    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|a| (0..a).all(|b| self.product(a, b) == self.product(b, a)))
    }

    /// Left multiplication matrix in the column convention:
    /// column `b` is `x^a x^b`.
    #[must_use]
    pub fn left_regular(&self, a: usize) -> Gf2Mat {
        Gf2Mat::from_rows(self.dim, (0..self.dim).map(|b| self.product(a, b)).collect()).transpose()
    }

    /// Nonzero products of non-unit basis elements, e.g. `"xx=x, xy=z"`.
    #[must_use]
    pub fn relations_doc(&self, names: &BasisNames) -> String {
        let mut parts = Vec::new();
        for a in 1..self.dim {
            for b in 1..self.dim {
                let p = self.product(a, b);
                if p != 0 {
                    parts.push(format!(
                        "{}{}={}",
                        names.name(a),
                        names.name(b),
                        names.format_vector(p)
                    ));
                }
            }
        }
        if parts.is_empty() {
            "all products of generators zero".into()
        } else {
            parts.join(", ")
        }
    }

    /// Pushes the structure forward along `p`, given `p_inv = p^-1`.
    #[must_use]
    pub fn transported(&self, p: &Gf2Mat, p_inv: &Gf2Mat) -> Self {
        let n = self.dim;
        let mut images = [0u64; MAX_DIM * MAX_DIM];
        for i in 0..n {
            for j in 0..n {
                images[i * n + j] = p.image(self.product(i, j));
            }
        }
        let mut v = 0;
        for a in 0..n {
            for b in 0..n {
                let mut acc = 0;
                for i in ones(p_inv.row(a)) {
                    for j in ones(p_inv.row(b)) {
                        acc ^= images[i * n + j];
                    }
                }
                v |= acc << slot(n, a, b, 0);
            }
        }
        Self {
            dim: n,
            v,
            eta: p.image(self.eta),
        }
    }

    /// The opposite algebra.
    #[must_use]
    pub fn opposite(&self) -> Self {
        Self {
            dim: self.dim,
            v: permute(self.dim, self.v, |a, b, c| (b, a, c)),
            eta: self.eta,
        }
    }

    #[must_use]
    pub fn hex(&self) -> String {
        tensor_hex(self.dim, self.v)
    }
}

impl fmt::Debug for AlgebraSC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AlgebraSC(n={}, V={}, eta={:?})",
            self.dim,
            self.hex(),
            self.eta()
        )
    }
}

/// Fixed-width lowercase hex of a packed rank-3 tensor.
#[must_use]
pub fn tensor_hex(dim: usize, t: u64) -> String {
    let digits = (dim * dim * dim).div_ceil(4);
    format!("{t:0digits$x}")
}

pub fn parse_tensor_hex(s: &str) -> Result<u64, StructureError> {
    u64::from_str_radix(s, 16).map_err(|_| StructureError::Parse(s.to_string()))
}

fn permute(n: usize, t: u64, f: impl Fn(usize, usize, usize) -> (usize, usize, usize)) -> u64 {
    let mut out = 0;
    for i in ones(t) {
        let [a, b, c] = split3(n, i);
        let (x, y, z) = f(a, b, c);
        out |= 1 << slot(n, x, y, z);
    }
    out
}

// ============================================================================
// Coalgebras
// ============================================================================

/// A counital coalgebra given by structure constants in a fixed basis.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoalgebraSC {
    dim: usize,
    c: u64,
    eps: u64,
}

impl CoalgebraSC {
    #[must_use]
    pub fn new(dim: usize, c: u64, eps: Gf2Vec) -> Self {
        check_dim(dim);
        assert_eq!(eps.len(), dim);
        Self {
            dim,
            c: c & low_mask(dim * dim * dim),
            eps: eps.bits(),
        }
    }

    /// Builds `Delta` from one tensor-square element per basis vector.
    #[must_use]
    pub fn from_coproducts(dim: usize, deltas: &[u64], eps: Gf2Vec) -> Self {
        assert_eq!(deltas.len(), dim);
        let mut c = 0;
        for (a, &d) in deltas.iter().enumerate() {
            c |= (d & low_mask(dim * dim)) << slot(dim, a, 0, 0);
        }
        Self::new(dim, c, eps)
    }

    /// Coalgebra with `Delta x^0 = x^0 (x) x^0`, `eps(x^0) = 1`, and the
    /// other basis vectors given as strings like `"1x+x1+xx"`.
    pub fn from_terms(names: &BasisNames, eps: &[u8], deltas: &[&str]) -> Result<Self, StructureError> {
        let n = names.dim();
        if deltas.len() + 1 != n || eps.len() + 1 != n {
            return Err(StructureError::Shape(format!(
                "expected {} coproducts and counit values",
                n - 1
            )));
        }
        let mut ds = vec![1u64];
        for d in deltas {
            ds.push(names.square(d)?);
        }
        let mut e = vec![1u8];
        e.extend_from_slice(eps);
        Ok(Self::from_coproducts(n, &ds, Gf2Vec::from_slice(&e)))
    }

    #[must_use]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[must_use]
    pub fn tensor(&self) -> u64 {
        self.c
    }

    #[must_use]
    pub fn eps(&self) -> Gf2Vec {
        Gf2Vec::from_bits(self.dim, self.eps)
    }

    #[must_use]
    pub fn eps_bits(&self) -> u64 {
        self.eps
    }

    /// `Delta x^a` as a tensor-square element.
    #[inline]
    #[must_use]
    pub fn coproduct(&self, a: usize) -> u64 {
        self.c >> slot(self.dim, a, 0, 0) & low_mask(self.dim * self.dim)
    }

    #[must_use]
    pub fn apply(&self, v: u64) -> u64 {
        ones(v).fold(0, |acc, i| acc ^ self.coproduct(i))
    }

    #[must_use]
    pub fn counit(&self, v: u64) -> bool {
        parity(v & self.eps)
    }

    #[must_use]
    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim).all(|a| flip_square(self.dim, self.coproduct(a)) == self.coproduct(a))
    }

    /// Pushes the structure forward along `p`, given `p_inv = p^-1`.
    #[must_use]
    pub fn transported(&self, p: &Gf2Mat, p_inv: &Gf2Mat) -> Self {
        let n = self.dim;
        let pushed: Vec<u64> = (0..n).map(|i| map_square(p, self.coproduct(i))).collect();
        let mut c = 0;
        let mut eps = 0;
        for a in 0..n {
            let row = p_inv.row(a);
            let d = ones(row).fold(0, |acc, i| acc ^ pushed[i]);
            c |= d << slot(n, a, 0, 0);
            eps |= u64::from(parity(row & self.eps)) << a;
        }
        Self { dim: n, c, eps }
    }

    /// The co-opposite coalgebra.
    #[must_use]
    pub fn opposite(&self) -> Self {
        Self {
            dim: self.dim,
            c: permute(self.dim, self.c, |a, b, c| (a, c, b)),
            eps: self.eps,
        }
    }

    #[must_use]
    pub fn hex(&self) -> String {
        tensor_hex(self.dim, self.c)
    }

    #[must_use]
    pub fn describe(&self, names: &BasisNames) -> String {
        (1..self.dim)
            .map(|a| {
                format!(
                    "D{}={}",
                    names.name(a),
                    names.format_square(self.coproduct(a))
                )
            })
            .collect::<Vec<_>>()
            .join("; ")
    }
}

impl fmt::Debug for CoalgebraSC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CoalgebraSC(n={}, C={}, eps={:?})",
            self.dim,
            self.hex(),
            self.eps()
        )
    }
}

/// Swaps product and coproduct data: `V*[b][c][a] = C[a][b][c]`, unit = counit.
#[must_use]
pub fn dualize_coalgebra(c: &CoalgebraSC) -> AlgebraSC {
    AlgebraSC {
        dim: c.dim,
        v: permute(c.dim, c.c, |a, b, d| (b, d, a)),
        eta: c.eps,
    }
}

/// Swaps product and coproduct data: `C*[c][a][b] = V[a][b][c]`, counit = unit.
#[must_use]
pub fn dualize_algebra(a: &AlgebraSC) -> CoalgebraSC {
    CoalgebraSC {
        dim: a.dim,
        c: permute(a.dim, a.v, |x, y, z| (z, x, y)),
        eps: a.eta,
    }
}

// ============================================================================
// Bialgebras, Hopf algebras, tensor squares
// ============================================================================

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bialgebra {
    pub alg: AlgebraSC,
    pub coalg: CoalgebraSC,
}

impl Bialgebra {
    #[must_use]
    pub fn new(alg: AlgebraSC, coalg: CoalgebraSC) -> Self {
        assert_eq!(alg.dim(), coalg.dim());
        Self { alg, coalg }
    }

    #[must_use]
    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    #[must_use]
    pub fn transported(&self, p: &Gf2Mat, p_inv: &Gf2Mat) -> Self {
        Self {
            alg: self.alg.transported(p, p_inv),
            coalg: self.coalg.transported(p, p_inv),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HopfAlgebra {
    pub bi: Bialgebra,
    pub s: Gf2Mat,
}

impl HopfAlgebra {
    /// Solves for the antipode; `None` if `bi` is not Hopf.
    #[must_use]
    pub fn from_bialgebra(bi: Bialgebra) -> Option<Self> {
        solve_antipode(&bi).map(|s| Self { bi, s })
    }

    #[must_use]
    pub fn dim(&self) -> usize {
        self.bi.dim()
    }

    #[must_use]
    pub fn alg(&self) -> &AlgebraSC {
        &self.bi.alg
    }

    #[must_use]
    pub fn coalg(&self) -> &CoalgebraSC {
        &self.bi.coalg
    }

    #[must_use]
    pub fn transported(&self, p: &Gf2Mat, p_inv: &Gf2Mat) -> Self {
        Self {
            bi: self.bi.transported(p, p_inv),
            s: &(p_inv * &self.s) * p,
        }
    }
}

/// Element `sum R[a][b] x^a (x) x^b` of `H (x) H`, coefficient at bit `a*n+b`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorSquareElement {
    pub dim: usize,
    pub coeffs: u64,
}

impl TensorSquareElement {
    #[must_use]
    pub fn new(dim: usize, coeffs: u64) -> Self {
        check_dim(dim);
        Self {
            dim,
            coeffs: coeffs & low_mask(dim * dim),
        }
    }

    /// `1 (x) 1` for the given algebra's unit.
    #[must_use]
    pub fn one(alg: &AlgebraSC) -> Self {
        Self::new(alg.dim(), kron(alg.unit_bits(), alg.unit_bits(), alg.dim()))
    }

    #[must_use]
    pub fn get(&self, a: usize, b: usize) -> bool {
        bit(self.coeffs, a * self.dim + b)
    }

    /// `R_21`.
    #[must_use]
    pub fn flipped(&self) -> Self {
        Self::new(self.dim, flip_square(self.dim, self.coeffs))
    }

    /// Coefficient matrix with entry `(a, b)` equal to `R[a][b]`.
    #[must_use]
    pub fn matrix(&self) -> Gf2Mat {
        let n = self.dim;
        Gf2Mat::from_rows(n, (0..n).map(|a| self.coeffs >> (a * n) & low_mask(n)).collect())
    }
}

impl fmt::Debug for TensorSquareElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", BasisNames::standard(self.dim).format_square(self.coeffs))
    }
}

/// Product in `A (x) A`: `(a (x) b)(c (x) d) = ac (x) bd`.
#[must_use]
pub fn square_mul(alg: &AlgebraSC, x: u64, y: u64) -> u64 {
    let n = alg.dim();
    let mut out = 0;
    for i in ones(x) {
        let [a, b] = split2(n, i);
        for j in ones(y) {
            let [c, d] = split2(n, j);
            out ^= kron(alg.product(a, c), alg.product(b, d), n);
        }
    }
    out
}

/// Product in `A (x) A (x) A`.
#[must_use]
pub fn cube_mul(alg: &AlgebraSC, x: u64, y: u64) -> u64 {
    let n = alg.dim();
    let mut out = 0;
    for i in ones(x) {
        let [a, b, c] = split3(n, i);
        for j in ones(y) {
            let [d, e, f] = split3(n, j);
            let ab = kron(alg.product(a, d), alg.product(b, e), n);
            out ^= kron(ab, alg.product(c, f), n);
        }
    }
    out
}

#[must_use]
pub fn tensor_square_multiply(
    a: &TensorSquareElement,
    b: &TensorSquareElement,
    alg: &AlgebraSC,
) -> TensorSquareElement {
    assert!(a.dim == alg.dim() && b.dim == alg.dim());
    TensorSquareElement::new(alg.dim(), square_mul(alg, a.coeffs, b.coeffs))
}

// ============================================================================
// Axiom evaluation
// ============================================================================

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// Indices `(mu, rho)`: `(1 x^mu)` differs from `x^mu` at `x^rho`.
    UnitLeft,
    /// Indices `(mu, rho)`.
    UnitRight,
    /// Indices `(a, b, c, d)`: `(x^a x^b) x^c` and `x^a (x^b x^c)` differ at `x^d`.
    Associativity,
    /// Indices `(mu, rho)`.
    CounitLeft,
    /// Indices `(mu, nu)`.
    CounitRight,
    /// Indices `(mu, a, b, c)`.
    Coassociativity,
    /// Indices `[]`: `eps(1) != 1`.
    CounitOfUnit,
    /// Indices `(a, b)`: `Delta 1` differs from `1 (x) 1` at `x^a (x) x^b`.
    CoproductOfUnit,
    /// Indices `(mu, nu, l, g)`: `Delta(x^mu x^nu)` and `Delta x^mu Delta x^nu`
    /// differ at `x^l (x) x^g`.
    Compatibility,
    /// Indices `(mu, nu)`.
    CounitMultiplicative,
    /// Indices `(mu, beta)` for `m (S (x) id) Delta`.
    AntipodeLeft,
    /// Indices `(mu, beta)` for `m (id (x) S) Delta`.
    AntipodeRight,
    /// Indices `(mu, nu, l)`: `S(x^mu x^nu) != S(x^nu) S(x^mu)`.
    AntipodeAntiMultiplicative,
    /// Indices `[rho]`.
    AntipodeUnit,
    /// Indices `(mu, a, b)`.
    AntipodeAntiComultiplicative,
    /// Indices `[mu]`.
    AntipodeCounit,
    /// Indices `[]`: tensors of different dimensions.
    Shape,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub indices: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} fails at {:?}", self.axiom, self.indices)
    }
}

pub type AxiomReport = Result<(), Violation>;

fn fail(axiom: Axiom, indices: Vec<usize>) -> AxiomReport {
    Err(Violation { axiom, indices })
}

fn first_bit(x: u64) -> usize {
    x.trailing_zeros() as usize
}

/// Unit law and associativity.
pub fn check_algebra(a: &AlgebraSC) -> AxiomReport {
    let n = a.dim();
    for mu in 0..n {
        let d = a.mul(a.unit_bits(), 1 << mu) ^ (1 << mu);
        if d != 0 {
            return fail(Axiom::UnitLeft, vec![mu, first_bit(d)]);
        }
    }
    for mu in 0..n {
        let d = a.mul(1 << mu, a.unit_bits()) ^ (1 << mu);
        if d != 0 {
            return fail(Axiom::UnitRight, vec![mu, first_bit(d)]);
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = a.product(x, y);
            for z in 0..n {
                let d = a.mul(xy, 1 << z) ^ a.mul(1 << x, a.product(y, z));
                if d != 0 {
                    return fail(Axiom::Associativity, vec![x, y, z, first_bit(d)]);
                }
            }
        }
    }
    Ok(())
}

/// Counity and coassociativity.
pub fn check_coalgebra(c: &CoalgebraSC) -> AxiomReport {
    let n = c.dim();
    let eps = c.eps_bits();
    for mu in 0..n {
        let d = c.coproduct(mu);
        // (eps (x) id) Delta x^mu
        let mut left = 0;
        let mut right = 0;
        for i in ones(d) {
            let [b, cc] = split2(n, i);
            if bit(eps, b) {
                left ^= 1 << cc;
            }
            if bit(eps, cc) {
                right ^= 1 << b;
            }
        }
        let dl = left ^ (1 << mu);
        if dl != 0 {
            return fail(Axiom::CounitLeft, vec![mu, first_bit(dl)]);
        }
        let dr = right ^ (1 << mu);
        if dr != 0 {
            return fail(Axiom::CounitRight, vec![mu, first_bit(dr)]);
        }
    }
    for mu in 0..n {
        let diff = coassociator(c, mu);
        if diff != 0 {
            let [a, b, cc] = split3(n, first_bit(diff));
            return fail(Axiom::Coassociativity, vec![mu, a, b, cc]);
        }
    }
    Ok(())
}

/// `(Delta (x) id) Delta x^mu - (id (x) Delta) Delta x^mu` in the tensor cube.
#[must_use]
pub fn coassociator(c: &CoalgebraSC, mu: usize) -> u64 {
    let n = c.dim();
    let mut diff = 0;
    for i in ones(c.coproduct(mu)) {
        let [nu, rho] = split2(n, i);
        diff ^= kron(c.coproduct(nu), 1 << rho, n);
        diff ^= c.coproduct(rho) << (nu * n * n);
    }
    diff
}

/// Full bialgebra check: algebra, coalgebra, unit/counit normalization and
/// compatibility, in that order.
pub fn check_bialgebra(b: &Bialgebra) -> AxiomReport {
    if b.alg.dim() != b.coalg.dim() {
        return fail(Axiom::Shape, vec![]);
    }
    check_algebra(&b.alg)?;
    check_coalgebra(&b.coalg)?;
    let n = b.dim();
    let alg = &b.alg;
    let co = &b.coalg;
    let unit = alg.unit_bits();
    if !co.counit(unit) {
        return fail(Axiom::CounitOfUnit, vec![]);
    }
    let d = co.apply(unit) ^ kron(unit, unit, n);
    if d != 0 {
        return fail(Axiom::CoproductOfUnit, split2(n, first_bit(d)).to_vec());
    }
    for mu in 0..n {
        for nu in 0..n {
            let d = co.apply(alg.product(mu, nu)) ^ square_mul(alg, co.coproduct(mu), co.coproduct(nu));
            if d != 0 {
                let [l, g] = split2(n, first_bit(d));
                return fail(Axiom::Compatibility, vec![mu, nu, l, g]);
            }
        }
    }
    let eps = co.eps_bits();
    for mu in 0..n {
        for nu in 0..n {
            if co.counit(alg.product(mu, nu)) != (bit(eps, mu) && bit(eps, nu)) {
                return fail(Axiom::CounitMultiplicative, vec![mu, nu]);
            }
        }
    }
    Ok(())
}

/// Linear system for the antipode: unknown `s[nu][alpha]` at column
/// `nu*n + alpha`; rows `(mu, beta)` for the left identity, then the right.
fn antipode_system(b: &Bialgebra) -> (Gf2Mat, Gf2Vec) {
    let n = b.dim();
    let alg = &b.alg;
    let co = &b.coalg;
    let unit = alg.unit_bits();
    let eps = co.eps_bits();
    let mut rows = Vec::with_capacity(2 * n * n);
    let mut rhs = Gf2Vec::zero(2 * n * n);
    for side in 0..2 {
        for mu in 0..n {
            for beta in 0..n {
                let mut row = 0u64;
                for i in ones(co.coproduct(mu)) {
                    let [nu, rho] = split2(n, i);
                    for alpha in 0..n {
                        let hit = if side == 0 {
                            bit(alg.product(alpha, rho), beta)
                        } else {
                            bit(alg.product(nu, alpha), beta)
                        };
                        if hit {
                            let var = if side == 0 { nu * n + alpha } else { rho * n + alpha };
                            row ^= 1 << var;
                        }
                    }
                }
                rhs.set(rows.len(), bit(eps, mu) && bit(unit, beta));
                rows.push(row);
            }
        }
    }
    (Gf2Mat::from_rows(n * n, rows), rhs)
}

/// The antipode, if `b` is a Hopf algebra. Panics if the linear system has
/// more than one solution, which would contradict uniqueness of antipodes.
#[must_use]
pub fn solve_antipode(b: &Bialgebra) -> Option<Gf2Mat> {
    let n = b.dim();
    let (a, rhs) = antipode_system(b);
    match solve_linear(&a, &rhs).expect("antipode system is well shaped") {
        LinearSolution::Inconsistent => None,
        LinearSolution::Solutions {
            particular,
            nullspace,
            ..
        } => {
            assert!(nullspace.is_empty(), "antipode system has nullity {}", nullspace.len());
            let bits = particular.bits();
            Some(Gf2Mat::from_rows(
                n,
                (0..n).map(|nu| bits >> (nu * n) & low_mask(n)).collect(),
            ))
        }
    }
}

/// Both antipode identities for a candidate `s`.
pub fn check_antipode(b: &Bialgebra, s: &Gf2Mat) -> AxiomReport {
    let n = b.dim();
    let alg = &b.alg;
    let co = &b.coalg;
    for side in 0..2 {
        for mu in 0..n {
            let mut acc = 0;
            for i in ones(co.coproduct(mu)) {
                let [nu, rho] = split2(n, i);
                acc ^= if side == 0 {
                    alg.mul(s.row(nu), 1 << rho)
                } else {
                    alg.mul(1 << nu, s.row(rho))
                };
            }
            let expect = if bit(co.eps_bits(), mu) { alg.unit_bits() } else { 0 };
            let d = acc ^ expect;
            if d != 0 {
                let axiom = if side == 0 { Axiom::AntipodeLeft } else { Axiom::AntipodeRight };
                return fail(axiom, vec![mu, first_bit(d)]);
            }
        }
    }
    Ok(())
}

/// Antipode identities plus the anti-homomorphism properties.
pub fn check_hopf(h: &HopfAlgebra) -> AxiomReport {
    check_bialgebra(&h.bi)?;
    check_antipode(&h.bi, &h.s)?;
    let n = h.dim();
    let alg = h.alg();
    let co = h.coalg();
    let s = &h.s;
    for mu in 0..n {
        for nu in 0..n {
            let d = s.image(alg.product(mu, nu)) ^ alg.mul(s.row(nu), s.row(mu));
            if d != 0 {
                return fail(Axiom::AntipodeAntiMultiplicative, vec![mu, nu, first_bit(d)]);
            }
        }
    }
    let d = s.image(alg.unit_bits()) ^ alg.unit_bits();
    if d != 0 {
        return fail(Axiom::AntipodeUnit, vec![first_bit(d)]);
    }
    for mu in 0..n {
        let lhs = co.apply(s.row(mu));
        let rhs = map_square(s, flip_square(n, co.coproduct(mu)));
        let d = lhs ^ rhs;
        if d != 0 {
            let [a, b] = split2(n, first_bit(d));
            return fail(Axiom::AntipodeAntiComultiplicative, vec![mu, a, b]);
        }
    }
    for mu in 0..n {
        if co.counit(s.row(mu)) != bit(co.eps_bits(), mu) {
            return fail(Axiom::AntipodeCounit, vec![mu]);
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Product,
    Coproduct,
}

/// `H^op` or `H^cop`.
#[must_use]
pub fn opposite(b: &Bialgebra, which: Side) -> Bialgebra {
    match which {
        Side::Product => Bialgebra::new(b.alg.opposite(), b.coalg),
        Side::Coproduct => Bialgebra::new(b.alg, b.coalg.opposite()),
    }
}

/// Structures that can be pushed forward along an invertible matrix.
pub trait BasisChange: Sized {
    fn basis_dim(&self) -> usize;
    fn transport_with(&self, p: &Gf2Mat, p_inv: &Gf2Mat) -> Self;

    /// Pushes the structure forward along `p`: `p` becomes an isomorphism
    /// from `self` to the result.
    fn apply_basis_change(&self, p: &Gf2Mat) -> Result<Self, StructureError> {
        if !p.is_square() || p.rows() != self.basis_dim() {
            return Err(StructureError::Shape(format!(
                "{}x{} matrix on dimension {}",
                p.rows(),
                p.cols(),
                self.basis_dim()
            )));
        }
        let p_inv = invert(p).ok_or(StructureError::Singular)?;
        Ok(self.transport_with(p, &p_inv))
    }
}

impl BasisChange for AlgebraSC {
    fn basis_dim(&self) -> usize {
        self.dim
    }
    fn transport_with(&self, p: &Gf2Mat, p_inv: &Gf2Mat) -> Self {
        self.transported(p, p_inv)
    }
}

impl BasisChange for CoalgebraSC {
    fn basis_dim(&self) -> usize {
        self.dim
    }
    fn transport_with(&self, p: &Gf2Mat, p_inv: &Gf2Mat) -> Self {
        self.transported(p, p_inv)
    }
}

impl BasisChange for Bialgebra {
    fn basis_dim(&self) -> usize {
        self.dim()
    }
    fn transport_with(&self, p: &Gf2Mat, p_inv: &Gf2Mat) -> Self {
        self.transported(p, p_inv)
    }
}

impl BasisChange for HopfAlgebra {
    fn basis_dim(&self) -> usize {
        self.dim()
    }
    fn transport_with(&self, p: &Gf2Mat, p_inv: &Gf2Mat) -> Self {
        self.transported(p, p_inv)
    }
}

/// Matrix of a linear map given as one image string per basis vector.
pub fn matrix_from_images(names: &BasisNames, images: &[&str]) -> Result<Gf2Mat, StructureError> {
    if images.len() != names.dim() {
        return Err(StructureError::Shape(format!("{} images for dimension {}", images.len(), names.dim())));
    }
    let rows = images.iter().map(|s| names.vector(s)).collect::<Result<Vec<_>, _>>()?;
    Ok(Gf2Mat::from_rows(names.dim(), rows))
}
