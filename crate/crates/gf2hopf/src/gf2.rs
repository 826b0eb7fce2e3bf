//! Exact linear algebra over F2 on bit-packed words.
//!
//! # Layout
//!
//! A [`Gf2Vec`] holds at most 64 coordinates in one `u64`; coordinate `i`
//! lives at bit `i`. A [`Gf2Mat`] stores one such word per row, so entry
//! `(i, j)` is bit `j` of row `i`.
//!
//! Matrices act on row vectors: row `i` is the image of basis vector `e_i`,
//! and `v * M` is the XOR of the rows selected by `v`. Under this convention
//! "first `A`, then `B`" is the product `A * B`.
//!
//! # Determinism
//!
//! [`enumerate_invertible`] yields matrices in lexicographic order of
//! `(row 0, row 1, ...)`, each row compared as an unsigned integer.

use std::fmt;
use std::ops::{Add, Mul};

use thiserror::Error;

/// Maximum number of coordinates in a packed vector or matrix row.
pub const MAX_BITS: usize = 64;

#[inline]
#[must_use]
pub fn low_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

#[inline]
#[must_use]
pub fn parity(x: u64) -> bool {
    x.count_ones() & 1 == 1
}

/// Iterates the indices of set bits, lowest first.
#[inline]
pub fn ones(mut x: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let i = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(i)
        }
    })
}

/// Kronecker product of packed vectors: bit `i * width + j` is `u_i v_j`.
#[inline]
#[must_use]
pub fn kron(u: u64, v: u64, width: usize) -> u64 {
    let mut out = 0;
    for i in ones(u) {
        out |= v << (i * width);
    }
    out
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
}

// ============================================================================
// Vectors
// ============================================================================

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf2Vec {
    len: usize,
    bits: u64,
}

impl Gf2Vec {
    #[must_use]
    pub fn zero(len: usize) -> Self {
        assert!(len <= MAX_BITS, "vector length {len} exceeds {MAX_BITS}");
        Self { len, bits: 0 }
    }

    /// Builds a vector from packed bits; bits at or above `len` are dropped.
    #[must_use]
    pub fn from_bits(len: usize, bits: u64) -> Self {
        assert!(len <= MAX_BITS, "vector length {len} exceeds {MAX_BITS}");
        Self {
            len,
            bits: bits & low_mask(len),
        }
    }

    #[must_use]
    pub fn unit(len: usize, i: usize) -> Self {
        assert!(i < len);
        Self::from_bits(len, 1 << i)
    }

    #[must_use]
    pub fn from_slice(coords: &[u8]) -> Self {
        let mut v = Self::zero(coords.len());
        for (i, &c) in coords.iter().enumerate() {
            v.set(i, c & 1 == 1);
        }
        v
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.len
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[must_use]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[must_use]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        self.bits >> i & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len);
        if value {
            self.bits |= 1 << i;
        } else {
            self.bits &= !(1 << i);
        }
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    #[must_use]
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    #[must_use]
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len);
        parity(self.bits & other.bits)
    }

    #[must_use]
    pub fn to_vec(&self) -> Vec<u8> {
        (0..self.len).map(|i| u8::from(self.get(i))).collect()
    }
}

impl Add for Gf2Vec {
    type Output = Gf2Vec;
    fn add(self, rhs: Gf2Vec) -> Gf2Vec {
        assert_eq!(self.len, rhs.len);
        Gf2Vec {
            len: self.len,
            bits: self.bits ^ rhs.bits,
        }
    }
}

impl fmt::Debug for Gf2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        write!(f, ")")
    }
}

// ============================================================================
// Matrices
// ============================================================================

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Mat {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl Gf2Mat {
    #[must_use]
    pub fn zero(rows: usize, cols: usize) -> Self {
        assert!(cols <= MAX_BITS, "matrix width {cols} exceeds {MAX_BITS}");
        Self {
            rows,
            cols,
            data: vec![0; rows],
        }
    }

    #[must_use]
    pub fn identity(n: usize) -> Self {
        Self::from_rows(n, (0..n).map(|i| 1u64 << i).collect())
    }

    /// Builds a matrix from packed rows; bits at or above `cols` are dropped.
    #[must_use]
    pub fn from_rows(cols: usize, rows: Vec<u64>) -> Self {
        assert!(cols <= MAX_BITS, "matrix width {cols} exceeds {MAX_BITS}");
        let mask = low_mask(cols);
        Self {
            rows: rows.len(),
            cols,
            data: rows.into_iter().map(|r| r & mask).collect(),
        }
    }

    /// Parses rows written as 0/1 strings, e.g. `["0101", "1111"]`.
    pub fn from_strs(rows: &[&str]) -> Result<Self, Gf2Error> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len());
        for r in rows {
            if r.len() != cols {
                return Err(Gf2Error::Shape(format!("ragged row {r:?}")));
            }
            let mut w = 0u64;
            for (j, c) in r.chars().enumerate() {
                match c {
                    '0' => {}
                    '1' => w |= 1 << j,
                    _ => return Err(Gf2Error::Shape(format!("bad entry {c:?}"))),
                }
            }
            data.push(w);
        }
        Ok(Self::from_rows(cols, data))
    }

    #[must_use]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[must_use]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[must_use]
    pub fn row(&self, i: usize) -> u64 {
        self.data[i]
    }

    #[must_use]
    pub fn row_words(&self) -> &[u64] {
        &self.data
    }

    #[must_use]
    pub fn col(&self, j: usize) -> u64 {
        let mut c = 0;
        for (i, r) in self.data.iter().enumerate() {
            c |= (r >> j & 1) << i;
        }
        c
    }

    #[must_use]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols);
        self.data[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols);
        if value {
            self.data[i] |= 1 << j;
        } else {
            self.data[i] &= !(1 << j);
        }
    }

    #[must_use]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row vector times matrix: the image of `v` under the map.
    #[must_use]
    pub fn image(&self, v: u64) -> u64 {
        let mut out = 0;
        for i in ones(v & low_mask(self.rows)) {
            out ^= self.data[i];
        }
        out
    }

    /// Matrix times column vector: bit `i` is `<row i, v>`.
    #[must_use]
    pub fn apply_col(&self, v: u64) -> u64 {
        let mut out = 0;
        for (i, r) in self.data.iter().enumerate() {
            out |= u64::from(parity(r & v)) << i;
        }
        out
    }

    #[must_use]
    pub fn transpose(&self) -> Self {
        Self::from_rows(self.rows, (0..self.cols).map(|j| self.col(j)).collect())
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, Gf2Error> {
        if self.cols != rhs.rows {
            return Err(Gf2Error::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self::from_rows(
            rhs.cols,
            self.data.iter().map(|&r| rhs.image(r)).collect(),
        ))
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        let mut rows = self.data.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let bit = 1u64 << col;
            let Some(p) = (rank..rows.len()).find(|&r| rows[r] & bit != 0) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = rows[rank];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && *row & bit != 0 {
                    *row ^= pivot;
                }
            }
            rank += 1;
        }
        rank
    }

    #[must_use]
    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    #[must_use]
    pub fn pow(&self, k: u32) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Smallest `k >= 1` with `M^k = I`, or `None` if `M` is singular.
    #[must_use]
    pub fn order(&self) -> Option<u32> {
        if !self.is_invertible() {
            return None;
        }
        let id = Self::identity(self.rows);
        let mut acc = self.clone();
        let mut k = 1;
        while acc != id {
            acc = &acc * self;
            k += 1;
        }
        Some(k)
    }

    /// Kronecker product; entry `((i1,i2),(j1,j2))` is `A[i1][j1] B[i2][j2]`.
    #[must_use]
    pub fn kron(&self, rhs: &Self) -> Self {
        let cols = self.cols * rhs.cols;
        let mut data = Vec::with_capacity(self.rows * rhs.rows);
        for &a in &self.data {
            for &b in &rhs.data {
                data.push(kron(a, b, rhs.cols));
            }
        }
        Self::from_rows(cols, data)
    }

    /// Block diagonal sum `A (+) B`.
    #[must_use]
    pub fn direct_sum(&self, rhs: &Self) -> Self {
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().map(|r| r << self.cols));
        Self::from_rows(self.cols + rhs.cols, data)
    }

    #[must_use]
    pub fn to_strings(&self) -> Vec<String> {
        self.data
            .iter()
            .map(|r| (0..self.cols).map(|j| if r >> j & 1 == 1 { '1' } else { '0' }).collect())
            .collect()
    }
}

impl Mul for &Gf2Mat {
    type Output = Gf2Mat;
    fn mul(self, rhs: &Gf2Mat) -> Gf2Mat {
        self.checked_mul(rhs).expect("matrix shapes do not compose")
    }
}

impl fmt::Debug for Gf2Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_strings().join(" "))
    }
}

// ============================================================================
// Linear systems
// ============================================================================

/// Solution set of `A x = b` with `x` a column vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    Inconsistent,
    Solutions {
        particular: Gf2Vec,
        /// One basis vector per free column, in increasing column order.
        nullspace: Vec<Gf2Vec>,
        free_columns: Vec<usize>,
    },
}

impl LinearSolution {
    #[must_use]
    pub fn nullity(&self) -> Option<usize> {
        match self {
            Self::Inconsistent => None,
            Self::Solutions { nullspace, .. } => Some(nullspace.len()),
        }
    }

    /// Number of solutions, `0` or `2^nullity`.
    #[must_use]
    pub fn count(&self) -> u128 {
        self.nullity().map_or(0, |k| 1u128 << k)
    }

    /// All solutions, intended for small nullity only.
    #[must_use]
    pub fn all(&self) -> Vec<Gf2Vec> {
        match self {
            Self::Inconsistent => Vec::new(),
            Self::Solutions {
                particular,
                nullspace,
                ..
            } => {
                assert!(nullspace.len() <= 24, "too many solutions to list");
                (0u64..1 << nullspace.len())
                    .map(|mask| {
                        ones(mask).fold(*particular, |acc, i| acc + nullspace[i])
                    })
                    .collect()
            }
        }
    }
}

/// Gauss-Jordan solve of `A x = b`. Free variables of the particular
/// solution are zero.
pub fn solve_linear(a: &Gf2Mat, b: &Gf2Vec) -> Result<LinearSolution, Gf2Error> {
    if a.rows() != b.len() {
        return Err(Gf2Error::Shape(format!(
            "{} equations but right-hand side of length {}",
            a.rows(),
            b.len()
        )));
    }
    let n = a.cols();
    // Augmented rows: bits 0..n are coefficients, the rhs is kept separately.
    let mut rows: Vec<(u64, bool)> = (0..a.rows()).map(|i| (a.row(i), b.get(i))).collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let bit = 1u64 << col;
        let Some(p) = (rank..rows.len()).find(|&r| rows[r].0 & bit != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row.0 & bit != 0 {
                row.0 ^= pivot.0;
                row.1 ^= pivot.1;
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if rows[rank..].iter().any(|&(w, r)| w == 0 && r) {
        return Ok(LinearSolution::Inconsistent);
    }
    let mut particular = Gf2Vec::zero(n);
    for (r, &col) in pivots.iter().enumerate() {
        particular.set(col, rows[r].1);
    }
    let pivot_mask = pivots.iter().fold(0u64, |m, &c| m | 1 << c);
    let free_columns: Vec<usize> = (0..n).filter(|c| pivot_mask >> c & 1 == 0).collect();
    let nullspace = free_columns
        .iter()
        .map(|&f| {
            let mut v = Gf2Vec::unit(n, f);
            for (r, &col) in pivots.iter().enumerate() {
                if rows[r].0 >> f & 1 == 1 {
                    v.set(col, true);
                }
            }
            v
        })
        .collect();
    Ok(LinearSolution::Solutions {
        particular,
        nullspace,
        free_columns,
    })
}

/// Inverse of a square matrix, `None` when singular.
#[must_use]
pub fn invert(m: &Gf2Mat) -> Option<Gf2Mat> {
    assert!(m.is_square(), "invert needs a square matrix");
    let n = m.rows();
    let mut left = m.row_words().to_vec();
    let mut right: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
    for col in 0..n {
        let bit = 1u64 << col;
        let p = (col..n).find(|&r| left[r] & bit != 0)?;
        left.swap(col, p);
        right.swap(col, p);
        for r in 0..n {
            if r != col && left[r] & bit != 0 {
                left[r] ^= left[col];
                right[r] ^= right[col];
            }
        }
    }
    Some(Gf2Mat::from_rows(n, right))
}

// ============================================================================
// GL_n enumeration
// ============================================================================

/// Invertible `n x n` matrices in lexicographic row order.
///
/// With `fix_unit`, row 0 is pinned to `e_0`, giving the maps that fix the
/// unit of an algebra in standard form.
#[must_use]
pub fn enumerate_invertible(n: usize, fix_unit: bool) -> InvertibleMatrices {
    assert!((1..=6).contains(&n), "enumerate_invertible supports 1 <= n <= 6");
    InvertibleMatrices::new(n, fix_unit)
}

/// Lazy stream behind [`enumerate_invertible`].
pub struct InvertibleMatrices {
    n: usize,
    fix_unit: bool,
    rows: Vec<u64>,
    /// `spans[k]` is the membership bitmap of the span of rows `0..k`.
    spans: Vec<u64>,
    started: bool,
    done: bool,
}

impl InvertibleMatrices {
    fn new(n: usize, fix_unit: bool) -> Self {
        Self {
            n,
            fix_unit,
            rows: Vec::with_capacity(n),
            spans: vec![1],
            started: false,
            done: false,
        }
    }

    fn extend_span(span: u64, row: u64) -> u64 {
        let mut out = span;
        for v in ones(span) {
            out |= 1 << (v as u64 ^ row);
        }
        out
    }

    /// Pushes the smallest admissible row `>= start` at the current depth.
    fn push_from(&mut self, start: u64) -> bool {
        let depth = self.rows.len();
        let limit = 1u64 << self.n;
        let span = self.spans[depth];
        let mut r = start;
        if depth == 0 && self.fix_unit {
            if r > 1 {
                return false;
            }
            r = 1;
        }
        while r < limit {
            if span >> r & 1 == 0 {
                self.rows.push(r);
                self.spans.truncate(depth + 1);
                self.spans.push(Self::extend_span(span, r));
                return true;
            }
            r += 1;
        }
        false
    }

    fn fill(&mut self) -> bool {
        while self.rows.len() < self.n {
            if !self.push_from(0) {
                return false;
            }
        }
        true
    }

    fn advance(&mut self) -> bool {
        loop {
            let Some(last) = self.rows.pop() else {
                return false;
            };
            if self.push_from(last + 1) && self.fill() {
                return true;
            }
        }
    }
}

impl Iterator for InvertibleMatrices {
    type Item = Gf2Mat;

    fn next(&mut self) -> Option<Gf2Mat> {
        if self.done {
            return None;
        }
        let ok = if self.started {
            self.advance()
        } else {
            self.started = true;
            self.fill()
        };
        if ok {
            Some(Gf2Mat::from_rows(self.n, self.rows.clone()))
        } else {
            self.done = true;
            None
        }
    }
}

/// `|GL_n(F2)| = prod_{k<n} (2^n - 2^k)`.
#[must_use]
pub fn gl_order(n: usize) -> u64 {
    (0..n).map(|k| (1u64 << n) - (1u64 << k)).product()
}
