//! Matrix representations of small algebras over F2, their equivalence
//! classes, and the tensor and dual constructions coming from a Hopf
//! structure.
//!
//! Matrices act on column vectors: `rho(a) rho(b) = rho(ab)` with the usual
//! matrix product.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::gf2::{enumerate_invertible, invert, ones, Gf2Mat};
use crate::structure::{AlgebraSC, HopfAlgebra};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Representation {
    pub dim_k: usize,
    /// `images[mu]` is the matrix of `x^mu`.
    pub images: Vec<Gf2Mat>,
}

impl Representation {
    #[must_use]
    pub fn new(images: Vec<Gf2Mat>) -> Self {
        let dim_k = images.first().map_or(0, Gf2Mat::rows);
        Self { dim_k, images }
    }

    /// One-dimensional representation from the values on the basis.
    #[must_use]
    pub fn character(values: &[u8]) -> Self {
        Self::new(values.iter().map(|&v| Gf2Mat::from_rows(1, vec![u64::from(v)])).collect())
    }

    /// Matrix of an arbitrary packed element.
    #[must_use]
    pub fn of(&self, v: u64) -> Gf2Mat {
        ones(v).fold(Gf2Mat::zero(self.dim_k, self.dim_k), |acc, i| add(&acc, &self.images[i]))
    }

    /// `rho(x^mu) rho(x^nu) = rho(x^mu x^nu)` and `rho(1) = I`.
    #[must_use]
    pub fn is_valid(&self, alg: &AlgebraSC) -> bool {
        let n = alg.dim();
        self.images.len() == n
            && self.of(alg.unit_bits()) == Gf2Mat::identity(self.dim_k)
            && (0..n).all(|a| (0..n).all(|b| &self.images[a] * &self.images[b] == self.of(alg.product(a, b))))
    }

    #[must_use]
    pub fn conjugated(&self, p: &Gf2Mat, p_inv: &Gf2Mat) -> Self {
        Self::new(self.images.iter().map(|m| &(p * m) * p_inv).collect())
    }

    #[must_use]
    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::new(self.images.iter().zip(&other.images).map(|(a, b)| a.direct_sum(b)).collect())
    }

    fn key(&self) -> Vec<u64> {
        self.images.iter().flat_map(|m| m.row_words().iter().copied()).collect()
    }

    /// Matrices as `"row,row"` strings, for reports.
    #[must_use]
    pub fn to_strings(&self) -> Vec<String> {
        self.images.iter().map(|m| m.to_strings().join(",")).collect()
    }
}

fn add(a: &Gf2Mat, b: &Gf2Mat) -> Gf2Mat {
    Gf2Mat::from_rows(a.cols(), (0..a.rows()).map(|i| a.row(i) ^ b.row(i)).collect())
}

fn all_matrices(k: usize) -> Vec<Gf2Mat> {
    (0..1u64 << (k * k))
        .map(|bits| Gf2Mat::from_rows(k, (0..k).map(|i| bits >> (i * k) & ((1 << k) - 1)).collect()))
        .collect()
}

struct Search<'a> {
    alg: &'a AlgebraSC,
    k: usize,
    matrices: Vec<Gf2Mat>,
    /// Products checkable once `x^0..=x^j` are assigned, indexed by `j`.
    checks: Vec<Vec<(usize, usize)>>,
}

impl Search<'_> {
    fn consistent(&self, images: &[Gf2Mat]) -> bool {
        let j = images.len() - 1;
        self.checks[j].iter().all(|&(a, b)| {
            let target = ones(self.alg.product(a, b)).fold(Gf2Mat::zero(self.k, self.k), |acc, i| add(&acc, &images[i]));
            &images[a] * &images[b] == target
        })
    }

    fn extend(&self, images: &mut Vec<Gf2Mat>, out: &mut Vec<Representation>) {
        if images.len() == self.alg.dim() {
            out.push(Representation::new(images.clone()));
            return;
        }
        for m in &self.matrices {
            images.push(m.clone());
            if self.consistent(images) {
                self.extend(images, out);
            }
            images.pop();
        }
    }
}

/// All unital representations of `a` on `F2^k`, ordered by the images of
/// `x^1, x^2, ...`. Requires the unit to be `x^0`.
#[must_use]
pub fn enumerate_reps(a: &AlgebraSC, k: usize) -> Vec<Representation> {
    assert_eq!(a.unit_bits(), 1, "unit must be the first basis vector");
    assert!((1..=3).contains(&k), "matrix size 1..=3");
    let n = a.dim();
    let mut checks = vec![Vec::new(); n];
    for x in 1..n {
        for y in 1..n {
            let p = a.product(x, y);
            let high = if p == 0 { 0 } else { 63 - p.leading_zeros() as usize };
            let top = x.max(y).max(high);
            checks[top].push((x, y));
        }
    }
    let search = Search {
        alg: a,
        k,
        matrices: all_matrices(k),
        checks,
    };
    if n == 1 {
        return vec![Representation::new(vec![Gf2Mat::identity(k)])];
    }
    search
        .matrices
        .par_iter()
        .flat_map_iter(|m| {
            let mut images = vec![Gf2Mat::identity(k), m.clone()];
            let mut out = Vec::new();
            if search.consistent(&images) {
                search.extend(&mut images, &mut out);
            }
            out
        })
        .collect()
}

/// Canonical form: least conjugate in key order.
#[must_use]
pub fn canonical_rep(r: &Representation) -> Representation {
    enumerate_invertible(r.dim_k, false)
        .map(|p| {
            let q = invert(&p).expect("invertible");
            r.conjugated(&p, &q)
        })
        .min_by(|a, b| a.key().cmp(&b.key()))
        .expect("GL_k is nonempty")
}

#[derive(Clone, Debug)]
pub struct RepClass {
    pub representative: Representation,
    pub size: usize,
}

/// Orbits of `list` under simultaneous conjugation, ordered by canonical form.
#[must_use]
pub fn rep_equivalence_classes(list: &[Representation]) -> Vec<RepClass> {
    let canon: Vec<Representation> = list.par_iter().map(canonical_rep).collect();
    let mut orbits: BTreeMap<Vec<u64>, RepClass> = BTreeMap::new();
    for c in canon {
        orbits
            .entry(c.key())
            .or_insert_with(|| RepClass {
                representative: c.clone(),
                size: 0,
            })
            .size += 1;
    }
    orbits.into_values().collect()
}

/// A conjugation `P` with `P r1 P^-1 = r2`, if one exists.
#[must_use]
pub fn equivalence(r1: &Representation, r2: &Representation) -> Option<Gf2Mat> {
    if r1.dim_k != r2.dim_k || r1.images.len() != r2.images.len() {
        return None;
    }
    enumerate_invertible(r1.dim_k, false).find(|p| {
        // P r1 = r2 P avoids the inverse
        r1.images.iter().zip(&r2.images).all(|(a, b)| p * a == b * p)
    })
}

/// `x^mu` acts by `sum C^mu_{nu rho} r1(x^nu) (x) r2(x^rho)`.
#[must_use]
pub fn tensor_rep(h: &HopfAlgebra, r1: &Representation, r2: &Representation) -> Representation {
    let n = h.dim();
    let k = r1.dim_k * r2.dim_k;
    let images = (0..n)
        .map(|mu| {
            ones(h.coalg().coproduct(mu)).fold(Gf2Mat::zero(k, k), |acc, t| {
                add(&acc, &r1.images[t / n].kron(&r2.images[t % n]))
            })
        })
        .collect();
    Representation::new(images)
}

/// `x^mu` acts by `r(S x^mu)` transposed.
#[must_use]
pub fn dual_rep(h: &HopfAlgebra, r: &Representation) -> Representation {
    Representation::new((0..h.dim()).map(|mu| r.of(h.s.row(mu)).transpose()).collect())
}

/// Left regular representation: column `nu` of `L(x^mu)` is `x^mu x^nu`.
#[must_use]
pub fn regular_rep(a: &AlgebraSC) -> Representation {
    Representation::new((0..a.dim()).map(|mu| a.left_regular(mu)).collect())
}

/// `v` spans a copy of the character `chi` inside `r`.
#[must_use]
pub fn spans_subrep(r: &Representation, v: u64, chi: &Representation) -> bool {
    v != 0
        && r.images
            .iter()
            .zip(&chi.images)
            .all(|(m, c)| m.apply_col(v) == if c.row(0) & 1 == 1 { v } else { 0 })
}

/// Multisets of `atoms` (as index lists) whose direct sum is equivalent to
/// `r`; the first one found in lexicographic order.
#[must_use]
pub fn decompose(r: &Representation, atoms: &[Representation]) -> Option<Vec<usize>> {
    fn go(
        r: &Representation,
        atoms: &[Representation],
        start: usize,
        left: usize,
        picked: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        if left == 0 {
            let sum = picked[1..]
                .iter()
                .fold(atoms[picked[0]].clone(), |acc, &i| acc.direct_sum(&atoms[i]));
            return equivalence(&sum, r).map(|_| picked.clone());
        }
        for i in start..atoms.len() {
            if atoms[i].dim_k <= left {
                picked.push(i);
                let found = go(r, atoms, i, left - atoms[i].dim_k, picked);
                picked.pop();
                if found.is_some() {
                    return found;
                }
            }
        }
        None
    }
    go(r, atoms, 0, r.dim_k, &mut Vec::new())
}

#[derive(Clone, Debug, Serialize)]
pub struct TensorTable {
    pub labels: Vec<String>,
    /// Entry `[i][j]` lists the atom labels of `atom_i (x) atom_j`.
    pub entries: Vec<Vec<Option<Vec<String>>>>,
}

#[must_use]
pub fn tensor_table(h: &HopfAlgebra, atoms: &[Representation], labels: &[&str]) -> TensorTable {
    let entries = atoms
        .iter()
        .map(|a| {
            atoms
                .iter()
                .map(|b| {
                    decompose(&tensor_rep(h, a, b), atoms)
                        .map(|d| d.into_iter().map(|i| labels[i].to_string()).collect())
                })
                .collect()
        })
        .collect();
    TensorTable {
        labels: labels.iter().map(|s| (*s).to_string()).collect(),
        entries,
    }
}

/// The four small representations of the self-dual noncommutative
/// dimension-4 Hopf algebra in the basis `1, s, x, w`.
#[must_use]
pub fn dsl2_atoms() -> Vec<Representation> {
    let m = |rows: &[&str]| Gf2Mat::from_strs(rows).expect("valid matrix");
    let id = m(&["10", "01"]);
    let flip = m(&["01", "10"]);
    vec![
        Representation::character(&[1, 1, 0, 0]),
        Representation::character(&[1, 1, 1, 1]),
        Representation::new(vec![id.clone(), flip.clone(), m(&["11", "00"]), m(&["00", "11"])]),
        Representation::new(vec![id, flip, m(&["10", "10"]), m(&["10", "10"])]),
    ]
}

pub const DSL2_ATOM_LABELS: [&str; 4] = ["1", "1b", "2", "2b"];
