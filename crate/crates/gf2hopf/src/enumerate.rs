//! Exhaustive enumeration of standard-form algebras, their isomorphism
//! classes, and identification against the named catalog.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::catalog;
use crate::gf2::{enumerate_invertible, invert, low_mask, ones, Gf2Mat};
use crate::structure::{slot, AlgebraSC, BasisNames};

#[derive(Clone, Debug)]
pub struct AlgebraClass {
    pub label: String,
    /// Smallest packed tensor in the orbit.
    pub representative: AlgebraSC,
    /// The catalog's own basis.
    pub table_form: AlgebraSC,
    pub relations_doc: String,
    /// Number of standard-form tensors in the orbit.
    pub orbit_size: usize,
}

impl AlgebraClass {
    #[must_use]
    pub fn is_commutative(&self) -> bool {
        self.representative.is_commutative()
    }
}

/// Result of [`classify_algebras`].
#[derive(Clone, Debug)]
pub struct Classification {
    pub classes: Vec<AlgebraClass>,
    /// Class index for each input tensor, in input order.
    pub membership: Vec<usize>,
}

// ============================================================================
// Enumeration
// ============================================================================

struct Search {
    n: usize,
    /// Product words `(a, b)` with `a, b >= 1` in lexicographic order.
    words: Vec<(usize, usize)>,
}

impl Search {
    fn new(n: usize) -> Self {
        let words = (1..n).flat_map(|a| (1..n).map(move |b| (a, b))).collect();
        Self { n, words }
    }

    fn word_index(&self, a: usize, b: usize) -> usize {
        (a - 1) * (self.n - 1) + (b - 1)
    }

    /// `x^a x^b` if already known.
    fn known(&self, v: u64, depth: usize, a: usize, b: usize) -> Option<u64> {
        if a == 0 {
            return Some(1 << b);
        }
        if b == 0 {
            return Some(1 << a);
        }
        (self.word_index(a, b) < depth).then(|| v >> slot(self.n, a, b, 0) & low_mask(self.n))
    }

    fn times(&self, v: u64, depth: usize, x: u64, c: usize, left: bool) -> Option<u64> {
        let mut out = 0;
        for r in ones(x) {
            out ^= if left {
                self.known(v, depth, r, c)?
            } else {
                self.known(v, depth, c, r)?
            };
        }
        Some(out)
    }

    /// Every associativity equation decidable with the first `depth` words
    /// assigned holds.
    fn consistent(&self, v: u64, depth: usize) -> bool {
        let n = self.n;
        for a in 1..n {
            for b in 1..n {
                for c in 1..n {
                    let Some(ab) = self.known(v, depth, a, b) else { continue };
                    let Some(bc) = self.known(v, depth, b, c) else { continue };
                    let Some(l) = self.times(v, depth, ab, c, true) else { continue };
                    let Some(r) = self.times(v, depth, bc, a, false) else { continue };
                    if l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn unit_rows(&self) -> u64 {
        let n = self.n;
        let mut v = 0;
        for a in 0..n {
            v |= 1 << slot(n, a, 0, a) | 1 << slot(n, 0, a, a);
        }
        v
    }

    fn extend(&self, v: u64, depth: usize, out: &mut Vec<u64>) {
        if depth == self.words.len() {
            out.push(v);
            return;
        }
        let (a, b) = self.words[depth];
        for w in 0..1u64 << self.n {
            let next = v | w << slot(self.n, a, b, 0);
            if self.consistent(next, depth + 1) {
                self.extend(next, depth + 1, out);
            }
        }
    }
}

/// All associative tensors with unit `x^0`, sorted by packed value.
#[must_use]
pub fn enumerate_algebras(n: usize) -> Vec<AlgebraSC> {
    assert!((1..=4).contains(&n));
    let s = Search::new(n);
    let base = s.unit_rows();
    let mut tensors: Vec<u64> = if s.words.is_empty() {
        vec![base]
    } else {
        let (a, b) = s.words[0];
        (0..1u64 << n)
            .into_par_iter()
            .flat_map_iter(|w| {
                let v = base | w << slot(n, a, b, 0);
                let mut out = Vec::new();
                if s.consistent(v, 1) {
                    s.extend(v, 1, &mut out);
                }
                out
            })
            .collect()
    };
    tensors.sort_unstable();
    tensors.into_iter().map(|v| AlgebraSC::standard(n, v)).collect()
}

// ============================================================================
// Orbits and canonical forms
// ============================================================================

/// Unit-fixing invertible matrices with their inverses, in stream order.
#[must_use]
pub fn unit_fixing_group(n: usize) -> &'static [(Gf2Mat, Gf2Mat)] {
    static CACHE: [OnceLock<Vec<(Gf2Mat, Gf2Mat)>>; 5] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    CACHE[n].get_or_init(|| {
        enumerate_invertible(n, true)
            .map(|p| {
                let q = invert(&p).expect("stream yields invertible matrices");
                (p, q)
            })
            .collect()
    })
}

/// Every standard-form tensor isomorphic to `a` (standard form), sorted.
#[must_use]
pub fn orbit(a: &AlgebraSC) -> Vec<u64> {
    let mut out: Vec<u64> = unit_fixing_group(a.dim())
        .iter()
        .map(|(p, q)| a.transported(p, q).tensor())
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Basis change moving the unit of `a` to `x^0`: the matrix `Q` has `eta`
/// as row 0, completed by the lexicographically smallest rows keeping it
/// invertible; returns `P = Q^-1`.
#[must_use]
pub fn standardizing_matrix(eta: u64, n: usize) -> Gf2Mat {
    assert!(eta != 0 && eta < 1 << n);
    let mut rows = vec![eta];
    let mut span: Vec<u64> = vec![0, eta];
    for cand in 1..1u64 << n {
        if rows.len() == n {
            break;
        }
        if !span.contains(&cand) {
            rows.push(cand);
            let extra: Vec<u64> = span.iter().map(|s| s ^ cand).collect();
            span.extend(extra);
        }
    }
    let q = Gf2Mat::from_rows(n, rows);
    invert(&q).expect("completion is a basis")
}

/// `a` transported to an algebra with unit `x^0`.
#[must_use]
pub fn standardize(a: &AlgebraSC) -> AlgebraSC {
    if a.is_standard() {
        return *a;
    }
    let p = standardizing_matrix(a.unit_bits(), a.dim());
    let q = invert(&p).expect("invertible");
    a.transported(&p, &q)
}

/// Smallest packed tensor isomorphic to `a`.
#[must_use]
pub fn canonical_form(a: &AlgebraSC) -> AlgebraSC {
    let s = standardize(a);
    AlgebraSC::standard(s.dim(), orbit(&s)[0])
}

struct LabelIndex {
    by_tensor: HashMap<u64, usize>,
    classes: Vec<AlgebraClass>,
}

fn label_index(n: usize) -> &'static LabelIndex {
    static CACHE: [OnceLock<LabelIndex>; 5] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    CACHE[n].get_or_init(|| {
        let names = BasisNames::standard(n);
        let mut by_tensor = HashMap::new();
        let mut classes = Vec::new();
        for (i, e) in catalog::entries(n).iter().enumerate() {
            let table = e.table_form();
            let orb = orbit(&table);
            for &t in &orb {
                let prev = by_tensor.insert(t, i);
                assert!(prev.is_none(), "catalog entries {} and {} coincide", e.label, i);
            }
            classes.push(AlgebraClass {
                label: e.label.to_string(),
                representative: AlgebraSC::standard(n, orb[0]),
                table_form: table,
                relations_doc: table.relations_doc(&names),
                orbit_size: orb.len(),
            });
        }
        LabelIndex { by_tensor, classes }
    })
}

/// The catalog classes of dimension `n` in catalog order.
#[must_use]
pub fn catalog_classes(n: usize) -> &'static [AlgebraClass] {
    &label_index(n).classes
}

/// Looks up a catalog class by label.
#[must_use]
pub fn catalog_class(n: usize, label: &str) -> Option<&'static AlgebraClass> {
    catalog_classes(n).iter().find(|c| c.label == label)
}

/// Catalog label of any algebra of dimension at most 4, standard or not.
/// Panics if `a` is not associative and unital.
#[must_use]
pub fn identify_algebra(a: &AlgebraSC) -> &'static str {
    let idx = label_index(a.dim());
    let s = standardize(a);
    match idx.by_tensor.get(&s.tensor()) {
        Some(&i) => &idx.classes[i].label,
        None => panic!("no catalog algebra matches {a:?}"),
    }
}

/// Partitions `list` into isomorphism classes, ordered by catalog position.
/// Tensors outside the catalog get labels `?0`, `?1`, ... in order of
/// their representatives.
#[must_use]
pub fn classify_algebras(list: &[AlgebraSC]) -> Classification {
    let mut reps: BTreeMap<u64, (String, AlgebraSC, usize)> = BTreeMap::new();
    let mut rep_of = Vec::with_capacity(list.len());
    let mut seen: HashMap<u64, u64> = HashMap::new();
    for a in list {
        let s = standardize(a);
        let rep = if let Some(&r) = seen.get(&s.tensor()) {
            r
        } else {
            let orb = orbit(&s);
            let r = orb[0];
            for &t in &orb {
                seen.insert(t, r);
            }
            let (label, table) = match label_index(a.dim()).by_tensor.get(&r) {
                Some(&i) => {
                    let c = &label_index(a.dim()).classes[i];
                    (c.label.clone(), c.table_form)
                }
                None => (String::new(), AlgebraSC::standard(a.dim(), r)),
            };
            reps.insert(r, (label, table, orb.len()));
            r
        };
        rep_of.push(rep);
    }
    let order: HashMap<&str, usize> = catalog::entries(list.first().map_or(1, AlgebraSC::dim))
        .iter()
        .enumerate()
        .map(|(i, e)| (e.label, i))
        .collect();
    let mut keyed: Vec<(usize, u64)> = reps
        .iter()
        .map(|(&r, (label, _, _))| (order.get(label.as_str()).copied().unwrap_or(usize::MAX), r))
        .collect();
    keyed.sort_unstable();
    let names = BasisNames::standard(list.first().map_or(1, AlgebraSC::dim));
    let mut unknown = 0;
    let mut index_of = HashMap::new();
    let classes = keyed
        .iter()
        .enumerate()
        .map(|(i, &(_, r))| {
            index_of.insert(r, i);
            let (label, table, size) = &reps[&r];
            let label = if label.is_empty() {
                unknown += 1;
                format!("?{}", unknown - 1)
            } else {
                label.clone()
            };
            AlgebraClass {
                label,
                representative: AlgebraSC::standard(table.dim(), r),
                table_form: *table,
                relations_doc: table.relations_doc(&names),
                orbit_size: *size,
            }
        })
        .collect();
    Classification {
        classes,
        membership: rep_of.iter().map(|r| index_of[r]).collect(),
    }
}

/// Unit-fixing matrices `P` with `apply_basis_change(a, P) = a`, in stream
/// order. Panics if the result is not closed under products and inverses.
#[must_use]
pub fn automorphism_group(a: &AlgebraSC) -> Vec<Gf2Mat> {
    assert!(a.is_standard(), "automorphisms are computed in standard form");
    let auts: Vec<Gf2Mat> = unit_fixing_group(a.dim())
        .iter()
        .filter(|(p, q)| a.transported(p, q) == *a)
        .map(|(p, _)| p.clone())
        .collect();
    for g in &auts {
        assert!(auts.contains(&invert(g).expect("invertible")));
        for h in &auts {
            assert!(auts.contains(&(g * h)), "automorphisms not closed");
        }
    }
    auts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{algebra, quartic};
    use crate::structure::check_algebra;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_algebras(1).len(), 1);
        let two = enumerate_algebras(2);
        // x^2 = a + bx: all four tensors are associative.
        assert_eq!(two.len(), 4);
        assert!(two.iter().all(|a| check_algebra(a).is_ok()));
        assert_eq!(classify_algebras(&two).classes.len(), 3);
    }

    #[test]
    fn class_labels_n3() {
        let all = enumerate_algebras(3);
        let c = classify_algebras(&all);
        let labels: Vec<&str> = c.classes.iter().map(|k| k.label.as_str()).collect();
        assert_eq!(labels, ["A", "B", "C", "D", "E", "F", "G"]);
        let sizes: usize = c.classes.iter().map(|k| k.orbit_size).sum();
        assert_eq!(sizes, all.len());
    }

    #[test]
    fn n4_census() {
        let all = enumerate_algebras(4);
        assert_eq!(all.len(), 8184);
        let c = classify_algebras(&all);
        assert_eq!(c.classes.len(), 25);
        assert!(c.classes.iter().all(|k| !k.label.starts_with('?')));
        assert_eq!(c.classes.iter().filter(|k| !k.is_commutative()).count(), 9);
        assert_eq!(catalog_classes(4).iter().map(|k| k.orbit_size).sum::<usize>(), 8184);
    }

    #[test]
    fn standardize_moves_unit() {
        let b = algebra(2, "B");
        let p = Gf2Mat::from_strs(&["11", "01"]).unwrap();
        let moved = crate::structure::BasisChange::apply_basis_change(&b, &p).unwrap();
        assert!(!moved.is_standard());
        assert_eq!(identify_algebra(&moved), "B");
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphism_group(&algebra(3, "B")).len(), 6);
        assert_eq!(automorphism_group(&algebra(4, "G")).len(), 4);
        assert_eq!(automorphism_group(&algebra(4, "NF")).len(), 8);
    }

    #[test]
    fn quartic_presentations() {
        let label = |c: &str| identify_algebra(&quartic(c));
        assert_eq!(label("0100"), "D");
        for c in ["1010", "1101", "0110", "0111"] {
            assert_eq!(label(c), "M");
        }
        for c in ["0011", "1001", "1111"] {
            assert_eq!(label(c), "O");
        }
    }
}
