//! Isomorphism classes of bialgebras, the type quiver, dual bialgebras and
//! self-duality pairings.
//!
//! Two coproducts on the same algebra give isomorphic bialgebras iff an
//! algebra automorphism carries one to the other, so classes are orbits of
//! `Aut(A)` on the raw solutions of [`crate::coproducts`].

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::coproducts::{solve_coproducts, RawSolutionSet};
use crate::enumerate::{
    automorphism_group, catalog_class, catalog_classes, classify_algebras, enumerate_algebras,
    identify_algebra, standardizing_matrix, unit_fixing_group,
};
use crate::gf2::{enumerate_invertible, invert, kron, parity, Gf2Mat};
use crate::structure::{
    dualize_algebra, dualize_coalgebra, opposite, AlgebraSC, Bialgebra, CoalgebraSC, Side,
};

#[derive(Clone, Debug)]
pub struct BialgebraClass {
    /// Position in [`Census::classes`].
    pub id: usize,
    pub algebra_label: String,
    pub coalgebra_type: String,
    /// Indices into the algebra's raw solution list.
    pub members: Vec<usize>,
    /// Smallest coproduct in the orbit, on the algebra's catalog basis.
    pub representative: CoalgebraSC,
    pub algebra: AlgebraSC,
    pub antipode: Option<Gf2Mat>,
    /// Class of the co-opposite bialgebra.
    pub cop_partner: usize,
}

impl BialgebraClass {
    #[must_use]
    pub fn hopf(&self) -> bool {
        self.antipode.is_some()
    }

    #[must_use]
    pub fn bialgebra(&self) -> Bialgebra {
        Bialgebra::new(self.algebra, self.representative)
    }
}

/// Orbits of the automorphism group of `raw.algebra` on its coproducts, in
/// order of their smallest member. Class ids start at `first_id`; partners
/// are local ids offset by the same amount.
#[must_use]
pub fn classify_bialgebras(raw: &RawSolutionSet, first_id: usize) -> Vec<BialgebraClass> {
    let a = &raw.algebra;
    let auts: Vec<(Gf2Mat, Gf2Mat)> = automorphism_group(a)
        .into_iter()
        .map(|p| {
            let q = invert(&p).expect("automorphism");
            (p, q)
        })
        .collect();
    let index: HashMap<CoalgebraSC, usize> = raw
        .solutions
        .iter()
        .enumerate()
        .map(|(i, s)| (s.coalg, i))
        .collect();
    let mut class_of = vec![usize::MAX; raw.solutions.len()];
    let mut classes: Vec<BialgebraClass> = Vec::new();
    for (i, s) in raw.solutions.iter().enumerate() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let local = classes.len();
        let mut members: Vec<usize> = auts
            .iter()
            .map(|(p, q)| {
                let image = s.coalg.transported(p, q);
                *index.get(&image).expect("automorphic image of a solution is a solution")
            })
            .collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            class_of[m] = local;
            assert_eq!(raw.solutions[m].hopf(), s.hopf(), "Hopf flag varies within an orbit");
            assert_eq!(raw.solutions[m].coalg_type, s.coalg_type);
        }
        classes.push(BialgebraClass {
            id: first_id + local,
            algebra_label: raw.algebra_label.clone(),
            coalgebra_type: s.coalg_type.clone(),
            members,
            representative: s.coalg,
            algebra: *a,
            antipode: s.antipode.clone(),
            cop_partner: usize::MAX,
        });
    }
    for c in &mut classes {
        let cop = c.representative.opposite();
        c.cop_partner = first_id + class_of[index[&cop]];
    }
    classes
}

/// Cross-check for small dimensions: an invertible map that is both an
/// algebra automorphism and carries one coproduct to the other.
#[must_use]
pub fn isomorphic_by_search(a: &AlgebraSC, c1: &CoalgebraSC, c2: &CoalgebraSC) -> bool {
    enumerate_invertible(a.dim(), false).any(|p| {
        let q = invert(&p).expect("invertible");
        c1.transported(&p, &q) == *c2 && a.transported(&p, &q) == *a
    })
}

// ============================================================================
// Census
// ============================================================================

/// Every bialgebra class of one dimension.
#[derive(Debug)]
pub struct Census {
    pub dim: usize,
    /// Number of algebra classes found by enumeration.
    pub algebra_count: usize,
    /// Raw solutions per catalog algebra, in catalog order.
    pub raw: Vec<RawSolutionSet>,
    pub classes: Vec<BialgebraClass>,
    lookup: HashMap<(String, CoalgebraSC), usize>,
}

impl Census {
    #[must_use]
    pub fn build(n: usize) -> Self {
        let algebra_count = classify_algebras(&enumerate_algebras(n)).classes.len();
        let raw: Vec<RawSolutionSet> = catalog_classes(n)
            .par_iter()
            .map(|c| solve_coproducts(&c.table_form))
            .collect();
        Self::from_raw(n, algebra_count, raw)
    }

    /// Census from precomputed raw solution sets in catalog order.
    #[must_use]
    pub fn from_raw(n: usize, algebra_count: usize, raw: Vec<RawSolutionSet>) -> Self {
        let mut classes = Vec::new();
        for r in &raw {
            let next = classify_bialgebras(r, classes.len());
            classes.extend(next);
        }
        let mut lookup = HashMap::new();
        for c in &classes {
            let r = raw.iter().find(|r| r.algebra_label == c.algebra_label).expect("raw set");
            for &m in &c.members {
                lookup.insert((c.algebra_label.clone(), r.solutions[m].coalg), c.id);
            }
        }
        Self {
            dim: n,
            algebra_count,
            raw,
            classes,
            lookup,
        }
    }

    /// Cached census for `n` in `1..=4`.
    #[must_use]
    pub fn get(n: usize) -> &'static Census {
        static CACHE: [OnceLock<Census>; 5] =
            [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
        CACHE[n].get_or_init(|| Census::build(n))
    }

    #[must_use]
    pub fn raw_for(&self, label: &str) -> Option<&RawSolutionSet> {
        self.raw.iter().find(|r| r.algebra_label == label)
    }

    pub fn classes_for<'a>(&'a self, label: &'a str) -> impl Iterator<Item = &'a BialgebraClass> + 'a {
        self.classes.iter().filter(move |c| c.algebra_label == label)
    }

    pub fn hopf_classes(&self) -> impl Iterator<Item = &BialgebraClass> {
        self.classes.iter().filter(|c| c.hopf())
    }

    /// `(algebras, bialgebra classes, Hopf classes)`.
    #[must_use]
    pub fn totals(&self) -> (usize, usize, usize) {
        (self.algebra_count, self.classes.len(), self.hopf_classes().count())
    }

    /// Class of an arbitrary bialgebra of this dimension.
    #[must_use]
    pub fn locate(&self, b: &Bialgebra) -> Option<usize> {
        let (b, label) = to_catalog_basis(b)?;
        self.lookup.get(&(label.to_string(), b.coalg)).copied()
    }
}

/// Transports `b` so that its algebra is exactly the catalog table.
#[must_use]
pub fn to_catalog_basis(b: &Bialgebra) -> Option<(Bialgebra, &'static str)> {
    let b = standardize_bialgebra(b);
    let label = identify_algebra(&b.alg);
    let target = catalog_class(b.dim(), label)?.table_form;
    unit_fixing_group(b.dim())
        .iter()
        .find(|(p, q)| b.alg.transported(p, q) == target)
        .map(|(p, q)| (b.transported(p, q), label))
}

/// `b` transported so that its unit is `x^0`.
#[must_use]
pub fn standardize_bialgebra(b: &Bialgebra) -> Bialgebra {
    if b.alg.is_standard() {
        return *b;
    }
    let p = standardizing_matrix(b.alg.unit_bits(), b.dim());
    let q = invert(&p).expect("invertible");
    b.transported(&p, &q)
}

/// `(algebras, bialgebras, Hopf algebras)` up to isomorphism.
#[must_use]
pub fn hopf_census(n: usize) -> (usize, usize, usize) {
    Census::get(n).totals()
}

// ============================================================================
// Quiver
// ============================================================================

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub source: String,
    pub target: String,
    pub multiplicity: usize,
    pub hopf_multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuiverGraph {
    pub dimension: usize,
    pub nodes: Vec<String>,
    /// Sorted by catalog position of source, then target.
    pub arrows: Vec<Arrow>,
}

impl QuiverGraph {
    #[must_use]
    pub fn arrow(&self, source: &str, target: &str) -> Option<&Arrow> {
        self.arrows.iter().find(|a| a.source == source && a.target == target)
    }

    /// Arrows carrying at least one Hopf class, as `(source, target)`.
    #[must_use]
    pub fn hopf_arrows(&self) -> Vec<(&str, &str)> {
        self.arrows
            .iter()
            .filter(|a| a.hopf_multiplicity > 0)
            .map(|a| (a.source.as_str(), a.target.as_str()))
            .collect()
    }

    #[must_use]
    pub fn is_dual_symmetric(&self) -> bool {
        self.arrows.iter().all(|a| {
            self.arrow(&a.target, &a.source)
                .is_some_and(|b| b.multiplicity == a.multiplicity && b.hopf_multiplicity == a.hopf_multiplicity)
        })
    }

    /// Graphviz rendering; Hopf arrows are bold.
    #[must_use]
    pub fn to_dot(&self) -> String {
        let mut s = format!("digraph quiver_n{} {{\n", self.dimension);
        for n in &self.nodes {
            let _ = writeln!(s, "  \"{n}\";");
        }
        for a in &self.arrows {
            let style = if a.hopf_multiplicity > 0 { ", style=bold" } else { "" };
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\" [label=\"{}\", hopf={}{}];",
                a.source,
                a.target,
                a.multiplicity,
                a.hopf_multiplicity > 0,
                style
            );
        }
        s.push_str("}\n");
        s
    }
}

#[must_use]
pub fn build_quiver(n: usize) -> QuiverGraph {
    quiver_from(n, &Census::get(n).classes)
}

#[must_use]
pub fn quiver_from(n: usize, classes: &[BialgebraClass]) -> QuiverGraph {
    let nodes: Vec<String> = catalog_classes(n).iter().map(|c| c.label.clone()).collect();
    let pos: HashMap<&str, usize> = nodes.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    let mut counts: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
    for c in classes {
        let e = counts
            .entry((pos[c.algebra_label.as_str()], pos[c.coalgebra_type.as_str()]))
            .or_default();
        e.0 += 1;
        e.1 += usize::from(c.hopf());
    }
    let arrows = counts
        .into_iter()
        .map(|((s, t), (m, h))| Arrow {
            source: nodes[s].clone(),
            target: nodes[t].clone(),
            multiplicity: m,
            hopf_multiplicity: h,
        })
        .collect();
    QuiverGraph {
        dimension: n,
        nodes,
        arrows,
    }
}

// ============================================================================
// Duals and pairings
// ============================================================================

/// The dual bialgebra on the dual basis, moved to standard form.
#[must_use]
pub fn dual_bialgebra(b: &Bialgebra) -> Bialgebra {
    let d = Bialgebra::new(dualize_coalgebra(&b.coalg), dualize_algebra(&b.alg));
    standardize_bialgebra(&d)
}

/// `P[mu][nu] = <x^mu, x^nu>` satisfies
/// `<ab, c> = <a (x) b, Delta c>`, `<a, bc> = <Delta a, b (x) c>` and
/// `<1, .> = eps = <., 1>`.
#[must_use]
pub fn is_bialgebra_pairing(b: &Bialgebra, p: &Gf2Mat) -> bool {
    let n = b.dim();
    let alg = &b.alg;
    let co = &b.coalg;
    let eps = co.eps_bits();
    if p.image(alg.unit_bits()) != eps || p.apply_col(alg.unit_bits()) != eps {
        return false;
    }
    let cols: Vec<u64> = (0..n).map(|j| p.col(j)).collect();
    for a in 0..n {
        for bb in 0..n {
            let left = p.image(alg.product(a, bb));
            let pair = kron(p.row(a), p.row(bb), n);
            let colpair = kron(cols[a], cols[bb], n);
            for c in 0..n {
                if (left >> c & 1 == 1) != parity(co.coproduct(c) & pair) {
                    return false;
                }
                // <x^c, x^a x^b> = <Delta x^c, x^a (x) x^b>
                if parity(p.row(c) & alg.product(a, bb)) != parity(co.coproduct(c) & colpair) {
                    return false;
                }
            }
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingMatrix {
    pub p: Gf2Mat,
}

/// Lexicographically first invertible `P` making `b` self-dual, if any.
#[must_use]
pub fn self_duality_pairing(b: &Bialgebra) -> Option<PairingMatrix> {
    enumerate_invertible(b.dim(), false)
        .find(|p| is_bialgebra_pairing(b, p))
        .map(|p| PairingMatrix { p })
}

/// Class ids of `H` and its dual, for every class.
#[must_use]
pub fn dual_class(census: &Census, id: usize) -> usize {
    let b = census.classes[id].bialgebra();
    census
        .locate(&dual_bialgebra(&b))
        .expect("dual of a bialgebra is a bialgebra of the same dimension")
}

/// Opposite-coproduct partner class located through the census.
#[must_use]
pub fn cop_class(census: &Census, id: usize) -> usize {
    let b = census.classes[id].bialgebra();
    census
        .locate(&opposite(&b, Side::Coproduct))
        .expect("co-opposite is a bialgebra")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n2_census() {
        assert_eq!(hopf_census(2), (3, 4, 3));
        let q = build_quiver(2);
        assert_eq!(q.arrows.iter().map(|a| a.multiplicity).sum::<usize>(), 4);
        assert!(q.is_dual_symmetric());
    }

    #[test]
    fn n3_census() {
        assert_eq!(hopf_census(3), (7, 24, 2));
    }

    #[test]
    fn dual_is_involutive_up_to_iso() {
        let c = Census::get(3);
        for k in &c.classes {
            let d = dual_class(c, k.id);
            assert_eq!(dual_class(c, d), k.id);
            assert_eq!(c.classes[d].algebra_label, k.coalgebra_type);
            assert_eq!(cop_class(c, k.id), k.cop_partner);
        }
    }
}
