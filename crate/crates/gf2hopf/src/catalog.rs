//! Named unital algebras of dimension 1 to 4 in their customary bases.
//!
//! Each entry lists the nonzero products of non-unit basis elements; `1` is
//! always `x^0`. Basis names are `1,x` / `1,x,y` / `1,x,y,z`.

use crate::structure::{AlgebraSC, BasisNames};

#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub label: &'static str,
    pub dim: usize,
    pub relations: &'static [&'static str],
    pub note: &'static str,
}

impl CatalogEntry {
    /// The algebra in the basis used by the relation table.
    #[must_use]
    pub fn table_form(&self) -> AlgebraSC {
        AlgebraSC::from_relations(&BasisNames::standard(self.dim), self.relations)
            .unwrap_or_else(|e| panic!("catalog entry {}: {e}", self.label))
    }
}

macro_rules! entry {
    ($label:literal, $dim:literal, [$($r:literal),*], $note:literal) => {
        CatalogEntry { label: $label, dim: $dim, relations: &[$($r),*], note: $note }
    };
}

const N1: &[CatalogEntry] = &[entry!("F2", 1, [], "the field")];

const N2: &[CatalogEntry] = &[
    entry!("A", 2, [], "Grassmann line F2[x]/(x^2)"),
    entry!("B", 2, ["xx=x"], "F2 + F2"),
    entry!("C", 2, ["xx=1+x"], "F4"),
];

const N3: &[CatalogEntry] = &[
    entry!("A", 3, [], "x^2=xy=y^2=0"),
    entry!("B", 3, ["xx=x", "yy=y"], "F2^3"),
    entry!("C", 3, ["xx=x"], "F2 + Grassmann line"),
    entry!("D", 3, ["xx=y", "yy=x", "xy=x+y", "yx=x+y"], "F2 + F4"),
    entry!("E", 3, ["xx=y"], "F2[x]/(x^3)"),
    entry!("F", 3, ["xx=y", "xy=1+y", "yx=1+y", "yy=1+x+y"], "F8"),
    entry!("G", 3, ["xx=x", "xy=y"], "upper triangular 2x2 matrices"),
];

const N4: &[CatalogEntry] = &[
    entry!("A", 4, [], "all products of generators zero"),
    entry!("B", 4, ["xx=z"], ""),
    entry!("C", 4, ["xx=x"], ""),
    entry!("D", 4, ["xx=x", "xy=z", "yx=z", "xz=z", "zx=z"], "F2[w]/(w^4+w^2)"),
    entry!("E", 4, ["xy=z", "yx=z"], "Grassmann plane"),
    entry!("F", 4, ["xx=z", "xy=z", "yx=z"], ""),
    entry!("G", 4, ["xx=y", "xy=z", "yx=z"], "F2[w]/(w^4), group algebra of Z4"),
    entry!("H", 4, ["xx=1+x", "xy=z", "yx=z", "xz=y+z", "zx=y+z"], "F4 + Grassmann line"),
    entry!("I", 4, ["xx=y", "xy=x+y", "yx=x+y", "yy=x"], "F2[w]/(w^4+w^3+w^2)"),
    entry!("J", 4, ["xx=x+z", "xy=x+z", "yx=x+z", "yy=x"], "F2[w]/(w^4+w^3)"),
    entry!("K", 4, ["xx=x", "yy=y"], ""),
    entry!("L", 4, ["xx=z", "xz=1+y", "zx=1+y", "yy=y", "zz=x"], "F2[w]/(w^4+w), group algebra of Z3 + F2"),
    entry!("M", 4, ["xx=1+x+y+z", "yy=y", "zz=x", "xz=1+x+y", "zx=1+x+y"], "F2[w]/(w^4+w^3+w)"),
    entry!(
        "N",
        4,
        ["xx=1+x", "yy=1+y", "xy=z", "yx=z", "xz=y+z", "zx=y+z", "yz=x+z", "zy=x+z", "zz=1+x+y+z"],
        "F4 (x) F4"
    ),
    entry!(
        "O",
        4,
        ["xx=1+z", "xy=z", "yx=z", "xz=1+y", "zx=1+y", "yy=x+y", "yz=1", "zy=1", "zz=x"],
        "F16"
    ),
    entry!("P", 4, ["xx=x", "yy=y", "xy=z", "yx=z", "xz=z", "zx=z", "yz=z", "zy=z", "zz=z"], "F2^4"),
    entry!("NA", 4, ["xy=z"], ""),
    entry!("NB", 4, ["xx=z", "xy=z", "yy=z"], ""),
    entry!("NC", 4, ["xx=x", "xy=y"], ""),
    entry!("ND", 4, ["xx=x", "yx=y"], ""),
    entry!("NE", 4, ["xx=x", "xy=y", "xz=z"], ""),
    entry!("NF", 4, ["xx=x", "yx=y", "xz=z"], ""),
    entry!("NG", 4, ["xx=x", "yy=y", "xz=z"], ""),
    entry!("NH", 4, ["xx=x", "yx=y", "xz=z", "yz=1+x", "zy=x"], "M2(F2)"),
    entry!("NI", 4, ["xy=x+z", "yx=z", "yy=1+y", "yz=x+z", "zy=x"], ""),
];

/// All named algebras of dimension `n`, in catalog order.
#[must_use]
pub fn entries(n: usize) -> &'static [CatalogEntry] {
    match n {
        1 => N1,
        2 => N2,
        3 => N3,
        4 => N4,
        _ => &[],
    }
}

pub fn entry(n: usize, label: &str) -> Option<&'static CatalogEntry> {
    entries(n).iter().find(|e| e.label == label)
}

/// Catalog algebra in its table basis; panics on unknown labels.
#[must_use]
pub fn algebra(n: usize, label: &str) -> AlgebraSC {
    entry(n, label)
        .unwrap_or_else(|| panic!("no algebra {label} in dimension {n}"))
        .table_form()
}

/// `F2[w]/(f)` in the basis `1, w, ..., w^(d-1)`, where `f` is monic of
/// degree `d` and `low` holds its lower coefficients (`bit i` = coefficient
/// of `w^i`).
#[must_use]
pub fn monogenic(d: usize, low: u64) -> AlgebraSC {
    // w^k reduced, for k < 2d - 1
    let mut powers = Vec::with_capacity(2 * d);
    let mut cur = 1u64;
    for _ in 0..2 * d - 1 {
        powers.push(cur);
        cur <<= 1;
        if cur >> d & 1 == 1 {
            cur ^= 1 << d;
            cur ^= low;
        }
    }
    let mut v = 0;
    for a in 0..d {
        for b in 0..d {
            v |= powers[a + b] << crate::structure::slot(d, a, b, 0);
        }
    }
    AlgebraSC::standard(d, v)
}

/// `F2[w]/(w^4 + a w^3 + b w^2 + c w + d)`, written `"abcd"` as in `"0100"`.
#[must_use]
pub fn quartic(code: &str) -> AlgebraSC {
    let bits: Vec<u64> = code.bytes().map(|b| u64::from(b - b'0')).collect();
    assert_eq!(bits.len(), 4, "quartic code has four digits");
    let low = bits[3] | bits[2] << 1 | bits[1] << 2 | bits[0] << 3;
    monogenic(4, low)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::check_algebra;

    #[test]
    fn catalog_sizes() {
        assert_eq!(entries(1).len(), 1);
        assert_eq!(entries(2).len(), 3);
        assert_eq!(entries(3).len(), 7);
        assert_eq!(entries(4).len(), 25);
    }

    #[test]
    fn catalog_tables_are_algebras() {
        for n in 1..=4 {
            for e in entries(n) {
                assert_eq!(check_algebra(&e.table_form()), Ok(()), "{}", e.label);
            }
        }
    }

    #[test]
    fn noncommutative_count() {
        let count = |n| entries(n).iter().filter(|e| !e.table_form().is_commutative()).count();
        assert_eq!(count(3), 1);
        assert_eq!(count(4), 9);
    }

    #[test]
    fn monogenic_grassmann() {
        let a = monogenic(2, 0);
        assert_eq!(a, algebra(2, "A"));
    }
}
