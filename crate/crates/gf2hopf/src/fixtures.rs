//! Hand-entered reference structures: the dimension-3 coproduct lists, the
//! named dimension-4 Hopf and bialgebra tables, and the dimension-4 Fourier
//! table.
//!
//! Rows are `label | key=value | ...` with basis names `1,x,y(,z)`.

use std::collections::BTreeMap;

use crate::catalog;
use crate::gf2::Gf2Mat;
use crate::structure::{check_coalgebra, matrix_from_images, AlgebraSC, Axiom, Violation, BasisNames, Bialgebra, CoalgebraSC, StructureError};

pub const N3_COPRODUCTS: &str = include_str!("../fixtures/n3_coproducts.txt");
pub const N4_NAMED: &str = include_str!("../fixtures/n4_named.txt");
pub const N4_FOURIER: &str = include_str!("../fixtures/n4_fourier.txt");

#[derive(Clone, Debug)]
pub struct FixtureRow {
    pub dim: usize,
    pub label: String,
    /// Algebra label: the part of `label` before the dot.
    pub algebra: String,
    /// Bare fields without `=`, such as a type pair `D,E`.
    pub tags: Vec<String>,
    pub fields: BTreeMap<String, String>,
}

impl FixtureRow {
    fn parse(dim: usize, line: &str) -> Result<Self, StructureError> {
        let mut parts = line.split('|').map(str::trim);
        let label = parts.next().unwrap_or_default().to_string();
        let algebra = label
            .split_once('.')
            .map(|(a, _)| a.to_string())
            .ok_or_else(|| StructureError::Parse(line.to_string()))?;
        let mut fields = BTreeMap::new();
        let mut tags = Vec::new();
        for p in parts {
            match p.split_once('=') {
                Some((k, v)) => {
                    fields.insert(k.trim().to_string(), v.trim().to_string());
                }
                None => tags.push(p.to_string()),
            }
        }
        Ok(Self {
            dim,
            label,
            algebra,
            tags,
            fields,
        })
    }

    fn field(&self, key: &str) -> Result<&str, StructureError> {
        self.fields
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| StructureError::Parse(format!("{}: missing {key}", self.label)))
    }

    #[must_use]
    pub fn names(&self) -> BasisNames {
        BasisNames::standard(self.dim)
    }

    #[must_use]
    pub fn algebra_sc(&self) -> AlgebraSC {
        catalog::algebra(self.dim, &self.algebra)
    }

    /// Counit on the non-unit basis vectors; `eps(1) = 1`. Rows without an
    /// `e` field take the counit determined by `Delta` and counity.
    pub fn coalgebra(&self) -> Result<CoalgebraSC, StructureError> {
        let names = self.names();
        let deltas: Vec<&str> = (1..self.dim)
            .map(|i| self.field(&format!("d{}", names.name(i))))
            .collect::<Result<_, _>>()?;
        let eps: Vec<u8> = match self.fields.get("e") {
            Some(e) => e.chars().filter(|c| *c != ',').map(|c| u8::from(c == '1')).collect(),
            None => {
                // the unique counit compatible with Delta
                let fits = |e: &[u8]| {
                    CoalgebraSC::from_terms(&names, e, &deltas).is_ok_and(|c| {
                        !matches!(
                            check_coalgebra(&c),
                            Err(Violation { axiom: Axiom::CounitLeft | Axiom::CounitRight, .. })
                        )
                    })
                };
                let candidates: Vec<Vec<u8>> = (0..1u32 << (self.dim - 1))
                    .map(|m| (0..self.dim - 1).map(|i| (m >> i & 1) as u8).collect())
                    .filter(|e: &Vec<u8>| fits(e))
                    .collect();
                match candidates.as_slice() {
                    [e] => e.clone(),
                    _ => return Err(StructureError::Parse(format!("{}: no unique counit", self.label))),
                }
            }
        };
        CoalgebraSC::from_terms(&names, &eps, &deltas)
    }

    pub fn bialgebra(&self) -> Result<Bialgebra, StructureError> {
        Ok(Bialgebra::new(self.algebra_sc(), self.coalgebra()?))
    }

    /// Antipode images of the non-unit basis vectors, if listed.
    pub fn antipode(&self) -> Result<Option<Gf2Mat>, StructureError> {
        let Some(s) = self.fields.get("S") else {
            return Ok(None);
        };
        let mut images = vec!["1"];
        images.extend(s.split(';'));
        matrix_from_images(&self.names(), &images).map(Some)
    }

    /// Algebra label of the dual coalgebra (`dual=` or `type=`).
    #[must_use]
    pub fn dual_label(&self) -> Option<&str> {
        self.fields
            .get("dual")
            .or_else(|| self.fields.get("type"))
            .map(String::as_str)
    }

    /// `(algebra, coalgebra type)` from a bare `A,B` tag.
    #[must_use]
    pub fn type_pair(&self) -> Option<(String, String)> {
        self.tags.iter().find_map(|t| {
            t.split_once(',')
                .map(|(a, b)| (a.trim().to_string(), b.trim().to_string()))
        })
    }

    pub fn matrix(&self, key: &str) -> Result<Gf2Mat, StructureError> {
        let rows: Vec<&str> = self.field(key)?.split(',').collect();
        Gf2Mat::from_strs(&rows).map_err(|e| StructureError::Parse(e.to_string()))
    }

    pub fn vector01(&self, key: &str) -> Result<u64, StructureError> {
        let m = self.matrix(key)?;
        Ok(m.row(0))
    }

    /// Dual basis identification `y_0; y_1; ...` as a matrix whose row `mu`
    /// expresses `y_mu` in the target algebra's basis.
    pub fn identification(&self) -> Result<Gf2Mat, StructureError> {
        let images: Vec<&str> = self.field("y")?.split(';').collect();
        matrix_from_images(&self.names(), &images)
    }
}

pub fn parse_rows(dim: usize, text: &str) -> Result<Vec<FixtureRow>, StructureError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| FixtureRow::parse(dim, l))
        .collect()
}

#[must_use]
pub fn n3_coproducts() -> Vec<FixtureRow> {
    parse_rows(3, N3_COPRODUCTS).expect("bundled fixture parses")
}

#[must_use]
pub fn n4_named() -> Vec<FixtureRow> {
    parse_rows(4, N4_NAMED).expect("bundled fixture parses")
}

#[must_use]
pub fn n4_fourier() -> Vec<FixtureRow> {
    parse_rows(4, N4_FOURIER).expect("bundled fixture parses")
}

/// Named row from either dimension-4 table.
#[must_use]
pub fn n4_row(label: &str) -> Option<FixtureRow> {
    n4_fourier()
        .into_iter()
        .chain(n4_named())
        .find(|r| r.label == label)
}

/// The noncommutative noncocommutative dimension-4 Hopf algebra in the basis
/// `1, s, x, w` with `s` grouplike and `x`, `w` skew-primitive.
#[must_use]
pub fn dsl2() -> (BasisNames, Bialgebra) {
    let names = BasisNames::new("1sxw");
    let alg = AlgebraSC::from_relations(
        &names,
        &["ss=1", "sx=w", "wx=w", "ww=w", "xs=1+s+w", "ws=1+s+x", "sw=x", "xw=x", "xx=x"],
    )
    .expect("valid relations");
    let coalg = CoalgebraSC::from_terms(&names, &[1, 0, 0], &["ss", "sx+x1", "1w+ws"]).expect("valid terms");
    (names, Bialgebra::new(alg, coalg))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_counts() {
        assert_eq!(n3_coproducts().len(), 52);
        assert_eq!(n4_named().len(), 29);
        assert_eq!(n4_fourier().len(), 20);
    }

    #[test]
    fn rows_validate() {
        use crate::enumerate::identify_algebra;
        use crate::structure::{check_antipode, check_bialgebra, dualize_coalgebra, solve_antipode};
        for r in n3_coproducts().iter().chain(&n4_named()).chain(&n4_fourier()) {
            let b = r.bialgebra().unwrap();
            assert_eq!(check_bialgebra(&b), Ok(()), "{}", r.label);
            let s = r.antipode().unwrap();
            if r.dim == 3 || s.is_some() {
                assert_eq!(solve_antipode(&b), s, "{}", r.label);
            }
            if let Some(printed) = r.fields.get("Sprinted") {
                let images: Vec<&str> = std::iter::once("1").chain(printed.split(';')).collect();
                let m = matrix_from_images(&r.names(), &images).unwrap();
                assert!(check_antipode(&b, &m).is_err(), "{}", r.label);
            }
            let dual = identify_algebra(&dualize_coalgebra(&b.coalg));
            let expect = r.dual_label().map(str::to_string).or_else(|| r.type_pair().map(|p| p.1));
            assert_eq!(Some(dual.to_string()), expect, "{}", r.label);
        }
    }

    #[test]
    fn dsl2_antipode() {
        use crate::structure::{check_bialgebra, matrix_from_images, solve_antipode};
        let (names, b) = dsl2();
        assert_eq!(check_bialgebra(&b), Ok(()));
        let s = matrix_from_images(&names, &["1", "s", "w", "1+s+x"]).unwrap();
        assert_eq!(solve_antipode(&b), Some(s));
    }

    #[test]
    fn parses_fields() {
        let r = n4_row("NF.2").unwrap();
        assert_eq!(r.type_pair(), Some(("NF".into(), "NF".into())));
        assert_eq!(r.vector01("I").unwrap(), 0b1110);
        assert_eq!(r.identification().unwrap().rows(), 4);
    }
}
