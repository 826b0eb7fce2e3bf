//! Right integrals, the Fourier transform `H -> H*` and its transport to
//! the catalog basis of the dual algebra.
//!
//! With `I` the right integral, `F[mu][nu] = int(x^nu x^mu)` and the adjoint
//! `F#[mu][nu] = int(x^mu x^nu)`. Row `mu` of `F` is the image of `x^mu`
//! in the dual basis `y_nu`. If `Y` expresses each `y_nu` in the target
//! algebra's own basis, the transport is `F * Y`.

use serde::Serialize;
use thiserror::Error;

use crate::enumerate::{catalog_class, identify_algebra};
use crate::gf2::{enumerate_invertible, invert, ones, parity, solve_linear, Gf2Mat, Gf2Vec, LinearSolution};
use crate::structure::{dualize_coalgebra, HopfAlgebra};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FourierError {
    #[error("integral space has dimension {0}, expected 1")]
    Integral(usize),
    #[error("identification is not an algebra isomorphism onto {0}")]
    NotAnIsomorphism(String),
    #[error("arrows do not compose: {0} then {1}")]
    Path(String, String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntegralVector {
    pub i: Gf2Vec,
}

/// The nonzero `I` with `sum_nu C[mu][nu][rho] I[nu] = I[mu] eta[rho]`.
pub fn right_integral(h: &HopfAlgebra) -> Result<IntegralVector, FourierError> {
    let n = h.dim();
    let co = h.coalg();
    let unit = h.alg().unit_bits();
    let mut rows = Vec::with_capacity(n * n);
    for mu in 0..n {
        for rho in 0..n {
            let mut r = 0u64;
            for nu in 0..n {
                if co.coproduct(mu) >> (nu * n + rho) & 1 == 1 {
                    r ^= 1 << nu;
                }
            }
            if unit >> rho & 1 == 1 {
                r ^= 1 << mu;
            }
            rows.push(r);
        }
    }
    let a = Gf2Mat::from_rows(n, rows);
    let sol = solve_linear(&a, &Gf2Vec::zero(n * n)).expect("shapes agree");
    match sol {
        LinearSolution::Solutions { nullspace, .. } if nullspace.len() == 1 => Ok(IntegralVector { i: nullspace[0] }),
        LinearSolution::Solutions { nullspace, .. } => Err(FourierError::Integral(nullspace.len())),
        LinearSolution::Inconsistent => Err(FourierError::Integral(0)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourierData {
    pub integral: IntegralVector,
    pub f: Gf2Mat,
    pub f_sharp: Gf2Mat,
    /// Label of the dual algebra.
    pub target: String,
    /// Row `mu` is `y_mu` in the target catalog basis.
    pub identification: Option<Gf2Mat>,
    pub transport: Option<Gf2Mat>,
    /// `F# * Y`.
    pub transport_sharp: Option<Gf2Mat>,
}

/// Integral with `F` and `F#`; no identification yet.
pub fn fourier_matrices(h: &HopfAlgebra) -> Result<FourierData, FourierError> {
    let integral = right_integral(h)?;
    let n = h.dim();
    let alg = h.alg();
    let ib = integral.i.bits();
    let build = |swap: bool| {
        let rows = (0..n)
            .map(|mu| {
                (0..n).fold(0u64, |acc, nu| {
                    let p = if swap { alg.product(nu, mu) } else { alg.product(mu, nu) };
                    acc | u64::from(parity(p & ib)) << nu
                })
            })
            .collect();
        Gf2Mat::from_rows(n, rows)
    };
    Ok(FourierData {
        integral,
        f: build(true),
        f_sharp: build(false),
        target: identify_algebra(&dualize_coalgebra(h.coalg())).to_string(),
        identification: None,
        transport: None,
        transport_sharp: None,
    })
}

/// `Y` carries the dual algebra on `y_mu` exactly onto the catalog table.
#[must_use]
pub fn is_identification(h: &HopfAlgebra, y: &Gf2Mat, target: &str) -> bool {
    let Some(t) = catalog_class(h.dim(), target) else {
        return false;
    };
    let Some(q) = invert(y) else {
        return false;
    };
    dualize_coalgebra(h.coalg()).transported(y, &q) == t.table_form
}

/// Lexicographically first identification of the dual algebra with its
/// catalog table.
#[must_use]
pub fn computed_identification(h: &HopfAlgebra) -> Gf2Mat {
    let dual = dualize_coalgebra(h.coalg());
    let target = catalog_class(h.dim(), identify_algebra(&dual)).expect("catalog label").table_form;
    enumerate_invertible(h.dim(), false)
        .find(|y| {
            let q = invert(y).expect("invertible");
            dual.transported(y, &q) == target
        })
        .expect("dual algebra is isomorphic to its catalog table")
}

/// `F * Y` for a checked identification `Y`.
pub fn fourier_transport(h: &HopfAlgebra, y: &Gf2Mat) -> Result<FourierData, FourierError> {
    let mut d = fourier_matrices(h)?;
    if !is_identification(h, y, &d.target) {
        return Err(FourierError::NotAnIsomorphism(d.target));
    }
    d.transport = Some(&d.f * y);
    d.transport_sharp = Some(&d.f_sharp * y);
    d.identification = Some(y.clone());
    Ok(d)
}

/// Transport with the computed identification.
pub fn fourier_transport_computed(h: &HopfAlgebra) -> Result<FourierData, FourierError> {
    fourier_transport(h, &computed_identification(h))
}

/// One arrow of a holonomy path.
#[derive(Clone, Debug)]
pub struct TransportArrow {
    pub source: String,
    pub target: String,
    pub matrix: Gf2Mat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Holonomy {
    pub rows: Vec<String>,
    pub order: Option<u32>,
}

/// Product of the transports along `path`, first arrow leftmost.
pub fn holonomy(path: &[TransportArrow]) -> Result<(Gf2Mat, Option<u32>), FourierError> {
    let first = path.first().ok_or_else(|| FourierError::Path(String::new(), String::new()))?;
    let mut m = first.matrix.clone();
    for w in path.windows(2) {
        if w[0].target != w[1].source {
            return Err(FourierError::Path(w[0].target.clone(), w[1].source.clone()));
        }
        m = &m * &w[1].matrix;
    }
    let order = m.order();
    Ok((m, order))
}

/// Self-duality adjusted transform `F * P^-1` for a pairing `P`: the
/// Fourier transform as a map `H -> H`.
#[must_use]
pub fn self_dual_transform(f: &Gf2Mat, pairing: &Gf2Mat) -> Option<Gf2Mat> {
    invert(pairing).map(|q| f * &q)
}

/// Support of an integral, as basis indices.
#[must_use]
pub fn integral_support(i: &IntegralVector) -> Vec<usize> {
    ones(i.i.bits()).collect()
}
