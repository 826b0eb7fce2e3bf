//! Exhaustive classification of small algebras, bialgebras and Hopf
//! algebras over F2, up to dimension 4.
//!
//! Structures are stored as bit-packed structure constants in row-vector
//! convention: a product or coproduct tensor `T[a][b][c]` lives at bit
//! `a*n*n + b*n + c` of a `u64`, and tensor-square elements at bit `a*n + b`.
//!
//! - [`gf2`]: vectors, matrices, Gauss-Jordan solves, `GL_n` enumeration.
//! - [`structure`]: algebras, coalgebras, bialgebras and their axiom checks.
//! - [`enumerate`] and [`catalog`]: algebras up to isomorphism.
//! - [`coproducts`]: every bialgebra coproduct on a fixed algebra.
//! - [`hopfdual`]: isomorphism classes, duals, the type quiver, pairings.
//! - [`fourier`]: integrals, Fourier transforms and transports.
//! - [`qtri`]: quasitriangular and coquasitriangular structures.
//! - [`repsearch`]: small representations and their tensor products.
//! - [`pipeline`]: the staged run, JSON outputs, cache and verification.

pub mod catalog;
pub mod coproducts;
pub mod enumerate;
pub mod fixtures;
pub mod fourier;
pub mod gf2;
pub mod hopfdual;
pub mod qtri;
pub mod pipeline;
pub mod repsearch;
pub mod structure;
