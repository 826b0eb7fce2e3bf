//! Independent brute-force oracles for the coproduct solver and the
//! quasitriangular search.

use gf2hopf::catalog;
use gf2hopf::hopfdual::{dual_bialgebra, Census};
use gf2hopf::qtri::{coquasitriangular_direct, enumerate_quasitriangular};

mod common;
use common::{brute_force_dim2, brute_force_dim3, solver_set};

#[test]
fn dimension_two_full_search() {
    for entry in catalog::entries(2) {
        let a = entry.table_form();
        assert_eq!(solver_set(&a), brute_force_dim2(&a), "{}", entry.label);
    }
}

#[test]
fn dimension_three_algebra_d() {
    let a = catalog::algebra(3, "D");
    let brute = brute_force_dim3(&a);
    assert_eq!(brute.len(), 3);
    assert_eq!(solver_set(&a), brute);
}

#[test]
fn quasitriangular_matches_dual_coquasitriangular() {
    for n in 2..=4 {
        for c in Census::get(n).hopf_classes() {
            let b = c.bialgebra();
            let qt = enumerate_quasitriangular(&b).len();
            assert_eq!(qt, coquasitriangular_direct(&dual_bialgebra(&b)).len(), "n={n} class {}", c.id);
        }
    }
}
