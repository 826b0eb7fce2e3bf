//! Naive index-loop reference evaluator and samplers shared by the
//! integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use gf2hopf::coproducts::solve_coproducts;
use gf2hopf::gf2::{enumerate_invertible, gl_order, invert, low_mask, Gf2Mat, Gf2Vec};
use gf2hopf::hopfdual::Census;
use gf2hopf::structure::{AlgebraSC, Bialgebra, CoalgebraSC};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Dense copy of the structure constants.
pub struct Dense {
    n: usize,
    v: Vec<Vec<Vec<bool>>>,
    c: Vec<Vec<Vec<bool>>>,
    eta: Vec<bool>,
    eps: Vec<bool>,
}

impl Dense {
    pub fn new(b: &Bialgebra) -> Self {
        let n = b.dim();
        let cube = |t: u64| {
            (0..n)
                .map(|a| (0..n).map(|x| (0..n).map(|y| t >> (a * n * n + x * n + y) & 1 == 1).collect()).collect())
                .collect()
        };
        Self {
            n,
            v: cube(b.alg.tensor()),
            c: cube(b.coalg.tensor()),
            eta: (0..n).map(|i| b.alg.unit_bits() >> i & 1 == 1).collect(),
            eps: (0..n).map(|i| b.coalg.eps_bits() >> i & 1 == 1).collect(),
        }
    }

    pub fn algebra_ok(&self) -> bool {
        let n = self.n;
        for b in 0..n {
            for c in 0..n {
                let mut left = false;
                let mut right = false;
                for i in 0..n {
                    left ^= self.eta[i] && self.v[i][b][c];
                    right ^= self.eta[i] && self.v[b][i][c];
                }
                if left != (b == c) || right != (b == c) {
                    return false;
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for e in 0..n {
                        let mut l = false;
                        let mut r = false;
                        for d in 0..n {
                            l ^= self.v[a][b][d] && self.v[d][c][e];
                            r ^= self.v[b][c][d] && self.v[a][d][e];
                        }
                        if l != r {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn coalgebra_ok(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for x in 0..n {
                let mut left = false;
                let mut right = false;
                for i in 0..n {
                    left ^= self.eps[i] && self.c[a][i][x];
                    right ^= self.eps[i] && self.c[a][x][i];
                }
                if left != (a == x) || right != (a == x) {
                    return false;
                }
            }
        }
        for a in 0..n {
            for e in 0..n {
                for f in 0..n {
                    for g in 0..n {
                        let mut l = false;
                        let mut r = false;
                        for d in 0..n {
                            l ^= self.c[a][d][g] && self.c[d][e][f];
                            r ^= self.c[a][e][d] && self.c[d][f][g];
                        }
                        if l != r {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn bialgebra_ok(&self) -> bool {
        let n = self.n;
        if !self.algebra_ok() || !self.coalgebra_ok() {
            return false;
        }
        let mut e1 = false;
        for i in 0..n {
            e1 ^= self.eta[i] && self.eps[i];
        }
        if !e1 {
            return false;
        }
        for p in 0..n {
            for q in 0..n {
                let mut d1 = false;
                for i in 0..n {
                    d1 ^= self.eta[i] && self.c[i][p][q];
                }
                if d1 != (self.eta[p] && self.eta[q]) {
                    return false;
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let mut e = false;
                for c in 0..n {
                    e ^= self.v[a][b][c] && self.eps[c];
                }
                if e != (self.eps[a] && self.eps[b]) {
                    return false;
                }
                for p in 0..n {
                    for q in 0..n {
                        let mut l = false;
                        for c in 0..n {
                            l ^= self.v[a][b][c] && self.c[c][p][q];
                        }
                        let mut r = false;
                        for p1 in 0..n {
                            for q1 in 0..n {
                                for p2 in 0..n {
                                    for q2 in 0..n {
                                        r ^= self.c[a][p1][q1]
                                            && self.c[b][p2][q2]
                                            && self.v[p1][p2][p]
                                            && self.v[q1][q2][q];
                                    }
                                }
                            }
                        }
                        if l != r {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// `(coproduct, counit)` pairs found by the solver.
pub fn solver_set(a: &AlgebraSC) -> BTreeSet<(u64, u64)> {
    solve_coproducts(a)
        .solutions
        .iter()
        .map(|s| (s.coalg.tensor(), s.coalg.eps_bits()))
        .collect()
}

/// Reference verdict on one candidate coproduct and counit.
pub fn accepted(a: &AlgebraSC, c: u64, e: u64) -> bool {
    let n = a.dim();
    Dense::new(&Bialgebra::new(*a, CoalgebraSC::new(n, c, Gf2Vec::from_bits(n, e)))).bialgebra_ok()
}

/// Every pair in the full `2^(n^3) x 2^n` space for `n = 2`.
pub fn brute_force_dim2(a: &AlgebraSC) -> BTreeSet<(u64, u64)> {
    let mut out = BTreeSet::new();
    for c in 0..1u64 << 8 {
        for e in 0..4 {
            if accepted(a, c, e) {
                out.insert((c, e));
            }
        }
    }
    out
}

/// Every pair for a standard three-dimensional algebra. With the unit at
/// `x^0`, `Delta 1 = 1 (x) 1` and `eps 1 = 1` follow from the axioms, so
/// the free part is `Delta x`, `Delta y` and `eps` on `x, y`.
pub fn brute_force_dim3(a: &AlgebraSC) -> BTreeSet<(u64, u64)> {
    let mut out = BTreeSet::new();
    for free in 0..1u64 << 18 {
        let c = 1 | (free & low_mask(9)) << 9 | (free >> 9) << 18;
        for e in 0..4u64 {
            let eps = 1 | e << 1;
            if accepted(a, c, eps) {
                out.insert((c, eps));
            }
        }
    }
    out
}

pub fn random_gl(n: usize, rng: &mut ChaCha8Rng) -> (Gf2Mat, Gf2Mat) {
    let k = rng.gen_range(0..gl_order(n) as usize);
    let p = enumerate_invertible(n, false).nth(k).expect("in range");
    let q = invert(&p).expect("invertible");
    (p, q)
}

/// A census bialgebra in a random basis with up to two bits flipped, or an
/// arbitrary random tensor pair.
pub fn sample(seed: u64) -> Bialgebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=3);
    let m = n * n * n;
    if rng.gen_bool(0.2) {
        let alg = AlgebraSC::new(n, rng.gen::<u64>() & low_mask(m), Gf2Vec::from_bits(n, rng.gen::<u64>() & low_mask(n)));
        let co = CoalgebraSC::new(n, rng.gen::<u64>() & low_mask(m), Gf2Vec::from_bits(n, rng.gen::<u64>() & low_mask(n)));
        return Bialgebra::new(alg, co);
    }
    let classes = &Census::get(n).classes;
    let b = classes[rng.gen_range(0..classes.len())].bialgebra();
    let (p, q) = random_gl(n, &mut rng);
    let b = b.transported(&p, &q);
    let (mut v, mut c) = (b.alg.tensor(), b.coalg.tensor());
    let (mut eta, mut eps) = (b.alg.unit_bits(), b.coalg.eps_bits());
    for _ in 0..rng.gen_range(0..=2) {
        match rng.gen_range(0..10) {
            0 => eta ^= 1 << rng.gen_range(0..n),
            1 => eps ^= 1 << rng.gen_range(0..n),
            2..=5 => v ^= 1 << rng.gen_range(0..m),
            _ => c ^= 1 << rng.gen_range(0..m),
        }
    }
    Bialgebra::new(
        AlgebraSC::new(n, v, Gf2Vec::from_bits(n, eta)),
        CoalgebraSC::new(n, c, Gf2Vec::from_bits(n, eps)),
    )
}
