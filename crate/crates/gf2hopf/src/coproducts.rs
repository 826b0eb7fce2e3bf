//! All coproducts making a fixed algebra into a bialgebra.
//!
//! For each admissible counit the linear constraints (`Delta 1 = 1 (x) 1`
//! and counity) are eliminated first, leaving the coproduct tensor as an
//! affine function `C = c0 + sum t_i N_i` of free bits `t_i`. A depth-first
//! search over the `t_i` then checks each quadratic equation
//! (compatibility, coassociativity) as soon as every bit it reads is fixed.

use rayon::prelude::*;

use crate::enumerate::identify_algebra;
use crate::gf2::{low_mask, ones, parity, Gf2Mat, Gf2Vec};
use crate::structure::{
    check_bialgebra, dualize_coalgebra, slot, solve_antipode, AlgebraSC, Bialgebra, CoalgebraSC, Violation,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawSolution {
    pub coalg: CoalgebraSC,
    /// Catalog label of the dual algebra.
    pub coalg_type: String,
    pub antipode: Option<Gf2Mat>,
}

impl RawSolution {
    #[must_use]
    pub fn hopf(&self) -> bool {
        self.antipode.is_some()
    }
}

#[derive(Clone, Debug)]
pub struct RawSolutionSet {
    pub algebra_label: String,
    pub algebra: AlgebraSC,
    /// Sorted by packed coproduct tensor.
    pub solutions: Vec<RawSolution>,
}

impl RawSolutionSet {
    #[must_use]
    pub fn hopf_count(&self) -> usize {
        self.solutions.iter().filter(|s| s.hopf()).count()
    }

    /// Number of solutions whose coalgebra has the given type.
    #[must_use]
    pub fn type_count(&self, label: &str) -> usize {
        self.solutions.iter().filter(|s| s.coalg_type == label).count()
    }
}

/// Counits `eps` with `eps(1) = 1` that are algebra maps.
#[must_use]
pub fn enumerate_counits(a: &AlgebraSC) -> Vec<Gf2Vec> {
    assert!(a.is_standard());
    let n = a.dim();
    (0..1u64 << (n - 1))
        .map(|m| m << 1 | 1)
        .filter(|&e| {
            (0..n).all(|mu| {
                (0..n).all(|nu| parity(a.product(mu, nu) & e) == (e >> mu & e >> nu & 1 == 1))
            })
        })
        .map(|e| Gf2Vec::from_bits(n, e))
        .collect()
}

/// Catalog label of the algebra dual to `c`.
#[must_use]
pub fn coalgebra_type(c: &CoalgebraSC) -> &'static str {
    identify_algebra(&dualize_coalgebra(c))
}

// ============================================================================
// Equation compilation
// ============================================================================

/// `parity(C & lin) + sum_a C_a * parity(C & partner_a) = 0`.
#[derive(Clone, Debug, Default)]
struct Equation {
    lin: u64,
    quad: Vec<(u32, u64)>,
}

impl Equation {
    fn add_product(&mut self, a: usize, b: usize) {
        match self.quad.iter_mut().find(|(x, _)| *x as usize == a) {
            Some((_, m)) => *m ^= 1 << b,
            None => self.quad.push((a as u32, 1 << b)),
        }
    }

    fn support(&self) -> u64 {
        self.quad.iter().fold(self.lin, |acc, &(a, m)| acc | 1 << a | m)
    }

    #[inline]
    fn holds(&self, c: u64) -> bool {
        let mut v = parity(c & self.lin);
        for &(a, m) in &self.quad {
            v ^= c >> a & 1 == 1 && parity(c & m);
        }
        !v
    }

    fn normalize(&mut self) {
        self.quad.retain(|&(_, m)| m != 0);
        self.quad.sort_unstable();
    }
}

fn equations(a: &AlgebraSC) -> Vec<Equation> {
    let n = a.dim();
    let v = |x: usize, y: usize, z: usize| a.product(x, y) >> z & 1 == 1;
    let mut out = Vec::new();
    // Delta(x^mu x^nu) = Delta x^mu Delta x^nu at x^l (x) x^g
    for mu in 1..n {
        for nu in 1..n {
            for l in 0..n {
                for g in 0..n {
                    let mut e = Equation::default();
                    for rho in ones(a.product(mu, nu)) {
                        e.lin ^= 1 << slot(n, rho, l, g);
                    }
                    for al in 0..n {
                        for be in 0..n {
                            for rh in 0..n {
                                for de in 0..n {
                                    if v(al, rh, l) && v(be, de, g) {
                                        e.add_product(slot(n, mu, al, be), slot(n, nu, rh, de));
                                    }
                                }
                            }
                        }
                    }
                    e.normalize();
                    out.push(e);
                }
            }
        }
    }
    // (Delta (x) id) Delta x^mu = (id (x) Delta) Delta x^mu at (al, be, ga)
    for mu in 1..n {
        for al in 0..n {
            for be in 0..n {
                for ga in 0..n {
                    let mut e = Equation::default();
                    for nu in 0..n {
                        e.add_product(slot(n, mu, nu, ga), slot(n, nu, al, be));
                    }
                    for rho in 0..n {
                        e.add_product(slot(n, mu, al, rho), slot(n, rho, be, ga));
                    }
                    e.normalize();
                    out.push(e);
                }
            }
        }
    }
    out
}

// ============================================================================
// Linear elimination
// ============================================================================

/// Affine parametrization of the coproducts satisfying the linear
/// constraints for a fixed counit.
struct Affine {
    base: u64,
    /// `dirs[i]` is the tensor flipped by free bit `t_i`.
    dirs: Vec<u64>,
}

fn linear_constraints(n: usize, eps: u64) -> Vec<(u64, bool)> {
    let mut rows = Vec::new();
    // Delta 1 = 1 (x) 1
    for b in 0..n {
        for c in 0..n {
            rows.push((1u64 << slot(n, 0, b, c), b == 0 && c == 0));
        }
    }
    for mu in 1..n {
        // (eps (x) id) Delta x^mu = x^mu
        for rho in 0..n {
            let mut r = 0;
            for nu in ones(eps) {
                r |= 1 << slot(n, mu, nu, rho);
            }
            rows.push((r, rho == mu));
        }
        // (id (x) eps) Delta x^mu = x^mu
        for nu in 0..n {
            let mut r = 0;
            for rho in ones(eps) {
                r |= 1 << slot(n, mu, nu, rho);
            }
            rows.push((r, nu == mu));
        }
    }
    rows
}

/// Gauss-Jordan elimination with pivots taken in `order`; the remaining
/// columns become free in increasing index order.
fn eliminate(total: usize, mut rows: Vec<(u64, bool)>, order: &[usize]) -> Option<Affine> {
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut next = 0;
    for &col in order {
        let Some(i) = (next..rows.len()).find(|&i| rows[i].0 >> col & 1 == 1) else {
            continue;
        };
        rows.swap(next, i);
        let (pr, pb) = rows[next];
        for (j, r) in rows.iter_mut().enumerate() {
            if j != next && r.0 >> col & 1 == 1 {
                r.0 ^= pr;
                r.1 ^= pb;
            }
        }
        pivots.push((next, col));
        next += 1;
    }
    if rows[next..].iter().any(|r| r.1) {
        return None;
    }
    let pivot_mask = pivots.iter().fold(0u64, |m, &(_, c)| m | 1 << c);
    let free: Vec<usize> = (0..total).filter(|c| pivot_mask >> c & 1 == 0).collect();
    let mut base = 0u64;
    for &(r, c) in &pivots {
        if rows[r].1 {
            base |= 1 << c;
        }
    }
    let dirs = free
        .iter()
        .map(|&f| {
            let mut d = 1u64 << f;
            for &(r, c) in &pivots {
                if rows[r].0 >> f & 1 == 1 {
                    d |= 1 << c;
                }
            }
            d
        })
        .collect();
    Some(Affine { base, dirs })
}

// ============================================================================
// Search
// ============================================================================

struct Problem<'a> {
    affine: Affine,
    /// Equations grouped by the free bit after which they become decidable.
    by_level: Vec<Vec<&'a Equation>>,
    initial: Vec<&'a Equation>,
}

impl<'a> Problem<'a> {
    fn new(affine: Affine, eqs: &'a [Equation]) -> Self {
        let k = affine.dirs.len();
        let mut by_level = vec![Vec::new(); k];
        let mut initial = Vec::new();
        for e in eqs {
            let sup = e.support();
            match (0..k).rev().find(|&i| affine.dirs[i] & sup != 0) {
                Some(i) => by_level[i].push(e),
                None => initial.push(e),
            }
        }
        Self {
            affine,
            by_level,
            initial,
        }
    }

    fn dfs(&self, depth: usize, c: u64, out: &mut Vec<u64>) {
        if depth == self.affine.dirs.len() {
            out.push(c);
            return;
        }
        for t in [false, true] {
            let next = if t { c ^ self.affine.dirs[depth] } else { c };
            if self.by_level[depth].iter().all(|e| e.holds(next)) {
                self.dfs(depth + 1, next, out);
            }
        }
    }

    fn solve_prefix(&self, prefix: u64, bits: usize) -> Vec<u64> {
        let mut c = self.affine.base;
        for i in 0..bits {
            if prefix >> i & 1 == 1 {
                c ^= self.affine.dirs[i];
            }
            if !self.by_level[i].iter().all(|e| e.holds(c)) {
                return Vec::new();
            }
        }
        let mut out = Vec::new();
        self.dfs(bits, c, &mut out);
        out
    }
}

/// Coproduct tensors for `a` with counit `eps`, unsorted.
#[must_use]
fn solve_for_counit(a: &AlgebraSC, eps: &Gf2Vec, eqs: &[Equation]) -> Vec<u64> {
    let n = a.dim();
    let total = n * n * n;
    // Pivot on row 0 and border bits first so the interior stays free.
    let border = |i: usize| {
        let (mu, nu, rho) = (i / (n * n), i / n % n, i % n);
        mu == 0 || nu == 0 || rho == 0
    };
    let order: Vec<usize> = (0..total).filter(|&i| border(i)).chain((0..total).filter(|&i| !border(i))).collect();
    let Some(affine) = eliminate(total, linear_constraints(n, eps.bits()), &order) else {
        return Vec::new();
    };
    let problem = Problem::new(affine, eqs);
    if !problem.initial.iter().all(|e| e.holds(problem.affine.base)) {
        return Vec::new();
    }
    let split = problem.affine.dirs.len().min(6);
    (0..1u64 << split)
        .into_par_iter()
        .flat_map_iter(|p| problem.solve_prefix(p, split))
        .collect()
}

/// Every coalgebra making `a` a bialgebra, annotated with its type and
/// antipode. Panics if a solution fails the full bialgebra check.
#[must_use]
pub fn solve_coproducts(a: &AlgebraSC) -> RawSolutionSet {
    assert!(a.is_standard(), "solve on a standard-form algebra");
    let eqs = equations(a);
    let mut found: Vec<(u64, u64)> = enumerate_counits(a)
        .par_iter()
        .flat_map_iter(|eps| {
            solve_for_counit(a, eps, &eqs)
                .into_iter()
                .map(move |c| (c, eps.bits()))
        })
        .collect();
    found.sort_unstable();
    match raw_solution_set(a, &found) {
        Ok(set) => set,
        Err((c, v)) => panic!("solver emitted an invalid coproduct {c:?}: {v}"),
    }
}

/// Validates `(coproduct, counit)` pairs on `a` and annotates each with its
/// dual type and antipode. The first failing pair is returned with its
/// violation.
pub fn raw_solution_set(a: &AlgebraSC, found: &[(u64, u64)]) -> Result<RawSolutionSet, (CoalgebraSC, Violation)> {
    let n = a.dim();
    let solutions = found
        .par_iter()
        .map(|&(c, e)| {
            let coalg = CoalgebraSC::new(n, c & low_mask(n * n * n), Gf2Vec::from_bits(n, e));
            let bi = Bialgebra::new(*a, coalg);
            check_bialgebra(&bi).map_err(|v| (coalg, v))?;
            Ok(RawSolution {
                coalg,
                coalg_type: coalgebra_type(&coalg).to_string(),
                antipode: solve_antipode(&bi),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RawSolutionSet {
        algebra_label: identify_algebra(a).to_string(),
        algebra: *a,
        solutions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::algebra;

    #[test]
    fn counit_examples() {
        let bits = |a: &AlgebraSC| enumerate_counits(a).iter().map(Gf2Vec::bits).collect::<Vec<_>>();
        assert_eq!(bits(&algebra(2, "A")), [0b01]);
        assert_eq!(bits(&algebra(2, "B")), [0b01, 0b11]);
        assert_eq!(bits(&algebra(3, "B")), [0b001, 0b011, 0b101]);
    }

    #[test]
    fn n2_counts() {
        let counts: Vec<usize> = ["A", "B", "C"]
            .iter()
            .map(|l| solve_coproducts(&algebra(2, l)).solutions.len())
            .collect();
        // A: group algebra of Z2 and the Grassmann line. B: functions on a
        // two-element monoid (Z2 or {0,1}), with either point as identity.
        assert_eq!(counts, [2, 4, 0]);
    }

    #[test]
    fn n3_b() {
        let raw = solve_coproducts(&algebra(3, "B"));
        assert_eq!(raw.solutions.len(), 33);
        assert!(raw.solutions.windows(2).all(|w| w[0].coalg < w[1].coalg));
    }

    #[test]
    fn coalgebra_type_examples() {
        let rows = crate::fixtures::n3_coproducts();
        let b4 = rows.iter().find(|r| r.label == "B.4").unwrap();
        assert_eq!(coalgebra_type(&b4.coalgebra().unwrap()), "D");
    }
}
