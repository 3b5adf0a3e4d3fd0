//! Brute-force verifiers. Nothing here shares code with the solvers beyond
//! exact linear algebra and [`ray_embrace`].

use std::cmp::Ordering;

use itertools::Itertools;
use malachite::num::basic::traits::{One, Zero};
use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{dot, is_negative, rank, solve_any, squared_norm, sub_vec, Matrix, Rational, Vector};
use crate::instance::{binomial, CcpInstance, ColorfulChoice};
use crate::lp::{ray_embrace, StandardFormLp};

/// Largest dimension accepted by [`enumerate_colorful_solutions`].
pub const MAX_ENUMERATION_DIM: usize = 6;

/// Largest number of candidates any enumeration in this module will visit.
pub const MAX_CANDIDATES: u128 = 2_000_000;

/// Every colorful choice that ray-embraces `b`, sorted by picks.
pub fn enumerate_colorful_solutions(inst: &CcpInstance) -> Result<Vec<ColorfulChoice>> {
    inst.check_structure()?;
    let d = inst.dim;
    if d > MAX_ENUMERATION_DIM {
        return Err(Error::SizeGuard(format!("dimension {d} exceeds {MAX_ENUMERATION_DIM}")));
    }
    let total: u128 = inst.colors.iter().map(|c| c.len() as u128).product();
    if total > MAX_CANDIDATES {
        return Err(Error::SizeGuard(format!("{total} colorful choices")));
    }
    let candidates: Vec<Vec<usize>> = inst.colors.iter().map(|c| 0..c.len()).multi_cartesian_product().collect();
    let found: Result<Vec<Option<ColorfulChoice>>> = candidates
        .par_iter()
        .map(|idx| {
            let picks: Vec<(usize, usize)> = idx.iter().copied().enumerate().collect();
            let pts: Vec<Vector> = picks.iter().map(|&(c, j)| inst.colors[c][j].clone()).collect();
            Ok(ray_embrace(&pts, &inst.b)?.map(|coefficients| ColorfulChoice { picks, coefficients }))
        })
        .collect();
    let mut out: Vec<ColorfulChoice> = found?.into_iter().flatten().collect();
    out.sort_by(|a, b| a.picks.cmp(&b.picks));
    Ok(out)
}

/// Whether some colorful choice with exactly these picks embraces `b`.
pub fn is_listed(solutions: &[ColorfulChoice], picks: &[(usize, usize)]) -> bool {
    solutions.iter().any(|s| s.picks == picks)
}

/// Tukey depth of `q` with respect to `points` in dimension 1 or 2: the
/// minimum number of points in a closed halfspace whose boundary passes
/// through `q`.
pub fn tukey_depth(points: &[Vector], q: &[Rational]) -> Result<usize> {
    if points.iter().any(|p| p.len() != q.len()) {
        return Err(Error::dim("points and query differ in dimension"));
    }
    match q.len() {
        1 => {
            let ge = points.iter().filter(|p| p[0] >= q[0]).count();
            let le = points.iter().filter(|p| p[0] <= q[0]).count();
            Ok(ge.min(le))
        }
        2 => Ok(tukey_depth_2d(points, q)),
        d => Err(Error::precondition(format!("exact Tukey depth needs dimension at most 2, got {d}"))),
    }
}

fn half(v: &[Rational]) -> u8 {
    if v[1] > 0u32 || (v[1] == 0u32 && v[0] > 0u32) {
        0
    } else {
        1
    }
}

fn cross(a: &[Rational], b: &[Rational]) -> Rational {
    &a[0] * &b[1] - &a[1] * &b[0]
}

fn angular_cmp(a: &Vector, b: &Vector) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| {
        let c = cross(a, b);
        if c > 0u32 {
            Ordering::Less
        } else if c < 0u32 {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

/// The count is constant on open arcs between normals orthogonal to some
/// `p − q`, and can only grow at those normals, so testing one normal per
/// open arc suffices.
fn tukey_depth_2d(points: &[Vector], q: &[Rational]) -> usize {
    let diffs: Vec<Vector> = points.iter().map(|p| sub_vec(p, q)).filter(|v| v.iter().any(|x| *x != 0u32)).collect();
    let at_q = points.len() - diffs.len();
    let mut normals: Vec<Vector> = diffs
        .iter()
        .flat_map(|v| [vec![-&v[1], v[0].clone()], vec![v[1].clone(), -&v[0]]])
        .collect();
    normals.sort_by(angular_cmp);
    normals.dedup_by(|a, b| angular_cmp(a, b) == Ordering::Equal);
    if normals.is_empty() {
        return at_q;
    }
    let count = |u: &Vector| at_q + diffs.iter().filter(|v| dot(u, v) >= 0u32).count();
    (0..normals.len())
        .map(|i| {
            let a = &normals[i];
            let b = &normals[(i + 1) % normals.len()];
            let mid = if normals.len() > 1 && cross(a, b) > 0u32 {
                vec![&a[0] + &b[0], &a[1] + &b[1]]
            } else {
                vec![-&a[1], a[0].clone()]
            };
            count(&mid)
        })
        .min()
        .unwrap()
}

/// Number of `(d+1)`-subsets of `points` (by index) whose convex hull contains `q`.
pub fn simplicial_depth_count(points: &[Vector], q: &[Rational]) -> Result<u64> {
    let d = q.len();
    if points.iter().any(|p| p.len() != d) {
        return Err(Error::dim("points and query differ in dimension"));
    }
    let total = binomial(points.len() as u128, d as u128 + 1);
    if total > MAX_CANDIDATES {
        return Err(Error::SizeGuard(format!("{total} simplices")));
    }
    let lifted: Vec<Vector> = points.iter().map(|p| lift(p)).collect();
    let target = lift(q);
    let subsets: Vec<Vec<usize>> = (0..points.len()).combinations(d + 1).collect();
    let hits: Result<Vec<bool>> = subsets
        .par_iter()
        .map(|s| {
            let pts: Vec<Vector> = s.iter().map(|&i| lifted[i].clone()).collect();
            Ok(ray_embrace(&pts, &target)?.is_some())
        })
        .collect();
    Ok(hits?.into_iter().filter(|&h| h).count() as u64)
}

fn lift(p: &[Rational]) -> Vector {
    let mut v = p.to_vec();
    v.push(Rational::ONE);
    v
}

/// Smallest `‖Σ α_p p − b‖²` over `samples` random nonnegative `α` (plus
/// `α = 0` and each single ray at its best scale). Always an upper bound on
/// the true squared distance from `b` to `pos(C)`.
pub fn min_distance_bruteforce<R: Rng>(c: &[Vector], b: &[Rational], samples: usize, rng: &mut R) -> Rational {
    let dist = |x: &Vector| squared_norm(&sub_vec(x, b));
    let mut best = squared_norm(b);
    for p in c {
        let pp = squared_norm(p);
        let pb = dot(p, b);
        if pp != 0u32 && pb > 0u32 {
            let t = pb / pp;
            best = best.min(dist(&p.iter().map(|x| x * &t).collect()));
        }
    }
    for _ in 0..samples {
        let mut x = vec![Rational::ZERO; b.len()];
        for p in c {
            let a = Rational::from_signeds(rng.gen_range(0i64..=16), rng.gen_range(1i64..=8));
            for (xi, pi) in x.iter_mut().zip(p) {
                *xi += &a * pi;
            }
        }
        best = best.min(dist(&x));
    }
    best
}

/// Outcome of [`lp_by_enumeration`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpVerdict {
    Infeasible,
    Unbounded,
    Optimal(Rational),
}

/// Solves `min c·x, Ax = b, x ≥ 0` by visiting every basis: the optimum is
/// the best basic feasible solution, and the program is unbounded iff some
/// extreme ray of `{Ar = 0, r ≥ 0, Σr = 1}` has negative cost.
pub fn lp_by_enumeration(lp: &StandardFormLp) -> Result<LpVerdict> {
    let n = lp.a.cols();
    let r = rank(&lp.a);
    let Some(best) = best_basic_value(&lp.a, &lp.b, &lp.c, r)? else {
        return Ok(LpVerdict::Infeasible);
    };
    let mut rows = lp.a.to_rows();
    rows.push(vec![Rational::ONE; n]);
    let ray_sys = Matrix::from_rows(rows)?;
    let mut rhs = vec![Rational::ZERO; lp.a.rows()];
    rhs.push(Rational::ONE);
    let ray_rank = rank(&ray_sys);
    match best_basic_value(&ray_sys, &rhs, &lp.c, ray_rank)? {
        Some(v) if is_negative(&v) => Ok(LpVerdict::Unbounded),
        _ => Ok(LpVerdict::Optimal(best)),
    }
}

fn best_basic_value(a: &Matrix, b: &[Rational], c: &[Rational], r: usize) -> Result<Option<Rational>> {
    let n = a.cols();
    let total = binomial(n as u128, r as u128);
    if total > MAX_CANDIDATES {
        return Err(Error::SizeGuard(format!("{total} bases")));
    }
    let mut best: Option<Rational> = None;
    for s in (0..n).combinations(r) {
        let sub = a.select_columns(&s);
        if rank(&sub) != r {
            continue;
        }
        let Some(x) = solve_any(&sub, b)? else { continue };
        if x.iter().any(is_negative) {
            continue;
        }
        let v: Rational = s.iter().zip(&x).map(|(&j, xj)| &c[j] * xj).sum();
        if best.as_ref().map_or(true, |bv| v < *bv) {
            best = Some(v);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ratio, vec_of};
    use rand::SeedableRng;

    fn e1() -> CcpInstance {
        CcpInstance::new(
            2,
            vec![vec![vec_of(&[1, 0]), vec_of(&[0, 1])], vec![vec_of(&[2, 1]), vec_of(&[1, 2])]],
            vec_of(&[1, 1]),
        )
        .unwrap()
    }

    #[test]
    fn small_example_has_two_solutions() {
        let sols = enumerate_colorful_solutions(&e1()).unwrap();
        let picks: Vec<_> = sols.iter().map(|s| s.picks.clone()).collect();
        assert_eq!(picks, vec![vec![(0, 0), (1, 1)], vec![(0, 1), (1, 0)]]);
        assert!(sols.iter().all(|s| s.certifies(&e1().colors, &e1().b)));
    }

    #[test]
    fn enumeration_guard() {
        let pts = vec![vec![Rational::ONE; 7]];
        let inst = CcpInstance::new(7, vec![pts; 7], vec![Rational::ONE; 7]).unwrap();
        assert!(matches!(enumerate_colorful_solutions(&inst), Err(Error::SizeGuard(_))));
    }

    #[test]
    fn tukey_examples() {
        let line: Vec<Vector> = vec![vec_of(&[0]), vec_of(&[1]), vec_of(&[2])];
        assert_eq!(tukey_depth(&line, &vec_of(&[1])).unwrap(), 2);
        assert_eq!(tukey_depth(&line, &vec_of(&[5])).unwrap(), 0);
        assert_eq!(tukey_depth(&line, &vec_of(&[0])).unwrap(), 1);
        let sq: Vec<Vector> = vec![vec_of(&[0, 0]), vec_of(&[2, 0]), vec_of(&[0, 2]), vec_of(&[2, 2])];
        assert_eq!(tukey_depth(&sq, &vec_of(&[1, 1])).unwrap(), 2);
        assert_eq!(tukey_depth(&sq, &vec_of(&[0, 0])).unwrap(), 1);
        assert_eq!(tukey_depth(&sq, &vec_of(&[3, 3])).unwrap(), 0);
        assert_eq!(tukey_depth(&sq, &vec_of(&[1, 0])).unwrap(), 1);
        assert_eq!(tukey_depth(&[vec_of(&[1, 1])], &vec_of(&[1, 1])).unwrap(), 1);
        assert!(tukey_depth(&[vec_of(&[1, 1, 1])], &vec_of(&[0, 0, 0])).is_err());
    }

    #[test]
    fn simplicial_depth_examples() {
        let tri = vec![vec_of(&[0, 0]), vec_of(&[4, 0]), vec_of(&[0, 4])];
        assert_eq!(simplicial_depth_count(&tri, &vec_of(&[1, 1])).unwrap(), 1);
        assert_eq!(simplicial_depth_count(&tri, &vec_of(&[5, 5])).unwrap(), 0);
        let line = vec![vec_of(&[0]), vec_of(&[1]), vec_of(&[2])];
        assert_eq!(simplicial_depth_count(&line, &vec_of(&[1])).unwrap(), 3);
    }

    #[test]
    fn sampled_distance_bounds() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let c = vec![vec_of(&[1, 0]), vec_of(&[2, 1])];
        let v = min_distance_bruteforce(&c, &vec_of(&[1, 1]), 200, &mut rng);
        assert!(v >= ratio(1, 5));
        assert_eq!(v, ratio(1, 5));
        assert_eq!(min_distance_bruteforce(&[], &vec_of(&[3, 4]), 10, &mut rng), Rational::from(25));
        let c = vec![vec_of(&[1, 0]), vec_of(&[0, 1])];
        assert_eq!(min_distance_bruteforce(&c, &vec_of(&[1, 1]), 500, &mut rng), Rational::ZERO);
    }

    #[test]
    fn lp_enumeration_examples() {
        let a = Matrix::from_i64(&[&[1, 1, 1]]);
        let lp = StandardFormLp::new(a.clone(), vec_of(&[2]), vec_of(&[3, 1, 2])).unwrap();
        assert_eq!(lp_by_enumeration(&lp).unwrap(), LpVerdict::Optimal(Rational::from(2)));
        let lp = StandardFormLp::new(a, vec_of(&[-1]), vec_of(&[0, 0, 0])).unwrap();
        assert_eq!(lp_by_enumeration(&lp).unwrap(), LpVerdict::Infeasible);
        let a = Matrix::from_i64(&[&[1, -1]]);
        let lp = StandardFormLp::new(a, vec_of(&[1]), vec_of(&[0, -1])).unwrap();
        assert_eq!(lp_by_enumeration(&lp).unwrap(), LpVerdict::Unbounded);
    }
}
