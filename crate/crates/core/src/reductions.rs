//! Tverberg partitions, centerpoints and simplicial-depth points from any
//! colorful Carathéodory solver, via the tensor lifting of point sets.

use malachite::num::basic::traits::{One, Zero};

use crate::complex::{ParameterComplex, DEFAULT_C_EXPONENT};
use crate::error::{Error, Result};
use crate::exact::{is_negative, Matrix, Natural, Rational, Vector};
use crate::instance::{lift_convex_to_cone, perturb_to_general_position, CcpInstance, ColorfulChoice};
use crate::lp::{find_feasible_basis, ray_embrace, StandardFormLp};
use crate::pls::{map_back_or_repair, run_local_search, LocalSearchOptions};
use crate::walk::{run_standard_algorithm, WalkOptions};

/// Stacked blocks `q_i · p`.
pub fn tensor(p: &[Rational], q: &[Rational]) -> Vector {
    q.iter().flat_map(|qi| p.iter().map(move |x| qi * x)).collect()
}

/// `q_i = e_i` for `i < m−1` and `q_{m−1} = −𝟙`, all in `Q^{m−1}`.
pub fn lift_directions(m: usize) -> Vec<Vector> {
    let mut out: Vec<Vector> = (0..m - 1)
        .map(|i| (0..m - 1).map(|j| if i == j { Rational::ONE } else { Rational::ZERO }).collect())
        .collect();
    out.push(vec![Rational::from(-1); m - 1]);
    out
}

fn homogenize(p: &[Rational]) -> Vector {
    let mut v = p.to_vec();
    v.push(Rational::ONE);
    v
}

/// Lifts `P_1, …, P_m ⊂ Q^d` to `P̂_i = {(p;1) ⊗ q_i}` in `Q^{(d+1)(m−1)}`.
/// The hulls of the `P_i` meet iff the union of the lifts embraces the origin.
pub fn sarkaria_lift(parts: &[Vec<Vector>]) -> Result<Vec<Vec<Vector>>> {
    let m = parts.len();
    if m < 2 {
        return Err(Error::precondition("lifting needs at least two sets"));
    }
    let q = lift_directions(m);
    Ok(parts.iter().zip(&q).map(|(part, qi)| part.iter().map(|p| tensor(&homogenize(p), qi)).collect()).collect())
}

/// Whether the origin lies in the convex hull of `points`.
pub fn embraces_origin(points: &[Vector]) -> Result<bool> {
    let Some(first) = points.first() else { return Ok(false) };
    let lifted: Vec<Vector> = points.iter().map(|p| homogenize(p)).collect();
    let mut target = vec![Rational::ZERO; first.len()];
    target.push(Rational::ONE);
    Ok(ray_embrace(&lifted, &target)?.is_some())
}

/// A point common to all hulls with convex coefficients per part, or `None`
/// if the hulls do not meet. Solves for coefficients `λ_j ≥ 0` with
/// `Σλ_j = 1` and `Σλ_0 p = Σλ_j p` for every part `j`.
pub fn conv_intersection(parts: &[Vec<Vector>]) -> Result<Option<(Vector, Vec<Vector>)>> {
    if parts.is_empty() || parts.iter().any(|p| p.is_empty()) {
        return Ok(None);
    }
    let d = parts[0][0].len();
    if parts.iter().flatten().any(|p| p.len() != d) {
        return Err(Error::dim("parts mix dimensions"));
    }
    let offsets: Vec<usize> = parts.iter().scan(0, |acc, p| {
        let o = *acc;
        *acc += p.len();
        Some(o)
    })
    .collect();
    let vars: usize = parts.iter().map(|p| p.len()).sum();
    let m = parts.len();
    let rows = m + (m - 1) * d;
    let mut a = Matrix::zeros(rows, vars);
    let mut rhs = vec![Rational::ZERO; rows];
    for (j, part) in parts.iter().enumerate() {
        for i in 0..part.len() {
            a.set(j, offsets[j] + i, Rational::ONE);
        }
        rhs[j] = Rational::ONE;
    }
    for j in 1..m {
        for c in 0..d {
            let r = m + (j - 1) * d + c;
            for (i, p) in parts[0].iter().enumerate() {
                a.set(r, offsets[0] + i, p[c].clone());
            }
            for (i, p) in parts[j].iter().enumerate() {
                a.set(r, offsets[j] + i, -&p[c]);
            }
        }
    }
    let Some(sol) = find_feasible_basis(&StandardFormLp::feasibility(a, rhs)?)? else {
        return Ok(None);
    };
    let coefficients: Vec<Vector> =
        parts.iter().zip(&offsets).map(|(p, &o)| sol.x[o..o + p.len()].to_vec()).collect();
    let point = combine(&parts[0], &coefficients[0]);
    Ok(Some((point, coefficients)))
}

fn combine(points: &[Vector], coefficients: &[Rational]) -> Vector {
    let mut x = vec![Rational::ZERO; points[0].len()];
    for (p, l) in points.iter().zip(coefficients) {
        for (xi, pi) in x.iter_mut().zip(p) {
            *xi += l * pi;
        }
    }
    x
}

/// Like [`conv_intersection`], for parts that must meet.
pub fn common_intersection_point(parts: &[Vec<Vector>]) -> Result<(Vector, Vec<Vector>)> {
    conv_intersection(parts)?.ok_or_else(|| Error::internal("parts of the certificate have disjoint hulls"))
}

/// Which colorful Carathéodory solver a reduction uses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Backend {
    #[default]
    Pls,
    Ppad,
}

/// Solves an instance with the given backend; the answer certifies against
/// the instance's own `b`.
pub fn solve_ccp(inst: &CcpInstance, backend: Backend) -> Result<ColorfulChoice> {
    match backend {
        Backend::Pls => Ok(run_local_search(inst, &LocalSearchOptions::default())?.choice),
        Backend::Ppad => {
            let (ground, map) = perturb_to_general_position(inst)?;
            let pc = ParameterComplex::new(ground, DEFAULT_C_EXPONENT);
            let out = run_standard_algorithm(&pc, &WalkOptions::default())?;
            Ok(map_back_or_repair(&out.choice, &map, &LocalSearchOptions::default())?.0)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TverbergCertificate {
    /// Indices into the point set; every index appears in exactly one part.
    pub partition: Vec<Vec<usize>>,
    pub common_point: Vector,
    /// Convex coefficients per part, aligned with `partition`.
    pub coefficients: Vec<Vector>,
}

impl TverbergCertificate {
    pub fn verify(&self, points: &[Vector]) -> bool {
        let mut seen = vec![0usize; points.len()];
        for &i in self.partition.iter().flatten() {
            if i >= points.len() {
                return false;
            }
            seen[i] += 1;
        }
        if seen.iter().any(|&c| c != 1) || self.partition.len() != self.coefficients.len() {
            return false;
        }
        self.partition.iter().zip(&self.coefficients).all(|(part, lam)| {
            !part.is_empty()
                && part.len() == lam.len()
                && !lam.iter().any(is_negative)
                && lam.iter().sum::<Rational>() == 1u32
                && combine(&part.iter().map(|&i| points[i].clone()).collect::<Vec<_>>(), lam) == self.common_point
        })
    }
}

#[derive(Clone, Debug)]
pub struct TverbergOutcome {
    pub certificate: TverbergCertificate,
    pub m: usize,
    /// Points beyond the first `(m−1)(d+1)+1`, added to the first part.
    pub surplus: Vec<usize>,
}

/// Number of parts guaranteed for `n` points in `Q^d`: `⌈n/(d+1)⌉`.
pub fn tverberg_parts(n: usize, d: usize) -> usize {
    n.div_ceil(d + 1)
}

/// A partition of `points` into `⌈n/(d+1)⌉` parts whose hulls share a point.
pub fn solve_tverberg(points: &[Vector], backend: Backend) -> Result<TverbergOutcome> {
    let n = points.len();
    let Some(first) = points.first() else {
        return Err(Error::precondition("empty point set"));
    };
    let d = first.len();
    if d == 0 || points.iter().any(|p| p.len() != d) {
        return Err(Error::dim("points must share a positive dimension"));
    }
    let m = tverberg_parts(n, d);
    let used = (m - 1) * (d + 1) + 1;
    let surplus: Vec<usize> = (used..n).collect();
    let mut partition: Vec<Vec<usize>> = if m == 1 {
        vec![vec![0]]
    } else {
        let q = lift_directions(m);
        let colors: Vec<Vec<Vector>> =
            points[..used].iter().map(|p| q.iter().map(|qj| tensor(&homogenize(p), qj)).collect()).collect();
        let inst = lift_convex_to_cone(&colors)?;
        let choice = solve_ccp(&inst, backend)?;
        if !choice.is_colorful(used) {
            return Err(Error::internal("solver returned a choice that is not colorful"));
        }
        let mut parts = vec![Vec::new(); m];
        for &(i, j) in &choice.picks {
            parts[j].push(i);
        }
        parts
    };
    partition[0].extend(&surplus);
    if partition.iter().any(|p| p.is_empty()) {
        return Err(Error::internal("a Tverberg part is empty"));
    }
    let parts: Vec<Vec<Vector>> = partition.iter().map(|p| p.iter().map(|&i| points[i].clone()).collect()).collect();
    let (common_point, coefficients) = common_intersection_point(&parts)?;
    let certificate = TverbergCertificate { partition, common_point, coefficients };
    if !certificate.verify(points) {
        return Err(Error::internal("Tverberg certificate fails verification"));
    }
    Ok(TverbergOutcome { certificate, m, surplus })
}

#[derive(Clone, Debug)]
pub struct DepthPoint {
    pub point: Vector,
    /// Guaranteed lower bound on the depth measure at `point`.
    pub bound: Natural,
    pub tverberg: TverbergOutcome,
}

/// A point of Tukey depth at least `⌈n/(d+1)⌉`: every closed halfspace
/// containing the common point of a Tverberg partition meets every part.
pub fn centerpoint(points: &[Vector], backend: Backend) -> Result<DepthPoint> {
    let t = solve_tverberg(points, backend)?;
    Ok(DepthPoint { point: t.certificate.common_point.clone(), bound: Natural::from(t.m as u64), tverberg: t })
}

/// `⌈m^{d+1} / (d+1)^{d+1}⌉` with `m = ⌈n/(d+1)⌉`.
pub fn simplicial_depth_bound(n: usize, d: usize) -> Natural {
    let m = Natural::from(tverberg_parts(n, d) as u64);
    let e = d as u64 + 1;
    let num = (0..e).fold(Natural::ONE, |acc, _| acc * &m);
    let den = (0..e).fold(Natural::ONE, |acc, _| acc * Natural::from(e));
    (num + &den - Natural::ONE) / den
}

/// The centerpoint, with the simplicial-depth lower bound attached.
pub fn simplicial_depth_point(points: &[Vector], backend: Backend) -> Result<DepthPoint> {
    let d = points.first().map_or(0, |p| p.len());
    if points.len() < d + 1 {
        return Err(Error::precondition(format!("need at least {} points", d + 1)));
    }
    let mut out = centerpoint(points, backend)?;
    out.bound = simplicial_depth_bound(points.len(), d);
    Ok(out)
}
