//! Colorful Carathéodory instances, general-position checks and the
//! deterministic perturbation that turns any valid instance into an integer
//! instance with `d` points per color and no degenerate `(d-1)`-spans.

use std::fmt;

use itertools::Itertools;
use malachite::num::arithmetic::traits::{Ceiling, Pow};
use malachite::num::basic::traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{
    denominator_lcm, in_linear_span, is_integer, norm1, norm_inf, scale_vec, Matrix, Natural, Rational, Vector,
};
use crate::lp::{find_feasible_basis, ray_embrace, StandardFormLp};

/// Largest number of `(d-1)`-subsets checked exhaustively by [`verify_p2`].
pub const P2_SUBSET_LIMIT: u128 = 250_000;

/// `d` color classes in `Q^d` and a target `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CcpInstance {
    pub dim: usize,
    pub colors: Vec<Vec<Vector>>,
    pub b: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    ZeroB,
    /// 0-based color index.
    ColorMissesB(usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ZeroB => write!(f, "b is zero"),
            Violation::ColorMissesB(i) => write!(f, "color {} does not ray-embrace b", i + 1),
        }
    }
}

impl CcpInstance {
    pub fn new(dim: usize, colors: Vec<Vec<Vector>>, b: Vector) -> Result<Self> {
        let inst = CcpInstance { dim, colors, b };
        inst.check_structure()?;
        Ok(inst)
    }

    /// Dimensions only: `d` colors, nonempty, every vector of length `d`.
    pub fn check_structure(&self) -> Result<()> {
        let d = self.dim;
        if d == 0 {
            return Err(Error::dim("dimension must be positive"));
        }
        if self.b.len() != d {
            return Err(Error::dim(format!("b has {} coordinates, expected {d}", self.b.len())));
        }
        if self.colors.len() != d {
            return Err(Error::dim(format!("{} colors given, expected {d}", self.colors.len())));
        }
        for (i, c) in self.colors.iter().enumerate() {
            if c.is_empty() {
                return Err(Error::dim(format!("color {} is empty", i + 1)));
            }
            if let Some(p) = c.iter().find(|p| p.len() != d) {
                return Err(Error::dim(format!(
                    "color {} has a point with {} coordinates, expected {d}",
                    i + 1,
                    p.len()
                )));
            }
        }
        Ok(())
    }

    /// First violated requirement, if any.
    pub fn violation(&self) -> Result<Option<Violation>> {
        self.check_structure()?;
        if self.b.iter().all(|x| *x == 0u32) {
            return Ok(Some(Violation::ZeroB));
        }
        for (i, c) in self.colors.iter().enumerate() {
            if ray_embrace(c, &self.b)?.is_none() {
                return Ok(Some(Violation::ColorMissesB(i)));
            }
        }
        Ok(None)
    }

    pub fn validate(&self) -> Result<()> {
        match self.violation()? {
            None => Ok(()),
            Some(v) => Err(Error::InvalidInstance(v.to_string())),
        }
    }

    pub fn point(&self, color: usize, index: usize) -> &Vector {
        &self.colors[color][index]
    }

    pub fn all_points(&self) -> impl Iterator<Item = &Vector> {
        self.colors.iter().flatten()
    }

    pub fn is_integral(&self) -> bool {
        self.all_points().chain(std::iter::once(&self.b)).flatten().all(is_integer)
    }
}

/// Points picked from color classes together with nonnegative coefficients
/// reproducing `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorfulChoice {
    /// `(color, index within color)`, 0-based, sorted.
    pub picks: Vec<(usize, usize)>,
    pub coefficients: Vector,
}

impl ColorfulChoice {
    pub fn points<'a>(&self, colors: &'a [Vec<Vector>]) -> Vec<&'a Vector> {
        self.picks.iter().map(|&(c, j)| &colors[c][j]).collect()
    }

    /// Exact check of `Σ α_p p = b` with `α ≥ 0`.
    pub fn certifies(&self, colors: &[Vec<Vector>], b: &[Rational]) -> bool {
        if self.picks.len() != self.coefficients.len() {
            return false;
        }
        if self.picks.iter().any(|&(c, j)| c >= colors.len() || j >= colors[c].len()) {
            return false;
        }
        let pts: Vec<Vector> = self.points(colors).into_iter().cloned().collect();
        crate::lp::certifies_embrace(&pts, &self.coefficients, b)
    }

    /// One pick per color, every color present.
    pub fn is_colorful(&self, colors: usize) -> bool {
        self.picks.len() == colors && self.picks.iter().enumerate().all(|(i, &(c, _))| c == i)
    }

    pub fn count_of_color(&self, color: usize) -> usize {
        self.picks.iter().filter(|&&(c, _)| c == color).count()
    }

    /// Certifies the given picks against `b`, computing fresh coefficients.
    pub fn certify(mut picks: Vec<(usize, usize)>, colors: &[Vec<Vector>], b: &[Rational]) -> Result<Option<Self>> {
        picks.sort_unstable();
        picks.dedup();
        let pts: Vec<Vector> = picks.iter().map(|&(c, j)| colors[c][j].clone()).collect();
        Ok(ray_embrace(&pts, b)?.map(|coefficients| ColorfulChoice { picks, coefficients }))
    }
}

/// An instance satisfying the general-position properties: integer
/// coordinates, exactly `d` points per color, every color ray-embraces `b`,
/// and `b` is outside the span of every `(d-1)`-subset of all points.
///
/// Column `j` of [`GroundInstance::matrix`] is point `j % d` of color `j / d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundInstance {
    pub dim: usize,
    pub colors: Vec<Vec<Vector>>,
    pub b: Vector,
}

impl GroundInstance {
    /// Accepts an instance only if it already is in general position.
    pub fn from_instance(inst: &CcpInstance) -> Result<Self> {
        let g = GroundInstance { dim: inst.dim, colors: inst.colors.clone(), b: inst.b.clone() };
        g.check_p1()?;
        if let Some(s) = verify_p2(&g)? {
            return Err(Error::precondition(format!("b lies in the span of columns {s:?}")));
        }
        Ok(g)
    }

    pub fn columns(&self) -> usize {
        self.dim * self.dim
    }

    pub fn column(&self, j: usize) -> &Vector {
        &self.colors[j / self.dim][j % self.dim]
    }

    pub fn color_of(&self, j: usize) -> usize {
        j / self.dim
    }

    pub fn points(&self) -> Vec<Vector> {
        self.colors.iter().flatten().cloned().collect()
    }

    pub fn matrix(&self) -> Matrix {
        Matrix::from_columns(self.dim, &self.points()).expect("ground points have dimension d")
    }

    pub fn lp(&self, c: Vector) -> Result<StandardFormLp> {
        StandardFormLp::new(self.matrix(), self.b.clone(), c)
    }

    /// Largest absolute coordinate over all points and `b`.
    pub fn max_abs(&self) -> Rational {
        self.colors.iter().flatten().chain(std::iter::once(&self.b)).map(|p| norm_inf(p)).max().unwrap_or(Rational::ZERO)
    }

    pub fn as_instance(&self) -> CcpInstance {
        CcpInstance { dim: self.dim, colors: self.colors.clone(), b: self.b.clone() }
    }

    /// Integer coordinates, `d` points per color, `b ≠ 0`, every color embraces `b`.
    pub fn check_p1(&self) -> Result<()> {
        let inst = self.as_instance();
        inst.check_structure()?;
        if !inst.is_integral() {
            return Err(Error::precondition("coordinates are not all integers"));
        }
        if let Some(i) = self.colors.iter().position(|c| c.len() != self.dim) {
            return Err(Error::precondition(format!("color {} does not have exactly {} points", i + 1, self.dim)));
        }
        inst.validate()
    }
}

/// Exhaustive check that `b` avoids the span of every `(d-1)`-subset of the
/// ground points. Returns the first violating subset of column indices.
pub fn verify_p2(ground: &GroundInstance) -> Result<Option<Vec<usize>>> {
    p2_violation(&ground.points(), &ground.b)
}

/// Same check for an arbitrary point list.
pub fn p2_violation(points: &[Vector], b: &[Rational]) -> Result<Option<Vec<usize>>> {
    let d = b.len();
    let k = d.saturating_sub(1);
    let count = binomial(points.len() as u128, k as u128);
    if count > P2_SUBSET_LIMIT {
        return Err(Error::SizeGuard(format!("{count} subsets of size {k}")));
    }
    let subsets: Vec<Vec<usize>> = (0..points.len()).combinations(k).collect();
    let hits: Vec<Result<bool>> = subsets
        .par_iter()
        .map(|s| {
            let sel: Vec<Vector> = s.iter().map(|&j| points[j].clone()).collect();
            in_linear_span(&sel, b)
        })
        .collect();
    for (s, hit) in subsets.into_iter().zip(hits) {
        if hit? {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r.saturating_mul(n - i) / (i + 1);
    }
    r
}

pub fn factorial(n: usize) -> Natural {
    (1..=n as u64).fold(Natural::ONE, |acc, k| acc * Natural::from(k))
}

/// Scaling applied to each original point and to `b` by [`rescale_to_integers`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rescaling {
    pub point_scales: Vec<Vec<Rational>>,
    pub b_scale: Rational,
}

/// Scales every point by the lcm of its denominators and `b` additionally so
/// that `‖b‖₁ ≥ ‖p‖₁` for all points.
pub fn rescale_to_integers(inst: &CcpInstance) -> Result<(CcpInstance, Rescaling)> {
    inst.check_structure()?;
    let z = |p: &Vector| Rational::from(denominator_lcm(p));
    let point_scales: Vec<Vec<Rational>> = inst.colors.iter().map(|c| c.iter().map(z).collect()).collect();
    let colors: Vec<Vec<Vector>> = inst
        .colors
        .iter()
        .zip(&point_scales)
        .map(|(c, s)| c.iter().zip(s).map(|(p, f)| scale_vec(p, f)).collect())
        .collect();
    let mut b_scale = z(&inst.b);
    let b = scale_vec(&inst.b, &b_scale);
    let bn = norm1(&b);
    if bn == 0u32 {
        return Err(Error::InvalidInstance(Violation::ZeroB.to_string()));
    }
    let pmax = colors.iter().flatten().map(|p| norm1(p)).max().unwrap_or(Rational::ZERO);
    let mut b = b;
    if pmax > bn {
        let t = Rational::from((pmax / bn).ceiling());
        b = scale_vec(&b, &t);
        b_scale *= t;
    }
    Ok((CcpInstance { dim: inst.dim, colors, b }, Rescaling { point_scales, b_scale }))
}

/// Vertices of the ℓ1-sphere of radius `eps` around `p`, ordered
/// `p+εe₁, p−εe₁, p+εe₂, …`.
pub fn sphere_replace(p: &[Rational], eps: &Rational) -> Vec<Vector> {
    let mut out = Vec::with_capacity(2 * p.len());
    for i in 0..p.len() {
        for s in [eps.clone(), -eps] {
            let mut q = p.to_vec();
            q[i] += s;
            out.push(q);
        }
    }
    out
}

/// `b + (ε^d, ε^{2d}, …, ε^{d²})`.
pub fn perturb_b(b: &[Rational], eps: &Rational) -> Vector {
    let d = b.len() as u64;
    b.iter()
        .enumerate()
        .map(|(i, x)| x + eps.pow((i as u64 + 1) * d))
        .collect()
}

/// Indices of a `d`-subset of `points` that still ray-embraces `b`.
pub fn caratheodory_reduce(points: &[Vector], b: &[Rational]) -> Result<Vec<usize>> {
    let a = Matrix::from_columns(b.len(), points)?;
    let lp = StandardFormLp::feasibility(a, b.to_vec())?;
    let sol = find_feasible_basis(&lp)?
        .ok_or_else(|| Error::InvalidInstance("point set does not ray-embrace b".into()))?;
    Ok(sol.basis.indices().to_vec())
}

/// Constants of one perturbation run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerturbationInfo {
    pub rescaling: Rescaling,
    /// Largest absolute coordinate after rescaling.
    pub m: Natural,
    /// `d!·m^d`.
    pub n: Natural,
    pub epsilon: Rational,
    /// Whether `epsilon` is below the sufficient bound for every smaller value too.
    pub certified_by_bound: bool,
    /// Common factor clearing all denominators, `ε^{-d²}`.
    pub clearing_factor: Rational,
}

/// Relates ground columns to points of the original instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerturbationMap {
    pub original: CcpInstance,
    /// `origin[i][j]`: index in original color `i` of ground point `j` of color `i`.
    pub origin: Vec<Vec<usize>>,
    /// `None` when the instance was already in general position.
    pub info: Option<PerturbationInfo>,
}

impl PerturbationMap {
    pub fn identity(inst: &CcpInstance) -> Self {
        PerturbationMap {
            original: inst.clone(),
            origin: inst.colors.iter().map(|c| (0..c.len()).collect()).collect(),
            info: None,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.info.is_none()
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct PerturbOptions {
    /// Run the full pipeline even when the input is already in general position.
    pub force: bool,
}

/// Whether `inst` already satisfies the general-position properties.
pub fn is_general_position(inst: &CcpInstance) -> Result<bool> {
    let d = inst.dim;
    if !inst.is_integral() || inst.colors.iter().any(|c| c.len() != d) || inst.violation()?.is_some() {
        return Ok(false);
    }
    let pts: Vec<Vector> = inst.all_points().cloned().collect();
    match p2_violation(&pts, &inst.b) {
        Ok(v) => Ok(v.is_none()),
        Err(Error::SizeGuard(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

pub fn perturb_to_general_position(inst: &CcpInstance) -> Result<(GroundInstance, PerturbationMap)> {
    perturb_with(inst, PerturbOptions::default())
}

pub fn perturb_with(inst: &CcpInstance, opts: PerturbOptions) -> Result<(GroundInstance, PerturbationMap)> {
    inst.validate()?;
    if !opts.force && is_general_position(inst)? {
        let g = GroundInstance { dim: inst.dim, colors: inst.colors.clone(), b: inst.b.clone() };
        return Ok((g, PerturbationMap::identity(inst)));
    }
    let d = inst.dim;
    let (scaled, rescaling) = rescale_to_integers(inst)?;
    let m_rat = scaled.all_points().chain(std::iter::once(&scaled.b)).map(|p| norm_inf(p)).max().unwrap();
    let m = Natural::try_from(m_rat).map_err(|_| Error::internal("rescaled coordinates are not integers"))?;
    let m = m.max(Natural::ONE);
    let n = factorial(d) * (&m).pow(d as u64);
    // Sufficient non-degeneracy bound: every ε in (0, 1/(2M)) works.
    let big_m = factorial(d) * Natural::from(2u32).pow(d as u64 - 1) * Natural::from((d * d + 1) as u64) * (&m).pow(d as u64);
    let n_sq = &n * &n;
    let two_m = Natural::from(2u32) * &big_m;
    let eps_n = Rational::from_naturals(Natural::ONE, n_sq.clone());

    let (ground, origin, epsilon, certified) = if n_sq > two_m {
        let (g, o) = build_ground(&scaled, &eps_n)?;
        (g, o, eps_n, true)
    } else {
        let (g, o) = build_ground(&scaled, &eps_n)?;
        match verify_p2(&g) {
            Ok(None) => (g, o, eps_n, false),
            Ok(Some(_)) | Err(Error::SizeGuard(_)) => {
                let eps = Rational::from_naturals(Natural::ONE, two_m + Natural::ONE);
                let (g, o) = build_ground(&scaled, &eps)?;
                (g, o, eps, true)
            }
            Err(e) => return Err(e),
        }
    };
    ground.check_p1().map_err(|e| Error::internal(format!("perturbed instance fails P1: {e}")))?;
    match verify_p2(&ground) {
        Ok(None) => {}
        Ok(Some(s)) => return Err(Error::internal(format!("perturbed instance fails P2 on columns {s:?}"))),
        Err(Error::SizeGuard(_)) if certified => {}
        Err(e) => return Err(e),
    }
    let clearing_factor = Rational::ONE / epsilon.clone().pow((d * d) as u64);
    let info = PerturbationInfo { rescaling, m, n, epsilon, certified_by_bound: certified, clearing_factor };
    Ok((ground, PerturbationMap { original: inst.clone(), origin, info: Some(info) }))
}

/// Sphere replacement, moment-curve shift of `b`, reduction to `d` points per
/// color and a common integer scaling.
fn build_ground(scaled: &CcpInstance, eps: &Rational) -> Result<(GroundInstance, Vec<Vec<usize>>)> {
    let d = scaled.dim;
    let b_eps = perturb_b(&scaled.b, eps);
    let reduced: Vec<Result<(Vec<Vector>, Vec<usize>)>> = scaled
        .colors
        .par_iter()
        .map(|c| {
            let mut pts = Vec::with_capacity(2 * d * c.len());
            let mut src = Vec::with_capacity(2 * d * c.len());
            for (j, p) in c.iter().enumerate() {
                for q in sphere_replace(p, eps) {
                    pts.push(q);
                    src.push(j);
                }
            }
            let keep = caratheodory_reduce(&pts, &b_eps)?;
            if keep.len() != d {
                return Err(Error::internal(format!("reduced color has {} points, expected {d}", keep.len())));
            }
            Ok((keep.iter().map(|&k| pts[k].clone()).collect(), keep.iter().map(|&k| src[k]).collect()))
        })
        .collect();
    let scale = Rational::ONE / eps.clone().pow((d * d) as u64);
    let mut colors = Vec::with_capacity(d);
    let mut origin = Vec::with_capacity(d);
    for r in reduced {
        let (pts, src) = r?;
        colors.push(pts.iter().map(|p| scale_vec(p, &scale)).collect());
        origin.push(src);
    }
    let b = scale_vec(&b_eps, &scale);
    Ok((GroundInstance { dim: d, colors, b }, origin))
}

/// Replaces ground picks by their original points and re-certifies against the
/// original `b`. This can fail when the original points are linearly
/// dependent: moving them back can carry `b` out of their cone.
pub fn map_solution_back(choice: &ColorfulChoice, map: &PerturbationMap) -> Result<ColorfulChoice> {
    let picks: Vec<(usize, usize)> = choice.picks.iter().map(|&(c, j)| (c, map.origin[c][j])).collect();
    if map.is_identity() {
        if !choice.certifies(&map.original.colors, &map.original.b) {
            return Err(Error::internal("choice does not certify against the original instance"));
        }
        return Ok(choice.clone());
    }
    let mapped = picks.clone();
    ColorfulChoice::certify(picks, &map.original.colors, &map.original.b)?.ok_or_else(|| {
        Error::TheoremViolation(format!("mapped choice {mapped:?} does not ray-embrace the original b"))
    })
}

/// Appends a coordinate 1 to every point; `b = e_{d+1}`.
/// Expects `d+1` colors in `Q^d`, each containing the origin in its convex hull.
pub fn lift_convex_to_cone(colors: &[Vec<Vector>]) -> Result<CcpInstance> {
    let n = colors.len();
    if n == 0 {
        return Err(Error::dim("no colors"));
    }
    let d = n - 1;
    let lifted: Vec<Vec<Vector>> = colors
        .iter()
        .map(|c| {
            c.iter()
                .map(|p| {
                    if p.len() != d {
                        return Err(Error::dim(format!("point of dimension {}, expected {d}", p.len())));
                    }
                    let mut q = p.clone();
                    q.push(Rational::ONE);
                    Ok(q)
                })
                .collect::<Result<Vec<Vector>>>()
        })
        .collect::<Result<_>>()?;
    let mut b = vec![Rational::ZERO; n];
    b[d] = Rational::ONE;
    CcpInstance::new(n, lifted, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ratio, vec_of};

    fn e1() -> CcpInstance {
        CcpInstance::new(
            2,
            vec![vec![vec_of(&[1, 0]), vec_of(&[0, 1])], vec![vec_of(&[2, 1]), vec_of(&[1, 2])]],
            vec_of(&[1, 1]),
        )
        .unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(e1().validate().is_ok());
        let bad = CcpInstance::new(2, vec![vec![vec_of(&[1, 0])], vec![vec_of(&[0, 1])]], vec_of(&[0, 1])).unwrap();
        assert_eq!(bad.violation().unwrap(), Some(Violation::ColorMissesB(0)));
        let zero = CcpInstance::new(2, e1().colors, vec_of(&[0, 0])).unwrap();
        assert_eq!(zero.violation().unwrap(), Some(Violation::ZeroB));
        assert!(CcpInstance::new(2, vec![vec![vec_of(&[1, 0])]], vec_of(&[1, 1])).is_err());
    }

    #[test]
    fn rescale_examples() {
        let inst = CcpInstance::new(
            2,
            vec![vec![vec![ratio(1, 2), ratio(3, 4)]], vec![vec_of(&[1, 1])]],
            vec_of(&[5, 5]),
        )
        .unwrap();
        let (s, r) = rescale_to_integers(&inst).unwrap();
        assert_eq!(s.colors[0][0], vec_of(&[2, 3]));
        assert_eq!(r.point_scales[0][0], Rational::from(4));
        assert_eq!(s.b, vec_of(&[5, 5]));
        let (s, r) = rescale_to_integers(&e1()).unwrap();
        assert_eq!(s.colors, e1().colors);
        assert_eq!(s.b, vec_of(&[2, 2]));
        assert_eq!(r.b_scale, Rational::from(2));
    }

    #[test]
    fn sphere_and_moment_curve() {
        let s = sphere_replace(&vec_of(&[1, 0]), &ratio(1, 64));
        assert_eq!(
            s,
            vec![
                vec![ratio(65, 64), ratio(0, 1)],
                vec![ratio(63, 64), ratio(0, 1)],
                vec![ratio(1, 1), ratio(1, 64)],
                vec![ratio(1, 1), ratio(-1, 64)],
            ]
        );
        assert_eq!(sphere_replace(&vec_of(&[5]), &Rational::ONE), vec![vec_of(&[6]), vec_of(&[4])]);
        assert_eq!(
            perturb_b(&vec_of(&[1, 1]), &ratio(1, 64)),
            vec![ratio(4097, 4096), ratio(16777217, 16777216)]
        );
        assert_eq!(perturb_b(&vec_of(&[1, 1]), &Rational::ZERO), vec_of(&[1, 1]));
        assert_eq!(perturb_b(&vec_of(&[3]), &ratio(1, 2)), vec![ratio(7, 2)]);
    }

    #[test]
    fn caratheodory_examples() {
        let c = vec![vec_of(&[1, 0]), vec_of(&[0, 1]), vec_of(&[1, 1])];
        let keep = caratheodory_reduce(&c, &vec_of(&[2, 2])).unwrap();
        assert_eq!(keep.len(), 2);
        let sel: Vec<Vector> = keep.iter().map(|&k| c[k].clone()).collect();
        assert!(ray_embrace(&sel, &vec_of(&[2, 2])).unwrap().is_some());
    }

    #[test]
    fn p2_examples() {
        let g = GroundInstance::from_instance(&e1()).unwrap();
        assert_eq!(verify_p2(&g).unwrap(), None);
        let pts = vec![vec_of(&[1, 0]), vec_of(&[0, 1]), vec_of(&[2, 1]), vec_of(&[1, 2]), vec_of(&[2, 2])];
        assert_eq!(p2_violation(&pts, &vec_of(&[1, 1])).unwrap(), Some(vec![4]));
    }

    #[test]
    fn fast_path_keeps_instance() {
        let (g, map) = perturb_to_general_position(&e1()).unwrap();
        assert!(map.is_identity());
        assert_eq!(g.colors, e1().colors);
    }

    #[test]
    fn forced_pipeline_on_small_instance() {
        let (g, map) = perturb_with(&e1(), PerturbOptions { force: true }).unwrap();
        let info = map.info.as_ref().unwrap();
        assert_eq!(info.n, Natural::from(8u32));
        assert_eq!(info.epsilon, ratio(1, 64));
        assert_eq!(info.clearing_factor, Rational::from(64i64.pow(4)));
        assert!(g.check_p1().is_ok());
        assert_eq!(verify_p2(&g).unwrap(), None);
    }

    #[test]
    fn lift_examples() {
        let inst = lift_convex_to_cone(&[vec![vec_of(&[3, 4])], vec![vec_of(&[0, 0])], vec![vec_of(&[1, 1])]]).unwrap();
        assert_eq!(inst.colors[0][0], vec_of(&[3, 4, 1]));
        assert_eq!(inst.b, vec_of(&[0, 0, 1]));
        let sym: Vec<Vector> = vec![vec_of(&[1, 0]), vec_of(&[-1, 0]), vec_of(&[0, 1]), vec_of(&[0, -1])];
        let inst = lift_convex_to_cone(&[sym.clone(), sym.clone(), sym]).unwrap();
        assert!(inst.validate().is_ok());
    }
}
