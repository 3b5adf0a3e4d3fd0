//! Binary search for a `(k, d−k)` split: `k` points of `C1` and `d−k` points
//! of `C2` whose cone contains `b`.
//!
//! The search runs along the segment `μ(t) = (1−t)e₁ + t·e₂`. At each `t` the
//! color-weighted program (only the columns of `C1` and `C2` can be optimal on
//! this segment) has a unique lexicographic optimum; its `C1`-count is `d` at
//! `t = 0`, `0` at `t = 1`, and changes by at most one between adjacent
//! optimal vertices.

use itertools::Itertools;
use malachite::num::arithmetic::traits::{Floor, Pow};
use malachite::num::basic::traits::{One, Zero};
use malachite::num::logic::traits::SignificantBits;

use crate::complex::project_to_m;
use crate::error::{Error, Result};
use crate::exact::{norm_inf, Matrix, Natural, Rational, Vector};
use crate::instance::{
    factorial, map_solution_back, p2_violation, perturb_to_general_position, rescale_to_integers, CcpInstance,
    ColorfulChoice, PerturbationMap,
};
use crate::lp::{basic_solution, maximal_optimal_face, optimize_with, Basis, StandardFormLp, TieBreak};

/// The segment problem over `2d` columns: `C1` first, then `C2`.
#[derive(Clone, Debug)]
pub struct SplitProblem {
    pub d: usize,
    pub k: usize,
    pub columns: Vec<Vector>,
    pub b: Vector,
    /// `d!·m^d` for the largest absolute coordinate `m`.
    pub n: Natural,
    /// `d·N²`.
    pub dn2: Rational,
    a: Matrix,
}

impl SplitProblem {
    /// Expects integer coordinates.
    pub fn new(c1: &[Vector], c2: &[Vector], b: &[Rational], k: usize) -> Result<Self> {
        let d = b.len();
        let columns: Vec<Vector> = c1.iter().chain(c2).cloned().collect();
        let m = columns.iter().map(|c| norm_inf(c)).chain(std::iter::once(norm_inf(b))).max().unwrap_or(Rational::ONE);
        let m = Natural::try_from(m).map_err(|_| Error::precondition("split coordinates must be integers"))?.max(Natural::ONE);
        let n = factorial(d) * m.pow(d as u64);
        let dn2 = Rational::from(Natural::from(d as u64) * &n * &n);
        let a = Matrix::from_columns(d, &columns)?;
        Ok(SplitProblem { d, k, columns, b: b.to_vec(), n, dn2, a })
    }

    fn count(&self, basis: &[usize]) -> usize {
        basis.iter().filter(|&&j| j < self.d).count()
    }

    /// Costs at `μ(t)` mapped onto the cube: `1 + dN²(1 − M(μ)_i)`.
    pub fn costs(&self, t: &Rational) -> Result<Vector> {
        let mu = project_to_m(&[Rational::ONE - t, t.clone()])?;
        Ok((0..2 * self.d)
            .map(|j| Rational::ONE + &self.dn2 * (Rational::ONE - &mu[j / self.d]))
            .collect())
    }

    fn lp(&self, t: &Rational) -> Result<StandardFormLp> {
        StandardFormLp::new(self.a.clone(), self.b.clone(), self.costs(t)?)
    }

    /// Bits of a common bound on the denominators of all breakpoints
    /// `t ∈ [0, 1]` where the optimal vertex changes: `2(d+1)·N·(1 + dN²)`.
    pub fn breakpoint_denominator(&self) -> Rational {
        Rational::from(2 * (self.d as u64 + 1)) * Rational::from(&self.n) * (Rational::ONE + &self.dn2)
    }

    pub fn breakpoint_bits(&self) -> u64 {
        Natural::try_from(self.breakpoint_denominator()).expect("integer bound").significant_bits()
    }

    /// Adjacent breakpoints are at least `2^{-2B}` apart, so within `2B`
    /// halvings the bracket either meets a region of the right count or
    /// shrinks around a single breakpoint, which is then recovered exactly.
    pub fn iteration_cap(&self) -> u64 {
        2 * self.breakpoint_bits() + 8
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// A feasible basis with exactly `k` columns of `C1` (column indices into the problem).
    Found(Vec<usize>),
    /// The target lies at smaller `t`.
    Left,
    /// The target lies at larger `t`.
    Right,
}

/// Current bracket and the `C1`-counts observed at its ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchInterval {
    pub t_lo: Rational,
    pub t_hi: Rational,
    pub count_lo: usize,
    pub count_hi: usize,
}

/// Solves the program at `t` and decides where the `k`-region lies. When `t`
/// sits on a breakpoint the optimal face is an edge (or, for instances that
/// are degenerate on the segment, a larger face) and all its vertices are
/// tried.
pub fn classify_midpoint(p: &SplitProblem, t: &Rational, warm: Option<&Basis>) -> Result<(Verdict, Basis, usize)> {
    let lp = p.lp(t)?;
    let opt = optimize_with(&lp, warm, TieBreak::Lexicographic)?;
    let basis = opt.solution.basis;
    let count = p.count(basis.indices());
    let face = maximal_optimal_face(&lp, &basis)?;
    let verdict_of = |c: usize| {
        if c > p.k {
            Verdict::Right
        } else {
            Verdict::Left
        }
    };
    if count == p.k {
        return Ok((Verdict::Found(basis.indices().to_vec()), basis, count));
    }
    if face.len() == p.d {
        return Ok((verdict_of(count), basis, count));
    }
    let ends = face_vertices(&lp, face.indices(), p.d)?;
    if face.len() == p.d + 1 {
        if ends.len() != 2 {
            return Err(Error::audit(format!("optimal edge at t = {t} has {} feasible bases", ends.len())));
        }
        if p.count(&ends[0]).abs_diff(p.count(&ends[1])) > 1 {
            return Err(Error::audit(format!("edge endpoints at t = {t} differ in more than one column")));
        }
    }
    match ends.into_iter().find(|s| p.count(s) == p.k) {
        Some(s) => Ok((Verdict::Found(s), basis, count)),
        None => Ok((verdict_of(count), basis, count)),
    }
}

/// Feasible bases inside an optimal face support.
fn face_vertices(lp: &StandardFormLp, support: &[usize], d: usize) -> Result<Vec<Vec<usize>>> {
    let total = crate::instance::binomial(support.len() as u128, d as u128);
    if total > 100_000 {
        return Err(Error::SizeGuard(format!("{total} candidate bases in an optimal face")));
    }
    let mut out = Vec::new();
    for s in support.iter().copied().combinations(d) {
        match basic_solution(lp, &Basis::new(s.clone())) {
            Ok(sol) if sol.feasible => out.push(s),
            Ok(_) | Err(Error::NotABasis(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// The rational with the smallest denominator in the open interval `(a, b)`.
pub fn simplest_between(a: &Rational, b: &Rational) -> Rational {
    let fl = Rational::from(a.floor());
    let next = &fl + Rational::ONE;
    if next < *b {
        return next;
    }
    let hi_inv = Rational::ONE / (b - &fl);
    if *a == fl {
        return fl + Rational::ONE / (Rational::from(hi_inv.floor()) + Rational::ONE);
    }
    let lo_inv = Rational::ONE / (a - &fl);
    fl + Rational::ONE / simplest_between(&hi_inv, &lo_inv)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitPath {
    /// `C1 ∪ C2` was already in general position.
    Direct,
    /// Dummy colors were added and the perturbation pipeline applied.
    Perturbed,
}

#[derive(Clone, Debug)]
pub struct SplitOutcome {
    /// Picks use color 0 for `C1` and 1 for `C2`.
    pub choice: ColorfulChoice,
    pub iterations: u64,
    pub cap: u64,
    pub path: SplitPath,
    pub intervals: Vec<SearchInterval>,
}

/// Binary search over `t`; returns the basis found, the iteration count and
/// the bracket history.
pub fn search(p: &SplitProblem) -> Result<(Vec<usize>, u64, Vec<SearchInterval>)> {
    let cap = p.iteration_cap();
    let (v0, b0, c0) = classify_midpoint(p, &Rational::ZERO, None)?;
    if let Verdict::Found(s) = v0 {
        return Ok((s, 0, Vec::new()));
    }
    let (v1, _, c1) = classify_midpoint(p, &Rational::ONE, Some(&b0))?;
    if let Verdict::Found(s) = v1 {
        return Ok((s, 0, Vec::new()));
    }
    if c0 <= p.k || c1 >= p.k {
        return Err(Error::audit(format!("endpoint counts {c0} and {c1} do not bracket {}", p.k)));
    }
    let mut iv = SearchInterval { t_lo: Rational::ZERO, t_hi: Rational::ONE, count_lo: c0, count_hi: c1 };
    let mut history = vec![iv.clone()];
    let mut warm = b0;
    let two = Rational::from(2);
    let k_bound = p.breakpoint_denominator();
    let k_sq = &k_bound * &k_bound;
    for it in 1..=cap {
        let mid = (&iv.t_lo + &iv.t_hi) / &two;
        let (v, basis, count) = classify_midpoint(p, &mid, Some(&warm))?;
        warm = basis;
        match v {
            Verdict::Found(s) => return Ok((s, it, history)),
            Verdict::Right => {
                iv.t_lo = mid;
                iv.count_lo = count;
            }
            Verdict::Left => {
                iv.t_hi = mid;
                iv.count_hi = count;
            }
        }
        if iv.count_lo <= p.k || iv.count_hi >= p.k {
            return Err(Error::internal("bracket lost its straddle"));
        }
        history.push(iv.clone());
        if (&iv.t_hi - &iv.t_lo) * &k_sq < 1u32 {
            let t = simplest_between(&iv.t_lo, &iv.t_hi);
            if Rational::from(t.to_denominator()) > k_bound {
                return Err(Error::audit("bracket holds no breakpoint"));
            }
            let (v, _, _) = classify_midpoint(p, &t, Some(&warm))?;
            return match v {
                Verdict::Found(s) => Ok((s, it, history)),
                _ => Err(Error::audit(format!("no {}-split among the optimal vertices at t = {t}", p.k))),
            };
        }
    }
    Err(Error::IterationCap { cap, detail: format!("no {}-split found", p.k) })
}

/// A choice of exactly `k` points of `C1` and `d−k` of `C2` that ray-embraces `b`.
pub fn find_split(c1: &[Vector], c2: &[Vector], b: &[Rational], k: usize) -> Result<SplitOutcome> {
    let d = b.len();
    if d == 0 || k == 0 || k >= d {
        return Err(Error::precondition(format!("split size k = {k} must lie in 1..{d}")));
    }
    if c1.len() != d || c2.len() != d {
        return Err(Error::precondition(format!("both classes need exactly {d} points")));
    }
    let mut colors = vec![c1.to_vec(), c2.to_vec()];
    colors.extend((2..d).map(|_| vec![b.to_vec()]));
    let inst = CcpInstance::new(d, colors, b.to_vec())?;
    inst.validate()?;

    let (scaled, _) = rescale_to_integers(&inst)?;
    let pair: Vec<Vector> = scaled.colors[0].iter().chain(&scaled.colors[1]).cloned().collect();
    let direct = matches!(p2_violation(&pair, &scaled.b), Ok(None));
    let (problem, map) = if direct {
        (SplitProblem::new(&scaled.colors[0], &scaled.colors[1], &scaled.b, k)?, None)
    } else {
        let (ground, map) = perturb_to_general_position(&inst)?;
        (SplitProblem::new(&ground.colors[0], &ground.colors[1], &ground.b, k)?, Some(map))
    };
    let cap = problem.iteration_cap();
    let (basis, iterations, intervals) = search(&problem)?;
    let picks: Vec<(usize, usize)> = basis.iter().map(|&j| (j / d, j % d)).collect();
    let choice = match &map {
        None => ColorfulChoice::certify(picks, &inst.colors, b)?,
        Some(map) => Some(mapped_back(picks, &problem, map, k)?),
    }
    .ok_or_else(|| Error::internal("split basis does not ray-embrace b"))?;
    if choice.count_of_color(0) != k || choice.count_of_color(1) != d - k {
        return Err(Error::internal(format!("split has counts {} and {}", choice.count_of_color(0), choice.count_of_color(1))));
    }
    let path = if direct { SplitPath::Direct } else { SplitPath::Perturbed };
    Ok(SplitOutcome { choice, iterations, cap, path, intervals })
}

/// Maps a ground split to original points. Two ground points can share an
/// original point; unused originals with zero weight restore the exact counts.
fn mapped_back(picks: Vec<(usize, usize)>, p: &SplitProblem, map: &PerturbationMap, k: usize) -> Result<ColorfulChoice> {
    let ground_choice = ColorfulChoice::certify(picks, &[p.columns[..p.d].to_vec(), p.columns[p.d..].to_vec()], &p.b)?
        .ok_or_else(|| Error::internal("ground split does not embrace the ground b"))?;
    let back = map_solution_back(&ground_choice, map)?;
    let mut picks = back.picks;
    for (color, want) in [(0usize, k), (1, p.d - k)] {
        let unused: Vec<usize> = (0..map.original.colors[color].len()).filter(|j| !picks.contains(&(color, *j))).collect();
        let mut free = unused.into_iter();
        while picks.iter().filter(|&&(c, _)| c == color).count() < want {
            let j = free.next().ok_or_else(|| Error::internal("not enough points to pad the split"))?;
            picks.push((color, j));
        }
    }
    ColorfulChoice::certify(picks, &map.original.colors, &map.original.b)?
        .ok_or_else(|| Error::internal("padded split does not embrace b"))
}
