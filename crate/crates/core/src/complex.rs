//! Parameter space of the color-weighted linear program.
//!
//! For `μ ∈ Q^d` the cost of column `j` (color `i = j / d`) is
//! `1 + (1 − μ_i)·dN² + ε^{j+1}`. For a fixed feasible basis every reduced
//! cost is affine in `μ`, so the region where a face is optimal is a
//! polyhedron. Regions intersected with faces of the cube `M` form the
//! complex walked by [`crate::walk`]; its cells are named by chains of
//! [`ChainEntry`] values.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use malachite::num::arithmetic::traits::Pow;
use malachite::num::basic::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{dot, is_negative, norm1, norm_inf, rref, solve_square, Matrix, Natural, Rational, Vector};
use crate::instance::{factorial, GroundInstance};
use crate::lp::{maximal_optimal_face, optimize, AffineSystem, Basis, FaceSupport};

pub const DEFAULT_C_EXPONENT: u32 = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedConstants {
    pub d: usize,
    /// Largest absolute coordinate of the ground instance.
    pub m: Natural,
    /// `d!·m^d`.
    pub n: Natural,
    pub c_exponent: u32,
    /// `N^{-c·d}`.
    pub eps: Rational,
    /// `d·N²`.
    pub dn2: Rational,
}

pub fn derive_constants(ground: &GroundInstance, c_exponent: u32) -> DerivedConstants {
    let d = ground.dim;
    let m = Natural::try_from(ground.max_abs()).expect("ground coordinates are integers").max(Natural::ONE);
    let n = factorial(d) * (&m).pow(d as u64);
    let eps = Rational::from_naturals(Natural::ONE, (&n).pow(u64::from(c_exponent) * d as u64));
    let dn2 = Rational::from(Natural::from(d as u64) * &n * &n);
    DerivedConstants { d, m, n, c_exponent, eps, dn2 }
}

/// `μ`-independent part of each cost: `1 + dN² + ε^{j+1}`.
fn base_costs(k: &DerivedConstants) -> Vector {
    let mut out = Vec::with_capacity(k.d * k.d);
    let mut p = k.eps.clone();
    for _ in 0..k.d * k.d {
        out.push(Rational::ONE + &k.dn2 + &p);
        p *= &k.eps;
    }
    out
}

pub fn cost_vector(k: &DerivedConstants, mu: &[Rational]) -> Vector {
    base_costs(k)
        .into_iter()
        .enumerate()
        .map(|(j, c)| c - &k.dn2 * &mu[j / k.d])
        .collect()
}

/// Color with the most columns in `s`; ties go to the smallest color.
pub fn label_of_support(d: usize, s: &[usize]) -> usize {
    let mut counts = vec![0usize; d];
    for &j in s {
        counts[j / d] += 1;
    }
    let best = *counts.iter().max().unwrap_or(&0);
    counts.iter().position(|&c| c == best).unwrap_or(0)
}

pub fn project_to_m(mu: &[Rational]) -> Result<Vector> {
    let n = norm_inf(mu);
    if n == 0u32 || mu.iter().any(is_negative) {
        return Err(Error::precondition("projection needs a nonzero nonnegative vector"));
    }
    Ok(mu.iter().map(|x| x / &n).collect())
}

pub fn project_to_delta(mu: &[Rational]) -> Result<Vector> {
    let n = norm1(mu);
    if n == 0u32 || mu.iter().any(is_negative) {
        return Err(Error::precondition("projection needs a nonzero nonnegative vector"));
    }
    Ok(mu.iter().map(|x| x / &n).collect())
}

/// Face of `M`: coordinates in `i0` fixed to 0, in `i1` fixed to 1. 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeFace {
    i0: Vec<usize>,
    i1: Vec<usize>,
}

impl CubeFace {
    pub fn new(mut i0: Vec<usize>, mut i1: Vec<usize>) -> Result<Self> {
        i0.sort_unstable();
        i0.dedup();
        i1.sort_unstable();
        i1.dedup();
        if i1.is_empty() {
            return Err(Error::precondition("a face of M fixes at least one coordinate to 1"));
        }
        if i0.iter().any(|x| i1.contains(x)) {
            return Err(Error::precondition("coordinates fixed to both 0 and 1"));
        }
        Ok(CubeFace { i0, i1 })
    }

    pub fn i0(&self) -> &[usize] {
        &self.i0
    }

    pub fn i1(&self) -> &[usize] {
        &self.i1
    }

    pub fn contains(&self, mu: &[Rational]) -> bool {
        mu.iter().enumerate().all(|(i, x)| {
            if self.i0.contains(&i) {
                *x == 0u32
            } else if self.i1.contains(&i) {
                *x == 1u32
            } else {
                !is_negative(x) && *x <= 1u32
            }
        })
    }
}

/// `(support, I₀, I₁)` naming the cell `Φ(f) ∩ g(I₀, I₁)`. All sets sorted, 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainEntry {
    pub s: Vec<usize>,
    pub i0: Vec<usize>,
    pub i1: Vec<usize>,
}

impl ChainEntry {
    pub fn new(s: Vec<usize>, i0: Vec<usize>, i1: Vec<usize>) -> Self {
        ChainEntry { s: sorted(s), i0: sorted(i0), i1: sorted(i1) }
    }

    pub fn face(&self) -> Result<CubeFace> {
        CubeFace::new(self.i0.clone(), self.i1.clone())
    }

    fn is_well_formed(&self, d: usize) -> bool {
        is_strict(&self.s)
            && is_strict(&self.i0)
            && is_strict(&self.i1)
            && self.s.iter().all(|&j| j < d * d)
            && self.i0.iter().chain(&self.i1).all(|&i| i < d)
            && !self.i1.is_empty()
            && self.i0.iter().all(|x| !self.i1.contains(x))
    }

    /// Coordinates fixed by neither index set.
    pub fn free(&self, d: usize) -> Vec<usize> {
        (0..d).filter(|i| !self.i0.contains(i) && !self.i1.contains(i)).collect()
    }
}

impl fmt::Display for ChainEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = |v: &[usize]| v.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({{{}}},{{{}}},{{{}}})", one(&self.s), one(&self.i0), one(&self.i1))
    }
}

/// How `lower` arises from `upper` one step down a chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    /// One more column in the support.
    AddColumn(usize),
    /// One more coordinate fixed to 0.
    FixZero(usize),
    /// One more coordinate fixed to 1.
    FixOne(usize),
}

/// The step relating two consecutive chain entries, if they are related.
pub fn step_between(upper: &ChainEntry, lower: &ChainEntry) -> Option<Step> {
    if lower.i0 == upper.i0 && lower.i1 == upper.i1 {
        let extra = difference(&lower.s, &upper.s);
        if lower.s.len() == upper.s.len() + 1 && extra.len() == 1 {
            return Some(Step::AddColumn(extra[0]));
        }
        return None;
    }
    if lower.s != upper.s {
        return None;
    }
    let fixed_upper = |i: &usize| upper.i0.contains(i) || upper.i1.contains(i);
    if lower.i1 == upper.i1 && lower.i0.len() == upper.i0.len() + 1 {
        let extra = difference(&lower.i0, &upper.i0);
        if extra.len() == 1 && !fixed_upper(&extra[0]) {
            return Some(Step::FixZero(extra[0]));
        }
    }
    if lower.i0 == upper.i0 && lower.i1.len() == upper.i1.len() + 1 {
        let extra = difference(&lower.i1, &upper.i1);
        if extra.len() == 1 && !fixed_upper(&extra[0]) {
            return Some(Step::FixOne(extra[0]));
        }
    }
    None
}

/// `(Q₀, …, Q_{k−1})`, with `Q₀` naming a vertex and `Q_{k−1}` a `(k−1)`-cell.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexEncoding {
    pub entries: Vec<ChainEntry>,
}

impl SimplexEncoding {
    pub fn new(entries: Vec<ChainEntry>) -> Self {
        SimplexEncoding { entries }
    }

    pub fn level(&self) -> usize {
        self.entries.len()
    }

    pub fn top(&self) -> &ChainEntry {
        self.entries.last().expect("encodings are nonempty")
    }

    pub fn labels(&self, d: usize) -> Vec<usize> {
        self.entries.iter().map(|e| label_of_support(d, &e.s)).collect()
    }

    /// Syntax plus the chain relations; no linear programming.
    pub fn is_structurally_valid(&self, d: usize) -> bool {
        let k = self.entries.len();
        if k == 0 || k > d || self.entries.iter().any(|e| !e.is_well_formed(d)) {
            return false;
        }
        let top = self.top();
        if top.i0 != (k..d).collect::<Vec<_>>() || top.i1.len() != 1 || top.s.len() != d {
            return false;
        }
        (1..k).all(|i| step_between(&self.entries[i], &self.entries[i - 1]).is_some())
    }
}

impl fmt::Display for SimplexEncoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

/// Reduced costs of a feasible basis as affine functions `r_j(μ) = κ_j + g_j·μ`.
#[derive(Clone, Debug)]
pub struct ReducedCostForms {
    pub basis: Vec<usize>,
    pub kappa: Vector,
    pub grad: Vec<Vector>,
}

impl ReducedCostForms {
    pub fn eval(&self, j: usize, mu: &[Rational]) -> Rational {
        &self.kappa[j] + dot(&self.grad[j], mu)
    }
}

/// One linear constraint `a·μ = β` or `a·μ ≤ β` over the parameter vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub a: Vector,
    pub beta: Rational,
}

impl Constraint {
    fn slack(&self, mu: &[Rational]) -> Rational {
        &self.beta - dot(&self.a, mu)
    }
}

/// The region of one chain entry: `r_j = 0` on `S∖B`, `r_j ≥ 0` off `S`,
/// and `μ ∈ g(I₀, I₁)`.
#[derive(Clone, Debug)]
pub struct RegionSystem {
    /// Tight constraints, tagged with the step that introduced them when known.
    pub equalities: Vec<(Constraint, Tag)>,
    pub inequalities: Vec<(Constraint, Tag)>,
}

/// Origin of a region constraint.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tag {
    ReducedCost(usize),
    Lower(usize),
    Upper(usize),
}

impl RegionSystem {
    pub fn to_affine(&self, d: usize) -> AffineSystem {
        let mut sys = AffineSystem::new(d);
        for (c, _) in &self.equalities {
            sys.eq(c.a.clone(), c.beta.clone());
        }
        for (c, _) in &self.inequalities {
            sys.le(c.a.clone(), c.beta.clone());
        }
        sys
    }

    pub fn holds_at(&self, mu: &[Rational]) -> bool {
        self.equalities.iter().all(|(c, _)| c.slack(mu) == 0u32)
            && self.inequalities.iter().all(|(c, _)| !is_negative(&c.slack(mu)))
    }
}

/// Ground instance together with its derived constants and a cache of
/// reduced-cost forms keyed by basis.
pub struct ParameterComplex {
    ground: GroundInstance,
    constants: DerivedConstants,
    base: Vector,
    forms: Mutex<HashMap<Vec<usize>, Option<Arc<ReducedCostForms>>>>,
}

impl ParameterComplex {
    pub fn new(ground: GroundInstance, c_exponent: u32) -> Self {
        let constants = derive_constants(&ground, c_exponent);
        let base = base_costs(&constants);
        ParameterComplex { ground, constants, base, forms: Mutex::new(HashMap::new()) }
    }

    pub fn ground(&self) -> &GroundInstance {
        &self.ground
    }

    pub fn constants(&self) -> &DerivedConstants {
        &self.constants
    }

    pub fn dim(&self) -> usize {
        self.ground.dim
    }

    pub fn cost_vector(&self, mu: &[Rational]) -> Vector {
        let d = self.dim();
        self.base.iter().enumerate().map(|(j, c)| c - &self.constants.dn2 * &mu[j / d]).collect()
    }

    /// Optimal basis and maximal optimal face at `μ ∈ M`. Checks that colors
    /// with zero weight do not enter the support.
    pub fn optimal_face_at(&self, mu: &[Rational]) -> Result<(Basis, FaceSupport)> {
        let d = self.dim();
        if mu.len() != d {
            return Err(Error::dim(format!("parameter of length {}, expected {d}", mu.len())));
        }
        if mu.iter().any(is_negative) || norm_inf(mu) != 1u32 {
            return Err(Error::precondition("parameter vector is not in M"));
        }
        let lp = self.ground.lp(self.cost_vector(mu))?;
        let sol = match optimize(&lp) {
            Err(Error::Infeasible) => return Err(Error::InvalidInstance("ground program is infeasible".into())),
            r => r?,
        };
        let face = maximal_optimal_face(&lp, &sol.basis)?;
        if let Some(&j) = face.indices().iter().find(|&&j| mu[j / d] == 0u32) {
            return Err(Error::audit(format!("column {} of zero-weight color {} is optimal", j + 1, j / d + 1)));
        }
        Ok((sol.basis, face))
    }

    /// Reduced-cost forms of `basis`, or `None` if it is not a feasible basis.
    pub fn forms(&self, basis: &[usize]) -> Result<Option<Arc<ReducedCostForms>>> {
        if let Some(f) = self.forms.lock().expect("cache lock").get(basis) {
            return Ok(f.clone());
        }
        let f = self.compute_forms(basis)?.map(Arc::new);
        self.forms.lock().expect("cache lock").insert(basis.to_vec(), f.clone());
        Ok(f)
    }

    fn compute_forms(&self, basis: &[usize]) -> Result<Option<ReducedCostForms>> {
        let d = self.dim();
        let n = d * d;
        if basis.len() != d || !is_strict(basis) || basis.iter().any(|&j| j >= n) {
            return Ok(None);
        }
        let a = self.ground.matrix();
        let rows: Vec<Vector> = (0..d)
            .map(|i| {
                let mut r: Vector = basis.iter().map(|&j| a[(i, j)].clone()).collect();
                r.extend(a.row(i).iter().cloned());
                r.push(self.ground.b[i].clone());
                r
            })
            .collect();
        let (red, pivots) = rref(&Matrix::from_rows(rows)?);
        if pivots != (0..d).collect::<Vec<_>>() {
            return Ok(None);
        }
        if red.iter().any(|r| is_negative(&r[d + n])) {
            return Ok(None);
        }
        let t = |l: usize, j: usize| &red[l][d + j];
        let dn2 = &self.constants.dn2;
        let mut kappa = Vec::with_capacity(n);
        let mut grad = Vec::with_capacity(n);
        for j in 0..n {
            if basis.contains(&j) {
                kappa.push(Rational::ZERO);
                grad.push(vec![Rational::ZERO; d]);
                continue;
            }
            let mut k = self.base[j].clone();
            let mut g = vec![Rational::ZERO; d];
            g[j / d] -= dn2;
            for (l, &bl) in basis.iter().enumerate() {
                let tl = t(l, j);
                if *tl == 0u32 {
                    continue;
                }
                k -= tl * &self.base[bl];
                g[bl / d] += tl * dn2;
            }
            kappa.push(k);
            grad.push(g);
        }
        Ok(Some(ReducedCostForms { basis: basis.to_vec(), kappa, grad }))
    }

    /// Constraint system of one chain entry relative to the feasible basis `forms`.
    pub fn region_system(&self, forms: &ReducedCostForms, entry: &ChainEntry) -> RegionSystem {
        let d = self.dim();
        let mut equalities = Vec::new();
        let mut inequalities = Vec::new();
        for j in 0..d * d {
            if forms.basis.contains(&j) {
                continue;
            }
            let neg: Vector = forms.grad[j].iter().map(|x| -x).collect();
            let c = Constraint { a: neg, beta: forms.kappa[j].clone() };
            if entry.s.contains(&j) {
                equalities.push((c, Tag::ReducedCost(j)));
            } else {
                inequalities.push((c, Tag::ReducedCost(j)));
            }
        }
        for i in 0..d {
            let e = unit(d, i);
            let neg: Vector = e.iter().map(|x| -x).collect();
            if entry.i0.contains(&i) {
                equalities.push((Constraint { a: e, beta: Rational::ZERO }, Tag::Lower(i)));
            } else if entry.i1.contains(&i) {
                equalities.push((Constraint { a: e, beta: Rational::ONE }, Tag::Upper(i)));
            } else {
                inequalities.push((Constraint { a: neg, beta: Rational::ZERO }, Tag::Lower(i)));
                inequalities.push((Constraint { a: e, beta: Rational::ONE }, Tag::Upper(i)));
            }
        }
        RegionSystem { equalities, inequalities }
    }

    /// A point of `Φ(f) ∩ g` where `f` has support `s` and feasible basis `basis ⊆ s`.
    pub fn parameter_region_feasible(&self, basis: &Basis, s: &FaceSupport, face: &CubeFace) -> Result<Option<Vector>> {
        if !basis.indices().iter().all(|j| s.contains(*j)) {
            return Err(Error::precondition("basis is not contained in the support"));
        }
        let Some(forms) = self.forms(basis.indices())? else {
            return Err(Error::precondition("not a feasible basis"));
        };
        let entry = ChainEntry::new(s.indices().to_vec(), face.i0().to_vec(), face.i1().to_vec());
        let sys = self.region_system(&forms, &entry);
        crate::lp::affine_feasible(&sys.to_affine(self.dim()))
    }

    /// Vertex `q₀` of a structurally valid encoding in `M` coordinates, or
    /// `None` if the cell is empty.
    fn bottom_vertex(&self, t: &SimplexEncoding, forms: &ReducedCostForms) -> Result<Option<Vector>> {
        let d = self.dim();
        let sys = self.region_system(forms, &t.entries[0]);
        if sys.equalities.len() != d {
            return Err(Error::internal(format!("{} tight constraints at a vertex, expected {d}", sys.equalities.len())));
        }
        let m = Matrix::from_rows(sys.equalities.iter().map(|(c, _)| c.a.clone()).collect())?;
        let rhs: Vector = sys.equalities.iter().map(|(c, _)| c.beta.clone()).collect();
        let v = match solve_square(&m, &rhs) {
            Ok(v) => v,
            Err(Error::Singular) => {
                return match crate::lp::affine_feasible(&sys.to_affine(d))? {
                    Some(_) => Err(Error::audit(format!("cell {} of {t} is not a simple vertex", t.entries[0]))),
                    None => Ok(None),
                };
            }
            Err(e) => return Err(e),
        };
        for (c, _) in &sys.inequalities {
            let s = c.slack(&v);
            if is_negative(&s) {
                return Ok(None);
            }
            if s == 0u32 {
                return Err(Error::audit(format!("degenerate vertex for {}", t.entries[0])));
            }
        }
        Ok(Some(v))
    }

    /// Full validity test: structure, a feasible basis on top, and a nonempty chain.
    pub fn verify_tuple(&self, t: &SimplexEncoding) -> Result<bool> {
        let d = self.dim();
        if !t.is_structurally_valid(d) {
            return Ok(false);
        }
        let Some(forms) = self.forms(&t.top().s)? else {
            return Ok(false);
        };
        let Some(v0) = self.bottom_vertex(t, &forms)? else {
            return Ok(false);
        };
        // q₀ lies in every cell of the chain, so it witnesses the top cell as well.
        let top = self.region_system(&forms, t.top());
        if !top.holds_at(&v0) {
            return Err(Error::internal("bottom vertex outside the top cell"));
        }
        Ok(true)
    }

    /// Points `v_i ∈ q_i` on `Δ` with `aff(v₀..v_i) = aff(q_i)`: `v₀` is the
    /// bottom vertex, `v_i` the far end of the edge obtained by relaxing the
    /// constraint that step `i` made tight.
    pub fn relint_witnesses(&self, t: &SimplexEncoding) -> Result<Vec<Vector>> {
        Ok(self.relint_witnesses_in_m(t)?.iter().map(|v| project_to_delta(v)).collect::<Result<_>>()?)
    }

    /// Same witnesses before projection, as points of `M`.
    pub fn relint_witnesses_in_m(&self, t: &SimplexEncoding) -> Result<Vec<Vector>> {
        let d = self.dim();
        if !t.is_structurally_valid(d) {
            return Err(Error::precondition(format!("malformed encoding {t}")));
        }
        let forms = self.forms(&t.top().s)?.ok_or_else(|| Error::precondition(format!("top of {t} is not a feasible basis")))?;
        let v0 = self.bottom_vertex(t, &forms)?.ok_or_else(|| Error::precondition(format!("{t} is not valid")))?;
        let sys0 = self.region_system(&forms, &t.entries[0]);
        let mut out = vec![v0.clone()];
        for i in 1..t.level() {
            let step = step_between(&t.entries[i], &t.entries[i - 1]).expect("structurally valid");
            let tag = match step {
                Step::AddColumn(a) => Tag::ReducedCost(a),
                Step::FixZero(j) => Tag::Lower(j),
                Step::FixOne(j) => Tag::Upper(j),
            };
            out.push(self.far_endpoint(&sys0, tag, &v0, t)?);
        }
        Ok(out)
    }

    fn far_endpoint(&self, sys0: &RegionSystem, relaxed: Tag, v0: &[Rational], t: &SimplexEncoding) -> Result<Vector> {
        let d = self.dim();
        let pos = sys0
            .equalities
            .iter()
            .position(|(_, g)| *g == relaxed)
            .ok_or_else(|| Error::internal("relaxed constraint is not tight at the bottom vertex"))?;
        let rows: Vec<Vector> =
            sys0.equalities.iter().enumerate().filter(|&(k, _)| k != pos).map(|(_, (c, _))| c.a.clone()).collect();
        let null = if rows.is_empty() {
            (0..d).map(|i| unit(d, i)).collect()
        } else {
            crate::exact::nullspace(&Matrix::from_rows(rows)?)
        };
        if null.len() != 1 {
            return Err(Error::audit(format!("relaxing one constraint of {t} leaves a {}-dimensional set", null.len())));
        }
        let mut dir = null.into_iter().next().unwrap();
        // The relaxed constraint, read as an inequality, must become slack.
        let (relaxed_c, outward) = relaxed_inequality(&sys0.equalities[pos].0, relaxed);
        let rate = dot(&relaxed_c.a, &dir);
        if rate == 0u32 {
            return Err(Error::audit(format!("edge of {t} is parallel to its relaxed constraint")));
        }
        if (rate > 0u32) != outward {
            dir = dir.into_iter().map(|x| -x).collect();
        }
        let mut ineqs: Vec<&Constraint> = sys0.inequalities.iter().map(|(c, _)| c).collect();
        let relaxed_le = Constraint {
            a: if outward { relaxed_c.a.iter().map(|x| -x).collect() } else { relaxed_c.a.clone() },
            beta: if outward { -&relaxed_c.beta } else { relaxed_c.beta.clone() },
        };
        ineqs.push(&relaxed_le);
        let extra_box = box_for_relaxed(d, relaxed);
        let mut best: Option<Rational> = None;
        for c in ineqs.into_iter().chain(extra_box.iter()) {
            let rate = dot(&c.a, &dir);
            if rate <= 0u32 {
                continue;
            }
            let step = c.slack(v0) / rate;
            if best.as_ref().map_or(true, |b| step < *b) {
                best = Some(step);
            }
        }
        let step = best.ok_or_else(|| Error::internal(format!("unbounded edge in {t}")))?;
        if step <= 0u32 {
            return Err(Error::audit(format!("zero-length edge in {t}")));
        }
        Ok(v0.iter().zip(&dir).map(|(x, y)| x + &step * y).collect())
    }
}

/// The tight constraint `a·μ = β` as the inequality it came from, together with
/// whether that inequality reads `a·μ ≥ β` (`true`) or `a·μ ≤ β`.
fn relaxed_inequality(c: &Constraint, tag: Tag) -> (Constraint, bool) {
    match tag {
        // r_j ≥ 0 is stored as −g·μ ≤ κ.
        Tag::ReducedCost(_) => (c.clone(), false),
        // μ_j ≥ 0.
        Tag::Lower(_) => (c.clone(), true),
        // μ_j ≤ 1.
        Tag::Upper(_) => (c.clone(), false),
    }
}

/// Box constraint on the other side of a relaxed fixed coordinate.
fn box_for_relaxed(d: usize, tag: Tag) -> Vec<Constraint> {
    match tag {
        Tag::Lower(j) => vec![Constraint { a: unit(d, j), beta: Rational::ONE }],
        Tag::Upper(j) => vec![Constraint { a: unit(d, j).into_iter().map(|x| -x).collect(), beta: Rational::ZERO }],
        Tag::ReducedCost(_) => Vec::new(),
    }
}

pub(crate) fn unit(d: usize, i: usize) -> Vector {
    (0..d).map(|k| if k == i { Rational::ONE } else { Rational::ZERO }).collect()
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v.dedup();
    v
}

fn is_strict(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

fn difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| !b.contains(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ratio, vec_of};
    use crate::instance::CcpInstance;

    fn e1_ground() -> GroundInstance {
        GroundInstance::from_instance(
            &CcpInstance::new(
                2,
                vec![vec![vec_of(&[1, 0]), vec_of(&[0, 1])], vec![vec_of(&[2, 1]), vec_of(&[1, 2])]],
                vec_of(&[1, 1]),
            )
            .unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn constants_and_costs() {
        let k = derive_constants(&e1_ground(), DEFAULT_C_EXPONENT);
        assert_eq!(k.n, Natural::from(8u32));
        assert_eq!(k.eps, Rational::from_naturals(Natural::ONE, Natural::from(8u32).pow(24)));
        assert!(k.eps <= Rational::from_naturals(Natural::ONE, Natural::from(512u32)));
        let c = cost_vector(&k, &vec_of(&[1, 0]));
        assert_eq!(c[0], Rational::ONE + &k.eps);
        assert_eq!(c[2], Rational::from(129) + k.eps.clone().pow(3u64));
        let flat = cost_vector(&k, &vec_of(&[1, 1]));
        assert_eq!(flat[3], Rational::ONE + k.eps.clone().pow(4u64));
    }

    #[test]
    fn labels() {
        // 1-based {1,4,5} in d=3 is 0-based {0,3,4}.
        assert_eq!(label_of_support(3, &[0, 3, 4]), 1);
        assert_eq!(label_of_support(3, &[0, 3, 6]), 0);
        assert_eq!(label_of_support(3, &[6, 7, 8]), 2);
    }

    #[test]
    fn projections() {
        let h = vec![ratio(1, 2), ratio(1, 2)];
        assert_eq!(project_to_m(&h).unwrap(), vec_of(&[1, 1]));
        assert_eq!(project_to_delta(&h).unwrap(), h);
        assert_eq!(project_to_m(&vec_of(&[2, 1])).unwrap(), vec![ratio(1, 1), ratio(1, 2)]);
        assert_eq!(project_to_delta(&vec_of(&[2, 1])).unwrap(), vec![ratio(2, 3), ratio(1, 3)]);
        assert!(project_to_delta(&vec_of(&[0, 0])).is_err());
    }

    #[test]
    fn optimal_faces_at_unit_vectors() {
        let pc = ParameterComplex::new(e1_ground(), DEFAULT_C_EXPONENT);
        let (b, s) = pc.optimal_face_at(&vec_of(&[1, 0])).unwrap();
        assert_eq!(b.indices(), &[0, 1]);
        assert_eq!(s.indices(), &[0, 1]);
        let (b, _) = pc.optimal_face_at(&vec_of(&[0, 1])).unwrap();
        assert_eq!(b.indices(), &[2, 3]);
    }

    #[test]
    fn standard_source_tuple_is_valid() {
        let pc = ParameterComplex::new(e1_ground(), DEFAULT_C_EXPONENT);
        let t = SimplexEncoding::new(vec![ChainEntry::new(vec![0, 1], vec![1], vec![0])]);
        assert!(pc.verify_tuple(&t).unwrap());
        let w = pc.relint_witnesses(&t).unwrap();
        assert_eq!(w, vec![vec_of(&[1, 0])]);
        let bad_i0 = SimplexEncoding::new(vec![ChainEntry::new(vec![0, 1], vec![], vec![0])]);
        assert!(!pc.verify_tuple(&bad_i0).unwrap());
        let lifted = SimplexEncoding::new(vec![
            ChainEntry::new(vec![0, 1], vec![1], vec![0]),
            ChainEntry::new(vec![0, 1], vec![], vec![0]),
        ]);
        assert!(pc.verify_tuple(&lifted).unwrap());
        let w = pc.relint_witnesses(&lifted).unwrap();
        assert_eq!(w[0], vec_of(&[1, 0]));
        assert_ne!(w[1], w[0]);
        assert!(w.iter().all(|v| norm1(v) == 1u32 && !v.iter().any(is_negative)));
        let both_changed = SimplexEncoding::new(vec![
            ChainEntry::new(vec![0, 1, 2], vec![1], vec![0]),
            ChainEntry::new(vec![0, 1], vec![], vec![0]),
        ]);
        assert!(!both_changed.is_structurally_valid(2) || !pc.verify_tuple(&both_changed).unwrap());
    }

    #[test]
    fn region_with_excluded_color_is_empty() {
        let pc = ParameterComplex::new(e1_ground(), DEFAULT_C_EXPONENT);
        let face = CubeFace::new(vec![1], vec![0]).unwrap();
        let s = FaceSupport::new(vec![0, 1, 2]);
        assert_eq!(pc.parameter_region_feasible(&Basis::new(vec![0, 1]), &s, &face).unwrap(), None);
        let (b, s) = pc.optimal_face_at(&vec_of(&[1, 0])).unwrap();
        assert!(pc.parameter_region_feasible(&b, &s, &face).unwrap().is_some());
        assert!(CubeFace::new(vec![0], vec![0]).is_err());
    }
}
