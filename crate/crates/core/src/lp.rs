//! Exact simplex method for standard-form linear programs
//! `min cᵀx  s.t.  Ax = b, x ≥ 0`.
//!
//! Pivoting follows Bland's rule. Reduced costs use the extended form: one
//! entry per column, zero on basic columns. A basis is optimal iff every
//! extended reduced cost is nonnegative.

use std::cmp::Ordering;

use malachite::num::arithmetic::traits::Sign;
use malachite::num::basic::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{dot, is_negative, is_positive, Matrix, Rational, Vector};

const PIVOT_LIMIT: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardFormLp {
    pub a: Matrix,
    pub b: Vector,
    pub c: Vector,
}

impl StandardFormLp {
    pub fn new(a: Matrix, b: Vector, c: Vector) -> Result<Self> {
        if b.len() != a.rows() || c.len() != a.cols() {
            return Err(Error::dim(format!(
                "A is {}x{}, b has {} entries, c has {}",
                a.rows(),
                a.cols(),
                b.len(),
                c.len()
            )));
        }
        Ok(StandardFormLp { a, b, c })
    }

    /// Zero objective; only the constraint system matters.
    pub fn feasibility(a: Matrix, b: Vector) -> Result<Self> {
        let c = vec![Rational::ZERO; a.cols()];
        StandardFormLp::new(a, b, c)
    }

    pub fn with_cost(&self, c: Vector) -> Result<Self> {
        StandardFormLp::new(self.a.clone(), self.b.clone(), c)
    }

    pub fn objective(&self, x: &[Rational]) -> Rational {
        dot(&self.c, x)
    }
}

/// Column indices of a basis, strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Basis(Vec<usize>);

impl Basis {
    pub fn new(mut idx: Vec<usize>) -> Self {
        idx.sort_unstable();
        idx.dedup();
        Basis(idx)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.0.binary_search(&j).is_ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicSolution {
    pub basis: Basis,
    pub x: Vector,
    pub feasible: bool,
}

/// Support of a face: the columns that are positive somewhere on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceSupport(Vec<usize>);

impl FaceSupport {
    pub fn new(mut idx: Vec<usize>) -> Self {
        idx.sort_unstable();
        idx.dedup();
        FaceSupport(idx)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.0.binary_search(&j).is_ok()
    }
}

/// How ties among objective values are broken.
///
/// `Lexicographic` adds `ε^{j+1}` to the cost of column `j` for an
/// infinitesimal `ε > 0`; the resulting optimum is unique.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    None,
    Lexicographic,
}

struct Tableau {
    rows: Vec<Vector>,
    rhs: Vector,
    basic: Vec<usize>,
    cols: usize,
}

enum Outcome {
    Optimal,
    Unbounded(Vector),
}

impl Tableau {
    /// Canonical tableau `A_B⁻¹[A | b]` over a row basis of `A`.
    fn from_basis(a: &Matrix, b: &[Rational], basis: &[usize]) -> Result<(Tableau, bool)> {
        let cols = a.cols();
        let mut rows: Vec<Vector> = a.to_rows();
        let mut rhs = b.to_vec();
        let mut used = vec![false; rows.len()];
        let mut basic_of_row = vec![usize::MAX; rows.len()];
        for &col in basis {
            if col >= cols {
                return Err(Error::NotABasis(format!("column {col} out of range")));
            }
            let Some(r) = (0..rows.len()).find(|&i| !used[i] && rows[i][col] != 0u32) else {
                return Err(Error::NotABasis("basis columns are linearly dependent".into()));
            };
            used[r] = true;
            basic_of_row[r] = col;
            pivot_rows(&mut rows, &mut rhs, r, col);
        }
        let mut consistent = true;
        for i in 0..rows.len() {
            if !used[i] {
                if rows[i].iter().any(|x| *x != 0u32) {
                    return Err(Error::NotABasis("basis does not span the column space".into()));
                }
                if rhs[i] != 0u32 {
                    consistent = false;
                }
            }
        }
        let keep: Vec<usize> = (0..rows.len()).filter(|&i| used[i]).collect();
        let t = Tableau {
            rows: keep.iter().map(|&i| rows[i].clone()).collect(),
            rhs: keep.iter().map(|&i| rhs[i].clone()).collect(),
            basic: keep.iter().map(|&i| basic_of_row[i]).collect(),
            cols,
        };
        Ok((t, consistent))
    }

    fn pivot(&mut self, r: usize, col: usize) {
        pivot_rows(&mut self.rows, &mut self.rhs, r, col);
        self.basic[r] = col;
    }

    fn basis(&self) -> Basis {
        Basis::new(self.basic.clone())
    }

    fn x(&self) -> Vector {
        let mut x = vec![Rational::ZERO; self.cols];
        for (i, &j) in self.basic.iter().enumerate() {
            x[j] = self.rhs[i].clone();
        }
        x
    }

    fn is_basic(&self, j: usize) -> bool {
        self.basic.contains(&j)
    }

    fn reduced_costs(&self, c: &[Rational]) -> Vector {
        (0..self.cols)
            .map(|j| {
                if self.is_basic(j) {
                    return Rational::ZERO;
                }
                let mut r = c[j].clone();
                for (i, &bi) in self.basic.iter().enumerate() {
                    if c[bi] != 0u32 && self.rows[i][j] != 0u32 {
                        r -= &c[bi] * &self.rows[i][j];
                    }
                }
                r
            })
            .collect()
    }

    /// Sign of the reduced cost of nonbasic column `j`, with ties decided by
    /// the infinitesimal perturbation when requested.
    fn price_sign(&self, j: usize, r: &Rational, tie: TieBreak) -> Ordering {
        let s = r.sign();
        if s != Ordering::Equal || tie == TieBreak::None {
            return s;
        }
        // ε-part: +ε^{j+1} − Σ_i rows[i][j]·ε^{basic_i+1}; the lowest degree decides.
        let mut best = (j, Ordering::Greater);
        for (i, &bi) in self.basic.iter().enumerate() {
            if bi < best.0 && self.rows[i][j] != 0u32 {
                best = (bi, self.rows[i][j].sign().reverse());
            }
        }
        best.1
    }

    fn run(&mut self, c: &[Rational], tie: TieBreak) -> Result<(Outcome, usize)> {
        for pivots in 0..PIVOT_LIMIT {
            let r = self.reduced_costs(c);
            let entering = (0..self.cols)
                .find(|&j| !self.is_basic(j) && self.price_sign(j, &r[j], tie) == Ordering::Less);
            let Some(j) = entering else {
                return Ok((Outcome::Optimal, pivots));
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                if !is_positive(&self.rows[i][j]) {
                    continue;
                }
                let ratio = &self.rhs[i] / &self.rows[i][j];
                let better = match &leave {
                    None => true,
                    Some((k, best)) => match ratio.cmp(best) {
                        Ordering::Less => true,
                        Ordering::Equal => self.basic[i] < self.basic[*k],
                        Ordering::Greater => false,
                    },
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((i, _)) = leave else {
                let mut ray = vec![Rational::ZERO; self.cols];
                ray[j] = Rational::ONE;
                for (k, &bk) in self.basic.iter().enumerate() {
                    ray[bk] = -&self.rows[k][j];
                }
                return Ok((Outcome::Unbounded(ray), pivots));
            };
            self.pivot(i, j);
        }
        Err(Error::internal("simplex pivot limit reached"))
    }
}

fn pivot_rows(rows: &mut [Vector], rhs: &mut [Rational], r: usize, col: usize) {
    let inv = Rational::ONE / &rows[r][col];
    for x in rows[r].iter_mut() {
        if *x != 0u32 {
            *x *= &inv;
        }
    }
    rhs[r] *= &inv;
    let (prow, prhs) = (rows[r].clone(), rhs[r].clone());
    for i in 0..rows.len() {
        if i == r || rows[i][col] == 0u32 {
            continue;
        }
        let f = rows[i][col].clone();
        for (x, p) in rows[i].iter_mut().zip(&prow) {
            if *p != 0u32 {
                *x -= &f * p;
            }
        }
        rhs[i] -= &f * &prhs;
    }
}

/// Phase 1 with artificial columns; the returned tableau covers a row basis of `A`.
fn phase_one(lp: &StandardFormLp) -> Result<Option<Tableau>> {
    let (m, n) = (lp.a.rows(), lp.a.cols());
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for i in 0..m {
        let neg = is_negative(&lp.b[i]);
        let mut row: Vector = lp.a.row(i).iter().map(|x| if neg { -x } else { x.clone() }).collect();
        row.extend((0..m).map(|k| if k == i { Rational::ONE } else { Rational::ZERO }));
        rows.push(row);
        rhs.push(if neg { -&lp.b[i] } else { lp.b[i].clone() });
    }
    let mut t = Tableau { rows, rhs, basic: (n..n + m).collect(), cols: n + m };
    let cost: Vector = (0..n + m).map(|j| if j < n { Rational::ZERO } else { Rational::ONE }).collect();
    match t.run(&cost, TieBreak::None)?.0 {
        Outcome::Optimal => {}
        Outcome::Unbounded(_) => return Err(Error::internal("phase 1 cannot be unbounded")),
    }
    let infeasibility: Rational =
        t.basic.iter().zip(&t.rhs).filter(|(&j, _)| j >= n).map(|(_, v)| v.clone()).sum();
    if infeasibility != 0u32 {
        return Ok(None);
    }
    let mut redundant = Vec::new();
    for i in 0..t.rows.len() {
        if t.basic[i] < n {
            continue;
        }
        match (0..n).find(|&j| t.rows[i][j] != 0u32) {
            Some(j) => t.pivot(i, j),
            None => redundant.push(i),
        }
    }
    for &i in redundant.iter().rev() {
        t.rows.remove(i);
        t.rhs.remove(i);
        t.basic.remove(i);
    }
    for row in &mut t.rows {
        row.truncate(n);
    }
    t.cols = n;
    Ok(Some(t))
}

fn solution_of(t: &Tableau) -> BasicSolution {
    let x = t.x();
    let feasible = x.iter().all(|v| !is_negative(v));
    BasicSolution { basis: t.basis(), x, feasible }
}

/// A feasible basis with its basic solution, or `None` when `Ax = b, x ≥ 0` is empty.
pub fn find_feasible_basis(lp: &StandardFormLp) -> Result<Option<BasicSolution>> {
    Ok(phase_one(lp)?.map(|t| solution_of(&t)))
}

/// Extended reduced costs of `basis`: zero on basic columns.
pub fn reduced_costs(lp: &StandardFormLp, basis: &Basis) -> Result<Vector> {
    let (t, _) = Tableau::from_basis(&lp.a, &lp.b, basis.indices())?;
    Ok(t.reduced_costs(&lp.c))
}

/// Basic solution of a given basis (feasible flag set accordingly).
pub fn basic_solution(lp: &StandardFormLp, basis: &Basis) -> Result<BasicSolution> {
    let (t, consistent) = Tableau::from_basis(&lp.a, &lp.b, basis.indices())?;
    let mut s = solution_of(&t);
    s.feasible &= consistent;
    Ok(s)
}

/// Result of a phase-2 run: the optimal basic solution, its extended reduced
/// costs and the number of pivots spent.
#[derive(Clone, Debug)]
pub struct Optimum {
    pub solution: BasicSolution,
    pub reduced_costs: Vector,
    pub pivots: usize,
}

/// Optimal basic feasible solution.
pub fn optimize(lp: &StandardFormLp) -> Result<BasicSolution> {
    Ok(optimize_with(lp, None, TieBreak::None)?.solution)
}

/// Phase 2 from `start` (which must be a feasible basis) or from phase 1.
pub fn optimize_with(lp: &StandardFormLp, start: Option<&Basis>, tie: TieBreak) -> Result<Optimum> {
    let mut t = match start {
        Some(b) => {
            let (t, consistent) = Tableau::from_basis(&lp.a, &lp.b, b.indices())?;
            if !consistent || t.rhs.iter().any(is_negative) {
                return Err(Error::precondition("warm-start basis is infeasible"));
            }
            t
        }
        None => phase_one(lp)?.ok_or(Error::Infeasible)?,
    };
    let (outcome, pivots) = t.run(&lp.c, tie)?;
    match outcome {
        Outcome::Optimal => Ok(Optimum { reduced_costs: t.reduced_costs(&lp.c), solution: solution_of(&t), pivots }),
        Outcome::Unbounded(ray) => Err(Error::Unbounded { ray }),
    }
}

/// Support of the maximal face optimal for `lp.c`, given an optimal basis.
pub fn maximal_optimal_face(lp: &StandardFormLp, opt: &Basis) -> Result<FaceSupport> {
    let (t, consistent) = Tableau::from_basis(&lp.a, &lp.b, opt.indices())?;
    if !consistent || t.rhs.iter().any(is_negative) {
        return Err(Error::precondition("basis is not feasible"));
    }
    let r = t.reduced_costs(&lp.c);
    if r.iter().any(is_negative) {
        return Err(Error::precondition("basis is not optimal"));
    }
    let mut s = opt.indices().to_vec();
    s.extend((0..r.len()).filter(|&j| r[j] == 0u32));
    Ok(FaceSupport::new(s))
}

/// Nonnegative coefficients `α` with `Σ α_p p = b`, or `None` if `b ∉ pos(C)`.
pub fn ray_embrace(points: &[Vector], b: &[Rational]) -> Result<Option<Vector>> {
    let a = Matrix::from_columns(b.len(), points)?;
    let lp = StandardFormLp::feasibility(a, b.to_vec())?;
    Ok(find_feasible_basis(&lp)?.map(|s| s.x))
}

/// Checks `α ≥ 0` and `Σ α_p p = b` exactly.
pub fn certifies_embrace(points: &[Vector], coefficients: &[Rational], b: &[Rational]) -> bool {
    if points.len() != coefficients.len() || coefficients.iter().any(is_negative) {
        return false;
    }
    if points.iter().any(|p| p.len() != b.len()) {
        return false;
    }
    (0..b.len()).all(|i| {
        let s: Rational = points.iter().zip(coefficients).map(|(p, a)| &p[i] * a).sum();
        s == b[i]
    })
}

/// Linear constraints over free variables `μ ∈ Q^dim`:
/// equalities `a·μ = β` and inequalities `a·μ ≤ β`.
#[derive(Clone, Debug, Default)]
pub struct AffineSystem {
    pub dim: usize,
    pub equalities: Vec<(Vector, Rational)>,
    pub inequalities: Vec<(Vector, Rational)>,
}

impl AffineSystem {
    pub fn new(dim: usize) -> Self {
        AffineSystem { dim, ..Default::default() }
    }

    pub fn eq(&mut self, a: Vector, beta: Rational) {
        self.equalities.push((a, beta));
    }

    pub fn le(&mut self, a: Vector, beta: Rational) {
        self.inequalities.push((a, beta));
    }

    pub fn ge(&mut self, a: Vector, beta: Rational) {
        self.inequalities.push((a.into_iter().map(|x| -x).collect(), -beta));
    }

    pub fn satisfied_by(&self, mu: &[Rational]) -> bool {
        self.equalities.iter().all(|(a, b)| dot(a, mu) == *b)
            && self.inequalities.iter().all(|(a, b)| dot(a, mu) <= *b)
    }
}

/// A point of the polyhedron described by `sys`, or `None` if it is empty.
pub fn affine_feasible(sys: &AffineSystem) -> Result<Option<Vector>> {
    let d = sys.dim;
    if sys.equalities.iter().chain(&sys.inequalities).any(|(a, _)| a.len() != d) {
        return Err(Error::dim(format!("constraint length differs from {d}")));
    }
    let ne = sys.equalities.len();
    let ni = sys.inequalities.len();
    let cols = 2 * d + ni;
    let mut rows = Vec::with_capacity(ne + ni);
    let mut rhs = Vec::with_capacity(ne + ni);
    for (k, (a, beta)) in sys.equalities.iter().chain(&sys.inequalities).enumerate() {
        let mut row = vec![Rational::ZERO; cols];
        for i in 0..d {
            row[i] = a[i].clone();
            row[d + i] = -&a[i];
        }
        if k >= ne {
            row[2 * d + (k - ne)] = Rational::ONE;
        }
        rows.push(row);
        rhs.push(beta.clone());
    }
    if rows.is_empty() {
        return Ok(Some(vec![Rational::ZERO; d]));
    }
    let lp = StandardFormLp::feasibility(Matrix::from_rows(rows)?, rhs)?;
    let Some(sol) = find_feasible_basis(&lp)? else {
        return Ok(None);
    };
    let mu: Vector = (0..d).map(|i| &sol.x[i] - &sol.x[d + i]).collect();
    if !sys.satisfied_by(&mu) {
        return Err(Error::internal("affine witness fails its own constraints"));
    }
    Ok(Some(mu))
}
