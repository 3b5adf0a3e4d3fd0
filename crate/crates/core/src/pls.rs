//! Local search over colorful choices. The potential of a choice is the
//! squared distance from `b` to the cone it spans; every local optimum of the
//! single-swap neighborhood has potential zero.

use std::fmt;

use itertools::Itertools;
use malachite::num::basic::traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{dot, format_rational, is_negative, solve_square, squared_norm, sub_vec, Matrix, Rational, Vector};
use crate::instance::{map_solution_back, CcpInstance, ColorfulChoice, PerturbationMap};

pub const DEFAULT_PLS_BUDGET: u64 = 1 << 24;

/// Closest point of `pos(C)` to `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeProjection {
    pub point: Vector,
    pub squared_distance: Rational,
    /// Indices into `C` carrying positive weight, with their weights.
    pub support: Vec<usize>,
    pub weights: Vector,
}

/// Exact nearest point of `pos(C)` to `b`, found by trying every linearly
/// independent subset as the active set and keeping those that satisfy the
/// optimality conditions exactly.
pub fn nearest_point_in_cone(c: &[Vector], b: &[Rational]) -> Result<ConeProjection> {
    let d = b.len();
    if c.iter().any(|p| p.len() != d) {
        return Err(Error::dim("cone generators and b differ in dimension"));
    }
    if c.len() > 24 {
        return Err(Error::SizeGuard(format!("{} generators", c.len())));
    }
    let origin = vec![Rational::ZERO; d];
    let mut best = kkt_holds(c, b, &origin).then(|| ConeProjection {
        point: origin,
        squared_distance: squared_norm(b),
        support: Vec::new(),
        weights: Vec::new(),
    });
    for size in 1..=c.len().min(d) {
        for s in (0..c.len()).combinations(size) {
            let Some((x, w)) = project_onto_span(c, &s, b)? else { continue };
            if w.iter().any(is_negative) || !kkt_holds(c, b, &x) {
                continue;
            }
            let dist = squared_norm(&sub_vec(b, &x));
            if best.as_ref().map_or(true, |p| dist < p.squared_distance) {
                best = Some(ConeProjection { point: x, squared_distance: dist, support: s, weights: w });
            }
        }
    }
    best.ok_or_else(|| Error::internal("no active set satisfies the optimality conditions"))
}

/// `⟨p, b − x⟩ ≤ 0` for every generator.
fn kkt_holds(c: &[Vector], b: &[Rational], x: &[Rational]) -> bool {
    let r = sub_vec(b, x);
    c.iter().all(|p| dot(p, &r) <= 0u32)
}

/// Orthogonal projection of `b` onto the span of `C_S`, with its weights, or
/// `None` if the columns are dependent.
fn project_onto_span(c: &[Vector], s: &[usize], b: &[Rational]) -> Result<Option<(Vector, Vector)>> {
    let k = s.len();
    let mut gram = Matrix::zeros(k, k);
    let mut rhs = Vec::with_capacity(k);
    for (a, &i) in s.iter().enumerate() {
        for (bb, &j) in s.iter().enumerate() {
            gram.set(a, bb, dot(&c[i], &c[j]));
        }
        rhs.push(dot(&c[i], b));
    }
    let w = match solve_square(&gram, &rhs) {
        Ok(w) => w,
        Err(Error::Singular) => return Ok(None),
        Err(e) => return Err(e),
    };
    let mut x = vec![Rational::ZERO; b.len()];
    for (wi, &i) in w.iter().zip(s) {
        for (xj, pj) in x.iter_mut().zip(&c[i]) {
            *xj += wi * pj;
        }
    }
    Ok(Some((x, w)))
}

/// Potential of a choice of one index per color.
pub fn potential(inst: &CcpInstance, choice: &[usize]) -> Result<Rational> {
    let pts: Vec<Vector> = choice.iter().enumerate().map(|(i, &j)| inst.colors[i][j].clone()).collect();
    Ok(nearest_point_in_cone(&pts, &inst.b)?.squared_distance)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalSearchState {
    /// Index within color `i` of the point picked from it.
    pub choice: Vec<usize>,
    pub potential: Rational,
    pub steps: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PivotRule {
    /// First improving swap in color-then-index order.
    #[default]
    First,
    /// Swap with the smallest resulting potential; ties go to the earliest.
    Best,
}

#[derive(Clone, Debug)]
pub struct LocalSearchOptions {
    pub rule: PivotRule,
    pub budget: u64,
}

impl Default for LocalSearchOptions {
    fn default() -> Self {
        LocalSearchOptions { rule: PivotRule::First, budget: DEFAULT_PLS_BUDGET }
    }
}

/// One accepted swap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwapStep {
    /// 0-based color.
    pub color: usize,
    pub from: usize,
    pub to: usize,
    pub old_potential: Rational,
    pub new_potential: Rational,
}

impl fmt::Display for SwapStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "color={} {}->{} potential {} -> {}",
            self.color + 1,
            self.from + 1,
            self.to + 1,
            format_rational(&self.old_potential),
            format_rational(&self.new_potential)
        )
    }
}

/// The standard solution: the first point of every color.
pub fn standard_state(inst: &CcpInstance) -> Result<LocalSearchState> {
    let choice = vec![0; inst.dim];
    let potential = potential(inst, &choice)?;
    Ok(LocalSearchState { choice, potential, steps: 0 })
}

/// An improving single-color swap, or `None` at a local optimum.
pub fn improving_neighbor(inst: &CcpInstance, state: &LocalSearchState, rule: PivotRule) -> Result<Option<(LocalSearchState, SwapStep)>> {
    if state.potential == 0u32 {
        return Ok(None);
    }
    let swaps: Vec<(usize, usize)> = (0..inst.dim)
        .flat_map(|i| (0..inst.colors[i].len()).filter(move |&j| j != state.choice[i]).map(move |j| (i, j)))
        .collect();
    let values: Vec<Result<Rational>> = swaps
        .par_iter()
        .map(|&(i, j)| {
            let mut next = state.choice.clone();
            next[i] = j;
            potential(inst, &next)
        })
        .collect();
    let mut pick: Option<(usize, Rational)> = None;
    for (k, v) in values.into_iter().enumerate() {
        let v = v?;
        if v >= state.potential {
            continue;
        }
        match rule {
            PivotRule::First => {
                pick = Some((k, v));
                break;
            }
            PivotRule::Best => {
                if pick.as_ref().map_or(true, |(_, p)| v < *p) {
                    pick = Some((k, v));
                }
            }
        }
    }
    Ok(pick.map(|(k, v)| {
        let (i, j) = swaps[k];
        let mut choice = state.choice.clone();
        let from = choice[i];
        choice[i] = j;
        let step = SwapStep { color: i, from, to: j, old_potential: state.potential.clone(), new_potential: v.clone() };
        (LocalSearchState { choice, potential: v, steps: state.steps + 1 }, step)
    }))
}

#[derive(Clone, Debug)]
pub struct LocalSearchOutcome {
    pub choice: ColorfulChoice,
    pub steps: u64,
    pub trace: Vec<SwapStep>,
}

/// Improves the standard solution until no swap helps, then certifies the
/// final choice against `b`.
pub fn run_local_search(inst: &CcpInstance, opts: &LocalSearchOptions) -> Result<LocalSearchOutcome> {
    run_local_search_from(inst, vec![0; inst.dim], opts)
}

/// Local search from `start[i]`, the index picked in color `i`.
pub fn run_local_search_from(inst: &CcpInstance, start: Vec<usize>, opts: &LocalSearchOptions) -> Result<LocalSearchOutcome> {
    inst.validate()?;
    if start.len() != inst.dim || start.iter().zip(&inst.colors).any(|(&j, c)| j >= c.len()) {
        return Err(Error::precondition(format!("{start:?} is not a colorful choice")));
    }
    let potential = potential(inst, &start)?;
    let mut state = LocalSearchState { choice: start, potential, steps: 0 };
    let mut trace = Vec::new();
    while let Some((next, step)) = improving_neighbor(inst, &state, opts.rule)? {
        if next.potential >= state.potential {
            return Err(Error::internal("accepted swap does not decrease the potential"));
        }
        if next.steps > opts.budget {
            return Err(Error::Budget(opts.budget));
        }
        trace.push(step);
        state = next;
    }
    if state.potential != 0u32 {
        return Err(Error::TheoremViolation(format!(
            "local optimum {:?} has potential {}",
            state.choice,
            format_rational(&state.potential)
        )));
    }
    let picks: Vec<(usize, usize)> = state.choice.iter().copied().enumerate().collect();
    let choice = ColorfulChoice::certify(picks, &inst.colors, &inst.b)?
        .ok_or_else(|| Error::internal("zero-potential choice does not embrace b"))?;
    Ok(LocalSearchOutcome { choice, steps: state.steps, trace })
}

/// Maps a ground solution back to the original instance. If the mapped
/// points do not embrace the original `b`, local search continues on the
/// original instance from the mapped choice; the number of swaps it needed is
/// returned alongside.
pub fn map_back_or_repair(
    choice: &ColorfulChoice,
    map: &PerturbationMap,
    opts: &LocalSearchOptions,
) -> Result<(ColorfulChoice, Option<u64>)> {
    match map_solution_back(choice, map) {
        Ok(c) => Ok((c, None)),
        Err(Error::TheoremViolation(_)) if choice.is_colorful(map.original.dim) => {
            let start = choice.picks.iter().map(|&(c, j)| map.origin[c][j]).collect();
            let out = run_local_search_from(&map.original, start, opts)?;
            Ok((out.choice, Some(out.steps)))
        }
        Err(e) => Err(e),
    }
}
