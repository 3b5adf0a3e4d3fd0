//! Path following on the graph of labeled simplices.
//!
//! Nodes at level `k` are `(k−1)`-simplices of the subdivided parameter
//! complex inside `Δ_[k]` whose labels cover `[k−1]`. Two nodes are adjacent
//! when they share a facet labeled exactly `[k−1]`, or when one is the facet
//! of the other on the boundary (`lift`/`drop`). The walk starts at the vertex
//! `e₁` and ends at a fully-labeled top simplex, whose optimal basis is a
//! colorful choice.

use std::collections::HashSet;
use std::fmt;

use sha2::{Digest, Sha256};

use crate::complex::{step_between, ChainEntry, ParameterComplex, SimplexEncoding};
use crate::error::{Error, Result};
use crate::exact::{determinant, max_bit_size, Matrix, Rational, Vector};
use crate::instance::ColorfulChoice;
use malachite::num::basic::traits::One;

pub const DEFAULT_BUDGET: u64 = 1 << 40;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GraphNode {
    pub encoding: SimplexEncoding,
    pub k: usize,
    /// Label of each chain vertex, 0-based, in chain order.
    pub labels: Vec<usize>,
}

impl GraphNode {
    pub fn new(encoding: SimplexEncoding, d: usize) -> Self {
        let labels = encoding.labels(d);
        GraphNode { k: encoding.level(), encoding, labels }
    }

    /// Labels cover `[k−1]`.
    pub fn is_member(&self) -> bool {
        (0..self.k.saturating_sub(1)).all(|l| self.labels.contains(&l))
    }

    /// Labels are exactly `[k]`.
    pub fn is_fully_labeled(&self) -> bool {
        (0..self.k).all(|l| self.labels.contains(&l))
    }

    pub fn digest(&self) -> String {
        let h = Sha256::digest(self.encoding.to_string().as_bytes());
        h[..6].iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrientationSign {
    Plus,
    Minus,
}

impl OrientationSign {
    pub fn value(self) -> i8 {
        match self {
            OrientationSign::Plus => 1,
            OrientationSign::Minus => -1,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            OrientationSign::Plus => OrientationSign::Minus,
            OrientationSign::Minus => OrientationSign::Plus,
        }
    }
}

impl fmt::Display for OrientationSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if *self == OrientationSign::Plus { "+" } else { "-" })
    }
}

/// `w_{i+1}` for 0-based `i ≥ 1`: `2` before position `i`, `1 − 2i` at it.
pub fn w_lift_vector(d: usize, i: usize) -> Vector {
    (0..d)
        .map(|j| match j.cmp(&i) {
            std::cmp::Ordering::Less => Rational::from(2),
            std::cmp::Ordering::Equal => Rational::ONE - Rational::from(2 * i as i64),
            std::cmp::Ordering::Greater => Rational::from(0),
        })
        .collect()
}

pub fn standard_source(pc: &ParameterComplex) -> Result<GraphNode> {
    let d = pc.dim();
    let mut e1 = vec![Rational::from(0); d];
    e1[0] = Rational::ONE;
    let (basis, _) = pc.optimal_face_at(&e1)?;
    let entry = ChainEntry::new(basis.indices().to_vec(), (1..d).collect(), vec![0]);
    let node = GraphNode::new(SimplexEncoding::new(vec![entry]), d);
    if !pc.verify_tuple(&node.encoding)? {
        return Err(Error::audit("standard source does not verify"));
    }
    Ok(node)
}

fn one_step_downs(e: &ChainEntry, d: usize) -> Vec<ChainEntry> {
    let mut out = Vec::new();
    for a in (0..d * d).filter(|a| !e.s.contains(a)) {
        let mut s = e.s.clone();
        s.push(a);
        out.push(ChainEntry::new(s, e.i0.clone(), e.i1.clone()));
    }
    for j in e.free(d) {
        let mut i0 = e.i0.clone();
        i0.push(j);
        out.push(ChainEntry::new(e.s.clone(), i0, e.i1.clone()));
        let mut i1 = e.i1.clone();
        i1.push(j);
        out.push(ChainEntry::new(e.s.clone(), e.i0.clone(), i1));
    }
    out
}

fn one_step_ups(e: &ChainEntry) -> Vec<ChainEntry> {
    let mut out = Vec::new();
    for a in &e.s {
        let s = e.s.iter().copied().filter(|x| x != a).collect();
        out.push(ChainEntry::new(s, e.i0.clone(), e.i1.clone()));
    }
    for j in &e.i0 {
        let i0 = e.i0.iter().copied().filter(|x| x != j).collect();
        out.push(ChainEntry::new(e.s.clone(), i0, e.i1.clone()));
    }
    if e.i1.len() > 1 {
        for j in &e.i1 {
            let i1 = e.i1.iter().copied().filter(|x| x != j).collect();
            out.push(ChainEntry::new(e.s.clone(), e.i0.clone(), i1));
        }
    }
    out
}

/// The other simplex of the same level sharing the facet that omits vertex `i`.
pub fn facet_flip(pc: &ParameterComplex, t: &SimplexEncoding, i: usize) -> Result<Option<SimplexEncoding>> {
    let d = pc.dim();
    let k = t.level();
    if i >= k {
        return Err(Error::precondition(format!("position {i} outside a level-{k} encoding")));
    }
    if !pc.verify_tuple(t)? {
        return Err(Error::precondition(format!("{t} is not a valid encoding")));
    }
    if k == 1 {
        return Ok(None);
    }
    let q = &t.entries;
    let candidates: Vec<ChainEntry> = if i == k - 1 {
        let top_i0: Vec<usize> = (k..d).collect();
        one_step_ups(&q[k - 2])
            .into_iter()
            .filter(|c| c.i0 == top_i0 && c.i1.len() == 1 && c.s.len() == d)
            .collect()
    } else {
        one_step_downs(&q[i + 1], d)
            .into_iter()
            .filter(|c| i == 0 || step_between(c, &q[i - 1]).is_some())
            .collect()
    };
    let mut found: Option<SimplexEncoding> = None;
    for c in candidates.into_iter().filter(|c| *c != q[i]) {
        let mut entries = q.clone();
        entries[i] = c;
        let cand = SimplexEncoding::new(entries);
        if pc.verify_tuple(&cand)? {
            if let Some(prev) = &found {
                return Err(Error::audit(format!("facet {i} of {t} is shared by {prev} and {cand}")));
            }
            found = Some(cand);
        }
    }
    Ok(found)
}

pub fn lift_simplex(pc: &ParameterComplex, t: &SimplexEncoding) -> Result<SimplexEncoding> {
    let d = pc.dim();
    let k = t.level();
    if k >= d {
        return Err(Error::precondition(format!("cannot lift a level-{k} simplex in dimension {d}")));
    }
    let top = t.top();
    let i0 = top.i0.iter().copied().filter(|&x| x != k).collect();
    let mut entries = t.entries.clone();
    entries.push(ChainEntry::new(top.s.clone(), i0, top.i1.clone()));
    Ok(SimplexEncoding::new(entries))
}

pub fn drop_simplex(pc: &ParameterComplex, t: &SimplexEncoding) -> Result<Option<SimplexEncoding>> {
    let k = t.level();
    if k <= 1 {
        return Err(Error::precondition("cannot drop a level-1 simplex"));
    }
    let (top, below) = (&t.entries[k - 1], &t.entries[k - 2]);
    let mut i0 = top.i0.clone();
    i0.push(k - 1);
    if *below != ChainEntry::new(top.s.clone(), i0, top.i1.clone()) {
        return Ok(None);
    }
    let prefix = SimplexEncoding::new(t.entries[..k - 1].to_vec());
    Ok(if pc.verify_tuple(&prefix)? { Some(prefix) } else { None })
}

pub fn node_neighbors(pc: &ParameterComplex, node: &GraphNode) -> Result<Vec<GraphNode>> {
    let d = pc.dim();
    let k = node.k;
    if !node.is_member() {
        return Err(Error::precondition(format!("{} is not a graph node", node.encoding)));
    }
    let mut out = Vec::new();
    if k > 1 {
        let want: Vec<usize> = (0..k - 1).collect();
        for i in 0..k {
            let mut facet: Vec<usize> = node.labels.iter().enumerate().filter(|&(p, _)| p != i).map(|(_, &l)| l).collect();
            facet.sort_unstable();
            if facet != want {
                continue;
            }
            let dropped = if i == k - 1 { drop_simplex(pc, &node.encoding)? } else { None };
            let next = match dropped {
                Some(t) => t,
                None => facet_flip(pc, &node.encoding, i)?.ok_or_else(|| {
                    Error::audit(format!("facet {i} of {} has no neighbor", node.encoding))
                })?,
            };
            out.push(GraphNode::new(next, d));
        }
    }
    if k < d && node.is_fully_labeled() {
        out.push(GraphNode::new(lift_simplex(pc, &node.encoding)?, d));
    }
    let expected = if k == 1 || (k == d && node.is_fully_labeled()) { 1 } else { 2 };
    if out.len() != expected {
        return Err(Error::audit(format!("{} has degree {}, expected {expected}", node.encoding, out.len())));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum VertexId {
    Chain(ChainEntry),
    W(usize),
}

/// Vertices of the lifted simplex `σ_w` with labels and witness points.
struct Lifted {
    ids: Vec<VertexId>,
    labels: Vec<usize>,
    points: Vec<Vector>,
}

fn lifted(pc: &ParameterComplex, node: &GraphNode) -> Result<Lifted> {
    let d = pc.dim();
    let mut ids: Vec<VertexId> = node.encoding.entries.iter().cloned().map(VertexId::Chain).collect();
    let mut labels = node.labels.clone();
    let mut points = pc.relint_witnesses(&node.encoding)?;
    for i in node.k..d {
        ids.push(VertexId::W(i));
        labels.push(i);
        points.push(w_lift_vector(d, i));
    }
    Ok(Lifted { ids, labels, points })
}

fn orientation_lifted(d: usize, from: &Lifted, to_ids: &[VertexId]) -> Result<OrientationSign> {
    let shared: Vec<usize> = (0..d).filter(|&p| to_ids.contains(&from.ids[p])).collect();
    if shared.len() != d - 1 {
        return Err(Error::internal("orientation between non-adjacent simplices"));
    }
    let differing = (0..d).find(|p| !shared.contains(p)).expect("one vertex differs");
    let mut order = shared;
    order.sort_by_key(|&p| from.labels[p]);
    if order.windows(2).any(|w| from.labels[w[0]] == from.labels[w[1]]) {
        return Err(Error::internal("shared facet repeats a label"));
    }
    order.insert(0, differing);
    let columns: Vec<Vector> = order
        .iter()
        .map(|&p| std::iter::once(Rational::ONE).chain(from.points[p][..d - 1].iter().cloned()).collect())
        .collect();
    let det = determinant(&Matrix::from_columns(d, &columns)?)?;
    if det == 0u32 {
        return Err(Error::audit("degenerate orientation determinant"));
    }
    Ok(if det > 0u32 { OrientationSign::Plus } else { OrientationSign::Minus })
}

/// `dir(σ, σ′)` from relative-interior witnesses of `σ`.
pub fn orientation(pc: &ParameterComplex, node: &GraphNode, neighbor: &GraphNode) -> Result<OrientationSign> {
    let d = pc.dim();
    let from = lifted(pc, node)?;
    let to = lifted_ids(node_level_ids(neighbor), neighbor.k, d);
    orientation_lifted(d, &from, &to)
}

fn node_level_ids(node: &GraphNode) -> Vec<VertexId> {
    node.encoding.entries.iter().cloned().map(VertexId::Chain).collect()
}

fn lifted_ids(mut ids: Vec<VertexId>, k: usize, d: usize) -> Vec<VertexId> {
    ids.extend((k..d).map(VertexId::W));
    ids
}

#[derive(Clone, Debug)]
pub struct WalkOptions {
    pub budget: u64,
    pub trace: bool,
}

impl Default for WalkOptions {
    fn default() -> Self {
        WalkOptions { budget: DEFAULT_BUDGET, trace: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceLine {
    pub level: usize,
    pub digest: String,
    /// 1-based, sorted.
    pub labels: Vec<usize>,
    pub sign: OrientationSign,
}

impl fmt::Display for TraceLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels.iter().map(|l| l.to_string()).collect();
        write!(f, "k={} {} labels={{{}}} dir={}", self.level, self.digest, labels.join(","), self.sign)
    }
}

#[derive(Clone, Debug)]
pub struct WalkOutcome {
    /// Over the ground instance.
    pub choice: ColorfulChoice,
    pub steps: u64,
    pub sink: GraphNode,
    /// Largest bit size among the relative-interior witnesses seen.
    pub max_bits: u64,
    pub trace: Vec<TraceLine>,
}

fn trace_line(node: &GraphNode, sign: OrientationSign) -> TraceLine {
    let mut labels: Vec<usize> = node.labels.iter().map(|l| l + 1).collect();
    labels.sort_unstable();
    TraceLine { level: node.k, digest: node.digest(), labels, sign }
}

/// Follows the path from the standard source to a fully-labeled top simplex,
/// auditing degrees, tuple validity, the Sperner property and orientation
/// consistency at every node.
pub fn run_standard_algorithm(pc: &ParameterComplex, opts: &WalkOptions) -> Result<WalkOutcome> {
    let d = pc.dim();
    let source = standard_source(pc)?;
    let mut trace = Vec::new();
    let mut max_bits = 0;
    if d == 1 {
        return finish(pc, source, 0, max_bits, trace);
    }
    let mut cur_lift = lifted(pc, &source)?;
    let first = node_neighbors(pc, &source)?.remove(0);
    let global = orientation_lifted(d, &cur_lift, &lifted_ids(node_level_ids(&first), first.k, d))?;
    if opts.trace {
        trace.push(trace_line(&source, global));
    }
    let mut visited: HashSet<SimplexEncoding> = HashSet::from([source.encoding.clone()]);
    let mut prev = source;
    let mut cur = first;
    let mut steps = 1u64;
    loop {
        if steps > opts.budget {
            return Err(Error::Budget(opts.budget));
        }
        if !visited.insert(cur.encoding.clone()) {
            return Err(Error::internal(format!("walk revisited {}", cur.encoding)));
        }
        if !pc.verify_tuple(&cur.encoding)? {
            return Err(Error::internal(format!("walk reached invalid encoding {}", cur.encoding)));
        }
        if cur.labels.last().is_some_and(|&l| l >= cur.k) {
            return Err(Error::audit(format!("labels of {} leave [k]", cur.encoding)));
        }
        cur_lift = lifted(pc, &cur)?;
        max_bits = max_bits.max(cur_lift.points.iter().map(|p| max_bit_size(p)).max().unwrap_or(0));
        let back = orientation_lifted(d, &cur_lift, &lifted_ids(node_level_ids(&prev), prev.k, d))?;
        if back != global.flipped() {
            return Err(Error::audit(format!("orientation is not antisymmetric at {}", cur.encoding)));
        }
        let nbrs = node_neighbors(pc, &cur)?;
        if nbrs.len() == 1 {
            if opts.trace {
                trace.push(trace_line(&cur, global));
            }
            if cur.k != d || !cur.is_fully_labeled() {
                return Err(Error::audit(format!("path ended early at {}", cur.encoding)));
            }
            return finish(pc, cur, steps, max_bits, trace);
        }
        let mut others = nbrs.into_iter().filter(|n| n.encoding != prev.encoding);
        let next = match (others.next(), others.next()) {
            (Some(n), None) => n,
            _ => return Err(Error::audit(format!("predecessor is not a neighbor of {}", cur.encoding))),
        };
        let fwd = orientation_lifted(d, &cur_lift, &lifted_ids(node_level_ids(&next), next.k, d))?;
        if fwd != global {
            return Err(Error::audit(format!("incident edges of {} are not oppositely oriented", cur.encoding)));
        }
        if opts.trace {
            trace.push(trace_line(&cur, fwd));
        }
        prev = std::mem::replace(&mut cur, next);
        steps += 1;
    }
}

fn finish(pc: &ParameterComplex, sink: GraphNode, steps: u64, max_bits: u64, trace: Vec<TraceLine>) -> Result<WalkOutcome> {
    let d = pc.dim();
    let s = &sink.encoding.top().s;
    let picks: Vec<(usize, usize)> = s.iter().map(|&j| (j / d, j % d)).collect();
    let ground = pc.ground();
    let choice = ColorfulChoice::certify(picks, &ground.colors, &ground.b)?
        .ok_or_else(|| Error::internal("top support of the sink does not embrace b"))?;
    if !choice.is_colorful(d) {
        return Err(Error::internal(format!("sink support {s:?} is not colorful")));
    }
    Ok(WalkOutcome { choice, steps, sink, max_bits, trace })
}
