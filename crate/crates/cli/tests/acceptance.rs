//! Acceptance run: one PASS/FAIL line per criterion. Seeded from `CCP_SEED`
//! when set.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

use ccp_cli::report::{verify_report, RunReport, Solution};
use ccp_cli::{point_command, solve, Method, PointCommand, SolveOptions};
use ccp_core::complex::{ParameterComplex, DEFAULT_C_EXPONENT};
use ccp_core::exact::{format_rational, solve_any, Matrix};
use ccp_core::generate::{
    random_embracing_color, random_general_position_instance, random_instance, random_nonzero_point, random_point_set,
    random_rational_instance,
};
use ccp_core::instance::{map_solution_back, perturb_to_general_position, verify_p2, CcpInstance, GroundInstance};
use ccp_core::io::{write_instance, write_instance_parts};
use ccp_core::lp::{optimize_with, ray_embrace, reduced_costs, StandardFormLp, TieBreak};
use ccp_core::oracle::{
    enumerate_colorful_solutions, is_listed, lp_by_enumeration, simplicial_depth_count, tukey_depth, LpVerdict,
};
use ccp_core::pls::{run_local_search, LocalSearchOptions};
use ccp_core::reductions::{
    common_intersection_point, conv_intersection, embraces_origin, sarkaria_lift, simplicial_depth_bound, solve_tverberg,
    Backend,
};
use ccp_core::walk::{node_neighbors, orientation, standard_source};
use ccp_core::{Error, Rational, Vector};
use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn seed() -> u64 {
    std::env::var("CCP_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(20_240_531)
}

fn rng(criterion: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed().wrapping_mul(1_000).wrapping_add(criterion))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn ccp(args: &[&str]) -> Result<RunReport, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_ccp")).args(args).output().map_err(err)?;
    if !out.status.success() {
        return Err(format!("ccp {args:?} exited {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
    }
    let report = RunReport::from_json(&String::from_utf8_lossy(&out.stdout)).map_err(err)?;
    verify_report(&report).map_err(err)?;
    Ok(report)
}

fn colorful_picks(r: &RunReport) -> Result<Vec<(usize, usize)>, String> {
    match &r.solution {
        Solution::Colorful { picks, .. } | Solution::Split { picks, .. } => {
            Ok(picks.iter().map(|&[c, j]| (c - 1, j - 1)).collect())
        }
        other => Err(format!("unexpected solution {other:?}")),
    }
}

/// Replays the path from the standard source with fresh neighbor and
/// orientation computations; returns the number of edges walked.
fn audit_walk(pc: &ParameterComplex) -> Result<u64, String> {
    let d = pc.dim();
    let source = standard_source(pc).map_err(err)?;
    let first = node_neighbors(pc, &source).map_err(err)?;
    ensure(first.len() == 1, || format!("standard source has degree {}", first.len()))?;
    let global = orientation(pc, &source, &first[0]).map_err(err)?;
    let mut prev = source;
    let mut cur = first[0].clone();
    let mut edges = 1u64;
    loop {
        ensure(pc.verify_tuple(&cur.encoding).map_err(err)?, || format!("invalid tuple {}", cur.encoding))?;
        ensure(cur.is_member(), || format!("{} is missing labels", cur.encoding))?;
        let back = orientation(pc, &cur, &prev).map_err(err)?;
        ensure(back == global.flipped(), || format!("orientation not antisymmetric at {}", cur.encoding))?;
        let nbrs = node_neighbors(pc, &cur).map_err(err)?;
        let terminal = cur.k == d && cur.is_fully_labeled();
        ensure(nbrs.len() == if terminal { 1 } else { 2 }, || format!("degree {} at {}", nbrs.len(), cur.encoding))?;
        if terminal {
            break;
        }
        let next = nbrs.into_iter().find(|n| n.encoding != prev.encoding).ok_or("no successor")?;
        let fwd = orientation(pc, &cur, &next).map_err(err)?;
        ensure(fwd == global, || format!("signs do not alternate at {}", cur.encoding))?;
        prev = std::mem::replace(&mut cur, next);
        edges += 1;
    }
    let s = &cur.encoding.top().s;
    let colors: Vec<usize> = s.iter().map(|j| j / d).collect();
    ensure(colors == (0..d).collect::<Vec<_>>(), || format!("sink support {s:?} is not colorful"))?;
    let g = pc.ground();
    let pts: Vec<Vector> = s.iter().map(|&j| g.colors[j / d][j % d].clone()).collect();
    ensure(ray_embrace(&pts, &g.b).map_err(err)?.is_some(), || "sink support does not embrace b".into())?;
    Ok(edges)
}

struct WalkAudit {
    runs: usize,
    edges: u64,
}

fn c1_ppad(walks: &mut WalkAudit) -> Check {
    let mut rng = rng(1);
    let dir = tempfile::tempdir().map_err(err)?;
    let mut per_d = [0usize; 4];
    for i in 0..100 {
        let d = 2 + i % 2;
        let inst = random_general_position_instance(&mut rng, d, 3);
        let path = dir.path().join(format!("i{i}.json"));
        std::fs::write(&path, write_instance(&inst)).map_err(err)?;
        let r = ccp(&["solve", path.to_str().unwrap(), "--method", "ppad"])?;
        let picks = colorful_picks(&r)?;
        let sols = enumerate_colorful_solutions(&inst).map_err(err)?;
        ensure(is_listed(&sols, &picks), || format!("instance {i}: {picks:?} not among {} oracle solutions", sols.len()))?;
        let pc = ParameterComplex::new(GroundInstance::from_instance(&inst).map_err(err)?, DEFAULT_C_EXPONENT);
        let edges = audit_walk(&pc).map_err(|e| format!("instance {i}: {e}"))?;
        ensure(Some(edges) == r.stats.steps, || format!("instance {i}: replay walked {edges}, report says {:?}", r.stats.steps))?;
        walks.runs += 1;
        walks.edges += edges;
        per_d[d] += 1;
    }
    Ok(format!("100 instances ({} at d=2, {} at d=3) listed by the oracle", per_d[2], per_d[3]))
}

fn c2_pls() -> Check {
    let mut rng = rng(2);
    let dir = tempfile::tempdir().map_err(err)?;
    let (mut steps, mut oracle_checked, mut max_steps) = (0u64, 0usize, 0u64);
    for i in 0..200 {
        let d = 2 + i % 5;
        let size = d + rng.gen_range(0..=1);
        let inst = random_instance(&mut rng, d, size, 3);
        let path = dir.path().join(format!("i{i}.json"));
        std::fs::write(&path, write_instance(&inst)).map_err(err)?;
        let r = ccp(&["solve", path.to_str().unwrap(), "--method", "pls"])?;
        let pot: Vec<Rational> = r.stats.potentials.iter().map(|s| ccp_core::exact::parse_rational(s).unwrap()).collect();
        ensure(pot.last().is_some_and(|p| *p == 0u32), || format!("instance {i}: final potential is not 0"))?;
        ensure(pot.windows(2).all(|w| w[1] < w[0]), || format!("instance {i}: potential sequence not strictly decreasing"))?;
        ensure(r.stats.steps == Some(pot.len() as u64 - 1), || format!("instance {i}: step count mismatch"))?;
        if (size as u128).pow(d as u32) <= 1_000 {
            let picks = colorful_picks(&r)?;
            ensure(is_listed(&enumerate_colorful_solutions(&inst).map_err(err)?, &picks), || {
                format!("instance {i}: {picks:?} not listed by the oracle")
            })?;
            oracle_checked += 1;
        }
        steps += r.stats.steps.unwrap_or(0);
        max_steps = max_steps.max(r.stats.steps.unwrap_or(0));
    }
    Ok(format!(
        "200 instances d=2..6, {steps} strictly improving swaps (max {max_steps}), no positive local optimum, {oracle_checked} also oracle-listed"
    ))
}

fn c3_two_color() -> Check {
    let mut rng = rng(3);
    let dir = tempfile::tempdir().map_err(err)?;
    let mut caps = vec![(0u64, 0u64); 9];
    let mut splits = 0;
    for i in 0..100 {
        let d = 2 + i % 7;
        let b = random_nonzero_point(&mut rng, d, 50);
        let c1 = random_embracing_color(&mut rng, &b, d, 50);
        let c2 = random_embracing_color(&mut rng, &b, d, 50);
        let path = dir.path().join(format!("i{i}.json"));
        std::fs::write(&path, write_instance_parts(d, &[c1, c2], &b)).map_err(err)?;
        for k in 1..d {
            let r = ccp(&["two-color", path.to_str().unwrap(), "--k", &k.to_string()])?;
            let (it, cap) = (r.stats.iterations.unwrap_or(u64::MAX), r.stats.iteration_cap.unwrap_or(0));
            ensure(it <= cap, || format!("instance {i}, k={k}: {it} iterations over cap {cap}"))?;
            let picks = colorful_picks(&r)?;
            ensure(picks.iter().filter(|p| p.0 == 0).count() == k, || format!("instance {i}: wrong split count"))?;
            caps[d].0 = caps[d].0.max(it);
            caps[d].1 = caps[d].1.max(cap);
            splits += 1;
        }
    }
    let log: Vec<String> = (2..=8).map(|d| format!("d={d}: max {}/{}", caps[d].0, caps[d].1)).collect();
    Ok(format!("{splits} splits certified; iterations/cap {}", log.join(", ")))
}

/// Set partitions of `0..n` into exactly `m` nonempty blocks.
fn partitions(n: usize, m: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(i: usize, n: usize, m: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            if cur.len() == m {
                out.push(cur.clone());
            }
            return;
        }
        for b in 0..cur.len() {
            cur[b].push(i);
            go(i + 1, n, m, cur, out);
            cur[b].pop();
        }
        if cur.len() < m {
            cur.push(vec![i]);
            go(i + 1, n, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, m, &mut Vec::new(), &mut out);
    out
}

/// Whether the hulls meet: one program over homogenized copies of each part,
/// with every part's combination equal to the last part's.
fn hulls_meet(parts: &[Vec<Vector>]) -> bool {
    let d = parts[0][0].len();
    let m = parts.len();
    let rows = (m - 1) * d + m;
    let mut cols = Vec::new();
    for (k, part) in parts.iter().enumerate() {
        for p in part {
            let mut c = vec![Rational::from(0); rows];
            for blk in 0..m - 1 {
                let sign = if k == blk { 1 } else if k == m - 1 { -1 } else { 0 };
                for t in 0..d {
                    c[blk * d + t] = Rational::from(sign) * &p[t];
                }
            }
            c[(m - 1) * d + k] = Rational::from(1);
            cols.push(c);
        }
    }
    let mut target = vec![Rational::from(0); rows];
    for t in target.iter_mut().skip((m - 1) * d) {
        *t = Rational::from(1);
    }
    ray_embrace(&cols, &target).unwrap().is_some()
}

fn normalized(mut parts: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for p in parts.iter_mut() {
        p.sort_unstable();
    }
    parts.sort();
    parts
}

fn grid_sets(d: usize, n: usize, lo: i64, hi: i64) -> Vec<Vec<Vector>> {
    let coords: Vec<Vector> = (0..d).map(|_| lo..=hi).multi_cartesian_product().map(|c| c.into_iter().map(Rational::from).collect()).collect();
    (0..n).map(|_| coords.iter().cloned()).multi_cartesian_product().collect()
}

fn c4_tverberg() -> Check {
    let mut exhaustive = 0;
    for (d, n, lo, hi) in [(1usize, 3usize, -2i64, 2i64), (2, 4, -1, 1)] {
        let m = n.div_ceil(d + 1);
        for pts in grid_sets(d, n, lo, hi) {
            let valid: Vec<Vec<Vec<usize>>> = partitions(n, m)
                .into_iter()
                .filter(|p| hulls_meet(&p.iter().map(|b| b.iter().map(|&i| pts[i].clone()).collect()).collect::<Vec<_>>()))
                .map(normalized)
                .collect();
            ensure(!valid.is_empty(), || format!("brute force finds no partition of {pts:?}"))?;
            let out = solve_tverberg(&pts, Backend::Pls).map_err(err)?;
            let got = normalized(out.certificate.partition.clone());
            ensure(valid.contains(&got), || format!("{got:?} is not a brute-force partition of {pts:?}"))?;
            ensure(out.certificate.verify(&pts), || "certificate fails".into())?;
            exhaustive += 1;
        }
    }
    let mut rng = rng(4);
    for trial in 0..20 {
        let pts = random_point_set(&mut rng, 7, 2, 10);
        let r = point_command(PointCommand::Tverberg, &pts, Backend::Pls).map_err(err)?;
        verify_report(&r).map_err(err)?;
        let Solution::Tverberg(t) = &r.solution else { return Err("wrong solution kind".into()) };
        ensure(t.parts == 3, || format!("trial {trial}: {} parts", t.parts))?;
        let mut all = t.partition.concat();
        all.sort_unstable();
        ensure(all == (1..=7).collect::<Vec<_>>(), || format!("trial {trial}: points not partitioned"))?;
        let parts: Vec<Vec<Vector>> = t.partition.iter().map(|p| p.iter().map(|&i| pts[i - 1].clone()).collect()).collect();
        let (q, _) = common_intersection_point(&parts).map_err(err)?;
        let reported: Vec<String> = q.iter().map(format_rational).collect();
        ensure(reported == t.common_point, || format!("trial {trial}: common point does not reproduce"))?;
    }
    Ok(format!("{exhaustive} exhaustive grid sets match brute force; 20 random 7-point sets give 3-part certificates"))
}

fn c5_centerpoint() -> Check {
    let mut rng = rng(5);
    let mut worst = usize::MAX;
    for n in 6..=9 {
        for trial in 0..10 {
            let pts = random_point_set(&mut rng, n, 2, 10);
            let r = point_command(PointCommand::Centerpoint, &pts, Backend::Pls).map_err(err)?;
            verify_report(&r).map_err(err)?;
            let Solution::Depth { point, .. } = &r.solution else { return Err("wrong solution kind".into()) };
            let q: Vector = point.iter().map(|s| ccp_core::exact::parse_rational(s).unwrap()).collect();
            let depth = tukey_depth(&pts, &q).map_err(err)?;
            ensure(depth >= n.div_ceil(3), || format!("n={n} trial {trial}: depth {depth} < {}", n.div_ceil(3)))?;
            worst = worst.min(depth + 3 - n.div_ceil(3));
        }
    }
    Ok(format!("40 sets, n=6..9: Tukey depth always >= ceil(n/3) (smallest margin {})", worst - 3))
}

fn c6_simdepth() -> Check {
    let mut rng = rng(6);
    let bound = simplicial_depth_bound(9, 2);
    let mut counts = Vec::new();
    for trial in 0..20 {
        let pts = random_point_set(&mut rng, 9, 2, 10);
        let r = point_command(PointCommand::Simdepth, &pts, Backend::Pls).map_err(err)?;
        verify_report(&r).map_err(err)?;
        let Solution::Depth { point, .. } = &r.solution else { return Err("wrong solution kind".into()) };
        let q: Vector = point.iter().map(|s| ccp_core::exact::parse_rational(s).unwrap()).collect();
        let count = simplicial_depth_count(&pts, &q).map_err(err)?;
        ensure(ccp_core::Natural::from(count) >= bound, || format!("trial {trial}: count {count} below {bound}"))?;
        counts.push(count);
    }
    Ok(format!("20 sets, n=9: simplicial depth counts {}..{} (bound {bound})", counts.iter().min().unwrap(), counts.iter().max().unwrap()))
}

fn c7_perturbation(walks: &mut WalkAudit) -> Check {
    let mut rng = rng(7);
    let (mut perturbed, mut walked) = (0, 0);
    for i in 0..50 {
        let d = 2 + i % 2;
        let size = d + rng.gen_range(0..=1);
        let inst: CcpInstance = random_rational_instance(&mut rng, d, size, 3, 3);
        let (ground, map) = perturb_to_general_position(&inst).map_err(err)?;
        ground.check_p1().map_err(|e| format!("instance {i}: {e}"))?;
        ensure(verify_p2(&ground).map_err(err)?.is_none(), || format!("instance {i}: ground fails P2"))?;
        if !map.is_identity() {
            perturbed += 1;
        }
        let choice = if d == 2 {
            let pc = ParameterComplex::new(ground.clone(), DEFAULT_C_EXPONENT);
            let r = solve(&inst, &SolveOptions { method: Method::Ppad, ..SolveOptions::default() }).map_err(err)?;
            verify_report(&r).map_err(err)?;
            let edges = audit_walk(&pc).map_err(|e| format!("instance {i}: {e}"))?;
            walks.runs += 1;
            walks.edges += edges;
            walked += 1;
            let repaired = r.perturbation.as_ref().and_then(|p| p.repair_swaps);
            ensure(repaired.is_none(), || format!("instance {i}: mapped-back walk answer needed {repaired:?} repair swaps"))?;
            let Solution::Colorful { picks, coefficients } = r.solution else { return Err("wrong solution kind".into()) };
            ccp_core::instance::ColorfulChoice {
                picks: picks.iter().map(|&[c, j]| (c - 1, j - 1)).collect(),
                coefficients: coefficients.iter().map(|s| ccp_core::exact::parse_rational(s).unwrap()).collect(),
            }
        } else {
            let ls = run_local_search(&ground.as_instance(), &LocalSearchOptions::default()).map_err(err)?;
            map_solution_back(&ls.choice, &map).map_err(err)?
        };
        ensure(choice.is_colorful(d) && choice.certifies(&inst.colors, &inst.b), || {
            format!("instance {i}: mapped choice does not certify against the original b")
        })?;
    }
    Ok(format!("50 rational instances ({perturbed} perturbed): P1 and exhaustive P2 pass, all 50 mapped-back choices certify ({walked} via the walk, the rest via local search)"))
}

fn c8_walk_audits(walks: &WalkAudit) -> Check {
    ensure(walks.runs > 0, || "no walks were audited".into())?;
    Ok(format!(
        "{} walks replayed ({} edges): tuples valid, degrees 1/2/1, antisymmetric and alternating orientation, colorful sink",
        walks.runs, walks.edges
    ))
}

fn c9_lp() -> Check {
    let mut rng = rng(9);
    let (mut optimal, mut infeasible, mut unbounded) = (0, 0, 0);
    for i in 0..500 {
        let rows = rng.gen_range(1..=3);
        let cols = rng.gen_range(rows..=6);
        let a_rows: Vec<Vector> = (0..rows).map(|_| (0..cols).map(|_| Rational::from(rng.gen_range(-3..=3))).collect()).collect();
        let a = Matrix::from_rows(a_rows).map_err(err)?;
        let b: Vector = if rng.gen_bool(0.7) {
            let x0: Vector = (0..cols).map(|_| Rational::from(rng.gen_range(0..=3))).collect();
            a.mul_vec(&x0).map_err(err)?
        } else {
            (0..rows).map(|_| Rational::from(rng.gen_range(-3..=3))).collect()
        };
        let c: Vector = (0..cols).map(|_| Rational::from(rng.gen_range(-3..=3))).collect();
        let lp = StandardFormLp::new(a.clone(), b.clone(), c.clone()).map_err(err)?;
        let truth = lp_by_enumeration(&lp).map_err(err)?;
        match (optimize_with(&lp, None, TieBreak::None), truth) {
            (Ok(opt), LpVerdict::Optimal(v)) => {
                let x = &opt.solution.x;
                ensure(lp.objective(x) == v, || format!("lp {i}: value {} vs {}", lp.objective(x), v))?;
                ensure(a.mul_vec(x).map_err(err)? == b && x.iter().all(|t| *t >= 0u32), || format!("lp {i}: x infeasible"))?;
                let basis = opt.solution.basis.clone();
                let r = reduced_costs(&lp, &basis).map_err(err)?;
                ensure(r == opt.reduced_costs && r.iter().all(|t| *t >= 0u32), || format!("lp {i}: reduced costs"))?;
                let bcols: Vec<Vector> = basis.indices().iter().map(|&j| a.column(j)).collect();
                let bt = Matrix::from_columns(rows, &bcols).map_err(err)?.transpose();
                let cb: Vector = basis.indices().iter().map(|&j| c[j].clone()).collect();
                let y = if bcols.is_empty() {
                    vec![Rational::from(0); rows]
                } else {
                    solve_any(&bt, &cb).map_err(err)?.ok_or_else(|| format!("lp {i}: no dual solution"))?
                };
                let slack_ok = (0..cols).all(|j| {
                    let aty: Rational = (0..rows).map(|r| a.row(r)[j].clone() * &y[r]).sum();
                    c[j] >= aty
                });
                let by: Rational = b.iter().zip(&y).map(|(p, q)| p * q).sum();
                ensure(slack_ok && by == v, || format!("lp {i}: dual certificate fails"))?;
                optimal += 1;
            }
            (Err(Error::Infeasible), LpVerdict::Infeasible) => infeasible += 1,
            (Err(Error::Unbounded { ray }), LpVerdict::Unbounded) => {
                let cr: Rational = c.iter().zip(&ray).map(|(p, q)| p * q).sum();
                ensure(a.mul_vec(&ray).map_err(err)?.iter().all(|t| *t == 0u32) && ray.iter().all(|t| *t >= 0u32) && cr < 0u32, || {
                    format!("lp {i}: unbounded ray is not a certificate")
                })?;
                unbounded += 1;
            }
            (got, truth) => return Err(format!("lp {i}: simplex {:?} vs enumeration {truth:?}", got.map(|o| o.solution.x))),
        }
    }
    Ok(format!("500 LPs: {optimal} optimal (values, reduced costs and duals check), {infeasible} infeasible, {unbounded} unbounded"))
}

fn c10_sarkaria() -> Check {
    let values: Vec<Vector> = (-2..=2).map(|x| vec![Rational::from(x)]).collect();
    let sets: Vec<Vec<Vector>> = values
        .iter()
        .map(|v| vec![v.clone()])
        .chain(values.iter().cartesian_product(&values).map(|(a, b)| vec![a.clone(), b.clone()]))
        .collect();
    let (mut cases, mut meeting) = (0, 0);
    for p1 in &sets {
        for p2 in &sets {
            let parts = vec![p1.clone(), p2.clone()];
            let lo = |s: &Vec<Vector>| s.iter().map(|p| p[0].clone()).min().unwrap();
            let hi = |s: &Vec<Vector>| s.iter().map(|p| p[0].clone()).max().unwrap();
            let intervals = lo(p1).max(lo(p2)) <= hi(p1).min(hi(p2));
            let lp = conv_intersection(&parts).map_err(err)?.is_some();
            let lifted: Vec<Vector> = sarkaria_lift(&parts).map_err(err)?.concat();
            let embrace = embraces_origin(&lifted).map_err(err)?;
            ensure(intervals == lp && lp == embrace, || {
                format!("{p1:?} / {p2:?}: intervals {intervals}, hull program {lp}, lifted embrace {embrace}")
            })?;
            cases += 1;
            meeting += usize::from(intervals);
        }
    }
    Ok(format!("{cases} grid cases ({meeting} intersecting): hull intersection and lifted origin-embrace agree"))
}

fn run(id: u32, name: &str, f: impl FnOnce() -> Check) -> bool {
    let t = Instant::now();
    let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
    });
    let secs = t.elapsed().as_secs_f64();
    match r {
        Ok(detail) => {
            println!("PASS [{id}] {name}: {detail} ({secs:.1} s)");
            true
        }
        Err(why) => {
            println!("FAIL [{id}] {name}: {why} ({secs:.1} s)");
            false
        }
    }
}

fn main() -> ExitCode {
    println!("acceptance seed {}", seed());
    let mut walks = WalkAudit { runs: 0, edges: 0 };
    let results = [
        run(1, "path following vs oracle", || c1_ppad(&mut walks)),
        run(2, "local search", c2_pls),
        run(3, "two-color splits", c3_two_color),
        run(4, "Tverberg partitions", c4_tverberg),
        run(5, "centerpoint depth", c5_centerpoint),
        run(6, "simplicial depth", c6_simdepth),
        run(7, "perturbation pipeline", || c7_perturbation(&mut walks)),
        run(8, "walk structure", || c8_walk_audits(&walks)),
        run(9, "exact LP vs basis enumeration", c9_lp),
        run(10, "lifting equivalence", c10_sarkaria),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
