//! Commands behind the `ccp` binary. Each one turns parsed input into a
//! [`RunReport`](report::RunReport) that carries its own certificate.

pub mod report;

use ccp_core::complex::{ParameterComplex, DEFAULT_C_EXPONENT};
use ccp_core::exact::format_rational;
use ccp_core::instance::{perturb_with, CcpInstance, PerturbOptions};
use ccp_core::io::{digest_instance_parts, digest_points, write_instance_parts};
use ccp_core::pls::{map_back_or_repair, run_local_search, LocalSearchOptions, PivotRule, DEFAULT_PLS_BUDGET};
use ccp_core::reductions::{centerpoint, simplicial_depth_point, solve_tverberg, Backend};
use ccp_core::two_color::{find_split, SplitPath};
use ccp_core::walk::{run_standard_algorithm, WalkOptions, DEFAULT_BUDGET};
use ccp_core::{Error, Rational, Vector};
use serde::{Deserialize, Serialize};

use report::*;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Io(String),
    #[error("certificate rejected: {0}")]
    Rejected(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => match e {
                Error::Parse { .. } => 2,
                Error::Budget(_) | Error::IterationCap { .. } => 3,
                Error::Audit(_) => 4,
                Error::Precondition(_) | Error::InvalidInstance(_) | Error::Dimension(_) | Error::SizeGuard(_) => 5,
                Error::TheoremViolation(_) => 6,
                _ => 1,
            },
            CliError::Rejected(_) => 4,
            CliError::Io(_) => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Ppad,
    Pls,
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub method: Method,
    pub pivot: PivotRule,
    pub budget: Option<u64>,
    pub c_exponent: u32,
    pub trace: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { method: Method::Pls, pivot: PivotRule::First, budget: None, c_exponent: DEFAULT_C_EXPONENT, trace: false }
    }
}

fn input_of(inst: &CcpInstance) -> (String, Input) {
    (digest_instance_parts(inst.dim, &inst.colors, &inst.b), instance_input(inst.dim, &inst.colors, &inst.b))
}

pub fn solve(inst: &CcpInstance, opts: &SolveOptions) -> Result<RunReport, CliError> {
    let (input_digest, input) = input_of(inst);
    let mut stats = Stats::default();
    let mut trace = Vec::new();
    let (solver, choice, perturbation) = match opts.method {
        Method::Ppad => {
            let (ground, map) = perturb_with(inst, PerturbOptions::default())?;
            let pc = ParameterComplex::new(ground, opts.c_exponent);
            let walk = WalkOptions { budget: opts.budget.unwrap_or(DEFAULT_BUDGET), trace: opts.trace };
            let out = run_standard_algorithm(&pc, &walk)?;
            stats.steps = Some(out.steps);
            stats.max_bits = Some(out.max_bits);
            trace = out.trace.iter().map(|t| t.to_string()).collect();
            let (choice, repair) = map_back_or_repair(&out.choice, &map, &LocalSearchOptions::default())?;
            let mut pert = perturbation_report(&map);
            pert.repair_swaps = repair;
            ("ppad", choice, Some(pert))
        }
        Method::Pls => {
            let ls = LocalSearchOptions { rule: opts.pivot, budget: opts.budget.unwrap_or(DEFAULT_PLS_BUDGET) };
            let out = run_local_search(inst, &ls)?;
            stats.steps = Some(out.steps);
            let start = out.trace.first().map(|s| s.old_potential.clone()).unwrap_or_default();
            stats.potentials = std::iter::once(&start)
                .chain(out.trace.iter().map(|s| &s.new_potential))
                .map(format_rational)
                .collect();
            if opts.trace {
                trace = out.trace.iter().map(|s| s.to_string()).collect();
            }
            ("pls", out.choice, None)
        }
    };
    Ok(RunReport {
        command: "solve".into(),
        solver: solver.into(),
        input_digest,
        input,
        solution: Solution::Colorful { picks: picks_1based(&choice.picks), coefficients: strings(&choice.coefficients) },
        stats,
        perturbation,
        trace,
        timing: None,
    })
}

pub fn two_color(dim: usize, c1: &[Vector], c2: &[Vector], b: &[Rational], k: usize, trace: bool) -> Result<RunReport, CliError> {
    let colors = vec![c1.to_vec(), c2.to_vec()];
    let out = find_split(c1, c2, b, k)?;
    let stats = Stats { iterations: Some(out.iterations), iteration_cap: Some(out.cap), ..Stats::default() };
    let path = match out.path {
        SplitPath::Direct => "direct",
        SplitPath::Perturbed => "perturbed",
    };
    let trace = if trace {
        out.intervals
            .iter()
            .map(|iv| {
                format!(
                    "t in [{}, {}] first-class counts {} {}",
                    format_rational(&iv.t_lo),
                    format_rational(&iv.t_hi),
                    iv.count_lo,
                    iv.count_hi
                )
            })
            .collect()
    } else {
        Vec::new()
    };
    Ok(RunReport {
        command: "two-color".into(),
        solver: format!("binary-search/{path}"),
        input_digest: digest_instance_parts(dim, &colors, b),
        input: instance_input(dim, &colors, b),
        solution: Solution::Split { k, picks: picks_1based(&out.choice.picks), coefficients: strings(&out.choice.coefficients) },
        stats,
        perturbation: None,
        trace,
        timing: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointCommand {
    Tverberg,
    Centerpoint,
    Simdepth,
}

pub fn point_command(cmd: PointCommand, points: &[Vector], backend: Backend) -> Result<RunReport, CliError> {
    let solver = match backend {
        Backend::Pls => "pls",
        Backend::Ppad => "ppad",
    };
    let (command, solution) = match cmd {
        PointCommand::Tverberg => ("tverberg", Solution::Tverberg(tverberg_report(&solve_tverberg(points, backend)?))),
        PointCommand::Centerpoint | PointCommand::Simdepth => {
            let (command, measure, dp) = if cmd == PointCommand::Centerpoint {
                ("centerpoint", "tukey", centerpoint(points, backend)?)
            } else {
                ("simdepth", "simplicial", simplicial_depth_point(points, backend)?)
            };
            let solution = Solution::Depth {
                measure: measure.into(),
                point: strings(&dp.point),
                bound: dp.bound.to_string(),
                tverberg: tverberg_report(&dp.tverberg),
            };
            (command, solution)
        }
    };
    Ok(RunReport {
        command: command.into(),
        solver: solver.into(),
        input_digest: digest_points(points),
        input: points_input(points),
        solution,
        stats: Stats::default(),
        perturbation: None,
        trace: Vec::new(),
        timing: None,
    })
}

/// Contents of the map file written by `perturb`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapFile {
    pub original_digest: String,
    pub ground_digest: String,
    /// `origin[i][j]`: original index of ground point `j` of color `i`.
    pub origin: Vec<Vec<usize>>,
    pub perturbation: PerturbationReport,
}

pub struct PerturbOutput {
    pub report: RunReport,
    pub ground_text: String,
    pub map_text: String,
}

pub fn perturb(inst: &CcpInstance, force: bool) -> Result<PerturbOutput, CliError> {
    let (input_digest, input) = input_of(inst);
    let (ground, map) = perturb_with(inst, PerturbOptions { force })?;
    let ground_digest = digest_instance_parts(ground.dim, &ground.colors, &ground.b);
    let origin: Vec<Vec<usize>> = map.origin.iter().map(|o| o.iter().map(|j| j + 1).collect()).collect();
    let pert = perturbation_report(&map);
    let map_file = MapFile {
        original_digest: input_digest.clone(),
        ground_digest: ground_digest.clone(),
        origin: origin.clone(),
        perturbation: pert.clone(),
    };
    let report = RunReport {
        command: "perturb".into(),
        solver: "perturbation".into(),
        input_digest,
        input,
        solution: Solution::Perturbed {
            ground_digest,
            ground: instance_input(ground.dim, &ground.colors, &ground.b),
            origin,
        },
        stats: Stats::default(),
        perturbation: Some(pert),
        trace: Vec::new(),
        timing: None,
    };
    Ok(PerturbOutput {
        report,
        ground_text: write_instance_parts(ground.dim, &ground.colors, &ground.b),
        map_text: serde_json::to_string_pretty(&map_file).expect("map serializes") + "\n",
    })
}
