//! Run reports: what a command produced, with enough data to re-check it.
//!
//! All indices in a report are 1-based. Rationals are strings.

use ccp_core::exact::{format_rational, parse_rational};
use ccp_core::instance::{verify_p2, ColorfulChoice, GroundInstance, PerturbationMap};
use ccp_core::io::{digest_instance_parts, digest_points};
use ccp_core::reductions::{tverberg_parts, TverbergCertificate, TverbergOutcome};
use ccp_core::{Error, Rational, Vector};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Input {
    Instance { dim: usize, b: Vec<String>, colors: Vec<Vec<Vec<String>>> },
    Points { points: Vec<Vec<String>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Solution {
    /// One pick per color (`[color, index]`).
    Colorful { picks: Vec<[usize; 2]>, coefficients: Vec<String> },
    /// `k` picks from the first class, the rest from the second.
    Split { k: usize, picks: Vec<[usize; 2]>, coefficients: Vec<String> },
    Tverberg(TverbergReport),
    Depth { measure: String, point: Vec<String>, bound: String, tverberg: TverbergReport },
    Perturbed { ground_digest: String, ground: Input, origin: Vec<Vec<usize>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TverbergReport {
    pub parts: usize,
    pub partition: Vec<Vec<usize>>,
    pub common_point: Vec<String>,
    pub coefficients: Vec<Vec<String>>,
    pub surplus: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steps: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_bits: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iterations: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iteration_cap: Option<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub potentials: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerturbationReport {
    pub applied: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_coordinate: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certified_by_bound: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub clearing_factor: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b_scale: Option<String>,
    /// Set when the mapped-back choice failed to embrace `b` and local search
    /// finished the job from there.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub repair_swaps: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub wall_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub solver: String,
    pub input_digest: String,
    pub input: Input,
    pub solution: Solution,
    pub stats: Stats,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perturbation: Option<PerturbationReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<String>,
    /// Kept apart from everything above; `verify` ignores it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Core(Error::Parse { line: e.line(), msg: e.to_string() }))
    }
}

pub fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn rationals(v: &[String]) -> Result<Vector, CliError> {
    v.iter()
        .map(|s| parse_rational(s).map_err(|msg| CliError::Core(Error::Parse { line: 0, msg })))
        .collect()
}

pub fn instance_input(dim: usize, colors: &[Vec<Vector>], b: &[Rational]) -> Input {
    Input::Instance {
        dim,
        b: strings(b),
        colors: colors.iter().map(|c| c.iter().map(|p| strings(p)).collect()).collect(),
    }
}

pub fn points_input(points: &[Vector]) -> Input {
    Input::Points { points: points.iter().map(|p| strings(p)).collect() }
}

pub fn picks_1based(picks: &[(usize, usize)]) -> Vec<[usize; 2]> {
    picks.iter().map(|&(c, j)| [c + 1, j + 1]).collect()
}

pub fn tverberg_report(t: &TverbergOutcome) -> TverbergReport {
    let c = &t.certificate;
    TverbergReport {
        parts: t.m,
        partition: c.partition.iter().map(|p| p.iter().map(|i| i + 1).collect()).collect(),
        common_point: strings(&c.common_point),
        coefficients: c.coefficients.iter().map(|l| strings(l)).collect(),
        surplus: t.surplus.iter().map(|i| i + 1).collect(),
    }
}

pub fn perturbation_report(map: &PerturbationMap) -> PerturbationReport {
    match &map.info {
        None => PerturbationReport {
            applied: false,
            epsilon: None,
            max_coordinate: None,
            n: None,
            certified_by_bound: None,
            clearing_factor: None,
            b_scale: None,
            repair_swaps: None,
        },
        Some(info) => PerturbationReport {
            applied: true,
            epsilon: Some(format_rational(&info.epsilon)),
            max_coordinate: Some(info.m.to_string()),
            n: Some(info.n.to_string()),
            certified_by_bound: Some(info.certified_by_bound),
            clearing_factor: Some(format_rational(&info.clearing_factor)),
            b_scale: Some(format_rational(&info.rescaling.b_scale)),
            repair_swaps: None,
        },
    }
}

enum Decoded {
    Instance { dim: usize, colors: Vec<Vec<Vector>>, b: Vector },
    Points(Vec<Vector>),
}

fn decode(input: &Input) -> Result<Decoded, CliError> {
    Ok(match input {
        Input::Instance { dim, b, colors } => Decoded::Instance {
            dim: *dim,
            b: rationals(b)?,
            colors: colors
                .iter()
                .map(|c| c.iter().map(|p| rationals(p)).collect::<Result<Vec<_>, _>>())
                .collect::<Result<_, _>>()?,
        },
        Input::Points { points } => Decoded::Points(points.iter().map(|p| rationals(p)).collect::<Result<_, _>>()?),
    })
}

fn digest_of(d: &Decoded) -> String {
    match d {
        Decoded::Instance { dim, colors, b } => digest_instance_parts(*dim, colors, b),
        Decoded::Points(p) => digest_points(p),
    }
}

fn reject(msg: impl Into<String>) -> CliError {
    CliError::Rejected(msg.into())
}

fn zero_based(picks: &[[usize; 2]], colors: &[Vec<Vector>]) -> Result<Vec<(usize, usize)>, CliError> {
    picks
        .iter()
        .map(|&[c, j]| {
            if c == 0 || j == 0 || c > colors.len() || j > colors[c - 1].len() {
                Err(reject(format!("pick [{c}, {j}] is out of range")))
            } else {
                Ok((c - 1, j - 1))
            }
        })
        .collect()
}

fn check_choice(picks: &[[usize; 2]], coefficients: &[String], colors: &[Vec<Vector>], b: &[Rational]) -> Result<ColorfulChoice, CliError> {
    let choice = ColorfulChoice { picks: zero_based(picks, colors)?, coefficients: rationals(coefficients)? };
    if !choice.certifies(colors, b) {
        return Err(reject("coefficients do not reproduce b with nonnegative weights"));
    }
    Ok(choice)
}

fn check_tverberg(t: &TverbergReport, points: &[Vector]) -> Result<TverbergCertificate, CliError> {
    let d = points.first().map_or(0, |p| p.len());
    if t.parts != tverberg_parts(points.len(), d) || t.partition.len() != t.parts {
        return Err(reject(format!("expected {} parts", tverberg_parts(points.len(), d))));
    }
    let partition = t
        .partition
        .iter()
        .map(|p| p.iter().map(|&i| i.checked_sub(1).ok_or_else(|| reject("point index 0"))).collect())
        .collect::<Result<Vec<Vec<usize>>, _>>()?;
    let cert = TverbergCertificate {
        partition,
        common_point: rationals(&t.common_point)?,
        coefficients: t.coefficients.iter().map(|l| rationals(l)).collect::<Result<_, _>>()?,
    };
    if !cert.verify(points) {
        return Err(reject("Tverberg certificate does not verify"));
    }
    Ok(cert)
}

/// Re-checks every claim of a report against its embedded input. Returns a
/// one-line summary on success.
pub fn verify_report(r: &RunReport) -> Result<String, CliError> {
    let input = decode(&r.input)?;
    if digest_of(&input) != r.input_digest {
        return Err(reject("input digest does not match the embedded input"));
    }
    match (&r.solution, &input) {
        (Solution::Colorful { picks, coefficients }, Decoded::Instance { dim, colors, b }) => {
            let choice = check_choice(picks, coefficients, colors, b)?;
            if !choice.is_colorful(*dim) {
                return Err(reject("choice is not colorful"));
            }
        }
        (Solution::Split { k, picks, coefficients }, Decoded::Instance { dim, colors, b }) => {
            if colors.len() != 2 {
                return Err(reject("a split needs a two-class input"));
            }
            let choice = check_choice(picks, coefficients, colors, b)?;
            if choice.picks.len() != *dim || choice.count_of_color(0) != *k || choice.count_of_color(1) != dim - k {
                return Err(reject(format!("split does not take exactly {k} points of the first class")));
            }
            let mut p = choice.picks.clone();
            p.dedup();
            if p.len() != choice.picks.len() {
                return Err(reject("a point is picked twice"));
            }
        }
        (Solution::Tverberg(t), Decoded::Points(points)) => {
            check_tverberg(t, points)?;
        }
        (Solution::Depth { measure, point, bound, tverberg }, Decoded::Points(points)) => {
            let cert = check_tverberg(tverberg, points)?;
            if rationals(point)? != cert.common_point {
                return Err(reject("reported point is not the Tverberg point"));
            }
            let n = points.len();
            let d = points[0].len();
            let expected = match measure.as_str() {
                "tukey" => tverberg_parts(n, d).to_string(),
                "simplicial" => ccp_core::reductions::simplicial_depth_bound(n, d).to_string(),
                other => return Err(reject(format!("unknown depth measure `{other}`"))),
            };
            if *bound != expected {
                return Err(reject(format!("depth bound {bound} differs from {expected}")));
            }
        }
        (Solution::Perturbed { ground_digest, ground, origin }, Decoded::Instance { dim, colors, .. }) => {
            let Decoded::Instance { dim: gd, colors: gc, b: gb } = decode(ground)? else {
                return Err(reject("ground must be an instance"));
            };
            if digest_instance_parts(gd, &gc, &gb) != *ground_digest {
                return Err(reject("ground digest does not match the embedded ground instance"));
            }
            if gd != *dim || origin.len() != gc.len() {
                return Err(reject("ground shape differs from the input"));
            }
            for (i, (o, c)) in origin.iter().zip(&gc).enumerate() {
                if o.len() != c.len() || o.iter().any(|&j| j == 0 || j > colors[i].len()) {
                    return Err(reject(format!("origin of color {} is malformed", i + 1)));
                }
            }
            let g = GroundInstance { dim: gd, colors: gc, b: gb };
            g.check_p1().map_err(|e| reject(format!("ground fails the structural checks: {e}")))?;
            if let Some(s) = verify_p2(&g)? {
                return Err(reject(format!("b lies in the span of ground columns {s:?}")));
            }
        }
        _ => return Err(reject("solution kind does not match the input kind")),
    }
    Ok(format!("verified {} ({}) input {}", r.command, r.solver, &r.input_digest[..16.min(r.input_digest.len())]))
}
