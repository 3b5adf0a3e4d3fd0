//! Instance and point-set files.
//!
//! Instances are JSON objects `{"dim": d, "b": [...], "colors": [[p, ...], ...]}`
//! with every coordinate written as a rational string such as `"-3/4"`.
//! Point sets are plain text, one point per line, coordinates separated by
//! whitespace or commas; `#` starts a comment.

use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, Rational, Vector};
use crate::instance::CcpInstance;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    dim: usize,
    b: Vec<String>,
    colors: Vec<Vec<Vec<String>>>,
}

/// Dimension, color classes and target as read from a file, before the
/// number of classes is checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedInstance {
    pub dim: usize,
    pub colors: Vec<Vec<Vector>>,
    pub b: Vector,
}

fn line_of(text: &str, token: &str) -> usize {
    let quoted = format!("\"{token}\"");
    text.find(&quoted).map_or(0, |pos| text[..pos].matches('\n').count() + 1)
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_scalars(text: &str, raw: &[String], field: &str, dim: usize) -> Result<Vector> {
    if raw.len() != dim {
        let line = raw.first().map_or(0, |s| line_of(text, s));
        return Err(parse_err(line, format!("field `{field}` has {} coordinates, expected {dim}", raw.len())));
    }
    raw.iter()
        .map(|s| parse_rational(s).map_err(|m| parse_err(line_of(text, s), format!("field `{field}`: {m}"))))
        .collect()
}

/// Parses the JSON form without fixing the number of color classes.
pub fn parse_instance_raw(text: &str) -> Result<ParsedInstance> {
    let raw: RawInstance = serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    let d = raw.dim;
    if d == 0 {
        return Err(parse_err(line_of(text, "dim"), "field `dim` must be positive"));
    }
    let b = parse_scalars(text, &raw.b, "b", d)?;
    let mut colors = Vec::with_capacity(raw.colors.len());
    for (i, c) in raw.colors.iter().enumerate() {
        if c.is_empty() {
            return Err(parse_err(line_of(text, "colors"), format!("field `colors[{}]` is empty", i + 1)));
        }
        let field = format!("colors[{}]", i + 1);
        colors.push(c.iter().map(|p| parse_scalars(text, p, &field, d)).collect::<Result<Vec<_>>>()?);
    }
    Ok(ParsedInstance { dim: d, colors, b })
}

/// Parses a colorful Carathéodory instance: exactly `dim` color classes.
pub fn parse_instance(text: &str) -> Result<CcpInstance> {
    let p = parse_instance_raw(text)?;
    if p.colors.len() != p.dim {
        return Err(parse_err(
            line_of(text, "colors"),
            format!("field `colors` has {} color classes, expected {}", p.colors.len(), p.dim),
        ));
    }
    CcpInstance::new(p.dim, p.colors, p.b)
}

/// Parses a two-class instance: exactly two classes of `dim` points each.
pub fn parse_two_color(text: &str) -> Result<(Vec<Vector>, Vec<Vector>, Vector)> {
    let mut p = parse_instance_raw(text)?;
    if p.colors.len() != 2 {
        return Err(parse_err(
            line_of(text, "colors"),
            format!("field `colors` has {} color classes, expected 2", p.colors.len()),
        ));
    }
    let c2 = p.colors.pop().unwrap();
    let c1 = p.colors.pop().unwrap();
    Ok((c1, c2, p.b))
}

fn vector_json(v: &[Rational]) -> String {
    let items: Vec<String> = v.iter().map(|x| format!("\"{}\"", format_rational(x))).collect();
    format!("[{}]", items.join(", "))
}

/// Canonical JSON text: one color class per line.
pub fn write_instance_parts(dim: usize, colors: &[Vec<Vector>], b: &[Rational]) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!("  \"dim\": {dim},\n"));
    out.push_str(&format!("  \"b\": {},\n", vector_json(b)));
    out.push_str("  \"colors\": [\n");
    for (i, c) in colors.iter().enumerate() {
        let pts: Vec<String> = c.iter().map(|p| vector_json(p)).collect();
        let sep = if i + 1 == colors.len() { "" } else { "," };
        out.push_str(&format!("    [{}]{sep}\n", pts.join(", ")));
    }
    out.push_str("  ]\n}\n");
    out
}

pub fn write_instance(inst: &CcpInstance) -> String {
    write_instance_parts(inst.dim, &inst.colors, &inst.b)
}

/// Hex SHA-256 of the canonical serialization.
pub fn digest_instance_parts(dim: usize, colors: &[Vec<Vector>], b: &[Rational]) -> String {
    hex(&Sha256::digest(write_instance_parts(dim, colors, b).as_bytes()))
}

pub fn digest_points(points: &[Vector]) -> String {
    hex(&Sha256::digest(write_points(points).as_bytes()))
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Reads one point per nonblank line.
pub fn parse_points(text: &str) -> Result<Vec<Vector>> {
    let mut pts: Vec<Vector> = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let p = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| parse_rational(t).map_err(|m| parse_err(no + 1, m)))
            .collect::<Result<Vector>>()?;
        if let Some(first) = pts.first() {
            if first.len() != p.len() {
                return Err(parse_err(no + 1, format!("point has {} coordinates, expected {}", p.len(), first.len())));
            }
        }
        pts.push(p);
    }
    if pts.is_empty() {
        return Err(parse_err(0, "no points"));
    }
    Ok(pts)
}

pub fn write_points(points: &[Vector]) -> String {
    points
        .iter()
        .map(|p| p.iter().map(format_rational).collect::<Vec<_>>().join(" ") + "\n")
        .collect()
}
