//! The JSON instance file format.
//!
//! ```text
//! {
//!   "name": "F_SL2",
//!   "cartan_dim": 1,
//!   "lie_sectors": [
//!     {"label": ["0/1"], "dim": 1},
//!     ...
//!   ],
//!   "assoc_sectors": [...],
//!   "bracket": [
//!     [0, 1, 1, "2/1"],
//!     ...
//!   ],
//!   "assoc_mul": [...],
//!   "action": [...],
//!   "anchor": [...]
//! }
//! ```
//!
//! Table entries `[i, j, k, c]` use global 0-based indices. The zero-label
//! sector is listed first, even when its dimension is 0. [`emit_instance`]
//! writes the canonical form: entries sorted, one per line.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exactlin::Scalar;
use crate::model::{Functional, GradedBasis, Instance, InstanceParts, Sector, StructureTable};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSector {
    label: Vec<String>,
    dim: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    name: String,
    cartan_dim: usize,
    lie_sectors: Vec<RawSector>,
    assoc_sectors: Vec<RawSector>,
    bracket: Vec<(usize, usize, usize, String)>,
    assoc_mul: Vec<(usize, usize, usize, String)>,
    action: Vec<(usize, usize, usize, String)>,
    anchor: Vec<(usize, usize, usize, String)>,
}

fn parse_error(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        location: location.into(),
        message: message.into(),
    }
}

fn scalar(location: &str, text: &str) -> Result<Scalar> {
    text.parse()
        .map_err(|_| parse_error(location, format!("invalid scalar {text:?}")))
}

fn basis(field: &str, cartan_dim: usize, raw: Vec<RawSector>) -> Result<GradedBasis> {
    let mut layout = Vec::with_capacity(raw.len());
    for (s, sector) in raw.into_iter().enumerate() {
        let loc = format!("{field}[{s}]");
        let values = sector
            .label
            .iter()
            .enumerate()
            .map(|(a, t)| scalar(&format!("{loc}.label[{a}]"), t))
            .collect::<Result<Vec<_>>>()?;
        layout.push((Functional::new(values), sector.dim));
    }
    GradedBasis::new(cartan_dim, layout).map_err(|e| parse_error(field, e.to_string()))
}

fn table(
    name: &'static str,
    dims: (usize, usize, usize),
    raw: Vec<(usize, usize, usize, String)>,
) -> Result<StructureTable> {
    let mut seen = BTreeSet::new();
    let mut entries = Vec::with_capacity(raw.len());
    for (pos, (i, j, k, c)) in raw.into_iter().enumerate() {
        let loc = format!("{name}[{pos}]");
        if i >= dims.0 || j >= dims.1 || k >= dims.2 {
            return Err(parse_error(
                loc,
                format!("index ({i}, {j}, {k}) out of range for dimensions {dims:?}"),
            ));
        }
        let c = scalar(&loc, &c)?;
        if c.is_zero() {
            return Err(parse_error(loc, "zero coefficients must be omitted"));
        }
        if !seen.insert((i, j, k)) {
            return Err(parse_error(loc, format!("duplicate entry ({i}, {j}, {k})")));
        }
        entries.push((i, j, k, c));
    }
    StructureTable::new(name, dims, entries)
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let raw: RawInstance = serde_json::from_str(text).map_err(|e| {
        parse_error(
            format!("line {} column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    let lie = basis("lie_sectors", raw.cartan_dim, raw.lie_sectors)?;
    let assoc = basis("assoc_sectors", raw.cartan_dim, raw.assoc_sectors)?;
    let (n, m) = (lie.total_dim(), assoc.total_dim());
    let parts = InstanceParts {
        name: raw.name,
        cartan_dim: raw.cartan_dim,
        bracket: table("bracket", (n, n, n), raw.bracket)?,
        assoc_mul: table("assoc_mul", (m, m, m), raw.assoc_mul)?,
        action: table("action", (m, n, n), raw.action)?,
        anchor: table("anchor", (n, m, m), raw.anchor)?,
        lie,
        assoc,
    };
    Instance::new(parts).map_err(|e| parse_error("instance", e.to_string()))
}

fn quoted(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn emit_sectors(out: &mut String, field: &str, sectors: &[Sector], last: bool) {
    let _ = write!(out, "  {}: [", quoted(field));
    for (pos, s) in sectors.iter().enumerate() {
        let label: Vec<String> = s
            .label
            .values()
            .iter()
            .map(|c| quoted(&c.to_string()))
            .collect();
        let sep = if pos + 1 < sectors.len() { "," } else { "" };
        let _ = write!(
            out,
            "\n    {{\"label\": [{}], \"dim\": {}}}{sep}",
            label.join(", "),
            s.dim
        );
    }
    if !sectors.is_empty() {
        out.push_str("\n  ");
    }
    out.push(']');
    out.push_str(if last { "\n" } else { ",\n" });
}

fn emit_table(out: &mut String, t: &StructureTable, last: bool) {
    let _ = write!(out, "  {}: [", quoted(t.name()));
    let n = t.len();
    for (pos, (i, j, k, c)) in t.entries().enumerate() {
        let sep = if pos + 1 < n { "," } else { "" };
        let _ = write!(
            out,
            "\n    [{i}, {j}, {k}, {}]{sep}",
            quoted(&c.to_string())
        );
    }
    if n > 0 {
        out.push_str("\n  ");
    }
    out.push(']');
    out.push_str(if last { "\n" } else { ",\n" });
}

/// Canonical text of an instance; `parse_instance` inverts it exactly.
pub fn emit_instance(inst: &Instance) -> String {
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"name\": {},", quoted(inst.name()));
    let _ = writeln!(out, "  \"cartan_dim\": {},", inst.cartan_dim());
    emit_sectors(&mut out, "lie_sectors", inst.lie_basis().sectors(), false);
    emit_sectors(
        &mut out,
        "assoc_sectors",
        inst.assoc_basis().sectors(),
        false,
    );
    emit_table(&mut out, inst.bracket_table(), false);
    emit_table(&mut out, inst.assoc_mul_table(), false);
    emit_table(&mut out, inst.action_table(), false);
    emit_table(&mut out, inst.anchor_table(), true);
    out.push_str("}\n");
    out
}
