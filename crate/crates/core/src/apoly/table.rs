//! The bundled `A'` table and its manifest.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Deserialize;

use super::checks::check_properties_of;
use super::riley::oracle_for;
use super::{APoly, ApolyError};
use crate::poly::parse_terms;
use crate::Integer;

/// Largest `|m|` in the table.
pub const TABLE_BOUND: i64 = 3;

const MANIFEST: &str = include_str!("../../data/aprime/manifest.json");
const TERMS: &str = include_str!("../../data/aprime/aprime.terms");

/// Samples per knot when validating the table numerically.
const ORACLE_SAMPLES: usize = 12;

#[derive(Clone, Debug, Deserialize)]
pub struct TableEntry {
    pub m: i64,
    /// `(p, q)` of the two-bridge normal form.
    pub two_bridge: (i64, i64),
    /// `riley` if the stored polynomial vanishes at the representation's
    /// `(L, M)`, `mirror` if at `(1/L, M)`.
    pub convention: String,
    /// Riley polynomial as `[e_M, e_y, c]`.
    pub riley: Vec<(i32, i32, i64)>,
}

#[derive(Deserialize)]
struct Manifest {
    format: String,
    version: u32,
    entries: Vec<TableEntry>,
}

struct Table {
    entries: BTreeMap<i64, TableEntry>,
    polys: BTreeMap<i64, Result<APoly, ApolyError>>,
}

fn sections() -> Result<BTreeMap<i64, String>, ApolyError> {
    let mut out: BTreeMap<i64, String> = BTreeMap::new();
    let mut current = None;
    for line in TERMS.lines() {
        if let Some(rest) = line.trim().strip_prefix("# m =") {
            let m: i64 = rest.trim().parse().map_err(|_| ApolyError::Table(format!("bad header `{line}`")))?;
            current = Some(m);
            out.entry(m).or_default();
        } else if let Some(m) = current {
            let s = out.get_mut(&m).unwrap();
            s.push_str(line);
            s.push('\n');
        }
    }
    Ok(out)
}

fn load() -> Result<Table, ApolyError> {
    let manifest: Manifest = serde_json::from_str(MANIFEST).map_err(|e| ApolyError::Table(e.to_string()))?;
    if manifest.format != "knotaj-aprime" || manifest.version != 1 {
        return Err(ApolyError::Table(format!("unknown format {} v{}", manifest.format, manifest.version)));
    }
    let sections = sections()?;
    let mut polys = BTreeMap::new();
    let mut entries = BTreeMap::new();
    for e in manifest.entries {
        let m = e.m;
        let poly = sections
            .get(&m)
            .ok_or_else(|| ApolyError::Table(format!("no terms for m = {m}")))
            .and_then(|text| APoly::new(parse_terms::<Integer>(text)?))
            .and_then(|a| validate(&e, a));
        polys.insert(m, poly);
        entries.insert(m, e);
    }
    Ok(Table { entries, polys })
}

fn validate(entry: &TableEntry, a: APoly) -> Result<APoly, ApolyError> {
    let m = entry.m;
    let props = check_properties_of(m, &a);
    if let Some(bad) = props.checks.iter().find(|c| !c.passed) {
        return Err(ApolyError::Invalid { m, why: format!("{}: {}", bad.name, bad.detail) });
    }
    let oracle = oracle_for(entry, &a, ORACLE_SAMPLES, 0x5eed);
    if !oracle.passed() {
        return Err(ApolyError::Invalid { m, why: format!("numeric oracle residual {:e}", oracle.max_residual) });
    }
    Ok(a)
}

fn table() -> Result<&'static Table, ApolyError> {
    static TABLE: OnceLock<Result<Table, ApolyError>> = OnceLock::new();
    TABLE.get_or_init(load).as_ref().map_err(Clone::clone)
}

pub(super) fn validated(m: i64) -> Result<APoly, ApolyError> {
    table()?.polys.get(&m).cloned().unwrap_or(Err(ApolyError::Unsupported(m.abs())))
}

pub(super) fn entry(m: i64) -> Result<TableEntry, ApolyError> {
    table()?.entries.get(&m).cloned().ok_or(ApolyError::Unsupported(m.abs()))
}

/// Manifest records for every tabulated `m`.
pub fn table_entries() -> Result<Vec<TableEntry>, ApolyError> {
    Ok(table()?.entries.values().cloned().collect())
}
