//! Module files: JSON {group, ring, S, T} with the matrix encoding of the
//! exact-arithmetic layer.

use std::path::Path;

use serde_json::{json, Value};

use crate::endotriv::ASeriesHandle;
use crate::error::{Error, Result};
use crate::exactalg::DenseMatrix;
use crate::modrep::ModuleRep;

pub fn module_to_json(m: &ModuleRep) -> Result<Value> {
    let g = m
        .group()
        .ok_or_else(|| Error::InvalidArgument("only dihedral modules have a file format".into()))?;
    Ok(json!({
        "group": {"d": g.d},
        "ring": {"kind": "gf", "m": m.m()},
        "S": DenseMatrix::Field(m.s().clone()).to_json(),
        "T": DenseMatrix::Field(m.t().clone()).to_json(),
    }))
}

pub fn module_from_json(v: &Value) -> Result<ModuleRep> {
    let bad = |reason: &str| Error::MalformedFile { path: "<module>".into(), reason: reason.into() };
    let d = v
        .get("group")
        .and_then(|g| g.get("d"))
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("missing group.d"))? as u32;
    let g = crate::dihedral::make_group(d)?;
    let s = match DenseMatrix::from_json(v.get("S").ok_or_else(|| bad("missing S"))?)? {
        DenseMatrix::Field(f) => f,
        _ => return Err(bad("S must be a field matrix")),
    };
    let t = match DenseMatrix::from_json(v.get("T").ok_or_else(|| bad("missing T"))?)? {
        DenseMatrix::Field(f) => f,
        _ => return Err(bad("T must be a field matrix")),
    };
    ModuleRep::from_action(g, s, t)
}

pub fn write_module(path: &Path, m: &ModuleRep) -> Result<()> {
    let v = module_to_json(m)?;
    std::fs::write(path, pretty(&v))?;
    Ok(())
}

pub fn read_module(path: &Path) -> Result<ModuleRep> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::MalformedFile {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::MalformedFile {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    module_from_json(&v).map_err(|e| match e {
        Error::MalformedFile { reason, .. } => Error::MalformedFile {
            path: path.display().to_string(),
            reason,
        },
        other => other,
    })
}

/// An A-series member serializes as its module file plus a certificate block.
pub fn a_handle_to_json(h: &ASeriesHandle) -> Result<Value> {
    let mut v = module_to_json(&h.module)?;
    v["certificate"] = h.certificate_json();
    Ok(v)
}

/// Canonical pretty encoding used for every file the workbench writes.
pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values are always serializable");
    s.push('\n');
    s
}
