//! Group and module descriptors: command-line shorthands and JSON documents.
//!
//! Groups:
//!
//! - `gl2:p`, `cyclic:n`, `semidirect:m:n:r`
//! - `{"type":"gl2","p":3}`
//! - `{"type":"cyclic","n":4}`
//! - `{"type":"semidirect","m":3,"n":4,"r":2}`
//! - `{"type":"matrix-gen","p":3,"gens":[[[1,0],[0,2]], ...]}`
//!
//! Modules:
//!
//! - `paper-M` (the six-dimensional unit-class module, over `gl2:3` only)
//! - `trivial:n1,n2,...`
//! - `{"moduli":[2,2],"action":[[[1,0],[1,1]], ...]}` with one row-form matrix
//!   per group generator

use std::sync::Arc;

use serde::Deserialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gmodule::GModule;
use crate::group::FiniteGroup;
use crate::kummer::build_module_over;
use crate::zmod::ZModMatrix;

macro_rules! group_doc {
    ($name:ident { $($field:ident: $ty:ty),* }) => {
        #[derive(Debug, Deserialize)]
        #[serde(deny_unknown_fields)]
        struct $name {
            #[serde(rename = "type")]
            _kind: String,
            $($field: $ty),*
        }
    };
}

group_doc!(Gl2Doc { p: u64 });
group_doc!(CyclicDoc { n: u64 });
group_doc!(SemidirectDoc { m: u64, n: u64, r: u64 });
group_doc!(MatrixGenDoc { p: u64, gens: Vec<Vec<Vec<i64>>> });

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleDoc {
    moduli: Vec<u64>,
    action: Vec<Vec<Vec<i64>>>,
}

fn shorthand_numbers(spec: &str, prefix: &str, count: usize) -> Result<Vec<u64>> {
    let parts: Vec<&str> = spec.split(':').skip(1).collect();
    if parts.len() != count {
        return Err(Error::Descriptor(format!("`{spec}`: {prefix} expects {count} parameter(s)")));
    }
    parts
        .iter()
        .enumerate()
        .map(|(i, s)| {
            s.parse::<u64>()
                .map_err(|_| Error::Descriptor(format!("`{spec}`: parameter {} of {prefix} is not a number: `{s}`", i + 1)))
        })
        .collect()
}

fn json_error(source: &str, e: serde_json::Error) -> Error {
    Error::Descriptor(format!("{source}: line {}, column {}: {e}", e.line(), e.column()))
}

fn located(source: &str, field: &str, e: Error) -> Error {
    Error::Descriptor(format!("{source}: field `{field}`: {e}"))
}

/// Parses a group shorthand such as `gl2:3`.
pub fn parse_group_shorthand(spec: &str) -> Result<FiniteGroup> {
    let head = spec.split(':').next().unwrap_or("");
    let wrap = |e: Error| Error::Descriptor(format!("`{spec}`: {e}"));
    match head {
        "gl2" => {
            let v = shorthand_numbers(spec, head, 1)?;
            FiniteGroup::gl2(v[0]).map_err(wrap)
        }
        "cyclic" => {
            let v = shorthand_numbers(spec, head, 1)?;
            FiniteGroup::cyclic(v[0]).map_err(wrap)
        }
        "semidirect" => {
            let v = shorthand_numbers(spec, head, 3)?;
            FiniteGroup::semidirect_cyclic(v[0], v[1], v[2]).map_err(wrap)
        }
        _ => Err(Error::Descriptor(format!(
            "`{spec}`: unknown group; expected gl2:p, cyclic:n or semidirect:m:n:r"
        ))),
    }
}

/// Parses a JSON group descriptor. `source` names the input in error messages.
pub fn parse_group_json(text: &str, source: &str) -> Result<FiniteGroup> {
    let value: Value = serde_json::from_str(text).map_err(|e| json_error(source, e))?;
    let kind = value.get("type").and_then(Value::as_str).ok_or_else(|| {
        Error::Descriptor(format!("{source}: field `type`: missing; expected gl2, cyclic, semidirect or matrix-gen"))
    })?;
    let parse_err = |e| json_error(source, e);
    match kind {
        "gl2" => {
            let d: Gl2Doc = serde_json::from_str(text).map_err(parse_err)?;
            FiniteGroup::gl2(d.p).map_err(|e| located(source, "p", e))
        }
        "cyclic" => {
            let d: CyclicDoc = serde_json::from_str(text).map_err(parse_err)?;
            FiniteGroup::cyclic(d.n).map_err(|e| located(source, "n", e))
        }
        "semidirect" => {
            let d: SemidirectDoc = serde_json::from_str(text).map_err(parse_err)?;
            FiniteGroup::semidirect_cyclic(d.m, d.n, d.r).map_err(|e| located(source, "m/n/r", e))
        }
        "matrix-gen" => {
            let d: MatrixGenDoc = serde_json::from_str(text).map_err(parse_err)?;
            let mats = d
                .gens
                .iter()
                .enumerate()
                .map(|(i, g)| matrix_from_rows(d.p, g).map_err(|e| located(source, &format!("gens[{i}]"), e)))
                .collect::<Result<Vec<_>>>()?;
            FiniteGroup::matrix_group_closure(d.p, &mats).map_err(|e| located(source, "gens", e))
        }
        other => Err(Error::Descriptor(format!(
            "{source}: field `type`: unknown group type `{other}`; expected gl2, cyclic, semidirect or matrix-gen"
        ))),
    }
}

fn matrix_from_rows(modulus: u64, rows: &[Vec<i64>]) -> Result<ZModMatrix> {
    if rows.is_empty() || rows.iter().any(|r| r.len() != rows.len()) {
        return Err(Error::DimensionMismatch("matrix is not square".into()));
    }
    ZModMatrix::from_rows(modulus, rows)
}

/// Accepts a shorthand, or a JSON document when the text starts with `{`.
pub fn parse_group(spec: &str) -> Result<FiniteGroup> {
    if spec.trim_start().starts_with('{') {
        parse_group_json(spec, "group")
    } else {
        parse_group_shorthand(spec)
    }
}

/// Parses a module shorthand over `group`.
pub fn parse_module_shorthand(spec: &str, group: &Arc<FiniteGroup>) -> Result<GModule> {
    if spec == "paper-M" {
        return build_module_over(group, Field::new(2, 2)?)
            .map(|d| d.module)
            .map_err(|e| Error::Descriptor(format!("`paper-M` requires the group gl2:3: {e}")));
    }
    if let Some(rest) = spec.strip_prefix("trivial:") {
        let moduli = rest
            .split(',')
            .map(|s| s.parse::<u64>().map_err(|_| Error::Descriptor(format!("`{spec}`: bad modulus `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        return GModule::trivial(group.clone(), &moduli).map_err(|e| Error::Descriptor(format!("`{spec}`: {e}")));
    }
    Err(Error::Descriptor(format!("`{spec}`: unknown module; expected paper-M or trivial:n")))
}

/// Parses a JSON module descriptor over `group`.
pub fn parse_module_json(text: &str, source: &str, group: &Arc<FiniteGroup>) -> Result<GModule> {
    let doc: ModuleDoc = serde_json::from_str(text).map_err(|e| json_error(source, e))?;
    if doc.moduli.is_empty() || doc.moduli.iter().any(|&n| n < 2) {
        return Err(Error::Descriptor(format!("{source}: field `moduli`: every modulus must be at least 2")));
    }
    if doc.action.len() != group.generators().len() {
        return Err(Error::Descriptor(format!(
            "{source}: field `action`: expected {} matrices (one per generator), found {}",
            group.generators().len(),
            doc.action.len()
        )));
    }
    let n = doc.moduli.iter().fold(1u64, |a, &b| num_integer::lcm(a, b));
    let mats = doc
        .action
        .iter()
        .enumerate()
        .map(|(i, m)| matrix_from_rows(n, m).map_err(|e| located(source, &format!("action[{i}]"), e)))
        .collect::<Result<Vec<_>>>()?;
    GModule::new(group.clone(), &doc.moduli, &mats).map_err(|e| located(source, "action", e))
}

/// Accepts a shorthand, or a JSON document when the text starts with `{`.
pub fn parse_module(spec: &str, group: &Arc<FiniteGroup>) -> Result<GModule> {
    if spec.trim_start().starts_with('{') {
        parse_module_json(spec, "module", group)
    } else {
        parse_module_shorthand(spec, group)
    }
}

/// Converts a report value to pretty JSON with a trailing newline.
pub fn to_pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthands() {
        assert_eq!(parse_group("gl2:3").unwrap().order(), 48);
        assert_eq!(parse_group("semidirect:3:4:2").unwrap().order(), 12);
        assert!(matches!(parse_group("gl2:x"), Err(Error::Descriptor(_))));
        assert!(matches!(parse_group("sym:3"), Err(Error::Descriptor(_))));
        let g = Arc::new(parse_group("cyclic:4").unwrap());
        assert!(parse_module("paper-M", &g).is_err());
        assert_eq!(parse_module("trivial:2", &g).unwrap().dim(), 1);
    }

    #[test]
    fn json_documents() {
        let g = parse_group(r#"{"type":"matrix-gen","p":3,"gens":[[[1,0],[0,2]],[[1,1],[0,1]]]}"#).unwrap();
        assert_eq!(g.order(), 6);
        let g = Arc::new(g);
        let m = parse_module(r#"{"moduli":[2],"action":[[[1]],[[1]]]}"#, &g).unwrap();
        assert_eq!(m.dim(), 1);
        let err = parse_group("{\"type\":\"gl2\",\n \"q\":3}").unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");
        let err = parse_module(r#"{"moduli":[2],"action":[[[1]]]}"#, &g).unwrap_err().to_string();
        assert!(err.contains("action"), "{err}");
    }
}
