//! The on-disk object format: one JSON document per object with a format
//! version and a kind tag, fixed field order, and no nondeterminism, so
//! emitted files are byte-stable and diffable.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hoop::{AxiomReport, FiniteHoop, Violation};
use crate::kite::{FiniteBl, KiteElement, KitePart, KiteSpec, Provenance};
use crate::table::OpTable;

pub const FORMAT_VERSION: &str = "kitebl/1";

fn check_header(format: &str, kind: &str, expected: &str) -> Result<()> {
    if format != FORMAT_VERSION {
        return Err(Error::Parse(format!(
            "unsupported format {format:?}, expected {FORMAT_VERSION:?}"
        )));
    }
    if kind != expected {
        return Err(Error::Parse(format!(
            "expected kind {expected:?}, found {kind:?}"
        )));
    }
    Ok(())
}

fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    out.push('\n');
    out
}

#[derive(Serialize, Deserialize)]
struct HoopFile {
    format: String,
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    size: usize,
    unit: usize,
    mul: OpTable,
    ldiv: OpTable,
    rdiv: OpTable,
}

pub fn hoop_to_json(h: &FiniteHoop) -> String {
    use crate::alg::Algebra;
    to_json(&HoopFile {
        format: FORMAT_VERSION.into(),
        kind: "hoop".into(),
        name: h.name().map(str::to_owned),
        size: h.size(),
        unit: h.unit(),
        mul: h.mul_table().clone(),
        ldiv: h.ldiv_table().clone(),
        rdiv: h.rdiv_table().clone(),
    })
}

pub fn hoop_from_json(text: &str) -> Result<FiniteHoop> {
    let file: HoopFile = from_json(text)?;
    check_header(&file.format, &file.kind, "hoop")?;
    for (label, table) in [("mul", &file.mul), ("ldiv", &file.ldiv), ("rdiv", &file.rdiv)] {
        if table.size() != file.size {
            return Err(Error::Parse(format!(
                "{label} table does not match declared size {}",
                file.size
            )));
        }
        if !table.entries_below(file.size) {
            return Err(Error::Parse(format!("{label} table entry out of range")));
        }
    }
    if file.unit >= file.size {
        return Err(Error::Parse("unit index out of range".into()));
    }
    Ok(FiniteHoop::new(
        file.name, file.unit, file.mul, file.ldiv, file.rdiv,
    ))
}

#[derive(Serialize, Deserialize)]
struct ProvenanceFile {
    parent: String,
    filter: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct BlFile {
    format: String,
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    size: usize,
    zero: usize,
    one: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    elements: Option<Vec<String>>,
    mul: OpTable,
    ldiv: OpTable,
    rdiv: OpTable,
    meet: OpTable,
    join: OpTable,
    #[serde(skip_serializing_if = "Option::is_none")]
    provenance: Option<ProvenanceFile>,
}

pub fn bl_to_json(b: &FiniteBl) -> String {
    to_json(&BlFile {
        format: FORMAT_VERSION.into(),
        kind: "bl".into(),
        name: b.name.clone(),
        size: b.size(),
        zero: b.zero,
        one: b.one,
        elements: b
            .elements
            .as_ref()
            .map(|elems| elems.iter().map(KiteElement::index_literal).collect()),
        mul: b.mul.clone(),
        ldiv: b.ldiv.clone(),
        rdiv: b.rdiv.clone(),
        meet: b.meet.clone(),
        join: b.join.clone(),
        provenance: b.provenance.as_ref().map(|p| ProvenanceFile {
            parent: p.parent.clone(),
            filter: p.filter.clone(),
        }),
    })
}

pub fn bl_from_json(text: &str) -> Result<FiniteBl> {
    let file: BlFile = from_json(text)?;
    check_header(&file.format, &file.kind, "bl")?;
    for (label, table) in [
        ("mul", &file.mul),
        ("ldiv", &file.ldiv),
        ("rdiv", &file.rdiv),
        ("meet", &file.meet),
        ("join", &file.join),
    ] {
        if table.size() != file.size {
            return Err(Error::Parse(format!(
                "{label} table does not match declared size {}",
                file.size
            )));
        }
        if !table.entries_below(file.size) {
            return Err(Error::Parse(format!("{label} table entry out of range")));
        }
    }
    if file.zero >= file.size || file.one >= file.size {
        return Err(Error::Parse("bound index out of range".into()));
    }
    let elements = match file.elements {
        None => None,
        Some(labels) => {
            if labels.len() != file.size {
                return Err(Error::Parse("element label count mismatch".into()));
            }
            Some(
                labels
                    .iter()
                    .map(|s| parse_index_literal(s))
                    .collect::<Result<Vec<_>>>()?,
            )
        }
    };
    Ok(FiniteBl {
        name: file.name,
        zero: file.zero,
        one: file.one,
        mul: file.mul,
        ldiv: file.ldiv,
        rdiv: file.rdiv,
        meet: file.meet,
        join: file.join,
        elements,
        provenance: file.provenance.map(|p| Provenance {
            parent: p.parent,
            filter: p.filter,
        }),
    })
}

/// A kite spec file refers to its hoop either inline or by file path.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HoopRef {
    Path(String),
    Inline(serde_json::Value),
}

#[derive(Serialize, Deserialize)]
struct KiteSpecFile {
    format: String,
    kind: String,
    hoop: HoopRef,
    i_size: usize,
    j_size: usize,
    lambda: Vec<usize>,
    rho: Vec<usize>,
}

/// A parsed kite spec file: the spec plus an unresolved hoop reference.
pub struct KiteSpecDoc {
    pub hoop: HoopRef,
    pub spec: KiteSpec,
}

pub fn kite_spec_to_json(hoop: &FiniteHoop, spec: &KiteSpec) -> String {
    let inline: serde_json::Value =
        serde_json::from_str(&hoop_to_json(hoop)).expect("hoop serialization is valid JSON");
    to_json(&KiteSpecFile {
        format: FORMAT_VERSION.into(),
        kind: "kite_spec".into(),
        hoop: HoopRef::Inline(inline),
        i_size: spec.i_size(),
        j_size: spec.j_size(),
        lambda: spec.lambda().to_vec(),
        rho: spec.rho().to_vec(),
    })
}

pub fn kite_spec_from_json(text: &str) -> Result<KiteSpecDoc> {
    let file: KiteSpecFile = from_json(text)?;
    check_header(&file.format, &file.kind, "kite_spec")?;
    let spec = KiteSpec::new(file.i_size, file.j_size, file.lambda, file.rho)?;
    Ok(KiteSpecDoc {
        hoop: file.hoop,
        spec,
    })
}

/// Resolves an inline hoop reference; `Path` variants must be loaded by the
/// caller, which owns file access.
pub fn hoop_from_ref(hoop_ref: &HoopRef) -> Result<Option<FiniteHoop>> {
    match hoop_ref {
        HoopRef::Path(_) => Ok(None),
        HoopRef::Inline(value) => {
            let text = serde_json::to_string(value).map_err(|e| Error::Parse(e.to_string()))?;
            hoop_from_json(&text).map(Some)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ViolationFile {
    axiom: String,
    witness: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct ReportFile {
    format: String,
    kind: String,
    passed: bool,
    violations: Vec<ViolationFile>,
}

pub fn report_to_json(report: &AxiomReport) -> String {
    to_json(&ReportFile {
        format: FORMAT_VERSION.into(),
        kind: "report".into(),
        passed: report.passed(),
        violations: report
            .violations
            .iter()
            .map(|v| ViolationFile {
                axiom: v.axiom.clone(),
                witness: v.witness.clone(),
            })
            .collect(),
    })
}

pub fn report_from_json(text: &str) -> Result<AxiomReport> {
    let file: ReportFile = from_json(text)?;
    check_header(&file.format, &file.kind, "report")?;
    Ok(AxiomReport {
        violations: file
            .violations
            .into_iter()
            .map(|v| Violation {
                axiom: v.axiom,
                witness: v.witness,
            })
            .collect(),
    })
}

/// Parses an index literal such as `U#0,1`, `L#0`, or `L#` (empty tuple).
pub fn parse_index_literal(text: &str) -> Result<KiteElement> {
    let (part, rest) = split_literal(text, '#')?;
    let coords = parse_coords(rest, |c| {
        c.parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad coordinate {c:?} in {text:?}")))
    })?;
    Ok(KiteElement { part, coords })
}

/// Parses a name literal such as `U:t,1` or `L:e2`, resolving coordinate
/// names through the hoop. Index literals are accepted as well.
pub fn parse_element_literal(text: &str, hoop: &FiniteHoop) -> Result<KiteElement> {
    if text.contains('#') {
        return parse_index_literal(text);
    }
    let (part, rest) = split_literal(text, ':')?;
    let coords = parse_coords(rest, |c| hoop.parse_element(c))?;
    Ok(KiteElement { part, coords })
}

fn split_literal(text: &str, sep: char) -> Result<(KitePart, &str)> {
    let err = || {
        Error::Parse(format!(
            "element literal {text:?} must look like L{sep}... or U{sep}..."
        ))
    };
    let rest = text.get(1..).ok_or_else(err)?;
    let rest = rest.strip_prefix(sep).ok_or_else(err)?;
    match &text[..1] {
        "L" => Ok((KitePart::Lower, rest)),
        "U" => Ok((KitePart::Upper, rest)),
        _ => Err(err()),
    }
}

fn parse_coords(rest: &str, parse: impl Fn(&str) -> Result<usize>) -> Result<Vec<usize>> {
    if rest.is_empty() {
        return Ok(Vec::new());
    }
    rest.split(',').map(parse).collect()
}
