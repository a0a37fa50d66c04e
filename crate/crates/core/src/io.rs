//! JSON file formats for algebras, modules and root data.
//!
//! Algebra:
//! `{"name": "sl2", "kind": "lie", "dim": 3, "basis": ["e","h","f"], "unit_index": null,
//!   "products": [[1, 0, 0, "2"], ...]}`
//!
//! Module (`kind: "module"`); `algebra` is a catalog name or an inline algebra document:
//! `{"name": "adj", "kind": "module", "algebra": "sl2", "dim": 3, "basis": [...],
//!   "actions": [[i, p, q, "p/q"], ...]}`
//!
//! Root datum: `{"type": "A", "rank": 3, "overrides": [[a, b, "1"], ...]}`.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{catalog_algebra, AlgebraKind, AlgebraSpec, ModuleActionSpec};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, Rational};
use crate::prolong::RootDatum;

/// Sparse entry `[i, j, k, "p/q"]`.
pub type Entry = (usize, usize, usize, String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub name: String,
    pub kind: String,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub unit_index: Option<usize>,
    #[serde(default)]
    pub products: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Catalog(String),
    Inline(AlgebraDoc),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDoc {
    pub name: String,
    pub kind: String,
    pub algebra: AlgebraRef,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub actions: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootDatumDoc {
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: usize,
    #[serde(default)]
    pub overrides: Vec<(usize, usize, String)>,
}

/// Contents of a structure file.
#[derive(Clone, Debug)]
pub enum Document {
    Algebra(AlgebraSpec),
    Module(ModuleActionSpec),
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

fn entries(field: &str, raw: &[Entry]) -> Result<Vec<(usize, usize, usize, Rational)>> {
    raw.iter()
        .enumerate()
        .map(|(n, (i, j, k, c))| {
            let c = parse_rational(c).map_err(|e| Error::Parse(format!("field {field}[{n}]: {e}")))?;
            Ok((*i, *j, *k, c))
        })
        .collect()
}

fn check_dim(what: &str, dim: usize, basis: &[String]) -> Result<()> {
    if dim != basis.len() {
        return Err(Error::Parse(format!("field basis: {} labels but {what} dim is {dim}", basis.len())));
    }
    Ok(())
}

fn parse_kind(kind: &str) -> Result<AlgebraKind> {
    match kind {
        "lie" => Ok(AlgebraKind::Lie),
        "assoc-comm-unital" => Ok(AlgebraKind::AssocCommUnital),
        other => Err(Error::Parse(format!("field kind: expected \"lie\" or \"assoc-comm-unital\", got {other:?}"))),
    }
}

impl AlgebraDoc {
    pub fn build(&self) -> Result<AlgebraSpec> {
        let kind = parse_kind(&self.kind)?;
        check_dim("algebra", self.dim, &self.basis)?;
        let e = entries("products", &self.products)?;
        AlgebraSpec::new(self.name.clone(), kind, self.basis.clone(), e, self.unit_index)
    }

    pub fn from_spec(a: &AlgebraSpec) -> AlgebraDoc {
        AlgebraDoc {
            name: a.name.clone(),
            kind: a.kind.to_string(),
            dim: a.dim(),
            basis: a.basis_labels.clone(),
            unit_index: a.unit_index,
            products: a.entries().into_iter().map(|(i, j, k, c)| (i, j, k, format_rational(&c))).collect(),
        }
    }
}

impl ModuleDoc {
    pub fn build(&self) -> Result<ModuleActionSpec> {
        if self.kind != "module" {
            return Err(Error::Parse(format!("field kind: expected \"module\", got {:?}", self.kind)));
        }
        let g = match &self.algebra {
            AlgebraRef::Catalog(name) => catalog_algebra(name)?,
            AlgebraRef::Inline(doc) => doc.build()?,
        };
        check_dim("module", self.dim, &self.basis)?;
        let e = entries("actions", &self.actions)?;
        ModuleActionSpec::new(self.name.clone(), Arc::new(g), self.basis.clone(), e)
    }

    pub fn from_spec(m: &ModuleActionSpec) -> ModuleDoc {
        ModuleDoc {
            name: m.name.clone(),
            kind: "module".into(),
            algebra: AlgebraRef::Inline(AlgebraDoc::from_spec(&m.algebra)),
            dim: m.dim(),
            basis: m.basis_labels.clone(),
            actions: m.entries().into_iter().map(|(i, p, q, c)| (i, p, q, format_rational(&c))).collect(),
        }
    }
}

impl RootDatumDoc {
    pub fn build(&self) -> Result<RootDatum> {
        let base = RootDatum::classical(&self.kind, self.rank)?;
        let overrides = self
            .overrides
            .iter()
            .enumerate()
            .map(|(n, (a, b, v))| {
                let v = parse_rational(v).map_err(|e| Error::Parse(format!("field overrides[{n}]: {e}")))?;
                if !v.is_integer() {
                    return Err(Error::Parse(format!("field overrides[{n}]: N must be an integer")));
                }
                let v: i64 = v.to_integer().try_into().map_err(|_| Error::Parse(format!("field overrides[{n}]: N out of range")))?;
                Ok((*a, *b, v))
            })
            .collect::<Result<Vec<_>>>()?;
        let rd = base.with_overrides(&overrides)?;
        rd.lie_algebra()?;
        Ok(rd)
    }
}

/// Parses an algebra or module document.
pub fn parse_document(text: &str) -> Result<Document> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(json_err)?;
    let kind = value
        .get("kind")
        .and_then(|k| k.as_str())
        .ok_or_else(|| Error::Parse("field kind: missing or not a string".into()))?;
    if kind == "module" {
        let doc: ModuleDoc = serde_json::from_value(value).map_err(|e| Error::Parse(format!("module document: {e}")))?;
        Ok(Document::Module(doc.build()?))
    } else {
        let doc: AlgebraDoc = serde_json::from_value(value).map_err(|e| Error::Parse(format!("algebra document: {e}")))?;
        Ok(Document::Algebra(doc.build()?))
    }
}

pub fn parse_root_datum(text: &str) -> Result<RootDatum> {
    serde_json::from_str::<RootDatumDoc>(text).map_err(json_err)?.build()
}

pub fn read_document(path: &Path) -> Result<Document> {
    parse_document(&std::fs::read_to_string(path)?)
}

pub fn read_root_datum(path: &Path) -> Result<RootDatum> {
    parse_root_datum(&std::fs::read_to_string(path)?)
}

pub fn algebra_to_json(a: &AlgebraSpec) -> String {
    serde_json::to_string_pretty(&AlgebraDoc::from_spec(a)).expect("serializable")
}

pub fn module_to_json(m: &ModuleActionSpec) -> String {
    serde_json::to_string_pretty(&ModuleDoc::from_spec(m)).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{adjoint, sl2, truncated_poly};

    #[test]
    fn algebra_round_trip() {
        for a in [sl2(), truncated_poly(3).unwrap()] {
            let Document::Algebra(b) = parse_document(&algebra_to_json(&a)).unwrap() else { panic!("not an algebra") };
            assert!(a.same_structure(&b));
            assert_eq!(a.unit_index, b.unit_index);
        }
    }

    #[test]
    fn module_with_catalog_algebra() {
        let text = r#"{"name": "adj", "kind": "module", "algebra": "sl2", "dim": 3, "basis": ["e","h","f"],
            "actions": [[0,1,0,"-2"],[0,2,1,"1"],[1,0,0,"2"],[1,2,2,"-2"],[2,0,1,"-1"],[2,1,2,"2"]]}"#;
        let Document::Module(m) = parse_document(text).unwrap() else { panic!("not a module") };
        assert!(m.validate().is_empty());
        assert_eq!(m.entries(), adjoint(&Arc::new(sl2())).entries());
    }

    #[test]
    fn errors_cite_field() {
        let bad = r#"{"name": "x", "kind": "lie", "dim": 1, "basis": ["a"], "products": [[0,0,0,"1/0"]]}"#;
        let msg = parse_document(bad).unwrap_err().to_string();
        assert!(msg.contains("products[0]"), "{msg}");
        let msg = parse_document("{\n\"kind\": \"lie\",\n").unwrap_err().to_string();
        assert!(msg.contains("line"), "{msg}");
        let msg = parse_document(r#"{"name":"x","kind":"lie","dim":2,"basis":["a"]}"#).unwrap_err().to_string();
        assert!(msg.contains("basis"), "{msg}");
    }

    #[test]
    fn root_datum_overrides() {
        let rd = parse_root_datum(r#"{"type": "A", "rank": 2}"#).unwrap();
        assert_eq!(rd, RootDatum::a(2).unwrap());
        let e = parse_root_datum(r#"{"type": "A", "rank": 2, "overrides": [[0, 1, "2"]]}"#);
        assert!(e.is_err());
        assert!(matches!(parse_root_datum(r#"{"type": "B", "rank": 2}"#), Err(Error::Unsupported(_))));
    }
}
