//! The `kantor-sc/1` file format: JSON with sparse structure-constant
//! records and exact scalars written as `"p/q"` strings.
//!
//! Canonical output has sorted keys, one record per line and no zero
//! records, so that `save(load(text)) == text` for canonical text.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Error;
use crate::exact::{LinearOperator, Scalar, Vector};
use crate::lie::{Element, GradedSuperalgebra, PhiMap};
use crate::structurable::InvolutiveAlgebra;
use crate::triple::{SignPair, TripleSystem};

pub const FORMAT: &str = "kantor-sc/1";

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference: Option<String>,
}

impl Metadata {
    pub fn is_empty(&self) -> bool {
        self.provenance.is_none() && self.construction.is_none() && self.reference.is_none()
    }

    pub fn provenance(p: impl Into<String>) -> Self {
        Metadata {
            provenance: Some(p.into()),
            ..Default::default()
        }
    }

    pub fn with_construction(mut self, c: impl Into<String>) -> Self {
        self.construction = Some(c.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleDoc {
    pub system: TripleSystem,
    pub signs: Option<SignPair>,
    /// A left unit used by the suites that need one.
    pub unit: Option<Vector>,
    pub meta: Metadata,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDoc {
    pub algebra: InvolutiveAlgebra,
    /// An involutive automorphism to twist by.
    pub sigma: Option<LinearOperator>,
    pub meta: Metadata,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDoc {
    pub algebra: GradedSuperalgebra,
    pub phi: Option<PhiMap>,
    pub signs: Option<SignPair>,
    pub meta: Metadata,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapDoc {
    pub map: LinearOperator,
    pub label: Option<String>,
    pub meta: Metadata,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SystemFile {
    Triple(TripleDoc),
    Algebra(AlgebraDoc),
    Graded(GradedDoc),
    Map(MapDoc),
}

impl SystemFile {
    pub fn kind(&self) -> &'static str {
        match self {
            SystemFile::Triple(_) => "triple-system",
            SystemFile::Algebra(_) => "involutive-algebra",
            SystemFile::Graded(_) => "graded-superalgebra",
            SystemFile::Map(_) => "linear-map",
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            SystemFile::Triple(d) => d.system.dim(),
            SystemFile::Algebra(d) => d.algebra.dim(),
            SystemFile::Graded(d) => d.algebra.dim(),
            SystemFile::Map(d) => d.map.dim(),
        }
    }

    pub fn label(&self) -> Option<&str> {
        match self {
            SystemFile::Triple(d) => d.system.label(),
            SystemFile::Algebra(d) => d.algebra.label(),
            SystemFile::Graded(d) => d.algebra.label(),
            SystemFile::Map(d) => d.label.as_deref(),
        }
    }

    pub fn meta(&self) -> &Metadata {
        match self {
            SystemFile::Triple(d) => &d.meta,
            SystemFile::Algebra(d) => &d.meta,
            SystemFile::Graded(d) => &d.meta,
            SystemFile::Map(d) => &d.meta,
        }
    }

    pub fn meta_mut(&mut self) -> &mut Metadata {
        match self {
            SystemFile::Triple(d) => &mut d.meta,
            SystemFile::Algebra(d) => &mut d.meta,
            SystemFile::Graded(d) => &mut d.meta,
            SystemFile::Map(d) => &mut d.meta,
        }
    }

    pub fn to_canonical_string(&self) -> String {
        let value = match self {
            SystemFile::Triple(d) => serde_json::to_value(TripleRaw::from_doc(d)),
            SystemFile::Algebra(d) => serde_json::to_value(AlgebraRaw::from_doc(d)),
            SystemFile::Graded(d) => serde_json::to_value(GradedRaw::from_doc(d)),
            SystemFile::Map(d) => serde_json::to_value(MapRaw::from_doc(d)),
        }
        .expect("plain data serializes");
        let mut out = String::new();
        emit(&value, 0, &mut out);
        out.push('\n');
        out
    }

    pub fn parse(text: &str) -> Result<SystemFile, Error> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let format = value.get("format").and_then(Value::as_str);
        if format != Some(FORMAT) {
            return Err(Error::Parse(format!("expected format {FORMAT:?}, found {format:?}")));
        }
        let kind = value
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("missing kind".into()))?
            .to_string();
        let de = |e: serde_json::Error| Error::Parse(e.to_string());
        match kind.as_str() {
            "triple-system" => serde_json::from_value::<TripleRaw>(value)
                .map_err(de)?
                .into_doc()
                .map(SystemFile::Triple),
            "involutive-algebra" => serde_json::from_value::<AlgebraRaw>(value)
                .map_err(de)?
                .into_doc()
                .map(SystemFile::Algebra),
            "graded-superalgebra" => serde_json::from_value::<GradedRaw>(value)
                .map_err(de)?
                .into_doc()
                .map(SystemFile::Graded),
            "linear-map" => serde_json::from_value::<MapRaw>(value)
                .map_err(de)?
                .into_doc()
                .map(SystemFile::Map),
            other => Err(Error::Parse(format!("unknown kind {other:?}"))),
        }
    }

    pub fn load(path: impl AsRef<Path>) -> Result<SystemFile, Error> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), Error> {
        let path = path.as_ref();
        std::fs::write(path, self.to_canonical_string()).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }
}

// Writes JSON with arrays of scalars kept on one line and arrays of arrays
// one element per line.
fn emit(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            let n = map.len();
            for (i, (k, item)) in map.iter().enumerate() {
                let _ = write!(out, "{}{}: ", pad(indent + 1), Value::String(k.clone()));
                emit(item, indent + 1, out);
                out.push_str(if i + 1 < n { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}}}", pad(indent));
        }
        Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            let n = items.len();
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                if item.is_object() {
                    emit(item, indent + 1, out);
                } else {
                    out.push_str(&compact(item));
                }
                out.push_str(if i + 1 < n { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}]", pad(indent));
        }
        _ => out.push_str(&compact(v)),
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::Array(items) => format!("[{}]", items.iter().map(compact).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

fn check_unique<K: Ord + Copy + std::fmt::Debug>(keys: impl IntoIterator<Item = K>, what: &str) -> Result<(), Error> {
    let mut seen = BTreeSet::new();
    for k in keys {
        if !seen.insert(k) {
            return Err(Error::Parse(format!("duplicate {what} record {k:?}")));
        }
    }
    Ok(())
}

fn check_dim(expected: usize, found: usize, what: &str) -> Result<(), Error> {
    if expected != found {
        return Err(Error::Parse(format!(
            "{what}: expected dimension {expected}, found {found}"
        )));
    }
    Ok(())
}

fn map_records(m: &LinearOperator) -> Vec<(usize, usize, Scalar)> {
    let n = m.dim();
    (0..n)
        .flat_map(|r| (0..n).map(move |c| (r, c)))
        .filter(|&(r, c)| !m.get(r, c).is_zero())
        .map(|(r, c)| (r, c, m.get(r, c).clone()))
        .collect()
}

fn map_from_records(dim: usize, records: &[(usize, usize, Scalar)], what: &str) -> Result<LinearOperator, Error> {
    check_unique(records.iter().map(|r| (r.0, r.1)), what)?;
    let mut m = LinearOperator::zero(dim);
    for (r, c, v) in records {
        if *r >= dim || *c >= dim {
            return Err(Error::Parse(format!(
                "{what} record ({r},{c}) out of range for dimension {dim}"
            )));
        }
        m.set(*r, *c, v.clone());
    }
    Ok(m)
}

fn parse_signs(s: &Option<String>) -> Result<Option<SignPair>, Error> {
    s.as_deref().map(str::parse).transpose()
}

fn vector(entries: &[Scalar], dim: usize, what: &str) -> Result<Vector, Error> {
    check_dim(dim, entries.len(), what)?;
    Ok(Vector::new(entries.to_vec()))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TripleRaw {
    format: String,
    kind: String,
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    signs: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    unit: Option<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "Metadata::is_empty")]
    metadata: Metadata,
    records: Vec<(usize, usize, usize, usize, Scalar)>,
}

impl TripleRaw {
    fn from_doc(d: &TripleDoc) -> Self {
        TripleRaw {
            format: FORMAT.into(),
            kind: "triple-system".into(),
            dim: d.system.dim(),
            label: d.system.label().map(String::from),
            signs: d.signs.map(|s| s.to_string()),
            unit: d.unit.as_ref().map(|u| u.entries().to_vec()),
            metadata: d.meta.clone(),
            records: d
                .system
                .records()
                .map(|(i, j, k, l, v)| (i, j, k, l, v.clone()))
                .collect(),
        }
    }

    fn into_doc(self) -> Result<TripleDoc, Error> {
        check_unique(self.records.iter().map(|r| (r.0, r.1, r.2, r.3)), "triple")?;
        let mut system = TripleSystem::from_records(self.dim, self.records)?;
        if let Some(l) = self.label {
            system = system.with_label(l);
        }
        Ok(TripleDoc {
            unit: self.unit.map(|u| vector(&u, self.dim, "unit")).transpose()?,
            signs: parse_signs(&self.signs)?,
            system,
            meta: self.metadata,
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraRaw {
    format: String,
    kind: String,
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    unit: Vec<Scalar>,
    involution: Vec<(usize, usize, Scalar)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sigma: Option<Vec<(usize, usize, Scalar)>>,
    #[serde(default, skip_serializing_if = "Metadata::is_empty")]
    metadata: Metadata,
    records: Vec<(usize, usize, usize, Scalar)>,
}

impl AlgebraRaw {
    fn from_doc(d: &AlgebraDoc) -> Self {
        let a = &d.algebra;
        AlgebraRaw {
            format: FORMAT.into(),
            kind: "involutive-algebra".into(),
            dim: a.dim(),
            label: a.label().map(String::from),
            unit: a.unit().entries().to_vec(),
            involution: map_records(a.involution()),
            sigma: d.sigma.as_ref().map(map_records),
            metadata: d.meta.clone(),
            records: a.records().map(|(i, j, k, v)| (i, j, k, v.clone())).collect(),
        }
    }

    fn into_doc(self) -> Result<AlgebraDoc, Error> {
        let n = self.dim;
        check_unique(self.records.iter().map(|r| (r.0, r.1, r.2)), "product")?;
        let product = crate::structurable::product_from_records(n, self.records)?;
        let involution = map_from_records(n, &self.involution, "involution")?;
        let unit = vector(&self.unit, n, "unit")?;
        let mut algebra = InvolutiveAlgebra::new_unchecked(n, product, involution, unit)?;
        if let Some(l) = self.label {
            algebra = algebra.with_label(l);
        }
        Ok(AlgebraDoc {
            algebra,
            sigma: self.sigma.map(|s| map_from_records(n, &s, "sigma")).transpose()?,
            meta: self.metadata,
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ElementRaw {
    label: String,
    degree: i8,
    parity: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GradedRaw {
    format: String,
    kind: String,
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    signs: Option<String>,
    elements: Vec<ElementRaw>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    phi: Option<Vec<(usize, usize, Scalar)>>,
    #[serde(default, skip_serializing_if = "Metadata::is_empty")]
    metadata: Metadata,
    records: Vec<(usize, usize, usize, Scalar)>,
}

impl GradedRaw {
    fn from_doc(d: &GradedDoc) -> Self {
        let g = &d.algebra;
        GradedRaw {
            format: FORMAT.into(),
            kind: "graded-superalgebra".into(),
            dim: g.dim(),
            label: g.label().map(String::from),
            signs: d.signs.map(|s| s.to_string()),
            elements: g
                .elements()
                .iter()
                .map(|e| ElementRaw {
                    label: e.label.clone(),
                    degree: e.degree,
                    parity: if e.odd { "odd" } else { "even" }.into(),
                })
                .collect(),
            phi: d.phi.as_ref().map(|p| map_records(p.op())),
            metadata: d.meta.clone(),
            records: g.records().map(|(i, j, k, v)| (i, j, k, v.clone())).collect(),
        }
    }

    fn into_doc(self) -> Result<GradedDoc, Error> {
        let n = self.dim;
        check_dim(n, self.elements.len(), "elements")?;
        let elements = self
            .elements
            .into_iter()
            .map(|e| {
                let odd = match e.parity.as_str() {
                    "odd" => true,
                    "even" => false,
                    p => return Err(Error::Parse(format!("parity must be even or odd, got {p:?}"))),
                };
                Ok(Element::new(e.label, e.degree, odd))
            })
            .collect::<Result<Vec<_>, Error>>()?;
        check_unique(self.records.iter().map(|r| (r.0, r.1, r.2)), "bracket")?;
        let mut algebra = GradedSuperalgebra::from_records(elements, self.records)?;
        if let Some(l) = self.label {
            algebra = algebra.with_label(l);
        }
        Ok(GradedDoc {
            algebra,
            phi: self
                .phi
                .map(|p| map_from_records(n, &p, "phi").map(PhiMap))
                .transpose()?,
            signs: parse_signs(&self.signs)?,
            meta: self.metadata,
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapRaw {
    format: String,
    kind: String,
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    #[serde(default, skip_serializing_if = "Metadata::is_empty")]
    metadata: Metadata,
    records: Vec<(usize, usize, Scalar)>,
}

impl MapRaw {
    fn from_doc(d: &MapDoc) -> Self {
        MapRaw {
            format: FORMAT.into(),
            kind: "linear-map".into(),
            dim: d.map.dim(),
            label: d.label.clone(),
            metadata: d.meta.clone(),
            records: map_records(&d.map),
        }
    }

    fn into_doc(self) -> Result<MapDoc, Error> {
        Ok(MapDoc {
            map: map_from_records(self.dim, &self.records, "map")?,
            label: self.label,
            meta: self.metadata,
        })
    }
}
