//! graph6 strings, versioned JSON documents and Hasse diagrams in DOT.
//!
//! Every document carries `schema` and `version`; integer payloads that
//! can grow (labels, coefficients, deck counts) are decimal strings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::graph::{canonical_code, CanonicalCode, Graph, IntPartition, MAX_VERTICES};
use crate::lattice::{FoldedLattice, LabelMode, LatticeElement, MobiusTable, PartitionDeck, TypeLabel};
use crate::poset::{LabeledPoset, PosetElement};
use crate::symfun::{MonomialSymFn, TutteSymFn};

pub const SCHEMA_VERSION: u32 = 1;

fn g6_error(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

/// graph6 encoding: a size header, then the upper triangle column by
/// column (x(0,1), x(0,2), x(1,2), ..) in 6-bit groups offset by 63.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = String::new();
    if n < 63 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            used += 1;
            if used == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(((acc << (6 - used)) + 63) as char);
    }
    out
}

pub fn parse_graph6(s: &str) -> Result<Graph> {
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s).trim_end_matches(['\n', '\r']);
    let bytes = s.as_bytes();
    let value = |i: usize| -> Result<u32> {
        match bytes.get(i) {
            Some(&c) if (63..=126).contains(&c) => Ok(u32::from(c - 63)),
            Some(_) => Err(g6_error(i, "character outside 63..=126")),
            None => Err(g6_error(i, "unexpected end of input")),
        }
    };
    let (n, body) = match bytes.first() {
        None => return Err(g6_error(0, "empty string")),
        Some(b'~') => {
            if bytes.get(1) == Some(&b'~') {
                return Err(g6_error(1, "36-bit size header is not supported"));
            }
            let n = (value(1)? << 12) | (value(2)? << 6) | value(3)?;
            if n < 63 {
                return Err(g6_error(0, "long size header used for fewer than 63 vertices"));
            }
            (n as usize, 4)
        }
        Some(_) => (value(0)? as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let chars = bits.div_ceil(6);
    if bytes.len() != body + chars {
        return Err(g6_error(bytes.len().min(body + chars), format!("expected {} characters", body + chars)));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let c = value(body + k / 6)?;
            if c & (32 >> (k % 6)) != 0 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if chars > 0 {
        let pad = chars * 6 - bits;
        if value(body + chars - 1)? & ((1 << pad) - 1) != 0 {
            return Err(g6_error(body + chars - 1, "non-zero padding bits"));
        }
    }
    Ok(g)
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&write_graph6(&self.graph()))
    }
}

impl<'de> Deserialize<'de> for CanonicalCode {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<CanonicalCode, D::Error> {
        let s = String::deserialize(d)?;
        parse_graph6(&s).map(|g| canonical_code(&g)).map_err(D::Error::custom)
    }
}

fn check_header(v: &Value, schema: &str) -> Result<()> {
    let got = v.get("schema").and_then(Value::as_str);
    if got != Some(schema) {
        return Err(Error::Json(format!("expected schema {schema:?}, found {got:?}")));
    }
    match v.get("version").and_then(Value::as_u64) {
        Some(x) if x == u64::from(SCHEMA_VERSION) => Ok(()),
        other => Err(Error::Json(format!("unsupported {schema} version {other:?}"))),
    }
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Json(e.to_string())
}

fn parse_count(s: &str) -> Result<u64> {
    s.parse().map_err(|_| Error::Json(format!("not a non-negative integer: {s:?}")))
}

#[derive(Serialize, Deserialize)]
struct ElementDoc {
    id: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    graph6: Option<CanonicalCode>,
    #[serde(default, rename = "type", skip_serializing_if = "Option::is_none")]
    type_label: Option<TypeLabel>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    shape: Option<IntPartition>,
}

#[derive(Serialize, Deserialize)]
struct RelationDoc {
    lower: usize,
    upper: usize,
    label: String,
}

#[derive(Serialize, Deserialize)]
struct OrderDoc {
    schema: String,
    version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mode: Option<LabelMode>,
    elements: Vec<ElementDoc>,
    relations: Vec<RelationDoc>,
}

fn relation_docs(n: usize, label: impl Fn(usize, usize) -> Option<u64>) -> Vec<RelationDoc> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b {
                if let Some(l) = label(a, b) {
                    out.push(RelationDoc { lower: a, upper: b, label: l.to_string() });
                }
            }
        }
    }
    out
}

fn label_matrix(n: usize, relations: &[RelationDoc]) -> Result<Vec<u64>> {
    let mut labels = vec![0u64; n * n];
    for i in 0..n {
        labels[i * n + i] = 1;
    }
    for r in relations {
        if r.lower >= n || r.upper >= n || r.lower == r.upper {
            return Err(Error::Json(format!("bad relation {} -> {}", r.lower, r.upper)));
        }
        let l = parse_count(&r.label)?;
        if l == 0 {
            return Err(Error::Json("relation labels must be positive".into()));
        }
        labels[r.lower * n + r.upper] = l;
    }
    Ok(labels)
}

fn check_ids(elements: &[ElementDoc]) -> Result<()> {
    for (i, e) in elements.iter().enumerate() {
        if e.id != i {
            return Err(Error::Json(format!("element ids must be 0..n in order; found {} at {i}", e.id)));
        }
    }
    Ok(())
}

/// `kind` names the poset ("induced", "edge"); it is informational.
pub fn poset_to_json(p: &LabeledPoset, kind: Option<&str>) -> Value {
    let doc = OrderDoc {
        schema: "posetlab/poset".into(),
        version: SCHEMA_VERSION,
        kind: kind.map(str::to_string),
        mode: None,
        elements: p
            .elements()
            .iter()
            .enumerate()
            .map(|(id, e)| ElementDoc { id, graph6: e.code.clone(), type_label: e.type_label.clone(), shape: None })
            .collect(),
        relations: relation_docs(p.len(), |a, b| p.label(a, b)),
    };
    serde_json::to_value(doc).expect("serializable")
}

pub fn poset_from_json(v: &Value) -> Result<LabeledPoset> {
    check_header(v, "posetlab/poset")?;
    let doc: OrderDoc = serde_json::from_value(v.clone()).map_err(json_err)?;
    check_ids(&doc.elements)?;
    let labels = label_matrix(doc.elements.len(), &doc.relations)?;
    let elements = doc.elements.into_iter().map(|e| PosetElement { code: e.graph6, type_label: e.type_label }).collect();
    LabeledPoset::from_labels(elements, labels)
}

pub fn lattice_to_json(l: &FoldedLattice) -> Value {
    let doc = OrderDoc {
        schema: "posetlab/lattice".into(),
        version: SCHEMA_VERSION,
        kind: None,
        mode: Some(l.mode()),
        elements: l
            .elements()
            .iter()
            .enumerate()
            .map(|(id, e)| ElementDoc {
                id,
                graph6: e.code.clone(),
                type_label: e.type_label.clone(),
                shape: e.shape.clone(),
            })
            .collect(),
        relations: relation_docs(l.len(), |a, b| l.label(a, b)),
    };
    serde_json::to_value(doc).expect("serializable")
}

pub fn lattice_from_json(v: &Value) -> Result<FoldedLattice> {
    check_header(v, "posetlab/lattice")?;
    let doc: OrderDoc = serde_json::from_value(v.clone()).map_err(json_err)?;
    check_ids(&doc.elements)?;
    let mode = doc.mode.ok_or_else(|| Error::Json("lattice document needs a mode".into()))?;
    let labels = label_matrix(doc.elements.len(), &doc.relations)?;
    let elements = doc
        .elements
        .into_iter()
        .map(|e| LatticeElement { code: e.graph6, type_label: e.type_label, shape: e.shape })
        .collect();
    FoldedLattice::from_parts(mode, elements, labels)
}

fn partition_key(l: &IntPartition) -> String {
    let parts: Vec<String> = l.parts().iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

fn parse_partition_key(s: &str) -> Result<IntPartition> {
    let inner = s
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .ok_or_else(|| Error::Json(format!("partition key {s:?} must look like (2,1,1)")))?;
    let parts = inner
        .split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|_| Error::Json(format!("bad part in {s:?}"))))
        .collect::<Result<Vec<u32>>>()?;
    IntPartition::new(parts)
}

/// `{"(2,1)": "3", ..}`: the form printed by `symfun chromatic`.
pub fn symfn_compact(x: &MonomialSymFn) -> Value {
    let mut m = Map::new();
    for (l, c) in x.coeffs() {
        m.insert(partition_key(l), Value::String(c.to_string()));
    }
    Value::Object(m)
}

/// `{"(2,1)": {"0": "3", "1": "1"}, ..}` with inner keys the power j of (1+t).
pub fn tutte_compact(x: &TutteSymFn) -> Value {
    let mut m = Map::new();
    for ((l, j), c) in x.coeffs() {
        let e = m.entry(partition_key(l)).or_insert_with(|| Value::Object(Map::new()));
        e.as_object_mut().expect("object").insert(j.to_string(), Value::String(c.to_string()));
    }
    Value::Object(m)
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    partition: IntPartition,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    j: Option<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SymFnDoc {
    schema: String,
    version: u32,
    basis: String,
    degree: u32,
    terms: Vec<TermDoc>,
}

pub fn symfn_to_json(x: &MonomialSymFn) -> Value {
    let doc = SymFnDoc {
        schema: "posetlab/symfun".into(),
        version: SCHEMA_VERSION,
        basis: "monomial".into(),
        degree: x.degree(),
        terms: x.coeffs().iter().map(|(l, c)| TermDoc { partition: l.clone(), j: None, coeff: c.to_string() }).collect(),
    };
    serde_json::to_value(doc).expect("serializable")
}

pub fn tutte_to_json(x: &TutteSymFn) -> Value {
    let doc = SymFnDoc {
        schema: "posetlab/symfun".into(),
        version: SCHEMA_VERSION,
        basis: "monomial-t".into(),
        degree: x.degree(),
        terms: x
            .coeffs()
            .iter()
            .map(|((l, j), c)| TermDoc { partition: l.clone(), j: Some(*j), coeff: c.to_string() })
            .collect(),
    };
    serde_json::to_value(doc).expect("serializable")
}

fn degree_of<'a>(keys: impl Iterator<Item = &'a IntPartition>) -> Result<u32> {
    let mut d = None;
    for l in keys {
        match d {
            None => d = Some(l.size()),
            Some(x) if x == l.size() => {}
            Some(_) => return Err(Error::Json("partitions of different sizes".into())),
        }
    }
    d.ok_or_else(|| Error::Json("no terms".into()))
}

/// Reads either the versioned document or the compact map.
pub fn symfn_from_json(v: &Value) -> Result<MonomialSymFn> {
    if v.get("schema").is_some() {
        check_header(v, "posetlab/symfun")?;
        let doc: SymFnDoc = serde_json::from_value(v.clone()).map_err(json_err)?;
        if doc.basis != "monomial" {
            return Err(Error::Json(format!("expected the monomial basis, found {:?}", doc.basis)));
        }
        let mut coeffs = BTreeMap::new();
        for t in doc.terms {
            coeffs.insert(t.partition, parse_count(&t.coeff)?);
        }
        return MonomialSymFn::new(doc.degree, coeffs);
    }
    let obj = v.as_object().ok_or_else(|| Error::Json("symmetric function must be an object".into()))?;
    let mut coeffs = BTreeMap::new();
    for (k, c) in obj {
        let c = c.as_str().ok_or_else(|| Error::Json(format!("coefficient of {k} must be a string")))?;
        coeffs.insert(parse_partition_key(k)?, parse_count(c)?);
    }
    MonomialSymFn::new(degree_of(coeffs.keys())?, coeffs)
}

pub fn tutte_from_json(v: &Value) -> Result<TutteSymFn> {
    let mut coeffs = BTreeMap::new();
    if v.get("schema").is_some() {
        check_header(v, "posetlab/symfun")?;
        let doc: SymFnDoc = serde_json::from_value(v.clone()).map_err(json_err)?;
        if doc.basis != "monomial-t" {
            return Err(Error::Json(format!("expected the monomial-t basis, found {:?}", doc.basis)));
        }
        for t in doc.terms {
            let j = t.j.ok_or_else(|| Error::Json("monomial-t terms need j".into()))?;
            coeffs.insert((t.partition, j), parse_count(&t.coeff)?);
        }
        return TutteSymFn::new(doc.degree, coeffs);
    }
    let obj = v.as_object().ok_or_else(|| Error::Json("symmetric function must be an object".into()))?;
    for (k, inner) in obj {
        let l = parse_partition_key(k)?;
        let inner = inner.as_object().ok_or_else(|| Error::Json(format!("{k} must map powers of (1+t)")))?;
        for (j, c) in inner {
            let j: u32 = j.parse().map_err(|_| Error::Json(format!("bad power {j:?}")))?;
            let c = c.as_str().ok_or_else(|| Error::Json("coefficients must be strings".into()))?;
            coeffs.insert((l.clone(), j), parse_count(c)?);
        }
    }
    let degree = degree_of(coeffs.keys().map(|(l, _)| l))?;
    TutteSymFn::new(degree, coeffs)
}

pub fn deck_to_json(d: &PartitionDeck) -> Value {
    let entries: Vec<Value> =
        d.iter().map(|(l, k)| json!({ "partition": l, "count": k.to_string() })).collect();
    json!({
        "schema": "posetlab/deck",
        "version": SCHEMA_VERSION,
        "vertices": d.vertex_count(),
        "entries": entries,
    })
}

pub fn deck_from_json(v: &Value) -> Result<PartitionDeck> {
    check_header(v, "posetlab/deck")?;
    let entries = v.get("entries").and_then(Value::as_array).ok_or_else(|| Error::Json("deck needs entries".into()))?;
    let mut m = BTreeMap::new();
    for e in entries {
        let l: IntPartition =
            serde_json::from_value(e.get("partition").cloned().unwrap_or(Value::Null)).map_err(json_err)?;
        let c = e.get("count").and_then(Value::as_str).ok_or_else(|| Error::Json("deck counts are strings".into()))?;
        m.insert(l, parse_count(c)?);
    }
    let sizes: std::collections::BTreeSet<u32> = m.keys().map(IntPartition::size).collect();
    if sizes.len() > 1 {
        return Err(Error::Json("deck partitions have different sizes".into()));
    }
    Ok(PartitionDeck::from_map(m))
}

pub fn mobius_to_json(l: &FoldedLattice, mu: &MobiusTable) -> Value {
    let values: Vec<Value> = (0..l.len())
        .map(|i| json!({ "id": i, "rank": l.rank(i), "mu": mu.get(i).to_string() }))
        .collect();
    json!({ "schema": "posetlab/mobius", "version": SCHEMA_VERSION, "bottom": l.bottom(), "values": values })
}

/// Orders that can be drawn as a Hasse diagram.
pub trait Hasse {
    fn node_labels(&self) -> Vec<String>;
    fn cover_edges(&self) -> Vec<(usize, usize, u64)>;
}

fn element_label(code: Option<&CanonicalCode>, t: Option<&TypeLabel>, id: usize) -> String {
    match (code, t) {
        (Some(c), _) => write_graph6(&c.graph()),
        (None, Some(t)) => t.to_string(),
        (None, None) => id.to_string(),
    }
}

impl Hasse for LabeledPoset {
    fn node_labels(&self) -> Vec<String> {
        self.elements().iter().enumerate().map(|(i, e)| element_label(e.code.as_ref(), e.type_label.as_ref(), i)).collect()
    }

    fn cover_edges(&self) -> Vec<(usize, usize, u64)> {
        self.covers()
    }
}

impl Hasse for FoldedLattice {
    fn node_labels(&self) -> Vec<String> {
        self.elements().iter().enumerate().map(|(i, e)| element_label(e.code.as_ref(), e.type_label.as_ref(), i)).collect()
    }

    fn cover_edges(&self) -> Vec<(usize, usize, u64)> {
        self.covers()
    }
}

pub fn export_hasse_dot(x: &impl Hasse) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
    for (i, label) in x.node_labels().iter().enumerate() {
        let escaped = label.replace('\\', "\\\\").replace('"', "\\\"");
        writeln!(out, "  n{i} [label=\"{escaped}\"];").expect("string write");
    }
    let mut edges = x.cover_edges();
    edges.sort();
    for (a, b, l) in edges {
        writeln!(out, "  n{a} -> n{b} [label=\"{l}\"];").expect("string write");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn small_graph6_strings() {
        assert_eq!(write_graph6(&named::path(2)), "A_");
        assert_eq!(write_graph6(&named::empty(2)), "A?");
        assert_eq!(write_graph6(&named::empty(0)), "?");
        assert_eq!(parse_graph6("A_").unwrap(), named::path(2));
    }

    #[test]
    fn graph6_rejects_bad_input() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(parse_graph6("A"), Err(Error::Graph6 { .. })));
        // K_2 with a stray padding bit.
        assert!(matches!(parse_graph6("A`"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("A_?"), Err(Error::Graph6 { .. })));
    }

    #[test]
    fn partition_keys() {
        let l = IntPartition::new(vec![1, 2]).unwrap();
        assert_eq!(partition_key(&l), "(2,1)");
        assert_eq!(parse_partition_key("(2,1)").unwrap(), l);
        assert!(parse_partition_key("2,1").is_err());
    }
}
