//! JSON documents for layouts, graphs and verdicts.
//!
//! Coordinates travel as decimal strings (`"-6.35"`), fraction strings
//! (`"7/3"`) or JSON integers; JSON floats are refused because they are not
//! exact. A parsed document keeps the literal text, so a document
//! round-trips verbatim; [`serialize_layout`] writes the canonical form.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::coord::Coord;
use crate::error::{Error, Result};
use crate::geometry::{Layout, Mode, Rect};
use crate::graph::Graph;
use crate::represent::{Decision, Evidence, Verdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoordLit {
    Int(i64),
    Text(String),
}

impl CoordLit {
    pub fn parse(&self) -> Result<Coord> {
        match self {
            CoordLit::Int(v) => Ok(Coord::int(*v)),
            CoordLit::Text(s) => s.parse(),
        }
    }

    pub fn canonical(c: &Coord) -> CoordLit {
        match c.to_i64() {
            Some(v) => CoordLit::Int(v),
            None => CoordLit::Text(c.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DocMode {
    Trvg,
    Itrvg,
}

impl From<Mode> for DocMode {
    fn from(m: Mode) -> DocMode {
        match m {
            Mode::Disjoint => DocMode::Trvg,
            Mode::Intersecting => DocMode::Itrvg,
        }
    }
}

impl From<DocMode> for Mode {
    fn from(m: DocMode) -> Mode {
        match m {
            DocMode::Trvg => Mode::Disjoint,
            DocMode::Itrvg => Mode::Intersecting,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RectDoc {
    pub id: String,
    pub x: [CoordLit; 2],
    pub y: [CoordLit; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LayoutDoc {
    pub mode: DocMode,
    pub rects: Vec<RectDoc>,
}

fn from_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de)
        .map_err(|e| Error::Schema { path: e.path().to_string(), message: e.inner().to_string() })
}

pub(crate) fn from_value<T: serde::de::DeserializeOwned>(value: Value) -> Result<T> {
    serde_path_to_error::deserialize(value)
        .map_err(|e| Error::Schema { path: e.path().to_string(), message: e.inner().to_string() })
}

impl LayoutDoc {
    pub fn parse(text: &str) -> Result<LayoutDoc> {
        from_json(text)
    }

    pub fn from_value(value: Value) -> Result<LayoutDoc> {
        from_value(value)
    }

    pub fn to_layout(&self) -> Result<Layout> {
        let rects = self
            .rects
            .iter()
            .map(|r| Rect::new(r.id.clone(), r.x[0].parse()?, r.x[1].parse()?, r.y[0].parse()?, r.y[1].parse()?))
            .collect::<Result<Vec<_>>>()?;
        Layout::new(rects, self.mode.into())
    }

    pub fn from_layout(layout: &Layout) -> LayoutDoc {
        LayoutDoc {
            mode: layout.mode().into(),
            rects: layout
                .rects()
                .iter()
                .map(|r| RectDoc {
                    id: r.id().to_string(),
                    x: [CoordLit::canonical(r.x_lo()), CoordLit::canonical(r.x_hi())],
                    y: [CoordLit::canonical(r.y_lo()), CoordLit::canonical(r.y_hi())],
                })
                .collect(),
        }
    }

    /// One rectangle per line; the byte format of the shipped fixtures.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = write!(out, "{{\n  \"mode\": {},\n  \"rects\": [", j(&self.mode));
        for (i, r) in self.rects.iter().enumerate() {
            let sep = if i + 1 == self.rects.len() { "" } else { "," };
            let _ = write!(
                out,
                "\n    {{\"id\": {}, \"x\": [{}, {}], \"y\": [{}, {}]}}{sep}",
                j(&r.id),
                j(&r.x[0]),
                j(&r.x[1]),
                j(&r.y[0]),
                j(&r.y[1])
            );
        }
        if !self.rects.is_empty() {
            out.push_str("\n  ");
        }
        out.push_str("]\n}\n");
        out
    }
}

fn j<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

pub fn parse_layout(text: &str) -> Result<Layout> {
    LayoutDoc::parse(text)?.to_layout()
}

pub fn serialize_layout(layout: &Layout) -> String {
    LayoutDoc::from_layout(layout).to_text()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parts: Option<Vec<usize>>,
}

impl GraphDoc {
    pub fn parse(text: &str) -> Result<GraphDoc> {
        from_json(text)
    }

    pub fn from_value(value: Value) -> Result<GraphDoc> {
        from_value(value)
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let g = Graph::new(self.n, self.edges.iter().map(|e| (e[0], e[1])))?;
        if let Some(parts) = &self.parts {
            if parts.len() != self.n {
                return Err(Error::InvalidGraph(format!("{} part indices for {} vertices", parts.len(), self.n)));
            }
        }
        match &self.labels {
            Some(l) => g.with_labels(l.clone()),
            None => Ok(g),
        }
    }

    pub fn from_graph(g: &Graph, parts: Option<Vec<usize>>) -> GraphDoc {
        GraphDoc {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            labels: g.labels().map(|l| l.to_vec()),
            parts,
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    GraphDoc::parse(text)?.to_graph()
}

pub fn serialize_graph(g: &Graph) -> String {
    GraphDoc::from_graph(g, None).to_text()
}

/// Single JSON object describing a decision; the certificate is embedded
/// as a layout document and refutation witnesses use `g`'s labels.
pub fn verdict_json(g: &Graph, d: &Decision) -> Value {
    match &d.verdict {
        Verdict::Yes(layout) => json!({
            "verdict": "yes",
            "nodes": d.nodes,
            "certificate": LayoutDoc::from_layout(layout),
        }),
        Verdict::No(ev) => {
            let evidence = match ev {
                Evidence::Exhausted => json!({"kind": "exhausted"}),
                Evidence::InducedK333(w) => json!({
                    "kind": "induced_k333",
                    "witness": w.iter().map(|&v| g.label(v)).collect::<Vec<_>>(),
                }),
                Evidence::EdgeBound { k, n, e } => json!({
                    "kind": "edge_bound",
                    "k": k,
                    "n": n,
                    "e": e,
                    "bound": crate::families::edge_bound(*n, *k),
                }),
            };
            json!({"verdict": "no", "nodes": d.nodes, "evidence": evidence})
        }
        Verdict::Unknown { timed_out } => json!({
            "verdict": "unknown",
            "nodes": d.nodes,
            "timed_out": timed_out,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_layout_parses() {
        let l = parse_layout(r#"{"mode":"trvg","rects":[]}"#).unwrap();
        assert!(l.is_empty());
        assert_eq!(l.mode(), Mode::Disjoint);
        assert_eq!(parse_layout(&serialize_layout(&l)).unwrap(), l);
    }

    #[test]
    fn zero_width_is_named() {
        let err = parse_layout(r#"{"mode":"trvg","rects":[{"id":"r","x":[1,1],"y":[0,1]}]}"#).unwrap_err();
        assert!(matches!(err, Error::ZeroWidth { ref id } if id == "r"), "{err}");
    }

    #[test]
    fn schema_errors_carry_paths() {
        let err = parse_layout(r#"{"mode":"trvg","rects":[{"id":"r","x":[0,1],"y":[0.5,1]}]}"#).unwrap_err();
        match err {
            Error::Schema { path, .. } => assert!(path.starts_with("rects[0].y"), "{path}"),
            other => panic!("{other}"),
        }
        let err = parse_layout(r#"{"mode":"rvg","rects":[]}"#).unwrap_err();
        assert!(matches!(err, Error::Schema { ref path, .. } if path == "mode"));
    }

    #[test]
    fn literals_survive_document_round_trip() {
        let text = r#"{"mode":"itrvg","rects":[{"id":"a","x":["0.50","7/3"],"y":[-2,"1.0"]}]}"#;
        let doc = LayoutDoc::parse(text).unwrap();
        assert_eq!(LayoutDoc::parse(&doc.to_text()).unwrap(), doc);
        assert!(doc.to_text().contains("\"0.50\""));
        let l = doc.to_layout().unwrap();
        assert_eq!(parse_layout(&serialize_layout(&l)).unwrap(), l);
        assert!(serialize_layout(&l).contains("\"0.5\""));
    }

    #[test]
    fn graph_docs() {
        let g = parse_graph(r#"{"n":3,"edges":[[0,1],[2,1]],"labels":["a","b","c"]}"#).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(parse_graph(&serialize_graph(&g)).unwrap(), g);
        assert!(parse_graph(r#"{"n":2,"edges":[[0,2]]}"#).is_err());
        assert!(parse_graph(r#"{"n":2,"edges":[[0,1]],"parts":[0]}"#).is_err());
        assert!(matches!(parse_graph(r#"{"n":2,"edge":[]}"#), Err(Error::Schema { .. })));
    }
}
