//! JSON, DOT and CSV renderings of a mixed graph.
//!
//! All three list vertices in graph order, edges sorted by the positions of
//! their endpoints (lower position first) and arcs sorted by (tail, head)
//! position, so identical graphs always render to identical bytes.

use std::fmt::{Debug, Write as _};
use std::hash::Hash;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{GraphError, MixedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Json,
    Dot,
    Csv,
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(GraphFormat::Json),
            "dot" => Ok(GraphFormat::Dot),
            "csv" => Ok(GraphFormat::Csv),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

/// Serializable form of a labelled mixed graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<serde_json::Value>,
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
    pub arcs: Vec<[String; 2]>,
}

impl GraphDocument {
    pub fn new<V: Clone + Eq + Hash + Debug>(
        g: &MixedGraph<V>,
        label: impl Fn(&V) -> String,
    ) -> Self {
        let labels: Vec<String> = g.vertices().iter().map(label).collect();
        let mut edges: Vec<(usize, usize)> = g
            .edge_indices()
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        let mut arcs = g.arc_indices().to_vec();
        edges.sort_unstable();
        arcs.sort_unstable();
        let pair = |(a, b): (usize, usize)| [labels[a].clone(), labels[b].clone()];
        Self {
            q: None,
            construction: None,
            params: None,
            edges: edges.into_iter().map(pair).collect(),
            arcs: arcs.into_iter().map(pair).collect(),
            vertices: labels,
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("document is serializable");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Arcs become directed edges; undirected edges carry `dir=none`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph G {\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  {};", dot_id(v));
        }
        for [u, v] in &self.edges {
            let _ = writeln!(out, "  {} -> {} [dir=none];", dot_id(u), dot_id(v));
        }
        for [u, v] in &self.arcs {
            let _ = writeln!(out, "  {} -> {};", dot_id(u), dot_id(v));
        }
        out.push_str("}\n");
        out
    }

    /// Edge list with header `source,target,type`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["source", "target", "type"])
            .expect("writing to memory");
        for [u, v] in &self.edges {
            w.write_record([u.as_str(), v.as_str(), "edge"])
                .expect("writing to memory");
        }
        for [u, v] in &self.arcs {
            w.write_record([u.as_str(), v.as_str(), "arc"])
                .expect("writing to memory");
        }
        String::from_utf8(w.into_inner().expect("flushing to memory")).expect("labels are UTF-8")
    }

    pub fn render(&self, format: GraphFormat) -> String {
        match format {
            GraphFormat::Json => self.to_json(),
            GraphFormat::Dot => self.to_dot(),
            GraphFormat::Csv => self.to_csv(),
        }
    }

    /// Rebuilds the graph over string labels, re-validating simplicity.
    pub fn to_graph(&self) -> Result<MixedGraph<String>, GraphError> {
        MixedGraph::from_parts(
            self.vertices.iter().cloned(),
            self.edges.iter().map(|[u, v]| (u.clone(), v.clone())),
            self.arcs.iter().map(|[u, v]| (u.clone(), v.clone())),
        )
    }
}

fn dot_id(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}
