//! Serialized forms of a built family member.

use std::fmt::Write as _;

use nanocone::families::FamilyInstance;
use nanocone::graph::Graph;
use num_rational::Rational64;
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

/// JSON form of a graph. Coordinates are exact fractions written as
/// strings, e.g. `"-3/2"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub format_version: u32,
    pub family: String,
    pub params: Vec<i64>,
    pub vertex_count: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coordinates: Option<Vec<[String; 2]>>,
}

impl GraphDocument {
    pub fn from_instance(inst: &FamilyInstance) -> Self {
        let spec = inst.spec();
        GraphDocument {
            format_version: FORMAT_VERSION,
            family: spec.family().name().to_owned(),
            params: spec.params(),
            vertex_count: inst.graph().vertex_count(),
            edges: inst.graph().edges().iter().map(|&(u, v)| [u, v]).collect(),
            coordinates: Some(inst.embedding().iter().map(|(x, y)| [x.to_string(), y.to_string()]).collect()),
        }
    }

    /// Rebuilds the graph, rejecting out-of-range or repeated edges.
    pub fn to_graph(&self) -> nanocone::error::Result<Graph> {
        Graph::new(self.vertex_count, self.edges.iter().map(|&[u, v]| (u, v)))
    }
}

fn approx(r: &Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Graphviz text with `pos` attributes taken from the embedding.
pub fn to_dot(inst: &FamilyInstance) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{}\" {{", inst.spec());
    out.push_str("  node [shape=point];\n");
    for (v, (x, y)) in inst.embedding().iter().enumerate() {
        let _ = writeln!(out, "  {v} [pos=\"{:.6},{:.6}!\"];", approx(x), approx(y));
    }
    for &(u, v) in inst.graph().edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

pub fn to_csv(graph: &Graph) -> String {
    let mut out = String::from("u,v\n");
    for &(u, v) in graph.edges() {
        let _ = writeln!(out, "{u},{v}");
    }
    out
}
