//! JSON interchange for graphs, proofs and fusion specs.
//!
//! Graphs are `{"vertices":[{"id":0,"label":"~p"}],"edges":[[0,2]],"classes":[[0,1]]}`
//! with `label` only on labelled graphs and `classes` only on coloured ones.
//! Proofs are `{"target":<graph>,"witness":<graph>,"map":{"0":0}}`. Output
//! is pretty-printed with keys sorted.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::formula::Atom;
use crate::graph::{ColouredGraph, Graph, LabelledGraph, Vertex};
use crate::proof::{CombinatorialProof, VertexMap};
use crate::transform::FusionSpec;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexJson {
    id: Vertex,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    vertices: Vec<VertexJson>,
    edges: Vec<[Vertex; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    classes: Option<Vec<Vec<Vertex>>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProofJson {
    target: GraphJson,
    witness: GraphJson,
    map: BTreeMap<String, Vertex>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FusionSpecJson {
    left: GraphJson,
    right: GraphJson,
    left_portion: Vec<Vertex>,
    right_portion: Vec<Vertex>,
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

fn parse<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| malformed(e.to_string()))
}

fn pretty<T: Serialize>(value: &T) -> String {
    let value: Value = serde_json::to_value(value).expect("plain data serializes");
    serde_json::to_string_pretty(&value).expect("values serialize")
}

fn encode(
    g: &Graph,
    labels: Option<&BTreeMap<Vertex, Atom>>,
    classes: Option<&[Vec<Vertex>]>,
) -> GraphJson {
    GraphJson {
        vertices: g
            .vertices()
            .map(|id| VertexJson {
                id,
                label: labels.map(|l| l[&id].to_string()),
            })
            .collect(),
        edges: g.edges().map(|(v, w)| [v, w]).collect(),
        classes: classes.map(<[_]>::to_vec),
    }
}

fn decode_graph(j: &GraphJson) -> Result<Graph> {
    let mut g = Graph::new();
    for v in &j.vertices {
        if g.contains(v.id) {
            return Err(malformed(format!("duplicate vertex id {}", v.id)));
        }
        g.add_vertex(v.id);
    }
    for [v, w] in &j.edges {
        g.add_edge(*v, *w)
            .map_err(|e| malformed(format!("edge [{v},{w}]: {e}")))?;
    }
    Ok(g)
}

fn decode_labelled(j: &GraphJson) -> Result<LabelledGraph> {
    let graph = decode_graph(j)?;
    let mut labels = BTreeMap::new();
    for v in &j.vertices {
        let text = v
            .label
            .as_deref()
            .ok_or_else(|| malformed(format!("vertex {} has no label", v.id)))?;
        let atom: Atom = text
            .parse()
            .map_err(|_| malformed(format!("vertex {}: bad label `{text}`", v.id)))?;
        labels.insert(v.id, atom);
    }
    LabelledGraph::from_parts(graph, labels)
}

fn decode_coloured(j: &GraphJson) -> Result<ColouredGraph> {
    let graph = decode_graph(j)?;
    let classes = j
        .classes
        .clone()
        .ok_or_else(|| malformed("coloured graph has no `classes`"))?;
    Ok(ColouredGraph::new_unchecked(graph, classes))
}

pub fn graph_to_json(g: &Graph) -> String {
    pretty(&encode(g, None, None))
}

pub fn labelled_to_json(g: &LabelledGraph) -> String {
    pretty(&encode(g.graph(), Some(g.labels()), None))
}

pub fn coloured_to_json(g: &ColouredGraph) -> String {
    pretty(&encode(g.graph(), None, Some(g.classes())))
}

pub fn labelled_from_json(text: &str) -> Result<LabelledGraph> {
    decode_labelled(&parse(text)?)
}

/// Classes are read as given; defects are left for the verifier to report.
pub fn coloured_from_json(text: &str) -> Result<ColouredGraph> {
    decode_coloured(&parse(text)?)
}

pub fn proof_to_json(proof: &CombinatorialProof) -> String {
    pretty(&ProofJson {
        target: encode(proof.target.graph(), Some(proof.target.labels()), None),
        witness: encode(proof.witness.graph(), None, Some(proof.witness.classes())),
        map: proof.map.iter().map(|(k, v)| (k.to_string(), v)).collect(),
    })
}

pub fn proof_from_json(text: &str) -> Result<CombinatorialProof> {
    let j: ProofJson = parse(text)?;
    let mut map = VertexMap::new();
    for (k, v) in &j.map {
        let key: Vertex = k
            .parse()
            .map_err(|_| malformed(format!("map key `{k}` is not a vertex id")))?;
        map.insert(key, *v);
    }
    Ok(CombinatorialProof {
        witness: decode_coloured(&j.witness)?,
        target: decode_labelled(&j.target)?,
        map,
    })
}

pub fn fusion_spec_to_json(spec: &FusionSpec) -> String {
    pretty(&FusionSpecJson {
        left: encode(spec.left.graph(), None, Some(spec.left.classes())),
        right: encode(spec.right.graph(), None, Some(spec.right.classes())),
        left_portion: spec.left_portion.iter().copied().collect(),
        right_portion: spec.right_portion.iter().copied().collect(),
    })
}

pub fn fusion_spec_from_json(text: &str) -> Result<FusionSpec> {
    let j: FusionSpecJson = parse(text)?;
    Ok(FusionSpec {
        left: decode_coloured(&j.left)?,
        right: decode_coloured(&j.right)?,
        left_portion: j.left_portion.into_iter().collect::<BTreeSet<_>>(),
        right_portion: j.right_portion.into_iter().collect(),
    })
}
