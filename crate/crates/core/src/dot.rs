//! Graphviz DOT rendering. Negative literals are shown as `¬p`.

use std::fmt::Write;

use crate::formula::Atom;
use crate::graph::{ColouredGraph, LabelledGraph, Vertex};
use crate::proof::CombinatorialProof;

const PALETTE: [&str; 8] = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5",
];

fn atom_label(a: &Atom) -> String {
    match a {
        Atom::Neg(v) => format!("¬{v}"),
        other => other.to_string(),
    }
}

fn write_labelled(out: &mut String, g: &LabelledGraph, prefix: &str, indent: &str) {
    for (v, a) in g.labels() {
        writeln!(out, "{indent}{prefix}{v} [label=\"{}\"];", atom_label(a)).unwrap();
    }
    for (v, w) in g.graph().edges() {
        writeln!(out, "{indent}{prefix}{v} -- {prefix}{w};").unwrap();
    }
}

fn write_coloured(out: &mut String, g: &ColouredGraph, prefix: &str, indent: &str) {
    let class_of = g.class_index();
    for v in g.vertices() {
        let colour = class_of
            .get(&v)
            .map_or("white", |i| PALETTE[i % PALETTE.len()]);
        writeln!(
            out,
            "{indent}{prefix}{v} [label=\"{v}\", style=filled, fillcolor=\"{colour}\"];"
        )
        .unwrap();
    }
    for (v, w) in g.graph().edges() {
        writeln!(out, "{indent}{prefix}{v} -- {prefix}{w};").unwrap();
    }
}

pub fn labelled_to_dot(g: &LabelledGraph) -> String {
    let mut out = String::from("graph G {\n");
    write_labelled(&mut out, g, "v", "  ");
    out.push_str("}\n");
    out
}

pub fn coloured_to_dot(g: &ColouredGraph) -> String {
    let mut out = String::from("graph C {\n");
    write_coloured(&mut out, g, "c", "  ");
    out.push_str("}\n");
    out
}

/// Witness cluster above the target cluster, with the map drawn as dashed
/// arrows.
pub fn proof_to_dot(proof: &CombinatorialProof) -> String {
    let mut out = String::from("graph proof {\n  rankdir=TB;\n  newrank=true;\n");
    out.push_str("  subgraph cluster_witness {\n    label=\"witness\";\n");
    write_coloured(&mut out, &proof.witness, "c", "    ");
    out.push_str("  }\n  subgraph cluster_target {\n    label=\"target\";\n");
    write_labelled(&mut out, &proof.target, "p", "    ");
    out.push_str("  }\n");
    let mapped: Vec<(Vertex, Vertex)> = proof.map.iter().collect();
    for (v, t) in mapped {
        writeln!(out, "  c{v} -- p{t} [style=dashed, dir=forward];").unwrap();
    }
    out.push_str("}\n");
    out
}
