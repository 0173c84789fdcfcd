//! Construction of combinatorial proofs for true combinatorial
//! propositions, by induction on the number of edges.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::formula::{Atom, Proposition};
use crate::graph::{cotree, graph_of, ColouredGraph, Cotree, Graph, LabelledGraph, Vertex};
use crate::proof::{verify, CombinatorialProof, VertexMap};
use crate::semantics::{find_false_clause, graph_is_true_with_limit, DEFAULT_MAX_CLAUSES};
use crate::transform::{fusion, is_portion, FusionSpec};

/// A combinatorial proof of `p`, or `NotTrue` with a false clause.
///
/// Edgeless `p` is a single clause and is proved by one axiomatic class
/// (a 1-labelled vertex if there is one, else the least dual pair). Otherwise
/// `p = (P1 & P2) | Q` is read off the cotree: if `Q` is non-empty and true
/// it is proved alone; otherwise proofs of `P1 | Q` and `P2 | Q` are fused
/// along the preimages of `P1` and `P2`.
///
/// The result is checked with [`verify`] before it is returned.
pub fn synthesize(p: &LabelledGraph) -> Result<CombinatorialProof> {
    synthesize_with_limit(p, DEFAULT_MAX_CLAUSES)
}

pub fn synthesize_with_limit(p: &LabelledGraph, max_clauses: usize) -> Result<CombinatorialProof> {
    cotree(p.graph())?;
    if let Some(clause) = find_false_clause(p, max_clauses)? {
        return Err(Error::NotTrue {
            clause: clause.into_iter().collect(),
        });
    }
    let mut builder = Builder {
        next: 0,
        max_clauses,
    };
    let (witness, map) = builder.build(p)?;
    let proof = CombinatorialProof {
        witness,
        target: p.clone(),
        map,
    };
    if let Err(violations) = verify(&proof) {
        let text: Vec<String> = violations.iter().map(ToString::to_string).collect();
        return Err(Error::InternalInvariantBroken(format!(
            "synthesized proof does not verify: {}",
            text.join("; ")
        )));
    }
    Ok(proof)
}

/// [`synthesize`] applied to the graph of `phi`.
pub fn prove(phi: &Proposition) -> Result<CombinatorialProof> {
    synthesize(&graph_of(phi))
}

pub fn prove_with_limit(phi: &Proposition, max_clauses: usize) -> Result<CombinatorialProof> {
    synthesize_with_limit(&graph_of(phi), max_clauses)
}

struct Builder {
    next: Vertex,
    max_clauses: usize,
}

impl Builder {
    fn fresh(&mut self) -> Vertex {
        let v = self.next;
        self.next += 1;
        v
    }

    fn build(&mut self, p: &LabelledGraph) -> Result<(ColouredGraph, VertexMap)> {
        if p.edge_count() == 0 {
            return self.axiom(p);
        }
        let (p1, p2, q) = split_tensor(&cotree(p.graph())?);
        if !q.is_empty() {
            let pq = p.induced(&q)?;
            if graph_is_true_with_limit(&pq, self.max_clauses)? {
                return self.build(&pq);
            }
        }
        let (c1, h1) = self.build(&p.induced(&p1.union(&q).copied().collect())?)?;
        let (c2, h2) = self.build(&p.induced(&p2.union(&q).copied().collect())?)?;
        let spec = FusionSpec {
            left_portion: h1.preimage(&p1),
            right_portion: h2.preimage(&p2),
            left: c1,
            right: c2,
        };
        if !is_portion(spec.left.graph(), &spec.left_portion)
            || !is_portion(spec.right.graph(), &spec.right_portion)
        {
            return Err(Error::InternalInvariantBroken(
                "preimage of a tensor factor is not a portion".into(),
            ));
        }
        let mut map = h1;
        map.extend(&h2);
        Ok((fusion(&spec)?, map))
    }

    fn axiom(&mut self, p: &LabelledGraph) -> Result<(ColouredGraph, VertexMap)> {
        let targets = axiom_vertices(p).ok_or_else(|| {
            Error::InternalInvariantBroken("true edgeless proposition without an axiom".into())
        })?;
        let map: VertexMap = targets.iter().map(|&t| (self.fresh(), t)).collect();
        let ids: Vec<Vertex> = map.iter().map(|(v, _)| v).collect();
        let graph = Graph::from_edges(ids.iter().copied(), [])?;
        Ok((ColouredGraph::new(graph, vec![ids])?, map))
    }
}

fn axiom_vertices(p: &LabelledGraph) -> Option<Vec<Vertex>> {
    if let Some((&v, _)) = p.labels().iter().find(|(_, a)| **a == Atom::One) {
        return Some(vec![v]);
    }
    let labels = p.labels();
    labels.iter().find_map(|(&v, a)| {
        labels
            .iter()
            .find(|(&w, b)| w > v && Atom::are_dual_literals(a, b))
            .map(|(&w, _)| vec![v, w])
    })
}

/// `(P1, P2, Q)` with the graph equal to `(P1 & P2) | Q`. Requires at least
/// one edge.
fn split_tensor(t: &Cotree) -> (BTreeSet<Vertex>, BTreeSet<Vertex>, BTreeSet<Vertex>) {
    let leaves_of =
        |ts: &[Cotree]| -> BTreeSet<Vertex> { ts.iter().flat_map(Cotree::leaves).collect() };
    match t {
        Cotree::Join(cs) => (cs[0].leaves(), leaves_of(&cs[1..]), BTreeSet::new()),
        Cotree::Union(cs) => {
            let k = cs
                .iter()
                .position(Cotree::is_join)
                .expect("graph has an edge");
            let join = cs[k].children();
            let q = cs
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != k)
                .flat_map(|(_, c)| c.leaves())
                .collect();
            (join[0].leaves(), leaves_of(&join[1..]), q)
        }
        Cotree::Leaf(_) => unreachable!("a single vertex has no edges"),
    }
}
