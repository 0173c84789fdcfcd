//! Finite simple graphs, their labelled and coloured variants, the
//! union/join/complement algebra and the translation of propositions into
//! labelled graphs.

mod cotree;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::formula::{Atom, Proposition};

pub use cotree::{canonical_form, cotree, find_induced_p4, is_cograph, Cotree};

pub type Vertex = u32;

/// Undirected simple graph on a finite set of integer vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_edges(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self> {
        let mut g = Graph::new();
        for v in vertices {
            g.add_vertex(v);
        }
        for (v, w) in edges {
            g.add_edge(v, w)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: Vertex) {
        self.adj.entry(v).or_default();
    }

    pub fn add_edge(&mut self, v: Vertex, w: Vertex) -> Result<()> {
        if v == w {
            return Err(Error::SelfLoop(v));
        }
        for x in [v, w] {
            if !self.adj.contains_key(&x) {
                return Err(Error::UnknownVertex(x));
            }
        }
        self.adj.get_mut(&v).unwrap().insert(w);
        self.adj.get_mut(&w).unwrap().insert(v);
        Ok(())
    }

    pub fn remove_edge(&mut self, v: Vertex, w: Vertex) -> bool {
        let removed = self.adj.get_mut(&v).is_some_and(|n| n.remove(&w));
        if let Some(n) = self.adj.get_mut(&w) {
            n.remove(&v);
        }
        removed
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.adj.keys().copied().collect()
    }

    /// Edges as `(v, w)` with `v < w`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&v, ns)| ns.range(v + 1..).map(move |&w| (v, w)))
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, v: Vertex, w: Vertex) -> bool {
        self.adj.get(&v).is_some_and(|n| n.contains(&w))
    }

    /// Neighbours of `v`; empty for unknown vertices.
    pub fn neighbours(&self, v: Vertex) -> &BTreeSet<Vertex> {
        static EMPTY: BTreeSet<Vertex> = BTreeSet::new();
        self.adj.get(&v).unwrap_or(&EMPTY)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbours(v).len()
    }

    pub fn max_vertex(&self) -> Option<Vertex> {
        self.adj.keys().next_back().copied()
    }

    fn check_disjoint(&self, other: &Graph) -> Result<()> {
        match self.adj.keys().find(|v| other.adj.contains_key(v)) {
            Some(&v) => Err(Error::IdCollision(v)),
            None => Ok(()),
        }
    }

    pub fn union(&self, other: &Graph) -> Result<Graph> {
        self.check_disjoint(other)?;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|(k, v)| (*k, v.clone())));
        Ok(Graph { adj })
    }

    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.union(other)?;
        for v in self.vertices() {
            g.adj.get_mut(&v).unwrap().extend(other.vertices());
        }
        for w in other.vertices() {
            g.adj.get_mut(&w).unwrap().extend(self.vertices());
        }
        Ok(g)
    }

    /// Fusion: union plus every edge between `left_portion` and
    /// `right_portion`. Portions are not validated here.
    pub(crate) fn union_with_bridges(
        &self,
        other: &Graph,
        left_portion: &BTreeSet<Vertex>,
        right_portion: &BTreeSet<Vertex>,
    ) -> Result<Graph> {
        let mut g = self.union(other)?;
        for &v in left_portion {
            g.adj.get_mut(&v).unwrap().extend(right_portion);
        }
        for &w in right_portion {
            g.adj.get_mut(&w).unwrap().extend(left_portion);
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_set();
        let adj = self
            .adj
            .iter()
            .map(|(&v, ns)| {
                let co = all
                    .iter()
                    .copied()
                    .filter(|w| *w != v && !ns.contains(w))
                    .collect();
                (v, co)
            })
            .collect();
        Graph { adj }
    }

    /// Induced subgraph on `w`.
    pub fn induced(&self, w: &BTreeSet<Vertex>) -> Result<Graph> {
        if let Some(&v) = w.iter().find(|v| !self.contains(**v)) {
            return Err(Error::UnknownVertex(v));
        }
        Ok(self.induced_unchecked(w))
    }

    pub(crate) fn induced_unchecked(&self, w: &BTreeSet<Vertex>) -> Graph {
        let adj = w
            .iter()
            .map(|&v| (v, self.adj[&v].intersection(w).copied().collect()))
            .collect();
        Graph { adj }
    }

    /// Vertex sets of the connected components, ordered by least vertex.
    pub fn component_sets(&self) -> Vec<BTreeSet<Vertex>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for &w in &self.adj[&v] {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<Graph> {
        self.component_sets()
            .iter()
            .map(|c| self.induced_unchecked(c))
            .collect()
    }

    /// Connected components of the complement restricted to `within`,
    /// computed without materialising the complement.
    pub(crate) fn co_component_sets(&self, within: &BTreeSet<Vertex>) -> Vec<BTreeSet<Vertex>> {
        let mut unvisited = within.clone();
        let mut out = Vec::new();
        while let Some(start) = unvisited.pop_first() {
            let mut comp = BTreeSet::from([start]);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let ns = &self.adj[&v];
                let next: Vec<Vertex> = unvisited
                    .iter()
                    .copied()
                    .filter(|w| !ns.contains(w))
                    .collect();
                for w in next {
                    unvisited.remove(&w);
                    comp.insert(w);
                    queue.push_back(w);
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn relabel_fresh(&self, offset: Vertex) -> Graph {
        let adj = self
            .adj
            .iter()
            .map(|(&v, ns)| (v + offset, ns.iter().map(|w| w + offset).collect()))
            .collect();
        Graph { adj }
    }
}

/// Graph whose vertices carry atoms: the form of combinatorial propositions.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LabelledGraph {
    graph: Graph,
    labels: BTreeMap<Vertex, Atom>,
}

impl LabelledGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(v: Vertex, atom: Atom) -> Self {
        let mut g = Self::new();
        g.add_vertex(v, atom);
        g
    }

    pub fn from_parts(graph: Graph, labels: BTreeMap<Vertex, Atom>) -> Result<Self> {
        if let Some(v) = graph.vertices().find(|v| !labels.contains_key(v)) {
            return Err(Error::Malformed(format!("vertex {v} has no label")));
        }
        if let Some(v) = labels.keys().find(|v| !graph.contains(**v)) {
            return Err(Error::UnknownVertex(*v));
        }
        Ok(Self { graph, labels })
    }

    pub fn add_vertex(&mut self, v: Vertex, atom: Atom) {
        self.graph.add_vertex(v);
        self.labels.insert(v, atom);
    }

    pub fn add_edge(&mut self, v: Vertex, w: Vertex) -> Result<()> {
        self.graph.add_edge(v, w)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn label(&self, v: Vertex) -> Option<&Atom> {
        self.labels.get(&v)
    }

    pub fn labels(&self) -> &BTreeMap<Vertex, Atom> {
        &self.labels
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.graph.vertices()
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    pub fn union(&self, other: &LabelledGraph) -> Result<LabelledGraph> {
        let graph = self.graph.union(&other.graph)?;
        Ok(Self::merge_labels(graph, self, other))
    }

    pub fn join(&self, other: &LabelledGraph) -> Result<LabelledGraph> {
        let graph = self.graph.join(&other.graph)?;
        Ok(Self::merge_labels(graph, self, other))
    }

    fn merge_labels(graph: Graph, a: &LabelledGraph, b: &LabelledGraph) -> LabelledGraph {
        let mut labels = a.labels.clone();
        labels.extend(b.labels.iter().map(|(k, v)| (*k, v.clone())));
        LabelledGraph { graph, labels }
    }

    /// Complements the edges; labels unchanged.
    pub fn complement(&self) -> LabelledGraph {
        LabelledGraph {
            graph: self.graph.complement(),
            labels: self.labels.clone(),
        }
    }

    /// Complements the edges and dualises every label.
    pub fn negate(&self) -> LabelledGraph {
        LabelledGraph {
            graph: self.graph.complement(),
            labels: self.labels.iter().map(|(k, a)| (*k, a.dual())).collect(),
        }
    }

    pub fn induced(&self, w: &BTreeSet<Vertex>) -> Result<LabelledGraph> {
        let graph = self.graph.induced(w)?;
        let labels = w.iter().map(|v| (*v, self.labels[v].clone())).collect();
        Ok(LabelledGraph { graph, labels })
    }

    pub fn components(&self) -> Vec<LabelledGraph> {
        self.graph
            .component_sets()
            .iter()
            .map(|c| self.induced(c).expect("component of own vertex set"))
            .collect()
    }

    pub fn relabel_fresh(&self, offset: Vertex) -> LabelledGraph {
        LabelledGraph {
            graph: self.graph.relabel_fresh(offset),
            labels: self
                .labels
                .iter()
                .map(|(k, a)| (k + offset, a.clone()))
                .collect(),
        }
    }
}

/// Graph with a partition of its vertices into colour classes.
///
/// Construction through [`ColouredGraph::new`] enforces that the classes
/// partition the vertex set and contain no edges. The unchecked constructor
/// exists so that a verifier can be handed (and report on) defective input.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ColouredGraph {
    graph: Graph,
    classes: Vec<Vec<Vertex>>,
}

/// Something wrong with a colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColouringDefect {
    Uncoloured(Vertex),
    MultiplyColoured(Vertex),
    UnknownVertex(Vertex),
    EmptyClass,
    EdgeWithinClass(Vertex, Vertex),
}

impl ColouredGraph {
    pub fn new(graph: Graph, classes: Vec<Vec<Vertex>>) -> Result<Self> {
        let cg = Self::new_unchecked(graph, classes);
        match cg.colouring_defects().first() {
            None => Ok(cg),
            Some(d) => Err(Error::InvalidColouring(format!("{d:?}"))),
        }
    }

    /// Classes are sorted internally and ordered by least member.
    pub fn new_unchecked(graph: Graph, mut classes: Vec<Vec<Vertex>>) -> Self {
        for c in &mut classes {
            c.sort_unstable();
        }
        classes.sort();
        Self { graph, classes }
    }

    /// Edgeless graph on `vertices`, all in one class.
    pub fn single_class(vertices: &[Vertex]) -> Self {
        let graph = Graph::from_edges(vertices.iter().copied(), []).expect("no edges");
        Self::new_unchecked(graph, vec![vertices.to_vec()])
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn classes(&self) -> &[Vec<Vertex>] {
        &self.classes
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.graph.vertices()
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    /// Index of the class containing each vertex (first one, if several).
    pub fn class_index(&self) -> BTreeMap<Vertex, usize> {
        let mut out = BTreeMap::new();
        for (i, c) in self.classes.iter().enumerate() {
            for &v in c {
                out.entry(v).or_insert(i);
            }
        }
        out
    }

    pub fn colouring_defects(&self) -> Vec<ColouringDefect> {
        let mut out = Vec::new();
        let mut seen = BTreeSet::new();
        for c in &self.classes {
            if c.is_empty() {
                out.push(ColouringDefect::EmptyClass);
            }
            for &v in c {
                if !self.graph.contains(v) {
                    out.push(ColouringDefect::UnknownVertex(v));
                } else if !seen.insert(v) {
                    out.push(ColouringDefect::MultiplyColoured(v));
                }
            }
            for (i, &v) in c.iter().enumerate() {
                for &w in &c[i + 1..] {
                    if self.graph.has_edge(v, w) {
                        out.push(ColouringDefect::EdgeWithinClass(v, w));
                    }
                }
            }
        }
        out.extend(
            self.graph
                .vertices()
                .filter(|v| !seen.contains(v))
                .map(ColouringDefect::Uncoloured),
        );
        out
    }

    pub fn union(&self, other: &ColouredGraph) -> Result<ColouredGraph> {
        let graph = self.graph.union(&other.graph)?;
        Ok(Self::merge_classes(graph, self, other))
    }

    pub fn join(&self, other: &ColouredGraph) -> Result<ColouredGraph> {
        let graph = self.graph.join(&other.graph)?;
        Ok(Self::merge_classes(graph, self, other))
    }

    pub(crate) fn merge_classes(
        graph: Graph,
        a: &ColouredGraph,
        b: &ColouredGraph,
    ) -> ColouredGraph {
        let classes = a.classes.iter().chain(&b.classes).cloned().collect();
        ColouredGraph::new_unchecked(graph, classes)
    }

    /// Induced subgraph; classes are intersected with `w` and empty
    /// intersections dropped.
    pub fn induced(&self, w: &BTreeSet<Vertex>) -> Result<ColouredGraph> {
        let graph = self.graph.induced(w)?;
        let classes = self
            .classes
            .iter()
            .map(|c| {
                c.iter()
                    .copied()
                    .filter(|v| w.contains(v))
                    .collect::<Vec<_>>()
            })
            .filter(|c| !c.is_empty())
            .collect();
        Ok(ColouredGraph::new_unchecked(graph, classes))
    }

    pub fn components(&self) -> Vec<ColouredGraph> {
        self.graph
            .component_sets()
            .iter()
            .map(|c| self.induced(c).expect("component of own vertex set"))
            .collect()
    }

    pub fn relabel_fresh(&self, offset: Vertex) -> ColouredGraph {
        ColouredGraph::new_unchecked(
            self.graph.relabel_fresh(offset),
            self.classes
                .iter()
                .map(|c| c.iter().map(|v| v + offset).collect())
                .collect(),
        )
    }
}

/// The labelled graph of a proposition.
///
/// Atoms become single vertices, `&` joins, `|` unions, `~` negates and
/// `a -> b` is `(~a) | b`. Vertex ids follow left-to-right atom occurrence
/// order starting at 0. Negations are pushed to the leaves while building,
/// which produces the same graph as complementing sub-results.
pub fn graph_of(phi: &Proposition) -> LabelledGraph {
    let mut next = 0;
    build(phi, false, &mut next)
}

fn build(phi: &Proposition, negated: bool, next: &mut Vertex) -> LabelledGraph {
    let leaf = |atom: Atom, next: &mut Vertex| {
        let g = LabelledGraph::single(*next, atom);
        *next += 1;
        g
    };
    let combine = |l: LabelledGraph, r: LabelledGraph, join: bool| {
        if join { l.join(&r) } else { l.union(&r) }.expect("fresh ids are disjoint")
    };
    match phi {
        Proposition::Var(v) => {
            let atom = if negated {
                Atom::Neg(v.clone())
            } else {
                Atom::Pos(v.clone())
            };
            leaf(atom, next)
        }
        Proposition::Const(c) => leaf(if *c != negated { Atom::One } else { Atom::Zero }, next),
        Proposition::Not(p) => build(p, !negated, next),
        Proposition::And(l, r) => {
            let (l, r) = (build(l, negated, next), build(r, negated, next));
            combine(l, r, !negated)
        }
        Proposition::Or(l, r) => {
            let (l, r) = (build(l, negated, next), build(r, negated, next));
            combine(l, r, negated)
        }
        Proposition::Implies(l, r) => {
            let (l, r) = (build(l, !negated, next), build(r, negated, next));
            combine(l, r, negated)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_proposition;
    use proptest::prelude::*;

    fn pos(s: &str) -> Atom {
        Atom::Pos(s.into())
    }

    fn neg(s: &str) -> Atom {
        Atom::Neg(s.into())
    }

    fn g(s: &str) -> LabelledGraph {
        graph_of(&parse_proposition(s).unwrap())
    }

    fn edges(g: &LabelledGraph) -> Vec<(Vertex, Vertex)> {
        g.graph().edges().collect()
    }

    fn labels(g: &LabelledGraph) -> Vec<Atom> {
        g.labels().values().cloned().collect()
    }

    // Definitional translation: negation by complementing sub-results.
    fn graph_by_definition(phi: &Proposition, next: &mut Vertex) -> LabelledGraph {
        match phi {
            Proposition::Var(v) => {
                *next += 1;
                LabelledGraph::single(*next - 1, pos(v))
            }
            Proposition::Const(c) => {
                *next += 1;
                LabelledGraph::single(*next - 1, if *c { Atom::One } else { Atom::Zero })
            }
            Proposition::Not(p) => graph_by_definition(p, next).negate(),
            Proposition::And(l, r) => {
                let l = graph_by_definition(l, next);
                l.join(&graph_by_definition(r, next)).unwrap()
            }
            Proposition::Or(l, r) => {
                let l = graph_by_definition(l, next);
                l.union(&graph_by_definition(r, next)).unwrap()
            }
            Proposition::Implies(l, r) => {
                let l = graph_by_definition(l, next).negate();
                l.union(&graph_by_definition(r, next)).unwrap()
            }
        }
    }

    #[test]
    fn union_of_singletons() {
        let u = LabelledGraph::single(0, pos("p"))
            .union(&LabelledGraph::single(1, pos("q")))
            .unwrap();
        assert_eq!(u.vertex_count(), 2);
        assert_eq!(u.edge_count(), 0);
        assert_eq!(labels(&u), vec![pos("p"), pos("q")]);
    }

    #[test]
    fn union_keeps_edges() {
        let u = g("p & q")
            .union(&LabelledGraph::single(2, pos("r")))
            .unwrap();
        assert_eq!(edges(&u), vec![(0, 1)]);
    }

    #[test]
    fn overlapping_ids_collide() {
        let a = LabelledGraph::single(0, pos("p"));
        assert_eq!(a.union(&a), Err(Error::IdCollision(0)));
        assert_eq!(a.join(&a), Err(Error::IdCollision(0)));
    }

    #[test]
    fn join_of_singletons() {
        let j = LabelledGraph::single(0, pos("p"))
            .join(&LabelledGraph::single(1, pos("q")))
            .unwrap();
        assert_eq!(edges(&j), vec![(0, 1)]);
    }

    #[test]
    fn join_of_two_edgeless_pairs() {
        let left = g("p | ~q");
        let right = g("0 | p").relabel_fresh(2);
        let j = left.join(&right).unwrap();
        assert_eq!(j, g("(p | ~q) & (0 | p)"));
        assert_eq!(edges(&j), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert_eq!(j.edge_count(), left.edge_count() + right.edge_count() + 4);
    }

    #[test]
    fn complement_of_the_four_edge_graph() {
        let c = g("(p | ~q) & (0 | p)").complement();
        // 6 pairs on 4 vertices minus the 4 join edges.
        assert_eq!(edges(&c), vec![(0, 1), (2, 3)]);
        assert_eq!(c.complement(), g("(p | ~q) & (0 | p)"));
    }

    #[test]
    fn complement_of_an_edge() {
        assert_eq!(g("p & q").complement().edge_count(), 0);
    }

    #[test]
    fn negation_example() {
        let n = g("(p | ~q) & (0 | p)").negate();
        assert_eq!(labels(&n), vec![neg("p"), pos("q"), Atom::One, neg("p")]);
        assert_eq!(edges(&n), vec![(0, 1), (2, 3)]);
        // G((q & ~p) | (1 & ~p)) numbers its atoms q,~p,1,~p: swap 0 and 1.
        assert_eq!(n, swap_first_two(&g("(q & ~p) | (1 & ~p)")));
        assert_eq!(n.negate(), g("(p | ~q) & (0 | p)"));
    }

    fn swap_first_two(g: &LabelledGraph) -> LabelledGraph {
        let swap = |v: Vertex| match v {
            0 => 1,
            1 => 0,
            v => v,
        };
        let mut out = LabelledGraph::new();
        for (v, a) in g.labels() {
            out.add_vertex(swap(*v), a.clone());
        }
        for (v, w) in g.graph().edges() {
            out.add_edge(swap(v), swap(w)).unwrap();
        }
        out
    }

    #[test]
    fn negate_constant() {
        assert_eq!(g("1").negate(), g("0"));
    }

    #[test]
    fn peirce_graph() {
        let p = g("((p->q)->p)->p");
        assert_eq!(labels(&p), vec![neg("p"), pos("q"), neg("p"), pos("p")]);
        assert_eq!(edges(&p), vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn implication_example_graph() {
        let p = g("p -> (p & 1)");
        assert_eq!(labels(&p), vec![neg("p"), pos("p"), Atom::One]);
        assert_eq!(edges(&p), vec![(1, 2)]);
    }

    #[test]
    fn atom_graph() {
        let p = g("p");
        assert_eq!(p.vertex_count(), 1);
        assert_eq!(p.edge_count(), 0);
    }

    #[test]
    fn peirce_components() {
        let comps = g("((p->q)->p)->p").components();
        let sets: Vec<Vec<Vertex>> = comps.iter().map(|c| c.vertices().collect()).collect();
        assert_eq!(sets, vec![vec![0, 1, 2], vec![3]]);
    }

    #[test]
    fn join_is_connected() {
        let j = g("(a | b) & (c | d | e)");
        assert_eq!(j.components().len(), 1);
    }

    #[test]
    fn induced_whole_and_unknown() {
        let p = g("((p->q)->p)->p");
        assert_eq!(p.induced(&p.graph().vertex_set()).unwrap(), p);
        assert_eq!(
            p.induced(&BTreeSet::from([0, 9])),
            Err(Error::UnknownVertex(9))
        );
    }

    #[test]
    fn relabel_shifts_everything() {
        let p = g("((p->q)->p)->p").relabel_fresh(10);
        assert_eq!(p.vertices().collect::<Vec<_>>(), vec![10, 11, 12, 13]);
        assert_eq!(edges(&p), vec![(10, 12), (11, 12)]);
        assert_eq!(p.label(13), Some(&pos("p")));
    }

    #[test]
    fn coloured_graph_validation() {
        let graph = Graph::from_edges([0, 1, 2], [(0, 1)]).unwrap();
        assert!(ColouredGraph::new(graph.clone(), vec![vec![0, 2], vec![1]]).is_ok());
        let bad = ColouredGraph::new_unchecked(graph, vec![vec![0, 1], vec![1]]);
        let defects = bad.colouring_defects();
        assert!(defects.contains(&ColouringDefect::EdgeWithinClass(0, 1)));
        assert!(defects.contains(&ColouringDefect::MultiplyColoured(1)));
        assert!(defects.contains(&ColouringDefect::Uncoloured(2)));
    }

    #[test]
    fn self_loops_rejected() {
        let mut graph = Graph::from_edges([0], []).unwrap();
        assert_eq!(graph.add_edge(0, 0), Err(Error::SelfLoop(0)));
        assert_eq!(graph.add_edge(0, 1), Err(Error::UnknownVertex(1)));
    }

    fn arb_prop() -> impl Strategy<Value = Proposition> {
        crate::formula::tests::arb_prop()
    }

    proptest! {
        #[test]
        fn polarity_translation_matches_definition(phi in arb_prop()) {
            let mut next = 0;
            prop_assert_eq!(graph_of(&phi), graph_by_definition(&phi, &mut next));
        }

        #[test]
        fn de_morgan_graphs_coincide(a in arb_prop(), b in arb_prop()) {
            let lhs = Proposition::not(Proposition::and(a.clone(), b.clone()));
            let rhs = Proposition::or(Proposition::not(a), Proposition::not(b));
            prop_assert_eq!(graph_of(&lhs), graph_of(&rhs));
        }

        #[test]
        fn double_negation_graph(a in arb_prop()) {
            let nn = Proposition::not(Proposition::not(a.clone()));
            prop_assert_eq!(graph_of(&nn), graph_of(&a));
        }

        #[test]
        fn implication_graph(a in arb_prop(), b in arb_prop()) {
            let lhs = Proposition::implies(a.clone(), b.clone());
            let rhs = Proposition::or(Proposition::not(a), b);
            prop_assert_eq!(graph_of(&lhs), graph_of(&rhs));
        }

        #[test]
        fn complement_and_negate_are_involutions(a in arb_prop()) {
            let ga = graph_of(&a);
            prop_assert_eq!(ga.complement().complement(), ga.clone());
            prop_assert_eq!(ga.negate().negate(), ga);
        }

        #[test]
        fn union_and_join_commute(a in arb_prop(), b in arb_prop()) {
            let ga = graph_of(&a);
            let gb = graph_of(&b).relabel_fresh(ga.vertex_count() as Vertex);
            prop_assert_eq!(ga.union(&gb).unwrap(), gb.union(&ga).unwrap());
            prop_assert_eq!(ga.join(&gb).unwrap(), gb.join(&ga).unwrap());
        }
    }
}
