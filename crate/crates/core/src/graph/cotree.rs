use std::collections::{BTreeSet, VecDeque};

use super::{Graph, LabelledGraph, Vertex};
use crate::error::{Error, Result};

/// Decomposition tree of a cograph.
///
/// Built maximally flattened (no `Union` child of a `Union`, no `Join` child
/// of a `Join`) with children ordered by least leaf, so two cotrees of the
/// same graph are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cotree {
    Leaf(Vertex),
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

impl Cotree {
    pub fn children(&self) -> &[Cotree] {
        match self {
            Cotree::Leaf(_) => &[],
            Cotree::Union(cs) | Cotree::Join(cs) => cs,
        }
    }

    pub fn is_join(&self) -> bool {
        matches!(self, Cotree::Join(_))
    }

    pub fn leaves(&self) -> BTreeSet<Vertex> {
        let mut out = BTreeSet::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut BTreeSet<Vertex>) {
        match self {
            Cotree::Leaf(v) => {
                out.insert(*v);
            }
            Cotree::Union(cs) | Cotree::Join(cs) => cs.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    pub fn min_leaf(&self) -> Vertex {
        match self {
            Cotree::Leaf(v) => *v,
            Cotree::Union(cs) | Cotree::Join(cs) => cs.iter().map(Cotree::min_leaf).min().unwrap(),
        }
    }

    /// The graph this tree denotes.
    pub fn rebuild(&self) -> Graph {
        match self {
            Cotree::Leaf(v) => Graph::from_edges([*v], []).unwrap(),
            Cotree::Union(cs) | Cotree::Join(cs) => {
                let join = self.is_join();
                cs.iter()
                    .map(Cotree::rebuild)
                    .reduce(|acc, g| {
                        if join { acc.join(&g) } else { acc.union(&g) }
                            .expect("leaves are distinct")
                    })
                    .unwrap()
            }
        }
    }
}

/// Cotree of `g`, or `NotACograph` carrying an induced path on four vertices.
pub fn cotree(g: &Graph) -> Result<Cotree> {
    if g.is_empty() {
        return Err(Error::NotACograph(None));
    }
    decompose(g, g.vertex_set())
}

fn decompose(g: &Graph, within: BTreeSet<Vertex>) -> Result<Cotree> {
    if within.len() == 1 {
        return Ok(Cotree::Leaf(*within.first().unwrap()));
    }
    let comps = component_sets_within(g, &within);
    if comps.len() > 1 {
        let children = comps
            .into_iter()
            .map(|c| decompose(g, c))
            .collect::<Result<_>>()?;
        return Ok(Cotree::Union(children));
    }
    let mut co = g.co_component_sets(&within);
    if co.len() > 1 {
        co.sort_by_key(|c| *c.first().unwrap());
        let children = co
            .into_iter()
            .map(|c| decompose(g, c))
            .collect::<Result<_>>()?;
        return Ok(Cotree::Join(children));
    }
    Err(Error::NotACograph(p4_within(g, &within)))
}

fn component_sets_within(g: &Graph, within: &BTreeSet<Vertex>) -> Vec<BTreeSet<Vertex>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in within {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbours(v) {
                if within.contains(&w) && seen.insert(w) {
                    comp.insert(w);
                    queue.push_back(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Searches by middle edge: `a-b-c-d` with `b-c` an edge.
fn p4_within(g: &Graph, within: &BTreeSet<Vertex>) -> Option<[Vertex; 4]> {
    for &b in within {
        for &c in g.neighbours(b).iter().filter(|c| within.contains(c)) {
            let ends_b = g
                .neighbours(b)
                .iter()
                .filter(|a| **a != c && within.contains(a) && !g.has_edge(**a, c));
            for &a in ends_b {
                let ends_c = g
                    .neighbours(c)
                    .iter()
                    .filter(|d| **d != b && within.contains(d) && !g.has_edge(**d, b));
                for &d in ends_c {
                    if a != d && !g.has_edge(a, d) {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

/// An induced path `a-b-c-d`, if any.
pub fn find_induced_p4(g: &Graph) -> Option<[Vertex; 4]> {
    p4_within(g, &g.vertex_set())
}

/// Reference recognizer: non-empty, and no 4-subset of vertices induces a
/// path. Scans all 4-subsets.
pub fn is_cograph(g: &Graph) -> bool {
    if g.is_empty() {
        return false;
    }
    let vs: Vec<Vertex> = g.vertices().collect();
    let n = vs.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    if induces_path(g, [vs[i], vs[j], vs[k], vs[l]]) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

// Three edges with degree sequence 1,1,2,2 is exactly a path on four vertices.
fn induces_path(g: &Graph, quad: [Vertex; 4]) -> bool {
    let mut degrees = [0u8; 4];
    let mut edges = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if g.has_edge(quad[i], quad[j]) {
                degrees[i] += 1;
                degrees[j] += 1;
                edges += 1;
            }
        }
    }
    degrees.sort_unstable();
    edges == 3 && degrees == [1, 1, 2, 2]
}

/// Isomorphism-invariant text form of a labelled cograph: the cotree with
/// leaves replaced by labels and children sorted textually. Two labelled
/// cographs are isomorphic iff their canonical forms are equal.
pub fn canonical_form(g: &LabelledGraph) -> Result<String> {
    fn render(t: &Cotree, g: &LabelledGraph) -> String {
        match t {
            Cotree::Leaf(v) => g.label(*v).unwrap().to_string(),
            Cotree::Union(cs) | Cotree::Join(cs) => {
                let mut parts: Vec<String> = cs.iter().map(|c| render(c, g)).collect();
                parts.sort();
                let tag = if t.is_join() { "J" } else { "U" };
                format!("{tag}({})", parts.join(","))
            }
        }
    }
    Ok(render(&cotree(g.graph())?, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_proposition;
    use crate::graph::graph_of;
    use proptest::prelude::*;
    use Cotree::{Join, Leaf, Union};

    fn g(s: &str) -> LabelledGraph {
        graph_of(&parse_proposition(s).unwrap())
    }

    fn p4() -> Graph {
        Graph::from_edges([0, 1, 2, 3], [(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn path_is_not_a_cograph() {
        assert!(!is_cograph(&p4()));
        assert_eq!(find_induced_p4(&p4()), Some([0, 1, 2, 3]));
        assert!(matches!(cotree(&p4()), Err(Error::NotACograph(Some(_)))));
    }

    #[test]
    fn trivial_cases() {
        assert!(is_cograph(&Graph::from_edges([7], []).unwrap()));
        assert!(!is_cograph(&Graph::new()));
        assert_eq!(cotree(&Graph::new()), Err(Error::NotACograph(None)));
    }

    #[test]
    fn two_vertex_join() {
        assert_eq!(
            cotree(g("p & q").graph()).unwrap(),
            Join(vec![Leaf(0), Leaf(1)])
        );
    }

    #[test]
    fn peirce_cotree() {
        let t = cotree(g("((p->q)->p)->p").graph()).unwrap();
        assert_eq!(
            t,
            Union(vec![
                Join(vec![Union(vec![Leaf(0), Leaf(1)]), Leaf(2)]),
                Leaf(3)
            ])
        );
        assert_eq!(&t.rebuild(), g("((p->q)->p)->p").graph());
    }

    #[test]
    fn nested_operators_flatten() {
        let t = cotree(g("(a & b) & (c & d)").graph()).unwrap();
        assert_eq!(t, Join(vec![Leaf(0), Leaf(1), Leaf(2), Leaf(3)]));
        let t = cotree(g("a | (b | c)").graph()).unwrap();
        assert_eq!(t, Union(vec![Leaf(0), Leaf(1), Leaf(2)]));
    }

    #[test]
    fn canonical_form_ignores_ids_and_order() {
        let a = canonical_form(&g("(p & q) | r")).unwrap();
        let b = canonical_form(&g("r | (q & p)")).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, canonical_form(&g("(p | q) & r")).unwrap());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut g = Graph::from_edges(0..n as Vertex, []).unwrap();
                let mut k = 0;
                for v in 0..n as Vertex {
                    for w in v + 1..n as Vertex {
                        if bits[k] {
                            g.add_edge(v, w).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    fn check_flattened(t: &Cotree) -> bool {
        match t {
            Leaf(_) => true,
            Union(cs) => {
                cs.len() >= 2
                    && cs
                        .iter()
                        .all(|c| !matches!(c, Union(_)) && check_flattened(c))
            }
            Join(cs) => {
                cs.len() >= 2
                    && cs
                        .iter()
                        .all(|c| !matches!(c, Join(_)) && check_flattened(c))
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(400))]

        #[test]
        fn recognizers_agree(graph in arb_graph(10)) {
            let reference = is_cograph(&graph);
            prop_assert_eq!(cotree(&graph).is_ok(), reference);
            prop_assert_eq!(find_induced_p4(&graph).is_none(), reference);
        }

        #[test]
        fn cotree_rebuilds_exactly(phi in crate::formula::tests::arb_prop()) {
            let lg = graph_of(&phi);
            prop_assert!(is_cograph(lg.graph()));
            let t = cotree(lg.graph()).unwrap();
            prop_assert!(check_flattened(&t));
            prop_assert_eq!(&t.rebuild(), lg.graph());
        }

        #[test]
        fn cotree_rebuilds_random_cographs(graph in arb_graph(10)) {
            if let Ok(t) = cotree(&graph) {
                prop_assert!(check_flattened(&t));
                prop_assert_eq!(t.rebuild(), graph);
            }
        }

        #[test]
        fn reported_paths_are_induced(graph in arb_graph(9)) {
            if let Err(Error::NotACograph(Some([a, b, c, d]))) = cotree(&graph) {
                prop_assert!(graph.has_edge(a, b) && graph.has_edge(b, c) && graph.has_edge(c, d));
                prop_assert!(!graph.has_edge(a, c) && !graph.has_edge(b, d) && !graph.has_edge(a, d));
            }
        }
    }
}
