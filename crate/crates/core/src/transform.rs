//! Restriction, fusion, fusion decomposition and shallow normalisation.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use petgraph::algo::maximum_matching;
use petgraph::graph::{NodeIndex, UnGraph};

use crate::error::{Error, Result};
use crate::graph::{cotree, find_induced_p4, ColouredGraph, Graph, LabelledGraph, Vertex};
use crate::proof::{is_homomorphism, verify, CombinatorialProof, VertexMap};

/// `h|H'`: the map `h` cut down to `h⁻¹(H') -> H'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Restriction {
    pub domain: Graph,
    pub codomain: Graph,
    pub map: VertexMap,
}

/// Restriction of `h: g -> target` to the subgraph of `target` induced by
/// `sub`.
pub fn restrict(
    h: &VertexMap,
    g: &Graph,
    target: &Graph,
    sub: &BTreeSet<Vertex>,
) -> Result<Restriction> {
    if let Some(v) = g.vertices().find(|v| h.get(*v).is_none()) {
        return Err(Error::UnknownVertex(v));
    }
    let codomain = target.induced(sub)?;
    let preimage: BTreeSet<Vertex> = g
        .vertices()
        .filter(|v| sub.contains(&h.get(*v).unwrap()))
        .collect();
    let domain = g.induced_unchecked(&preimage);
    let map = preimage.iter().map(|&v| (v, h.get(v).unwrap())).collect();
    Ok(Restriction {
        domain,
        codomain,
        map,
    })
}

/// Inputs to [`fusion`]: two coloured graphs with disjoint ids and a
/// portion (union of components) of each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionSpec {
    pub left: ColouredGraph,
    pub right: ColouredGraph,
    pub left_portion: BTreeSet<Vertex>,
    pub right_portion: BTreeSet<Vertex>,
}

/// Whether `part` is a union of components of `g`.
pub fn is_portion(g: &Graph, part: &BTreeSet<Vertex>) -> bool {
    part.iter()
        .all(|&v| g.contains(v) && g.neighbours(v).iter().all(|w| part.contains(w)))
}

fn check_portion(g: &Graph, part: &BTreeSet<Vertex>) -> Result<()> {
    if let Some(&v) = part.iter().find(|v| !g.contains(**v)) {
        return Err(Error::UnknownVertex(v));
    }
    if !is_portion(g, part) {
        return Err(Error::NotAPortion(part.iter().copied().collect()));
    }
    Ok(())
}

/// Union of both sides plus every edge between the two portions. Empty
/// portions give the union, full portions the join.
pub fn fusion(spec: &FusionSpec) -> Result<ColouredGraph> {
    check_portion(spec.left.graph(), &spec.left_portion)?;
    check_portion(spec.right.graph(), &spec.right_portion)?;
    let graph = spec.left.graph().union_with_bridges(
        spec.right.graph(),
        &spec.left_portion,
        &spec.right_portion,
    )?;
    Ok(ColouredGraph::merge_classes(graph, &spec.left, &spec.right))
}

/// Outcome of the block-graph analysis of a coloured cograph.
pub(crate) enum Split {
    /// No edges at all.
    Edgeless,
    /// `w` is a union of classes, and the graph is the fusion of `C[w]`
    /// and its complement joining the two portions.
    Bridge {
        w: BTreeSet<Vertex>,
        left_portion: BTreeSet<Vertex>,
        right_portion: BTreeSet<Vertex>,
    },
    NoBridge(BlockGraph),
}

/// Blocks `C_1, C_2, ...` (consecutive pairs joined) and the colour
/// classes that connect different blocks.
pub(crate) struct BlockGraph {
    blocks: Vec<BTreeSet<Vertex>>,
    class_edges: Vec<(usize, usize, Vec<Vertex>)>,
}

impl BlockGraph {
    fn build(c: &ColouredGraph) -> Result<Self> {
        let g = c.graph();
        let mut blocks = Vec::new();
        for comp in g.component_sets() {
            if comp.len() < 2 {
                continue;
            }
            let mut co = g.co_component_sets(&comp);
            if co.len() < 2 {
                return Err(Error::NotACograph(find_induced_p4(
                    &g.induced_unchecked(&comp),
                )));
            }
            co.sort_by_key(|s| *s.first().unwrap());
            let first = co.remove(0);
            blocks.push(first);
            blocks.push(co.into_iter().flatten().collect());
        }
        let block_of: BTreeMap<Vertex, usize> = blocks
            .iter()
            .enumerate()
            .flat_map(|(i, b)| b.iter().map(move |&v| (v, i)))
            .collect();
        let class_edges = c
            .classes()
            .iter()
            .filter(|k| k.len() == 2)
            .filter_map(|k| {
                let (a, b) = (*block_of.get(&k[0])?, *block_of.get(&k[1])?);
                (a != b).then(|| (a.min(b), a.max(b), k.clone()))
            })
            .collect();
        Ok(BlockGraph {
            blocks,
            class_edges,
        })
    }

    fn pairs(&self) -> usize {
        self.blocks.len() / 2
    }

    /// Blocks reachable from block `2i` once matching edge `i` is removed.
    fn side_without(&self, i: usize) -> BTreeSet<usize> {
        let n = self.blocks.len();
        let mut adj = vec![Vec::new(); n];
        for j in 0..self.pairs() {
            if j != i {
                adj[2 * j].push(2 * j + 1);
                adj[2 * j + 1].push(2 * j);
            }
        }
        for (a, b, _) in &self.class_edges {
            adj[*a].push(*b);
            adj[*b].push(*a);
        }
        let mut seen = BTreeSet::from([2 * i]);
        let mut queue = VecDeque::from([2 * i]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Two-vertex classes whose union induces a matching, read off a
    /// perfect matching of the block graph other than the canonical one.
    fn offending_union(&self) -> Result<Vec<Vec<Vertex>>> {
        for skip in 0..self.pairs() {
            let mut bg = UnGraph::<(), ()>::new_undirected();
            let nodes: Vec<NodeIndex> = (0..self.blocks.len()).map(|_| bg.add_node(())).collect();
            for j in (0..self.pairs()).filter(|&j| j != skip) {
                bg.add_edge(nodes[2 * j], nodes[2 * j + 1], ());
            }
            for (a, b, _) in &self.class_edges {
                bg.add_edge(nodes[*a], nodes[*b], ());
            }
            let matching = maximum_matching(&bg);
            if !matching.is_perfect() {
                continue;
            }
            let mut out = Vec::new();
            for (x, y) in matching.edges() {
                let (a, b) = (x.index().min(y.index()), x.index().max(y.index()));
                if a % 2 == 0 && b == a + 1 {
                    continue;
                }
                let class = self
                    .class_edges
                    .iter()
                    .find(|(p, q, _)| (*p, *q) == (a, b))
                    .map(|(_, _, k)| k.clone())
                    .ok_or_else(|| {
                        Error::InternalInvariantBroken("matching edge without a class".into())
                    })?;
                out.push(class);
            }
            out.sort();
            return Ok(out);
        }
        Err(Error::InternalInvariantBroken(
            "block graph has a unique perfect matching but no bridge".into(),
        ))
    }
}

pub(crate) fn split(c: &ColouredGraph) -> Result<Split> {
    let blocks = BlockGraph::build(c)?;
    if blocks.blocks.is_empty() {
        return Ok(Split::Edgeless);
    }
    for i in 0..blocks.pairs() {
        let side = blocks.side_without(i);
        if side.contains(&(2 * i + 1)) {
            continue;
        }
        let touched: BTreeSet<Vertex> = side
            .iter()
            .flat_map(|&b| blocks.blocks[b].iter().copied())
            .collect();
        let w = c
            .classes()
            .iter()
            .filter(|k| k.iter().any(|v| touched.contains(v)))
            .flatten()
            .copied()
            .collect();
        return Ok(Split::Bridge {
            w,
            left_portion: blocks.blocks[2 * i].clone(),
            right_portion: blocks.blocks[2 * i + 1].clone(),
        });
    }
    Ok(Split::NoBridge(blocks))
}

/// Niceness by repeated fusion decomposition. Expects a validly coloured
/// cograph.
pub(crate) fn find_not_nice(c: &ColouredGraph) -> Result<Option<Vec<Vec<Vertex>>>> {
    if let Some(big) = c.classes().iter().find(|k| k.len() > 2) {
        return Ok(Some(vec![big.clone()]));
    }
    let mut stack = vec![c.clone()];
    while let Some(sub) = stack.pop() {
        if sub.classes().len() <= 1 {
            continue;
        }
        match split(&sub)? {
            Split::Edgeless => {}
            Split::Bridge { w, .. } => {
                let rest: BTreeSet<Vertex> = sub.vertices().filter(|v| !w.contains(v)).collect();
                stack.push(sub.induced(&w)?);
                stack.push(sub.induced(&rest)?);
            }
            Split::NoBridge(blocks) => return blocks.offending_union().map(Some),
        }
    }
    Ok(None)
}

/// Writes a nice cograph with at least two colour classes as a fusion of
/// two nice cographs, each a union of classes.
///
/// Each multi-vertex component is split into blocks as first cotree child
/// versus the join of the others; a matching edge of the block graph that
/// is a bridge separates the classes. With no edges at all the first class
/// is split off from the rest.
pub fn fusion_decompose(c: &ColouredGraph) -> Result<FusionSpec> {
    if c.classes().len() < 2 {
        return Err(Error::SingleColourClass);
    }
    cotree(c.graph())?;
    let (w, left_portion, right_portion) = match split(c)? {
        Split::Edgeless => {
            let w = c.classes()[0].iter().copied().collect();
            (w, BTreeSet::new(), BTreeSet::new())
        }
        Split::Bridge {
            w,
            left_portion,
            right_portion,
        } => (w, left_portion, right_portion),
        Split::NoBridge(_) => {
            return Err(Error::InternalInvariantBroken(
                "no matching edge of the block graph is a bridge (colouring is not nice)".into(),
            ))
        }
    };
    let rest: BTreeSet<Vertex> = c.vertices().filter(|v| !w.contains(v)).collect();
    Ok(FusionSpec {
        left: c.induced(&w)?,
        right: c.induced(&rest)?,
        left_portion,
        right_portion,
    })
}

/// The preimage of every component of `target` has at most one component.
pub fn is_shallow(h: &VertexMap, g: &Graph, target: &Graph) -> Result<bool> {
    if !is_homomorphism(h, g, target)? {
        return Err(Error::NotAHomomorphism("an edge is not preserved".into()));
    }
    Ok(target.component_sets().iter().all(|k| {
        let pre = h.preimage(k);
        g.induced_unchecked(&pre).component_sets().len() <= 1
    }))
}

/// Replaces the target by one copy of it per witness component so that
/// the map becomes shallow.
///
/// Components are taken in order of least vertex; copy `i` moves target
/// vertex `v` to `i * (max + 1) + v`, where `max` is the largest target id.
pub fn shallow_normalize(proof: &CombinatorialProof) -> Result<CombinatorialProof> {
    if let Err(violations) = verify(proof) {
        let text: Vec<String> = violations.iter().map(ToString::to_string).collect();
        return Err(Error::InvalidProof(text.join("; ")));
    }
    let stride = u64::from(proof.target.graph().max_vertex().unwrap()) + 1;
    let comps = proof.witness.graph().component_sets();
    let needed = stride * comps.len() as u64;
    if needed > u64::from(Vertex::MAX) {
        return Err(Error::ResourceLimit {
            what: "vertex ids",
            limit: u64::from(Vertex::MAX),
            actual: needed,
        });
    }
    let stride = stride as Vertex;
    let mut target = LabelledGraph::new();
    let mut map = VertexMap::new();
    for (i, comp) in comps.iter().enumerate() {
        let offset = i as Vertex * stride;
        target = target.union(&proof.target.relabel_fresh(offset))?;
        for &v in comp {
            map.insert(v, proof.map.get(v).unwrap() + offset);
        }
    }
    Ok(CombinatorialProof {
        witness: proof.witness.clone(),
        target,
        map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_proposition;
    use crate::graph::graph_of;
    use crate::proof::{is_nicely_coloured, is_nicely_coloured_exhaustive, is_skew_fibration};
    use crate::semantics::{clauses, graph_is_true};
    use crate::testing;
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn set(vs: &[Vertex]) -> BTreeSet<Vertex> {
        vs.iter().copied().collect()
    }

    fn peirce_proof() -> CombinatorialProof {
        let graph = Graph::from_edges([0, 1, 2, 3], [(0, 2)]).unwrap();
        CombinatorialProof {
            witness: ColouredGraph::new(graph, vec![vec![0, 1], vec![2, 3]]).unwrap(),
            target: graph_of(&parse_proposition("((p->q)->p)->p").unwrap()),
            map: [(0, 0), (2, 2), (1, 3), (3, 3)].into_iter().collect(),
        }
    }

    fn circles_and_squares() -> FusionSpec {
        FusionSpec {
            left: ColouredGraph::single_class(&[0, 1]),
            right: ColouredGraph::single_class(&[2, 3]),
            left_portion: set(&[1]),
            right_portion: set(&[2]),
        }
    }

    #[test]
    fn restrict_to_everything_is_identity() {
        let pf = peirce_proof();
        let all = pf.target.graph().vertex_set();
        let r = restrict(&pf.map, pf.witness.graph(), pf.target.graph(), &all).unwrap();
        assert_eq!(r.map, pf.map);
        assert_eq!(&r.domain, pf.witness.graph());
    }

    #[test]
    fn restrict_to_a_component() {
        let pf = peirce_proof();
        let r = restrict(
            &pf.map,
            pf.witness.graph(),
            pf.target.graph(),
            &set(&[0, 1, 2]),
        )
        .unwrap();
        assert_eq!(r.domain.vertex_set(), set(&[0, 2]));
        assert!(is_skew_fibration(&r.map, &r.domain, &r.codomain).unwrap());
        assert_eq!(
            restrict(&pf.map, pf.witness.graph(), pf.target.graph(), &set(&[7])),
            Err(Error::UnknownVertex(7))
        );
    }

    #[test]
    fn fusion_of_circles_and_squares() {
        let c = fusion(&circles_and_squares()).unwrap();
        assert_eq!(c.graph().edges().collect::<Vec<_>>(), vec![(1, 2)]);
        assert_eq!(c.classes(), &[vec![0, 1], vec![2, 3]]);
        assert!(is_nicely_coloured(&c).unwrap());
    }

    #[test]
    fn extremal_fusions() {
        let mut spec = circles_and_squares();
        spec.left_portion.clear();
        spec.right_portion.clear();
        let u = fusion(&spec).unwrap();
        assert_eq!(
            u.graph(),
            &spec.left.graph().union(spec.right.graph()).unwrap()
        );
        spec.left_portion = set(&[0, 1]);
        spec.right_portion = set(&[2, 3]);
        let j = fusion(&spec).unwrap();
        assert_eq!(
            j.graph(),
            &spec.left.graph().join(spec.right.graph()).unwrap()
        );
    }

    #[test]
    fn fusion_errors() {
        let mut spec = circles_and_squares();
        spec.left = ColouredGraph::new(
            Graph::from_edges([0, 1], [(0, 1)]).unwrap(),
            vec![vec![0], vec![1]],
        )
        .unwrap();
        assert_eq!(fusion(&spec), Err(Error::NotAPortion(vec![1])));
        let mut spec = circles_and_squares();
        spec.right = ColouredGraph::single_class(&[1, 3]);
        spec.right_portion = set(&[3]);
        assert_eq!(fusion(&spec), Err(Error::IdCollision(1)));
        let mut spec = circles_and_squares();
        spec.right_portion = set(&[9]);
        assert_eq!(fusion(&spec), Err(Error::UnknownVertex(9)));
    }

    #[test]
    fn decompose_circles_and_squares() {
        let c = fusion(&circles_and_squares()).unwrap();
        assert_eq!(fusion_decompose(&c).unwrap(), circles_and_squares());
    }

    #[test]
    fn decompose_edgeless() {
        let c = ColouredGraph::single_class(&[0, 1])
            .union(&ColouredGraph::single_class(&[2]))
            .unwrap();
        let spec = fusion_decompose(&c).unwrap();
        assert_eq!(spec.left, ColouredGraph::single_class(&[0, 1]));
        assert_eq!(spec.right, ColouredGraph::single_class(&[2]));
        assert_eq!(fusion(&spec).unwrap(), c);
    }

    #[test]
    fn decompose_errors() {
        assert_eq!(
            fusion_decompose(&ColouredGraph::single_class(&[0, 1])),
            Err(Error::SingleColourClass)
        );
        let crossed = ColouredGraph::new(
            Graph::from_edges(0..4, [(0, 2), (1, 3)]).unwrap(),
            vec![vec![0, 1], vec![2, 3]],
        )
        .unwrap();
        assert!(matches!(
            fusion_decompose(&crossed),
            Err(Error::InternalInvariantBroken(_))
        ));
    }

    #[test]
    fn shallow_examples() {
        let pf = peirce_proof();
        assert!(!is_shallow(&pf.map, pf.witness.graph(), pf.target.graph()).unwrap());
        let target = pf.target.graph();
        assert!(is_shallow(&VertexMap::identity(target), target, target).unwrap());
        let edge = Graph::from_edges([0, 1], [(0, 1)]).unwrap();
        let bad: VertexMap = [(0, 0), (1, 1)].into_iter().collect();
        assert!(matches!(
            is_shallow(&bad, &edge, target),
            Err(Error::NotAHomomorphism(_))
        ));
    }

    #[test]
    fn shallow_normalize_peirce() {
        let pf = peirce_proof();
        let s = shallow_normalize(&pf).unwrap();
        // The witness has three components: {0,2}, {1} and {3}.
        assert_eq!(s.target.vertex_count(), 12);
        assert_eq!(s.target.graph().component_sets().len(), 6);
        assert_eq!(s.witness, pf.witness);
        assert_eq!(verify(&s), Ok(()));
        assert!(is_shallow(&s.map, s.witness.graph(), s.target.graph()).unwrap());
        assert_eq!(s.map.get(1), Some(4 + 3));
        assert_eq!(s.map.get(3), Some(8 + 3));
    }

    #[test]
    fn shallow_normalize_connected_witness() {
        let target = graph_of(&parse_proposition("(p | ~p) & 1").unwrap());
        let pf = crate::synth::synthesize(&target).unwrap();
        assert_eq!(pf.witness.graph().component_sets().len(), 1);
        let s = shallow_normalize(&pf).unwrap();
        assert_eq!(s.target, target);
        assert_eq!(s.map, pf.map);
    }

    #[test]
    fn shallow_normalize_rejects_invalid_proofs() {
        let mut pf = peirce_proof();
        pf.map.insert(0, 1);
        assert!(matches!(
            shallow_normalize(&pf),
            Err(Error::InvalidProof(_))
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn fusion_of_nice_is_nice(seed in any::<u64>()) {
            let mut rng = StdRng::seed_from_u64(seed);
            let spec = testing::random_fusion_spec(&mut rng, 5);
            let c = fusion(&spec).unwrap();
            prop_assert!(cotree(c.graph()).is_ok());
            prop_assert!(is_nicely_coloured_exhaustive(&c).unwrap());
            prop_assert!(is_nicely_coloured(&c).unwrap());
        }

        #[test]
        fn decomposition_round_trip(seed in any::<u64>()) {
            let mut rng = StdRng::seed_from_u64(seed);
            let c = testing::random_nice_cograph(&mut rng, 2..=8, &mut 0);
            let spec = fusion_decompose(&c).unwrap();
            prop_assert_eq!(fusion(&spec).unwrap(), c);
            prop_assert!(is_nicely_coloured_exhaustive(&spec.left).unwrap());
            prop_assert!(is_nicely_coloured_exhaustive(&spec.right).unwrap());
        }

        #[test]
        fn fast_niceness_matches_exhaustive(seed in any::<u64>()) {
            let mut rng = StdRng::seed_from_u64(seed);
            let c = testing::random_two_coloured_cograph(&mut rng, 10);
            let fast = nice_or_offender(&c);
            let slow = is_nicely_coloured_exhaustive(&c).unwrap();
            prop_assert_eq!(fast.is_none(), slow);
            if let Some(classes) = fast {
                let union: BTreeSet<Vertex> = classes.iter().flatten().copied().collect();
                prop_assert!(crate::proof::induces_matching(c.graph(), &union).unwrap());
            }
        }

        #[test]
        fn restrictions_of_skew_fibrations(seed in any::<u64>()) {
            let mut rng = StdRng::seed_from_u64(seed);
            let target = testing::random_labelled_cograph(&mut rng, 7);
            let (g, h) = testing::random_skew_fibration(&mut rng, target.graph());
            prop_assert!(is_skew_fibration(&h, &g, target.graph()).unwrap());
            let tree = cotree(target.graph()).unwrap();
            for child in tree.children() {
                let r = restrict(&h, &g, target.graph(), &child.leaves()).unwrap();
                prop_assert!(is_skew_fibration(&r.map, &r.domain, &r.codomain).unwrap());
            }
        }

        #[test]
        fn clause_images(seed in any::<u64>()) {
            let mut rng = StdRng::seed_from_u64(seed);
            let target = testing::random_labelled_cograph(&mut rng, 7);
            let (g, h) = testing::random_skew_fibration(&mut rng, target.graph());
            let image = target.induced(&h.image()).unwrap();
            let image_clauses = clauses(&image).unwrap();
            for k in clauses(&target).unwrap() {
                prop_assert!(image_clauses.iter().any(|c| c.is_subset(&k)));
            }
            let _ = g;
        }

        #[test]
        fn long_lemma(seed in any::<u64>()) {
            let mut rng = StdRng::seed_from_u64(seed);
            let inst = testing::random_long_lemma_instance(&mut rng);
            prop_assert!(is_skew_fibration(&inst.map, &inst.domain, &inst.target).unwrap());
            for (dom, tgt) in inst.parts() {
                let map = dom.vertices().map(|v| (v, inst.map.get(v).unwrap())).collect();
                prop_assert!(is_skew_fibration(&map, &dom, &tgt).unwrap());
            }
        }

        #[test]
        fn shallow_normalisation_properties(seed in any::<u64>()) {
            let mut rng = StdRng::seed_from_u64(seed);
            let phi = testing::random_tautology(&mut rng, 8);
            let pf = crate::synth::prove(&phi).unwrap();
            let s = shallow_normalize(&pf).unwrap();
            prop_assert_eq!(verify(&s), Ok(()));
            prop_assert!(is_shallow(&s.map, s.witness.graph(), s.target.graph()).unwrap());
            prop_assert_eq!(graph_is_true(&s.target).unwrap(), graph_is_true(&pf.target).unwrap());
        }
    }

    fn nice_or_offender(c: &ColouredGraph) -> Option<Vec<Vec<Vertex>>> {
        find_not_nice(c).unwrap()
    }
}
