//! Random generators for tests and benchmarks.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::formula::{is_tautology_bruteforce, Proposition};
use crate::graph::{cotree, graph_of, ColouredGraph, Cotree, Graph, LabelledGraph, Vertex};
use crate::proof::VertexMap;
use crate::transform::{fusion, FusionSpec};

pub const VARIABLES: [&str; 3] = ["p", "q", "r"];

/// Random proposition with exactly `leaves` atom occurrences over `vars`.
pub fn random_proposition<R: Rng>(rng: &mut R, vars: &[&str], leaves: usize) -> Proposition {
    let leaves = leaves.max(1);
    let phi = if leaves == 1 {
        if rng.gen_bool(0.1) {
            Proposition::Const(rng.gen())
        } else {
            Proposition::var(*vars.choose(rng).unwrap())
        }
    } else {
        let left = rng.gen_range(1..leaves);
        let l = random_proposition(rng, vars, left);
        let r = random_proposition(rng, vars, leaves - left);
        match rng.gen_range(0..3) {
            0 => Proposition::and(l, r),
            1 => Proposition::or(l, r),
            _ => Proposition::implies(l, r),
        }
    };
    if rng.gen_bool(0.25) {
        Proposition::not(phi)
    } else {
        phi
    }
}

/// Random tautology over `p, q, r` with at most `max_leaves` atoms, by
/// rejection sampling. Falls back to `phi | ~phi`.
pub fn random_tautology<R: Rng>(rng: &mut R, max_leaves: usize) -> Proposition {
    for _ in 0..1000 {
        let n = rng.gen_range(1..=max_leaves.max(1));
        let phi = random_proposition(rng, &VARIABLES, n);
        if is_tautology_bruteforce(&phi).unwrap() {
            return phi;
        }
    }
    let phi = random_proposition(rng, &VARIABLES, (max_leaves / 2).max(1));
    Proposition::or(phi.clone(), Proposition::not(phi))
}

/// Graph of a random proposition with up to `max_leaves` atoms; any
/// labelled cograph can arise this way.
pub fn random_labelled_cograph<R: Rng>(rng: &mut R, max_leaves: usize) -> LabelledGraph {
    let n = rng.gen_range(1..=max_leaves.max(1));
    graph_of(&random_proposition(rng, &VARIABLES, n))
}

/// Union of a random subset of the components of `g`.
pub fn random_portion<R: Rng>(rng: &mut R, g: &Graph) -> BTreeSet<Vertex> {
    g.component_sets()
        .into_iter()
        .filter(|_| rng.gen_bool(0.5))
        .flatten()
        .collect()
}

/// Nicely coloured cograph built by fusing single-class seeds of one or
/// two vertices with random portions. Ids are taken from `next`.
pub fn random_nice_cograph<R: Rng>(
    rng: &mut R,
    classes: RangeInclusive<usize>,
    next: &mut Vertex,
) -> ColouredGraph {
    let k = rng.gen_range(classes).max(1);
    let mut pieces: Vec<ColouredGraph> = (0..k)
        .map(|_| {
            let size = rng.gen_range(1..=2);
            let ids: Vec<Vertex> = (0..size).map(|i| *next + i).collect();
            *next += size;
            ColouredGraph::single_class(&ids)
        })
        .collect();
    while pieces.len() > 1 {
        let i = rng.gen_range(0..pieces.len());
        let left = pieces.swap_remove(i);
        let j = rng.gen_range(0..pieces.len());
        let right = pieces.swap_remove(j);
        let spec = FusionSpec {
            left_portion: random_portion(rng, left.graph()),
            right_portion: random_portion(rng, right.graph()),
            left,
            right,
        };
        pieces.push(fusion(&spec).expect("portions and ids are valid"));
    }
    pieces.pop().unwrap()
}

/// Two random nice cographs with disjoint ids and random portions.
pub fn random_fusion_spec<R: Rng>(rng: &mut R, max_classes: usize) -> FusionSpec {
    let mut next = 0;
    let left = random_nice_cograph(rng, 1..=max_classes, &mut next);
    let right = random_nice_cograph(rng, 1..=max_classes, &mut next);
    FusionSpec {
        left_portion: random_portion(rng, left.graph()),
        right_portion: random_portion(rng, right.graph()),
        left,
        right,
    }
}

/// Random cograph on up to `max_vertices` vertices with a random valid
/// colouring into classes of one or two vertices. Often not nice.
pub fn random_two_coloured_cograph<R: Rng>(rng: &mut R, max_vertices: usize) -> ColouredGraph {
    let graph = random_labelled_cograph(rng, max_vertices).graph().clone();
    let mut free: Vec<Vertex> = graph.vertices().collect();
    free.shuffle(rng);
    let mut classes = Vec::new();
    while let Some(v) = free.pop() {
        let partners: Vec<usize> = (0..free.len())
            .filter(|&i| !graph.has_edge(v, free[i]))
            .collect();
        if !partners.is_empty() && rng.gen_bool(0.85) {
            let w = free.swap_remove(*partners.choose(rng).unwrap());
            classes.push(vec![v, w]);
        } else {
            classes.push(vec![v]);
        }
    }
    ColouredGraph::new(graph, classes).expect("classes are stable and partition")
}

/// Random skew fibration into the cograph `target`, built along its
/// cotree, with extra edges added wherever the map stays a homomorphism.
pub fn random_skew_fibration<R: Rng>(rng: &mut R, target: &Graph) -> (Graph, VertexMap) {
    let mut next = 0;
    random_skew_fibration_from(rng, target, &mut next)
}

pub fn random_skew_fibration_from<R: Rng>(
    rng: &mut R,
    target: &Graph,
    next: &mut Vertex,
) -> (Graph, VertexMap) {
    let tree = cotree(target).expect("target must be a cograph");
    let (mut g, h) = along(rng, &tree, next);
    let vs: Vec<Vertex> = g.vertices().collect();
    for _ in 0..vs.len() {
        let (v, w) = (*vs.choose(rng).unwrap(), *vs.choose(rng).unwrap());
        if target.has_edge(h.get(v).unwrap(), h.get(w).unwrap()) {
            g.add_edge(v, w).unwrap();
        }
    }
    (g, h)
}

fn along<R: Rng>(rng: &mut R, t: &Cotree, next: &mut Vertex) -> (Graph, VertexMap) {
    match t {
        Cotree::Leaf(k) => {
            let copies = rng.gen_range(1..=2);
            let ids: Vec<Vertex> = (0..copies).map(|i| *next + i).collect();
            *next += copies;
            let map = ids.iter().map(|&v| (v, *k)).collect();
            (Graph::from_edges(ids, []).unwrap(), map)
        }
        Cotree::Union(cs) => {
            let mut chosen: Vec<&Cotree> = cs.iter().filter(|_| rng.gen_bool(0.7)).collect();
            if chosen.is_empty() {
                chosen.push(cs.choose(rng).unwrap());
            }
            let mut g = Graph::new();
            let mut map = VertexMap::new();
            for c in chosen {
                let (gc, hc) = along(rng, c, next);
                g = g.union(&gc).unwrap();
                map.extend(&hc);
            }
            (g, map)
        }
        Cotree::Join(cs) => {
            let copies = if rng.gen_bool(0.25) { 2 } else { 1 };
            let mut g = Graph::new();
            let mut map = VertexMap::new();
            for _ in 0..copies {
                let mut piece = Graph::new();
                for c in cs {
                    let (gc, hc) = along(rng, c, next);
                    piece = piece.join(&gc).unwrap();
                    map.extend(&hc);
                }
                g = g.union(&piece).unwrap();
            }
            (g, map)
        }
    }
}

/// Covering map onto `target`: `copies` copies of every vertex, and over
/// each edge a random perfect matching between the copies of its ends.
pub fn random_covering<R: Rng>(rng: &mut R, target: &Graph, copies: u32) -> (Graph, VertexMap) {
    let copies = copies.max(1);
    let id = |k: Vertex, i: u32| k * copies + i;
    let mut g = Graph::new();
    let mut map = VertexMap::new();
    for k in target.vertices() {
        for i in 0..copies {
            g.add_vertex(id(k, i));
            map.insert(id(k, i), k);
        }
    }
    for (k, w) in target.edges() {
        let mut perm: Vec<u32> = (0..copies).collect();
        perm.shuffle(rng);
        for i in 0..copies {
            g.add_edge(id(k, i), id(w, perm[i as usize])).unwrap();
        }
    }
    (g, map)
}

/// A skew fibration `(G1 & G2) | (H1 | H2) -> (K1 & K2) | L` with
/// `h(Gi)` inside `Ki` and `h(Hi)` inside `L`.
#[derive(Debug, Clone)]
pub struct LongLemmaInstance {
    pub domain: Graph,
    pub target: Graph,
    pub map: VertexMap,
    pub g: [BTreeSet<Vertex>; 2],
    pub h: [BTreeSet<Vertex>; 2],
    pub k: [BTreeSet<Vertex>; 2],
    pub l: BTreeSet<Vertex>,
}

impl LongLemmaInstance {
    /// The two maps `Gi | Hi -> Ki | L` as (domain, target) graph pairs;
    /// the vertex map is the restriction of `map`.
    pub fn parts(&self) -> Vec<(Graph, Graph)> {
        (0..2)
            .map(|i| {
                let dom: BTreeSet<Vertex> = self.g[i].union(&self.h[i]).copied().collect();
                let tgt: BTreeSet<Vertex> = self.k[i].union(&self.l).copied().collect();
                (
                    self.domain.induced(&dom).unwrap(),
                    self.target.induced(&tgt).unwrap(),
                )
            })
            .collect()
    }
}

pub fn random_long_lemma_instance<R: Rng>(rng: &mut R) -> LongLemmaInstance {
    let k1 = random_labelled_cograph(rng, 4);
    let k2 = random_labelled_cograph(rng, 4).relabel_fresh(k1.vertex_count() as Vertex);
    let l = random_labelled_cograph(rng, 4)
        .relabel_fresh((k1.vertex_count() + k2.vertex_count()) as Vertex);
    let target = k1
        .graph()
        .join(k2.graph())
        .unwrap()
        .union(l.graph())
        .unwrap();

    let mut next = 0;
    let (g1, f1) = random_skew_fibration_from(rng, k1.graph(), &mut next);
    let (g2, f2) = random_skew_fibration_from(rng, k2.graph(), &mut next);
    let mut map = f1;
    map.extend(&f2);
    let mut domain = g1.join(&g2).unwrap();
    let mut h = [BTreeSet::new(), BTreeSet::new()];
    for part in &mut h {
        if rng.gen_bool(0.75) {
            let (gh, fh) = random_skew_fibration_from(rng, l.graph(), &mut next);
            *part = gh.vertex_set();
            domain = domain.union(&gh).unwrap();
            map.extend(&fh);
        }
    }
    LongLemmaInstance {
        domain,
        target,
        map,
        g: [g1.vertex_set(), g2.vertex_set()],
        h,
        k: [k1.graph().vertex_set(), k2.graph().vertex_set()],
        l: l.graph().vertex_set(),
    }
}

/// All graphs on `n` vertices `0..n`, one per edge subset.
pub fn all_graphs(n: Vertex) -> Vec<Graph> {
    let pairs: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|v| (v + 1..n).map(move |w| (v, w)))
        .collect();
    (0..1u32 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, e)| *e);
            Graph::from_edges(0..n, edges).unwrap()
        })
        .collect()
}

/// All partitions of `0..n` into blocks, blocks sorted.
pub fn all_partitions(n: Vertex) -> Vec<Vec<Vec<Vertex>>> {
    let mut out = vec![Vec::new()];
    for v in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for i in 0..p.len() {
                let mut q: Vec<Vec<Vertex>> = p.clone();
                q[i].push(v);
                next.push(q);
            }
            let mut q = p.clone();
            q.push(vec![v]);
            next.push(q);
        }
        out = next;
    }
    out
}

/// All maps from `0..n` into `targets`.
pub fn all_maps(n: Vertex, targets: &[Vertex]) -> Vec<VertexMap> {
    let mut out = vec![BTreeMap::new()];
    for v in 0..n {
        out = out
            .into_iter()
            .flat_map(|m| {
                targets.iter().map(move |&t| {
                    let mut m = m.clone();
                    m.insert(v, t);
                    m
                })
            })
            .collect();
    }
    out.into_iter().map(|m| m.into_iter().collect()).collect()
}
