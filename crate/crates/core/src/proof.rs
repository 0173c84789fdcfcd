//! Verification of combinatorial proofs.
//!
//! A combinatorial proof of a labelled cograph `P` is a map `h: C -> P`
//! from a coloured graph `C` such that
//!
//! * `C` is a non-empty cograph whose colouring is nice,
//! * every colour class is axiomatic under `h`,
//! * `h` is a skew fibration.
//!
//! [`verify`] checks all of these and reports every violation it finds.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::formula::Atom;
use crate::graph::{cotree, ColouredGraph, ColouringDefect, Graph, LabelledGraph, Vertex};
use crate::transform;

/// Default cap on the number of class unions the exhaustive niceness
/// check will enumerate.
pub const DEFAULT_MAX_NICE_SUBSETS: u64 = 1 << 20;

/// Function between vertex sets, stored as an ordered map.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VertexMap(BTreeMap<Vertex, Vertex>);

impl VertexMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn identity(g: &Graph) -> Self {
        g.vertices().map(|v| (v, v)).collect()
    }

    pub fn insert(&mut self, from: Vertex, to: Vertex) -> Option<Vertex> {
        self.0.insert(from, to)
    }

    pub fn get(&self, v: Vertex) -> Option<Vertex> {
        self.0.get(&v).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.0.iter().map(|(k, v)| (*k, *v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self) -> BTreeSet<Vertex> {
        self.0.values().copied().collect()
    }

    /// Domain vertices whose image lies in `targets`.
    pub fn preimage(&self, targets: &BTreeSet<Vertex>) -> BTreeSet<Vertex> {
        self.iter()
            .filter(|(_, t)| targets.contains(t))
            .map(|(s, _)| s)
            .collect()
    }

    pub fn extend(&mut self, other: &VertexMap) {
        self.0.extend(other.iter());
    }
}

impl FromIterator<(Vertex, Vertex)> for VertexMap {
    fn from_iter<I: IntoIterator<Item = (Vertex, Vertex)>>(iter: I) -> Self {
        VertexMap(iter.into_iter().collect())
    }
}

/// Candidate proof: witness `C`, target `P` and the map `h: C -> P`.
///
/// Nothing is enforced on construction; run [`verify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinatorialProof {
    pub witness: ColouredGraph,
    pub target: LabelledGraph,
    pub map: VertexMap,
}

/// Why a vertex map fails to be a homomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapDefect {
    Unmapped(Vertex),
    NotInDomain(Vertex),
    ImageNotInTarget {
        vertex: Vertex,
        image: Vertex,
    },
    /// `edge` is mapped to a non-edge (or collapsed onto one vertex).
    EdgeNotPreserved {
        edge: (Vertex, Vertex),
        image: (Vertex, Vertex),
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationKind {
    NotAHomomorphism,
    NotACograph,
    EmptyWitness,
    InvalidColouring,
    NotNice,
    NonAxiomaticClass,
    SkewLiftingMissing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EmptyWitness,
    NotACograph {
        path: Option<[Vertex; 4]>,
    },
    InvalidColouring(ColouringDefect),
    /// `classes` is a class of more than two vertices, or a union of
    /// two-vertex classes that induces a matching.
    NotNice {
        classes: Vec<Vec<Vertex>>,
    },
    NonAxiomaticClass {
        class: Vec<Vertex>,
    },
    NotAHomomorphism(MapDefect),
    /// No edge at `vertex` lifts `target_edge = (h(vertex), w)` skewly.
    SkewLiftingMissing {
        vertex: Vertex,
        target_edge: (Vertex, Vertex),
    },
}

impl Violation {
    pub fn kind(&self) -> ViolationKind {
        match self {
            Violation::EmptyWitness => ViolationKind::EmptyWitness,
            Violation::NotACograph { .. } => ViolationKind::NotACograph,
            Violation::InvalidColouring(_) => ViolationKind::InvalidColouring,
            Violation::NotNice { .. } => ViolationKind::NotNice,
            Violation::NonAxiomaticClass { .. } => ViolationKind::NonAxiomaticClass,
            Violation::NotAHomomorphism(_) => ViolationKind::NotAHomomorphism,
            Violation::SkewLiftingMissing { .. } => ViolationKind::SkewLiftingMissing,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyWitness => write!(f, "EmptyWitness: witness has no vertices"),
            Violation::NotACograph {
                path: Some([a, b, c, d]),
            } => {
                write!(
                    f,
                    "NotACograph: witness contains induced path {a}-{b}-{c}-{d}"
                )
            }
            Violation::NotACograph { path: None } => {
                write!(f, "NotACograph: witness is not a cograph")
            }
            Violation::InvalidColouring(d) => write!(f, "InvalidColouring: {d:?}"),
            Violation::NotNice { classes } => {
                if classes.len() == 1 && classes[0].len() > 2 {
                    write!(
                        f,
                        "NotNice: class {:?} has more than two vertices",
                        classes[0]
                    )
                } else {
                    write!(
                        f,
                        "NotNice: union of classes {classes:?} induces a matching"
                    )
                }
            }
            Violation::NonAxiomaticClass { class } => {
                write!(f, "NonAxiomaticClass: class {class:?} is not axiomatic")
            }
            Violation::NotAHomomorphism(d) => write!(f, "NotAHomomorphism: {d:?}"),
            Violation::SkewLiftingMissing {
                vertex,
                target_edge: (a, b),
            } => {
                write!(
                    f,
                    "SkewLiftingMissing: no skew lifting of {a}-{b} at {vertex}"
                )
            }
        }
    }
}

/// Totality and range defects of `h` as a map `V(g) -> V(target)`.
fn domain_defects(h: &VertexMap, g: &Graph, target: &Graph) -> Vec<MapDefect> {
    let mut out: Vec<MapDefect> = g
        .vertices()
        .filter(|v| h.get(*v).is_none())
        .map(MapDefect::Unmapped)
        .collect();
    for (v, image) in h.iter() {
        if !g.contains(v) {
            out.push(MapDefect::NotInDomain(v));
        } else if !target.contains(image) {
            out.push(MapDefect::ImageNotInTarget { vertex: v, image });
        }
    }
    out
}

fn edge_defects(h: &VertexMap, g: &Graph, target: &Graph) -> Vec<MapDefect> {
    g.edges()
        .filter_map(|(v, w)| {
            let (a, b) = (h.get(v)?, h.get(w)?);
            (!target.has_edge(a, b)).then_some(MapDefect::EdgeNotPreserved {
                edge: (v, w),
                image: (a, b),
            })
        })
        .collect()
}

fn require_total(h: &VertexMap, g: &Graph, target: &Graph) -> Result<()> {
    match domain_defects(h, g, target).first() {
        None => Ok(()),
        Some(MapDefect::Unmapped(v) | MapDefect::NotInDomain(v)) => Err(Error::UnknownVertex(*v)),
        Some(MapDefect::ImageNotInTarget { image, .. }) => Err(Error::UnknownVertex(*image)),
        Some(MapDefect::EdgeNotPreserved { .. }) => unreachable!(),
    }
}

/// Whether every edge `vw` of `g` maps to an edge `h(v)h(w)` of `target`.
/// An edge whose endpoints share an image is not preserved.
pub fn is_homomorphism(h: &VertexMap, g: &Graph, target: &Graph) -> Result<bool> {
    require_total(h, g, target)?;
    Ok(edge_defects(h, g, target).is_empty())
}

fn require_homomorphism(h: &VertexMap, g: &Graph, target: &Graph) -> Result<()> {
    require_total(h, g, target)?;
    match edge_defects(h, g, target).first() {
        None => Ok(()),
        Some(d) => Err(Error::NotAHomomorphism(format!("{d:?}"))),
    }
}

/// Target edges `(h(v), w)` that have no skew lifting at `v`, in order.
/// Assumes `h` is total with images in `target`.
fn missing_liftings(h: &VertexMap, g: &Graph, target: &Graph) -> Vec<(Vertex, (Vertex, Vertex))> {
    let mut out = Vec::new();
    for v in g.vertices() {
        let hv = h.get(v).unwrap();
        for &w in target.neighbours(hv) {
            let lifted = g
                .neighbours(v)
                .iter()
                .any(|&u| !target.has_edge(h.get(u).unwrap(), w));
            if !lifted {
                out.push((v, (hv, w)));
            }
        }
    }
    out
}

/// First missing skew lifting as `(v, (h(v), w))`, or `None` if `h` is a
/// skew fibration.
pub fn skew_counterexample(
    h: &VertexMap,
    g: &Graph,
    target: &Graph,
) -> Result<Option<(Vertex, (Vertex, Vertex))>> {
    require_homomorphism(h, g, target)?;
    Ok(missing_liftings(h, g, target).into_iter().next())
}

/// For every `v` and every edge `h(v)w` there is an edge `vu` with
/// `h(u)w` not an edge.
pub fn is_skew_fibration(h: &VertexMap, g: &Graph, target: &Graph) -> Result<bool> {
    Ok(skew_counterexample(h, g, target)?.is_none())
}

/// For every `v` and every edge `h(v)w` there is exactly one edge `vu` with
/// `h(u) = w`.
pub fn is_graph_fibration(h: &VertexMap, g: &Graph, target: &Graph) -> Result<bool> {
    require_homomorphism(h, g, target)?;
    Ok(g.vertices().all(|v| {
        let hv = h.get(v).unwrap();
        target.neighbours(hv).iter().all(|&w| {
            g.neighbours(v)
                .iter()
                .filter(|&&u| h.get(u) == Some(w))
                .count()
                == 1
        })
    }))
}

/// `w` is non-empty and each member has exactly one neighbour in `w`.
pub fn induces_matching(g: &Graph, w: &BTreeSet<Vertex>) -> Result<bool> {
    if let Some(&v) = w.iter().find(|v| !g.contains(**v)) {
        return Err(Error::UnknownVertex(v));
    }
    Ok(!w.is_empty()
        && w.iter()
            .all(|&v| g.neighbours(v).iter().filter(|u| w.contains(u)).count() == 1))
}

fn require_valid_colouring(c: &ColouredGraph) -> Result<()> {
    match c.colouring_defects().first() {
        None => Ok(()),
        Some(d) => Err(Error::InvalidColouring(format!("{d:?}"))),
    }
}

/// Reference niceness check: every class has at most two vertices and no
/// non-empty union of two-vertex classes induces a matching. Enumerates
/// all unions, so it is exponential in the number of two-vertex classes.
///
/// Returns the offending class or union, or `None` if nice.
pub fn nice_violation_exhaustive(
    c: &ColouredGraph,
    max_subsets: u64,
) -> Result<Option<Vec<Vec<Vertex>>>> {
    require_valid_colouring(c)?;
    if let Some(big) = c.classes().iter().find(|k| k.len() > 2) {
        return Ok(Some(vec![big.clone()]));
    }
    let pairs: Vec<&Vec<Vertex>> = c.classes().iter().filter(|k| k.len() == 2).collect();
    let subsets = 1u64.checked_shl(pairs.len() as u32).unwrap_or(u64::MAX) - 1;
    if subsets > max_subsets {
        return Err(Error::ResourceLimit {
            what: "class unions",
            limit: max_subsets,
            actual: subsets,
        });
    }
    for mask in 1..=subsets {
        let chosen: Vec<Vec<Vertex>> = (0..pairs.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| pairs[i].clone())
            .collect();
        let union: BTreeSet<Vertex> = chosen.iter().flatten().copied().collect();
        if induces_matching(c.graph(), &union)? {
            return Ok(Some(chosen));
        }
    }
    Ok(None)
}

pub fn is_nicely_coloured_exhaustive(c: &ColouredGraph) -> Result<bool> {
    Ok(nice_violation_exhaustive(c, DEFAULT_MAX_NICE_SUBSETS)?.is_none())
}

/// Polynomial niceness check for coloured cographs.
///
/// Splits the graph repeatedly along fusion decompositions: a coloured
/// cograph that is a fusion of `C[W]` and `C[W']` is nice iff both parts
/// are. A split exists whenever the block graph's canonical perfect
/// matching has a bridge; if none of its edges is a bridge the matching is
/// not unique, and a second perfect matching yields an offending union.
pub fn nice_violation(c: &ColouredGraph) -> Result<Option<Vec<Vec<Vertex>>>> {
    require_valid_colouring(c)?;
    if c.is_empty() {
        return Ok(None);
    }
    cotree(c.graph())?;
    transform::find_not_nice(c)
}

/// Niceness of a validly coloured graph: the polynomial check on cographs,
/// the exhaustive one otherwise.
pub fn is_nicely_coloured(c: &ColouredGraph) -> Result<bool> {
    match nice_violation(c) {
        Err(Error::NotACograph(_)) => is_nicely_coloured_exhaustive(c),
        other => Ok(other?.is_none()),
    }
}

/// A singleton class is axiomatic if its image is labelled 1; a two-vertex
/// class if its images are labelled by dual literals.
pub fn class_is_axiomatic(h: &VertexMap, class: &[Vertex], target: &LabelledGraph) -> Result<bool> {
    let mut labels = Vec::with_capacity(class.len());
    for &v in class {
        let image = h.get(v).ok_or(Error::UnknownVertex(v))?;
        labels.push(target.label(image).ok_or(Error::UnknownVertex(image))?);
    }
    Ok(match labels.as_slice() {
        [a] => **a == Atom::One,
        [a, b] => Atom::are_dual_literals(a, b),
        _ => false,
    })
}

/// Checks every condition and returns all violations found.
pub fn verify(proof: &CombinatorialProof) -> std::result::Result<(), Vec<Violation>> {
    let (c, p, h) = (&proof.witness, &proof.target, &proof.map);
    let mut out = Vec::new();

    let mut is_cograph = false;
    if c.is_empty() {
        out.push(Violation::EmptyWitness);
    } else {
        match cotree(c.graph()) {
            Ok(_) => is_cograph = true,
            Err(Error::NotACograph(path)) => out.push(Violation::NotACograph { path }),
            Err(e) => unreachable!("cotree failed unexpectedly: {e}"),
        }
    }

    let defects = c.colouring_defects();
    let colouring_ok = defects.is_empty();
    out.extend(defects.into_iter().map(Violation::InvalidColouring));

    let oversized: Vec<&Vec<Vertex>> = c.classes().iter().filter(|k| k.len() > 2).collect();
    out.extend(oversized.iter().map(|k| Violation::NotNice {
        classes: vec![(*k).clone()],
    }));
    if colouring_ok && oversized.is_empty() && !c.is_empty() {
        let found = if is_cograph {
            transform::find_not_nice(c).ok().flatten()
        } else {
            // Diagnostic only: the witness is already rejected.
            nice_violation_exhaustive(c, DEFAULT_MAX_NICE_SUBSETS)
                .ok()
                .flatten()
        };
        if let Some(classes) = found {
            out.push(Violation::NotNice { classes });
        }
    }

    let map_defects = domain_defects(h, c.graph(), p.graph());
    let total = map_defects.is_empty();
    let bad_vertices: BTreeSet<Vertex> = map_defects
        .iter()
        .filter_map(|d| match d {
            MapDefect::Unmapped(v) | MapDefect::ImageNotInTarget { vertex: v, .. } => Some(*v),
            _ => None,
        })
        .collect();
    out.extend(map_defects.into_iter().map(Violation::NotAHomomorphism));

    for class in c.classes() {
        if class.len() > 2
            || class
                .iter()
                .any(|v| bad_vertices.contains(v) || !c.graph().contains(*v))
        {
            if class.len() > 2 {
                out.push(Violation::NonAxiomaticClass {
                    class: class.clone(),
                });
            }
            continue;
        }
        if !class_is_axiomatic(h, class, p).unwrap_or(false) {
            out.push(Violation::NonAxiomaticClass {
                class: class.clone(),
            });
        }
    }

    out.extend(
        edge_defects(h, c.graph(), p.graph())
            .into_iter()
            .map(Violation::NotAHomomorphism),
    );

    if total {
        out.extend(missing_liftings(h, c.graph(), p.graph()).into_iter().map(
            |(vertex, target_edge)| Violation::SkewLiftingMissing {
                vertex,
                target_edge,
            },
        ));
    }

    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}
