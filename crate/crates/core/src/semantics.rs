//! Clauses (maximal stable sets) and truth of labelled cographs.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::formula::Atom;
use crate::graph::{cotree, Cotree, LabelledGraph, Vertex};

/// Default bound on the number of clauses materialised at any cotree node.
pub const DEFAULT_MAX_CLAUSES: usize = 1_000_000;

pub type Clause = BTreeSet<Vertex>;

/// All clauses of a labelled cograph, sorted.
///
/// Computed on the cotree: a leaf has one clause, a join node takes the
/// union of its children's clause sets and a union node takes every
/// combination of one clause per child.
pub fn clauses(g: &LabelledGraph) -> Result<Vec<Clause>> {
    clauses_with_limit(g, DEFAULT_MAX_CLAUSES)
}

pub fn clauses_with_limit(g: &LabelledGraph, limit: usize) -> Result<Vec<Clause>> {
    let tree = cotree(g.graph())?;
    let mut out = clauses_of(&tree, limit)?;
    out.sort();
    Ok(out)
}

fn clauses_of(t: &Cotree, limit: usize) -> Result<Vec<Clause>> {
    match t {
        Cotree::Leaf(v) => Ok(vec![Clause::from([*v])]),
        Cotree::Join(cs) => {
            let mut out = Vec::new();
            for c in cs {
                out.extend(clauses_of(c, limit)?);
                check_limit(out.len(), limit)?;
            }
            Ok(out)
        }
        Cotree::Union(cs) => {
            let mut acc = vec![Clause::new()];
            for c in cs {
                let child = clauses_of(c, limit)?;
                check_limit(acc.len().saturating_mul(child.len()), limit)?;
                acc = acc
                    .iter()
                    .flat_map(|a| child.iter().map(move |b| a.union(b).copied().collect()))
                    .collect();
            }
            Ok(acc)
        }
    }
}

fn check_limit(actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        return Err(Error::ResourceLimit {
            what: "clauses",
            limit: limit as u64,
            actual: actual as u64,
        });
    }
    Ok(())
}

/// A clause is true if it has a 1-labelled vertex or two vertices labelled
/// by dual literals.
pub fn clause_is_true(g: &LabelledGraph, clause: &Clause) -> Result<bool> {
    let mut atoms = BTreeSet::new();
    for &v in clause {
        atoms.insert(g.label(v).ok_or(Error::UnknownVertex(v))?);
    }
    Ok(atoms
        .iter()
        .any(|a| **a == Atom::One || (a.is_literal() && atoms.contains(&a.dual()))))
}

/// A labelled cograph is true if all its clauses are.
pub fn graph_is_true(g: &LabelledGraph) -> Result<bool> {
    graph_is_true_with_limit(g, DEFAULT_MAX_CLAUSES)
}

pub fn graph_is_true_with_limit(g: &LabelledGraph, limit: usize) -> Result<bool> {
    Ok(find_false_clause(g, limit)?.is_none())
}

/// A false clause, if one exists.
///
/// Runs the clause recursion but discards partial clauses that are already
/// true (a superset of a true set is true) and keeps one representative per
/// set of literals, so the work is bounded by the number of consistent
/// literal sets rather than the number of clauses.
pub fn find_false_clause(g: &LabelledGraph, limit: usize) -> Result<Option<Clause>> {
    let tree = cotree(g.graph())?;
    let partial = false_partials(&tree, g, limit)?;
    Ok(partial.into_values().next())
}

type Partials = BTreeMap<BTreeSet<Atom>, Clause>;

fn false_partials(t: &Cotree, g: &LabelledGraph, limit: usize) -> Result<Partials> {
    match t {
        Cotree::Leaf(v) => {
            let mut out = Partials::new();
            match g.label(*v).unwrap() {
                Atom::One => {}
                Atom::Zero => {
                    out.insert(BTreeSet::new(), Clause::from([*v]));
                }
                lit => {
                    out.insert(BTreeSet::from([lit.clone()]), Clause::from([*v]));
                }
            }
            Ok(out)
        }
        Cotree::Join(cs) => {
            let mut out = Partials::new();
            for c in cs {
                for (k, v) in false_partials(c, g, limit)? {
                    out.entry(k).or_insert(v);
                }
                check_limit(out.len(), limit)?;
            }
            Ok(out)
        }
        Cotree::Union(cs) => {
            let mut acc = Partials::from([(BTreeSet::new(), Clause::new())]);
            for c in cs {
                let child = false_partials(c, g, limit)?;
                let mut next = Partials::new();
                for (la, ca) in &acc {
                    for (lb, cb) in &child {
                        if lb.iter().any(|a| la.contains(&a.dual())) {
                            continue;
                        }
                        let labels = la.union(lb).cloned().collect();
                        next.entry(labels)
                            .or_insert_with(|| ca.union(cb).copied().collect());
                    }
                }
                check_limit(next.len(), limit)?;
                acc = next;
                if acc.is_empty() {
                    break;
                }
            }
            Ok(acc)
        }
    }
}
