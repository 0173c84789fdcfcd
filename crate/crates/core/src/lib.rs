//! Combinatorial proofs for classical propositional logic.
//!
//! A proposition is translated into a labelled cograph ([`graph_of`]); it is
//! a tautology exactly when every maximal stable set of that graph is true
//! ([`graph_is_true`]). A combinatorial proof is a skew fibration from a
//! nicely coloured cograph whose colour classes are axiomatic; [`verify`]
//! checks one in polynomial time and [`synthesize`] builds one for every
//! true combinatorial proposition.
//!
//! ```
//! use combproof::{parse_proposition, prove, verify};
//!
//! let peirce = parse_proposition("((p->q)->p)->p").unwrap();
//! let proof = prove(&peirce).unwrap();
//! assert!(verify(&proof).is_ok());
//! assert_eq!(proof.witness.classes().len(), 2);
//! ```

pub mod dot;
pub mod error;
pub mod formula;
pub mod graph;
pub mod json;
pub mod proof;
pub mod semantics;
pub mod synth;
pub mod transform;

#[cfg(any(test, feature = "testing"))]
pub mod testing;

pub use error::{Error, Result};
pub use formula::{
    evaluate, is_tautology_bruteforce, is_tautology_bruteforce_with_limit, parse_proposition, Atom,
    Proposition, Valuation,
};
pub use graph::{
    cotree, graph_of, is_cograph, ColouredGraph, Cotree, Graph, LabelledGraph, Vertex,
};
pub use proof::{
    is_graph_fibration, is_homomorphism, is_nicely_coloured, is_skew_fibration, verify,
    CombinatorialProof, VertexMap, Violation, ViolationKind,
};
pub use semantics::{clauses, graph_is_true, Clause};
pub use synth::{prove, synthesize};
pub use transform::{
    fusion, fusion_decompose, is_shallow, restrict, shallow_normalize, FusionSpec,
};
