use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `position` is a 1-based character column into the input text.
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("valuation is undefined on variable `{0}`")]
    MissingVariable(String),

    #[error("resource limit exceeded: {what} ({actual} > {limit})")]
    ResourceLimit {
        what: &'static str,
        limit: u64,
        actual: u64,
    },

    #[error("vertex id {0} occurs in both operands")]
    IdCollision(Vertex),

    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),

    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),

    #[error("graph is not a cograph{}", witness_suffix(.0))]
    NotACograph(Option<[Vertex; 4]>),

    #[error("map is not a graph homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("invalid colouring: {0}")]
    InvalidColouring(String),

    #[error("vertex set {0:?} is not a portion")]
    NotAPortion(Vec<Vertex>),

    #[error("coloured graph has a single colour class")]
    SingleColourClass,

    #[error("combinatorial proposition is not true: clause {clause:?} is false")]
    NotTrue { clause: Vec<Vertex> },

    #[error("invalid proof: {0}")]
    InvalidProof(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("internal invariant broken: {0}")]
    InternalInvariantBroken(String),
}

fn witness_suffix(path: &Option<[Vertex; 4]>) -> String {
    match path {
        Some([a, b, c, d]) => format!(" (induced path {a}-{b}-{c}-{d})"),
        None => String::new(),
    }
}
