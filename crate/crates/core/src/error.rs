use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters n={n}, k={k}: need 1 <= k <= n")]
    InvalidParams { n: usize, k: usize },

    #[error("word is empty")]
    Empty,
    #[error("character {ch:?} at position {pos} is not one of R, U, D")]
    BadAlphabet { ch: char, pos: usize },
    #[error("word has {r} Rs, {u} Us and {d} Ds; expected {k} Rs, {k} Us and {expected_d} Ds")]
    BadCounts {
        r: usize,
        u: usize,
        d: usize,
        k: usize,
        expected_d: usize,
    },
    #[error("first letter must not be D")]
    LeadingD,

    #[error("bad profile: {0}")]
    BadProfile(String),

    #[error("vertex {vertex} is outside the cycle on {len} vertices")]
    VertexOutOfRange { vertex: usize, len: usize },
    #[error("edge id {edge} is outside the cycle on {len} vertices")]
    EdgeOutOfRange { edge: usize, len: usize },
    #[error("isolated vertex {vertex} is an endpoint of a chosen edge")]
    Overlap { vertex: usize },
    #[error("arcs starting at {first} and {second} share a vertex")]
    ArcsIntersect { first: usize, second: usize },
    #[error("arc starting at {start} has {edge_count} edges; at most {max} allowed")]
    ArcTooLong {
        start: usize,
        edge_count: usize,
        max: usize,
    },
    #[error("subgraph has {found} edges, expected {expected}")]
    WrongEdgeCount { expected: usize, found: usize },
    #[error("subgraph has {found} components, expected {expected}")]
    WrongComponentCount { expected: usize, found: usize },
    #[error("all edges of the cycle are chosen")]
    FullCycle,

    #[error("count mismatch at n={n}, k={k}: {detail}")]
    CountMismatch { n: usize, k: usize, detail: String },
}
