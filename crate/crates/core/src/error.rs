//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex count must be positive, got {0}")]
    NonPositiveVertexCount(i64),
    #[error("empty edge")]
    EmptyEdge,
    #[error("vertex {vertex} out of range 1..={n_vertices}")]
    VertexOutOfRange { vertex: i64, n_vertices: u32 },
    #[error("vertex {vertex} repeated within edge {edge:?}")]
    RepeatedVertexInEdge { vertex: u32, edge: Vec<u32> },
    #[error("duplicate edge {edge:?} violates simplicity")]
    DuplicateEdge { edge: Vec<u32> },
    #[error("edge size {k} exceeds vertex count {n}")]
    EdgeSizeExceedsVertexCount { k: u32, n: u32 },
    #[error("inclusion probability {weight} for size {size} outside [0, 1]")]
    WeightOutOfRange { size: u32, weight: f64 },
    #[error("not a permutation of 1..={0}")]
    NotAPermutation(u32),
    #[error("hypergraph has 1-edges; the dimension series formula assumes E_1 = ∅")]
    OneEdgesPresent,
    #[error("algebra has degree-0 generators; an exponent cap is required to enumerate")]
    Degree0CapRequired,
    #[error("{count} monomials in degree {degree} exceed the cap of {cap}")]
    MonomialCapExceeded { degree: u32, count: u64, cap: u64 },
    #[error("closed form for b_N requires min edge size N ≥ 2, got N = {0}")]
    MinEdgeSizeTooSmall(u32),
    #[error("hypergraph has no edges")]
    NoEdges,
    #[error("degree {degree} not covered by a closed form for this hypergraph")]
    DegreeNotCovered { degree: u32 },
    #[error("|V| + |E| = {0} is odd; no symplectic form exists")]
    OddParity(usize),
    #[error("invalid system of distinct representatives: {0}")]
    InvalidSdr(String),
    #[error("symplectic element has a non-integer coefficient")]
    NonIntegerCoefficient,
    #[error("{n} vertices exceed the isomorphism search cap of {cap}")]
    IsoVertexCapExceeded { n: u32, cap: u32 },
    #[error("invalid JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
