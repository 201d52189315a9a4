use thiserror::Error;

use crate::geometry::Orientation;

#[derive(Debug, Error)]
pub enum Error {
    #[error("rectangle `{id}` has zero or negative width")]
    ZeroWidth { id: String },
    #[error("rectangle `{id}` has zero or negative height")]
    ZeroHeight { id: String },
    #[error("duplicate rectangle id `{0}`")]
    DuplicateId(String),
    #[error("layout is empty")]
    EmptyLayout,
    #[error("unknown rectangle id `{0}`")]
    UnknownId(String),
    #[error("no {orientation:?} strip between `{a}` and `{b}`: projections overlap or touch")]
    NoStrip { orientation: Orientation, a: String, b: String },
    #[error("rectangles `{a}` and `{b}` have overlapping interiors in a disjoint layout")]
    OverlapViolation { a: String, b: String },
    #[error("invalid coordinate `{0}`")]
    InvalidCoord(String),

    #[error("graph too small: n = {n}, need at least {min}")]
    TooSmall { n: usize, min: usize },
    #[error("graph too large: n = {n} exceeds cap {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid part list: {0}")]
    InvalidPartList(String),
    #[error("{count} maximal cliques exceed the oracle cap of {cap}")]
    TooManyCliques { count: usize, cap: usize },

    #[error("interval models do not match the edge assignment: {0}")]
    InvalidModels(String),
    #[error("layout has {layout} rectangles but the graph has {graph} vertices")]
    SizeMismatch { layout: usize, graph: usize },
    #[error("invalid mapping: {0}")]
    InvalidMapping(String),

    #[error("edge {u}-{v} joins two vertices of the same part")]
    NotKPartite { u: usize, v: usize },
    #[error("rectangles `{a}` and `{b}` share a part but see each other")]
    SamePartVisibility { a: String, b: String },
    #[error("not representable: {0}")]
    NotRepresentable(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("schema error at `{path}`: {message}")]
    Schema { path: String, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
