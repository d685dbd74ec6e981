use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("source set is empty")]
    EmptySourceSet,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("{0} edge(s) are still unoriented")]
    UnorientedEdgesPresent(usize),
    #[error("contraction set is empty")]
    EmptyContractionSet,
    #[error("edge {u}-{v} is not present as an undirected edge")]
    NoSuchEdge { u: usize, v: usize },

    #[error("bridged input: {count} bridge(s), e.g. {example:?}")]
    NotBridgeless { count: usize, example: (usize, usize) },
    #[error("minimum degree {found} is below the required {required}")]
    MinDegreeTooSmall { found: usize, required: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("epsilon must be positive: {0}")]
    InvalidEpsilon(String),

    #[error("every vertex is within distance {cap} of the core")]
    NoFarVertex { cap: usize },
    #[error("no consistent path from {from} back to the core")]
    NoConsistentPath { from: usize },
    #[error("vertices {0} and {1} are the same")]
    SameVertex(usize, usize),
    #[error("no overlapping partner for vertex {vertex} ({side} side)")]
    NoPartner { vertex: usize, side: &'static str },
    #[error("no orientation case matches connector {a}-{b}")]
    CaseFallthrough { a: usize, b: usize },
    #[error("invariant violated ({claim}): {detail}")]
    InvariantViolation { claim: String, detail: String },

    #[error("vertex {vertex} is at distance {distance} from the core, cap is {cap}")]
    VertexTooFar { vertex: usize, distance: String, cap: usize },
    #[error("core orientation is not strongly connected")]
    CoreNotStrong,
    #[error("extension bound violated: diameter {measured} exceeds {bound}")]
    BoundViolated { measured: String, bound: usize },
    #[error("no ear through vertex {0}")]
    NoEar(usize),
    #[error("cap L must be at least 2, got {0}")]
    CapTooSmall(usize),

    #[error("graph has {m} edges, oracle limit is {max}")]
    TooManyEdges { m: usize, max: usize },
    #[error("graph has no strongly connected orientation")]
    NoStrongOrientation,

    #[error("empty list of parts")]
    EmptyList,
    #[error("delta must be at least {min}, got {got}")]
    DeltaTooSmall { got: usize, min: usize },
    #[error("k must be at least 1, got {0}")]
    KTooSmall(usize),
    #[error("need n >= delta + 1 (n = {n}, delta = {delta})")]
    TooFewVertices { n: usize, delta: usize },
    #[error("random construction failed after {0} repair passes; try another seed")]
    ConstructionFailed(usize),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
