use thiserror::Error;

/// Errors raised while building graphs, enumerating matchings, or running
/// the structural verifications. Variants carrying `lhs`/`rhs` describe a
/// violated identity; they indicate that an input broke a premise every
/// verified statement relies on (or an internal bug), not an I/O problem.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("graph is not bipartite: odd closed walk through {witness:?}")]
    NotBipartite { witness: Vec<String> },

    #[error("not a plane drawing: {0}")]
    NotPlaneDrawing(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("face tracing violates Euler's formula: V={vertices}, E={edges}, traced F={faces}")]
    EulerViolation {
        vertices: usize,
        edges: usize,
        faces: usize,
    },

    #[error("infinite face walk repeats vertex {vertex}; graph is not 2-connected")]
    NotTwoConnected { vertex: String },

    #[error("vertex sequence is not a simple cycle of the graph: {0}")]
    NotACycle(String),

    #[error("path is not a peripheral common boundary: {0}")]
    PathNotPeripheral(String),

    #[error("face {face} does not share an edge with the graph boundary")]
    NotPeripheral { face: usize },

    #[error("face {face} meets the boundary in {segments} disjoint segments")]
    DisconnectedCommonBoundary { face: usize, segments: usize },

    #[error("the common boundary of face {face} is its whole boundary cycle")]
    CommonBoundaryWholeCycle { face: usize },

    #[error("perfect matching count exceeds the configured cap of {cap}")]
    CountLimitExceeded { cap: usize },

    #[error("graph has {edges} edges; matching machinery supports at most {max}")]
    EdgeLimitExceeded { edges: usize, max: usize },

    #[error("flip iteration did not converge within {limit} steps; input is likely not weakly elementary")]
    NotConvergent { limit: usize },

    #[error("flip edge between matchings {a} and {b} classifies as non-alternating")]
    OrientationAmbiguous { a: usize, b: usize },

    #[error("reachability order is not a lattice: {0}")]
    NotALattice(String),

    #[error("lattice is not distributive: witness triple ({x}, {y}, {z})")]
    NotDistributive { x: usize, y: usize, z: usize },

    #[error("convex expansion precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("graph with {size} vertices exceeds the isomorphism search bound {max}")]
    SizeLimitExceeded { size: usize, max: usize },

    #[error("no reducible face decomposition found; input contradicts elementarity")]
    NoDecompositionFound,

    #[error("common boundary of face {face} is not alternating for matching {matching}")]
    AlternationViolated { face: usize, matching: usize },

    #[error("face boundary has odd length; forcing is undefined")]
    OddFaceBoundary { face: usize },

    #[error("verified identity `{name}` failed: lhs={lhs}, rhs={rhs}")]
    FormulaViolated {
        name: String,
        lhs: String,
        rhs: String,
    },

    #[error("lemma check `{name}` failed: {detail}")]
    LemmaViolated { name: String, detail: String },

    #[error("main theorem check failed: {detail}")]
    TheoremViolated { detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
