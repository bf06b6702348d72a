use thiserror::Error;

/// Errors produced by graph construction, codecs, transforms and numerics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },

    #[error("self-loop at vertex {v} is not allowed")]
    SelfLoop { v: usize },

    #[error("{context}: input graph is not a tree")]
    NotATree { context: &'static str },

    #[error("graph6 error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("graph6 encoding supports at most 62 vertices, got {n}")]
    Graph6TooLarge { n: usize },

    #[error("edge-list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("order {n} outside the supported range {min}..={max}")]
    OrderOutOfRange { n: usize, min: usize, max: usize },

    #[error("{family}: {reason}")]
    FamilyParameter {
        family: &'static str,
        reason: String,
    },

    #[error("transform parameter violation: {0}")]
    TransformParameter(String),

    #[error("pendant-structure precondition failed: {0}")]
    PendantStructure(String),

    #[error("matching vectors have different orders ({left} vs {right})")]
    MismatchedOrder { left: usize, right: usize },

    #[error(
        "input is not a realizable matching vector (entry {index} of the transform is negative)"
    )]
    NotRealizable { index: usize },

    #[error("invalid matching vector: {0}")]
    InvalidMatchingVector(String),

    #[error("not a matching polynomial: {0}")]
    InvalidPolynomial(String),

    #[error("double factorial undefined for {s} (need s >= -1)")]
    NegativeDoubleFactorial { s: i64 },

    #[error("quadrature did not converge: achieved {achieved:.3e}, requested {requested:.3e}")]
    Quadrature { achieved: f64, requested: f64 },

    #[error("root isolation failed: {0}")]
    RootIsolation(String),

    #[error("requested precision {requested:.3e} is below the supported floor {floor:.3e}")]
    PrecisionTooFine { requested: f64, floor: f64 },
}
