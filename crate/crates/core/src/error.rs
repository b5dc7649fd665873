use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Invalid user-supplied configuration (bad branch index, bad family, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// A formula is undefined at the requested parameters.
    #[error("degenerate parameters: {0}")]
    DegenerateParameter(String),

    /// The potential is not finite at a grid node.
    #[error("potential is not finite at node {node} (x = {x})")]
    SingularPotential { node: usize, x: f64 },

    /// The extension or weight has a pole inside the physical domain.
    #[error("singular extension: poles at {points:?}")]
    SingularExtension { points: Vec<f64> },

    /// A ground-state candidate changes sign inside the domain.
    #[error("function changes sign near x = {location}")]
    SignChange { location: f64 },

    /// A defining identity failed; this is a transcription bug, never user error.
    #[error("internal inconsistency in {check}: residual {residual:e} exceeds {tolerance:e}")]
    InternalInconsistency {
        check: String,
        residual: f64,
        tolerance: f64,
    },

    #[error("numerical failure: {0}")]
    Numerical(String),
}
