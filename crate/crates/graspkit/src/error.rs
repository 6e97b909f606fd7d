use thiserror::Error;

/// Crate-wide error type. Variants map 1:1 onto CLI exit codes, see
/// [`Error::exit_code`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error in {path}: {msg}")]
    Parse { path: String, msg: String },
    #[error("face {face} has no part label")]
    Label { face: usize },
    #[error("degenerate mesh: total surface area is zero")]
    DegenerateMesh,
    #[error("part {part} has degenerate enclosed volume")]
    DegenerateVolume { part: u32 },
    #[error("surface sample references part {part} with no material assignment")]
    UnassignedPart { part: u32 },
    #[error("LP solver hit the iteration cap without a certificate")]
    SolverFailure,
    #[error("no feasible positive grasp after {retries} material reseeds")]
    NoPositiveGrasps { retries: u32 },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("degenerate labels: ground truth is all-{0}")]
    DegenerateLabels(&'static str),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("training diverged (non-finite loss) at step {step}")]
    Divergence { step: usize },
    #[error("empty instance: no parts with a material assignment")]
    EmptyInstance,
    #[error("schema version mismatch: found {found}, expected {expected}")]
    SchemaVersionMismatch { found: u32, expected: u32 },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("usage error: {0}")]
    Usage(String),
}

impl Error {
    /// Stable exit-code mapping for the CLI (documented in the README).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) => 2,
            Error::Parse { .. } => 10,
            Error::Label { .. } => 11,
            Error::DegenerateMesh | Error::DegenerateVolume { .. } => 12,
            Error::UnassignedPart { .. } => 13,
            Error::SolverFailure => 14,
            Error::NoPositiveGrasps { .. } => 15,
            Error::ShapeMismatch(_) | Error::DegenerateLabels(_) => 16,
            Error::Domain(_) | Error::Divergence { .. } | Error::EmptyInstance => 17,
            Error::SchemaVersionMismatch { .. } => 18,
            Error::Io(_) => 19,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
