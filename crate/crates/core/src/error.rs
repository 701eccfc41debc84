use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("ring needs at least 2 nodes, got {0}")]
    TooFewNodes(usize),
    #[error("node dimension must be positive")]
    ZeroNodeDim,
    #[error("no coupling ranges given")]
    EmptyRanges,
    #[error("coupling range {range} outside 1..={max}")]
    InvalidRange { range: usize, max: usize },
    #[error("dihedral ring needs ranges closed under r -> n - r; {range} has no partner {partner}")]
    DihedralAsymmetry { range: usize, partner: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("expression error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),
    #[error("expression reads range {0}, which is not an input of the node")]
    UndeclaredInput(usize),
    #[error("origin is not an equilibrium (|f(0)| = {0:e})")]
    NotAnEquilibrium(f64),
    #[error("dihedral coefficients must satisfy a_r = a_(n-r); a_{r} = {left}, a_(n-r) = {right}")]
    AsymmetricCoefficients { r: usize, left: f64, right: f64 },
    #[error("eigensolver did not converge within {0} iterations")]
    EigensolverNoConvergence(usize),
    #[error("all couplings a_r (r >= 1) are zero")]
    AllDecoupled,
    #[error("mode {k} has no rotation direction for n = {n}")]
    InvalidMode { n: usize, k: usize },
    #[error("mode {0} has a real critical eigenvalue")]
    NotHopfMode(usize),
    #[error("mode {0} is a multiple eigenvalue; branch enumeration needs nonlinear data")]
    DoubleEigenvalue(usize),
    #[error("ordering must be a permutation of 0..={0}")]
    InvalidPermutation(usize),
    #[error("integration diverged at t = {0}")]
    Diverged(f64),
    #[error("non-finite state at t = {0}")]
    NonFinite(f64),
    #[error("invalid integration setup: {0}")]
    InvalidStep(String),
    #[error("window {window} holds fewer than 5 periods of {period}")]
    WindowTooShort { window: f64, period: f64 },
    #[error("node {0} does not oscillate")]
    NoOscillation(usize),
    #[error("crossing intervals of node {node} spread by {spread:.3} (relative)")]
    IrregularPeriod { node: usize, spread: f64 },
    #[error("correlation peak for node {0} is not unique")]
    AmbiguousLag(usize),
    #[error("invalid colouring: {0}")]
    InvalidColouring(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Machine-readable name of the variant, used in CLI error records.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::TooFewNodes(_) => "TooFewNodes",
            Error::ZeroNodeDim => "ZeroNodeDim",
            Error::EmptyRanges => "EmptyRanges",
            Error::InvalidRange { .. } => "InvalidRange",
            Error::DihedralAsymmetry { .. } => "DihedralAsymmetry",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::Parse { .. } => "Parse",
            Error::UnknownParameter(_) => "UnknownParameter",
            Error::UndeclaredInput(_) => "UndeclaredInput",
            Error::NotAnEquilibrium(_) => "NotAnEquilibrium",
            Error::AsymmetricCoefficients { .. } => "AsymmetricCoefficients",
            Error::EigensolverNoConvergence(_) => "EigensolverNoConvergence",
            Error::AllDecoupled => "AllDecoupled",
            Error::InvalidMode { .. } => "InvalidMode",
            Error::NotHopfMode(_) => "NotHopfMode",
            Error::DoubleEigenvalue(_) => "DoubleEigenvalue",
            Error::InvalidPermutation(_) => "InvalidPermutation",
            Error::Diverged(_) => "Diverged",
            Error::NonFinite(_) => "NonFinite",
            Error::InvalidStep(_) => "InvalidStep",
            Error::WindowTooShort { .. } => "WindowTooShort",
            Error::NoOscillation(_) => "NoOscillation",
            Error::IrregularPeriod { .. } => "IrregularPeriod",
            Error::AmbiguousLag(_) => "AmbiguousLag",
            Error::InvalidColouring(_) => "InvalidColouring",
            Error::Config(_) => "Config",
            Error::Internal(_) => "Internal",
            Error::Io(_) => "Io",
        }
    }

    /// True for errors caused by bad input rather than by the numerics.
    pub fn is_config_error(&self) -> bool {
        matches!(
            self,
            Error::TooFewNodes(_)
                | Error::ZeroNodeDim
                | Error::EmptyRanges
                | Error::InvalidRange { .. }
                | Error::DihedralAsymmetry { .. }
                | Error::DimensionMismatch { .. }
                | Error::Parse { .. }
                | Error::UnknownParameter(_)
                | Error::UndeclaredInput(_)
                | Error::AsymmetricCoefficients { .. }
                | Error::InvalidMode { .. }
                | Error::InvalidPermutation(_)
                | Error::InvalidStep(_)
                | Error::InvalidColouring(_)
                | Error::Config(_)
                | Error::Io(_)
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Config(e.to_string())
    }
}
