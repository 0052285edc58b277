use thiserror::Error;

/// Every failure the library can report.
///
/// Variant names double as the stable error identifiers printed by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("not a standard filling: {0}")]
    NotStandard(String),
    #[error("word violates the lattice condition at position {position}")]
    NonLatticeWord { position: usize },
    #[error("malformed word: {0}")]
    MalformedWord(String),
    #[error("cell ({row}, {col}) is not a removable inner corner")]
    NotACorner { row: usize, col: usize },
    #[error("{what} = {value} is outside {lo}..={hi}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },
    #[error("shape is not a rectangle")]
    NotRectangular,
    #[error("wrong shape: expected {expected}")]
    WrongShape { expected: String },
    #[error("not a noncrossing perfect matching: {0}")]
    InvalidMatching(String),
    #[error("web is not symmetrical")]
    NotSymmetrical,
    #[error("three arcs meet at a single interior point (arcs {0}, {1}, {2})")]
    ConcurrentArcs(usize, usize, usize),
    #[error("boundary vertex {label} is neither a degree-1 source nor a degree-2 sink")]
    InvalidBoundaryDegrees { label: String },
    #[error("invalid arc diagram: {0}")]
    InvalidDiagram(String),
    #[error("unknown face {0}")]
    UnknownFace(usize),
    #[error("not a 3-web: {0}")]
    NotAWeb(String),
    #[error("invalid planar map: {0}")]
    InvalidMap(String),
    #[error("not a domino tableau")]
    NotDomino,
    #[error("block at columns {first}..={last} matches no simple block type")]
    UnrecognizedBlock { first: usize, last: usize },
    #[error("vertical pair ({0}, {1}) is not an arc of the compression's m-diagram")]
    VerticalPairNotAnArc(i64, i64),
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable variant name, e.g. `"NotDomino"`.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidShape(_) => "InvalidShape",
            Error::NotStandard(_) => "NotStandard",
            Error::NonLatticeWord { .. } => "NonLatticeWord",
            Error::MalformedWord(_) => "MalformedWord",
            Error::NotACorner { .. } => "NotACorner",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::NotRectangular => "NotRectangular",
            Error::WrongShape { .. } => "WrongShape",
            Error::InvalidMatching(_) => "InvalidMatching",
            Error::NotSymmetrical => "NotSymmetrical",
            Error::ConcurrentArcs(..) => "ConcurrentArcs",
            Error::InvalidBoundaryDegrees { .. } => "InvalidBoundaryDegrees",
            Error::InvalidDiagram(_) => "InvalidDiagram",
            Error::UnknownFace(_) => "UnknownFace",
            Error::NotAWeb(_) => "NotAWeb",
            Error::InvalidMap(_) => "InvalidMap",
            Error::NotDomino => "NotDomino",
            Error::UnrecognizedBlock { .. } => "UnrecognizedBlock",
            Error::VerticalPairNotAnArc(..) => "VerticalPairNotAnArc",
            Error::UnknownTheorem(_) => "UnknownTheorem",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
