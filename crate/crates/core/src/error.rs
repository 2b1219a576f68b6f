use thiserror::Error;

use crate::diagram::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unknown element token {0:?} (expected one of e, s, t, sts, st, ts)")]
    UnknownElement(String),
    #[error("family notation, column {pos}: {msg}")]
    Family { pos: usize, msg: String },
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
}

impl ParseError {
    pub(crate) fn family(pos: usize, msg: impl Into<String>) -> Self {
        ParseError::Family { pos, msg: msg.into() }
    }

    pub(crate) fn syntax(line: usize, msg: impl Into<String>) -> Self {
        ParseError::Syntax { line, msg: msg.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid diagram: {}", join_violations(.0))]
    InvalidDiagram(Vec<Violation>),

    #[error("the identity is not an admissible color")]
    IdentityColor,

    #[error("expected exactly 2 components with crossings, found {0}")]
    ComponentCount(usize),

    #[error("inter-component signed crossing count {0} is odd")]
    OddLinkingSum(i64),

    #[error("diagram has {0} free loop(s); the coloring matrix is not square")]
    FreeLoops(usize),

    #[error("diagram has no arcs")]
    EmptyDiagram,

    #[error("{0} is not a prime modulus")]
    NotPrime(u64),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("coloring has {got} entries, diagram needs {expected}")]
    ColoringLength { expected: usize, got: usize },

    #[error("coloring assigns no color to arc {0}")]
    MissingColor(usize),

    #[error("coloring is not valid at crossing {0}")]
    InvalidColoring(usize),

    #[error("zero entry at position {0}; twist boxes must be nonzero")]
    ZeroEntry(usize),

    #[error("entry {value} at position {position} is odd; Conway normal form needs even entries")]
    OddEntry { position: usize, value: i64 },

    #[error("component through strand position {0} never passes under a crossing")]
    NeverUnder(usize),

    #[error("invalid sweep bound: {0}")]
    Bound(String),

    #[error("arc {0} does not exist")]
    NoSuchArc(usize),

    #[error("moving arc and over arc must differ (both {0})")]
    SameArc(usize),

    #[error("palette has {0} colors, expected exactly 4")]
    PaletteNotFour(usize),

    #[error("no arc pair produces missing color {missing}: {reason}")]
    NoPromotion { missing: String, reason: String },
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
