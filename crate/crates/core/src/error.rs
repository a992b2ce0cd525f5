use thiserror::Error;

use crate::multipartition::BoxCoord;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed document: {0}")]
    Parse(String),
    #[error("parts not weakly decreasing in component {component}: {parts:?}")]
    NotDecreasing { component: usize, parts: Vec<i64> },
    #[error("negative part {part} in component {component}")]
    NegativePart { component: usize, part: i64 },
    #[error("expected {expected} components, found {found}")]
    LevelMismatch { expected: usize, found: usize },
    #[error("box {0} is not addable")]
    NotAddable(BoxCoord),
    #[error("box {0} is not removable")]
    NotRemovable(BoxCoord),
    #[error("component {component} out of range 1..={level}")]
    ComponentOutOfRange { component: usize, level: usize },
    #[error("residue {residue} out of range 0..{e}")]
    InvalidResidue { residue: usize, e: usize },
    #[error("invalid multicharge: {0}")]
    InvalidCharge(String),
    #[error("algebra dimension {dimension} exceeds bound {bound}")]
    DimensionOverflow { dimension: usize, bound: usize },
    #[error("saturation closed at dimension {found}, expected {expected}")]
    ClosureMismatch { expected: usize, found: usize },
    #[error("rewriting system did not close after {0} steps")]
    RewritingDiverged(usize),
    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),
    #[error("cannot write output: {0}")]
    Output(String),
    /// The reader went away; not worth reporting.
    #[error("output closed")]
    OutputClosed,
}

pub type Result<T> = std::result::Result<T, Error>;
