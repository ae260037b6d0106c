use thiserror::Error;

use crate::graph::GraphType;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph is not connected")]
    DisconnectedGraph,
    #[error("stabilization would empty the graph")]
    Unstabilizable,
    #[error("flag {0} does not belong to an edge")]
    UnknownEdge(usize),
    #[error("type mismatch: {0} vs {1}")]
    TypeMismatch(GraphType, GraphType),
    #[error("malformed graph: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrataError {
    #[error("{what} = {value} outside supported range {range}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: &'static str,
    },
    #[error("parity is undefined for an odd number of leaves ({0})")]
    OddLeafTotal(usize),
    #[error("graph is not a tree")]
    NotATree,
    #[error("the double cover of a tree with {0} leaves has no stable model; at least 6 leaves are needed")]
    UnstableCover(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("word {0} is not Lyndon")]
    NotLyndon(String),
    #[error("expression mixes multidegrees {0:?} and {1:?}")]
    MixedMultidegree(Vec<u32>, Vec<u32>),
    #[error("component too large for the oracle (total degree {0}, limit {1})")]
    TooLarge(u32, u32),
    #[error("unknown letter '{0}'")]
    UnknownLetter(char),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("bad alphabet: {0}")]
    BadAlphabet(String),
    #[error("element does not lie in the free Lie algebra (residual at {0})")]
    NotLie(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("{what} = {value} outside supported range {range}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: &'static str,
    },
    #[error("d1 is not defined on level 0")]
    LevelZero,
    #[error("certificate failed for g = {}: {}", .0.g, .0.failed_checks().join(", "))]
    FailedCertificate(Box<crate::spectral::Certificate>),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Strata(#[from] StrataError),
}

pub(crate) fn out_of_range(what: &'static str, value: impl Into<i64>, range: &'static str) -> StrataError {
    StrataError::OutOfRange {
        what,
        value: value.into(),
        range,
    }
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format version {0}, expected 1")]
    Version(u64),
    #[error("inconsistent field '{0}'")]
    Inconsistent(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Strata(#[from] StrataError),
}
