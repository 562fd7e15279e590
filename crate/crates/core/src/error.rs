use thiserror::Error;

use crate::graph::VertexId;
use crate::solver::OracleResult;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid dimensions: {0}")]
    InvalidDimensions(String),

    #[error("edge list is not a tree: {0}")]
    DisconnectedTree(String),

    #[error("vertex {0} is not in the graph")]
    UnknownVertex(VertexId),

    #[error("tower {0} lies outside the graph")]
    TowerOutsideGraph(VertexId),

    #[error("tower {0} is listed more than once")]
    DuplicateTower(VertexId),

    #[error("invalid tower strength t = {0}; strength must be at least 1")]
    InvalidStrength(u32),

    #[error("hypothesis violated for {tag}: {detail}")]
    HypothesisViolated { tag: &'static str, detail: String },

    #[error("3x3 starting blocks exist only for r in {{1, 2}} (got r = {0})")]
    UnsupportedShapeForR(u32),

    #[error("no bound row for (t, r) = ({t}, {r})")]
    UnsupportedTRPair { t: u32, r: u32 },

    #[error("king lattice pattern is defined only for r in {{1, 2}} (got r = {0})")]
    UnsupportedR(u32),

    #[error("window halfwidth {halfwidth} is below the minimum {minimum}")]
    WindowTooSmall { halfwidth: u32, minimum: u32 },

    #[error("not a path decomposition: {0}")]
    NotAPathDecomposition(String),

    #[error("node budget of {budget} exhausted; best known upper witness has {} towers", .best.gamma)]
    BudgetExhausted { budget: u64, best: Box<OracleResult> },

    #[error("no dominating set with at most {cap} towers")]
    CardinalityCapExceeded { cap: u32 },

    #[error("even a tower on every vertex leaves some vertex below r = {r}")]
    Infeasible { r: u32 },

    #[error("graph has {vertices} vertices; limit is {limit}")]
    TooLarge { vertices: usize, limit: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    pub(crate) fn hypothesis(tag: &'static str, detail: impl Into<String>) -> Self {
        Error::HypothesisViolated {
            tag,
            detail: detail.into(),
        }
    }
}
