use std::io;
use std::path::PathBuf;

use thiserror::Error;

use crate::graph::Edge;
use crate::graph6::Graph6Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph order {0} outside 1..=31")]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("edge {0} is not present")]
    EdgeAbsent(Edge),
    #[error("operation would leave an empty graph")]
    EmptyResult,
    #[error("invalid graph: {0}")]
    Invalid(String),
    #[error("{0:?} is not a triangle")]
    NotTriangle([usize; 3]),
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotDegreeThree { vertex: usize, degree: usize },
    #[error("graph is planar; every vertex trivially qualifies")]
    PlanarInput,
    #[error("order {order} exceeds the oracle budget of {budget}")]
    OracleBudget { order: usize, budget: usize },
    #[error("order {order} exceeds the exhaustive enumeration budget of {budget}")]
    EnumerationBudget { order: usize, budget: usize },
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("line {line}: {source}")]
    Line { line: usize, source: Graph6Error },
    #[error("{path}: {source}")]
    File { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("checkpoint: {0}")]
    Checkpoint(String),
}
