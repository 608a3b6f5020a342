use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Everything that can go wrong inside the algorithmic core.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Malformed input line (1-based line number).
    Parse { line: usize, message: String },
    /// The input held no edges at all.
    EmptyInput,
    NodeOutOfRange { node: usize, node_count: usize },
    /// A partition file referenced a node the graph does not have.
    UnknownNode(String),
    /// A partition file did not cover this node.
    MissingNode(String),
    /// A partition file listed this node twice.
    DuplicateNode(String),
    EmptyCommunity(usize),
    /// The partition length does not match the graph.
    PartitionMismatch { expected: usize, found: usize },
    /// The quantity is undefined on a graph without edges.
    NoEdges,
    /// Every node is immunized; an outbreak cannot start.
    NoSusceptible,
    InvalidParameter(String),
    /// Parameters that cannot produce a valid sample.
    Infeasible(String),
    /// A stochastic procedure ran out of its attempt budget.
    BudgetExhausted { what: &'static str, budget: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { line, message } => write!(f, "line {line}: {message}"),
            Error::EmptyInput => f.write_str("input contains no edges"),
            Error::NodeOutOfRange { node, node_count } => {
                write!(f, "node {node} out of range (graph has {node_count} nodes)")
            }
            Error::UnknownNode(id) => write!(f, "unknown node `{id}`"),
            Error::MissingNode(id) => write!(f, "node `{id}` has no community"),
            Error::DuplicateNode(id) => write!(f, "node `{id}` assigned more than once"),
            Error::EmptyCommunity(k) => write!(f, "community {k} is empty"),
            Error::PartitionMismatch { expected, found } => {
                write!(f, "partition covers {found} nodes, graph has {expected}")
            }
            Error::NoEdges => f.write_str("graph has no edges"),
            Error::NoSusceptible => f.write_str("no susceptible node left to seed the outbreak"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::Infeasible(msg) => write!(f, "infeasible parameters: {msg}"),
            Error::BudgetExhausted { what, budget } => {
                write!(f, "{what} exhausted its budget of {budget} attempts")
            }
        }
    }
}

impl core::error::Error for Error {}
