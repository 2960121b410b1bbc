use thiserror::Error;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{family} group requires n >= {min}, got {n}")]
    InvalidGroup {
        family: &'static str,
        min: u64,
        n: u64,
    },

    #[error("element {element} does not belong to {group}")]
    ElementOutOfRange { element: String, group: String },

    #[error("group order {order} exceeds the vertex budget of {budget}")]
    Capacity { order: u64, budget: u64 },

    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("search exceeded its budget of {0} expansions")]
    BudgetExceeded(u64),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
