use thiserror::Error;

use crate::gamma::Vertex;

/// Errors raised by the algebra, graph and sequence routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("invalid order n={n}: {reason}")]
    InvalidOrder { n: u32, reason: &'static str },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("order undetermined: {0}")]
    OrderUndetermined(String),

    #[error("generator does not stay in the nonzero residues: window {index} is zero")]
    ZeroWindow { index: usize },

    #[error("not a Hamiltonian cycle: {0}")]
    InvalidCycle(String),

    #[error("vertex {vertex} is outside 1..={max}")]
    VertexOutOfRange { vertex: Vertex, max: Vertex },

    #[error(
        "exhaustive enumeration refused for n={n} (ceiling {ceiling}); \
         pass a limit or override the guard"
    )]
    GuardRefused { n: u32, ceiling: u32 },

    #[error("join graph has {edges} edges, above the exhaustive ceiling of {ceiling}")]
    TooManyEdges { edges: usize, ceiling: usize },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
