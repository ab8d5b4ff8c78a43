use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph is disconnected: infinite status")]
    Disconnected,

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("unsupported degree {d}: {reason}")]
    UnsupportedDegree { d: u64, reason: &'static str },

    #[error("unsupported radius {k}: {reason}")]
    UnsupportedRadius { k: u64, reason: &'static str },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("graph is not a radial Moore graph for (d, k) = ({d}, {k})")]
    NotRadialMoore { d: usize, k: usize },

    #[error("mixed graph orders in ranking input: {first} and {other}")]
    MixedOrders { first: usize, other: usize },

    #[error("search budget of {budget} nodes exceeded; partial lower bound {partial_lower_bound}")]
    Timeout {
        budget: u64,
        partial_lower_bound: String,
    },

    #[error(
        "internal enumeration of {d}-regular graphs on {order} vertices is not supported; \
         supply a graph6 stream instead"
    )]
    CensusNeedsStream { d: usize, order: usize },

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}
