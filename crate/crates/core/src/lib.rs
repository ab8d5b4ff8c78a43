//! Bounds, constructions and exhaustive searches for radial Moore graphs:
//! `d`-regular graphs of Moore-bound order `M(d,k)` with radius `k` and
//! diameter `k + 1`.

pub mod bounds;
pub mod canon;
mod error;
pub mod gd;
pub mod graph;
pub mod recurrence;
pub mod roots;
pub mod search;
mod serde_decimal;

pub use error::{Error, Result};
pub use graph::Graph;
