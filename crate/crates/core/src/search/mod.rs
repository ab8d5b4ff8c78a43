//! Exhaustive and exploratory searches over small regular graphs.

pub mod census;
pub mod enumerate;
pub mod hoffman_singleton;
pub mod swap;

pub use census::{census, rank_by_status, status_order, CensusResult, GraphSource, RankedGraph};
pub use enumerate::{enumerate_regular, Enumeration, DEFAULT_ENUMERATION_BUDGET};
pub use hoffman_singleton::hoffman_singleton;
pub use swap::{apply_swap, edge_swap_experiment, SwapResult, SwapScan};
