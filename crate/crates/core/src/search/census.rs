use std::cmp::Ordering;

use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::{enumerate_regular, DEFAULT_ENUMERATION_BUDGET};
use crate::bounds::moore_bound;
use crate::canon::canonical_graph6;
use crate::error::{Error, Result};
use crate::graph::{
    check_structural_props, status_vector, verify_radial_moore, Graph, StatusVector, Violation,
};

/// Largest order the built-in enumerator is trusted with.
pub const INTERNAL_CENSUS_MAX_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankedGraph {
    /// graph6 of the canonical relabelling.
    pub graph6: String,
    pub status_vector: StatusVector,
    pub central_count: usize,
    pub violations: Vec<Violation>,
}

impl RankedGraph {
    fn statuses_desc(&self) -> impl Iterator<Item = u64> + '_ {
        self.status_vector
            .entries
            .iter()
            .flat_map(|&(s, m)| std::iter::repeat_n(s, m))
    }
}

/// Total status ascending, then the expanded status vectors
/// lexicographically, then the canonical graph6 string.
pub fn status_order(a: &RankedGraph, b: &RankedGraph) -> Ordering {
    a.status_vector
        .total
        .cmp(&b.status_vector.total)
        .then_with(|| a.statuses_desc().cmp(b.statuses_desc()))
        .then_with(|| a.graph6.cmp(&b.graph6))
}

fn ranked(g: &Graph, central_count: usize, violations: Vec<Violation>) -> Result<RankedGraph> {
    Ok(RankedGraph {
        graph6: canonical_graph6(g),
        status_vector: status_vector(g)?,
        central_count,
        violations,
    })
}

/// Orders connected graphs of one common order by status, closest to a
/// Moore graph (smallest total status) first.
pub fn rank_by_status(graphs: &[Graph]) -> Result<Vec<RankedGraph>> {
    if let Some(first) = graphs.first() {
        if let Some(other) = graphs.iter().find(|g| g.order() != first.order()) {
            return Err(Error::MixedOrders {
                first: first.order(),
                other: other.order(),
            });
        }
    }
    let mut out = graphs
        .par_iter()
        .map(|g| {
            let (r, _) = crate::graph::radius_diameter(g)?;
            let central = crate::graph::eccentricities(g)?
                .iter()
                .filter(|&&e| e == r)
                .count();
            ranked(g, central, Vec::new())
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(status_order);
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusResult {
    pub d: usize,
    pub k: usize,
    /// Input graphs that are `d`-regular of order `M(d,k)`.
    pub total_regular: usize,
    pub radial_moore: usize,
    /// Largest number of central vertices among the radial Moore graphs.
    pub max_central: usize,
    pub ranking: Vec<RankedGraph>,
}

pub enum GraphSource {
    /// Enumerate internally; only small orders are supported.
    Internal,
    /// Graphs supplied by the caller, e.g. decoded from a graph6 stream.
    Graphs(Vec<Graph>),
}

/// Filters a population of `d`-regular graphs of order `M(d,k)` down to the
/// radial Moore ones and ranks them by status.
pub fn census(d: usize, k: usize, source: GraphSource) -> Result<CensusResult> {
    let order: usize = moore_bound(d as u64, k as u64)?
        .try_into()
        .map_err(|_| Error::OutOfRange(format!("M({d},{k}) too large")))?;
    let graphs = match source {
        GraphSource::Internal if order <= INTERNAL_CENSUS_MAX_ORDER => {
            let e = enumerate_regular(d, order, DEFAULT_ENUMERATION_BUDGET)?;
            if !e.complete {
                return Err(Error::Consistency(
                    "internal enumeration ran out of budget".into(),
                ));
            }
            e.graphs
        }
        GraphSource::Internal => return Err(Error::CensusNeedsStream { d, order }),
        GraphSource::Graphs(gs) => gs,
    };
    let candidates: Vec<&Graph> = graphs
        .iter()
        .filter(|g| g.order() == order && g.regular_degree() == Some(d))
        .collect();
    let mut ranking = candidates
        .par_iter()
        .filter_map(|g| {
            let report = verify_radial_moore(g, d, k);
            report.is_radial_moore.then(|| {
                let violations = check_structural_props(g, k)?;
                ranked(g, report.central_count(), violations)
            })
        })
        .collect::<Result<Vec<_>>>()?;
    ranking.sort_by(status_order);
    Ok(CensusResult {
        d,
        k,
        total_regular: candidates.len(),
        radial_moore: ranking.len(),
        max_central: ranking.iter().map(|r| r.central_count).max().unwrap_or(0),
        ranking,
    })
}
