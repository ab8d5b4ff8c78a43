//! Two-edge swaps: replace edges `{u,v}`, `{x,y}` by `{u,x}`, `{v,y}` or
//! `{u,y}`, `{v,x}`. Degrees are preserved exactly.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::graph::{verify_radial_moore, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SwapResult {
    pub removed: [(usize, usize); 2],
    pub added: [(usize, usize); 2],
    pub central_count: usize,
    pub is_radial_moore: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SwapScan {
    pub d: usize,
    pub k: usize,
    /// Rewirings that kept the graph simple.
    pub tried: usize,
    pub radial_moore_count: usize,
    /// Largest central count among radial Moore results, if any.
    pub max_central: Option<usize>,
    pub results: Vec<SwapResult>,
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Applies one swap, or `None` when a removed edge is missing or an added
/// edge already exists or would be a loop.
pub fn apply_swap(
    g: &Graph,
    removed: [(usize, usize); 2],
    added: [(usize, usize); 2],
) -> Result<Option<Graph>> {
    if removed.iter().any(|&(a, b)| !g.has_edge(a, b)) {
        return Ok(None);
    }
    for &(a, b) in &added {
        g.check_vertex(a)?;
        g.check_vertex(b)?;
        if a == b || g.has_edge(a, b) {
            return Ok(None);
        }
    }
    if ordered(added[0].0, added[0].1) == ordered(added[1].0, added[1].1) {
        return Ok(None);
    }
    let mut h = g.without_edge(removed[0].0, removed[0].1)?;
    h = h.without_edge(removed[1].0, removed[1].1)?;
    h = h.with_edge(added[0].0, added[0].1)?;
    Ok(Some(h.with_edge(added[1].0, added[1].1)?))
}

/// Every simple rewiring of every unordered pair of disjoint edges, in a
/// fixed order independent of scheduling.
pub fn edge_swap_experiment(g: &Graph, d: usize, k: usize) -> Result<SwapScan> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut swaps = Vec::new();
    for (i, &(u, v)) in edges.iter().enumerate() {
        for &(x, y) in &edges[i + 1..] {
            if u == x || u == y || v == x || v == y {
                continue;
            }
            swaps.push(([(u, v), (x, y)], [ordered(u, x), ordered(v, y)]));
            swaps.push(([(u, v), (x, y)], [ordered(u, y), ordered(v, x)]));
        }
    }
    let results = swaps
        .par_iter()
        .map(|&(removed, added)| {
            Ok(apply_swap(g, removed, added)?.map(|h| {
                let report = verify_radial_moore(&h, d, k);
                SwapResult {
                    removed,
                    added,
                    central_count: report.central_count(),
                    is_radial_moore: report.is_radial_moore,
                }
            }))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect::<Vec<_>>();
    let moore: Vec<&SwapResult> = results.iter().filter(|r| r.is_radial_moore).collect();
    Ok(SwapScan {
        d,
        k,
        tried: results.len(),
        radial_moore_count: moore.len(),
        max_central: moore.iter().map(|r| r.central_count).max(),
        results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    #[test]
    fn swap_back_restores_graph() {
        let g = Graph::petersen();
        let removed = [(0, 1), (2, 3)];
        let added = [(0, 2), (1, 3)];
        let h = apply_swap(&g, removed, added).unwrap().unwrap();
        assert_eq!(h.degree_sequence(), g.degree_sequence());
        let back = apply_swap(&h, added, removed).unwrap().unwrap();
        assert_eq!(back, g);
        assert!(are_isomorphic(&back, &g));
    }

    #[test]
    fn existing_edge_is_skipped() {
        let g = Graph::cycle(6);
        assert!(apply_swap(&g, [(0, 1), (2, 3)], [(1, 2), (0, 3)])
            .unwrap()
            .is_none());
    }

    #[test]
    fn cycle_scan_preserves_degrees() {
        let g = Graph::cycle(7);
        let scan = edge_swap_experiment(&g, 2, 3).unwrap();
        assert!(scan.tried > 0);
        for r in &scan.results {
            let h = apply_swap(&g, r.removed, r.added).unwrap().unwrap();
            assert_eq!(h.regular_degree(), Some(2));
        }
    }
}
