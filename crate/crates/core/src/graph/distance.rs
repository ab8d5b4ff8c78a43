use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};

/// Distance layers `Γ_0(root), Γ_1(root), …` of one root vertex.
///
/// Vertices outside the root's component do not appear in any layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceLayers {
    pub root: usize,
    pub layers: Vec<Vec<usize>>,
}

impl DistanceLayers {
    pub fn eccentricity(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    /// Number of vertices reached from the root, the root included.
    pub fn vertex_count(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    /// `Σ_i i·|Γ_i(root)|`, the distance sum over the reached vertices.
    pub fn distance_sum(&self) -> u64 {
        self.layers
            .iter()
            .enumerate()
            .map(|(i, layer)| i as u64 * layer.len() as u64)
            .sum()
    }
}

/// Breadth-first distance layers from `v`.
///
/// # Panics
///
/// Panics if `v` is not a vertex of `g`.
pub fn bfs_layers(g: &Graph, v: usize) -> DistanceLayers {
    let n = g.order();
    assert!(v < n, "root {v} out of range for graph of order {n}");
    let mut seen = FixedBitSet::with_capacity(n);
    seen.insert(v);
    let mut frontier = FixedBitSet::with_capacity(n);
    frontier.insert(v);
    let mut layers = vec![vec![v]];
    loop {
        let mut next = FixedBitSet::with_capacity(n);
        for u in frontier.ones() {
            next.union_with(g.neighbor_set(u));
        }
        next.difference_with(&seen);
        if next.is_clear() {
            break;
        }
        seen.union_with(&next);
        layers.push(next.ones().collect());
        frontier = next;
    }
    DistanceLayers { root: v, layers }
}

/// Sum of distances from `v` to every vertex.
pub fn status(g: &Graph, v: usize) -> Result<u64> {
    g.check_vertex(v)?;
    let layers = bfs_layers(g, v);
    if layers.vertex_count() != g.order() {
        return Err(Error::Disconnected);
    }
    Ok(layers.distance_sum())
}

/// Eccentricity of every vertex. Fails on disconnected input.
pub fn eccentricities(g: &Graph) -> Result<Vec<usize>> {
    (0..g.order())
        .map(|v| {
            let layers = bfs_layers(g, v);
            if layers.vertex_count() == g.order() {
                Ok(layers.eccentricity())
            } else {
                Err(Error::Disconnected)
            }
        })
        .collect()
}

/// `(radius, diameter)` of a connected graph.
pub fn radius_diameter(g: &Graph) -> Result<(usize, usize)> {
    let ecc = eccentricities(g)?;
    let radius = ecc.iter().copied().min().unwrap_or(0);
    let diameter = ecc.iter().copied().max().unwrap_or(0);
    Ok((radius, diameter))
}

/// The status vector written with multiplicities, largest status first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct StatusVector {
    /// `(status, multiplicity)` with strictly decreasing status values.
    pub entries: Vec<(u64, usize)>,
    pub total: u64,
}

impl StatusVector {
    pub fn from_statuses(statuses: &[u64]) -> Self {
        let mut sorted = statuses.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut entries: Vec<(u64, usize)> = Vec::new();
        for s in sorted {
            match entries.last_mut() {
                Some((value, count)) if *value == s => *count += 1,
                _ => entries.push((s, 1)),
            }
        }
        StatusVector {
            entries,
            total: statuses.iter().sum(),
        }
    }

    pub fn order(&self) -> usize {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    pub fn max_status(&self) -> Option<u64> {
        self.entries.first().map(|&(s, _)| s)
    }

    pub fn min_status(&self) -> Option<u64> {
        self.entries.last().map(|&(s, _)| s)
    }
}

impl fmt::Display for StatusVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (s, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({s},{m})")?;
        }
        Ok(())
    }
}

pub fn status_vector(g: &Graph) -> Result<StatusVector> {
    let statuses = (0..g.order())
        .map(|v| status(g, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(StatusVector::from_statuses(&statuses))
}
