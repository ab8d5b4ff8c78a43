//! Immutable simple undirected graphs and the distance machinery built on them.
//!
//! Adjacency is stored as one fixed-size bitset per vertex. Every graph in
//! this crate has at most a few hundred vertices, so a row of bits per vertex
//! keeps breadth-first search down to word-wide unions.

mod distance;
pub mod graph6;
mod radial;

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub use distance::{
    bfs_layers, eccentricities, radius_diameter, status, status_vector, DistanceLayers,
    StatusVector,
};
pub use radial::{check_structural_props, verify_radial_moore, RadialMooreReport, Violation};

/// A simple undirected graph on the vertex set `0..n`.
///
/// Graphs never change after construction. Operations that "modify" a graph
/// (edge swaps, relabelings) return a new value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<FixedBitSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    /// Builds a graph from an edge list. Repeated edges collapse into one;
    /// loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adjacency[u].insert(v);
            g.adjacency[v].insert(u);
        }
        Ok(g)
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("complete graph edges are valid")
    }

    /// The cycle `C_n` (`n >= 3`).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least three vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
    }

    /// The path `P_n` on `n` vertices.
    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    /// The star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Self {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star edges are valid")
    }

    /// The Petersen graph: outer 5-cycle, inner pentagram, spokes `i ~ i+5`.
    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        Graph::from_edges(10, outer.chain(inner).chain(spokes)).expect("Petersen edges are valid")
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency
            .iter()
            .map(|row| row.count_ones(..))
            .sum::<usize>()
            / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count_ones(..)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adjacency[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].ones()
    }

    /// Neighbourhood of `v` as a bitset over the vertex set.
    pub fn neighbor_set(&self, v: usize) -> &FixedBitSet {
        &self.adjacency[v]
    }

    /// Edges `(u, v)` with `u < v`, in increasing lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            self.adjacency[u]
                .ones()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// The common degree when every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.degree(0);
        (1..self.order())
            .all(|v| self.degree(v) == first)
            .then_some(first)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    pub fn is_connected(&self) -> bool {
        if self.order() == 0 {
            return true;
        }
        bfs_layers(self, 0).vertex_count() == self.order()
    }

    /// Length of a shortest cycle, or `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        let n = self.order();
        let mut best: Option<usize> = None;
        for root in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            let mut queue = std::collections::VecDeque::from([root]);
            dist[root] = 0;
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// The graph with edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut g = self.clone();
        g.adjacency[u].insert(v);
        g.adjacency[v].insert(u);
        Ok(g)
    }

    /// The graph with edge `{u, v}` removed (a no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut g = self.clone();
        g.adjacency[u].set(v, false);
        g.adjacency[v].set(u, false);
        Ok(g)
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]` in the result.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(
            perm.len(),
            self.order(),
            "permutation length must equal graph order"
        );
        let mut g = Graph::empty(self.order());
        for (u, v) in self.edges() {
            g.adjacency[perm[u]].insert(perm[v]);
            g.adjacency[perm[v]].insert(perm[u]);
        }
        g
    }

    /// True when `perm` maps every edge onto an edge.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        if perm.len() != self.order() {
            return false;
        }
        let mut seen = FixedBitSet::with_capacity(self.order());
        for &p in perm {
            if p >= self.order() || seen.put(p) {
                return false;
            }
        }
        self.edges()
            .all(|(u, v)| self.adjacency[perm[u]].contains(perm[v]))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
