//! Partition refinement with individualization: canonical labelings,
//! isomorphism search and automorphism group orders for small graphs.
//!
//! Vertices start coloured by their distance profile (the layer sizes of
//! their BFS tree), the colouring is refined to an equitable ordered
//! partition, and non-singleton cells are broken by individualizing one
//! vertex at a time. Every step depends only on the graph structure and the
//! cell order, so isomorphic inputs yield isomorphic search trees.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::{bfs_layers, Graph};

/// Ordered partition of the vertex set.
pub type Cells = Vec<Vec<usize>>;

/// Cells keyed by the BFS layer sizes of each vertex, smallest key first.
pub fn distance_profile_cells(g: &Graph) -> Cells {
    let mut classes: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for v in 0..g.order() {
        classes.entry(bfs_layers(g, v).sizes()).or_default().push(v);
    }
    classes.into_values().collect()
}

/// Splits cells by neighbour counts into every cell until the partition is
/// equitable. Sub-cells keep the order of their count signatures.
pub fn refine(g: &Graph, mut cells: Cells) -> Cells {
    let n = g.order();
    loop {
        let sets: Vec<FixedBitSet> = cells
            .iter()
            .map(|cell| {
                let mut s = FixedBitSet::with_capacity(n);
                cell.iter().for_each(|&v| s.insert(v));
                s
            })
            .collect();
        let mut next: Cells = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut groups: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                let signature = sets
                    .iter()
                    .map(|s| g.neighbor_set(v).intersection_count(s) as u32)
                    .collect();
                groups.entry(signature).or_default().push(v);
            }
            next.extend(groups.into_values());
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

/// Cell sizes and the neighbour-count matrix of an equitable partition.
fn quotient(g: &Graph, cells: &Cells) -> Vec<u32> {
    let n = g.order();
    let sets: Vec<FixedBitSet> = cells
        .iter()
        .map(|cell| {
            let mut s = FixedBitSet::with_capacity(n);
            cell.iter().for_each(|&v| s.insert(v));
            s
        })
        .collect();
    let mut out = Vec::with_capacity(cells.len() * (cells.len() + 1));
    for cell in cells {
        out.push(cell.len() as u32);
        out.extend(
            sets.iter()
                .map(|s| g.neighbor_set(cell[0]).intersection_count(s) as u32),
        );
    }
    out
}

fn individualize(cells: &Cells, v: usize) -> Cells {
    let mut out = Vec::with_capacity(cells.len() + 1);
    for cell in cells {
        if cell.len() > 1 && cell.contains(&v) {
            out.push(vec![v]);
            out.push(cell.iter().copied().filter(|&u| u != v).collect());
        } else {
            out.push(cell.clone());
        }
    }
    out
}

fn is_discrete(cells: &Cells) -> bool {
    cells.iter().all(|c| c.len() == 1)
}

fn first_nonsingleton(cells: &Cells) -> Option<usize> {
    cells.iter().position(|c| c.len() > 1)
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Orbit representative (smallest member) of every vertex under the group
/// generated by `generators`.
pub fn orbits(n: usize, generators: &[Vec<usize>]) -> Vec<usize> {
    let mut uf = UnionFind::new(n);
    for gen in generators {
        for (v, &image) in gen.iter().enumerate() {
            uf.union(v, image);
        }
    }
    (0..n).map(|v| uf.find(v)).collect()
}

/// Upper-triangle adjacency bits of `g` relabelled so that `order[i]`
/// becomes vertex `i`, packed most significant bit first.
fn code_of(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let bits = n * n.saturating_sub(1) / 2;
    let mut code = vec![0u64; bits.div_ceil(64)];
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                code[bit / 64] |= 1 << (63 - bit % 64);
            }
            bit += 1;
        }
    }
    code
}

/// A canonical labelling and the automorphisms met while finding it.
#[derive(Debug, Clone)]
pub struct CanonicalForm {
    /// `labeling[v]` is the canonical label of vertex `v`.
    pub labeling: Vec<usize>,
    /// Packed adjacency bits of the relabelled graph; equal codes mean
    /// isomorphic graphs.
    pub code: Vec<u64>,
    pub generators: Vec<Vec<usize>>,
}

impl CanonicalForm {
    pub fn graph(&self, g: &Graph) -> Graph {
        g.permuted(&self.labeling)
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    first: Option<(Vec<u64>, Vec<usize>)>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    generators: Vec<Vec<usize>>,
}

impl CanonSearch<'_> {
    fn record_automorphism(&mut self, from: &[usize], to: &[usize]) {
        let mut gamma = vec![0; from.len()];
        for (&a, &b) in from.iter().zip(to) {
            gamma[a] = b;
        }
        if gamma.iter().enumerate().any(|(v, &w)| v != w) {
            self.generators.push(gamma);
        }
    }

    fn leaf(&mut self, cells: &Cells) {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = code_of(self.g, &order);
        let Some((first_code, first_order)) = &self.first else {
            self.first = Some((code.clone(), order.clone()));
            self.best = Some((code, order));
            return;
        };
        if code == *first_code {
            let first_order = first_order.clone();
            self.record_automorphism(&first_order, &order);
            return;
        }
        let (best_code, best_order) = self.best.as_ref().expect("best is set with first");
        if code == *best_code {
            let best_order = best_order.clone();
            self.record_automorphism(&best_order, &order);
        } else if code < *best_code {
            self.best = Some((code, order));
        }
    }

    fn pruned(&self, path: &[usize], explored: &[usize], w: usize) -> bool {
        if explored.is_empty() {
            return false;
        }
        let fixing: Vec<Vec<usize>> = self
            .generators
            .iter()
            .filter(|gen| path.iter().all(|&p| gen[p] == p))
            .cloned()
            .collect();
        if fixing.is_empty() {
            return false;
        }
        let reps = orbits(self.g.order(), &fixing);
        explored.iter().any(|&e| reps[e] == reps[w])
    }

    fn search(&mut self, cells: Cells, path: &mut Vec<usize>) {
        let Some(target) = first_nonsingleton(&cells) else {
            self.leaf(&cells);
            return;
        };
        let mut explored = Vec::new();
        for &w in &cells[target] {
            if self.pruned(path, &explored, w) {
                continue;
            }
            let child = refine(self.g, individualize(&cells, w));
            path.push(w);
            self.search(child, path);
            path.pop();
            explored.push(w);
        }
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let mut search = CanonSearch {
        g,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let start = refine(g, distance_profile_cells(g));
    search.search(start, &mut Vec::new());
    let (code, order) = search.best.expect("search reaches at least one leaf");
    let mut labeling = vec![0; order.len()];
    for (pos, &v) in order.iter().enumerate() {
        labeling[v] = pos;
    }
    CanonicalForm {
        labeling,
        code,
        generators: search.generators,
    }
}

/// graph6 string of the canonically relabelled graph.
pub fn canonical_graph6(g: &Graph) -> String {
    crate::graph::graph6::encode(&canonical_form(g).graph(g))
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_form(g).code == canonical_form(h).code
}

/// Node budget for automorphism searches.
pub const DEFAULT_AUT_BUDGET: u64 = 5_000_000;

struct IsoSearch<'a> {
    g: &'a Graph,
    nodes: u64,
    budget: u64,
}

impl IsoSearch<'_> {
    fn tick(&mut self) -> std::result::Result<(), ()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(())
        } else {
            Ok(())
        }
    }

    /// A colour-preserving automorphism carrying refined partition `a` onto
    /// refined partition `b`, if one exists.
    fn find(&mut self, a: &Cells, b: &Cells) -> std::result::Result<Option<Vec<usize>>, ()> {
        self.tick()?;
        if a.len() != b.len() || quotient(self.g, a) != quotient(self.g, b) {
            return Ok(None);
        }
        if is_discrete(a) {
            let mut map = vec![0; self.g.order()];
            for (ca, cb) in a.iter().zip(b) {
                map[ca[0]] = cb[0];
            }
            return Ok(self.g.is_automorphism(&map).then_some(map));
        }
        let idx = first_nonsingleton(a).expect("non-discrete partition");
        let v = a[idx][0];
        let child_a = refine(self.g, individualize(a, v));
        for &w in &b[idx] {
            let child_b = refine(self.g, individualize(b, w));
            if let Some(map) = self.find(&child_a, &child_b)? {
                return Ok(Some(map));
            }
        }
        Ok(None)
    }

    fn order(&mut self, cells: Cells, partial: &mut BigUint) -> std::result::Result<BigUint, ()> {
        let Some(idx) = first_nonsingleton(&cells) else {
            return Ok(BigUint::one());
        };
        let cell = cells[idx].clone();
        let v = cell[0];
        let base = refine(self.g, individualize(&cells, v));
        let mut uf = UnionFind::new(self.g.order());
        let mut outside = Vec::new();
        for &w in &cell[1..] {
            if uf.find(w) == uf.find(v) || outside.iter().any(|&o| uf.find(o) == uf.find(w)) {
                continue;
            }
            let target = refine(self.g, individualize(&cells, w));
            match self.find(&base, &target)? {
                Some(map) => map.iter().enumerate().for_each(|(x, &y)| uf.union(x, y)),
                None => outside.push(w),
            }
        }
        let root = uf.find(v);
        let orbit = cell.iter().filter(|&&w| uf.find(w) == root).count();
        *partial *= orbit;
        Ok(self.order(base, partial)? * orbit)
    }
}

/// Exact order of the automorphism group via orbit–stabilizer along a
/// chain of individualized vertices.
pub fn automorphism_group_order(g: &Graph, budget: u64) -> Result<BigUint> {
    let mut search = IsoSearch {
        g,
        nodes: 0,
        budget,
    };
    let start = refine(g, distance_profile_cells(g));
    let mut partial = BigUint::one();
    search
        .order(start, &mut partial)
        .map_err(|()| Error::Timeout {
            budget,
            partial_lower_bound: partial.to_string(),
        })
}

/// An automorphism of `g` mapping `u` to `v`, if any.
pub fn automorphism_mapping(
    g: &Graph,
    u: usize,
    v: usize,
    budget: u64,
) -> Result<Option<Vec<usize>>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let mut search = IsoSearch {
        g,
        nodes: 0,
        budget,
    };
    let start = refine(g, distance_profile_cells(g));
    let a = refine(g, individualize(&start, u));
    let b = refine(g, individualize(&start, v));
    if start.iter().position(|c| c.contains(&u)) != start.iter().position(|c| c.contains(&v)) {
        return Ok(None);
    }
    search.find(&a, &b).map_err(|()| Error::Timeout {
        budget,
        partial_lower_bound: "1".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order_of(g: &Graph) -> u64 {
        automorphism_group_order(g, DEFAULT_AUT_BUDGET)
            .unwrap()
            .try_into()
            .unwrap()
    }

    #[test]
    fn small_group_orders() {
        assert_eq!(order_of(&Graph::cycle(5)), 10);
        assert_eq!(order_of(&Graph::complete(4)), 24);
        assert_eq!(order_of(&Graph::petersen()), 120);
        assert_eq!(order_of(&Graph::path(4)), 2);
        assert_eq!(order_of(&Graph::star(4)), 24);
        assert_eq!(order_of(&Graph::empty(5)), 120);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let err = automorphism_group_order(&Graph::petersen(), 3).unwrap_err();
        assert!(matches!(err, Error::Timeout { budget: 3, .. }));
    }

    #[test]
    fn canonical_code_is_labelling_invariant() {
        let p = Graph::petersen();
        let perm = [3, 7, 1, 9, 0, 5, 2, 8, 6, 4];
        let q = p.permuted(&perm);
        assert_eq!(canonical_form(&p).code, canonical_form(&q).code);
        assert_eq!(canonical_graph6(&p), canonical_graph6(&q));
        assert!(are_isomorphic(&p, &q));
    }

    #[test]
    fn non_isomorphic_cubic_graphs_differ() {
        // K_{3,3} versus the triangular prism.
        let k33 = Graph::from_edges(6, (0..3).flat_map(|i| (3..6).map(move |j| (i, j)))).unwrap();
        let prism = Graph::from_edges(
            6,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert!(!are_isomorphic(&k33, &prism));
    }

    #[test]
    fn generators_are_automorphisms() {
        let g = Graph::petersen();
        let cf = canonical_form(&g);
        assert!(!cf.generators.is_empty());
        for gen in &cf.generators {
            assert!(g.is_automorphism(gen));
        }
        let reps = orbits(10, &cf.generators);
        assert!(
            reps.iter().all(|&r| r == 0),
            "Petersen graph is vertex-transitive"
        );
    }

    #[test]
    fn refinement_separates_path_ends_from_middle() {
        let cells = refine(&Graph::path(4), vec![(0..4).collect()]);
        assert_eq!(cells, vec![vec![0, 3], vec![1, 2]]);
    }

    #[test]
    fn mapping_search() {
        let p4 = Graph::path(4);
        assert_eq!(
            automorphism_mapping(&p4, 0, 3, 1000).unwrap(),
            Some(vec![3, 2, 1, 0])
        );
        assert_eq!(automorphism_mapping(&p4, 0, 1, 1000).unwrap(), None);
    }
}
