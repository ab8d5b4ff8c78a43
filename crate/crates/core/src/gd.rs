//! The `G_d` family: a star `K_{1,d}` whose leaves each carry a copy of
//! `K_{d-1}`, the copies joined pairwise by a perfect matching.
//!
//! Vertex numbering: the centre is 0, spoke `i` is `i` (1-based), and the
//! clique vertices `(i, j)`, `i != j`, follow in lexicographic order.

use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::canon::automorphism_group_order;
use crate::error::{Error, Result};
use crate::graph::{status, status_vector, verify_radial_moore, Graph, StatusVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GdVertex {
    Center,
    Spoke(usize),
    Clique(usize, usize),
}

impl fmt::Display for GdVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GdVertex::Center => f.write_str("0"),
            GdVertex::Spoke(i) => write!(f, "{i}"),
            GdVertex::Clique(i, j) => write!(f, "({i},{j})"),
        }
    }
}

/// A constructed `G_d` with its vertex labels.
#[derive(Debug, Clone)]
pub struct GdGraph {
    pub d: usize,
    pub graph: Graph,
    pub labels: Vec<GdVertex>,
}

impl GdGraph {
    pub fn index_of(&self, label: GdVertex) -> Option<usize> {
        let d = self.d;
        match label {
            GdVertex::Center => Some(0),
            GdVertex::Spoke(i) if (1..=d).contains(&i) => Some(i),
            GdVertex::Clique(i, j) if (1..=d).contains(&i) && (1..=d).contains(&j) && i != j => {
                let within = if j < i { j - 1 } else { j - 2 };
                Some(1 + d + (i - 1) * (d - 1) + within)
            }
            _ => None,
        }
    }
}

fn require_degree(d: usize) -> Result<()> {
    if d < 3 {
        Err(Error::UnsupportedDegree {
            d: d as u64,
            reason: "G_d is defined for d >= 3",
        })
    } else {
        Ok(())
    }
}

pub fn build_gd(d: usize) -> Result<GdGraph> {
    require_degree(d)?;
    let mut labels = vec![GdVertex::Center];
    labels.extend((1..=d).map(GdVertex::Spoke));
    for i in 1..=d {
        labels.extend((1..=d).filter(|&j| j != i).map(|j| GdVertex::Clique(i, j)));
    }
    let skeleton = GdGraph {
        d,
        graph: Graph::empty(labels.len()),
        labels,
    };
    let at = |label| skeleton.index_of(label).expect("label in range");

    let mut edges = Vec::new();
    for i in 1..=d {
        edges.push((0, i));
        for j in (1..=d).filter(|&j| j != i) {
            edges.push((i, at(GdVertex::Clique(i, j))));
            // Matching between copies: (i, j) ~ (j, i).
            if i < j {
                edges.push((at(GdVertex::Clique(i, j)), at(GdVertex::Clique(j, i))));
            }
            for j2 in (j + 1..=d).filter(|&j2| j2 != i) {
                edges.push((at(GdVertex::Clique(i, j)), at(GdVertex::Clique(i, j2))));
            }
        }
    }
    let graph = Graph::from_edges(skeleton.labels.len(), edges)?;
    Ok(GdGraph { graph, ..skeleton })
}

/// Status of the centre, `2d^2 - d`.
pub fn gd_central_status(d: u64) -> u64 {
    2 * d * d - d
}

/// Status of every other vertex, `3d^2 - 4d + 2`.
pub fn gd_noncentral_status(d: u64) -> u64 {
    3 * d * d - 4 * d + 2
}

/// `3d^4 - 4d^3 + 4d^2 - d`.
pub fn gd_total_status(d: u64) -> u64 {
    3 * d.pow(4) - 4 * d.pow(3) + 4 * d * d - d
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GdReport {
    pub d: usize,
    pub order: usize,
    pub edges: usize,
    pub regular: bool,
    pub radius: usize,
    pub diameter: usize,
    pub central_vertices: Vec<usize>,
    pub status_vector: StatusVector,
}

/// Builds `G_d` and checks every structural claim about it. Any mismatch
/// is a construction bug and surfaces as a consistency error.
pub fn verify_gd(d: usize) -> Result<GdReport> {
    let gd = build_gd(d)?;
    let g = &gd.graph;
    let report = verify_radial_moore(g, d, 2);
    let fail = |what: String| Err(Error::Consistency(format!("G_{d}: {what}")));

    if g.order() != d * d + 1 {
        return fail(format!("order {} != {}", g.order(), d * d + 1));
    }
    if !report.regular_ok {
        return fail("not regular".into());
    }
    if !report.is_radial_moore {
        return fail(report.failure_reason().unwrap_or_default());
    }
    if report.central_vertices != [0] {
        return fail(format!(
            "central vertices {:?} != [0]",
            report.central_vertices
        ));
    }
    let vector = status_vector(g)?;
    let du = d as u64;
    let expected = vec![
        (gd_noncentral_status(du), d * d),
        (gd_central_status(du), 1),
    ];
    if vector.entries != expected {
        return fail(format!("status vector {vector} != {expected:?}"));
    }
    if vector.total != gd_total_status(du) {
        return fail(format!(
            "total status {} != {}",
            vector.total,
            gd_total_status(du)
        ));
    }
    Ok(GdReport {
        d,
        order: g.order(),
        edges: g.edge_count(),
        regular: true,
        radius: 2,
        diameter: 3,
        central_vertices: report.central_vertices,
        status_vector: vector,
    })
}

/// Spoke `i` and all of its clique vertices share one status.
pub fn spoke_and_clique_statuses(gd: &GdGraph, i: usize) -> Result<Vec<u64>> {
    let mut out = vec![status(&gd.graph, i)?];
    for j in (1..=gd.d).filter(|&j| j != i) {
        let v = gd.index_of(GdVertex::Clique(i, j)).expect("label in range");
        out.push(status(&gd.graph, v)?);
    }
    Ok(out)
}

/// Vertex permutation induced by the transposition `(i j)` of the index
/// set: spokes `i` and `j` swap and `(a, b)` goes to `(τ(a), τ(b))`.
pub fn transposition_map(d: usize, i: usize, j: usize) -> Result<Vec<usize>> {
    require_degree(d)?;
    if i == j || !(1..=d).contains(&i) || !(1..=d).contains(&j) {
        return Err(Error::OutOfRange(format!(
            "transposition ({i} {j}) needs distinct indices in [1, {d}]"
        )));
    }
    let gd = build_gd(d)?;
    let tau = |a: usize| {
        if a == i {
            j
        } else if a == j {
            i
        } else {
            a
        }
    };
    let perm = gd
        .labels
        .iter()
        .map(|&label| {
            let image = match label {
                GdVertex::Center => GdVertex::Center,
                GdVertex::Spoke(a) => GdVertex::Spoke(tau(a)),
                GdVertex::Clique(a, b) => GdVertex::Clique(tau(a), tau(b)),
            };
            gd.index_of(image).expect("image label in range")
        })
        .collect();
    Ok(perm)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AutomorphismReport {
    pub d: usize,
    #[serde(with = "crate::serde_decimal")]
    pub group_order: BigUint,
    pub generators_verified: usize,
}

/// Checks every transposition map and computes `|Aut(G_d)|` by search.
pub fn gd_automorphisms(d: usize, budget: u64) -> Result<AutomorphismReport> {
    let gd = build_gd(d)?;
    let mut verified = 0;
    for i in 1..=d {
        for j in i + 1..=d {
            let perm = transposition_map(d, i, j)?;
            if !gd.graph.is_automorphism(&perm) {
                return Err(Error::Consistency(format!(
                    "transposition ({i} {j}) is not an automorphism"
                )));
            }
            verified += 1;
        }
    }
    Ok(AutomorphismReport {
        d,
        group_order: automorphism_group_order(&gd.graph, budget)?,
        generators_verified: verified,
    })
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::canon::DEFAULT_AUT_BUDGET;

    #[test]
    fn sizes() {
        let g3 = build_gd(3).unwrap();
        assert_eq!((g3.graph.order(), g3.graph.edge_count()), (10, 15));
        assert_eq!(g3.graph.regular_degree(), Some(3));
        let g4 = build_gd(4).unwrap();
        assert_eq!((g4.graph.order(), g4.graph.edge_count()), (17, 34));
        assert_eq!(build_gd(5).unwrap().graph.order(), 26);
        assert!(build_gd(2).is_err());
    }

    #[test]
    fn labels_round_trip_through_indices() {
        let gd = build_gd(6).unwrap();
        for (v, &label) in gd.labels.iter().enumerate() {
            assert_eq!(gd.index_of(label), Some(v));
        }
        assert_eq!(gd.index_of(GdVertex::Clique(2, 2)), None);
        assert_eq!(gd.index_of(GdVertex::Spoke(7)), None);
    }

    #[test]
    fn edges_follow_the_construction() {
        let gd = build_gd(4).unwrap();
        let at = |l| gd.index_of(l).unwrap();
        let g = &gd.graph;
        assert!(g.has_edge(0, at(GdVertex::Spoke(2))));
        assert!(g.has_edge(at(GdVertex::Spoke(2)), at(GdVertex::Clique(2, 4))));
        assert!(g.has_edge(at(GdVertex::Clique(1, 3)), at(GdVertex::Clique(3, 1))));
        assert!(g.has_edge(at(GdVertex::Clique(1, 3)), at(GdVertex::Clique(1, 4))));
        assert!(!g.has_edge(at(GdVertex::Clique(1, 3)), at(GdVertex::Clique(3, 2))));
        assert!(!g.has_edge(0, at(GdVertex::Clique(1, 2))));
    }

    #[test]
    fn verified_status_vectors() {
        let r3 = verify_gd(3).unwrap();
        assert_eq!(r3.status_vector.entries, vec![(17, 9), (15, 1)]);
        assert_eq!(r3.status_vector.total, 168);
        let r4 = verify_gd(4).unwrap();
        assert_eq!(r4.status_vector.entries, vec![(34, 16), (28, 1)]);
        assert_eq!(r4.status_vector.total, 572);
        assert_eq!(verify_gd(5).unwrap().status_vector.entries[0], (57, 25));
        assert_eq!(gd_total_status(5), 1470);
        assert_eq!(verify_gd(5).unwrap().status_vector.total, 1470);
    }

    #[test]
    fn spoke_shares_status_with_its_clique() {
        for d in 3..=10 {
            let gd = build_gd(d).unwrap();
            for i in 1..=d {
                let s = spoke_and_clique_statuses(&gd, i).unwrap();
                assert!(s.iter().all(|&x| x == s[0]), "d={d} i={i}");
            }
        }
    }

    #[test]
    fn transpositions_are_involutive_automorphisms() {
        let g3 = build_gd(3).unwrap();
        let t = transposition_map(3, 1, 2).unwrap();
        assert!(g3.graph.is_automorphism(&t));
        let twice: Vec<usize> = (0..t.len()).map(|v| t[t[v]]).collect();
        assert_eq!(twice, (0..t.len()).collect::<Vec<_>>());
        assert!(transposition_map(3, 2, 2).is_err());
    }

    #[test]
    fn transpositions_generate_s3() {
        let a = transposition_map(3, 1, 2).unwrap();
        let b = transposition_map(3, 2, 3).unwrap();
        let id: Vec<usize> = (0..10).collect();
        let compose =
            |p: &[usize], q: &[usize]| -> Vec<usize> { (0..p.len()).map(|v| p[q[v]]).collect() };
        let mut group: HashSet<Vec<usize>> = HashSet::from([id.clone()]);
        let mut frontier = vec![id];
        while let Some(p) = frontier.pop() {
            for gen in [&a, &b] {
                let next = compose(gen, &p);
                if group.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        assert_eq!(group.len(), 6);
    }

    #[test]
    fn automorphism_orders() {
        let r = gd_automorphisms(3, DEFAULT_AUT_BUDGET).unwrap();
        assert_eq!(r.group_order, BigUint::from(6u32));
        assert_eq!(r.generators_verified, 3);
        let r = gd_automorphisms(4, DEFAULT_AUT_BUDGET).unwrap();
        assert_eq!(r.group_order, BigUint::from(24u32));
    }
}
