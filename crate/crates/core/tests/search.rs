mod common;

use common::{naive_classes, naive_isomorphic};
use radial_moore::canon::{are_isomorphic, canonical_form};
use radial_moore::gd::build_gd;
use radial_moore::graph::{check_structural_props, verify_radial_moore};
use radial_moore::search::{
    apply_swap, census, enumerate_regular, hoffman_singleton, rank_by_status, GraphSource,
    DEFAULT_ENUMERATION_BUDGET,
};
use radial_moore::Graph;

fn enumerate(d: usize, n: usize) -> Vec<Graph> {
    let e = enumerate_regular(d, n, DEFAULT_ENUMERATION_BUDGET).unwrap();
    assert!(e.complete);
    e.graphs
}

#[test]
fn naive_oracle_small_counts() {
    assert_eq!(naive_classes(3, 4).len(), 1);
    assert_eq!(naive_classes(3, 6).len(), 2);
    assert_eq!(naive_classes(3, 8).len(), 5);
}

#[test]
fn cubic_order_ten_matches_naive_oracle() {
    let oracle = naive_classes(3, 10);
    assert_eq!(oracle.len(), 19);
    let found = enumerate(3, 10);
    assert_eq!(found.len(), 19);
    for g in &oracle {
        assert_eq!(found.iter().filter(|h| naive_isomorphic(g, h)).count(), 1);
    }
}

#[test]
fn enumerated_graphs_are_distinct_connected_and_regular() {
    let found = enumerate(3, 10);
    for (i, g) in found.iter().enumerate() {
        assert!(g.is_connected());
        assert_eq!(g.regular_degree(), Some(3));
        for h in &found[i + 1..] {
            assert!(!are_isomorphic(g, h));
        }
    }
    let mut codes: Vec<_> = found.iter().map(|g| canonical_form(g).code).collect();
    codes.dedup();
    assert_eq!(codes.len(), 19);
}

#[test]
fn quartic_order_eight_matches_naive_oracle() {
    assert_eq!(naive_classes(4, 8).len(), 6);
    assert_eq!(enumerate(4, 8).len(), 6);
}

#[test]
fn cubic_order_twelve() {
    assert_eq!(enumerate(3, 12).len(), 85);
}

#[test]
fn census_three_two() {
    let c = census(3, 2, GraphSource::Internal).unwrap();
    assert_eq!(c.total_regular, 19);
    assert_eq!(c.max_central, 4);
    assert!(c.radial_moore > 0);
    assert_eq!(c.radial_moore, c.ranking.len());
    for r in &c.ranking {
        assert!(r.violations.is_empty());
        let g = radial_moore::graph::graph6::decode(&r.graph6).unwrap();
        let report = verify_radial_moore(&g, 3, 2);
        assert!(report.is_radial_moore);
        assert!(check_structural_props(&g, 2).unwrap().is_empty());
        assert!(r.central_count <= 4);
        for (v, &s) in statuses(&g).iter().enumerate() {
            if report.central_vertices.contains(&v) {
                assert_eq!(s, 15);
            } else {
                assert!(s > 15 && s <= 18, "non-central status {s}");
            }
        }
    }
    let gd = canonical_form(&build_gd(3).unwrap().graph);
    let last = c.ranking.last().unwrap();
    assert_eq!(
        last.graph6,
        radial_moore::graph::graph6::encode(&gd.graph(&build_gd(3).unwrap().graph))
    );
    for pair in c.ranking.windows(2) {
        assert!(pair[0].status_vector.total <= pair[1].status_vector.total);
    }
}

#[test]
fn census_is_deterministic() {
    let a = census(3, 2, GraphSource::Internal).unwrap();
    let b = census(3, 2, GraphSource::Internal).unwrap();
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
}

fn statuses(g: &Graph) -> Vec<u64> {
    (0..g.order())
        .map(|v| radial_moore::graph::status(g, v).unwrap())
        .collect()
}

#[test]
fn ranking_is_label_invariant() {
    let g = build_gd(3).unwrap().graph;
    let perm: Vec<usize> = (0..10).map(|v| (v * 3) % 10).collect();
    let a = rank_by_status(std::slice::from_ref(&g)).unwrap();
    let b = rank_by_status(&[g.permuted(&perm)]).unwrap();
    assert_eq!(a, b);
}

#[test]
fn hoffman_singleton_swap_preserves_degrees() {
    let g = hoffman_singleton();
    let edges: Vec<_> = g.edges().collect();
    let (e, f) = (
        edges[0],
        edges
            .iter()
            .copied()
            .find(|&(x, y)| {
                ![edges[0].0, edges[0].1].contains(&x) && ![edges[0].0, edges[0].1].contains(&y)
            })
            .unwrap(),
    );
    let h = apply_swap(&g, [e, f], [(e.0, f.0), (e.1, f.1)]).unwrap();
    if let Some(h) = h {
        assert_eq!(h.regular_degree(), Some(7));
        assert_eq!(h.order(), 50);
    }
}
