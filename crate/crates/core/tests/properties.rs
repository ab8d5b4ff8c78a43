use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigUint;
use proptest::prelude::*;

use radial_moore::bounds::{
    attach_ceiling_formula, gamma2_lower, min_attach_count, moore_bound, moore_status,
    vertex_status_upper,
};
use radial_moore::canon::{automorphism_group_order, canonical_form, DEFAULT_AUT_BUDGET};
use radial_moore::gd::{
    build_gd, gd_noncentral_status, spoke_and_clique_statuses, transposition_map, verify_gd,
};
use radial_moore::graph::{bfs_layers, graph6, status, status_vector, verify_radial_moore};
use radial_moore::recurrence::{
    central_upper_bound, closed_form_d7, levels, noncentral_lower_bound, step, RecurrenceState,
};
use radial_moore::roots::cubic_roots;
use radial_moore::search::{apply_swap, census, GraphSource};
use radial_moore::Graph;

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[i] {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn random_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(prop::bool::weighted(0.3), n * (n - 1) / 2)
            .prop_map(move |b| graph_from_bits(n, &b))
    })
}

/// Random graphs made connected by a Hamiltonian path.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    random_graph(max_n).prop_map(|g| {
        let n = g.order();
        let mut edges: Vec<(usize, usize)> = g.edges().collect();
        edges.extend((1..n).map(|v| (v - 1, v)));
        Graph::from_edges(n, edges).unwrap()
    })
}

fn all_pairs_distance_sum(g: &Graph) -> u64 {
    let n = g.order();
    let inf = u64::MAX / 4;
    let mut dist = vec![vec![inf; n]; n];
    for (v, row) in dist.iter_mut().enumerate() {
        row[v] = 0;
        for u in g.neighbors(v) {
            row[u] = 1;
        }
    }
    for m in 0..n {
        for a in 0..n {
            for b in 0..n {
                dist[a][b] = dist[a][b].min(dist[a][m] + dist[m][b]);
            }
        }
    }
    dist.iter().flatten().sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trip(g in random_graph(60)) {
        let s = graph6::encode(&g);
        prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(graph6::decode(&s).unwrap(), g);
    }

    #[test]
    fn layers_partition_vertices_and_sum_to_status(g in connected_graph(30)) {
        for v in 0..g.order() {
            let layers = bfs_layers(&g, v);
            prop_assert_eq!(layers.sizes().iter().sum::<usize>(), g.order());
            let weighted: u64 = layers.sizes().iter().enumerate().map(|(i, &s)| (i * s) as u64).sum();
            prop_assert_eq!(status(&g, v).unwrap(), weighted);
        }
    }

    #[test]
    fn total_status_is_twice_wiener_index(g in connected_graph(25)) {
        let sv = status_vector(&g).unwrap();
        let direct = all_pairs_distance_sum(&g);
        prop_assert_eq!(sv.total, direct);
        prop_assert_eq!(sv.total % 2, 0);
        prop_assert_eq!(sv.order(), g.order());
    }

    #[test]
    fn canonical_form_ignores_labels(g in random_graph(14), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed | 1;
        for i in (1..n).rev() {
            x ^= x << 13; x ^= x >> 7; x ^= x << 17;
            perm.swap(i, (x % (i as u64 + 1)) as usize);
        }
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_form(&g).code, canonical_form(&h).code);
    }

    #[test]
    fn edge_swap_preserves_degree_sequence(g in random_graph(16), picks in any::<(usize, usize, bool)>()) {
        let edges: Vec<_> = g.edges().collect();
        prop_assume!(edges.len() >= 2);
        let (u, v) = edges[picks.0 % edges.len()];
        let (x, y) = edges[picks.1 % edges.len()];
        let added = if picks.2 { [(u, x), (v, y)] } else { [(u, y), (v, x)] };
        if let Some(h) = apply_swap(&g, [(u, v), (x, y)], added).unwrap() {
            prop_assert_eq!(h.degree_sequence(), g.degree_sequence());
            prop_assert_eq!(h.edge_count(), g.edge_count());
            let back = apply_swap(&h, added, [(u, v), (x, y)]).unwrap().unwrap();
            prop_assert_eq!(back, g);
        }
    }
}

#[test]
fn moore_values_do_not_overflow() {
    for d in [3u64, 10, 1000] {
        let m = moore_bound(d, 64).unwrap();
        assert!(m > BigUint::from(u64::MAX));
        assert!(moore_status(d, 64).unwrap() > m);
    }
}

#[test]
fn moore_status_diameter_two() {
    for d in 3..=200u64 {
        assert_eq!(moore_status(d, 2).unwrap(), BigUint::from(2 * d * d - d));
    }
}

#[test]
fn attach_count_matches_root_ceiling() {
    for d in (3..=500u64).filter(|&d| d != 4) {
        let m = min_attach_count(d).unwrap();
        assert_eq!(m, attach_ceiling_formula(d), "d = {d}");
        let root = (1.0 + (4.0 * d as f64 - 3.0).sqrt()) / 2.0;
        assert_eq!(m as f64, root.ceil(), "d = {d}");
    }
    assert_eq!(
        min_attach_count(4)
            .unwrap()
            .abs_diff(attach_ceiling_formula(4)),
        1
    );
}

#[test]
fn central_neighbors_see_more_second_layer() {
    for d in 3..=200 {
        assert!(gamma2_lower(d, true).unwrap() > gamma2_lower(d, false).unwrap());
    }
}

#[test]
fn recurrence_level_sums() {
    for d in 4..=30u64 {
        let ls = levels(d, 15).unwrap();
        for (j, s) in ls.iter().enumerate() {
            assert_eq!(
                s.total(),
                BigUint::from(d) * BigUint::from(d - 1).pow(j as u32),
                "d={d} j={}",
                j + 1
            );
        }
    }
}

#[test]
fn recurrence_eigenvector() {
    for d in 4..=30 {
        assert_eq!(
            step(d, &RecurrenceState::new(1, 0, 0, 0)),
            RecurrenceState::new(d - 1, 0, 0, 0)
        );
    }
}

#[test]
fn central_and_noncentral_bounds_fill_the_moore_tree() {
    for d in 4..=30 {
        for k in 2..=15 {
            assert_eq!(
                central_upper_bound(d, k).unwrap() + noncentral_lower_bound(d, k).unwrap(),
                moore_bound(d, k).unwrap()
            );
        }
    }
}

#[test]
fn closed_forms_track_the_recurrence() {
    for k in 1..=20 {
        let c = closed_form_d7(k).unwrap();
        assert!(c.imaginary_residue < 1e-6);
        let central: BigUint = levels(7, k).unwrap().iter().map(|s| s.central()).sum();
        let noncentral: BigUint = levels(7, k).unwrap().iter().map(|s| s.noncentral()).sum();
        assert_eq!(c.central_bound, central, "k = {k}");
        assert_eq!(c.noncentral_bound, noncentral, "k = {k}");
    }
}

#[test]
fn vieta_identities() {
    for d in 4..=200u64 {
        let roots = cubic_roots(d).unwrap().all();
        let sum: num_complex::Complex64 = roots.iter().sum();
        let product: num_complex::Complex64 = roots.iter().product();
        let scale = d as f64;
        assert!(
            (sum.re - 1.0).abs() < 1e-8 && sum.im.abs() < 1e-8,
            "d = {d}"
        );
        assert!(
            ((product.re - (scale - 1.0)) / (scale - 1.0)).abs() < 1e-8,
            "d = {d}"
        );
        assert!(product.im.abs() / scale < 1e-8, "d = {d}");
    }
}

#[test]
fn gd_family_properties() {
    for d in 3..=12 {
        verify_gd(d).unwrap();
    }
    for d in 3..=10 {
        let gd = build_gd(d).unwrap();
        for i in 1..=d {
            let s = spoke_and_clique_statuses(&gd, i).unwrap();
            assert!(s.iter().all(|&x| x == s[0]), "d={d} i={i}: {s:?}");
        }
    }
    for d in 3..=200u64 {
        assert!(gd_noncentral_status(d) < vertex_status_upper(d).unwrap());
    }
}

/// Closure of a set of permutations under composition.
fn generated_group_size(generators: &[Vec<usize>]) -> usize {
    let identity: Vec<usize> = (0..generators[0].len()).collect();
    let mut seen = BTreeSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(p) = queue.pop_front() {
        for g in generators {
            let q: Vec<usize> = p.iter().map(|&x| g[x]).collect();
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen.len()
}

#[test]
fn transpositions_generate_symmetric_group() {
    let factorial = |d: usize| (1..=d).product::<usize>();
    for d in 3..=5 {
        let gens: Vec<Vec<usize>> = (1..d)
            .map(|i| transposition_map(d, i, i + 1).unwrap())
            .collect();
        assert!(generated_group_size(&gens) >= factorial(d));
        let order =
            automorphism_group_order(&build_gd(d).unwrap().graph, DEFAULT_AUT_BUDGET).unwrap();
        assert_eq!(order, BigUint::from(factorial(d)));
    }
}

#[test]
fn census_status_bounds() {
    let c = census(3, 2, GraphSource::Internal).unwrap();
    for r in &c.ranking {
        let g = graph6::decode(&r.graph6).unwrap();
        let report = verify_radial_moore(&g, 3, 2);
        for v in 0..g.order() {
            assert!(status(&g, v).unwrap() <= 18);
        }
        if let [center] = report.central_vertices[..] {
            for u in g.neighbors(center) {
                assert!(status(&g, u).unwrap() <= 17);
            }
        }
    }
}
