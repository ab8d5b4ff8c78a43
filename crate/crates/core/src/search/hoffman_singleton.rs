use crate::graph::Graph;

/// The Hoffman–Singleton graph from five pentagons `P_h` and five
/// pentagrams `Q_i`. `P_h(j)` is vertex `5h + j`, `Q_i(j)` is `25 + 5i + j`,
/// and `P_h(j)` is joined to `Q_i(h·i + j mod 5)`.
pub fn hoffman_singleton() -> Graph {
    let p = |h: usize, j: usize| 5 * h + j % 5;
    let q = |i: usize, j: usize| 25 + 5 * i + j % 5;
    let mut edges = Vec::with_capacity(175);
    for h in 0..5 {
        for j in 0..5 {
            edges.push((p(h, j), p(h, j + 1)));
            edges.push((q(h, j), q(h, j + 2)));
            for i in 0..5 {
                edges.push((p(h, j), q(i, h * i + j)));
            }
        }
    }
    Graph::from_edges(50, edges).expect("construction uses valid vertices")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{radius_diameter, status, verify_radial_moore};

    #[test]
    fn moore_graph_of_degree_seven() {
        let g = hoffman_singleton();
        assert_eq!(g.order(), 50);
        assert_eq!(g.edge_count(), 175);
        assert_eq!(g.regular_degree(), Some(7));
        assert_eq!(g.girth(), Some(5));
        assert_eq!(radius_diameter(&g).unwrap(), (2, 2));
        assert!((0..50).all(|v| status(&g, v).unwrap() == 91));
        assert!(!verify_radial_moore(&g, 7, 2).is_radial_moore);
    }
}
