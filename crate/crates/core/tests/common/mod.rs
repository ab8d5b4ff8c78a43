//! Naive oracle: every BFS-labelled connected d-regular graph, then
//! deduplication by plain backtracking isomorphism tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use radial_moore::graph::bfs_layers;
use radial_moore::Graph;

struct Bfs {
    n: usize,
    d: usize,
    adj: Vec<Vec<bool>>,
    deg: Vec<usize>,
    out: Vec<Graph>,
}

impl Bfs {
    fn run(&mut self, v: usize, fresh: usize) {
        if v == self.n {
            let edges: Vec<(usize, usize)> = (0..self.n)
                .flat_map(|a| (a + 1..self.n).map(move |b| (a, b)))
                .filter(|&(a, b)| self.adj[a][b])
                .collect();
            self.out.push(Graph::from_edges(self.n, edges).unwrap());
            return;
        }
        if v >= fresh {
            return; // unreachable vertex: disconnected
        }
        let need = self.d - self.deg[v];
        let old: Vec<usize> = (v + 1..fresh)
            .filter(|&u| self.deg[u] < self.d && !self.adj[v][u])
            .collect();
        for take_fresh in 0..=need {
            if take_fresh > need || need - take_fresh > old.len() || fresh + take_fresh > self.n {
                continue;
            }
            self.choose(v, fresh, take_fresh, &old, 0, need - take_fresh);
        }
    }

    fn choose(
        &mut self,
        v: usize,
        fresh: usize,
        take_fresh: usize,
        old: &[usize],
        from: usize,
        left: usize,
    ) {
        if left == 0 {
            let new: Vec<usize> = (fresh..fresh + take_fresh).collect();
            for &u in &new {
                self.link(v, u, true);
            }
            self.run(v + 1, fresh + take_fresh);
            for &u in &new {
                self.link(v, u, false);
            }
            return;
        }
        for i in from..old.len() {
            let u = old[i];
            self.link(v, u, true);
            self.choose(v, fresh, take_fresh, old, i + 1, left - 1);
            self.link(v, u, false);
        }
    }

    fn link(&mut self, a: usize, b: usize, on: bool) {
        self.adj[a][b] = on;
        self.adj[b][a] = on;
        if on {
            self.deg[a] += 1;
            self.deg[b] += 1;
        } else {
            self.deg[a] -= 1;
            self.deg[b] -= 1;
        }
    }
}

pub fn naive_isomorphic(g: &Graph, h: &Graph) -> bool {
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let v = map.len();
        if v == g.order() {
            return true;
        }
        for w in 0..h.order() {
            if used[w] || (0..v).any(|u| g.has_edge(u, v) != h.has_edge(map[u], w)) {
                continue;
            }
            map.push(w);
            used[w] = true;
            if extend(g, h, map, used) {
                return true;
            }
            map.pop();
            used[w] = false;
        }
        false
    }
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && extend(g, h, &mut Vec::new(), &mut vec![false; h.order()])
}

pub fn naive_classes(d: usize, n: usize) -> Vec<Graph> {
    let mut bfs = Bfs {
        n,
        d,
        adj: vec![vec![false; n]; n],
        deg: vec![0; n],
        out: Vec::new(),
    };
    bfs.run(0, 1);
    let mut buckets: BTreeMap<Vec<Vec<usize>>, Vec<Graph>> = BTreeMap::new();
    for g in bfs.out {
        let mut key: Vec<Vec<usize>> = (0..n).map(|v| bfs_layers(&g, v).sizes()).collect();
        key.sort();
        let reps = buckets.entry(key).or_default();
        if !reps.iter().any(|r| naive_isomorphic(r, &g)) {
            reps.push(g);
        }
    }
    buckets.into_values().flatten().collect()
}
