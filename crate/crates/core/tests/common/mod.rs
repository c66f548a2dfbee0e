//! Brute-force reference implementations shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use fourpc_core::graph::{Edge, Graph, Vertex, Walk};
use proptest::prelude::*;

/// Simple graphs on `n` vertices from arbitrary vertex pairs.
pub fn graph_on(n: usize, pairs: &[(usize, usize)]) -> Graph {
    let edges: BTreeSet<Edge> = pairs
        .iter()
        .filter(|(u, v)| u != v)
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    Graph::new(n, edges).unwrap()
}

pub fn arb_graph(max_n: usize, max_edges: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_edges).prop_map(move |p| graph_on(n, &p))
    })
}

/// All-pairs distances by Floyd–Warshall.
pub fn floyd(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.vertex_count();
    let mut d = vec![vec![None; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = Some(0);
    }
    for &(u, v) in g.edges() {
        d[u][v] = Some(1);
        d[v][u] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

pub fn brute_triangle_free(g: &Graph) -> bool {
    let n = g.vertex_count();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    return false;
                }
            }
        }
    }
    true
}

/// Minimum distance between distinct odd-degree vertices, `None` for infinity.
pub fn brute_odd_distance(g: &Graph) -> Option<usize> {
    let d = floyd(g);
    let odd: Vec<Vertex> = (0..g.vertex_count())
        .filter(|&v| g.degree(v) % 2 == 1)
        .collect();
    let mut best = None;
    for &a in &odd {
        for &b in &odd {
            if a < b {
                if let Some(x) = d[a][b] {
                    best = Some(best.map_or(x, |y: usize| y.min(x)));
                }
            }
        }
    }
    best
}

pub fn brute_connected(g: &Graph) -> bool {
    let d = floyd(g);
    d.first().is_none_or(|row| row.iter().all(Option::is_some))
}

/// Whether `edges` form a single simple path.
pub fn is_simple_path(edges: &[Edge]) -> bool {
    if edges.is_empty() {
        return false;
    }
    let vertices: BTreeSet<Vertex> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    if vertices.len() != edges.len() + 1 {
        return false;
    }
    let deg = |x: Vertex| edges.iter().filter(|&&(u, v)| u == x || v == x).count();
    if vertices.iter().any(|&x| deg(x) > 2) {
        return false;
    }
    let g = Graph::new(vertices.iter().max().unwrap() + 1, edges.iter().copied()).unwrap();
    g.is_connected_ignoring_isolated()
}

/// Fewest paths partitioning the edges, by trying every labelling of the
/// edges with `k` colors for increasing `k`.
pub fn brute_min_paths(g: &Graph) -> usize {
    let m = g.edge_count();
    if m == 0 {
        return 0;
    }
    for k in 1..=m {
        let mut labels = vec![0usize; m];
        loop {
            let ok = (0..k).all(|c| {
                let class: Vec<Edge> = (0..m)
                    .filter(|&i| labels[i] == c)
                    .map(|i| g.edges()[i])
                    .collect();
                is_simple_path(&class)
            });
            if ok {
                return k;
            }
            let mut i = 0;
            while i < m && labels[i] == k - 1 {
                labels[i] = 0;
                i += 1;
            }
            if i == m {
                break;
            }
            labels[i] += 1;
        }
    }
    unreachable!()
}

/// Brute-force 4-pc feasibility: every way to label edges with element
/// indices, each class a path or cycle with at least four edges.
pub fn brute_four_pc(g: &Graph) -> bool {
    let m = g.edge_count();
    let is_cycle = |edges: &[Edge]| {
        let vertices: BTreeSet<Vertex> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        let deg = |x: Vertex| edges.iter().filter(|&&(u, v)| u == x || v == x).count();
        vertices.len() == edges.len()
            && vertices.iter().all(|&x| deg(x) == 2)
            && Graph::new(vertices.iter().max().unwrap() + 1, edges.iter().copied())
                .unwrap()
                .is_connected_ignoring_isolated()
    };
    for k in 1..=m / 4 {
        let mut labels = vec![0usize; m];
        loop {
            let ok = (0..k).all(|c| {
                let class: Vec<Edge> = (0..m)
                    .filter(|&i| labels[i] == c)
                    .map(|i| g.edges()[i])
                    .collect();
                class.len() >= 4 && (is_simple_path(&class) || is_cycle(&class))
            });
            if ok {
                return true;
            }
            let mut i = 0;
            while i < m && labels[i] == k - 1 {
                labels[i] = 0;
                i += 1;
            }
            if i == m {
                break;
            }
            labels[i] += 1;
        }
    }
    false
}

pub fn walk_edges(ws: &[Walk]) -> usize {
    ws.iter().map(Walk::len).sum()
}
