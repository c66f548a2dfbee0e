//! Isomorph-free generators for the exhaustive checks.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::canon::{canonical_form, canonical_graph, tree_canonical_form};
use crate::graph::{class_g_report, Color, Graph, Vertex};
use crate::hanging_square::{recognize_hanging_square, HangingSquareCertificate};
use crate::skeleton::{BuildingPath, BuildingSequence};

use super::HarnessError;

/// Largest vertex count the built-in class enumerator accepts.
pub const ENUMERATION_N_MAX: usize = 8;

/// Connected triangle-free graphs on exactly `n` vertices, for every `n` up to
/// `n_max`, one per isomorphism class, keyed by canonical form.
pub fn connected_triangle_free_levels(n_max: usize) -> Vec<BTreeMap<String, Graph>> {
    let mut levels: Vec<BTreeMap<String, Graph>> = Vec::new();
    if n_max == 0 {
        return levels;
    }
    let k1 = Graph::new(1, []).unwrap();
    levels.push(BTreeMap::from([(canonical_form(&k1), k1)]));
    for n in 2..=n_max {
        let mut next = BTreeMap::new();
        for g in levels[n - 2].values() {
            for set in independent_sets(g) {
                let new = n - 1;
                let extra: Vec<_> = set.iter().map(|&u| (u, new)).collect();
                let h = Graph::new(n, g.edges().iter().copied().chain(extra)).unwrap();
                next.entry(canonical_form(&h))
                    .or_insert_with(|| canonical_graph(&h));
            }
        }
        levels.push(next);
    }
    levels
}

/// Non-empty independent sets of `g`.
fn independent_sets(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let set: Vec<Vertex> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if set.iter().all(|&u| set.iter().all(|&v| !g.has_edge(u, v))) {
            out.push(set);
        }
    }
    out
}

/// Members of the class on at most `n_max` vertices, ordered by vertex count
/// and then canonical form.
pub fn enumerate_class_g(n_max: usize) -> Result<Vec<Graph>, HarnessError> {
    if n_max > ENUMERATION_N_MAX {
        return Err(HarnessError::TooLarge {
            n_max,
            limit: ENUMERATION_N_MAX,
        });
    }
    Ok(connected_triangle_free_levels(n_max)
        .into_iter()
        .flat_map(|level| level.into_values())
        .filter(|g| class_g_report(g).member)
        .collect())
}

/// Trees with exactly `edges` edges for every count up to `max_edges`, one
/// per isomorphism class.
pub fn tree_levels(max_edges: usize) -> Vec<BTreeMap<String, Graph>> {
    let mut levels = Vec::new();
    let k1 = Graph::new(1, []).unwrap();
    let mut current = BTreeMap::from([(String::from("()"), k1)]);
    for m in 1..=max_edges {
        let mut next = BTreeMap::new();
        for t in current.values() {
            for v in 0..t.vertex_count() {
                let grown = t.with_edges(&[(v, m)]);
                next.entry(tree_canonical_form(&grown)).or_insert(grown);
            }
        }
        levels.push(next.clone());
        current = next;
    }
    levels
}

/// Trees in the class with at most `max_edges` edges.
pub fn enumerate_class_g_trees(max_edges: usize) -> Vec<Graph> {
    tree_levels(max_edges)
        .into_iter()
        .flat_map(|l| l.into_values())
        .filter(|t| class_g_report(t).member)
        .collect()
}

/// Skeletons with at most `max_edges` edges, one per isomorphism class, each
/// with the building sequence that produced it.
pub fn enumerate_skeletons(max_edges: usize) -> Vec<(Graph, BuildingSequence)> {
    let start = BuildingSequence {
        start: vec![0, 1, 2, 3],
        steps: vec![],
    };
    let mut seen = BTreeMap::new();
    if max_edges < 3 {
        return Vec::new();
    }
    let mut frontier = vec![start.clone()];
    seen.insert(tree_canonical_form(&start.to_graph(0)), start);
    while let Some(seq) = frontier.pop() {
        let t = seq.to_graph(0);
        let colors = t.parity_colors();
        let n = t.vertex_count();
        for v in t.support() {
            let (len, fresh) = match colors[v] {
                Color::Red => (4, 4),
                Color::Black => (6, 6),
            };
            if t.edge_count() + len > max_edges {
                continue;
            }
            let mut vertices: Vec<Vertex> = (n..n + fresh).collect();
            vertices.insert(len / 2, v);
            let mut grown = seq.clone();
            grown.steps.push(BuildingPath::new(vertices));
            let key = tree_canonical_form(&grown.to_graph(0));
            if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(key) {
                e.insert(grown.clone());
                frontier.push(grown);
            }
        }
    }
    let mut out: Vec<(Graph, BuildingSequence)> =
        seen.into_values().map(|s| (s.to_graph(0), s)).collect();
    out.sort_by(|a, b| (a.0.edge_count(), a.0.edges()).cmp(&(b.0.edge_count(), b.0.edges())));
    out
}

/// Hanging-square graphs with at most `max_edges` edges, grown from the
/// enumerated skeletons by gluing bunches of up to three squares on one
/// skeleton vertex or on two skeleton vertices at distance 2. One graph per
/// isomorphism class, each with its certificate.
pub fn enumerate_hanging_square(max_edges: usize) -> Vec<(Graph, HangingSquareCertificate)> {
    let mut seen: BTreeMap<String, Graph> = BTreeMap::new();
    let mut frontier: Vec<(Graph, Graph)> = enumerate_skeletons(max_edges)
        .into_iter()
        .map(|(t, _)| (t.clone(), t))
        .collect();
    while let Some((g, t)) = frontier.pop() {
        match seen.entry(canonical_form(&g)) {
            Entry::Occupied(_) => continue,
            Entry::Vacant(slot) => {
                slot.insert(g.clone());
            }
        }
        let on = t.support();
        let mut joints: Vec<(Vertex, Option<Vertex>)> = on.iter().map(|&a| (a, None)).collect();
        for &a in &on {
            let dist = t.bfs_distances(a);
            joints.extend(
                on.iter()
                    .filter(|&&b| b > a && dist[b] == Some(2))
                    .map(|&b| (a, Some(b))),
            );
        }
        for (a, b) in joints {
            for k in 1..=3 {
                if g.edge_count() + 4 * k > max_edges {
                    break;
                }
                let mut next = g.vertex_count();
                let b = b.unwrap_or_else(|| {
                    next += 1;
                    next - 1
                });
                let mut edges = Vec::new();
                for m in next..next + 2 * k {
                    edges.push((a, m));
                    edges.push((b, m));
                }
                let grown = Graph::new(next + 2 * k, g.edges().iter().copied().chain(edges))
                    .expect("fresh middles keep the graph simple");
                frontier.push((grown, t.clone()));
            }
        }
    }
    let mut out: Vec<(Graph, HangingSquareCertificate)> = seen
        .into_values()
        .filter_map(|g| recognize_hanging_square(&g).ok().map(|c| (g, c)))
        .collect();
    out.sort_by(|a, b| (a.0.edge_count(), a.0.edges()).cmp(&(b.0.edge_count(), b.0.edges())));
    out
}
