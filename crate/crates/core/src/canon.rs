//! Canonical forms for isomorphism rejection on small graphs.

use crate::graph::{Graph, Vertex};
use crate::io::emit_graph6;

/// Colour refinement to a stable, isomorphism-invariant ordered partition.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(s).unwrap())
            .collect();
        let classes = |c: &[usize]| {
            let mut d = c.to_vec();
            d.sort_unstable();
            d.dedup();
            d.len()
        };
        if classes(&next) == classes(&color) {
            return next;
        }
        color = next;
    }
}

struct Labeler<'a> {
    g: &'a Graph,
    /// Cell required at each position.
    slots: Vec<usize>,
    /// Cell of each vertex.
    cell: Vec<usize>,
    best: Option<(Vec<bool>, Vec<Vertex>)>,
    order: Vec<Vertex>,
    used: Vec<bool>,
}

impl Labeler<'_> {
    /// Places vertices position by position, keeping the lexicographically
    /// smallest column-ordered upper triangle.
    fn search(&mut self, bits: &mut Vec<bool>) {
        let j = self.order.len();
        if j == self.g.vertex_count() {
            if self.best.as_ref().is_none_or(|(b, _)| bits[..] < b[..]) {
                self.best = Some((bits.clone(), self.order.clone()));
            }
            return;
        }
        for v in 0..self.g.vertex_count() {
            if self.used[v] || self.cell[v] != self.slots[j] {
                continue;
            }
            let start = bits.len();
            for &u in &self.order {
                bits.push(self.g.has_edge(u, v));
            }
            let worse = self
                .best
                .as_ref()
                .is_some_and(|(b, _)| bits[..] > b[..bits.len()]);
            if !worse {
                self.used[v] = true;
                self.order.push(v);
                self.search(bits);
                self.order.pop();
                self.used[v] = false;
            }
            bits.truncate(start);
        }
    }
}

/// graph6 string of a canonical relabeling; equal strings iff isomorphic.
pub fn canonical_form(g: &Graph) -> String {
    emit_graph6(&canonical_graph(g))
}

pub fn canonical_graph(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let cell = refine(g);
    let mut slots = cell.clone();
    slots.sort_unstable();
    let mut lab = Labeler {
        g,
        slots,
        cell,
        best: None,
        order: Vec::new(),
        used: vec![false; n],
    };
    lab.search(&mut Vec::new());
    let order = lab.best.map(|(_, o)| o).unwrap_or_default();
    let mut to = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        to[v] = pos;
    }
    g.relabel(&to)
}

/// AHU encoding of a tree rooted at its center(s); isomorphism-invariant.
pub fn tree_canonical_form(t: &Graph) -> String {
    let support = t.support();
    if support.is_empty() {
        return String::new();
    }
    let mut deg: Vec<usize> = (0..t.vertex_count()).map(|v| t.degree(v)).collect();
    let mut layer: Vec<Vertex> = support.iter().copied().filter(|&v| deg[v] <= 1).collect();
    let mut removed = vec![false; t.vertex_count()];
    let mut remaining = support.len();
    while remaining > 2 {
        remaining -= layer.len();
        for &v in &layer {
            removed[v] = true;
        }
        let mut next = Vec::new();
        for &v in &layer {
            for &w in t.neighbors(v) {
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| encode(t, c, usize::MAX))
        .min()
        .unwrap()
}

fn encode(t: &Graph, v: Vertex, parent: Vertex) -> String {
    let mut kids: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode(t, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_graphs_share_a_form() {
        let g = Graph::from_edges([(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)]).unwrap();
        let h = g.relabel(&[4, 2, 0, 1, 3]);
        assert_eq!(canonical_form(&g), canonical_form(&h));
        let p = Graph::path(&[0, 1, 2, 3, 4]);
        assert_ne!(canonical_form(&g), canonical_form(&p));
    }

    #[test]
    fn tree_forms() {
        let a = Graph::from_edges([(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let b = Graph::from_edges([(4, 3), (3, 2), (3, 0), (0, 1)]).unwrap();
        assert_eq!(tree_canonical_form(&a), tree_canonical_form(&b));
        assert_ne!(
            tree_canonical_form(&a),
            tree_canonical_form(&Graph::path(&[0, 1, 2, 3, 4]))
        );
    }
}
