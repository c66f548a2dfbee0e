//! Exact cover of an edge set by paths and cycles, with edges as bits of a u64.

use std::collections::HashMap;

use crate::graph::{Graph, Vertex, Walk};

pub(crate) const MAX_EDGES: usize = 64;

#[derive(Debug, Clone, Copy)]
pub(crate) struct SearchSpec {
    pub allow_cycles: bool,
    pub min_len: usize,
    pub max_len: usize,
    pub max_elements: Option<usize>,
    pub prefer_long: bool,
    pub memoize: bool,
}

impl SearchSpec {
    pub fn four_pc() -> SearchSpec {
        SearchSpec {
            allow_cycles: true,
            min_len: 4,
            max_len: usize::MAX,
            max_elements: None,
            prefer_long: false,
            memoize: false,
        }
    }

    pub fn paths(max_elements: usize) -> SearchSpec {
        SearchSpec {
            allow_cycles: false,
            min_len: 1,
            max_len: usize::MAX,
            max_elements: Some(max_elements),
            prefer_long: true,
            memoize: true,
        }
    }
}

struct Element {
    mask: u64,
    len: usize,
    cycle: bool,
    vertices: Vec<Vertex>,
}

pub(crate) struct Solver<'a> {
    g: &'a Graph,
    spec: SearchSpec,
    inc: Vec<Vec<(Vertex, usize)>>,
    full: u64,
    /// Failed masks, with the fewest elements already chosen when they failed.
    failed: HashMap<u64, usize>,
    chosen: Vec<Walk>,
}

impl<'a> Solver<'a> {
    /// Panics if the graph has more than [`MAX_EDGES`] edges.
    pub fn new(g: &'a Graph, spec: SearchSpec) -> Solver<'a> {
        let m = g.edge_count();
        assert!(m <= MAX_EDGES, "edge bitmask overflow");
        let mut inc = vec![Vec::new(); g.vertex_count()];
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            inc[u].push((v, i));
            inc[v].push((u, i));
        }
        let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        Solver {
            g,
            spec,
            inc,
            full,
            failed: HashMap::new(),
            chosen: Vec::new(),
        }
    }

    pub fn solve(mut self) -> Option<Vec<Walk>> {
        if self.rec(0) {
            Some(self.chosen)
        } else {
            None
        }
    }

    fn rec(&mut self, covered: u64) -> bool {
        if covered == self.full {
            return true;
        }
        if !self.components_long_enough(covered) {
            return false;
        }
        if let Some(max) = self.spec.max_elements {
            if self.chosen.len() + self.lower_bound(covered) > max {
                return false;
            }
        }
        if self.spec.memoize
            && self
                .failed
                .get(&covered)
                .is_some_and(|&c| self.chosen.len() >= c)
        {
            return false;
        }
        let anchor = (!covered & self.full).trailing_zeros() as usize;
        let mut elements = self.elements_through(anchor, covered);
        elements.sort_by(|a, b| {
            let la = if self.spec.prefer_long {
                usize::MAX - a.len
            } else {
                a.len
            };
            let lb = if self.spec.prefer_long {
                usize::MAX - b.len
            } else {
                b.len
            };
            (!a.cycle, la, &a.vertices).cmp(&(!b.cycle, lb, &b.vertices))
        });
        for el in elements {
            self.chosen.push(if el.cycle {
                Walk::cycle(el.vertices)
            } else {
                Walk::path(el.vertices)
            });
            if self.rec(covered | el.mask) {
                return true;
            }
            self.chosen.pop();
        }
        if self.spec.memoize {
            let c = self.failed.entry(covered).or_insert(usize::MAX);
            *c = (*c).min(self.chosen.len());
        }
        false
    }

    /// Uncovered components each hold at least `min_len` edges.
    fn components_long_enough(&self, covered: u64) -> bool {
        if self.spec.min_len <= 1 {
            return true;
        }
        let mut remaining = !covered & self.full;
        while remaining != 0 {
            let comp = self.component_of(remaining.trailing_zeros() as usize, remaining);
            if (comp.count_ones() as usize) < self.spec.min_len {
                return false;
            }
            remaining &= !comp;
        }
        true
    }

    /// Σ over uncovered components of max(1, odd/2).
    fn lower_bound(&self, covered: u64) -> usize {
        let mut remaining = !covered & self.full;
        let mut total = 0;
        while remaining != 0 {
            let comp = self.component_of(remaining.trailing_zeros() as usize, remaining);
            let mut deg = std::collections::HashMap::<Vertex, usize>::new();
            let mut bits = comp;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let (u, v) = self.g.edges()[i];
                *deg.entry(u).or_default() += 1;
                *deg.entry(v).or_default() += 1;
            }
            let odd = deg.values().filter(|&&d| d % 2 == 1).count();
            total += (odd / 2).max(1);
            remaining &= !comp;
        }
        total
    }

    fn component_of(&self, start_edge: usize, avail: u64) -> u64 {
        let mut comp = 1u64 << start_edge;
        let (u, v) = self.g.edges()[start_edge];
        let mut stack = vec![u, v];
        while let Some(x) = stack.pop() {
            for &(y, i) in &self.inc[x] {
                let bit = 1u64 << i;
                if avail & bit != 0 && comp & bit == 0 {
                    comp |= bit;
                    stack.push(y);
                }
            }
        }
        comp
    }

    fn elements_through(&self, anchor: usize, covered: u64) -> Vec<Element> {
        let (a, b) = self.g.edges()[anchor];
        let avail = !covered & self.full & !(1u64 << anchor);
        let mut out = Vec::new();
        let n = self.g.vertex_count();
        let mut on_path = vec![false; n];
        on_path[a] = true;
        on_path[b] = true;
        if self.spec.allow_cycles {
            let mut trail = vec![b];
            self.cycles_from(
                b,
                a,
                avail,
                1u64 << anchor,
                &mut trail,
                &mut on_path,
                &mut out,
            );
        }
        let mut right = vec![a, b];
        self.extend_right(avail, 1u64 << anchor, &mut right, &mut on_path, &mut out);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn cycles_from(
        &self,
        cur: Vertex,
        target: Vertex,
        avail: u64,
        mask: u64,
        trail: &mut Vec<Vertex>,
        on_path: &mut [bool],
        out: &mut Vec<Element>,
    ) {
        let len = mask.count_ones() as usize;
        if len >= self.spec.max_len {
            return;
        }
        for &(y, i) in &self.inc[cur] {
            let bit = 1u64 << i;
            if avail & bit == 0 {
                continue;
            }
            if y == target {
                if len + 1 >= self.spec.min_len.max(3) {
                    let mut vertices = vec![target];
                    vertices.extend_from_slice(trail);
                    out.push(Element {
                        mask: mask | bit,
                        len: len + 1,
                        cycle: true,
                        vertices,
                    });
                }
                continue;
            }
            if on_path[y] {
                continue;
            }
            on_path[y] = true;
            trail.push(y);
            self.cycles_from(y, target, avail, mask | bit, trail, on_path, out);
            trail.pop();
            on_path[y] = false;
        }
    }

    /// Grows the path to the right; at every stop also grows it to the left.
    fn extend_right(
        &self,
        avail: u64,
        mask: u64,
        path: &mut Vec<Vertex>,
        on_path: &mut [bool],
        out: &mut Vec<Element>,
    ) {
        let mut left = Vec::new();
        self.extend_left(avail, mask, path, &mut left, on_path, out);
        if mask.count_ones() as usize >= self.spec.max_len {
            return;
        }
        let cur = *path.last().unwrap();
        for &(y, i) in &self.inc[cur] {
            let bit = 1u64 << i;
            if avail & bit == 0 || on_path[y] {
                continue;
            }
            on_path[y] = true;
            path.push(y);
            self.extend_right(avail, mask | bit, path, on_path, out);
            path.pop();
            on_path[y] = false;
        }
    }

    fn extend_left(
        &self,
        avail: u64,
        mask: u64,
        right: &[Vertex],
        left: &mut Vec<Vertex>,
        on_path: &mut [bool],
        out: &mut Vec<Element>,
    ) {
        let len = mask.count_ones() as usize;
        if len >= self.spec.min_len {
            let mut vertices: Vec<Vertex> = left.iter().rev().copied().collect();
            vertices.extend_from_slice(right);
            out.push(Element {
                mask,
                len,
                cycle: false,
                vertices,
            });
        }
        if len >= self.spec.max_len {
            return;
        }
        let cur = *left.last().unwrap_or(&right[0]);
        for &(y, i) in &self.inc[cur] {
            let bit = 1u64 << i;
            if avail & bit == 0 || on_path[y] {
                continue;
            }
            on_path[y] = true;
            left.push(y);
            self.extend_left(avail, mask | bit, right, left, on_path, out);
            left.pop();
            on_path[y] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count_paths_through_first_edge(g: &Graph) -> usize {
        let spec = SearchSpec {
            min_len: 1,
            ..SearchSpec::four_pc()
        };
        let s = Solver::new(g, spec);
        s.elements_through(0, 0).iter().filter(|e| !e.cycle).count()
    }

    #[test]
    fn path_enumeration_has_no_duplicates() {
        // C4: paths containing edge 0-1 with lengths 1..3: 1 + 2 + 3
        let c4 = Graph::cycle(&[0, 1, 2, 3]);
        assert_eq!(count_paths_through_first_edge(&c4), 6);
        let p = Graph::path(&[0, 1, 2, 3, 4]);
        // paths containing edge 0-1 in a 4-edge path: 4
        assert_eq!(count_paths_through_first_edge(&p), 4);
    }

    #[test]
    fn cycle_enumeration_finds_each_cycle_once_per_direction() {
        let k23 = Graph::from_edges([(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let s = Solver::new(&k23, SearchSpec::four_pc());
        let cycles = s
            .elements_through(0, 0)
            .into_iter()
            .filter(|e| e.cycle)
            .count();
        assert_eq!(cycles, 2);
    }
}
