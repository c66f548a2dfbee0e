//! Constructive decomposition of trees: every tree in the class either splits
//! into paths of length at least four or is a skeleton.
//!
//! The recursion mirrors the minimal-counterexample proof: a far leaf is
//! trimmed and its edge glued back on; a removable pendant path is peeled and
//! reattached; otherwise the tree is cut along a 3-path from a leaf and the
//! pieces are combined.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::graph::{
    brrb_paths_unchecked, class_g_report, class_g_report_on_support, Decomposition, Edge, Graph,
    Vertex, Walk,
};
use crate::skeleton::{pendant_legs, recognize_tree, reroot_from, BuildingSequence};

use super::merge::attach_path;
use super::DecomposeError;

/// What [`decompose_tree`] returns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TreeOutcome {
    Decomposition(Decomposition),
    Skeleton(BuildingSequence),
}

pub fn decompose_tree(t: &Graph) -> Result<TreeOutcome, DecomposeError> {
    if !t.is_tree() || !t.is_connected() {
        return Err(DecomposeError::NotATree);
    }
    if !class_g_report(t).member {
        return Err(DecomposeError::NotInClassG);
    }
    TreeDecomposer::default().outcome(t)
}

#[derive(Debug, Clone)]
pub(crate) enum TreeResult {
    Paths(Vec<Walk>),
    Skeleton(BuildingSequence),
}

#[derive(Default)]
pub(crate) struct TreeDecomposer {
    memo: HashMap<Vec<Edge>, TreeResult>,
}

impl TreeDecomposer {
    pub fn outcome(&mut self, t: &Graph) -> Result<TreeOutcome, DecomposeError> {
        Ok(match self.solve(t)? {
            TreeResult::Paths(p) => TreeOutcome::Decomposition(Decomposition::new(p, 4)),
            TreeResult::Skeleton(s) => TreeOutcome::Skeleton(s),
        })
    }

    /// `t` is a tree (isolated vertices allowed) in the class.
    pub fn solve(&mut self, t: &Graph) -> Result<TreeResult, DecomposeError> {
        if let Some(r) = self.memo.get(t.edges()) {
            return Ok(r.clone());
        }
        let r = self.solve_uncached(t)?;
        self.memo.insert(t.edges().to_vec(), r.clone());
        Ok(r)
    }

    fn solve_uncached(&mut self, t: &Graph) -> Result<TreeResult, DecomposeError> {
        if let Some(seq) = recognize_tree(t) {
            return Ok(TreeResult::Skeleton(seq));
        }
        let support = t.support();
        if support.iter().all(|&v| t.degree(v) <= 2) {
            let leaves = t.leaves();
            return match t.tree_path(leaves[0], leaves[1]) {
                Some(p) if p.len() >= 5 => Ok(TreeResult::Paths(vec![Walk::path(p)])),
                _ => Err(DecomposeError::NotInClassG),
            };
        }
        if let Some(r) = self.trim_far_leaf(t)? {
            return Ok(TreeResult::Paths(r));
        }
        if let Some(r) = self.peel_pendant_path(t)? {
            return Ok(TreeResult::Paths(r));
        }
        self.split_at_three_path(t).map(TreeResult::Paths)
    }

    /// A leaf at distance at least four from every other odd vertex.
    fn trim_far_leaf(&mut self, t: &Graph) -> Result<Option<Vec<Walk>>, DecomposeError> {
        let odd = t.odd_vertices();
        for v in t.leaves() {
            let dist = t.bfs_distances(v);
            if !odd
                .iter()
                .all(|&w| w == v || dist[w].is_none_or(|d| d >= 4))
            {
                continue;
            }
            let u = t.neighbors(v)[0];
            let rest = t.without_edges(&[(u.min(v), u.max(v))]);
            if !class_g_report_on_support(&rest).member {
                continue;
            }
            return Ok(Some(match self.solve(&rest)? {
                TreeResult::Paths(mut paths) => {
                    let i = paths
                        .iter()
                        .position(|p| p.first() == u || p.last() == u)
                        .ok_or_else(|| {
                            DecomposeError::Internal("no path ends at an odd vertex".into())
                        })?;
                    let p = &mut paths[i];
                    if p.last() != u {
                        *p = p.reversed();
                    }
                    p.vertices.push(v);
                    paths
                }
                TreeResult::Skeleton(seq) => {
                    let mut start = brrb_paths_unchecked(&rest)
                        .into_iter()
                        .find(|p| p.first() == u || p.last() == u)
                        .ok_or_else(|| {
                            DecomposeError::Internal("black vertex on no brrb-path".into())
                        })?;
                    if start.last() != u {
                        start = start.reversed();
                    }
                    let seq = reroot_from(&seq, &start)
                        .map_err(|e| DecomposeError::Internal(e.to_string()))?;
                    let mut head = start.clone();
                    head.vertices.push(v);
                    let mut paths = vec![head];
                    paths.extend(seq.steps.iter().map(|s| s.as_walk()));
                    paths
                }
            }));
        }
        Ok(None)
    }

    /// A path of length at least four made of two pendant legs at a vertex of
    /// degree at least three.
    fn peel_pendant_path(&mut self, t: &Graph) -> Result<Option<Vec<Walk>>, DecomposeError> {
        for w in t.support() {
            if t.degree(w) < 3 {
                continue;
            }
            let legs = pendant_legs(t, w);
            for i in 0..legs.len() {
                for j in i + 1..legs.len() {
                    let (a, b) = (&legs[i], &legs[j]);
                    if a.len() + b.len() - 2 < 4 {
                        continue;
                    }
                    let mut path: Vec<Vertex> = a.iter().rev().copied().collect();
                    path.extend_from_slice(&b[1..]);
                    let p = Walk::path(path);
                    let rest = t.without_edges(&p.edges());
                    if !class_g_report_on_support(&rest).member {
                        continue;
                    }
                    match self.solve(&rest)? {
                        TreeResult::Paths(mut paths) => {
                            paths.push(p);
                            return Ok(Some(paths));
                        }
                        TreeResult::Skeleton(seq) => {
                            if let Some(paths) = attach_path(&rest, &seq, w, a, b) {
                                return Ok(Some(paths));
                            }
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    /// Cuts along `v0 v1 v2 v3`, with `v0` the smallest leaf and `v3` the
    /// smallest odd vertex at distance three, and recombines the pieces.
    fn split_at_three_path(&mut self, t: &Graph) -> Result<Vec<Walk>, DecomposeError> {
        let stuck = || {
            DecomposeError::Internal(
                "tree recursion reached a case the reductions do not cover".into(),
            )
        };
        let v0 = *t.leaves().first().ok_or_else(stuck)?;
        let dist = t.bfs_distances(v0);
        let v3 = t
            .odd_vertices()
            .into_iter()
            .find(|&w| dist[w] == Some(3))
            .ok_or_else(stuck)?;
        let spine = t.tree_path(v0, v3).ok_or_else(stuck)?;
        let spine_walk = Walk::path(spine.clone());
        let rest = t.without_edges(&spine_walk.edges());
        let pieces: Vec<Graph> = rest
            .edge_components()
            .into_iter()
            .map(|c| t.edge_subgraph(&c))
            .collect();
        let mut solved = Vec::new();
        for piece in &pieces {
            if !class_g_report_on_support(piece).member {
                return Err(stuck());
            }
            match self.solve(piece)? {
                TreeResult::Paths(p) => solved.push(p),
                TreeResult::Skeleton(_) => return Err(stuck()),
            }
        }
        if pieces.len() < 2 {
            return Err(stuck());
        }
        for (i, piece) in pieces.iter().enumerate() {
            let joined = piece.with_edges(&spine_walk.edges());
            if let TreeResult::Paths(mut paths) = self.solve(&joined)? {
                for (j, other) in solved.iter().enumerate() {
                    if j != i {
                        paths.extend(other.iter().cloned());
                    }
                }
                return Ok(paths);
            }
        }
        Err(stuck())
    }
}
