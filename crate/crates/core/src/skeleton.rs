//! Skeleton trees: building sequences, their verification, recognition by
//! peeling pendant building paths, and rerooting at an arbitrary brrb-path.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{brrb_paths_unchecked, edge, Color, Edge, Graph, Vertex, Walk};

/// A 4-path or 6-path whose middle vertex (the joint) is glued onto the tree
/// built so far.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BuildingPath {
    pub vertices: Vec<Vertex>,
    pub joint_index: usize,
}

impl BuildingPath {
    pub fn new(vertices: Vec<Vertex>) -> BuildingPath {
        let joint_index = vertices.len() / 2;
        BuildingPath {
            vertices,
            joint_index,
        }
    }

    pub fn joint(&self) -> Vertex {
        self.vertices[self.joint_index]
    }

    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.vertices.windows(2).map(|w| edge(w[0], w[1])).collect()
    }

    pub fn as_walk(&self) -> Walk {
        Walk::path(self.vertices.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BuildingSequence {
    pub start: Vec<Vertex>,
    pub steps: Vec<BuildingPath>,
}

impl BuildingSequence {
    pub fn edges(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = self.start.windows(2).map(|w| edge(w[0], w[1])).collect();
        for s in &self.steps {
            out.extend(s.edges());
        }
        out
    }

    /// Number of edges of the tree the sequence builds.
    pub fn edge_count(&self) -> usize {
        self.start.len().saturating_sub(1) + self.steps.iter().map(BuildingPath::len).sum::<usize>()
    }

    /// Start path followed by every building path, as walks.
    pub fn paths(&self) -> Vec<Walk> {
        let mut out = vec![Walk::path(self.start.clone())];
        out.extend(self.steps.iter().map(BuildingPath::as_walk));
        out
    }

    /// The skeleton built by the first `steps` building paths.
    pub fn prefix(&self, steps: usize) -> BuildingSequence {
        BuildingSequence {
            start: self.start.clone(),
            steps: self.steps[..steps].to_vec(),
        }
    }

    /// Vertex set of the built tree.
    pub fn vertices(&self) -> BTreeSet<Vertex> {
        let mut vs: BTreeSet<Vertex> = self.start.iter().copied().collect();
        for s in &self.steps {
            vs.extend(s.vertices.iter().copied());
        }
        vs
    }

    /// The built tree, on a vertex range large enough for `n`.
    pub fn to_graph(&self, n: usize) -> Graph {
        let n = n.max(self.vertices().last().map_or(0, |v| v + 1));
        Graph::new(n, self.edges()).expect("building sequence edges are simple")
    }
}

/// The two halves of a building path; `left` ends at the joint and `right`
/// starts there.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathSplit {
    pub left: Walk,
    pub right: Walk,
}

pub fn split_building_path(bp: &BuildingPath) -> PathSplit {
    let j = bp.joint_index;
    PathSplit {
        left: Walk::path(bp.vertices[..=j].to_vec()),
        right: Walk::path(bp.vertices[j..].to_vec()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
#[serde(tag = "defect", rename_all = "snake_case")]
pub enum SequenceDefect {
    #[error("start is not a path on four distinct vertices")]
    BadStart,
    #[error("step {step} is not a 4-path or 6-path with its joint in the middle")]
    BadShape { step: usize },
    #[error("joint of step {step} is not a vertex of the tree built so far")]
    JointNotPresent { step: usize },
    #[error("step {step} reuses vertex {vertex}")]
    VertexReused { step: usize, vertex: Vertex },
    #[error("vertex {vertex} receives conflicting colors")]
    ColorConflict { vertex: Vertex },
    #[error("replayed edges differ from the tree")]
    EdgeMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SkeletonError {
    #[error("graph is not a tree")]
    NotATree,
    #[error("tree is not a skeleton")]
    NotSkeleton,
    #[error("path is not a brrb-path of the tree")]
    NotABrrbPath,
}

/// Replays `seq` and checks it against Definition-style structure and coloring.
pub fn check_building_sequence(t: &Graph, seq: &BuildingSequence) -> Result<(), SequenceDefect> {
    let s = &seq.start;
    if s.len() != 4 || s.iter().collect::<BTreeSet<_>>().len() != 4 {
        return Err(SequenceDefect::BadStart);
    }
    let mut present: HashSet<Vertex> = s.iter().copied().collect();
    let mut color: std::collections::HashMap<Vertex, Color> = std::collections::HashMap::new();
    let mut assign = |v: Vertex, c: Color| -> Result<(), SequenceDefect> {
        match color.insert(v, c) {
            Some(old) if old != c => Err(SequenceDefect::ColorConflict { vertex: v }),
            _ => Ok(()),
        }
    };
    assign(s[0], Color::Black)?;
    assign(s[1], Color::Red)?;
    assign(s[2], Color::Red)?;
    assign(s[3], Color::Black)?;
    for (step, bp) in seq.steps.iter().enumerate() {
        let k = bp.len();
        if !(k == 4 || k == 6) || bp.joint_index != k / 2 {
            return Err(SequenceDefect::BadShape { step });
        }
        if !present.contains(&bp.joint()) {
            return Err(SequenceDefect::JointNotPresent { step });
        }
        for (i, &v) in bp.vertices.iter().enumerate() {
            if i != bp.joint_index && !present.insert(v) {
                return Err(SequenceDefect::VertexReused { step, vertex: v });
            }
        }
        let x = &bp.vertices;
        assign(x[0], Color::Black)?;
        assign(x[k], Color::Black)?;
        assign(x[1], Color::Red)?;
        assign(x[k - 1], Color::Red)?;
        if k == 4 {
            assign(x[2], Color::Red)?;
        } else {
            assign(x[3], Color::Black)?;
            assign(x[2], Color::Red)?;
            assign(x[4], Color::Red)?;
        }
    }
    let mut replayed = seq.edges();
    replayed.sort_unstable();
    if replayed != t.edges() {
        return Err(SequenceDefect::EdgeMismatch);
    }
    Ok(())
}

pub fn verify_building_sequence(t: &Graph, seq: &BuildingSequence) -> bool {
    check_building_sequence(t, seq).is_ok()
}

/// Recognition result in serializable form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SkeletonOutcome {
    Skeleton { sequence: BuildingSequence },
    NotSkeleton { reason: SkeletonError },
}

impl From<Result<BuildingSequence, SkeletonError>> for SkeletonOutcome {
    fn from(r: Result<BuildingSequence, SkeletonError>) -> Self {
        match r {
            Ok(sequence) => SkeletonOutcome::Skeleton { sequence },
            Err(reason) => SkeletonOutcome::NotSkeleton { reason },
        }
    }
}

/// Finds a building sequence of `t`, or proves none exists.
pub fn recognize_skeleton(t: &Graph) -> Result<BuildingSequence, SkeletonError> {
    if !t.is_tree() {
        return Err(SkeletonError::NotATree);
    }
    recognize_tree(t).ok_or(SkeletonError::NotSkeleton)
}

/// Recognition for an edge set already known to be a tree.
pub(crate) fn recognize_tree(t: &Graph) -> Option<BuildingSequence> {
    if t.edge_count().is_multiple_of(2) {
        return None;
    }
    let mut failed = HashSet::new();
    let mut peeled = Vec::new();
    let start = peel(t, &mut peeled, &mut failed)?;
    peeled.reverse();
    Some(BuildingSequence {
        start,
        steps: peeled,
    })
}

fn peel(
    t: &Graph,
    peeled: &mut Vec<BuildingPath>,
    failed: &mut HashSet<Vec<Edge>>,
) -> Option<Vec<Vertex>> {
    if t.edge_count() == 3 {
        return three_path(t);
    }
    if t.edge_count() < 3 || failed.contains(t.edges()) {
        return None;
    }
    for bp in last_path_candidates(t) {
        let rest = t.without_edges(&bp.edges());
        peeled.push(bp);
        if let Some(start) = peel(&rest, peeled, failed) {
            return Some(start);
        }
        peeled.pop();
    }
    failed.insert(t.edges().to_vec());
    None
}

fn three_path(t: &Graph) -> Option<Vec<Vertex>> {
    let leaves = t.leaves();
    if leaves.len() != 2 {
        return None;
    }
    let path = t.tree_path(leaves[0], leaves[1])?;
    (path.len() == 4).then_some(path)
}

/// Maximal pendant legs hanging off `v`: runs of degree-2 vertices ending at a
/// leaf, listed from `v` outward.
pub(crate) fn pendant_legs(t: &Graph, v: Vertex) -> Vec<Vec<Vertex>> {
    let mut legs = Vec::new();
    for &first in t.neighbors(v) {
        let mut leg = vec![v, first];
        let (mut prev, mut cur) = (v, first);
        while t.degree(cur) == 2 {
            let next = if t.neighbors(cur)[0] == prev {
                t.neighbors(cur)[1]
            } else {
                t.neighbors(cur)[0]
            };
            leg.push(next);
            prev = cur;
            cur = next;
        }
        if t.degree(cur) == 1 {
            legs.push(leg);
        }
    }
    legs
}

/// Possible last building paths, ordered by their smallest leaf id.
fn last_path_candidates(t: &Graph) -> Vec<BuildingPath> {
    let mut out = Vec::new();
    for v in t.support() {
        let d = t.degree(v);
        if d < 3 {
            continue;
        }
        let want = if d.is_multiple_of(2) { 3 } else { 4 };
        let mut legs: Vec<_> = pendant_legs(t, v)
            .into_iter()
            .filter(|l| l.len() == want)
            .collect();
        if legs.len() < 2 {
            continue;
        }
        legs.sort_by_key(|l| *l.last().unwrap());
        let mut vertices: Vec<Vertex> = legs[0].iter().rev().copied().collect();
        vertices.extend_from_slice(&legs[1][1..]);
        out.push(BuildingPath::new(vertices));
    }
    out.sort_by_key(|bp| bp.vertices[0].min(*bp.vertices.last().unwrap()));
    out
}

/// A building sequence of `t` that starts at the brrb-path `p`.
pub fn reroot_sequence(t: &Graph, p: &Walk) -> Result<BuildingSequence, SkeletonError> {
    let seq = recognize_skeleton(t)?;
    reroot_from(&seq, p)
}

/// Rerooting when a building sequence is already known.
pub fn reroot_from(seq: &BuildingSequence, p: &Walk) -> Result<BuildingSequence, SkeletonError> {
    if p.vertices.len() != 4 || !p.is_path() {
        return Err(SkeletonError::NotABrrbPath);
    }
    let t = seq.to_graph(0);
    if !brrb_paths_unchecked(&t).contains(&p.normalized()) {
        return Err(SkeletonError::NotABrrbPath);
    }
    reroot_rec(seq, &p.vertices).ok_or(SkeletonError::NotABrrbPath)
}

fn same_path(a: &[Vertex], b: &[Vertex]) -> bool {
    a == b || a.iter().rev().eq(b.iter())
}

fn reroot_rec(seq: &BuildingSequence, p: &[Vertex]) -> Option<BuildingSequence> {
    let Some(last) = seq.steps.last() else {
        return same_path(&seq.start, p).then(|| BuildingSequence {
            start: p.to_vec(),
            steps: vec![],
        });
    };
    let prefix = seq.prefix(seq.steps.len() - 1);
    let last_edges: BTreeSet<Edge> = last.edges().into_iter().collect();
    let p_edges: Vec<Edge> = p.windows(2).map(|w| edge(w[0], w[1])).collect();
    if p_edges.iter().all(|e| !last_edges.contains(e)) {
        let mut out = reroot_rec(&prefix, p)?;
        out.steps.push(last.clone());
        return Some(out);
    }
    let v = last.joint();
    let split = split_building_path(last);
    let t_prev = prefix.to_graph(0);
    let brrb = brrb_paths_unchecked(&t_prev);
    if last.len() == 6 {
        let other = if same_path(&split.left.vertices, p) {
            split.right.vertices.clone()
        } else if same_path(&split.right.vertices, p) {
            let mut l = split.left.vertices.clone();
            l.reverse();
            l
        } else {
            return None;
        };
        // a brrb-path of the smaller skeleton ending at the joint
        let mut q = brrb
            .into_iter()
            .find(|w| w.first() == v || w.last() == v)?
            .vertices;
        if q[0] == v {
            q.reverse();
        }
        let inner = reroot_rec(&prefix, &q)?;
        let mut glued = q.clone();
        glued.extend_from_slice(&other[1..]);
        let mut steps = vec![BuildingPath::new(glued)];
        steps.extend(inner.steps);
        return Some(BuildingSequence {
            start: p.to_vec(),
            steps,
        });
    }
    // 4-path: p is one half extended by an edge vu into the smaller tree
    let pos = p.iter().position(|&x| x == v)?;
    let u = if pos == 2 {
        p[3]
    } else if pos == 1 {
        p[0]
    } else {
        return None;
    };
    let half_in_p: Vec<Vertex> = if pos == 2 {
        p[..=2].to_vec()
    } else {
        p[1..].iter().rev().copied().collect()
    };
    let other = if same_path(&split.left.vertices, &half_in_p) {
        split.right.vertices.clone()
    } else if same_path(&split.right.vertices, &half_in_p) {
        let mut l = split.left.vertices.clone();
        l.reverse();
        l
    } else {
        return None;
    };
    let mut q = brrb
        .into_iter()
        .find(|w| {
            (w.vertices[0] == u && w.vertices[1] == v) || (w.vertices[3] == u && w.vertices[2] == v)
        })?
        .vertices;
    if q[0] != u {
        q.reverse();
    }
    let inner = reroot_rec(&prefix, &q)?;
    let mut glued: Vec<Vertex> = other.iter().rev().copied().collect();
    glued.extend_from_slice(&q[2..]);
    let mut steps = vec![BuildingPath::new(glued)];
    steps.extend(inner.steps);
    Some(BuildingSequence {
        start: p.to_vec(),
        steps,
    })
}
