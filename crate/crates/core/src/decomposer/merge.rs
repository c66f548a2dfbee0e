//! Merge constructions: a decomposable or hanging-square host plus an extra
//! cycle or path whose union decomposes into long elements.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{
    brrb_paths_unchecked, class_g_report_on_support, is_triangle_free, Color, Decomposition, Edge,
    Graph, Vertex, Walk,
};
use crate::hanging_square::{check_on_support, recognize_on_support, HangingSquareCertificate};
use crate::search::{SearchSpec, Solver};
use crate::skeleton::{check_building_sequence, recognize_tree, reroot_from, BuildingSequence};

/// Largest core handed to the exact search during a local repair.
const CORE_EDGE_LIMIT: usize = 28;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MergeKind {
    HsLongCycle,
    HsSquareCycle,
    SkeletonLastPathCycle,
    HsShortPath,
    TwoBasis,
    TreePath,
    HsTwoSquares,
    CyclePath,
    TwoCycles,
}

impl MergeKind {
    pub const ALL: [MergeKind; 9] = [
        MergeKind::HsLongCycle,
        MergeKind::HsSquareCycle,
        MergeKind::SkeletonLastPathCycle,
        MergeKind::HsShortPath,
        MergeKind::TwoBasis,
        MergeKind::TreePath,
        MergeKind::HsTwoSquares,
        MergeKind::CyclePath,
        MergeKind::TwoCycles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MergeKind::HsLongCycle => "hs-long-cycle",
            MergeKind::HsSquareCycle => "hs-square-cycle",
            MergeKind::SkeletonLastPathCycle => "skeleton-last-path-cycle",
            MergeKind::HsShortPath => "hs-short-path",
            MergeKind::TwoBasis => "two-basis",
            MergeKind::TreePath => "tree-path",
            MergeKind::HsTwoSquares => "hs-two-squares",
            MergeKind::CyclePath => "cycle-path",
            MergeKind::TwoCycles => "two-cycles",
        }
    }
}

impl fmt::Display for MergeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for MergeKind {
    type Err = String;

    fn from_str(s: &str) -> Result<MergeKind, String> {
        MergeKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown merge kind {s:?}"))
    }
}

/// A hanging-square graph together with its certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HsPart {
    pub graph: Graph,
    pub certificate: HangingSquareCertificate,
}

/// The parts of a merge, by role.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum MergeCase {
    /// A cycle of length at least 5 meeting the skeleton.
    HsLongCycle { host: HsPart, cycle: Walk },
    /// A cycle meeting the off-skeleton vertices of the square `square`.
    HsSquareCycle {
        host: HsPart,
        square: [Vertex; 4],
        cycle: Walk,
    },
    /// A square and a skeleton whose last building path is the one dropped.
    SkeletonLastPathCycle {
        skeleton: BuildingSequence,
        cycle: Walk,
    },
    /// A path of length 4 to 7 touching the host only off the skeleton of `square`.
    HsShortPath {
        host: HsPart,
        square: [Vertex; 4],
        path: Walk,
    },
    /// Two one-square hanging-square graphs meeting at off-skeleton square vertices.
    TwoBasis { first: HsPart, second: HsPart },
    /// A skeleton and a path through one of its vertices.
    TreePath {
        skeleton: BuildingSequence,
        path: Walk,
    },
    /// A square whose addition turns `host − square` into a hanging-square graph.
    HsTwoSquares {
        host: HsPart,
        square: [Vertex; 4],
        cycle: Walk,
    },
    /// A cycle and a path sharing vertices; the result is two paths of any length.
    CyclePath { cycle: Walk, path: Walk },
    /// Two cycles of length 4 to 7 sharing vertices.
    TwoCycles { first: Walk, second: Walk },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MergeError {
    #[error("{kind}: precondition violated: {detail}")]
    PreconditionViolated { kind: MergeKind, detail: String },
    #[error("{kind}: no construction found")]
    Exhausted { kind: MergeKind },
}

impl MergeCase {
    pub fn kind(&self) -> MergeKind {
        match self {
            MergeCase::HsLongCycle { .. } => MergeKind::HsLongCycle,
            MergeCase::HsSquareCycle { .. } => MergeKind::HsSquareCycle,
            MergeCase::SkeletonLastPathCycle { .. } => MergeKind::SkeletonLastPathCycle,
            MergeCase::HsShortPath { .. } => MergeKind::HsShortPath,
            MergeCase::TwoBasis { .. } => MergeKind::TwoBasis,
            MergeCase::TreePath { .. } => MergeKind::TreePath,
            MergeCase::HsTwoSquares { .. } => MergeKind::HsTwoSquares,
            MergeCase::CyclePath { .. } => MergeKind::CyclePath,
            MergeCase::TwoCycles { .. } => MergeKind::TwoCycles,
        }
    }

    /// Edge sets of the parts, in role order.
    fn part_edges(&self) -> Vec<Vec<Edge>> {
        match self {
            MergeCase::HsLongCycle { host, cycle: extra }
            | MergeCase::HsSquareCycle {
                host, cycle: extra, ..
            }
            | MergeCase::HsShortPath {
                host, path: extra, ..
            }
            | MergeCase::HsTwoSquares {
                host, cycle: extra, ..
            } => vec![host.graph.edges().to_vec(), extra.edges()],
            MergeCase::SkeletonLastPathCycle {
                skeleton,
                cycle: extra,
            }
            | MergeCase::TreePath {
                skeleton,
                path: extra,
            } => {
                vec![skeleton.edges(), extra.edges()]
            }
            MergeCase::TwoBasis { first, second } => {
                vec![first.graph.edges().to_vec(), second.graph.edges().to_vec()]
            }
            MergeCase::CyclePath { cycle: a, path: b }
            | MergeCase::TwoCycles {
                first: a,
                second: b,
            } => {
                vec![a.edges(), b.edges()]
            }
        }
    }

    /// The graph the merge decomposes.
    pub fn union(&self) -> Graph {
        graph_of(&self.part_edges().concat())
    }

    /// Shortest element length the merge guarantees.
    pub fn min_length(&self) -> usize {
        match self {
            MergeCase::CyclePath { .. } => 1,
            _ => 4,
        }
    }
}

fn violated(kind: MergeKind, detail: impl Into<String>) -> MergeError {
    MergeError::PreconditionViolated {
        kind,
        detail: detail.into(),
    }
}

fn vertex_set(edges: &[Edge]) -> BTreeSet<Vertex> {
    edges.iter().flat_map(|&(u, v)| [u, v]).collect()
}

fn graph_of(edges: &[Edge]) -> Graph {
    Graph::new(0, []).expect("empty graph").with_edges(edges)
}

fn square_vertices(q: &[Vertex; 4]) -> BTreeSet<Vertex> {
    q.iter().copied().collect()
}

fn is_square_of(cert: &HangingSquareCertificate, q: &[Vertex; 4]) -> bool {
    let target = Walk::cycle(q.to_vec()).normalized();
    cert.bunches
        .iter()
        .flat_map(|b| b.cycles())
        .any(|c| c.normalized() == target)
}

/// Square vertices off the skeleton.
fn off_skeleton(cert: &HangingSquareCertificate, q: &[Vertex; 4]) -> BTreeSet<Vertex> {
    let on = cert.skeleton.vertices();
    q.iter().copied().filter(|v| !on.contains(v)).collect()
}

fn check_host(kind: MergeKind, host: &HsPart) -> Result<(), MergeError> {
    check_on_support(&host.graph, &host.certificate)
        .map_err(|d| violated(kind, format!("host certificate rejected: {d}")))
}

fn check_square(kind: MergeKind, host: &HsPart, q: &[Vertex; 4]) -> Result<(), MergeError> {
    if is_square_of(&host.certificate, q) {
        Ok(())
    } else {
        Err(violated(kind, "square is not a bunch square of the host"))
    }
}

fn check_walk(
    kind: MergeKind,
    w: &Walk,
    cycle: bool,
    lengths: std::ops::RangeInclusive<usize>,
) -> Result<(), MergeError> {
    if !w.is_well_formed() {
        return Err(violated(kind, "malformed path or cycle"));
    }
    if w.is_cycle() != cycle {
        return Err(violated(
            kind,
            if cycle {
                "expected a cycle"
            } else {
                "expected a path"
            },
        ));
    }
    if !lengths.contains(&w.len()) {
        return Err(violated(
            kind,
            format!("length {} outside {lengths:?}", w.len()),
        ));
    }
    Ok(())
}

/// Checks the hypotheses of the lemma behind `case`.
pub fn check_preconditions(case: &MergeCase) -> Result<(), MergeError> {
    let kind = case.kind();
    let parts = case.part_edges();
    let (a, b) = (&parts[0], &parts[1]);
    let a_set: BTreeSet<Edge> = a.iter().copied().collect();
    if b.iter().any(|e| a_set.contains(e)) {
        return Err(violated(kind, "parts share an edge"));
    }
    let (va, vb) = (vertex_set(a), vertex_set(b));
    let shared: BTreeSet<Vertex> = va.intersection(&vb).copied().collect();
    if shared.is_empty() {
        return Err(violated(kind, "parts share no vertex"));
    }
    let union = case.union();
    let in_class = || {
        if class_g_report_on_support(&union).member {
            Ok(())
        } else {
            Err(violated(kind, "union is not in the class"))
        }
    };
    match case {
        MergeCase::HsLongCycle { host, cycle } => {
            check_host(kind, host)?;
            check_walk(kind, cycle, true, 5..=usize::MAX)?;
            let on = host.certificate.skeleton.vertices();
            if !cycle.vertices.iter().any(|v| on.contains(v)) {
                return Err(violated(kind, "cycle misses the skeleton"));
            }
            in_class()
        }
        MergeCase::HsSquareCycle {
            host,
            square,
            cycle,
        } => {
            check_host(kind, host)?;
            check_square(kind, host, square)?;
            check_walk(kind, cycle, true, 4..=usize::MAX)?;
            if !off_skeleton(&host.certificate, square)
                .iter()
                .any(|v| cycle.contains(*v))
            {
                return Err(violated(
                    kind,
                    "cycle misses the off-skeleton square vertices",
                ));
            }
            in_class()
        }
        MergeCase::SkeletonLastPathCycle { skeleton, cycle } => {
            let t = skeleton.to_graph(0);
            check_building_sequence(&t, skeleton)
                .map_err(|d| violated(kind, format!("skeleton rejected: {d}")))?;
            let last = skeleton
                .steps
                .last()
                .ok_or_else(|| violated(kind, "skeleton has no building path"))?;
            check_walk(kind, cycle, true, 4..=4)?;
            in_class()?;
            if recognize_on_support(&union).is_some() {
                return Err(violated(kind, "union is a hanging-square graph"));
            }
            let reduced = t.without_edges(&last.edges());
            let split = !reduced.support().iter().any(|&v| cycle.contains(v));
            let rest = reduced.with_edges(&cycle.edges());
            if !split && recognize_on_support(&rest).is_none() {
                return Err(violated(
                    kind,
                    "dropping the last path leaves neither a hanging-square graph nor two parts",
                ));
            }
            Ok(())
        }
        MergeCase::HsShortPath { host, square, path } => {
            check_host(kind, host)?;
            check_square(kind, host, square)?;
            check_walk(kind, path, false, 4..=7)?;
            let off = off_skeleton(&host.certificate, square);
            if !shared.is_subset(&off) {
                return Err(violated(
                    kind,
                    "path meets the host outside the off-skeleton square vertices",
                ));
            }
            in_class()
        }
        MergeCase::TwoBasis { first, second } => {
            let mut offs = Vec::new();
            for part in [first, second] {
                check_host(kind, part)?;
                let cert = &part.certificate;
                if !cert.skeleton.steps.is_empty()
                    || cert.bunches.len() != 1
                    || cert.bunches[0].k() != 1
                {
                    return Err(violated(kind, "part is not a single square on a 3-path"));
                }
                offs.push(off_skeleton(cert, &cert.bunches[0].squares[0]));
            }
            let common: BTreeSet<Vertex> = offs[0].intersection(&offs[1]).copied().collect();
            if !shared.is_subset(&common) {
                return Err(violated(
                    kind,
                    "parts meet outside the off-skeleton square vertices",
                ));
            }
            in_class()
        }
        MergeCase::TreePath { skeleton, path } => {
            let t = skeleton.to_graph(0);
            check_building_sequence(&t, skeleton)
                .map_err(|d| violated(kind, format!("skeleton rejected: {d}")))?;
            check_walk(kind, path, false, 4..=usize::MAX)?;
            if shared.len() != 1 {
                return Err(violated(
                    kind,
                    "path meets the skeleton in more than one vertex",
                ));
            }
            let v = *shared.first().expect("one shared vertex");
            if path.first() == v || path.last() == v {
                return Err(violated(kind, "shared vertex is an end of the path"));
            }
            in_class()?;
            if recognize_tree(&union).is_some() {
                return Err(violated(kind, "union is a skeleton"));
            }
            Ok(())
        }
        MergeCase::HsTwoSquares {
            host,
            square,
            cycle,
        } => {
            check_host(kind, host)?;
            check_square(kind, host, square)?;
            check_walk(kind, cycle, true, 4..=4)?;
            in_class()?;
            if recognize_on_support(&union).is_some() {
                return Err(violated(kind, "union is a hanging-square graph"));
            }
            let q = Walk::cycle(square.to_vec());
            let rest = host
                .graph
                .without_edges(&q.edges())
                .with_edges(&cycle.edges());
            if recognize_on_support(&rest).is_none() {
                return Err(violated(
                    kind,
                    "host minus the square plus the cycle is not a hanging-square graph",
                ));
            }
            Ok(())
        }
        MergeCase::CyclePath { cycle, path } => {
            check_walk(kind, cycle, true, 3..=usize::MAX)?;
            check_walk(kind, path, false, 1..=7)?;
            if !is_triangle_free(&union) {
                return Err(violated(kind, "union has a triangle"));
            }
            Ok(())
        }
        MergeCase::TwoCycles { first, second } => {
            check_walk(kind, first, true, 4..=7)?;
            check_walk(kind, second, true, 4..=7)?;
            if !is_triangle_free(&union) {
                return Err(violated(kind, "union has a triangle"));
            }
            Ok(())
        }
    }
}

/// Decomposes the union of the parts after checking the preconditions.
pub fn lemma_merge(case: &MergeCase) -> Result<Decomposition, MergeError> {
    check_preconditions(case)?;
    let kind = case.kind();
    let elements = match case {
        MergeCase::HsLongCycle { host, cycle } => long_cycle(&host.certificate, cycle),
        MergeCase::HsSquareCycle {
            host,
            square,
            cycle,
        }
        | MergeCase::HsTwoSquares {
            host,
            square,
            cycle,
        } => {
            let touch: BTreeSet<Vertex> = cycle
                .vertices
                .iter()
                .chain(square.iter())
                .copied()
                .collect();
            hs_repair(
                &host.certificate,
                Some(square),
                std::slice::from_ref(cycle),
                &touch,
            )
        }
        MergeCase::HsShortPath { host, square, path } => {
            let touch = square_vertices(square);
            hs_repair(
                &host.certificate,
                Some(square),
                std::slice::from_ref(path),
                &touch,
            )
        }
        MergeCase::SkeletonLastPathCycle { skeleton, cycle } => {
            let mut touch: BTreeSet<Vertex> = cycle.vertices.iter().copied().collect();
            touch.extend(skeleton.steps.last().map(|p| p.joint()));
            skeleton_repair(skeleton, std::slice::from_ref(cycle), &touch)
        }
        MergeCase::TwoBasis { .. } => exact_cover(&case.union(), SearchSpec::four_pc()),
        MergeCase::TreePath { skeleton, path } => tree_path(skeleton, path),
        MergeCase::CyclePath { cycle, path } => cycle_path_split(cycle, path),
        MergeCase::TwoCycles { first, second } => two_cycles(first, second),
    };
    let elements = elements.ok_or(MergeError::Exhausted { kind })?;
    Ok(Decomposition::new(elements, case.min_length()))
}

fn exact_cover(g: &Graph, spec: SearchSpec) -> Option<Vec<Walk>> {
    if g.edge_count() > CORE_EDGE_LIMIT {
        return None;
    }
    Solver::new(g, spec).solve()
}

/// Skeleton elements starting at `start`, followed by the bunch squares.
pub(crate) fn rooted_elements(cert: &HangingSquareCertificate, start: &Walk) -> Option<Vec<Walk>> {
    let seq = reroot_from(&cert.skeleton, start).ok()?;
    let mut out = vec![start.clone()];
    out.extend(seq.steps.iter().map(|s| s.as_walk()));
    out.extend(cert.bunches.iter().flat_map(|b| b.cycles()));
    Some(out)
}

/// brrb-paths meeting `touch`, those meeting it most first.
pub(crate) fn anchors(skeleton: &BuildingSequence, touch: &BTreeSet<Vertex>) -> Vec<Walk> {
    let t = skeleton.to_graph(0);
    let mut paths: Vec<(usize, Walk)> = brrb_paths_unchecked(&t)
        .into_iter()
        .map(|p| (p.vertices.iter().filter(|v| touch.contains(v)).count(), p))
        .filter(|(hits, _)| *hits > 0)
        .collect();
    paths.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.vertices.cmp(&b.1.vertices)));
    paths.into_iter().map(|(_, p)| p).collect()
}

fn hs_repair(
    cert: &HangingSquareCertificate,
    square: Option<&[Vertex; 4]>,
    extra: &[Walk],
    touch: &BTreeSet<Vertex>,
) -> Option<Vec<Walk>> {
    let square = square.map(|q| Walk::cycle(q.to_vec()).normalized());
    for start in anchors(&cert.skeleton, touch) {
        let Some(base) = rooted_elements(cert, &start) else {
            continue;
        };
        let mut seed = vec![0];
        if let Some(q) = &square {
            seed.extend(base.iter().position(|w| w.normalized() == *q));
        }
        if let Some(found) = local_repair(&base, &seed, extra) {
            return Some(found);
        }
    }
    None
}

fn skeleton_repair(
    seq: &BuildingSequence,
    extra: &[Walk],
    touch: &BTreeSet<Vertex>,
) -> Option<Vec<Walk>> {
    let cert = HangingSquareCertificate {
        skeleton: seq.clone(),
        bunches: vec![],
        occupations: vec![],
    };
    hs_repair(&cert, None, extra, touch)
}

/// Re-decomposes the extra parts together with a growing set of base
/// elements around them; the untouched base elements are kept.
pub(crate) fn local_repair(base: &[Walk], seed: &[usize], extra: &[Walk]) -> Option<Vec<Walk>> {
    let mut in_core = vec![false; base.len()];
    for &i in seed {
        in_core[i] = true;
    }
    loop {
        let mut edges: Vec<Edge> = extra.iter().flat_map(|w| w.edges()).collect();
        for (i, w) in base.iter().enumerate() {
            if in_core[i] {
                edges.extend(w.edges());
            }
        }
        if edges.len() > CORE_EDGE_LIMIT {
            return None;
        }
        let core = graph_of(&edges);
        if let Some(mut found) = Solver::new(&core, SearchSpec::four_pc()).solve() {
            found.extend(
                base.iter()
                    .enumerate()
                    .filter(|(i, _)| !in_core[*i])
                    .map(|(_, w)| w.clone()),
            );
            return Some(found);
        }
        let next = (0..base.len())
            .filter(|&i| !in_core[i])
            .filter_map(|i| {
                let shared = base[i]
                    .vertices
                    .iter()
                    .filter(|&&v| core.has_vertex(v))
                    .count();
                let on_extra = base[i]
                    .vertices
                    .iter()
                    .any(|&v| extra.iter().any(|w| w.contains(v)));
                (shared > 0).then_some((std::cmp::Reverse((on_extra, shared)), i))
            })
            .min()?
            .1;
        in_core[next] = true;
    }
}

/// A cycle of length at least 5 through the skeleton: the brrb-path at the
/// meeting vertex absorbs one or two cycle edges.
fn long_cycle(cert: &HangingSquareCertificate, cycle: &Walk) -> Option<Vec<Walk>> {
    let t = cert.skeleton.to_graph(0);
    let colors = t.parity_colors();
    let brrb = brrb_paths_unchecked(&t);
    let on: Vec<Vertex> = cycle
        .vertices
        .iter()
        .copied()
        .filter(|&v| t.has_vertex(v))
        .collect();
    let black = on
        .iter()
        .copied()
        .filter(|&v| colors[v] == Color::Black)
        .min();
    let (start, absorbed, rest) = match black {
        Some(v) => {
            let mut p = brrb.into_iter().find(|p| p.first() == v || p.last() == v)?;
            if p.last() != v {
                p = p.reversed();
            }
            let around = rotate(cycle, v);
            let mut head = p.clone();
            head.vertices.push(around[1]);
            (
                p,
                head,
                Walk::path(around[1..].iter().copied().chain([v]).collect()),
            )
        }
        None => {
            let v = *on.iter().min()?;
            let mut p = brrb
                .into_iter()
                .find(|p| p.vertices[1] == v || p.vertices[2] == v)?;
            if p.vertices[1] != v {
                p = p.reversed();
            }
            let x = p.vertices[0];
            let around = rotate(cycle, v);
            let (v1, u) = (around[1], around[2]);
            let head = Walk::path(vec![u, v1, v, p.vertices[2], p.vertices[3]]);
            let mut tail: Vec<Vertex> = around[2..].to_vec();
            tail.extend([v, x]);
            (p, head, Walk::path(tail))
        }
    };
    let mut elements = rooted_elements(cert, &start)?;
    elements[0] = absorbed;
    elements.push(rest);
    Some(elements)
}

/// Cycle vertices starting at `v`.
fn rotate(cycle: &Walk, v: Vertex) -> Vec<Vertex> {
    let i = cycle.position(v).expect("vertex on cycle");
    let mut out = cycle.vertices[i..].to_vec();
    out.extend_from_slice(&cycle.vertices[..i]);
    out
}

fn tree_path(seq: &BuildingSequence, path: &Walk) -> Option<Vec<Walk>> {
    let t = seq.to_graph(0);
    let v = *path.vertices.iter().find(|&&v| t.has_vertex(v))?;
    let i = path.position(v)?;
    let first: Vec<Vertex> = path.vertices[..=i].iter().rev().copied().collect();
    let second = path.vertices[i..].to_vec();
    attach_path(&t, seq, v, &first, &second)
}

/// Hangs the path `a⁻¹ b` (both halves listed from `w`) on the skeleton
/// through `w`; `None` when the union is itself a skeleton.
pub(crate) fn attach_path(
    t: &Graph,
    seq: &BuildingSequence,
    w: Vertex,
    a: &[Vertex],
    b: &[Vertex],
) -> Option<Vec<Walk>> {
    let (la, lb) = (a.len() - 1, b.len() - 1);
    let brrb = brrb_paths_unchecked(t);
    let (start, alone, joined) = match t.parity_colors()[w] {
        Color::Black => {
            let (long, short) = if la >= 4 && la >= lb {
                (a, b)
            } else if lb >= 4 {
                (b, a)
            } else {
                return None;
            };
            let mut p = brrb.into_iter().find(|p| p.first() == w || p.last() == w)?;
            if p.last() != w {
                p = p.reversed();
            }
            let joined = p.join(&Walk::path(short.to_vec()));
            (p, Walk::path(long.to_vec()), joined)
        }
        Color::Red => {
            let (long, short) = if la >= 3 && la >= lb {
                (a, b)
            } else if lb >= 3 {
                (b, a)
            } else {
                return None;
            };
            let mut p = brrb
                .into_iter()
                .find(|p| p.vertices[1] == w || p.vertices[2] == w)?;
            if p.vertices[1] != w {
                p = p.reversed();
            }
            let mut alone = vec![p.vertices[0]];
            alone.extend_from_slice(long);
            let tail: Vec<Vertex> = p.vertices[1..].iter().rev().copied().collect();
            let joined = Walk::path(tail).join(&Walk::path(short.to_vec()));
            (p, Walk::path(alone), joined)
        }
    };
    let seq = reroot_from(seq, &start).ok()?;
    let mut paths = vec![alone, joined];
    paths.extend(seq.steps.iter().map(|s| s.as_walk()));
    Some(paths)
}

/// Two paths covering a cycle and a path that share vertices.
pub(crate) fn cycle_path_split(cycle: &Walk, path: &Walk) -> Option<Vec<Walk>> {
    let g = graph_of(&[cycle.edges(), path.edges()].concat());
    let spec = SearchSpec {
        max_elements: Some(2),
        ..SearchSpec::paths(2)
    };
    Solver::new(&g, spec).solve().filter(|p| p.len() == 2)
}

/// Two cycles of length 4 to 7 sharing vertices, as paths of length at least 4.
pub(crate) fn two_cycles(first: &Walk, second: &Walk) -> Option<Vec<Walk>> {
    let shared: Vec<Vertex> = first
        .vertices
        .iter()
        .copied()
        .filter(|&v| second.contains(v))
        .collect();
    if let [v] = shared[..] {
        let c = rotate(first, v);
        let d = rotate(second, v);
        let p1: Vec<Vertex> = c[1..].iter().copied().chain([v, d[1]]).collect();
        let p2: Vec<Vertex> = d[1..].iter().copied().chain([v, c[1]]).collect();
        return Some(vec![Walk::path(p1), Walk::path(p2)]);
    }
    let g = graph_of(&[first.edges(), second.edges()].concat());
    let spec = SearchSpec {
        min_len: 4,
        ..SearchSpec::paths(usize::MAX)
    };
    Solver::new(
        &g,
        SearchSpec {
            max_elements: None,
            ..spec
        },
    )
    .solve()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate_decomposition;

    fn valid(case: &MergeCase) -> Decomposition {
        let d = lemma_merge(case).unwrap();
        assert!(
            validate_decomposition(&case.union(), &d).is_valid(),
            "{d:?}"
        );
        d
    }

    #[test]
    fn figure_eight_is_two_paths() {
        let case = MergeCase::TwoCycles {
            first: Walk::cycle(vec![0, 1, 2, 3]),
            second: Walk::cycle(vec![0, 4, 5, 6]),
        };
        let d = valid(&case);
        assert_eq!(d.len(), 2);
        assert!(d.elements.iter().all(|w| w.is_path() && w.len() == 4));
    }

    #[test]
    fn tree_path_on_three_path() {
        // 3-path 0-1-2-3, path of length 8 through the black end 0 with halves 5 and 3
        let skeleton = BuildingSequence {
            start: vec![0, 1, 2, 3],
            steps: vec![],
        };
        let path = Walk::path(vec![4, 5, 6, 7, 8, 0, 9, 10, 11]);
        let d = valid(&MergeCase::TreePath { skeleton, path });
        assert_eq!(d.len(), 2);
        assert!(d.elements.contains(&Walk::path(vec![0, 8, 7, 6, 5, 4])));
    }

    #[test]
    fn cycle_path_shared_internal_vertex() {
        let case = MergeCase::CyclePath {
            cycle: Walk::cycle(vec![0, 1, 2, 3]),
            path: Walk::path(vec![4, 5, 0, 6, 7]),
        };
        let d = valid(&case);
        assert_eq!(d.len(), 2);
        assert_eq!(d.total_length(), 8);
    }

    #[test]
    fn preconditions_reject() {
        let disjoint = MergeCase::TwoCycles {
            first: Walk::cycle(vec![0, 1, 2, 3]),
            second: Walk::cycle(vec![4, 5, 6, 7]),
        };
        assert!(matches!(
            lemma_merge(&disjoint),
            Err(MergeError::PreconditionViolated { .. })
        ));
        let long = MergeCase::CyclePath {
            cycle: Walk::cycle(vec![0, 1, 2, 3]),
            path: Walk::path(vec![0, 4, 5, 6, 7, 8, 9, 10, 11]),
        };
        assert!(matches!(
            lemma_merge(&long),
            Err(MergeError::PreconditionViolated { .. })
        ));
    }
}
