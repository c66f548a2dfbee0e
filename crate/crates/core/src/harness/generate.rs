//! Random instances for the merge constructions. Each generator draws a
//! candidate and keeps it only if the precondition checker accepts it.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::decomposer::{check_preconditions, HsPart, MergeCase, MergeKind};
use crate::graph::{
    brrb_paths_unchecked, class_g_report_on_support, Color, Edge, Graph, Vertex, Walk,
};
use crate::hanging_square::recognize_on_support;
use crate::skeleton::{BuildingPath, BuildingSequence};

/// Building steps in a random skeleton.
pub const MAX_STEPS: usize = 4;
/// Squares in a random bunch.
pub const MAX_BUNCH: usize = 3;
/// Draws per instance before giving up.
pub const ATTEMPTS: usize = 400;

/// Hands out vertex ids above everything already used.
struct Fresh(Vertex);

impl Fresh {
    fn take(&mut self) -> Vertex {
        self.0 += 1;
        self.0 - 1
    }

    fn many(&mut self, k: usize) -> Vec<Vertex> {
        (0..k).map(|_| self.take()).collect()
    }
}

fn random_skeleton<R: Rng>(rng: &mut R, steps: usize, fresh: &mut Fresh) -> BuildingSequence {
    let mut seq = BuildingSequence {
        start: fresh.many(4),
        steps: vec![],
    };
    for _ in 0..steps {
        let t = seq.to_graph(0);
        let colors = t.parity_colors();
        let v = *t.support().choose(rng).expect("non-empty skeleton");
        let half = if colors[v] == Color::Red { 2 } else { 3 };
        let mut vertices = fresh.many(2 * half);
        vertices.insert(half, v);
        seq.steps.push(BuildingPath::new(vertices));
    }
    seq
}

/// Squares `[a, m, b, m']` on the joints `a`, `b`.
fn bunch_edges(a: Vertex, b: Vertex, k: usize, fresh: &mut Fresh) -> Vec<Edge> {
    let mut out = Vec::new();
    for _ in 0..2 * k {
        let m = fresh.take();
        out.push((a, m));
        out.push((b, m));
    }
    out
}

/// A random square (as a bunch of one) attached to `t`: at one vertex with a
/// fresh opposite joint, or across the ends of a 2-path of a brrb-path.
fn random_square<R: Rng>(rng: &mut R, t: &Graph, fresh: &mut Fresh) -> Vec<Vertex> {
    let brrb = brrb_paths_unchecked(t);
    if rng.gen_bool(0.5) || brrb.is_empty() {
        let a = *t.support().choose(rng).expect("non-empty tree");
        let (b, m, m2) = (fresh.take(), fresh.take(), fresh.take());
        vec![a, m, b, m2]
    } else {
        let p = brrb.choose(rng).expect("some brrb-path");
        let i = rng.gen_range(0..2);
        let (m, m2) = (fresh.take(), fresh.take());
        vec![p.vertices[i], m, p.vertices[i + 2], m2]
    }
}

fn square_walk_edges(q: &[Vertex]) -> Vec<Edge> {
    Walk::cycle(q.to_vec()).edges()
}

/// A random hanging-square graph with at most `max_bunches` bunches.
fn random_hs<R: Rng>(rng: &mut R, max_bunches: usize, fresh: &mut Fresh) -> Option<HsPart> {
    let steps = rng.gen_range(0..=MAX_STEPS.min(2));
    let seq = random_skeleton(rng, steps, fresh);
    let t = seq.to_graph(0);
    let mut edges = seq.edges();
    let bunches = rng.gen_range(0..=max_bunches);
    for _ in 0..bunches {
        let brrb = brrb_paths_unchecked(&t);
        let k = rng.gen_range(1..=MAX_BUNCH);
        if rng.gen_bool(0.5) || brrb.is_empty() {
            let a = *t.support().choose(rng)?;
            let b = fresh.take();
            edges.extend(bunch_edges(a, b, k, fresh));
        } else {
            let p = brrb.choose(rng)?;
            let i = rng.gen_range(0..2);
            edges.extend(bunch_edges(p.vertices[i], p.vertices[i + 2], k, fresh));
        }
    }
    let g = Graph::new(0, []).ok()?.with_edges(&edges);
    if !class_g_report_on_support(&g).member {
        return None;
    }
    let certificate = recognize_on_support(&g)?;
    Some(HsPart {
        graph: g,
        certificate,
    })
}

fn hs_with_square<R: Rng>(rng: &mut R, fresh: &mut Fresh) -> Option<(HsPart, [Vertex; 4])> {
    let host = random_hs(rng, 2, fresh)?;
    let squares: Vec<[Vertex; 4]> = host
        .certificate
        .bunches
        .iter()
        .flat_map(|b| b.squares.clone())
        .collect();
    let q = *squares.choose(rng)?;
    Some((host, q))
}

/// A cycle of length `len` through `through` (in order, with fresh vertices
/// spread between them).
fn cycle_through<R: Rng>(
    rng: &mut R,
    through: &[Vertex],
    len: usize,
    fresh: &mut Fresh,
) -> Option<Walk> {
    if through.is_empty() || len < through.len() * 2 {
        return None;
    }
    let mut gaps = vec![1; through.len()];
    for _ in 0..len - 2 * through.len() {
        let i = rng.gen_range(0..gaps.len());
        gaps[i] += 1;
    }
    let mut vertices = Vec::new();
    for (i, &v) in through.iter().enumerate() {
        vertices.push(v);
        vertices.extend(fresh.many(gaps[i]));
    }
    Some(Walk::cycle(vertices))
}

/// A path of length `len` visiting `through` at random distinct positions.
fn path_through<R: Rng>(
    rng: &mut R,
    through: &[Vertex],
    len: usize,
    fresh: &mut Fresh,
) -> Option<Walk> {
    if through.len() > len + 1 {
        return None;
    }
    let mut slots: Vec<usize> = (0..=len).collect();
    slots.shuffle(rng);
    let mut chosen: Vec<usize> = slots[..through.len()].to_vec();
    chosen.sort_unstable();
    let mut vertices = fresh.many(len + 1);
    for (k, &pos) in chosen.iter().enumerate() {
        vertices[pos] = through[k];
    }
    Some(Walk::path(vertices))
}

fn pick<R: Rng, T: Copy>(rng: &mut R, from: &[T], k: usize) -> Vec<T> {
    from.choose_multiple(rng, k.min(from.len()))
        .copied()
        .collect()
}

fn draw<R: Rng>(kind: MergeKind, rng: &mut R) -> Option<MergeCase> {
    let mut fresh = Fresh(0);
    let fresh = &mut fresh;
    Some(match kind {
        MergeKind::HsLongCycle => {
            let host = random_hs(rng, 2, fresh)?;
            let on: Vec<Vertex> = host.certificate.skeleton.vertices().into_iter().collect();
            let n = rng.gen_range(1..=2);
            let through = pick(rng, &on, n);
            let n = rng.gen_range(5..=8);
            let cycle = cycle_through(rng, &through, n, fresh)?;
            MergeCase::HsLongCycle { host, cycle }
        }
        MergeKind::HsSquareCycle => {
            let (host, square) = hs_with_square(rng, fresh)?;
            let on = host.certificate.skeleton.vertices();
            let off: Vec<Vertex> = square.iter().copied().filter(|v| !on.contains(v)).collect();
            let mut through = pick(rng, &off, 1);
            if rng.gen_bool(0.3) {
                let all = host.graph.support();
                through.extend(pick(rng, &all, 1));
                through.dedup();
            }
            let n = rng.gen_range(4..=7);
            let cycle = cycle_through(rng, &through, n, fresh)?;
            MergeCase::HsSquareCycle {
                host,
                square,
                cycle,
            }
        }
        MergeKind::SkeletonLastPathCycle => {
            let n = rng.gen_range(1..=MAX_STEPS);
            let skeleton = random_skeleton(rng, n, fresh);
            let t = skeleton.to_graph(0);
            let last = skeleton.steps.last()?.vertices.clone();
            let n = rng.gen_range(1..=2);
            let mut through = pick(rng, &last, n);
            if rng.gen_bool(0.3) {
                let n = rng.gen_range(1..=2);
                through = pick(rng, &t.support(), n);
            }
            let cycle = cycle_through(rng, &through, 4, fresh)?;
            MergeCase::SkeletonLastPathCycle { skeleton, cycle }
        }
        MergeKind::HsShortPath => {
            let (host, square) = hs_with_square(rng, fresh)?;
            let on = host.certificate.skeleton.vertices();
            let off: Vec<Vertex> = square.iter().copied().filter(|v| !on.contains(v)).collect();
            let n = rng.gen_range(1..=2);
            let mut through = pick(rng, &off, n);
            through.shuffle(rng);
            let n = rng.gen_range(4..=7);
            let path = path_through(rng, &through, n, fresh)?;
            MergeCase::HsShortPath { host, square, path }
        }
        MergeKind::TwoBasis => {
            let single = |rng: &mut R, fresh: &mut Fresh| -> Option<HsPart> {
                let p = fresh.many(4);
                let t = Graph::path(&p);
                let q = random_square(rng, &t, fresh);
                let g = t.with_edges(&square_walk_edges(&q));
                let certificate = recognize_on_support(&g)?;
                Some(HsPart {
                    graph: g,
                    certificate,
                })
            };
            let first = single(rng, fresh)?;
            let second = single(rng, fresh)?;
            let offs = |part: &HsPart| -> Vec<Vertex> {
                let on = part.certificate.skeleton.vertices();
                part.certificate.bunches[0].squares[0]
                    .iter()
                    .copied()
                    .filter(|v| !on.contains(v))
                    .collect()
            };
            let (a, b) = (offs(&first), offs(&second));
            let k = rng.gen_range(1..=2);
            let (from, to) = (pick(rng, &b, k), pick(rng, &a, k));
            let n = fresh.0;
            let mut perm: Vec<Vertex> = (0..n).collect();
            for (f, t) in from.iter().zip(&to) {
                perm[*f] = *t;
            }
            let graph = second.graph.relabel(&perm);
            let certificate = recognize_on_support(&graph)?;
            MergeCase::TwoBasis {
                first,
                second: HsPart { graph, certificate },
            }
        }
        MergeKind::TreePath => {
            let n = rng.gen_range(0..=MAX_STEPS);
            let skeleton = random_skeleton(rng, n, fresh);
            let t = skeleton.to_graph(0);
            let v = *t.support().choose(rng)?;
            let len = rng.gen_range(4..=9);
            let mut path = fresh.many(len + 1);
            path[rng.gen_range(1..len)] = v;
            MergeCase::TreePath {
                skeleton,
                path: Walk::path(path),
            }
        }
        MergeKind::HsTwoSquares => {
            let n = rng.gen_range(0..=2);
            let seq = random_skeleton(rng, n, fresh);
            let t = seq.to_graph(0);
            let q = random_square(rng, &t, fresh);
            let c = random_square(rng, &t, fresh);
            let graph = t.with_edges(&square_walk_edges(&q));
            let certificate = recognize_on_support(&graph)?;
            let square = [q[0], q[1], q[2], q[3]];
            MergeCase::HsTwoSquares {
                host: HsPart { graph, certificate },
                square,
                cycle: Walk::cycle(c),
            }
        }
        MergeKind::CyclePath => {
            let cycle = Walk::cycle(fresh.many(rng.gen_range(4..=8)));
            let n = rng.gen_range(1..=3);
            let through = pick(rng, &cycle.vertices, n);
            let n = rng.gen_range(1..=7);
            let path = path_through(rng, &through, n, fresh)?;
            MergeCase::CyclePath { cycle, path }
        }
        MergeKind::TwoCycles => {
            let first = Walk::cycle(fresh.many(rng.gen_range(4..=7)));
            let n = rng.gen_range(1..=3);
            let mut through = pick(rng, &first.vertices, n);
            through.shuffle(rng);
            let n = rng.gen_range(4..=7);
            let second = cycle_through(rng, &through, n, fresh)?;
            MergeCase::TwoCycles { first, second }
        }
    })
}

/// A random instance of `kind` accepted by the precondition checker.
pub fn random_instance<R: Rng>(kind: MergeKind, rng: &mut R) -> Option<MergeCase> {
    (0..ATTEMPTS).find_map(|_| draw(kind, rng).filter(|case| check_preconditions(case).is_ok()))
}
