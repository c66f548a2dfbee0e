//! Path decompositions with at most ⌈n/2⌉ paths for sparse graphs in the
//! class, and an exact minimum path decomposition oracle.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decomposer::general::simple_cycles;
use crate::decomposer::merge::{cycle_path_split, two_cycles};
use crate::decomposer::{decompose_4pc, DecomposeError};
use crate::graph::{class_g_report, Decomposition, Graph, Vertex, Walk};
use crate::hanging_square::recognize_hanging_square;
use crate::search::{SearchSpec, Solver};

/// Edge limit of [`min_path_decomposition_exact`].
pub const MIN_PATH_MAX_EDGES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GallaiRoute {
    Direct,
    HsFallback,
    CycleGraph,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GallaiResult {
    pub paths: Decomposition,
    pub bound: usize,
    pub within_bound: bool,
    pub route: GallaiRoute,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GallaiError {
    #[error("graph is not in the class")]
    NotInClassG,
    #[error("graph has {edges} edges, more than 4⌈n/2⌉ = {limit}")]
    EdgeBoundViolated { edges: usize, limit: usize },
    #[error("no merge removes the cycle {cycle:?}")]
    MergeExhausted { cycle: Vec<Vertex> },
    #[error("graph has {edges} edges, above the exact path-search limit of {MIN_PATH_MAX_EDGES}")]
    TooLarge { edges: usize },
    #[error(transparent)]
    Decompose(#[from] DecomposeError),
}

pub fn gallai_decomposition(g: &Graph) -> Result<GallaiResult, GallaiError> {
    if !class_g_report(g).member {
        return Err(GallaiError::NotInClassG);
    }
    let n = g.vertex_count();
    let bound = n.div_ceil(2);
    if g.edge_count() > 4 * bound {
        return Err(GallaiError::EdgeBoundViolated {
            edges: g.edge_count(),
            limit: 4 * bound,
        });
    }
    let (elements, route) = if recognize_hanging_square(g).is_ok() {
        (
            min_path_decomposition_exact(g)?.1.elements,
            GallaiRoute::HsFallback,
        )
    } else if g.support().iter().all(|&v| g.degree(v) == 2) {
        let cycle = simple_cycles(g).swap_remove(0);
        (split_cycle(&cycle).to_vec(), GallaiRoute::CycleGraph)
    } else {
        let d = decompose_4pc(g)?
            .decomposition()
            .cloned()
            .ok_or(DecomposeError::DichotomyViolation)?;
        (eliminate_cycles(d.elements)?, GallaiRoute::Direct)
    };
    let paths = Decomposition::new(elements, 1).canonical();
    let within_bound = paths.len() <= bound;
    Ok(GallaiResult {
        paths,
        bound,
        within_bound,
        route,
    })
}

/// Two paths from the smallest vertex to the vertex half way round.
fn split_cycle(cycle: &Walk) -> [Walk; 2] {
    let c = cycle.normalized().vertices;
    let half = c.len() / 2;
    let first = Walk::path(c[..=half].to_vec());
    let second = Walk::path(c[half..].iter().copied().chain([c[0]]).collect());
    [first, second]
}

/// Replaces every cycle by paths without increasing the element count.
fn eliminate_cycles(mut elements: Vec<Walk>) -> Result<Vec<Walk>, GallaiError> {
    let mut split = Vec::new();
    for w in elements.drain(..) {
        if w.is_cycle() && w.len() >= 8 {
            let c = w.normalized().vertices;
            split.push(Walk::path(c[..=4].to_vec()));
            split.push(Walk::path(c[4..].iter().copied().chain([c[0]]).collect()));
        } else {
            split.push(w);
        }
    }
    elements = split;
    while let Some(ci) = elements.iter().position(Walk::is_cycle) {
        let c = elements[ci].clone();
        let touching = |w: &Walk| w.vertices.iter().any(|&v| c.contains(v));
        let mut candidates: Vec<usize> = (0..elements.len())
            .filter(|&j| j != ci && touching(&elements[j]))
            .collect();
        candidates.sort_by_key(|&j| {
            (
                elements[j].is_cycle(),
                elements[j].len() > 7,
                elements[j].len(),
                j,
            )
        });
        let mut merged = None;
        for j in candidates {
            let other = &elements[j];
            let found = if other.is_cycle() {
                two_cycles(&c, other)
            } else {
                cycle_path_split(&c, other)
            };
            if let Some(paths) = found.filter(|p| p.len() <= 2) {
                merged = Some((j, paths));
                break;
            }
        }
        let (j, paths) = merged.ok_or(GallaiError::MergeExhausted {
            cycle: c.vertices.clone(),
        })?;
        let (hi, lo) = (ci.max(j), ci.min(j));
        elements.remove(hi);
        elements.remove(lo);
        elements.extend(paths);
    }
    Ok(elements)
}

/// Fewest paths partitioning the edges, by iterative deepening from the
/// odd-vertex lower bound.
pub fn min_path_decomposition_exact(g: &Graph) -> Result<(usize, Decomposition), GallaiError> {
    if g.edge_count() > MIN_PATH_MAX_EDGES {
        return Err(GallaiError::TooLarge {
            edges: g.edge_count(),
        });
    }
    if g.edge_count() == 0 {
        return Ok((0, Decomposition::new(vec![], 1)));
    }
    let components = g.edge_components().len();
    let start = (g.odd_vertices().len() / 2).max(components);
    for k in start..=g.edge_count() {
        if let Some(paths) = Solver::new(g, SearchSpec::paths(k)).solve() {
            return Ok((paths.len(), Decomposition::new(paths, 1)));
        }
    }
    unreachable!("single edges always decompose")
}
