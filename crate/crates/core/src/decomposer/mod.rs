//! The dichotomy engine: an exact oracle, the constructive tree decomposer,
//! the general decomposer and the merge constructions it relies on.

pub mod general;
pub mod merge;
pub mod tree;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Decomposition, Graph};
use crate::search::{SearchSpec, Solver, MAX_EDGES};

pub use general::{decompose_4pc, DichotomyResult, Outcome, Provenance};
pub use merge::{check_preconditions, lemma_merge, HsPart, MergeCase, MergeError, MergeKind};
pub use tree::{decompose_tree, TreeOutcome};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("graph has {edges} edges, above the exact-search limit of 64")]
    TooLarge { edges: usize },
    #[error("graph is not in the class")]
    NotInClassG,
    #[error("graph is not a tree")]
    NotATree,
    #[error("neither a decomposition nor a certificate exists, contradicting the dichotomy")]
    DichotomyViolation,
    #[error("internal: {0}")]
    Internal(String),
}

/// Outcome of the exact search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "decomposition", rename_all = "snake_case")]
pub enum Feasibility {
    Feasible(Decomposition),
    Infeasible,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }

    pub fn decomposition(self) -> Option<Decomposition> {
        match self {
            Feasibility::Feasible(d) => Some(d),
            Feasibility::Infeasible => None,
        }
    }
}

/// Exhaustive search for a decomposition into paths and cycles of length at
/// least four. Elements are anchored at the lowest uncovered edge; cycles are
/// tried before paths and shorter before longer.
pub fn decompose_4pc_exact(g: &Graph) -> Result<Feasibility, DecomposeError> {
    exact_with(g, false)
}

/// As [`decompose_4pc_exact`], remembering failed edge masks.
pub fn decompose_4pc_exact_memo(g: &Graph) -> Result<Feasibility, DecomposeError> {
    exact_with(g, true)
}

fn exact_with(g: &Graph, memoize: bool) -> Result<Feasibility, DecomposeError> {
    if g.edge_count() > MAX_EDGES {
        return Err(DecomposeError::TooLarge {
            edges: g.edge_count(),
        });
    }
    let spec = SearchSpec {
        memoize,
        ..SearchSpec::four_pc()
    };
    Ok(match Solver::new(g, spec).solve() {
        Some(elements) => Feasibility::Feasible(Decomposition::new(elements, 4)),
        None => Feasibility::Infeasible,
    })
}
