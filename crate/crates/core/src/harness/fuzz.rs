//! Seeded checks of the merge constructions and of their precondition checker.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::decomposer::{check_preconditions, lemma_merge, MergeCase, MergeKind};
use crate::graph::{validate_decomposition, Vertex, Walk};
use crate::hanging_square::recognize_on_support;
use crate::skeleton::BuildingPath;

use super::generate::random_instance;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzFailure {
    pub trial: usize,
    pub detail: String,
    pub case: Option<MergeCase>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzReport {
    pub kind: MergeKind,
    pub seed: u64,
    pub trials: usize,
    pub passed: usize,
    pub failures: Vec<FuzzFailure>,
}

impl FuzzReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.trials
    }
}

/// Runs `lemma_merge` on `trials` random valid instances and validates each
/// output against the union of the parts.
pub fn lemma_fuzz(kind: MergeKind, trials: usize, seed: u64) -> FuzzReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for trial in 0..trials {
        let Some(case) = random_instance(kind, &mut rng) else {
            failures.push(FuzzFailure {
                trial,
                detail: "no instance generated".into(),
                case: None,
            });
            continue;
        };
        match lemma_merge(&case) {
            Ok(d) => {
                let check = validate_decomposition(&case.union(), &d);
                if !check.is_valid() {
                    failures.push(FuzzFailure {
                        trial,
                        detail: format!("{:?}", check.defects),
                        case: Some(case),
                    });
                } else if kind == MergeKind::CyclePath && d.len() != 2 {
                    failures.push(FuzzFailure {
                        trial,
                        detail: format!("{} paths", d.len()),
                        case: Some(case),
                    });
                }
            }
            Err(e) => failures.push(FuzzFailure {
                trial,
                detail: e.to_string(),
                case: Some(case),
            }),
        }
    }
    FuzzReport {
        kind,
        seed,
        trials,
        passed: trials - failures.len(),
        failures,
    }
}

/// Ways of breaking a valid instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mutation {
    /// Moves the extra part onto fresh vertices.
    Detach,
    /// Pushes a length outside the allowed range or spoils the named square.
    Reshape,
}

fn max_vertex(case: &MergeCase) -> Vertex {
    case.union().vertex_count()
}

fn detach(w: &Walk, offset: Vertex) -> Walk {
    Walk {
        kind: w.kind,
        vertices: w.vertices.iter().map(|v| v + offset).collect(),
    }
}

/// Inserts `extra` fresh vertices after the first vertex.
fn lengthen(w: &Walk, first_fresh: Vertex, extra: usize) -> Walk {
    let mut vertices = vec![w.vertices[0]];
    vertices.extend(first_fresh..first_fresh + extra);
    vertices.extend_from_slice(&w.vertices[1..]);
    Walk {
        kind: w.kind,
        vertices,
    }
}

fn mutate(case: &MergeCase, m: Mutation) -> MergeCase {
    let off = max_vertex(case);
    let mut out = case.clone();
    match (&mut out, m) {
        (MergeCase::HsLongCycle { cycle: w, .. }, Mutation::Detach)
        | (MergeCase::HsSquareCycle { cycle: w, .. }, Mutation::Detach)
        | (MergeCase::SkeletonLastPathCycle { cycle: w, .. }, Mutation::Detach)
        | (MergeCase::HsShortPath { path: w, .. }, Mutation::Detach)
        | (MergeCase::TreePath { path: w, .. }, Mutation::Detach)
        | (MergeCase::HsTwoSquares { cycle: w, .. }, Mutation::Detach)
        | (MergeCase::CyclePath { path: w, .. }, Mutation::Detach)
        | (MergeCase::TwoCycles { second: w, .. }, Mutation::Detach) => *w = detach(w, off),
        (MergeCase::TwoBasis { second, .. }, Mutation::Detach) => {
            let perm: Vec<Vertex> = (0..off).map(|v| v + off).collect();
            second.graph = second.graph.relabel(&perm);
            if let Some(cert) = recognize_on_support(&second.graph) {
                second.certificate = cert;
            }
        }
        (MergeCase::HsLongCycle { cycle, .. }, Mutation::Reshape) => {
            let v = cycle.vertices[0];
            *cycle = Walk::cycle(vec![v, off, off + 1, off + 2]);
        }
        (MergeCase::HsSquareCycle { square, .. }, Mutation::Reshape)
        | (MergeCase::HsTwoSquares { square, .. }, Mutation::Reshape) => square.swap(1, 2),
        (MergeCase::SkeletonLastPathCycle { cycle: w, .. }, Mutation::Reshape) => {
            *w = lengthen(w, off, 1)
        }
        (MergeCase::TreePath { path, .. }, Mutation::Reshape) => {
            *path = Walk::path(path.vertices[..4].to_vec())
        }
        (MergeCase::TwoBasis { first, .. }, Mutation::Reshape) => {
            let v = first.certificate.skeleton.start[1];
            let step = BuildingPath::new(vec![off, off + 1, v, off + 2, off + 3]);
            first.certificate.skeleton.steps.push(step);
        }
        (MergeCase::HsShortPath { path: w, .. }, Mutation::Reshape)
        | (MergeCase::CyclePath { path: w, .. }, Mutation::Reshape)
        | (MergeCase::TwoCycles { second: w, .. }, Mutation::Reshape) => {
            *w = lengthen(w, off, 8 - w.len().min(7))
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MutationReport {
    pub kind: MergeKind,
    pub seed: u64,
    pub trials: usize,
    pub rejected: usize,
    /// Mutated instances the checker wrongly accepted.
    pub accepted: Vec<MergeCase>,
    pub generation_failures: usize,
}

impl MutationReport {
    pub fn all_rejected(&self) -> bool {
        self.rejected == self.trials
    }
}

/// Breaks `trials` valid instances and checks the precondition checker
/// rejects every one.
pub fn mutation_fuzz(kind: MergeKind, trials: usize, seed: u64) -> MutationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6d75_7461_7465);
    let mut report = MutationReport {
        kind,
        seed,
        trials,
        rejected: 0,
        accepted: vec![],
        generation_failures: 0,
    };
    for _ in 0..trials {
        let Some(case) = random_instance(kind, &mut rng) else {
            report.generation_failures += 1;
            continue;
        };
        let m = *[Mutation::Detach, Mutation::Reshape]
            .choose(&mut rng)
            .expect("two mutations");
        let broken = mutate(&case, m);
        if check_preconditions(&broken).is_err() {
            report.rejected += 1;
        } else {
            report.accepted.push(broken);
        }
    }
    report
}
