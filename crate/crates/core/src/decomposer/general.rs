//! The general decomposer: trees go to the tree recursion, cyclic graphs are
//! split along a cycle and the pieces are recombined.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::graph::{
    class_g_report, class_g_report_on_support, validate_decomposition, Decomposition, Edge, Graph,
    Vertex, Walk,
};
use crate::hanging_square::{
    recognize_hanging_square, recognize_on_support, verify_hs_certificate, HangingSquareCertificate,
};
use crate::skeleton::pendant_legs;

use super::merge::{anchors, lemma_merge, local_repair, rooted_elements, HsPart, MergeCase};
use super::tree::{TreeDecomposer, TreeResult};
use super::{decompose_4pc_exact_memo, DecomposeError, Feasibility};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Constructive,
    OracleFallback,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Decomposition(Decomposition),
    Certificate(HangingSquareCertificate),
}

/// One side of the dichotomy, with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DichotomyResult {
    #[serde(flatten)]
    pub outcome: Outcome,
    pub provenance: Provenance,
}

impl DichotomyResult {
    pub fn decomposition(&self) -> Option<&Decomposition> {
        match &self.outcome {
            Outcome::Decomposition(d) => Some(d),
            Outcome::Certificate(_) => None,
        }
    }

    pub fn certificate(&self) -> Option<&HangingSquareCertificate> {
        match &self.outcome {
            Outcome::Certificate(c) => Some(c),
            Outcome::Decomposition(_) => None,
        }
    }
}

pub fn decompose_4pc(g: &Graph) -> Result<DichotomyResult, DecomposeError> {
    if !class_g_report(g).member {
        return Err(DecomposeError::NotInClassG);
    }
    if let Some(solved) = General::default().solve(g)? {
        let outcome = match solved {
            Solved::Paths(elements) => {
                let d = Decomposition::new(elements, 4).canonical();
                if !validate_decomposition(g, &d).is_valid() {
                    return Err(DecomposeError::Internal(
                        "constructive decomposition failed validation".into(),
                    ));
                }
                Outcome::Decomposition(d)
            }
            Solved::Hs(cert) => {
                if !verify_hs_certificate(g, &cert) {
                    return Err(DecomposeError::Internal(
                        "constructive certificate failed verification".into(),
                    ));
                }
                Outcome::Certificate(cert)
            }
        };
        return Ok(DichotomyResult {
            outcome,
            provenance: Provenance::Constructive,
        });
    }
    let outcome = match decompose_4pc_exact_memo(g)? {
        Feasibility::Feasible(d) => Outcome::Decomposition(d),
        Feasibility::Infeasible => Outcome::Certificate(
            recognize_hanging_square(g).map_err(|_| DecomposeError::DichotomyViolation)?,
        ),
    };
    Ok(DichotomyResult {
        outcome,
        provenance: Provenance::OracleFallback,
    })
}

#[derive(Debug, Clone)]
enum Solved {
    Paths(Vec<Walk>),
    Hs(HangingSquareCertificate),
}

#[derive(Default)]
struct General {
    trees: TreeDecomposer,
    memo: HashMap<Vec<Edge>, Option<Solved>>,
}

impl General {
    /// `g` is in the class on its support. `None` when the constructions run
    /// out of cases.
    fn solve(&mut self, g: &Graph) -> Result<Option<Solved>, DecomposeError> {
        if let Some(r) = self.memo.get(g.edges()) {
            return Ok(r.clone());
        }
        let r = self.solve_uncached(g)?;
        self.memo.insert(g.edges().to_vec(), r.clone());
        Ok(r)
    }

    fn solve_uncached(&mut self, g: &Graph) -> Result<Option<Solved>, DecomposeError> {
        if g.is_acyclic() {
            return Ok(Some(match self.trees.solve(g)? {
                TreeResult::Paths(p) => Solved::Paths(p),
                TreeResult::Skeleton(seq) => Solved::Hs(HangingSquareCertificate {
                    skeleton: seq,
                    bunches: vec![],
                    occupations: vec![],
                }),
            }));
        }
        if let Some(cert) = recognize_on_support(g) {
            return Ok(Some(Solved::Hs(cert)));
        }
        for cycle in simple_cycles(g) {
            if let Some(paths) = self.split_off(g, &cycle)? {
                return Ok(Some(Solved::Paths(paths)));
            }
        }
        for path in pendant_paths(g) {
            if let Some(paths) = self.split_off(g, &path)? {
                return Ok(Some(Solved::Paths(paths)));
            }
        }
        Ok(None)
    }

    /// Removes `element`, solves the pieces and absorbs every hanging-square
    /// piece into the decomposable remainder.
    fn split_off(
        &mut self,
        g: &Graph,
        element: &Walk,
    ) -> Result<Option<Vec<Walk>>, DecomposeError> {
        let rest = g.without_edges(&element.edges());
        let mut elements = vec![element.clone()];
        let mut hs = Vec::new();
        for comp in rest.edge_components() {
            let piece = g.edge_subgraph(&comp);
            if !class_g_report_on_support(&piece).member {
                return Ok(None);
            }
            match self.solve(&piece)? {
                None => return Ok(None),
                Some(Solved::Paths(p)) => elements.extend(p),
                Some(Solved::Hs(cert)) => hs.push(HsPart {
                    graph: piece,
                    certificate: cert,
                }),
            }
        }
        if hs.is_empty() {
            return Ok(Some(elements));
        }
        let mut folded = Some(elements.clone());
        for part in &hs {
            folded = folded.and_then(|current| absorb(part, &current));
        }
        if folded.is_some() {
            return Ok(folded);
        }
        let others = elements[1..].to_vec();
        if let Some(mut paths) = cycle_through_three_paths(element, &hs) {
            paths.extend(others);
            return Ok(Some(paths));
        }
        Ok(joint_repair(element, &hs, &others))
    }
}

/// A cycle whose removal leaves only 3-paths, each meeting it once: walk
/// from each meeting vertex along the cycle to the next one, entering with
/// the longer leg and leaving with the shorter.
fn cycle_through_three_paths(cycle: &Walk, hs: &[HsPart]) -> Option<Vec<Walk>> {
    if !cycle.is_cycle() || hs.len() < 2 {
        return None;
    }
    let mut at = Vec::new();
    for part in hs {
        let cert = &part.certificate;
        if !cert.skeleton.steps.is_empty() || !cert.bunches.is_empty() {
            return None;
        }
        let p = &cert.skeleton.start;
        let meet: Vec<usize> = (0..4).filter(|&i| cycle.contains(p[i])).collect();
        let [i] = meet[..] else { return None };
        let (long, short): (Vec<Vertex>, Vec<Vertex>) = if i < 2 {
            (
                p[i..].iter().rev().copied().collect(),
                p[..=i].iter().rev().copied().collect(),
            )
        } else {
            (p[..=i].to_vec(), p[i..].to_vec())
        };
        at.push((cycle.position(p[i])?, long, short));
    }
    at.sort();
    let t = at.len();
    let k = cycle.vertices.len();
    let mut out = Vec::new();
    for j in 0..t {
        let (from, long, _) = &at[j];
        let (to, _, short) = &at[(j + 1) % t];
        let mut vertices = long.clone();
        let mut pos = (from + 1) % k;
        while pos != *to {
            vertices.push(cycle.vertices[pos]);
            pos = (pos + 1) % k;
        }
        vertices.extend_from_slice(short);
        out.push(Walk::path(vertices));
    }
    out.iter()
        .all(|w| w.len() >= 4 && w.is_well_formed())
        .then_some(out)
}

/// Re-decomposes `element` together with the start paths of every
/// hanging-square part at once.
fn joint_repair(element: &Walk, hs: &[HsPart], others: &[Walk]) -> Option<Vec<Walk>> {
    let touch: BTreeSet<Vertex> = element.vertices.iter().copied().collect();
    let mut base = Vec::new();
    let mut seed = Vec::new();
    for part in hs {
        let start = anchors(&part.certificate.skeleton, &touch)
            .into_iter()
            .next()?;
        seed.push(base.len());
        base.extend(rooted_elements(&part.certificate, &start)?);
    }
    base.extend(others.iter().cloned());
    local_repair(&base, &seed, std::slice::from_ref(element))
}

/// Folds a hanging-square part into a family of long elements that touches it.
fn absorb(part: &HsPart, elements: &[Walk]) -> Option<Vec<Walk>> {
    let hs_vertices: BTreeSet<Vertex> = part.graph.support().into_iter().collect();
    for (i, d) in elements.iter().enumerate() {
        if !d.vertices.iter().any(|v| hs_vertices.contains(v)) {
            continue;
        }
        let others = elements
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, w)| w.clone());
        if d.is_cycle() && d.len() >= 5 {
            let case = MergeCase::HsLongCycle {
                host: part.clone(),
                cycle: d.clone(),
            };
            if let Ok(merged) = lemma_merge(&case) {
                return Some(merged.elements.into_iter().chain(others).collect());
            }
        }
        if let Some(merged) = repair_around(&part.certificate, d) {
            return Some(merged.into_iter().chain(others).collect());
        }
    }
    None
}

/// Local repair of a hanging-square graph plus one element, rooted at each
/// brrb-path near the element in turn.
fn repair_around(cert: &HangingSquareCertificate, d: &Walk) -> Option<Vec<Walk>> {
    let mut touch: BTreeSet<Vertex> = d.vertices.iter().copied().collect();
    for b in &cert.bunches {
        for q in &b.squares {
            if q.iter().any(|v| d.contains(*v)) {
                touch.extend(q.iter().copied());
            }
        }
    }
    for start in anchors(&cert.skeleton, &touch) {
        let Some(base) = rooted_elements(cert, &start) else {
            continue;
        };
        let mut seed = vec![0];
        seed.extend(
            (1..base.len())
                .filter(|&i| base[i].is_cycle() && base[i].vertices.iter().any(|v| d.contains(*v))),
        );
        if let Some(found) = local_repair(&base, &seed, std::slice::from_ref(d)) {
            return Some(found);
        }
    }
    None
}

/// Every cycle once, shortest first, then by normalized vertex sequence.
pub(crate) fn simple_cycles(g: &Graph) -> Vec<Walk> {
    let mut out = Vec::new();
    for s in g.support() {
        let mut path = vec![s];
        let mut on = vec![false; g.vertex_count()];
        on[s] = true;
        cycles_rec(g, s, &mut path, &mut on, &mut out);
    }
    out.sort_by(|a: &Walk, b: &Walk| (a.len(), &a.vertices).cmp(&(b.len(), &b.vertices)));
    out
}

fn cycles_rec(g: &Graph, s: Vertex, path: &mut Vec<Vertex>, on: &mut [bool], out: &mut Vec<Walk>) {
    let cur = *path.last().expect("non-empty path");
    for &w in g.neighbors(cur) {
        if w == s && path.len() >= 3 && path[1] < cur {
            out.push(Walk::cycle(path.clone()));
        } else if w > s && !on[w] {
            on[w] = true;
            path.push(w);
            cycles_rec(g, s, path, on, out);
            path.pop();
            on[w] = false;
        }
    }
}

/// Paths of length at least 4 made of one or two pendant legs at a vertex of
/// degree at least three.
fn pendant_paths(g: &Graph) -> Vec<Walk> {
    let mut out = Vec::new();
    for w in g.support() {
        if g.degree(w) < 3 {
            continue;
        }
        let legs = pendant_legs(g, w);
        for (i, a) in legs.iter().enumerate() {
            if a.len() > 4 {
                out.push(Walk::path(a.clone()));
            }
            for b in &legs[i + 1..] {
                if a.len() + b.len() >= 6 {
                    let mut p: Vec<Vertex> = a.iter().rev().copied().collect();
                    p.extend_from_slice(&b[1..]);
                    out.push(Walk::path(p));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let c5 = Graph::cycle(&[0, 1, 2, 3, 4]);
        let r = decompose_4pc(&c5).unwrap();
        assert_eq!(
            r.decomposition().unwrap().elements,
            vec![Walk::cycle(vec![0, 1, 2, 3, 4])]
        );
        assert_eq!(r.provenance, Provenance::Constructive);
        let eight = Graph::from_edges([
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (0, 4),
            (4, 5),
            (5, 6),
            (6, 0),
        ])
        .unwrap();
        let r = decompose_4pc(&eight).unwrap();
        assert!(validate_decomposition(&eight, r.decomposition().unwrap()).is_valid());
        let two_bunch =
            Graph::from_edges([(0, 1), (1, 2), (2, 3), (0, 4), (4, 2), (0, 5), (5, 2)]).unwrap();
        let r = decompose_4pc(&two_bunch).unwrap();
        assert!(verify_hs_certificate(&two_bunch, r.certificate().unwrap()));
    }

    #[test]
    fn cycles_listed_once() {
        let k33 = Graph::from_edges([
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 4),
            (2, 5),
        ])
        .unwrap();
        let cycles = simple_cycles(&k33);
        assert_eq!(cycles.iter().filter(|c| c.len() == 4).count(), 9);
        assert_eq!(cycles.iter().filter(|c| c.len() == 6).count(), 6);
    }
}
