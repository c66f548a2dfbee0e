//! Bunches of squares, hanging-square recognition and certificate checking.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{
    brrb_paths_unchecked, class_g_report, class_g_report_on_support, edge, Decomposition, Edge,
    Graph, Vertex, Walk,
};
use crate::skeleton::{check_building_sequence, recognize_tree, BuildingSequence, SequenceDefect};

/// Squares sharing the non-adjacent joints `a`, `b` and otherwise disjoint.
/// Each square is listed as `[a, m, b, m']`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bunch {
    pub joints: (Vertex, Vertex),
    pub squares: Vec<[Vertex; 4]>,
    /// Joints lying on the skeleton.
    pub identified: Vec<Vertex>,
}

impl Bunch {
    pub fn k(&self) -> usize {
        self.squares.len()
    }

    pub fn is_two_bunch(&self) -> bool {
        self.identified.len() == 2
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.squares.iter().flat_map(square_edges).collect()
    }

    pub fn vertices(&self) -> BTreeSet<Vertex> {
        self.squares.iter().flatten().copied().collect()
    }

    pub fn middles(&self) -> Vec<Vertex> {
        self.squares.iter().flat_map(|q| [q[1], q[3]]).collect()
    }

    pub fn cycles(&self) -> Vec<Walk> {
        self.squares
            .iter()
            .map(|q| Walk::cycle(q.to_vec()))
            .collect()
    }
}

fn square_edges(q: &[Vertex; 4]) -> [Edge; 4] {
    [
        edge(q[0], q[1]),
        edge(q[1], q[2]),
        edge(q[2], q[3]),
        edge(q[3], q[0]),
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OccupiedAt {
    X0X2,
    X1X3,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OccupationRecord {
    pub path: [Vertex; 4],
    pub at: OccupiedAt,
    /// Index into the certificate's bunch list.
    pub bunch: usize,
}

impl OccupationRecord {
    /// The path read so that the occupied pair sits at positions 0 and 2.
    fn oriented(&self) -> [Vertex; 4] {
        let p = self.path;
        match self.at {
            OccupiedAt::X0X2 => p,
            OccupiedAt::X1X3 => [p[3], p[2], p[1], p[0]],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HangingSquareCertificate {
    pub skeleton: BuildingSequence,
    pub bunches: Vec<Bunch>,
    pub occupations: Vec<OccupationRecord>,
}

impl HangingSquareCertificate {
    pub fn skeleton_graph(&self, n: usize) -> Graph {
        self.skeleton.to_graph(n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
#[serde(tag = "defect", rename_all = "snake_case")]
pub enum CertificateDefect {
    #[error("graph is not in the class")]
    NotInClassG,
    #[error("skeleton: {0}")]
    Skeleton(SequenceDefect),
    #[error("bunch {bunch} is malformed")]
    MalformedBunch { bunch: usize },
    #[error("bunch {bunch} has no joint on the skeleton or a wrong identified list")]
    Identification { bunch: usize },
    #[error("bunch {bunch} touches the skeleton outside its identified joints")]
    BunchOffSkeleton { bunch: usize },
    #[error("bunches {first} and {second} meet outside the skeleton")]
    BunchOverlap { first: usize, second: usize },
    #[error("bunches {first} and {second} share a joint pair")]
    NotMaximal { first: usize, second: usize },
    #[error("skeleton and bunch edges do not partition the graph")]
    Partition,
    #[error("2-bunch {bunch} needs exactly one occupation record")]
    Occupation { bunch: usize },
    #[error("occupation record {record} is invalid")]
    BadRecord { record: usize },
    #[error("two records occupy the same brrb-path")]
    PathOccupiedTwice,
    #[error("degree conditions fail for record {record}")]
    DegreeCondition { record: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum HsError {
    #[error("graph is not in the class")]
    NotInClassG,
    #[error("graph is not a hanging-square graph")]
    NotHangingSquare,
    #[error("certificate does not verify")]
    UnverifiedCertificate,
}

/// All 4-cycles with exactly two or three vertices of degree 2.
pub fn find_good_squares(g: &Graph) -> Vec<Walk> {
    squares(g)
        .into_iter()
        .filter(|q| {
            let low = q.iter().filter(|&&v| g.degree(v) == 2).count();
            low == 2 || low == 3
        })
        .map(|q| Walk::cycle(q.to_vec()).normalized())
        .collect()
}

/// Every 4-cycle once, as `[a, x, c, y]` with `a` its smallest vertex and `x < y`.
pub(crate) fn squares(g: &Graph) -> Vec<[Vertex; 4]> {
    let mut out = Vec::new();
    for a in g.support() {
        let nbrs: Vec<_> = g.neighbors(a).iter().copied().filter(|&x| x > a).collect();
        for (i, &x) in nbrs.iter().enumerate() {
            for &y in &nbrs[i + 1..] {
                for &c in g.neighbors(x) {
                    if c > a && c != y && g.has_edge(c, y) {
                        out.push([a, x, c, y]);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Joint pair a good square points at, if any.
fn joint_pair(g: &Graph, q: &[Vertex]) -> Option<(Vertex, Vertex)> {
    let low: Vec<usize> = (0..4).filter(|&i| g.degree(q[i]) == 2).collect();
    let pair = match low.len() {
        2 if (low[1] - low[0]) == 2 => (q[(low[0] + 1) % 4], q[(low[0] + 3) % 4]),
        3 => {
            let high = (0..4).find(|i| !low.contains(i)).unwrap();
            (q[high], q[(high + 2) % 4])
        }
        _ => return None,
    };
    Some(edge(pair.0, pair.1))
}

/// Degree-2 common neighbours of a non-adjacent pair.
fn low_middles(g: &Graph, a: Vertex, b: Vertex) -> Vec<Vertex> {
    g.neighbors(a)
        .iter()
        .copied()
        .filter(|&m| g.degree(m) == 2 && g.has_edge(m, b))
        .collect()
}

/// For every joint pair pointed at by a good square, the bunch formed by
/// pairing its degree-2 common neighbours in increasing order. Identified
/// joints are those with degree above 2k.
pub fn find_maximal_bunches(g: &Graph) -> Vec<Bunch> {
    let pairs: BTreeSet<(Vertex, Vertex)> =
        squares(g).iter().filter_map(|q| joint_pair(g, q)).collect();
    pairs
        .into_iter()
        .filter_map(|(a, b)| {
            let m = low_middles(g, a, b);
            let squares: Vec<[Vertex; 4]> = m.chunks_exact(2).map(|p| [a, p[0], b, p[1]]).collect();
            if squares.is_empty() {
                return None;
            }
            let k = squares.len();
            let identified = [a, b]
                .into_iter()
                .filter(|&j| g.degree(j) > 2 * k)
                .collect();
            Some(Bunch {
                joints: (a, b),
                squares,
                identified,
            })
        })
        .collect()
}

/// Decides whether `g` is a hanging-square graph and returns a verified
/// certificate when it is.
pub fn recognize_hanging_square(g: &Graph) -> Result<HangingSquareCertificate, HsError> {
    if !class_g_report(g).member {
        return Err(HsError::NotInClassG);
    }
    recognize_on_support(g).ok_or(HsError::NotHangingSquare)
}

/// Recognition for an edge set whose support is in the class.
pub(crate) fn recognize_on_support(g: &Graph) -> Option<HangingSquareCertificate> {
    let mut bunches = find_maximal_bunches(g);
    let mut used = BTreeSet::new();
    for b in &bunches {
        for e in b.edges() {
            if !used.insert(e) {
                return None;
            }
        }
    }
    let rest = g.without_edges(&used);
    if !rest.is_tree() {
        return None;
    }
    let seq = recognize_tree(&rest)?;
    for b in &mut bunches {
        b.identified = [b.joints.0, b.joints.1]
            .into_iter()
            .filter(|&j| rest.has_vertex(j))
            .collect();
    }
    let occupations = assign_occupations(g, &rest, &bunches)?;
    let cert = HangingSquareCertificate {
        skeleton: seq,
        bunches,
        occupations,
    };
    check_on_support(g, &cert).ok().map(|_| cert)
}

fn assign_occupations(
    g: &Graph,
    skeleton: &Graph,
    bunches: &[Bunch],
) -> Option<Vec<OccupationRecord>> {
    let brrb = brrb_paths_unchecked(skeleton);
    let mut options: Vec<(usize, Vec<OccupationRecord>)> = Vec::new();
    for (i, b) in bunches.iter().enumerate() {
        if !b.is_two_bunch() {
            continue;
        }
        let mut opts = Vec::new();
        for p in &brrb {
            let x = [p.vertices[0], p.vertices[1], p.vertices[2], p.vertices[3]];
            for at in [OccupiedAt::X0X2, OccupiedAt::X1X3] {
                let rec = OccupationRecord {
                    path: x,
                    at,
                    bunch: i,
                };
                let o = rec.oriented();
                if edge(o[0], o[2]) == b.joints && degree_condition(g, b, &o) {
                    opts.push(rec);
                }
            }
        }
        options.push((i, opts));
    }
    options.sort_by_key(|(_, o)| o.len());
    let mut chosen = Vec::new();
    let mut taken = BTreeSet::new();
    if match_paths(&options, 0, &mut taken, &mut chosen) {
        chosen.sort_by_key(|r: &OccupationRecord| r.bunch);
        Some(chosen)
    } else {
        None
    }
}

fn match_paths(
    options: &[(usize, Vec<OccupationRecord>)],
    at: usize,
    taken: &mut BTreeSet<[Vertex; 4]>,
    chosen: &mut Vec<OccupationRecord>,
) -> bool {
    let Some((_, opts)) = options.get(at) else {
        return true;
    };
    for rec in opts {
        if taken.insert(rec.path) {
            chosen.push(rec.clone());
            if match_paths(options, at + 1, taken, chosen) {
                return true;
            }
            chosen.pop();
            taken.remove(&rec.path);
        }
    }
    false
}

/// Item (iii) for a path `x` read so that the bunch occupies `x[0]`, `x[2]`.
fn degree_condition(g: &Graph, b: &Bunch, x: &[Vertex; 4]) -> bool {
    if g.degree(x[1]) != 2 {
        return false;
    }
    let h = g.without_edges(&b.edges());
    let first = h.degree(x[0]) >= 1 && h.degree(x[2]) == 2 && h.degree(x[3]) >= 1;
    let second = h.degree(x[0]) == 1 && h.degree(x[2]) > 2 && h.degree(x[3]) >= 1;
    first != second
}

pub fn verify_hs_certificate(g: &Graph, cert: &HangingSquareCertificate) -> bool {
    check_hs_certificate(g, cert).is_ok()
}

/// Full check of a certificate, reporting the first defect found.
pub fn check_hs_certificate(
    g: &Graph,
    cert: &HangingSquareCertificate,
) -> Result<(), CertificateDefect> {
    if !class_g_report(g).member {
        return Err(CertificateDefect::NotInClassG);
    }
    check_on_support(g, cert)
}

pub(crate) fn check_on_support(
    g: &Graph,
    cert: &HangingSquareCertificate,
) -> Result<(), CertificateDefect> {
    if !class_g_report_on_support(g).member {
        return Err(CertificateDefect::NotInClassG);
    }
    let seq_vertices = cert.skeleton.vertices();
    if seq_vertices.last().is_some_and(|&v| v >= g.vertex_count()) {
        return Err(CertificateDefect::Partition);
    }
    let t = cert.skeleton.to_graph(g.vertex_count());
    if t.edge_count() != cert.skeleton.edge_count()
        || t.edges().iter().any(|&(u, v)| !g.has_edge(u, v))
    {
        return Err(CertificateDefect::Partition);
    }
    check_building_sequence(&t, &cert.skeleton).map_err(CertificateDefect::Skeleton)?;

    let mut covered: BTreeSet<Edge> = t.edges().iter().copied().collect();
    for (i, b) in cert.bunches.iter().enumerate() {
        let (a, c) = b.joints;
        if a == c || b.squares.is_empty() || g.has_edge(a, c) {
            return Err(CertificateDefect::MalformedBunch { bunch: i });
        }
        let mut middles = BTreeSet::new();
        for q in &b.squares {
            let ok = (q[0] == a && q[2] == c || q[0] == c && q[2] == a)
                && q[1] != q[3]
                && ![a, c].contains(&q[1])
                && ![a, c].contains(&q[3])
                && middles.insert(q[1])
                && middles.insert(q[3]);
            if !ok {
                return Err(CertificateDefect::MalformedBunch { bunch: i });
            }
            for (u, v) in square_edges(q) {
                if !g.has_edge(u, v) || !covered.insert((u, v)) {
                    return Err(CertificateDefect::Partition);
                }
            }
        }
        let on_tree: Vec<Vertex> = [a, c].into_iter().filter(|&j| t.has_vertex(j)).collect();
        let mut listed = b.identified.clone();
        listed.sort_unstable();
        let mut expected = on_tree.clone();
        expected.sort_unstable();
        if on_tree.is_empty() || listed != expected {
            return Err(CertificateDefect::Identification { bunch: i });
        }
        if middles.iter().any(|&m| t.has_vertex(m)) {
            return Err(CertificateDefect::BunchOffSkeleton { bunch: i });
        }
    }
    if covered.len() != g.edge_count() {
        return Err(CertificateDefect::Partition);
    }
    for (i, b) in cert.bunches.iter().enumerate() {
        for (j, c) in cert.bunches.iter().enumerate().skip(i + 1) {
            if edge(b.joints.0, b.joints.1) == edge(c.joints.0, c.joints.1) {
                return Err(CertificateDefect::NotMaximal {
                    first: i,
                    second: j,
                });
            }
            if b.vertices()
                .intersection(&c.vertices())
                .any(|&v| !t.has_vertex(v))
            {
                return Err(CertificateDefect::BunchOverlap {
                    first: i,
                    second: j,
                });
            }
        }
    }

    let brrb: BTreeSet<Walk> = brrb_paths_unchecked(&t).into_iter().collect();
    let mut per_bunch: BTreeMap<usize, usize> = BTreeMap::new();
    let mut paths = BTreeSet::new();
    for (r, rec) in cert.occupations.iter().enumerate() {
        let Some(b) = cert.bunches.get(rec.bunch) else {
            return Err(CertificateDefect::BadRecord { record: r });
        };
        let walk = Walk::path(rec.path.to_vec()).normalized();
        let x = rec.oriented();
        if !b.is_two_bunch()
            || !brrb.contains(&walk)
            || edge(x[0], x[2]) != edge(b.joints.0, b.joints.1)
        {
            return Err(CertificateDefect::BadRecord { record: r });
        }
        if !paths.insert(walk) {
            return Err(CertificateDefect::PathOccupiedTwice);
        }
        if !degree_condition(g, b, &x) {
            return Err(CertificateDefect::DegreeCondition { record: r });
        }
        *per_bunch.entry(rec.bunch).or_default() += 1;
    }
    for (i, b) in cert.bunches.iter().enumerate() {
        let count = per_bunch.get(&i).copied().unwrap_or(0);
        if (b.is_two_bunch() && count != 1) || (!b.is_two_bunch() && count != 0) {
            return Err(CertificateDefect::Occupation { bunch: i });
        }
    }
    Ok(())
}

/// Start path, building paths and bunch squares: one element of length 3,
/// the rest of length 4 or 6.
pub fn hs_canonical_decomposition(
    g: &Graph,
    cert: &HangingSquareCertificate,
) -> Result<Decomposition, HsError> {
    if !verify_hs_certificate(g, cert) {
        return Err(HsError::UnverifiedCertificate);
    }
    Ok(canonical_elements(cert))
}

pub(crate) fn canonical_elements(cert: &HangingSquareCertificate) -> Decomposition {
    let mut elements = cert.skeleton.paths();
    for b in &cert.bunches {
        elements.extend(b.cycles());
    }
    Decomposition::new(elements, 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate_decomposition;

    /// 0-1-2-3 with the square 0-4-5-6 glued at the end 0.
    fn glued_square() -> Graph {
        Graph::from_edges([(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (5, 6), (6, 0)]).unwrap()
    }

    /// brrb-path 0-1-2-3 with 4, 5 adjacent to both 0 and 2.
    fn two_bunch() -> Graph {
        Graph::from_edges([(0, 1), (1, 2), (2, 3), (0, 4), (4, 2), (0, 5), (5, 2)]).unwrap()
    }

    #[test]
    fn good_squares() {
        assert!(find_good_squares(&Graph::cycle(&[0, 1, 2, 3])).is_empty());
        assert_eq!(
            find_good_squares(&glued_square()),
            vec![Walk::cycle(vec![0, 4, 5, 6])]
        );
        let g = two_bunch();
        let good = find_good_squares(&g);
        // squares 0-4-2-5 (two degree-2 vertices) and 0-1-2-4, 0-1-2-5 (three)
        let expected: Vec<Walk> = {
            let mut v: Vec<Walk> = squares(&g)
                .into_iter()
                .filter(|q| matches!(q.iter().filter(|&&x| g.degree(x) == 2).count(), 2 | 3))
                .map(|q| Walk::cycle(q.to_vec()).normalized())
                .collect();
            v.sort();
            v
        };
        assert_eq!(good, expected);
        assert!(good.contains(&Walk::cycle(vec![0, 4, 2, 5])));
    }

    #[test]
    fn maximal_bunches() {
        let k23 = Graph::from_edges([(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let b = find_maximal_bunches(&k23);
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].joints, (0, 1));
        assert_eq!(b[0].k(), 1);
        let b = find_maximal_bunches(&glued_square());
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].identified, vec![0]);
        let two = Graph::from_edges([
            (0, 1),
            (1, 2),
            (2, 3),
            (0, 4),
            (4, 5),
            (5, 6),
            (6, 0),
            (3, 7),
            (7, 8),
            (8, 9),
            (9, 3),
        ])
        .unwrap();
        assert_eq!(find_maximal_bunches(&two).len(), 2);
    }

    #[test]
    fn recognizes_glued_square() {
        let g = glued_square();
        let cert = recognize_hanging_square(&g).unwrap();
        assert!(verify_hs_certificate(&g, &cert));
        assert_eq!(cert.bunches.len(), 1);
        assert!(cert.occupations.is_empty());
        let d = hs_canonical_decomposition(&g, &cert).unwrap();
        assert!(validate_decomposition(&g, &d).is_valid());
        let mut lens: Vec<usize> = d.elements.iter().map(Walk::len).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![3, 4]);
    }

    #[test]
    fn recognizes_two_bunch() {
        let g = two_bunch();
        let cert = recognize_hanging_square(&g).unwrap();
        assert!(verify_hs_certificate(&g, &cert));
        assert_eq!(cert.occupations.len(), 1);
        let d = hs_canonical_decomposition(&g, &cert).unwrap();
        assert!(validate_decomposition(&g, &d).is_valid());
        assert_eq!(d.len(), 2);
    }

    #[test]
    fn rejects_non_examples() {
        assert_eq!(
            recognize_hanging_square(&Graph::cycle(&[0, 1, 2, 3])),
            Err(HsError::NotHangingSquare)
        );
        assert_eq!(
            recognize_hanging_square(&Graph::path(&[0, 1, 2])),
            Err(HsError::NotInClassG)
        );
        let p4 = Graph::path(&[0, 1, 2, 3, 4]);
        let cert = HangingSquareCertificate {
            skeleton: BuildingSequence {
                start: vec![0, 1, 2, 3],
                steps: vec![],
            },
            bunches: vec![],
            occupations: vec![],
        };
        assert!(!verify_hs_certificate(&p4, &cert));
    }

    #[test]
    fn tampered_joint_fails() {
        let g = glued_square();
        let mut cert = recognize_hanging_square(&g).unwrap();
        cert.bunches[0].joints = (4, 6);
        assert!(!verify_hs_certificate(&g, &cert));
    }
}
