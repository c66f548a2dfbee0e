//! Simple undirected graphs, paths/cycles on them, parity colorings and the
//! decomposition validator every other module leans on.
//!
//! Vertex ids are dense integers `0..n`. Subgraphs produced by edge deletion
//! keep the id space of their parent; vertices left without edges are simply
//! isolated. Structural predicates that talk about "the graph" in the sense of
//! an edge set (`is_tree`, `edge_components`, ...) ignore isolated vertices,
//! while [`Graph::is_connected`] is strict.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub type Vertex = usize;

/// An undirected edge, always stored with the smaller endpoint first.
pub type Edge = (Vertex, Vertex);

#[inline]
pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("edge {0}-{1} has an endpoint outside 0..{2}")]
    VertexOutOfRange(Vertex, Vertex, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("graph is not a tree")]
pub struct NotATree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("vertex {0} does not lie on the walk")]
pub struct VertexNotOnWalk(pub Vertex);

/// Immutable simple graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Graph, GraphError> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u, v, n));
            }
            if !set.insert(edge(u, v)) {
                let (a, b) = edge(u, v);
                return Err(GraphError::DuplicateEdge(a, b));
            }
        }
        Ok(Self::from_sorted(n, set.into_iter().collect()))
    }

    /// Builds a graph whose vertex count is one more than the largest endpoint.
    pub fn from_edges(
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Graph, GraphError> {
        let edges: Vec<_> = edges.into_iter().collect();
        let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        Graph::new(n, edges)
    }

    /// A path on `vertices` in the given order.
    pub fn path(vertices: &[Vertex]) -> Graph {
        Graph::from_edges(vertices.windows(2).map(|w| (w[0], w[1])))
            .expect("path vertices must be distinct")
    }

    /// A cycle on `vertices` in the given order.
    pub fn cycle(vertices: &[Vertex]) -> Graph {
        let k = vertices.len();
        Graph::from_edges((0..k).map(|i| (vertices[i], vertices[(i + 1) % k])))
            .expect("cycle vertices must be distinct")
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of edges, ℓ(G).
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj.get(v).map_or(0, Vec::len)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of the edge in [`Graph::edges`].
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.edges.binary_search(&edge(u, v)).ok()
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.degree(v) > 0
    }

    /// Vertices with at least one incident edge.
    pub fn support(&self) -> Vec<Vertex> {
        (0..self.n).filter(|&v| self.degree(v) > 0).collect()
    }

    pub fn odd_vertices(&self) -> Vec<Vertex> {
        (0..self.n).filter(|&v| self.degree(v) % 2 == 1).collect()
    }

    pub fn leaves(&self) -> Vec<Vertex> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Same vertex set, edges restricted to `keep`.
    pub fn edge_subgraph<'a>(&self, keep: impl IntoIterator<Item = &'a Edge>) -> Graph {
        let set: BTreeSet<Edge> = keep
            .into_iter()
            .map(|&(u, v)| edge(u, v))
            .filter(|&(u, v)| self.has_edge(u, v))
            .collect();
        Graph::from_sorted(self.n, set.into_iter().collect())
    }

    /// G − E′ in the usual sense; isolated vertices stay in the id space.
    pub fn without_edges<'a>(&self, removed: impl IntoIterator<Item = &'a Edge>) -> Graph {
        let removed: BTreeSet<Edge> = removed.into_iter().map(|&(u, v)| edge(u, v)).collect();
        let kept = self
            .edges
            .iter()
            .copied()
            .filter(|e| !removed.contains(e))
            .collect();
        Graph::from_sorted(self.n, kept)
    }

    /// Union of edge sets; the vertex count grows to cover both operands.
    pub fn union(&self, other: &Graph) -> Graph {
        let mut set: BTreeSet<Edge> = self.edges.iter().copied().collect();
        set.extend(other.edges.iter().copied());
        Graph::from_sorted(self.n.max(other.n), set.into_iter().collect())
    }

    /// Adds edges, growing the vertex count when needed. Existing edges are kept once.
    pub fn with_edges<'a>(&self, extra: impl IntoIterator<Item = &'a Edge>) -> Graph {
        let mut set: BTreeSet<Edge> = self.edges.iter().copied().collect();
        let mut n = self.n;
        for &(u, v) in extra {
            n = n.max(u.max(v) + 1);
            set.insert(edge(u, v));
        }
        Graph::from_sorted(n, set.into_iter().collect())
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        let n = perm.iter().map(|&p| p + 1).max().unwrap_or(0).max(self.n);
        let set: BTreeSet<Edge> = self
            .edges
            .iter()
            .map(|&(u, v)| edge(perm[u], perm[v]))
            .collect();
        Graph::from_sorted(n, set.into_iter().collect())
    }

    /// Renumbers the support to `0..k` in increasing id order. Returns the map
    /// from new ids back to old ones.
    pub fn compact(&self) -> (Graph, Vec<Vertex>) {
        let back = self.support();
        let mut fwd = vec![usize::MAX; self.n];
        for (i, &v) in back.iter().enumerate() {
            fwd[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| edge(fwd[u], fwd[v]))
            .collect::<BTreeSet<_>>();
        (
            Graph::from_sorted(back.len(), edges.into_iter().collect()),
            back,
        )
    }

    pub fn bfs_distances(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Strict connectivity: every vertex of `0..n` is reachable. The empty
    /// graph (n = 0) is not connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Connectivity of the edge set, ignoring isolated vertices.
    pub fn is_connected_ignoring_isolated(&self) -> bool {
        match self.support().first() {
            None => false,
            Some(&s) => {
                let dist = self.bfs_distances(s);
                (0..self.n).all(|v| self.degree(v) == 0 || dist[v].is_some())
            }
        }
    }

    /// True when the edge set forms a single tree (isolated vertices ignored).
    pub fn is_tree(&self) -> bool {
        let support = self.support().len();
        support > 0 && self.edges.len() + 1 == support && self.is_connected_ignoring_isolated()
    }

    pub fn is_acyclic(&self) -> bool {
        self.edge_components().iter().all(|c| {
            let vs: BTreeSet<Vertex> = c.iter().flat_map(|&(u, v)| [u, v]).collect();
            c.len() + 1 == vs.len()
        })
    }

    /// Connected components of the edge set, each sorted, listed by smallest edge.
    pub fn edge_components(&self) -> Vec<Vec<Edge>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if comp[s] != usize::MAX || self.degree(s) == 0 {
                continue;
            }
            let mut stack = vec![s];
            comp[s] = count;
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        let mut out = vec![Vec::new(); count];
        for &(u, v) in &self.edges {
            out[comp[u]].push((u, v));
        }
        out
    }

    /// The unique path between two vertices of a tree.
    pub fn tree_path(&self, from: Vertex, to: Vertex) -> Option<Vec<Vertex>> {
        let mut parent = vec![usize::MAX; self.n];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                break;
            }
            for &w in &self.adj[u] {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        if parent[to] == usize::MAX {
            return None;
        }
        let mut path = vec![to];
        let mut cur = to;
        while cur != from {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        Some(path)
    }

    /// Black for odd degree, red for even degree. No tree check.
    pub(crate) fn parity_colors(&self) -> Vec<Color> {
        (0..self.n)
            .map(|v| {
                if self.degree(v) % 2 == 1 {
                    Color::Black
                } else {
                    Color::Red
                }
            })
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {:?})", self.n, self.edges)
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    vertex_count: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphRepr {
            vertex_count: self.n,
            edges: self.edges.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(d)?;
        Graph::new(repr.vertex_count, repr.edges).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WalkKind {
    Path,
    Cycle,
}

/// A path or a cycle given by its vertex sequence. Cycles do not repeat the
/// first vertex at the end.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Walk {
    pub kind: WalkKind,
    pub vertices: Vec<Vertex>,
}

impl Walk {
    pub fn path(vertices: Vec<Vertex>) -> Walk {
        Walk {
            kind: WalkKind::Path,
            vertices,
        }
    }

    pub fn cycle(vertices: Vec<Vertex>) -> Walk {
        Walk {
            kind: WalkKind::Cycle,
            vertices,
        }
    }

    pub fn is_path(&self) -> bool {
        self.kind == WalkKind::Path
    }

    pub fn is_cycle(&self) -> bool {
        self.kind == WalkKind::Cycle
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        match self.kind {
            WalkKind::Path => self.vertices.len().saturating_sub(1),
            WalkKind::Cycle => self.vertices.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn edges(&self) -> Vec<Edge> {
        let vs = &self.vertices;
        let mut out: Vec<Edge> = vs.windows(2).map(|w| edge(w[0], w[1])).collect();
        if self.kind == WalkKind::Cycle && vs.len() >= 2 {
            out.push(edge(vs[vs.len() - 1], vs[0]));
        }
        out
    }

    /// No repeated vertex; cycles need at least three vertices; paths at least one.
    pub fn is_well_formed(&self) -> bool {
        let distinct: BTreeSet<_> = self.vertices.iter().collect();
        distinct.len() == self.vertices.len()
            && match self.kind {
                WalkKind::Path => !self.vertices.is_empty(),
                WalkKind::Cycle => self.vertices.len() >= 3,
            }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    pub fn first(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn last(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    pub fn reversed(&self) -> Walk {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Walk {
            kind: self.kind,
            vertices,
        }
    }

    /// Deterministic representative: paths read from the smaller end, cycles
    /// start at their smallest vertex and continue towards the smaller neighbor.
    pub fn normalized(&self) -> Walk {
        match self.kind {
            WalkKind::Path => {
                if self.vertices.last() < self.vertices.first() {
                    self.reversed()
                } else {
                    self.clone()
                }
            }
            WalkKind::Cycle => {
                let k = self.vertices.len();
                if k == 0 {
                    return self.clone();
                }
                let start = (0..k).min_by_key(|&i| self.vertices[i]).unwrap();
                let fwd: Vec<_> = (0..k).map(|i| self.vertices[(start + i) % k]).collect();
                let bwd: Vec<_> = (0..k).map(|i| self.vertices[(start + k - i) % k]).collect();
                Walk::cycle(fwd.min(bwd))
            }
        }
    }

    pub fn lies_in(&self, g: &Graph) -> bool {
        self.edges().iter().all(|&(u, v)| g.has_edge(u, v))
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.edges()).expect("well-formed walk")
    }

    /// Concatenates two paths sharing an end (`self.last() == other.first()`).
    pub fn join(&self, other: &Walk) -> Walk {
        debug_assert_eq!(self.last(), other.first());
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        Walk::path(vertices)
    }
}

/// Partition of a graph's edges into paths and cycles, each of length at least
/// `min_length`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub elements: Vec<Walk>,
    pub min_length: usize,
}

impl Decomposition {
    pub fn new(elements: Vec<Walk>, min_length: usize) -> Decomposition {
        Decomposition {
            elements,
            min_length,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn total_length(&self) -> usize {
        self.elements.iter().map(Walk::len).sum()
    }

    pub fn path_count(&self) -> usize {
        self.elements.iter().filter(|w| w.is_path()).count()
    }

    /// Elements normalized and sorted.
    pub fn canonical(&self) -> Decomposition {
        let mut elements: Vec<_> = self.elements.iter().map(Walk::normalized).collect();
        elements.sort();
        Decomposition {
            elements,
            min_length: self.min_length,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "defect", rename_all = "snake_case")]
pub enum Defect {
    MalformedElement {
        index: usize,
    },
    NotInGraph {
        index: usize,
        edge: Edge,
    },
    TooShort {
        index: usize,
        length: usize,
        min_length: usize,
    },
    CoveredTwice {
        edge: Edge,
    },
    Uncovered {
        edge: Edge,
    },
}

/// Outcome of [`validate_decomposition`]; empty `defects` means valid.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionCheck {
    pub defects: Vec<Defect>,
}

impl DecompositionCheck {
    pub fn is_valid(&self) -> bool {
        self.defects.is_empty()
    }
}

pub fn validate_decomposition(g: &Graph, d: &Decomposition) -> DecompositionCheck {
    let mut defects = Vec::new();
    let mut covered = vec![false; g.edge_count()];
    for (index, w) in d.elements.iter().enumerate() {
        if !w.is_well_formed() {
            defects.push(Defect::MalformedElement { index });
            continue;
        }
        if w.len() < d.min_length {
            defects.push(Defect::TooShort {
                index,
                length: w.len(),
                min_length: d.min_length,
            });
        }
        for e in w.edges() {
            match g.edge_index(e.0, e.1) {
                None => defects.push(Defect::NotInGraph { index, edge: e }),
                Some(i) if covered[i] => defects.push(Defect::CoveredTwice { edge: e }),
                Some(i) => covered[i] = true,
            }
        }
    }
    for (i, &c) in covered.iter().enumerate() {
        if !c {
            defects.push(Defect::Uncovered { edge: g.edges()[i] });
        }
    }
    DecompositionCheck { defects }
}

pub fn is_triangle_free(g: &Graph) -> bool {
    g.edges().iter().all(|&(u, v)| {
        let (a, b) = (g.neighbors(u), g.neighbors(v));
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    })
}

/// Minimum distance between two odd-degree vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OddDistance {
    Finite(usize),
    Infinite,
}

impl OddDistance {
    pub fn at_least(self, k: usize) -> bool {
        match self {
            OddDistance::Finite(d) => d >= k,
            OddDistance::Infinite => true,
        }
    }
}

impl fmt::Display for OddDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OddDistance::Finite(d) => write!(f, "{d}"),
            OddDistance::Infinite => write!(f, "infinity"),
        }
    }
}

impl Serialize for OddDistance {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            OddDistance::Finite(d) => s.serialize_u64(*d as u64),
            OddDistance::Infinite => s.serialize_str("infinity"),
        }
    }
}

impl<'de> Deserialize<'de> for OddDistance {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(usize),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(n) => Ok(OddDistance::Finite(n)),
            Raw::Text(t) if t == "infinity" => Ok(OddDistance::Infinite),
            Raw::Text(t) => Err(serde::de::Error::custom(format!("bad odd distance {t:?}"))),
        }
    }
}

pub fn odd_distance(g: &Graph) -> OddDistance {
    let odd = g.odd_vertices();
    let mut best = OddDistance::Infinite;
    for (i, &s) in odd.iter().enumerate() {
        let dist = g.bfs_distances(s);
        for &t in &odd[i + 1..] {
            if let Some(d) = dist[t] {
                best = best.min(OddDistance::Finite(d));
            }
        }
    }
    best
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassGReport {
    pub connected: bool,
    pub triangle_free: bool,
    pub odd_distance: OddDistance,
    pub member: bool,
}

pub fn class_g_report(g: &Graph) -> ClassGReport {
    report(g, g.is_connected())
}

/// Membership of the edge set, ignoring isolated vertices. Used on subgraphs
/// obtained by edge deletion.
pub(crate) fn class_g_report_on_support(g: &Graph) -> ClassGReport {
    report(g, g.is_connected_ignoring_isolated())
}

fn report(g: &Graph, connected: bool) -> ClassGReport {
    let triangle_free = is_triangle_free(g);
    let odd_distance = odd_distance(g);
    let member = connected && triangle_free && odd_distance.at_least(3) && g.edge_count() >= 1;
    ClassGReport {
        connected,
        triangle_free,
        odd_distance,
        member,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    Red,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityColoring {
    pub color: Vec<Color>,
}

impl ParityColoring {
    pub fn of(&self, v: Vertex) -> Color {
        self.color[v]
    }
}

pub fn parity_coloring(t: &Graph) -> Result<ParityColoring, NotATree> {
    if !t.is_tree() {
        return Err(NotATree);
    }
    Ok(ParityColoring {
        color: t.parity_colors(),
    })
}

/// All black-red-red-black 3-paths of a tree, each once, read from the
/// smaller end.
pub fn brrb_paths(t: &Graph) -> Result<Vec<Walk>, NotATree> {
    if !t.is_tree() {
        return Err(NotATree);
    }
    Ok(brrb_paths_unchecked(t))
}

pub(crate) fn brrb_paths_unchecked(t: &Graph) -> Vec<Walk> {
    let color = t.parity_colors();
    let mut out = Vec::new();
    for &(a, b) in t.edges() {
        if color[a] != Color::Red || color[b] != Color::Red {
            continue;
        }
        for (x1, x2) in [(a, b), (b, a)] {
            for &x0 in t.neighbors(x1) {
                if x0 == x2 || color[x0] != Color::Black {
                    continue;
                }
                for &x3 in t.neighbors(x2) {
                    if x3 == x1 || x3 == x0 || color[x3] != Color::Black || x0 > x3 {
                        continue;
                    }
                    out.push(Walk::path(vec![x0, x1, x2, x3]));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Which arc of a cycle [`subpath`] returns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Shortest,
    Longest,
    /// The arc that follows the stored orientation from `x`.
    First,
}

/// The x–y subpath of a walk, oriented from `x` to `y`. On cycles `side`
/// selects the arc; ties go to the lexicographically smaller sequence.
pub fn subpath(w: &Walk, x: Vertex, y: Vertex, side: Side) -> Result<Walk, VertexNotOnWalk> {
    let i = w.position(x).ok_or(VertexNotOnWalk(x))?;
    let j = w.position(y).ok_or(VertexNotOnWalk(y))?;
    let vs = &w.vertices;
    if i == j {
        return Ok(Walk::path(vec![x]));
    }
    match w.kind {
        WalkKind::Path => {
            if i < j {
                Ok(Walk::path(vs[i..=j].to_vec()))
            } else {
                let mut seg = vs[j..=i].to_vec();
                seg.reverse();
                Ok(Walk::path(seg))
            }
        }
        WalkKind::Cycle => {
            let k = vs.len();
            let fwd: Vec<_> = (0..=((j + k - i) % k)).map(|s| vs[(i + s) % k]).collect();
            let bwd: Vec<_> = (0..=((i + k - j) % k))
                .map(|s| vs[(i + k - s) % k])
                .collect();
            let pick = match side {
                Side::First => fwd,
                Side::Shortest => match fwd.len().cmp(&bwd.len()) {
                    std::cmp::Ordering::Less => fwd,
                    std::cmp::Ordering::Greater => bwd,
                    std::cmp::Ordering::Equal => fwd.min(bwd),
                },
                Side::Longest => match fwd.len().cmp(&bwd.len()) {
                    std::cmp::Ordering::Greater => fwd,
                    std::cmp::Ordering::Less => bwd,
                    std::cmp::Ordering::Equal => fwd.min(bwd),
                },
            };
            Ok(Walk::path(pick))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(e).unwrap()
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(Graph::from_edges([(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges([(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange(..))
        ));
    }

    #[test]
    fn triangle_freeness() {
        assert!(!is_triangle_free(&Graph::cycle(&[0, 1, 2])));
        assert!(is_triangle_free(&Graph::cycle(&[0, 1, 2, 3])));
        let p = petersen();
        // brute force over all triples
        let mut has_triangle = false;
        for a in 0..10 {
            for b in a + 1..10 {
                for c in b + 1..10 {
                    has_triangle |= p.has_edge(a, b) && p.has_edge(b, c) && p.has_edge(a, c);
                }
            }
        }
        assert!(!has_triangle);
        assert!(is_triangle_free(&p));
    }

    #[test]
    fn odd_distance_examples() {
        assert_eq!(
            odd_distance(&Graph::path(&[0, 1, 2, 3])),
            OddDistance::Finite(3)
        );
        assert_eq!(
            odd_distance(&Graph::cycle(&[0, 1, 2, 3])),
            OddDistance::Infinite
        );
        let star = Graph::from_edges([(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(odd_distance(&star), OddDistance::Finite(1));
        let two = Graph::from_edges([(0, 1), (2, 3)]).unwrap();
        assert_eq!(odd_distance(&two), OddDistance::Finite(1));
        let far = Graph::from_edges([(0, 1), (2, 3), (3, 4)]).unwrap();
        assert_eq!(odd_distance(&far), OddDistance::Finite(1));
    }

    #[test]
    fn class_g_examples() {
        let r = class_g_report(&Graph::path(&[0, 1, 2, 3]));
        assert!(r.member);
        let r = class_g_report(&Graph::path(&[0, 1, 2]));
        assert_eq!(r.odd_distance, OddDistance::Finite(2));
        assert!(!r.member);
        assert!(class_g_report(&Graph::cycle(&[0, 1, 2, 3, 4])).member);
        assert!(!class_g_report(&Graph::new(1, []).unwrap()).member);
        // isolated vertex breaks strict connectivity
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(!class_g_report(&g).member);
        assert!(class_g_report_on_support(&g).member);
    }

    #[test]
    fn parity_coloring_examples() {
        let c = parity_coloring(&Graph::path(&[0, 1, 2, 3])).unwrap();
        assert_eq!(
            c.color,
            vec![Color::Black, Color::Red, Color::Red, Color::Black]
        );
        let c = parity_coloring(&Graph::path(&[0, 1])).unwrap();
        assert_eq!(c.color, vec![Color::Black; 2]);
        let star = Graph::from_edges([(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(parity_coloring(&star).unwrap().color, vec![Color::Black; 4]);
        assert_eq!(parity_coloring(&Graph::cycle(&[0, 1, 2, 3])), Err(NotATree));
        let forest = Graph::from_edges([(0, 1), (2, 3)]).unwrap();
        assert_eq!(parity_coloring(&forest), Err(NotATree));
    }

    #[test]
    fn brrb_examples() {
        let p3 = Graph::path(&[0, 1, 2, 3]);
        assert_eq!(brrb_paths(&p3).unwrap(), vec![Walk::path(vec![0, 1, 2, 3])]);
        assert!(brrb_paths(&Graph::path(&[0, 1, 2, 3, 4]))
            .unwrap()
            .is_empty());
        // T0 = 0-1-2-3 with a 4-path 4-5-1-6-7 glued at x1
        let t =
            Graph::from_edges([(0, 1), (1, 2), (2, 3), (4, 5), (5, 1), (1, 6), (6, 7)]).unwrap();
        let got = brrb_paths(&t).unwrap();
        // brute force over all vertex 4-tuples forming a path with the colour pattern
        let color = t.parity_colors();
        let mut want = Vec::new();
        for a in 0..8 {
            for b in 0..8 {
                for c in 0..8 {
                    for d in 0..8 {
                        let vs = [a, b, c, d];
                        let distinct = vs.iter().collect::<BTreeSet<_>>().len() == 4;
                        if distinct
                            && t.has_edge(a, b)
                            && t.has_edge(b, c)
                            && t.has_edge(c, d)
                            && color[a] == Color::Black
                            && color[b] == Color::Red
                            && color[c] == Color::Red
                            && color[d] == Color::Black
                            && a < d
                        {
                            want.push(Walk::path(vs.to_vec()));
                        }
                    }
                }
            }
        }
        want.sort();
        assert_eq!(got, want);
        assert_eq!(got.len(), 3);
    }

    #[test]
    fn validator_examples() {
        let c4 = Graph::cycle(&[0, 1, 2, 3]);
        let d = Decomposition::new(vec![Walk::cycle(vec![0, 1, 2, 3])], 4);
        assert!(validate_decomposition(&c4, &d).is_valid());
        let p4 = Graph::path(&[0, 1, 2, 3, 4]);
        let d = Decomposition::new(vec![Walk::path(vec![0, 1, 2, 3, 4])], 4);
        assert!(validate_decomposition(&p4, &d).is_valid());
        let p3 = Graph::path(&[0, 1, 2, 3]);
        for d in [
            Decomposition::new(vec![Walk::path(vec![0, 1, 2, 3])], 4),
            Decomposition::new(vec![], 4),
            Decomposition::new(vec![Walk::path(vec![0, 1]), Walk::path(vec![1, 2, 3])], 4),
        ] {
            assert!(!validate_decomposition(&p3, &d).is_valid());
        }
        let twice = Decomposition::new(
            vec![Walk::path(vec![0, 1, 2, 3]), Walk::path(vec![2, 3])],
            1,
        );
        assert!(validate_decomposition(&p3, &twice)
            .defects
            .contains(&Defect::CoveredTwice { edge: (2, 3) }));
    }

    #[test]
    fn subpath_examples() {
        let p = Walk::path(vec![0, 1, 2, 3, 4]);
        assert_eq!(
            subpath(&p, 1, 3, Side::Shortest).unwrap(),
            Walk::path(vec![1, 2, 3])
        );
        assert_eq!(
            subpath(&p, 3, 1, Side::First).unwrap(),
            Walk::path(vec![3, 2, 1])
        );
        let c = Walk::cycle(vec![0, 1, 2, 3]);
        assert_eq!(
            subpath(&c, 0, 2, Side::Shortest).unwrap(),
            Walk::path(vec![0, 1, 2])
        );
        let c5 = Walk::cycle(vec![0, 1, 2, 3, 4]);
        assert_eq!(
            subpath(&c5, 0, 2, Side::Longest).unwrap(),
            Walk::path(vec![0, 4, 3, 2])
        );
        assert_eq!(
            subpath(&c5, 2, 0, Side::First).unwrap(),
            Walk::path(vec![2, 3, 4, 0])
        );
        let abc = Walk::path(vec![0, 1, 2]);
        assert_eq!(
            subpath(&abc, 0, 0, Side::First).unwrap(),
            Walk::path(vec![0])
        );
        assert_eq!(subpath(&abc, 0, 9, Side::First), Err(VertexNotOnWalk(9)));
    }

    #[test]
    fn normalized_cycle_is_rotation_invariant() {
        let a = Walk::cycle(vec![3, 1, 2, 0]).normalized();
        let b = Walk::cycle(vec![0, 3, 1, 2]).normalized();
        assert_eq!(a, b);
        assert_eq!(a.vertices, vec![0, 2, 1, 3]);
    }
}
