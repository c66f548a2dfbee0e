//! Text formats: edge lists, graph6 (short form) and Graphviz DOT.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{edge, Color, Decomposition, Graph, GraphError, ParityColoring};
use crate::hanging_square::HangingSquareCertificate;

/// Version of the JSON documents written by the command-line tool.
pub const SCHEMA_VERSION: u32 = 1;

/// Top-level JSON document: the producing command and its result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub schema_version: u32,
    pub command: String,
    pub result: T,
}

impl<T> Envelope<T> {
    pub fn new(command: &str, result: T) -> Envelope<T> {
        Envelope {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            result,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected two vertex labels")]
    Line { line: usize },
    #[error("line {line}: self-loop on {label}")]
    SelfLoop { line: usize, label: String },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: String, v: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One edge per line, `#` starts a comment. Labels are renumbered densely in
/// order of first appearance.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut ids: HashMap<&str, usize> = HashMap::new();
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let [a, b] = tokens[..] else {
            return Err(ParseError::Line { line });
        };
        if a == b {
            return Err(ParseError::SelfLoop {
                line,
                label: a.to_string(),
            });
        }
        let next = ids.len();
        let u = *ids.entry(a).or_insert(next);
        let next = ids.len();
        let v = *ids.entry(b).or_insert(next);
        if !seen.insert(edge(u, v)) {
            return Err(ParseError::DuplicateEdge {
                line,
                u: a.to_string(),
                v: b.to_string(),
            });
        }
        edges.push((u, v));
    }
    Ok(Graph::new(ids.len(), edges)?)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

const GRAPH6_MAX_N: usize = 62;

/// Standard graph6 short form. Panics if the graph has more than 62 vertices.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    assert!(
        n <= GRAPH6_MAX_N,
        "graph6 short form holds at most 62 vertices"
    );
    let mut bytes = vec![(n as u8) + 63];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are ASCII")
}

pub fn parse_graph6(line: &str) -> Result<Graph, ParseError> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    let err = |m: &str| ParseError::Graph6(m.to_string());
    let (&first, rest) = bytes.split_first().ok_or_else(|| err("empty input"))?;
    if first == 126 {
        return Err(err("long form (more than 62 vertices) is not supported"));
    }
    if !(63..=126).contains(&first) {
        return Err(err("invalid size byte"));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    if rest.len() != bits.div_ceil(6) {
        return Err(err("wrong payload length"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(err("invalid payload byte"));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = rest[rest.len() - 1] - 63;
        if last & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(err("nonzero padding bits"));
        }
    }
    Ok(Graph::new(n, edges)?)
}

/// What [`emit_dot`] draws on top of the plain graph.
#[derive(Debug, Clone, Copy)]
pub enum Overlay<'a> {
    None,
    Coloring(&'a ParityColoring),
    Decomposition(&'a Decomposition),
    Certificate(&'a HangingSquareCertificate),
}

fn hsv(i: usize, k: usize) -> String {
    format!("\"{:.3} 0.850 0.850\"", i as f64 / k.max(1) as f64)
}

pub fn emit_dot(g: &Graph, overlay: Overlay<'_>) -> String {
    let mut out = String::from("graph G {\n");
    let skeleton = match overlay {
        Overlay::Certificate(cert) => Some(cert.skeleton.to_graph(g.vertex_count())),
        _ => None,
    };
    let coloring = match overlay {
        Overlay::Coloring(c) => Some(c.color.clone()),
        Overlay::Certificate(_) => skeleton.as_ref().map(Graph::parity_colors),
        _ => None,
    };
    for v in 0..g.vertex_count() {
        match (&coloring, &skeleton) {
            (Some(_), Some(t)) if !t.has_vertex(v) => {
                let _ = writeln!(out, "  {v} [style=filled, fillcolor=white];");
            }
            (Some(c), _) => {
                let (fill, font) = match c[v] {
                    Color::Black => ("black", "white"),
                    Color::Red => ("red", "black"),
                };
                let _ = writeln!(
                    out,
                    "  {v} [style=filled, fillcolor={fill}, fontcolor={font}];"
                );
            }
            (None, _) => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    let mut element_of = HashMap::new();
    if let Overlay::Decomposition(d) = overlay {
        for (i, w) in d.elements.iter().enumerate() {
            for e in w.edges() {
                element_of.insert(e, i);
            }
        }
    }
    for &(u, v) in g.edges() {
        match overlay {
            Overlay::Decomposition(d) => match element_of.get(&(u, v)) {
                Some(&i) => {
                    let _ = writeln!(
                        out,
                        "  {u} -- {v} [color={}, label=\"{i}\"];",
                        hsv(i, d.len())
                    );
                }
                None => {
                    let _ = writeln!(out, "  {u} -- {v} [style=dotted];");
                }
            },
            Overlay::Certificate(_) => {
                let on_tree = skeleton.as_ref().is_some_and(|t| t.has_edge(u, v));
                let style = if on_tree { "bold" } else { "dashed" };
                let _ = writeln!(out, "  {u} -- {v} [style={style}];");
            }
            _ => {
                let _ = writeln!(out, "  {u} -- {v};");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parity_coloring, Walk};

    #[test]
    fn edge_list_examples() {
        let g = parse_edge_list("0 1\n1 2\n").unwrap();
        assert_eq!(g, Graph::path(&[0, 1, 2]));
        assert!(matches!(
            parse_edge_list("0 0\n"),
            Err(ParseError::SelfLoop { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1\n0 1\n"),
            Err(ParseError::DuplicateEdge { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1 2\n"),
            Err(ParseError::Line { line: 1 })
        ));
        let g = parse_edge_list("# header\nb a\n\na c # trailing\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn graph6_examples() {
        let k4 = Graph::from_edges([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(emit_graph6(&k4), "C~");
        assert_eq!(parse_graph6("C~").unwrap(), k4);
        assert_eq!(emit_graph6(&Graph::new(0, []).unwrap()), "?");
        assert!(parse_graph6("~??~").is_err());
        assert!(parse_graph6("C~~").is_err());
        // C4 0-1-2-3: bits (0,1)=1 (0,2)=0 (1,2)=1 (0,3)=1 (1,3)=0 (2,3)=1 -> 101101
        assert_eq!(emit_graph6(&Graph::cycle(&[0, 1, 2, 3])), "Cl");
        // padding bits must be zero: n=3 uses 3 of 6 bits
        assert!(parse_graph6("Bw").is_ok());
        assert!(parse_graph6("Bx").is_err());
    }

    #[test]
    fn dot_overlays() {
        let c4 = Graph::cycle(&[0, 1, 2, 3]);
        let plain = emit_dot(&c4, Overlay::None);
        assert_eq!(plain.matches(" -- ").count(), 4);
        assert_eq!(
            plain
                .lines()
                .filter(|l| l.trim_end().ends_with(';') && !l.contains("--"))
                .count(),
            4
        );
        let p3 = Graph::path(&[0, 1, 2, 3]);
        let col = parity_coloring(&p3).unwrap();
        let dot = emit_dot(&p3, Overlay::Coloring(&col));
        assert!(dot.contains("0 [style=filled, fillcolor=black"));
        assert!(dot.contains("1 [style=filled, fillcolor=red"));
        let g = Graph::path(&[0, 1, 2, 3, 4, 5, 6, 7, 8]);
        let d = Decomposition::new(
            vec![
                Walk::path(vec![0, 1, 2, 3, 4]),
                Walk::path(vec![4, 5, 6, 7, 8]),
            ],
            4,
        );
        let dot = emit_dot(&g, Overlay::Decomposition(&d));
        let colors: std::collections::BTreeSet<&str> = dot
            .lines()
            .filter_map(|l| l.split("color=").nth(1))
            .map(|s| s.split(',').next().unwrap())
            .collect();
        assert_eq!(colors.len(), d.len());
    }
}
