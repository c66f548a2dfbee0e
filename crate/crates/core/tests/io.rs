mod common;

use common::*;
use fourpc_core::graph::{parity_coloring, Decomposition, Graph, Walk};
use fourpc_core::harness::enumerate_class_g;
use fourpc_core::io::{emit_dot, emit_graph6, parse_edge_list, parse_graph6, Overlay, ParseError};
use proptest::prelude::*;

const CORPUS: &str = include_str!("data/graph6_corpus.tsv");

fn corpus() -> Vec<(String, Graph)> {
    CORPUS
        .lines()
        .map(|line| {
            let mut fields = line.split('\t');
            let code = fields.next().unwrap().to_string();
            let n: usize = fields.next().unwrap().parse().unwrap();
            let pairs: Vec<(usize, usize)> = fields
                .next()
                .unwrap_or("")
                .split_whitespace()
                .map(|e| {
                    let (u, v) = e.split_once('-').unwrap();
                    (u.parse().unwrap(), v.parse().unwrap())
                })
                .collect();
            (code, graph_on(n, &pairs))
        })
        .collect()
}

#[test]
fn agrees_with_reference_corpus() {
    let c = corpus();
    assert!(c.len() >= 50);
    for (code, g) in &c {
        assert_eq!(&emit_graph6(g), code);
        assert_eq!(&parse_graph6(code).unwrap(), g);
    }
}

#[test]
fn k4_by_the_format_definition() {
    let k4 = graph_on(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    assert_eq!(emit_graph6(&k4), "C~");
}

#[test]
fn long_form_is_rejected() {
    assert!(matches!(parse_graph6("~?@?"), Err(ParseError::Graph6(_))));
}

#[test]
fn round_trip_on_enumerated_graphs() {
    for g in enumerate_class_g(8).unwrap() {
        assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
    }
}

#[test]
fn edge_list_errors_and_labels() {
    let g = parse_edge_list("# a path\n10 20\n20 30\n").unwrap();
    assert_eq!(g, Graph::path(&[0, 1, 2]));
    assert!(matches!(
        parse_edge_list("0 0\n"),
        Err(ParseError::SelfLoop { .. })
    ));
    assert!(matches!(
        parse_edge_list("0 1\n1 0\n"),
        Err(ParseError::DuplicateEdge { .. })
    ));
    assert!(matches!(
        parse_edge_list("0 1 2\n"),
        Err(ParseError::Line { line: 1 })
    ));
}

#[test]
fn dot_output() {
    let c4 = Graph::cycle(&[0, 1, 2, 3]);
    let dot = emit_dot(&c4, Overlay::None);
    assert_eq!(dot.matches(" -- ").count(), 4);
    assert!(dot.starts_with("graph") && dot.trim_end().ends_with('}'));

    let p3 = Graph::path(&[0, 1, 2, 3]);
    let coloring = parity_coloring(&p3).unwrap();
    let dot = emit_dot(&p3, Overlay::Coloring(&coloring));
    let node = |v: usize| {
        dot.lines()
            .find(|l| l.trim_start().starts_with(&format!("{v} [")))
            .unwrap()
            .to_string()
    };
    assert!(node(0).contains("fillcolor=black") && node(3).contains("fillcolor=black"));
    assert!(node(1).contains("fillcolor=red") && node(2).contains("fillcolor=red"));

    let figure_eight = graph_on(
        7,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (0, 4),
            (4, 5),
            (5, 6),
            (6, 0),
        ],
    );
    let d = Decomposition::new(
        vec![Walk::cycle(vec![0, 1, 2, 3]), Walk::cycle(vec![0, 4, 5, 6])],
        4,
    );
    let dot = emit_dot(&figure_eight, Overlay::Decomposition(&d));
    let colors: std::collections::BTreeSet<&str> = dot
        .lines()
        .filter(|l| l.contains(" -- "))
        .filter_map(|l| l.split("color=").nth(1)?.split(',').next())
        .collect();
    assert_eq!(colors.len(), d.len());
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(62, 80)) {
        prop_assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_renumbers_by_first_appearance(g in arb_graph(20, 40)) {
        let text: String = g.edges().iter().map(|(u, v)| format!("{} {}\n", 3 * u + 7, 3 * v + 7)).collect();
        let parsed = parse_edge_list(&text).unwrap();
        let mut ids = std::collections::HashMap::new();
        for &(u, v) in g.edges() {
            for x in [u, v] {
                let next = ids.len();
                ids.entry(x).or_insert(next);
            }
        }
        let expected = graph_on(ids.len(), &g.edges().iter().map(|(u, v)| (ids[u], ids[v])).collect::<Vec<_>>());
        prop_assert_eq!(parsed, expected);
    }
}
