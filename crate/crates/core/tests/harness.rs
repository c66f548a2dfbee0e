mod common;

use std::collections::BTreeSet;

use common::*;
use fourpc_core::graph::{Edge, Graph};
use fourpc_core::harness::survey::LevelCounts;
use fourpc_core::harness::{dichotomy_survey, enumerate_class_g, HarnessError, SurveyOptions};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest sorted edge list over all relabelings.
fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> (usize, Vec<Edge>) {
    let best = perms
        .iter()
        .map(|p| {
            let mut e: Vec<Edge> = g
                .edges()
                .iter()
                .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                .collect();
            e.sort_unstable();
            e
        })
        .min()
        .unwrap();
    (g.vertex_count(), best)
}

fn brute_member(g: &Graph) -> bool {
    g.edge_count() >= 1
        && brute_connected(g)
        && brute_triangle_free(g)
        && brute_odd_distance(g).is_none_or(|d| d >= 3)
}

/// Every member on at most `n_max` vertices, up to isomorphism, by checking
/// all graphs on each vertex count.
fn brute_members(n_max: usize) -> BTreeSet<(usize, Vec<Edge>)> {
    let mut out = BTreeSet::new();
    for n in 1..=n_max {
        let perms = permutations(n);
        let pairs: Vec<Edge> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<Edge> = (0..pairs.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            let g = Graph::new(n, edges).unwrap();
            if brute_member(&g) {
                out.insert(brute_canonical(&g, &perms));
            }
        }
    }
    out
}

#[test]
fn enumeration_matches_brute_force() {
    assert!(enumerate_class_g(3).unwrap().is_empty());
    let four = enumerate_class_g(4).unwrap();
    let mut edges: Vec<usize> = four.iter().map(Graph::edge_count).collect();
    edges.sort_unstable();
    assert_eq!(edges, vec![3, 4]);
    for n_max in 1..=6 {
        let got: BTreeSet<_> = enumerate_class_g(n_max)
            .unwrap()
            .iter()
            .map(|g| brute_canonical(g, &permutations(g.vertex_count())))
            .collect();
        assert_eq!(got, brute_members(n_max), "n_max = {n_max}");
        assert_eq!(got.len(), enumerate_class_g(n_max).unwrap().len());
    }
}

#[test]
fn enumeration_is_isomorph_free_and_filtered() {
    let all = enumerate_class_g(8).unwrap();
    let perms: Vec<Vec<Vec<usize>>> = (0..=8).map(permutations).collect();
    let forms: BTreeSet<_> = all
        .iter()
        .map(|g| brute_canonical(g, &perms[g.vertex_count()]))
        .collect();
    assert_eq!(forms.len(), all.len());
    assert!(all.iter().all(brute_member));
    assert_eq!(
        enumerate_class_g(9),
        Err(HarnessError::TooLarge { n_max: 9, limit: 8 })
    );
}

#[test]
fn survey_examples() {
    let r = dichotomy_survey(&[Graph::path(&[0, 1, 2, 3])], SurveyOptions::default());
    assert_eq!(
        r.per_n,
        vec![LevelCounts {
            n: 4,
            members: 1,
            hanging_square: 1,
            decomposable: 0
        }]
    );
    assert!(r.violations.is_empty());
    let r = dichotomy_survey(&[Graph::cycle(&[0, 1, 2, 3])], SurveyOptions::default());
    assert_eq!(
        r.per_n,
        vec![LevelCounts {
            n: 4,
            members: 1,
            hanging_square: 0,
            decomposable: 1
        }]
    );
}

#[test]
fn survey_is_reproducible() {
    let graphs = enumerate_class_g(7).unwrap();
    let mut shuffled = graphs.clone();
    shuffled.reverse();
    let a = dichotomy_survey(&graphs, SurveyOptions::default());
    let b = dichotomy_survey(&shuffled, SurveyOptions::default());
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
    assert!(a.dichotomy_holds());
    assert_eq!(a.to_csv().unwrap(), b.to_csv().unwrap());
    let timed = dichotomy_survey(
        &graphs,
        SurveyOptions {
            gallai: true,
            timing: true,
        },
    );
    assert!(timed.timing.is_some());
    assert_eq!(timed.per_n, a.per_n);
}
