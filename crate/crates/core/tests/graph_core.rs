mod common;

use common::*;
use fourpc_core::graph::{
    brrb_paths, class_g_report, is_triangle_free, odd_distance, parity_coloring, subpath,
    validate_decomposition, Color, Decomposition, Graph, OddDistance, Side, Walk,
};
use proptest::prelude::*;

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
fn petersen_is_triangle_free_by_triples() {
    let g = petersen();
    assert!(brute_triangle_free(&g));
    assert!(is_triangle_free(&g));
    assert!(!is_triangle_free(&Graph::cycle(&[0, 1, 2])));
}

#[test]
fn membership_examples() {
    assert!(class_g_report(&Graph::path(&[0, 1, 2, 3])).member);
    let p2 = class_g_report(&Graph::path(&[0, 1, 2]));
    assert_eq!(
        (p2.member, p2.odd_distance),
        (false, OddDistance::Finite(2))
    );
    assert!(class_g_report(&Graph::cycle(&[0, 1, 2, 3, 4])).member);
    assert!(!class_g_report(&Graph::new(1, []).unwrap()).member);
}

#[test]
fn brrb_paths_match_brute_force_on_a_skeleton() {
    // Start path 0-1-2-3 with a 4-path 4-5-1-6-7 glued at its middle.
    let t = Graph::from_edges([(0, 1), (1, 2), (2, 3), (4, 5), (5, 1), (1, 6), (6, 7)]).unwrap();
    let mut expected = Vec::new();
    let n = t.vertex_count();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let distinct = [a, b, c, d]
                        .iter()
                        .collect::<std::collections::BTreeSet<_>>()
                        .len()
                        == 4;
                    if distinct
                        && a < d
                        && t.has_edge(a, b)
                        && t.has_edge(b, c)
                        && t.has_edge(c, d)
                        && t.degree(a) % 2 == 1
                        && t.degree(d) % 2 == 1
                        && t.degree(b).is_multiple_of(2)
                        && t.degree(c).is_multiple_of(2)
                    {
                        expected.push(vec![a, b, c, d]);
                    }
                }
            }
        }
    }
    let mut got: Vec<Vec<usize>> = brrb_paths(&t)
        .unwrap()
        .into_iter()
        .map(|w| {
            let v = w.vertices;
            if v[0] < v[3] {
                v
            } else {
                v.into_iter().rev().collect()
            }
        })
        .collect();
    got.sort();
    expected.sort();
    assert_eq!(got, expected);
    assert!(brrb_paths(&Graph::path(&[0, 1, 2, 3, 4]))
        .unwrap()
        .is_empty());
}

#[test]
fn coloring_of_short_trees() {
    let c = parity_coloring(&Graph::path(&[0, 1, 2, 3])).unwrap();
    assert_eq!(
        c.color,
        vec![Color::Black, Color::Red, Color::Red, Color::Black]
    );
    let star = Graph::from_edges([(0, 1), (0, 2), (0, 3)]).unwrap();
    assert!(parity_coloring(&star)
        .unwrap()
        .color
        .iter()
        .all(|&x| x == Color::Black));
    assert!(parity_coloring(&Graph::cycle(&[0, 1, 2, 3])).is_err());
}

#[test]
fn validator_examples() {
    let c4 = Graph::cycle(&[0, 1, 2, 3]);
    let ok = Decomposition::new(vec![Walk::cycle(vec![0, 1, 2, 3])], 4);
    assert!(validate_decomposition(&c4, &ok).is_valid());
    let p3 = Graph::path(&[0, 1, 2, 3]);
    let whole = Decomposition::new(vec![Walk::path(vec![0, 1, 2, 3])], 4);
    assert!(!validate_decomposition(&p3, &whole).is_valid());
    let split = Decomposition::new(vec![Walk::path(vec![0, 1]), Walk::path(vec![1, 2, 3])], 4);
    assert!(!validate_decomposition(&p3, &split).is_valid());
}

#[test]
fn subpath_examples() {
    let p = Walk::path(vec![0, 1, 2, 3, 4]);
    assert_eq!(
        subpath(&p, 1, 3, Side::First).unwrap().vertices,
        vec![1, 2, 3]
    );
    assert_eq!(subpath(&p, 2, 2, Side::First).unwrap().len(), 0);
    let c = Walk::cycle(vec![0, 1, 2, 3]);
    assert_eq!(
        subpath(&c, 0, 2, Side::Shortest).unwrap().vertices,
        vec![0, 1, 2]
    );
    assert!(subpath(&p, 0, 9, Side::First).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn degree_sum_is_twice_the_edge_count(g in arb_graph(10, 25)) {
        let total: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn report_matches_brute_force(g in arb_graph(8, 14)) {
        let r = class_g_report(&g);
        prop_assert_eq!(r.triangle_free, brute_triangle_free(&g));
        prop_assert_eq!(r.connected, brute_connected(&g));
        let expected = match brute_odd_distance(&g) {
            Some(d) => OddDistance::Finite(d),
            None => OddDistance::Infinite,
        };
        prop_assert_eq!(r.odd_distance, expected);
        let member = r.connected && r.triangle_free && r.odd_distance.at_least(3) && g.edge_count() >= 1;
        prop_assert_eq!(r.member, member);
    }

    #[test]
    fn odd_distance_ignores_labels(g in arb_graph(9, 18), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(odd_distance(&g), odd_distance(&g.relabel(&perm)));
    }

    #[test]
    fn validator_accepts_exact_covers_only(g in arb_graph(7, 12), drop in any::<prop::sample::Index>()) {
        // Single edges as paths form a valid decomposition with minimum length 1.
        let singles: Vec<Walk> = g.edges().iter().map(|&(u, v)| Walk::path(vec![u, v])).collect();
        let d = Decomposition::new(singles.clone(), 1);
        prop_assert!(validate_decomposition(&g, &d).is_valid());
        prop_assert_eq!(walk_edges(&d.elements), g.edge_count());
        if !singles.is_empty() {
            let mut missing = singles.clone();
            missing.remove(drop.index(singles.len()));
            prop_assert!(!validate_decomposition(&g, &Decomposition::new(missing, 1)).is_valid());
            let mut doubled = singles.clone();
            doubled.push(singles[drop.index(singles.len())].clone());
            prop_assert!(!validate_decomposition(&g, &Decomposition::new(doubled, 1)).is_valid());
        }
    }

    #[test]
    fn brrb_paths_have_the_right_parities(seq_steps in 0usize..4, seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut edges = vec![(0, 1), (1, 2), (2, 3)];
        let mut n = 4;
        for _ in 0..seq_steps {
            let at = rng.gen_range(0..n);
            let len = if rng.gen_bool(0.5) { 4 } else { 6 };
            let mut vs: Vec<usize> = (n..n + len).collect();
            vs.insert(len / 2, at);
            n += len;
            edges.extend(vs.windows(2).map(|w| (w[0], w[1])));
        }
        let t = Graph::from_edges(edges).unwrap();
        for p in brrb_paths(&t).unwrap() {
            let v = &p.vertices;
            prop_assert!(t.degree(v[0]) % 2 == 1 && t.degree(v[3]) % 2 == 1);
            prop_assert!(t.degree(v[1]).is_multiple_of(2) && t.degree(v[2]).is_multiple_of(2));
        }
    }
}
