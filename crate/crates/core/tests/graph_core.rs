mod common;

use std::collections::{BTreeMap, HashSet};

use proptest::prelude::*;
use reed_core::{canonical_form, canonical_graph, is_isomorphic, sample_gnp, Graph, VertexSet};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut b = bits.iter();
            for j in 1..n {
                for i in 0..j {
                    if *b.next().unwrap() {
                        edges.push((i, j));
                    }
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(62)) {
        let s = g.to_graph6();
        let back = Graph::from_graph6(&s).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(back.to_graph6(), s);
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(20)) {
        let c = g.complement();
        prop_assert_eq!(&c.complement(), &g);
        for v in 0..g.order() {
            prop_assert_eq!(c.degree(v), g.order() - 1 - g.degree(v));
            prop_assert!(!c.has_edge(v, v));
        }
        for (u, v) in c.edges() {
            prop_assert!(c.has_edge(v, u));
        }
    }

    #[test]
    fn canonical_form_ignores_labels(g in arb_graph(9), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        // Fisher-Yates driven by a splitmix sequence
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_add(0x9e37_79b9_7f4a_7c15);
            let mut z = s;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
            perm.swap(i, (z % (i as u64 + 1)) as usize);
        }
        let h = g.relabel(&perm).unwrap();
        prop_assert!(is_isomorphic(&g, &h));
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        let c = canonical_graph(&g);
        prop_assert_eq!(canonical_form(&c), c.to_graph6());
    }

    #[test]
    fn induced_subgraph_keeps_exactly_the_inner_edges(g in arb_graph(12), mask in any::<u64>()) {
        let s = VertexSet::from_bits(mask & g.vertices().bits());
        let sub = g.induced_subgraph(s).unwrap();
        let members: Vec<usize> = s.iter().collect();
        prop_assert_eq!(sub.order(), members.len());
        for a in 0..members.len() {
            for b in 0..members.len() {
                prop_assert_eq!(sub.has_edge(a, b), g.has_edge(members[a], members[b]));
            }
        }
    }
}

#[test]
fn random_graph6_round_trips_are_bit_identical() {
    for seed in 0..200u64 {
        let n = (seed % 21) as usize;
        let g = sample_gnp(n, 0.4, seed).unwrap();
        let s = g.to_graph6();
        assert_eq!(Graph::from_graph6(&s).unwrap().to_graph6(), s);
    }
}

#[test]
fn eleven_graphs_on_four_vertices() {
    let forms: HashSet<String> = common::all_labeled(4).map(|g| canonical_form(&g)).collect();
    assert_eq!(forms.len(), 11);
    let perms = common::permutations(4);
    let brute: HashSet<Vec<bool>> =
        common::all_labeled(4).map(|g| common::brute_canonical(&g, &perms)).collect();
    assert_eq!(brute.len(), 11);
}

/// Equal canonical forms exactly when isomorphic, over every labelled graph
/// of order at most 5.
#[test]
fn canonical_form_matches_isomorphism() {
    for n in 0..=5 {
        let graphs: Vec<Graph> = common::all_labeled(n).collect();
        let mut groups: BTreeMap<String, Vec<&Graph>> = BTreeMap::new();
        for g in &graphs {
            groups.entry(canonical_form(g)).or_default().push(g);
        }
        let reps: Vec<&Graph> = groups.values().map(|v| v[0]).collect();
        for members in groups.values() {
            for g in members {
                assert!(is_isomorphic(members[0], g));
            }
        }
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                assert!(!is_isomorphic(a, b));
                assert!(!common::brute_isomorphic(a, b));
            }
        }
    }
}

#[test]
fn isomorphism_agrees_with_brute_force() {
    let graphs: Vec<Graph> = common::all_labeled(4).collect();
    for a in &graphs {
        for b in graphs.iter().step_by(7) {
            assert_eq!(is_isomorphic(a, b), common::brute_isomorphic(a, b), "{a:?} {b:?}");
        }
    }
}
