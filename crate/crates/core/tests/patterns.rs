mod common;

use proptest::prelude::*;
use reed_core::{
    catalog, contains_induced, find_induced, is_in_class, is_isomorphic, is_self_complementary,
    pattern, registry, sample_gnp, ClassSpec, Graph, VertexSet,
};

#[test]
fn chair_and_kite_are_complements() {
    let chair = &pattern("Chair").unwrap().graph;
    let kite = &pattern("Kite").unwrap().graph;
    assert!(is_isomorphic(&chair.complement(), kite));
    assert!(is_isomorphic(&kite.complement(), chair));
}

#[test]
fn house_is_the_complement_of_p5() {
    let house = &pattern("House").unwrap().graph;
    assert!(is_isomorphic(&house.complement(), &Graph::path(5).unwrap()));
}

#[test]
fn class_examples() {
    let c6 = Graph::cycle(6).unwrap();
    let class4 = ClassSpec::by_name("2K2-M").unwrap();
    assert!(!is_in_class(&c6, class4));
    let sub = c6.induced_subgraph(VertexSet::from_iter([0, 1, 3, 4])).unwrap();
    assert!(is_isomorphic(&sub, &pattern("2K2").unwrap().graph));
    assert!(is_in_class(&Graph::cycle(5).unwrap(), ClassSpec::by_name("class2").unwrap()));
}

/// Self-complementary graphs without an induced Chair or Kite lie in class 2
/// and satisfy the bound.
#[test]
fn self_complementary_members_of_class2() {
    let class2 = ClassSpec::by_name("class2").unwrap();
    let mut found = 0;
    for n in 1..=8 {
        for g in reed_core::enumerate_graphs(n, Some(class2)).unwrap() {
            if is_self_complementary(&g) {
                found += 1;
                assert!(reed_core::check_reed(&g).unwrap().holds);
            }
        }
    }
    // K1, P4 and C5 at least
    assert!(found >= 3);
}

proptest! {
    #[test]
    fn classes_are_hereditary(seed in any::<u64>(), p in 0.2f64..0.9, mask in any::<u64>()) {
        let g = sample_gnp(8, p, seed).unwrap();
        let s = VertexSet::from_bits(mask & g.vertices().bits());
        let sub = g.induced_subgraph(s).unwrap();
        for c in registry() {
            if is_in_class(&g, c) {
                prop_assert!(is_in_class(&sub, c));
            }
        }
    }

    #[test]
    fn witnesses_replay(seed in any::<u64>(), p in 0.1f64..0.9) {
        let g = sample_gnp(9, p, seed).unwrap();
        for pat in catalog() {
            match find_induced(&g, pat) {
                Some(e) => prop_assert!(e.verify(&g, &pat.graph)),
                None => prop_assert!(!contains_induced(&g, pat)),
            }
        }
    }
}

#[test]
fn containment_matches_naive_oracle_on_random_graphs() {
    for seed in 0..40u64 {
        let g = sample_gnp(8, 0.15 + (seed % 7) as f64 * 0.1, seed).unwrap();
        for pat in catalog() {
            assert_eq!(
                contains_induced(&g, pat),
                common::brute_contains(&g, &pat.graph),
                "{} in {g}",
                pat.name
            );
        }
    }
}

/// Without an induced P4 ∪ K1, no induced path has more than five vertices.
#[test]
fn p4k1_free_graphs_have_short_chordless_paths() {
    let spec = ClassSpec::new("P4uK1-free", vec![pattern("P4uK1").unwrap().clone()]);
    let p6 = reed_core::Pattern::new("P6", Graph::path(6).unwrap());
    let mut passed = 0;
    let mut seed = 0u64;
    while passed < 500 {
        let n = 6 + (seed % 5) as usize;
        let p = [0.3, 0.5, 0.7, 0.85][(seed % 4) as usize];
        let g = sample_gnp(n, p, seed).unwrap();
        seed += 1;
        if is_in_class(&g, &spec) {
            passed += 1;
            assert!(!contains_induced(&g, &p6), "{g}");
        }
    }
}
