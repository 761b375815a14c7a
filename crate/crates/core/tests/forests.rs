mod common;

use std::collections::BTreeSet;

use cactus_core::forests::{enumerate_forests, parse_forest, serialize_forest, PlanarForest};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn forest() -> impl Strategy<Value = PlanarForest> {
    (2u32..=7, 0usize..6, any::<u64>())
        .prop_map(|(n, edges, seed)| common::random_forest(n, edges, &mut ChaCha8Rng::seed_from_u64(seed)))
}

fn forest_with_edges(min: usize) -> impl Strategy<Value = PlanarForest> {
    forest().prop_filter("too few edges", move |f| f.edge_count() >= min)
}

proptest! {
    #[test]
    fn text_round_trip(f in forest()) {
        let text = serialize_forest(&f);
        let back = parse_forest(&text).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(serialize_forest(&back), text);
    }

    #[test]
    fn flip_is_an_involution(f in forest_with_edges(1)) {
        for e in f.internal_edges() {
            prop_assert_eq!(f.flip(e).unwrap().flip(e).unwrap(), f.clone());
        }
    }

    #[test]
    fn flips_commute(f in forest_with_edges(2)) {
        let edges = f.internal_edges();
        for &a in &edges {
            for &b in &edges {
                let ab = f.flip(a).unwrap().flip(b).unwrap();
                let ba = f.flip(b).unwrap().flip(a).unwrap();
                prop_assert_eq!(ab, ba);
            }
        }
    }

    #[test]
    fn flip_reverses_own_leaf_order(f in forest_with_edges(1)) {
        for e in f.internal_edges() {
            let before = f.leaf_order(e).unwrap();
            let after = f.flip(e).unwrap().leaf_order(e).unwrap();
            prop_assert_eq!(after, before.reversed());
        }
    }

    #[test]
    fn delete_and_flip_exchange(f in forest_with_edges(2)) {
        let edges = f.internal_edges();
        for &a in &edges {
            for &b in &edges {
                if a == b { continue; }
                let one = f.flip(b).unwrap().delete_edge(a).unwrap();
                let two = f.delete_edge(a).unwrap().flip(b).unwrap();
                prop_assert_eq!(one, two);
            }
        }
    }

    #[test]
    fn types_survive_other_operations(f in forest_with_edges(2)) {
        let edges = f.internal_edges();
        for &a in &edges {
            let flipped = f.flip(a).unwrap();
            let deleted = f.delete_edge(a).unwrap();
            for &b in &edges {
                prop_assert_eq!(flipped.edge_type(b).unwrap(), f.edge_type(b).unwrap());
                if a != b {
                    prop_assert_eq!(deleted.edge_type(b).unwrap(), f.edge_type(b).unwrap());
                }
            }
        }
    }

    #[test]
    fn types_are_nested_or_disjoint(f in forest_with_edges(2)) {
        let edges = f.internal_edges();
        for &a in &edges {
            for &b in &edges {
                let (ta, tb) = (f.edge_type(a).unwrap().set(), f.edge_type(b).unwrap().set());
                prop_assert!(ta.nested_or_disjoint(tb));
            }
        }
    }

    #[test]
    fn insert_then_delete_is_identity(f in forest(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some(site) = common::random_insert_site(&f, &mut rng) {
            let (g, e) = f.insert_edge(&site).unwrap();
            prop_assert_eq!(g.edge_count(), f.edge_count() + 1);
            prop_assert_eq!(g.delete_edge(e).unwrap(), f);
        }
    }
}

/// All forests reachable from the trivial forest by adding `k` edges.
fn insertion_closure(n: u32, k: usize) -> BTreeSet<String> {
    let mut layer = vec![PlanarForest::trivial(n)];
    for _ in 0..k {
        let mut next: BTreeSet<String> = BTreeSet::new();
        let mut forests = Vec::new();
        for f in &layer {
            for site in common::all_insert_sites(f) {
                let (g, _) = f.insert_edge(&site).unwrap();
                if next.insert(serialize_forest(&g)) {
                    forests.push(g);
                }
            }
        }
        layer = forests;
    }
    layer.iter().map(serialize_forest).collect()
}

#[test]
fn enumeration_matches_insertion_closure() {
    for n in 1..=5u32 {
        for k in 0..n as usize {
            let listed: BTreeSet<String> = enumerate_forests(n, k).iter().map(serialize_forest).collect();
            assert_eq!(listed, insertion_closure(n, k), "n={n} k={k}");
        }
    }
}

#[test]
fn enumeration_counts() {
    let expected: [&[usize]; 3] = [&[1, 12, 12], &[1, 60, 180, 120], &[1, 320, 1980, 3360, 1680]];
    for (n, counts) in (3u32..).zip(expected) {
        let got: Vec<usize> = (0..n as usize).map(|k| enumerate_forests(n, k).len()).collect();
        assert_eq!(got, counts, "n={n}");
    }
    assert!(enumerate_forests(3, 3).is_empty());
}

#[test]
fn enumeration_is_closed_under_flip_and_delete() {
    for n in 2..=5u32 {
        let layers: Vec<BTreeSet<PlanarForest>> =
            (0..n as usize).map(|k| enumerate_forests(n, k).into_iter().collect()).collect();
        for k in 1..n as usize {
            for f in &layers[k] {
                for e in f.internal_edges() {
                    assert!(layers[k].contains(&f.flip(e).unwrap()), "{f} flip {e}");
                    assert!(layers[k - 1].contains(&f.delete_edge(e).unwrap()), "{f} delete {e}");
                }
            }
        }
    }
}

#[test]
fn enumeration_is_sorted_and_distinct() {
    for k in 0..4 {
        let texts: Vec<String> = enumerate_forests(4, k).iter().map(serialize_forest).collect();
        let mut sorted = texts.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(texts, sorted);
    }
}
