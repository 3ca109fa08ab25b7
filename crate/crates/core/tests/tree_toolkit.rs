use std::collections::BTreeMap;

use posetlab::graph::{graphs_on, named, trees_up_to};
use posetlab::lattice::partition_deck;
use posetlab::symfun::{xg_direct, xgt_direct};
use posetlab::tree::{
    bad_edge_table, deck_from_symfun, degree_sequence_from_symfun, recognize_tree_from_deck,
    recognize_tree_from_symfun, subtree_degree_counts, symfun_from_deck, xgt_from_symfun_tree,
};
use posetlab::{Graph, IntPartition};

#[test]
fn recognition_examples() {
    let xs = |g: &Graph| recognize_tree_from_symfun(&xg_direct(g).unwrap()).unwrap();
    assert!(xs(&named::path(3)));
    assert!(!xs(&named::complete(3)));
    assert!(!xs(&named::union(&[named::cycle(4), named::empty(1)])));
    let ds = |g: &Graph| recognize_tree_from_deck(&partition_deck(g).unwrap()).unwrap();
    assert!(ds(&named::path(4)));
    assert!(!ds(&named::complete(3)));
    assert!(!ds(&named::matching(2)));
    for n in 1..=6 {
        for g in graphs_on(n).unwrap() {
            assert_eq!(xs(&g), g.is_tree(), "{g}");
            assert_eq!(ds(&g), g.is_tree(), "{g}");
        }
    }
}

#[test]
fn small_decks_and_symfuns() {
    let deck = deck_from_symfun(&xg_direct(&named::empty(1)).unwrap()).unwrap();
    assert_eq!(deck.as_map(), &[(IntPartition::ones(1), 1)].into_iter().collect::<BTreeMap<_, _>>());
    let k2 = partition_deck(&named::path(2)).unwrap();
    assert_eq!(deck_from_symfun(&xg_direct(&named::path(2)).unwrap()).unwrap(), k2);
    assert_eq!(k2.len(), 2);
    assert_eq!(symfun_from_deck(&k2).unwrap(), xg_direct(&named::path(2)).unwrap());
    let a = symfun_from_deck(&partition_deck(&named::star(3)).unwrap()).unwrap();
    let b = symfun_from_deck(&partition_deck(&named::path(4)).unwrap()).unwrap();
    assert_ne!(a, b);
    assert!(deck_from_symfun(&xg_direct(&named::complete(3)).unwrap()).is_err());
}

#[test]
fn tree_pipeline_closes() {
    for t in trees_up_to(9) {
        let x = xg_direct(&t).unwrap();
        let d = deck_from_symfun(&x).unwrap();
        assert_eq!(d, partition_deck(&t).unwrap());
        assert_eq!(symfun_from_deck(&d).unwrap(), x);
    }
}

/// f(q̄, k̄) by listing ordered partitions and counting edges inside classes.
fn bad_edge_oracle(t: &Graph, r: usize) -> BTreeMap<(Vec<u32>, Vec<u32>), u64> {
    let n = t.vertex_count();
    let mut out = BTreeMap::new();
    for mut idx in 0..(r as u64).pow(n as u32) {
        let mut classes = vec![0u64; r];
        for v in 0..n {
            classes[(idx % r as u64) as usize] |= 1 << v;
            idx /= r as u64;
        }
        if classes.contains(&0) {
            continue;
        }
        let k: Vec<u32> = classes.iter().map(|c| c.count_ones()).collect();
        let q: Vec<u32> = classes
            .iter()
            .map(|&c| t.edges().iter().filter(|&&(u, v)| c >> u & 1 == 1 && c >> v & 1 == 1).count() as u32)
            .collect();
        *out.entry((q, k)).or_insert(0) += 1;
    }
    out
}

#[test]
fn bad_edge_tables_match_enumeration() {
    for t in trees_up_to(7) {
        let d = partition_deck(&t).unwrap();
        for r in 1..=3.min(t.vertex_count()) {
            let table = bad_edge_table(&d, r).unwrap();
            assert_eq!(table.entries, bad_edge_oracle(&t, r), "{t} r={r}");
            let mut rows: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
            for ((_, k), f) in &table.entries {
                *rows.entry(k.clone()).or_insert(0) += f;
            }
            for (k, total) in rows {
                let n = t.vertex_count() as u64;
                let multinomial = k.iter().fold((1u64, n), |(acc, left), &ki| {
                    let c = (0..ki as u64).fold(1u64, |a, i| a * (left - i) / (i + 1));
                    (acc * c, left - ki as u64)
                });
                assert_eq!(total, multinomial.0);
            }
        }
    }
}

#[test]
fn tutte_from_symfun_matches_direct() {
    for t in trees_up_to(8) {
        assert_eq!(xgt_from_symfun_tree(&xg_direct(&t).unwrap()).unwrap(), xgt_direct(&t).unwrap(), "{t}");
    }
}

#[test]
fn degree_sequences() {
    let seq = |g: &Graph| degree_sequence_from_symfun(&xg_direct(g).unwrap()).unwrap();
    assert_eq!(seq(&named::path(4)), vec![2, 2, 1, 1]);
    assert_eq!(seq(&named::star(3)), vec![3, 1, 1, 1]);
    assert_eq!(subtree_degree_counts(&xg_direct(&named::path(3)).unwrap()).unwrap().get(&(2, 1)), Some(&2));
    assert_eq!(seq(&named::empty(1)), vec![0]);
    for t in trees_up_to(9) {
        let mut want: Vec<u32> = t.degree_sequence().iter().map(|&d| d as u32).collect();
        want.sort_by(|a, b| b.cmp(a));
        assert_eq!(seq(&t), want);
    }
}
