use std::collections::{BTreeMap, BTreeSet, HashSet};

use posetlab::graph::{
    canonical_code, components, connected_partitions, count_edge_sub, count_induced, count_pi_sub,
    deck, edge_histogram, enumerate_graphs, graphs_on, named, trees_up_to, DeckKind, GraphQuery,
};
use posetlab::{Graph, IntPartition};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

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

/// Least adjacency bit string over all vertex orders.
fn brute_canon(g: &Graph, perms: &[Vec<usize>]) -> Vec<bool> {
    let n = g.vertex_count();
    perms
        .iter()
        .map(|p| {
            let mut bits = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    bits.push(g.has_edge(p[i], p[j]));
                }
            }
            bits
        })
        .min()
        .unwrap()
}

fn labelled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len())
        .map(|m| {
            let e: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| m >> k & 1 == 1).map(|(_, &p)| p).collect();
            Graph::from_edges(n, &e).unwrap()
        })
        .collect()
}

#[test]
fn four_vertex_labellings_give_eleven_codes() {
    let codes: BTreeSet<_> = labelled_graphs(4).iter().map(canonical_code).collect();
    assert_eq!(codes.len(), 11);
}

#[test]
fn codes_agree_with_permutation_oracle_up_to_six_vertices() {
    for n in 1..=6 {
        let perms = permutations(n);
        let mut by_code: BTreeMap<_, Vec<bool>> = BTreeMap::new();
        let mut classes = HashSet::new();
        for g in labelled_graphs(n) {
            let b = brute_canon(&g, &perms);
            classes.insert(b.clone());
            let prev = by_code.entry(canonical_code(&g)).or_insert_with(|| b.clone());
            assert_eq!(*prev, b, "one code, two classes on {n} vertices");
        }
        assert_eq!(by_code.len(), classes.len(), "one class, two codes on {n} vertices");
    }
}

#[test]
fn graph_counts_by_vertices_edges_and_trees() {
    let per_n: Vec<usize> = (1..=7).map(|n| graphs_on(n).unwrap().len()).collect();
    assert_eq!(per_n, vec![1, 2, 4, 11, 34, 156, 1044]);
    let q = GraphQuery { max_vertices: None, max_edges: Some(7), no_isolated: true };
    let mut per_e = [0usize; 8];
    for g in enumerate_graphs(&q).unwrap() {
        per_e[g.edge_count()] += 1;
    }
    assert_eq!(per_e, [0, 1, 2, 5, 11, 26, 68, 177]);
    let trees: Vec<usize> = (1..=9).map(|n| trees_up_to(n).iter().filter(|t| t.vertex_count() == n).count()).collect();
    assert_eq!(trees, vec![1, 1, 1, 2, 3, 6, 11, 23, 47]);
    assert_eq!(trees_up_to(9).len(), 95);
}

#[test]
fn enumeration_examples_and_order() {
    let all4 = enumerate_graphs(&GraphQuery { max_vertices: Some(4), ..Default::default() }).unwrap();
    assert_eq!(all4.len(), 11);
    assert_eq!(enumerate_graphs(&GraphQuery { max_vertices: Some(3), ..Default::default() }).unwrap().len(), 4);
    let two = enumerate_graphs(&GraphQuery { max_vertices: None, max_edges: Some(2), no_isolated: true }).unwrap();
    let want: BTreeSet<_> = [named::path(2), named::star(2), named::matching(2)].iter().map(canonical_code).collect();
    assert_eq!(two.iter().map(canonical_code).collect::<BTreeSet<_>>(), want);
    let keys: Vec<_> = all4.iter().map(|g| (g.vertex_count(), g.edge_count(), canonical_code(g))).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert!(enumerate_graphs(&GraphQuery::default()).is_err());
}

#[test]
fn counting_examples() {
    let p4 = named::path(4);
    assert_eq!(count_induced(&named::star(2), &p4), 2);
    assert_eq!(count_edge_sub(&named::star(2), &p4).unwrap(), 2);
    assert_eq!(count_edge_sub(&named::matching(2), &p4).unwrap(), 1);
    assert_eq!(count_edge_sub(&named::star(2), &named::complete(3)).unwrap(), 3);
    assert!(count_edge_sub(&named::empty(2), &p4).is_err());
    let c4 = named::cycle(4);
    assert_eq!(count_pi_sub(&named::matching(2), &c4), 2);
    assert_eq!(count_pi_sub(&named::star(2), &c4), 4);
    for g in graphs_on(5).unwrap() {
        assert_eq!(count_pi_sub(&named::empty(5), &g), 1);
    }
}

#[test]
fn induced_counts_of_k1_and_k2() {
    let k1 = named::empty(1);
    let k2 = named::path(2);
    for n in 1..=7 {
        for g in graphs_on(n).unwrap() {
            assert_eq!(count_induced(&k1, &g), n as u64);
            assert_eq!(count_induced(&k2, &g), g.edge_count() as u64);
        }
    }
}

#[test]
fn edge_counts_match_histogram_path() {
    let q = GraphQuery { max_vertices: None, max_edges: Some(5), no_isolated: true };
    let graphs = enumerate_graphs(&q).unwrap();
    for g in graphs.iter().filter(|g| g.edge_count() <= 4) {
        let hist = edge_histogram(g);
        for f in &graphs {
            let direct = count_edge_sub(f, g).unwrap();
            assert_eq!(direct, hist.get(&canonical_code(f)).copied().unwrap_or(0));
        }
    }
}

/// π-subgraphs as (vertex set, edge set) objects over arbitrary disjoint families.
fn pi_sub_oracle(f: &Graph, g: &Graph) -> u64 {
    let n = g.vertex_count();
    let code = canonical_code(f);
    let mut seen: BTreeSet<(u64, Vec<(usize, usize)>)> = BTreeSet::new();
    fn families(rem: u64, cells: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        out.push(cells.clone());
        if rem == 0 {
            return;
        }
        // New cells must contain a vertex above the previous cell's least vertex.
        let floor = cells.last().map_or(0, |c| c.trailing_zeros() + 1);
        let mut s = rem;
        while s != 0 {
            if s.trailing_zeros() >= floor {
                cells.push(s);
                families(rem & !s, cells, out);
                cells.pop();
            }
            s = (s - 1) & rem;
        }
    }
    let mut fams = Vec::new();
    families((1u64 << n) - 1, &mut Vec::new(), &mut fams);
    let mut count = 0;
    for fam in fams {
        let verts = fam.iter().fold(0u64, |a, &c| a | c);
        if verts.count_ones() as usize != f.vertex_count() {
            continue;
        }
        let mut edges = Vec::new();
        for (u, v) in g.edges() {
            if fam.iter().any(|&c| c >> u & 1 == 1 && c >> v & 1 == 1) {
                edges.push((u, v));
            }
        }
        if !seen.insert((verts, edges.clone())) {
            continue;
        }
        let idx: Vec<usize> = (0..n).filter(|&v| verts >> v & 1 == 1).collect();
        let pos = |v: usize| idx.iter().position(|&x| x == v).unwrap();
        let e: Vec<_> = edges.iter().map(|&(u, v)| (pos(u), pos(v))).collect();
        if canonical_code(&Graph::from_edges(idx.len(), &e).unwrap()) == code {
            count += 1;
        }
    }
    count
}

#[test]
fn pi_counts_match_family_oracle() {
    let pool: Vec<Graph> = (1..=4).flat_map(|n| graphs_on(n).unwrap()).collect();
    for n in 1..=5 {
        for g in graphs_on(n).unwrap() {
            for f in pool.iter().filter(|f| f.vertex_count() <= n) {
                assert_eq!(count_pi_sub(f, &g), pi_sub_oracle(f, &g), "f={f} g={g}");
            }
        }
    }
}

#[test]
fn connected_partition_examples() {
    assert_eq!(connected_partitions(&named::empty(1)).unwrap().len(), 1);
    assert_eq!(connected_partitions(&named::complete(3)).unwrap().len(), 5);
    assert!(connected_partitions(&named::empty(0)).is_err());
    for t in trees_up_to(8) {
        assert_eq!(connected_partitions(&t).unwrap().len(), 1 << t.edge_count());
    }
    let shapes: BTreeMap<IntPartition, usize> =
        connected_partitions(&named::complete(3)).unwrap().iter().fold(BTreeMap::new(), |mut m, p| {
            *m.entry(p.shape()).or_insert(0) += 1;
            m
        });
    assert_eq!(shapes.len(), 3);
}

#[test]
fn decks_and_components() {
    let k2 = canonical_code(&named::path(2));
    assert_eq!(deck(&named::complete(3), DeckKind::Vertex).unwrap(), vec![k2.clone(); 3]);
    let p3 = canonical_code(&named::star(2));
    let m2 = canonical_code(&named::matching(2));
    let mut want = vec![p3.clone(), p3.clone(), m2];
    want.sort();
    assert_eq!(deck(&named::path(4), DeckKind::Edge).unwrap(), want);
    assert_eq!(deck(&named::star(3), DeckKind::Edge).unwrap(), deck(&named::complete(3), DeckKind::Edge).unwrap());
    assert_eq!(components(&named::path(4)), vec![canonical_code(&named::path(4)).graph()]);
    let g = named::union(&[named::star(2), named::path(2)]);
    assert_eq!(components(&g).iter().map(canonical_code).collect::<Vec<_>>(), vec![k2.clone(), p3]);
    assert_eq!(components(&named::matching(3)).len(), 3);
    assert!(components(&named::matching(3)).iter().all(|c| canonical_code(c) == k2));
}

#[test]
fn kelly_handshake_on_vertex_decks() {
    for n in 1..=7 {
        for g in graphs_on(n).unwrap() {
            let total: usize = deck(&g, DeckKind::Vertex).unwrap().iter().map(|c| c.vertex_count()).sum();
            assert_eq!(total, n * (n - 1));
        }
    }
}

#[test]
fn code_survives_random_relabellings() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 1..=7 {
        for g in graphs_on(n).unwrap() {
            let code = canonical_code(&g);
            for _ in 0..100 {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                assert_eq!(canonical_code(&g.relabel(&perm)), code);
            }
        }
    }
}
