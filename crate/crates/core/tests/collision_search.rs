use std::collections::BTreeSet;

use posetlab::graph::{canonical_code, named};
use posetlab::lattice::partition_deck;
use posetlab::poset::{build_edge_poset, poset_isomorphic};
use posetlab::search::{
    cached_report, family_check, lc_collisions, pe_collisions, report_from_json, report_to_json, xg_collisions,
    CollisionReport, FamilyComponent,
};
use posetlab::symfun::xg_direct;
use posetlab::{CanonicalCode, Graph};

fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).unwrap()
}

fn u(parts: &[Graph]) -> Graph {
    named::union(parts)
}

fn class(members: &[Graph]) -> BTreeSet<CanonicalCode> {
    members.iter().map(canonical_code).collect()
}

fn classes_of(r: &CollisionReport, edges: usize) -> BTreeSet<BTreeSet<CanonicalCode>> {
    r.classes
        .iter()
        .filter(|c| c[0].graph().edge_count() == edges)
        .map(|c| c.iter().cloned().collect())
        .collect()
}

fn k2() -> Graph {
    named::path(2)
}
fn k3() -> Graph {
    named::complete(3)
}
fn k13() -> Graph {
    named::star(3)
}
fn k12() -> Graph {
    named::star(2)
}

/// K_{1,3} with one edge subdivided.
fn fork() -> Graph {
    g(5, &[(0, 1), (1, 2), (2, 3), (2, 4)])
}
/// Two adjacent centres with two leaves each.
fn double_star() -> Graph {
    g(6, &[(0, 4), (1, 4), (2, 5), (3, 5), (4, 5)])
}
/// C_4 with a pendant edge.
fn banner() -> Graph {
    g(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
}

fn expected(edges: usize) -> Vec<BTreeSet<CanonicalCode>> {
    match edges {
        2 => vec![class(&[k12(), named::matching(2)])],
        3 => vec![class(&[k3(), k13(), named::matching(3)]), class(&[named::path(4), u(&[k12(), k2()])])],
        4 => vec![
            class(&[named::star(4), named::matching(4)]),
            class(&[u(&[named::path(4), k2()]), fork()]),
            class(&[named::cycle(4), u(&[k12(), k12()])]),
            class(&[u(&[k3(), k2()]), u(&[k13(), k2()])]),
        ],
        5 => vec![
            class(&[named::star(5), named::matching(5)]),
            class(&[u(&[k3(), k2(), k2()]), u(&[k13(), k2(), k2()])]),
            class(&[u(&[k3(), k12()]), u(&[k13(), k12()])]),
            class(&[u(&[named::cycle(4), k2()]), double_star()]),
            class(&[named::path(6), banner()]),
        ],
        6 => vec![
            class(&[named::star(6), named::matching(6)]),
            class(&[u(&[k3(), named::matching(3)]), u(&[k13(), named::matching(3)])]),
            class(&[u(&[k3(), k3()]), u(&[k13(), k13()])]),
            class(&[u(&[k3(), named::path(4)]), u(&[k13(), named::path(4)])]),
            class(&[u(&[k3(), k12(), k2()]), u(&[k13(), k12(), k2()])]),
            // C_4 with pendants at two adjacent vertices, and C_4 with a pendant path.
            class(&[
                g(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5)]),
                g(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]),
            ]),
        ],
        7 => {
            let mut v = vec![
                class(&[named::star(7), named::matching(7)]),
                class(&[u(&[k3(), k3(), k2()]), u(&[k13(), k13(), k2()])]),
            ];
            for f in [
                named::path(5),
                named::cycle(4),
                named::paw(),
                u(&[k12(), k12()]),
                u(&[named::path(4), k2()]),
                u(&[k12(), k2(), k2()]),
                named::matching(4),
            ] {
                v.push(class(&[u(&[k3(), f.clone()]), u(&[k13(), f])]));
            }
            v
        }
        _ => Vec::new(),
    }
}

/// Classes the scan finds beyond the published lists.
fn unlisted(edges: usize) -> Vec<BTreeSet<CanonicalCode>> {
    let k23 = g(5, &[(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)]);
    match edges {
        6 => vec![class(&[k23, named::cycle(6)])],
        7 => vec![class(&[
            g(6, &[(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (2, 5)]),
            g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]),
        ])],
        _ => Vec::new(),
    }
}

#[test]
fn edge_poset_classes_up_to_five_edges_match_the_lists() {
    let r = pe_collisions(5, false).unwrap();
    for e in 1..=5 {
        let want: BTreeSet<_> = expected(e).into_iter().collect();
        assert_eq!(classes_of(&r, e), want, "{e} edges");
    }
    assert_eq!(r.classes.len(), 12);
}

#[test]
fn edge_poset_classes_at_six_and_seven_edges() {
    let r = pe_collisions(7, false).unwrap();
    for e in 6..=7 {
        let want: BTreeSet<_> = expected(e).into_iter().chain(unlisted(e)).collect();
        assert_eq!(classes_of(&r, e), want, "{e} edges");
    }
    for c in &r.classes {
        let a = build_edge_poset(&c[0].graph()).unwrap();
        for other in &c[1..] {
            assert!(poset_isomorphic(&a, &build_edge_poset(&other.graph()).unwrap()).is_some());
        }
    }
}

#[test]
fn scan_bounds() {
    assert!(pe_collisions(8, false).is_err());
    assert!(lc_collisions(9).is_err());
    assert!(xg_collisions(7, false).is_err());
    assert!(xg_collisions(10, true).is_err());
}

#[test]
fn lattice_classes_up_to_seven_vertices() {
    let r = lc_collisions(7).unwrap();
    let got: BTreeSet<BTreeSet<CanonicalCode>> = r.classes.iter().map(|c| c.iter().cloned().collect()).collect();
    let want: BTreeSet<_> = [
        class(&[k12(), named::matching(2)]),
        class(&[k13(), named::matching(3)]),
        class(&[named::path(4), u(&[k12(), k2()])]),
        class(&[fork(), u(&[named::path(4), k2()])]),
    ]
    .into_iter()
    .collect();
    assert_eq!(got, want);
    let small = lc_collisions(4).unwrap();
    assert_eq!(small.classes, vec![vec![canonical_code(&k12()), canonical_code(&named::matching(2))]]);
}

#[test]
fn chromatic_symmetric_function_classes() {
    assert!(xg_collisions(3, false).unwrap().classes.is_empty());
    let r = xg_collisions(5, false).unwrap();
    assert_eq!(r.classes.len(), 1);
    assert_eq!(r.decks_equal, Some(vec![false]));
    let pair: Vec<Graph> = r.classes[0].iter().map(|c| c.graph()).collect();
    assert_eq!(xg_direct(&pair[0]).unwrap(), xg_direct(&pair[1]).unwrap());
    assert_ne!(partition_deck(&pair[0]).unwrap(), partition_deck(&pair[1]).unwrap());
    assert!(xg_collisions(9, true).unwrap().classes.is_empty());
}

#[test]
fn families_of_triangles_and_claws() {
    // (K_3)^2 sits with (K_{1,3})^2, not with K_3 K_{1,3}.
    assert!(!family_check(2, 0, 1, 1, &[]).unwrap());
    assert!(family_check(2, 0, 0, 2, &[]).unwrap());
    assert!(family_check(1, 0, 0, 1, &[FamilyComponent::Path(2); 4]).unwrap());
    assert!(family_check(1, 0, 0, 1, &[FamilyComponent::Cycle(4)]).unwrap());
    assert!(family_check(1, 0, 1, 0, &[]).is_err());
}

#[test]
fn report_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let first = cached_report(Some(dir.path()), "pe", 4, || pe_collisions(4, false)).unwrap();
    let again = cached_report(Some(dir.path()), "pe", 4, || panic!("should read the cache")).unwrap();
    assert_eq!(first, again);
    assert_eq!(report_from_json(&report_to_json(&first)).unwrap(), first);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}
