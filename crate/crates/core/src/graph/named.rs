//! Small named graphs. `path(n)` and `cycle(n)` have `n` vertices.

use super::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("named graph is well formed")
}

pub fn empty(n: usize) -> Graph {
    build(n, &[])
}

pub fn path(n: usize) -> Graph {
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &e)
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    e.push((n - 1, 0));
    build(n, &e)
}

pub fn complete(n: usize) -> Graph {
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            e.push((i, j));
        }
    }
    build(n, &e)
}

/// K_{1,n}: centre 0 and `n` leaves.
pub fn star(n: usize) -> Graph {
    let e: Vec<_> = (1..=n).map(|i| (0, i)).collect();
    build(n + 1, &e)
}

/// (K_2)^n.
pub fn matching(n: usize) -> Graph {
    let e: Vec<_> = (0..n).map(|i| (2 * i, 2 * i + 1)).collect();
    build(2 * n, &e)
}

/// Triangle with one pendant edge (B_1, the paw).
pub fn paw() -> Graph {
    build(4, &[(0, 1), (1, 2), (2, 0), (2, 3)])
}

/// K_4 minus an edge.
pub fn diamond() -> Graph {
    build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
}

/// Disjoint union of the given graphs, in order.
pub fn union(parts: &[Graph]) -> Graph {
    parts
        .iter()
        .try_fold(empty(0), |acc, g| acc.disjoint_union(g))
        .expect("union fits in 64 vertices")
}
