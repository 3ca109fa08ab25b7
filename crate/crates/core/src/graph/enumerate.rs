use std::collections::BTreeMap;

use super::{bit, canonical_form, full_mask, CanonicalCode, Graph};
use crate::error::{Error, Result};

/// Bounds for [`enumerate_graphs`].
///
/// With isolated vertices allowed, `max_vertices = n` lists the graphs on
/// exactly `n` vertices: a smaller graph is represented by its padding with
/// isolated vertices. With `no_isolated`, every vertex count up to the bound
/// is included and the null graph is excluded.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GraphQuery {
    pub max_vertices: Option<usize>,
    pub max_edges: Option<usize>,
    pub no_isolated: bool,
}

fn sort_key(g: &Graph, c: &CanonicalCode) -> (usize, usize, CanonicalCode) {
    (g.vertex_count(), g.edge_count(), c.clone())
}

fn finish(map: BTreeMap<CanonicalCode, Graph>) -> Vec<Graph> {
    let mut v: Vec<(usize, usize, CanonicalCode, Graph)> = map
        .into_iter()
        .map(|(c, g)| {
            let (a, b, c) = sort_key(&g, &c);
            (a, b, c, g)
        })
        .collect();
    v.sort_by(|x, y| (x.0, x.1, &x.2).cmp(&(y.0, y.1, &y.2)));
    v.into_iter().map(|x| x.3).collect()
}

/// One canonical representative per isomorphism class, ordered by (v, e, code).
pub fn enumerate_graphs(q: &GraphQuery) -> Result<Vec<Graph>> {
    match (q.no_isolated, q.max_vertices, q.max_edges) {
        (_, None, None) => Err(Error::Precondition("enumeration needs a vertex or edge bound".into())),
        (false, None, Some(_)) => Err(Error::Precondition(
            "graphs with isolated vertices need a vertex bound".into(),
        )),
        (false, Some(n), e) => Ok(graphs_on(n)?
            .into_iter()
            .filter(|g| e.map_or(true, |e| g.edge_count() <= e))
            .collect()),
        (true, n, Some(e)) => {
            let mut map = BTreeMap::new();
            for g in by_edges(e, n.unwrap_or(2 * e)) {
                let (g, c) = canonical_form(&g);
                map.insert(c, g);
            }
            Ok(finish(map))
        }
        (true, Some(n), None) => {
            let mut out = Vec::new();
            for k in 1..=n {
                out.extend(graphs_on(k)?.into_iter().filter(|g| !g.has_isolated_vertex()));
            }
            Ok(out)
        }
    }
}

/// All graphs on exactly `n` vertices, grown one vertex at a time.
pub fn graphs_on(n: usize) -> Result<Vec<Graph>> {
    if n > 10 {
        return Err(Error::Precondition(format!("graphs_on({n}) exceeds the desk-scale cap of 10")));
    }
    let mut level = vec![Graph::empty(0)?];
    for k in 1..=n {
        let mut map = BTreeMap::new();
        for g in &level {
            for nb in 0..=full_mask(k - 1) {
                let mut adj: Vec<u64> = (0..k - 1).map(|v| g.row(v) | if nb & bit(v) != 0 { bit(k - 1) } else { 0 }).collect();
                adj.push(nb);
                let (h, c) = canonical_form(&Graph::from_adjacency(adj));
                map.entry(c).or_insert(h);
            }
        }
        level = finish(map);
    }
    Ok(level)
}

/// Isolated-vertex-free graphs with 1..=max_edges edges and at most `max_v` vertices.
fn by_edges(max_edges: usize, max_v: usize) -> Vec<Graph> {
    let mut all = Vec::new();
    if max_edges == 0 || max_v < 2 {
        return all;
    }
    let mut level: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
    let k2 = Graph::from_edges(2, &[(0, 1)]).expect("K_2");
    let (g, c) = canonical_form(&k2);
    level.insert(c, g);
    for _ in 1..max_edges {
        let mut next = BTreeMap::new();
        for g in level.values() {
            let n = g.vertex_count();
            let mut cands: Vec<Graph> = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        let mut h = g.clone();
                        h.add_edge(u, v);
                        cands.push(h);
                    }
                }
            }
            if n < max_v && n < 64 {
                for u in 0..n {
                    let mut h = g.disjoint_union(&Graph::empty(1).expect("K_1")).expect("fits");
                    h.add_edge(u, n);
                    cands.push(h);
                }
            }
            if n + 2 <= max_v && n + 2 <= 64 {
                cands.push(g.disjoint_union(&k2).expect("fits"));
            }
            for h in cands {
                let (h, c) = canonical_form(&h);
                next.entry(c).or_insert(h);
            }
        }
        all.extend(level.into_values());
        level = next;
    }
    all.extend(level.into_values());
    all
}

/// All trees with 1..=n vertices, ordered by (v, e, code).
pub fn trees_up_to(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let k1 = Graph::empty(1).expect("K_1");
    let mut level = vec![k1.clone()];
    out.push(k1.clone());
    for _ in 2..=n {
        let mut map = BTreeMap::new();
        for t in &level {
            for u in 0..t.vertex_count() {
                let mut h = t.disjoint_union(&k1).expect("fits");
                h.add_edge(u, t.vertex_count());
                let (h, c) = canonical_form(&h);
                map.entry(c).or_insert(h);
            }
        }
        level = finish(map);
        out.extend(level.iter().cloned());
    }
    out
}
