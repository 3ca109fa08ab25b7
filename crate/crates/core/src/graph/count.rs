use std::collections::{BTreeMap, HashMap};

use super::{canonical_code, canonical_form, mask_iter, CanonicalCode, Graph, SetPartition};
use crate::error::{Error, Result};

/// ⟨F,G⟩_v: vertex subsets of `g` inducing a copy of `f`.
pub fn count_induced(f: &Graph, g: &Graph) -> u64 {
    let k = f.vertex_count();
    if k > g.vertex_count() {
        return 0;
    }
    let code = canonical_code(f);
    let e = f.edge_count();
    let mut n = 0;
    for mask in 0..=g.vertex_mask() {
        if mask.count_ones() as usize != k {
            continue;
        }
        let h = g.induced(mask);
        if h.edge_count() == e && canonical_code(&h) == code {
            n += 1;
        }
    }
    n
}

/// Histogram of induced subgraphs over all non-empty vertex subsets.
pub fn induced_histogram(g: &Graph) -> BTreeMap<CanonicalCode, u64> {
    let mut out = BTreeMap::new();
    for mask in 1..=g.vertex_mask() {
        *out.entry(canonical_code(&g.induced(mask))).or_insert(0) += 1;
    }
    out
}

/// ⟨F,G⟩_e: edge subsets of `g` spanning a copy of `f`, isolated vertices ignored.
pub fn count_edge_sub(f: &Graph, g: &Graph) -> Result<u64> {
    let f = f.without_isolated();
    if f.edge_count() == 0 {
        return Err(Error::EmptyGraph("count_edge_sub pattern"));
    }
    let code = canonical_code(&f);
    let edges = g.edges();
    let k = f.edge_count();
    if edges.len() > 63 {
        return Err(Error::Precondition("edge subset enumeration needs e(g) < 64".into()));
    }
    let mut n = 0;
    let mut chosen = Vec::with_capacity(k);
    for s in 0..(1u64 << edges.len()) {
        if s.count_ones() as usize != k {
            continue;
        }
        chosen.clear();
        chosen.extend(mask_iter(s).map(|i| edges[i]));
        let h = g.edge_subgraph(&chosen);
        if h.vertex_count() == f.vertex_count() && canonical_code(&h) == code {
            n += 1;
        }
    }
    Ok(n)
}

/// Histogram of edge subgraphs over all non-empty edge subsets.
pub fn edge_histogram(g: &Graph) -> BTreeMap<CanonicalCode, u64> {
    let edges = g.edges();
    assert!(edges.len() < 64, "edge subset enumeration needs e(g) < 64");
    let mut out = BTreeMap::new();
    let mut chosen = Vec::new();
    for s in 1..(1u64 << edges.len()) {
        chosen.clear();
        chosen.extend(mask_iter(s).map(|i| edges[i]));
        *out.entry(canonical_code(&g.edge_subgraph(&chosen))).or_insert(0) += 1;
    }
    out
}

/// All non-empty vertex subsets inducing a connected subgraph, increasing as masks.
pub fn connected_subsets(g: &Graph) -> Vec<u64> {
    (1..=g.vertex_mask()).filter(|&m| g.mask_connected(m)).collect()
}

/// ⟨F,G⟩_π: families of disjoint vertex subsets, each inducing a connected
/// subgraph, whose union of induced subgraphs is a copy of `f`. Counting
/// connected cells makes each π-subgraph count once.
pub fn count_pi_sub(f: &Graph, g: &Graph) -> u64 {
    if f.vertex_count() > g.vertex_count() {
        return 0;
    }
    if f.vertex_count() == 0 {
        return 1;
    }
    let mut comps: Vec<(usize, CanonicalCode)> = f
        .component_masks()
        .iter()
        .map(|&m| (m.count_ones() as usize, canonical_code(&f.induced(m))))
        .collect();
    comps.sort();
    comps.reverse();
    let mut pool: HashMap<&CanonicalCode, Vec<u64>> = HashMap::new();
    for (_, c) in &comps {
        pool.entry(c).or_default();
    }
    for m in connected_subsets(g) {
        let code = canonical_code(&g.induced(m));
        if let Some(v) = pool.get_mut(&code) {
            v.push(m);
        }
    }
    fn go(i: usize, used: u64, prev: u64, comps: &[(usize, CanonicalCode)], pool: &HashMap<&CanonicalCode, Vec<u64>>) -> u64 {
        if i == comps.len() {
            return 1;
        }
        let same_as_prev = i > 0 && comps[i - 1].1 == comps[i].1;
        let mut total = 0;
        for &m in &pool[&comps[i].1] {
            if m & used != 0 || (same_as_prev && m <= prev) {
                continue;
            }
            total += go(i + 1, used | m, m, comps, pool);
        }
        total
    }
    go(0, 0, 0, &comps, &pool)
}

/// Partitions of V(g) whose cells all induce connected subgraphs.
pub fn connected_partitions(g: &Graph) -> Result<Vec<SetPartition>> {
    if g.vertex_count() == 0 {
        return Err(Error::NullGraph("connected_partitions"));
    }
    let mut out = Vec::new();
    let mut cells = Vec::new();
    partitions_rec(g, g.vertex_mask(), &mut cells, &mut |cells| {
        out.push(SetPartition { cells: cells.to_vec() })
    });
    Ok(out)
}

fn partitions_rec(g: &Graph, rem: u64, cells: &mut Vec<u64>, emit: &mut impl FnMut(&[u64])) {
    if rem == 0 {
        emit(cells);
        return;
    }
    let low = rem & rem.wrapping_neg();
    let rest = rem & !low;
    // Submasks of `rest` in increasing order.
    let mut s = 0u64;
    loop {
        let cell = s | low;
        if g.mask_connected(cell) {
            cells.push(cell);
            partitions_rec(g, rem & !cell, cells, emit);
            cells.pop();
        }
        if s == rest {
            break;
        }
        s = (s.wrapping_sub(rest)) & rest;
    }
}

/// Histogram of the spanning π-subgraphs g[π] over connected partitions π.
pub fn partition_histogram(g: &Graph) -> BTreeMap<CanonicalCode, u64> {
    let mut out = BTreeMap::new();
    if g.vertex_count() == 0 {
        return out;
    }
    let mut cells = Vec::new();
    partitions_rec(g, g.vertex_mask(), &mut cells, &mut |cells| {
        *out.entry(canonical_code(&g.pi_subgraph(cells))).or_insert(0) += 1;
    });
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeckKind {
    Vertex,
    Edge,
}

/// Vertex deck (g − u) or edge deck (g − e with isolated vertices stripped), sorted.
pub fn deck(g: &Graph, kind: DeckKind) -> Result<Vec<CanonicalCode>> {
    let mut out = match kind {
        DeckKind::Vertex => {
            if g.vertex_count() == 0 {
                return Err(Error::NullGraph("vertex deck"));
            }
            (0..g.vertex_count()).map(|v| canonical_code(&g.remove_vertex(v))).collect::<Vec<_>>()
        }
        DeckKind::Edge => {
            if g.edge_count() == 0 {
                return Err(Error::EmptyGraph("edge deck"));
            }
            g.edges()
                .into_iter()
                .map(|(u, v)| {
                    let mut h = g.clone();
                    h.remove_edge(u, v);
                    canonical_code(&h.without_isolated())
                })
                .collect()
        }
    };
    out.sort();
    Ok(out)
}

/// Connected components as canonical graphs, sorted by (size, code).
pub fn components(g: &Graph) -> Vec<Graph> {
    let mut parts: Vec<(usize, CanonicalCode, Graph)> = g
        .component_masks()
        .into_iter()
        .map(|m| {
            let (h, c) = canonical_form(&g.induced(m));
            (h.vertex_count(), c, h)
        })
        .collect();
    parts.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    parts.into_iter().map(|p| p.2).collect()
}
