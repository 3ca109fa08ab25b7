//! Simple graphs, canonical codes, subgraph counting, connected partitions,
//! exhaustive enumeration and decks.

mod canon;
mod count;
mod enumerate;
pub mod named;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canon::{canonical_code, canonical_form, CanonicalCode};
pub use count::{
    components, connected_partitions, connected_subsets, count_edge_sub, count_induced,
    count_pi_sub, deck, edge_histogram, induced_histogram, partition_histogram, DeckKind,
};
pub use enumerate::{enumerate_graphs, graphs_on, trees_up_to, GraphQuery};

/// Largest supported vertex count (adjacency rows are `u64` bitmasks).
pub const MAX_VERTICES: usize = 64;

/// Finite simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

pub(crate) fn mask_iter(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u == v || u >= n || v >= n || g.has_edge(u, v) {
                return Err(Error::InvalidEdge(u, v));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Graph {
        Graph { n: adj.len(), adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    /// Adds `uv`; both endpoints must exist and differ.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        mask_iter(self.adj[v])
    }

    pub(crate) fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in mask_iter(self.adj[u] & !full_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Degree sequence, non-increasing.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|&r| r == 0)
    }

    pub(crate) fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    /// Subgraph induced on the vertex set `mask`, relabelled in increasing order.
    pub fn induced(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = mask_iter(mask).collect();
        let mut adj = vec![0u64; verts.len()];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[i] |= bit(j);
                }
            }
        }
        Graph { n: verts.len(), adj }
    }

    /// Induced subgraph on the vertices in `cells`, keeping only edges inside a cell.
    pub fn pi_subgraph(&self, cells: &[u64]) -> Graph {
        let union = cells.iter().fold(0, |a, &c| a | c);
        let verts: Vec<usize> = mask_iter(union).collect();
        let mut pos = [0usize; MAX_VERTICES];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let mut adj = vec![0u64; verts.len()];
        for &c in cells {
            for u in mask_iter(c) {
                for v in mask_iter(self.adj[u] & c) {
                    adj[pos[u]] |= bit(pos[v]);
                }
            }
        }
        Graph { n: verts.len(), adj }
    }

    /// Graph spanned by an edge subset, isolated vertices dropped.
    pub(crate) fn edge_subgraph(&self, edges: &[(usize, usize)]) -> Graph {
        let mut used = 0u64;
        for &(u, v) in edges {
            used |= bit(u) | bit(v);
        }
        let verts: Vec<usize> = mask_iter(used).collect();
        let mut pos = [0usize; MAX_VERTICES];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let mut adj = vec![0u64; verts.len()];
        for &(u, v) in edges {
            adj[pos[u]] |= bit(pos[v]);
            adj[pos[v]] |= bit(pos[u]);
        }
        Graph { n: verts.len(), adj }
    }

    /// Drops isolated vertices.
    pub fn without_isolated(&self) -> Graph {
        let keep = (0..self.n).filter(|&v| self.adj[v] != 0).fold(0, |m, v| m | bit(v));
        self.induced(keep)
    }

    pub fn remove_vertex(&self, v: usize) -> Graph {
        self.induced(self.vertex_mask() & !bit(v))
    }

    /// Vertex `i` of the result is vertex `perm[i]` of `self`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut inv = vec![0usize; self.n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let adj = perm
            .iter()
            .map(|&p| mask_iter(self.adj[p]).fold(0u64, |m, q| m | bit(inv[q])))
            .collect();
        Graph { n: self.n, adj }
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// Vertex sets of the connected components, ordered by least vertex.
    pub fn component_masks(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen & bit(s) != 0 {
                continue;
            }
            let c = self.reach(bit(s), self.vertex_mask());
            seen |= c;
            out.push(c);
        }
        out
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn reach(&self, start: u64, within: u64) -> u64 {
        let mut comp = start & within;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u64;
            for v in mask_iter(frontier) {
                next |= self.adj[v];
            }
            next &= within & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    pub(crate) fn mask_connected(&self, mask: u64) -> bool {
        mask != 0 && self.reach(mask & mask.wrapping_neg(), mask) == mask
    }

    pub fn component_count(&self) -> usize {
        self.component_masks().len()
    }

    /// The null graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.mask_connected(self.vertex_mask())
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.edge_count() == self.n - 1
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Integer partition, parts non-increasing and positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct IntPartition(Vec<u32>);

impl IntPartition {
    /// Sorts the parts; rejects zero parts.
    pub fn new(mut parts: Vec<u32>) -> Result<IntPartition> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Precondition("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(IntPartition(parts))
    }

    pub fn ones(n: usize) -> IntPartition {
        IntPartition(vec![1; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Multiplicity of each distinct part, in part order.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// All partitions of `n`, in reverse lexicographic order starting at `(n)`.
    pub fn all(n: u32) -> Vec<IntPartition> {
        fn go(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<IntPartition>) {
            if rem == 0 {
                out.push(IntPartition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                go(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<u32>> for IntPartition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<IntPartition> {
        IntPartition::new(v)
    }
}

impl From<IntPartition> for Vec<u32> {
    fn from(p: IntPartition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Disjoint non-empty vertex subsets, stored as bitmasks ordered by least vertex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SetPartition {
    cells: Vec<u64>,
}

impl SetPartition {
    pub fn new(mut cells: Vec<u64>) -> Result<SetPartition> {
        let mut seen = 0u64;
        for &c in &cells {
            if c == 0 || seen & c != 0 {
                return Err(Error::Precondition("cells must be non-empty and disjoint".into()));
            }
            seen |= c;
        }
        cells.sort_unstable_by_key(|c| c.trailing_zeros());
        Ok(SetPartition { cells })
    }

    pub fn cell_masks(&self) -> &[u64] {
        &self.cells
    }

    pub fn cells(&self) -> Vec<Vec<usize>> {
        self.cells.iter().map(|&c| mask_iter(c).collect()).collect()
    }

    /// Cell sizes as an integer partition, written λ(π).
    pub fn shape(&self) -> IntPartition {
        IntPartition::new(self.cells.iter().map(|c| c.count_ones()).collect())
            .expect("cells are non-empty")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_of_small_integers() {
        let counts: Vec<usize> = (1..=9).map(|n| IntPartition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30]);
        assert_eq!(IntPartition::new(vec![1, 2, 1]).unwrap().to_string(), "(2,1,1)");
    }

    #[test]
    fn components_and_connectivity() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.component_masks(), vec![0b111, 0b11000]);
        assert!(!g.is_connected());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap().is_tree());
        assert_eq!(Graph::from_edges(2, &[(0, 1), (1, 0)]), Err(Error::InvalidEdge(1, 0)));
    }
}
