use std::fmt;

use super::{bit, Graph};
use crate::canon::{canonical_order, dense_colors, Matrix};

/// Isomorphism certificate of a graph: vertex count followed by the packed
/// upper triangle of the canonical adjacency matrix.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn vertex_count(&self) -> usize {
        self.0[0] as usize
    }

    /// The canonical representative this code was built from.
    pub fn graph(&self) -> Graph {
        let n = self.vertex_count();
        let mut adj = vec![0u64; n];
        let mut k = 0usize;
        for i in 0..n {
            for j in i + 1..n {
                if self.0[1 + k / 8] & (0x80 >> (k % 8)) != 0 {
                    adj[i] |= bit(j);
                    adj[j] |= bit(i);
                }
                k += 1;
            }
        }
        Graph::from_adjacency(adj)
    }

    fn encode(g: &Graph) -> CanonicalCode {
        let n = g.vertex_count();
        let bits = n * n.saturating_sub(1) / 2;
        let mut out = vec![0u8; 1 + bits.div_ceil(8)];
        out[0] = n as u8;
        let mut k = 0usize;
        for i in 0..n {
            for j in i + 1..n {
                if g.has_edge(i, j) {
                    out[1 + k / 8] |= 0x80 >> (k % 8);
                }
                k += 1;
            }
        }
        CanonicalCode(out)
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

fn canonical_connected(g: &Graph) -> (Vec<u8>, Graph) {
    let n = g.vertex_count();
    if n <= 2 {
        let cert = g.edges().iter().map(|_| 1u8).collect();
        return (cert, g.clone());
    }
    let m = Matrix::from_fn(n, |i, j| u8::from(g.has_edge(i, j)));
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let (order, cert) = canonical_order(&m, &dense_colors(&degrees));
    (cert, g.relabel(&order))
}

/// Canonical relabelling of `g` together with its code. Components are
/// canonised separately and laid out in increasing (size, certificate) order.
pub fn canonical_form(g: &Graph) -> (Graph, CanonicalCode) {
    let masks = g.component_masks();
    let canon = if masks.len() == 1 {
        canonical_connected(g).1
    } else {
        let mut parts: Vec<(usize, Vec<u8>, Graph)> = masks
            .iter()
            .map(|&m| {
                let (cert, h) = canonical_connected(&g.induced(m));
                (h.vertex_count(), cert, h)
            })
            .collect();
        parts.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        let mut adj = Vec::with_capacity(g.vertex_count());
        for (_, _, h) in parts {
            let off = adj.len();
            adj.extend((0..h.vertex_count()).map(|v| h.row(v) << off));
        }
        Graph::from_adjacency(adj)
    };
    let code = CanonicalCode::encode(&canon);
    (canon, code)
}

pub fn canonical_code(g: &Graph) -> CanonicalCode {
    canonical_form(g).1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn code_roundtrips_to_graph() {
        let g = named::path(4).disjoint_union(&named::cycle(3)).unwrap();
        let (canon, code) = canonical_form(&g);
        assert_eq!(code.graph(), canon);
        assert_eq!(canonical_code(&canon), code);
    }

    #[test]
    fn relabelled_path_and_star_vs_triangle() {
        let a = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
        let star = named::star(3);
        let tri = named::complete(3).disjoint_union(&named::empty(1)).unwrap();
        assert_ne!(canonical_code(&star), canonical_code(&tri));
    }
}
