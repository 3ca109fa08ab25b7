//! Induced and edge subgraph posets with labels on every related pair,
//! labelled-poset isomorphism, and connectivity read off an abstract poset.

use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::canon::{canonical_order, isomorphisms, Matrix};
use crate::error::{Error, Result};
use crate::cache::SubgraphCache;
use crate::graph::{canonical_code, named, CanonicalCode, Graph};
use crate::lattice::TypeLabel;

/// One element of a labelled poset.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PosetElement {
    pub code: Option<CanonicalCode>,
    pub type_label: Option<TypeLabel>,
}

/// Finite poset with a positive label on every related pair `a ≼ b`.
/// `label(a, a) = 1`; unrelated pairs have no label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledPoset {
    elements: Vec<PosetElement>,
    labels: Vec<u64>,
}

impl LabeledPoset {
    /// Builds a poset from a dense label matrix (`0` = unrelated). The
    /// relation must be reflexive with label 1, antisymmetric and transitive.
    pub fn from_labels(elements: Vec<PosetElement>, labels: Vec<u64>) -> Result<LabeledPoset> {
        let n = elements.len();
        if labels.len() != n * n {
            return Err(Error::MalformedPoset("label matrix has the wrong size".into()));
        }
        let p = LabeledPoset { elements, labels };
        for a in 0..n {
            if p.raw(a, a) != 1 {
                return Err(Error::MalformedPoset(format!("label({a},{a}) must be 1")));
            }
            for b in 0..n {
                if a != b && p.raw(a, b) > 0 && p.raw(b, a) > 0 {
                    return Err(Error::MalformedPoset(format!("{a} and {b} are mutually related")));
                }
                for c in 0..n {
                    if p.raw(a, b) > 0 && p.raw(b, c) > 0 && p.raw(a, c) == 0 {
                        return Err(Error::MalformedPoset(format!("relation not transitive at {a},{b},{c}")));
                    }
                }
            }
        }
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[PosetElement] {
        &self.elements
    }

    #[inline]
    pub(crate) fn raw(&self, a: usize, b: usize) -> u64 {
        self.labels[a * self.elements.len() + b]
    }

    /// Label of `a ≼ b`, or `None` if unrelated.
    pub fn label(&self, a: usize, b: usize) -> Option<u64> {
        Some(self.raw(a, b)).filter(|&x| x > 0)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.raw(a, b) > 0
    }

    /// Related pairs `(a, b, label)` with `a ≠ b`.
    pub fn relations(&self) -> Vec<(usize, usize, u64)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && self.raw(a, b) > 0 {
                    out.push((a, b, self.raw(a, b)));
                }
            }
        }
        out
    }

    /// Cover pairs `(a, b, label)`: `a ≺ b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize, u64)> {
        let n = self.len();
        self.relations()
            .into_iter()
            .filter(|&(a, b, _)| !(0..n).any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b)))
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| (0..self.len()).all(|b| b == a || !self.leq(b, a))).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| (0..self.len()).all(|b| b == a || !self.leq(a, b))).collect()
    }

    /// Copy with codes and type labels removed, element order kept.
    pub fn erased(&self) -> LabeledPoset {
        LabeledPoset { elements: vec![PosetElement::default(); self.len()], labels: self.labels.clone() }
    }

    /// Sub-poset on `keep` (in that order).
    pub fn restrict(&self, keep: &[usize]) -> LabeledPoset {
        let elements = keep.iter().map(|&i| self.elements[i].clone()).collect();
        let mut labels = Vec::with_capacity(keep.len() * keep.len());
        for &a in keep {
            for &b in keep {
                labels.push(self.raw(a, b));
            }
        }
        LabeledPoset { elements, labels }
    }

    fn matrix(&self) -> Matrix<u64> {
        Matrix { n: self.len(), w: self.labels.clone() }
    }
}

/// A labelled poset up to isomorphism: codes erased, elements in canonical
/// order. Equality and hashing use the canonical certificate.
#[derive(Clone, Debug)]
pub struct AbstractPoset {
    poset: LabeledPoset,
}

impl AbstractPoset {
    /// Canonical abstract copy and the map from `p`'s indices to the copy's.
    pub fn with_map(p: &LabeledPoset) -> (AbstractPoset, Vec<usize>) {
        let (order, cert) = canonical_order(&p.matrix(), &vec![0; p.len()]);
        let mut map = vec![0; p.len()];
        for (pos, &old) in order.iter().enumerate() {
            map[old] = pos;
        }
        let poset = LabeledPoset { elements: vec![PosetElement::default(); p.len()], labels: cert };
        (AbstractPoset { poset }, map)
    }

    pub fn new(p: &LabeledPoset) -> AbstractPoset {
        Self::with_map(p).0
    }

    pub fn poset(&self) -> &LabeledPoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }
}

impl PartialEq for AbstractPoset {
    fn eq(&self, other: &Self) -> bool {
        self.poset.labels == other.poset.labels
    }
}

impl Eq for AbstractPoset {}

impl Hash for AbstractPoset {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.poset.len().hash(state);
        self.poset.labels.hash(state);
    }
}

fn order_key(c: &CanonicalCode) -> (usize, usize, CanonicalCode) {
    let g = c.graph();
    (g.vertex_count(), g.edge_count(), c.clone())
}

fn assemble(codes: Vec<CanonicalCode>, hist: impl Fn(&CanonicalCode) -> Arc<BTreeMap<CanonicalCode, u64>>) -> LabeledPoset {
    let mut keyed: Vec<_> = codes.into_iter().map(|c| (order_key(&c), c)).collect();
    keyed.sort();
    let codes: Vec<CanonicalCode> = keyed.into_iter().map(|(_, c)| c).collect();
    let n = codes.len();
    let mut labels = vec![0u64; n * n];
    for (b, cb) in codes.iter().enumerate() {
        let h = hist(cb);
        for (a, ca) in codes.iter().enumerate() {
            labels[a * n + b] = h.get(ca).copied().unwrap_or(0);
        }
    }
    let elements = codes.into_iter().map(|c| PosetElement { code: Some(c), type_label: None }).collect();
    LabeledPoset { elements, labels }
}

/// P_v(g): K_1 plus every class of induced subgraph with at least one edge.
pub fn build_induced_poset(g: &Graph) -> Result<LabeledPoset> {
    build_induced_poset_with(g, &SubgraphCache::new())
}

pub fn build_induced_poset_with(g: &Graph, cache: &SubgraphCache) -> Result<LabeledPoset> {
    if g.edge_count() == 0 {
        return Err(Error::EmptyGraph("build_induced_poset"));
    }
    let top = canonical_code(g);
    let k1 = canonical_code(&named::empty(1));
    let codes: Vec<CanonicalCode> = cache
        .induced(&top)
        .keys()
        .filter(|c| *c == &k1 || c.graph().edge_count() > 0)
        .cloned()
        .collect();
    Ok(assemble(codes, |c| cache.induced(c)))
}

/// P_e(g): every class of non-empty edge subgraph (isolated vertices stripped).
pub fn build_edge_poset(g: &Graph) -> Result<LabeledPoset> {
    build_edge_poset_with(g, &SubgraphCache::new())
}

pub fn build_edge_poset_with(g: &Graph, cache: &SubgraphCache) -> Result<LabeledPoset> {
    if g.edge_count() == 0 {
        return Err(Error::EmptyGraph("build_edge_poset"));
    }
    let top = canonical_code(&g.without_isolated());
    let codes: Vec<CanonicalCode> = cache.edge(&top).keys().cloned().collect();
    Ok(assemble(codes, |c| cache.edge(c)))
}

/// Least label-preserving order isomorphism `a -> b`, if any. Codes are ignored.
pub fn poset_isomorphic(a: &LabeledPoset, b: &LabeledPoset) -> Option<Vec<usize>> {
    let za = vec![0u8; a.len()];
    let zb = vec![0u8; b.len()];
    isomorphisms(&a.matrix(), &za, &b.matrix(), &zb, true).into_iter().next()
}

/// All label-preserving automorphisms in lexicographic order; the identity is first.
pub fn poset_automorphisms(p: &LabeledPoset) -> Vec<Vec<usize>> {
    let z = vec![0u8; p.len()];
    isomorphisms(&p.matrix(), &z, &p.matrix(), &z, false)
}

/// Facts about an induced subgraph poset that are readable from labels alone.
#[derive(Clone, Debug)]
pub struct PosetShape {
    /// The unique minimal element (K_1).
    pub k1: usize,
    /// The unique element on two vertices (K_2), if the graph has an edge.
    pub k2: Option<usize>,
    /// The unique maximal element.
    pub top: usize,
    pub vertices: Vec<usize>,
    pub edges: Vec<u64>,
    pub connected: Vec<bool>,
}

impl PosetShape {
    pub fn read(p: &LabeledPoset) -> Result<PosetShape> {
        let mins = p.minimal_elements();
        if mins.len() != 1 {
            return Err(Error::MalformedPoset(format!("{} minimal elements, expected one", mins.len())));
        }
        let maxs = p.maximal_elements();
        if maxs.len() != 1 {
            return Err(Error::MalformedPoset(format!("{} maximal elements, expected one", maxs.len())));
        }
        let k1 = mins[0];
        let n = p.len();
        let vertices: Vec<usize> = (0..n)
            .map(|x| p.label(k1, x).map(|v| v as usize).ok_or_else(|| Error::MalformedPoset("element above no K_1".into())))
            .collect::<Result<_>>()?;
        let twos: Vec<usize> = (0..n).filter(|&x| vertices[x] == 2).collect();
        if twos.len() > 1 {
            return Err(Error::MalformedPoset("more than one element on two vertices".into()));
        }
        let k2 = twos.first().copied();
        let edges: Vec<u64> = (0..n).map(|x| k2.map_or(0, |k| p.raw(k, x))).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| vertices[x]);
        let mut connected = vec![false; n];
        for &x in &order {
            connected[x] = match vertices[x] {
                0 => return Err(Error::MalformedPoset("element with no vertices".into())),
                1 | 2 => true,
                d => {
                    let live: u64 = (0..n)
                        .filter(|&y| vertices[y] + 1 == d && connected[y])
                        .map(|y| p.raw(y, x))
                        .sum();
                    live >= 2
                }
            };
        }
        Ok(PosetShape { k1, k2, top: maxs[0], vertices, edges, connected })
    }
}

/// Whether the graph behind an abstract induced subgraph poset is connected.
/// A graph on three or more vertices is connected iff at least two of its
/// vertex-deleted subgraphs are.
pub fn is_connected_from_poset(p: &AbstractPoset) -> Result<bool> {
    let s = PosetShape::read(p.poset())?;
    Ok(s.connected[s.top])
}
