//! Vertex covers of a graph by a tuple of graphs, counted directly and
//! recursively on an abstract induced subgraph poset, and π-subgraph counts
//! derived from them.
//!
//! On the poset side every class of induced subgraph is a [`CoverTerm`]: a
//! poset element, or an edgeless graph (which, apart from K_1, the poset
//! does not store). Only labels are read, never codes.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{canonical_code, Graph};
use crate::poset::{LabeledPoset, PosetShape};
use crate::symfun::binom;

/// Ordered tuple vertex covers of `h` by `s`: tuples `(X_1..X_k)` with
/// `h[X_i] ≅ F_i` and `∪X_i = V(h)`.
pub fn vcov_direct(s: &[Graph], h: &Graph) -> u64 {
    let n = h.vertex_count();
    let full = h.vertex_mask();
    let mut ways = vec![0u64; 1 << n];
    ways[0] = 1;
    for f in s {
        let code = canonical_code(f);
        let k = f.vertex_count();
        let fits: Vec<u64> = (0..=full)
            .filter(|m| m.count_ones() as usize == k && canonical_code(&h.induced(*m)) == code)
            .collect();
        let mut next = vec![0u64; 1 << n];
        for (u, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for &m in &fits {
                next[u | m as usize] += w;
            }
        }
        ways = next;
    }
    ways[full as usize]
}

/// A class of induced subgraph of the graph behind a poset.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CoverTerm {
    Element(usize),
    /// (K_1)^m; `Edgeless(1)` stands for the poset's K_1 element.
    Edgeless(usize),
}

/// Memoised cover counting on one labelled poset.
pub struct CoverCounter<'p> {
    p: &'p LabeledPoset,
    shape: PosetShape,
    memo: HashMap<(Vec<CoverTerm>, CoverTerm), u64>,
}

impl<'p> CoverCounter<'p> {
    pub fn new(p: &'p LabeledPoset) -> Result<CoverCounter<'p>> {
        let shape = PosetShape::read(p)?;
        Ok(CoverCounter { p, shape, memo: HashMap::new() })
    }

    pub fn shape(&self) -> &PosetShape {
        &self.shape
    }

    pub fn poset(&self) -> &LabeledPoset {
        self.p
    }

    /// Rewrites the K_1 element as `Edgeless(1)`.
    pub fn normalize(&self, t: CoverTerm) -> CoverTerm {
        match t {
            CoverTerm::Element(i) if i == self.shape.k1 => CoverTerm::Edgeless(1),
            t => t,
        }
    }

    pub fn vertices(&self, t: CoverTerm) -> usize {
        match t {
            CoverTerm::Element(i) => self.shape.vertices[i],
            CoverTerm::Edgeless(m) => m,
        }
    }

    pub fn edges(&self, t: CoverTerm) -> u64 {
        match self.normalize(t) {
            CoverTerm::Element(i) => self.shape.edges[i],
            CoverTerm::Edgeless(_) => 0,
        }
    }

    /// ⟨a, b⟩_v between two classes.
    pub fn induced_count(&self, a: CoverTerm, b: CoverTerm) -> u64 {
        match (self.normalize(a), self.normalize(b)) {
            (CoverTerm::Element(x), CoverTerm::Element(y)) => self.p.raw(x, y),
            (CoverTerm::Element(_), CoverTerm::Edgeless(_)) => 0,
            (CoverTerm::Edgeless(m), CoverTerm::Edgeless(k)) => binom(k as u64, m as u64),
            (CoverTerm::Edgeless(m), CoverTerm::Element(y)) => {
                let v = self.shape.vertices[y];
                let with_edges: u64 = (0..self.p.len())
                    .filter(|&x| self.shape.vertices[x] == m && self.shape.edges[x] > 0)
                    .map(|x| self.p.raw(x, y))
                    .sum();
                binom(v as u64, m as u64).saturating_sub(with_edges)
            }
        }
    }

    /// Classes strictly below `t` (proper induced subgraphs up to isomorphism).
    fn below(&self, t: CoverTerm) -> Vec<CoverTerm> {
        let v = self.vertices(t);
        let mut out: Vec<CoverTerm> = (1..v).map(CoverTerm::Edgeless).collect();
        if let CoverTerm::Element(y) = t {
            out.extend(
                (0..self.p.len())
                    .filter(|&x| x != y && x != self.shape.k1 && self.p.raw(x, y) > 0)
                    .map(CoverTerm::Element),
            );
        }
        out
    }

    /// vcov(S, target) by the recursion
    /// Π⟨F_i,Y⟩ = Σ_{Z ≼ Y} vcov(S,Z)⟨Z,Y⟩.
    pub fn vcov(&mut self, s: &[CoverTerm], target: CoverTerm) -> Result<u64> {
        let mut key: Vec<CoverTerm> = s.iter().map(|&t| self.normalize(t)).collect();
        key.sort_unstable();
        let target = self.normalize(target);
        self.vcov_sorted(key, target)
    }

    fn vcov_sorted(&mut self, s: Vec<CoverTerm>, target: CoverTerm) -> Result<u64> {
        if let Some(&v) = self.memo.get(&(s.clone(), target)) {
            return Ok(v);
        }
        let value = if s.is_empty() {
            0
        } else if s.iter().map(|&t| self.vertices(t)).sum::<usize>() < self.vertices(target) {
            0
        } else if let CoverTerm::Edgeless(k) = target {
            edgeless_covers(&s, k)?
        } else {
            let mut total: u128 = 1;
            for &f in &s {
                total *= self.induced_count(f, target) as u128;
            }
            let mut sub: u128 = 0;
            for z in self.below(target) {
                let c = self.induced_count(z, target);
                if c == 0 {
                    continue;
                }
                sub += self.vcov_sorted(s.clone(), z)? as u128 * c as u128;
            }
            let v = total
                .checked_sub(sub)
                .ok_or_else(|| Error::Inconsistent("negative vertex cover count".into()))?;
            u64::try_from(v).map_err(|_| Error::Overflow("vcov"))?
        };
        self.memo.insert((s, target), value);
        Ok(value)
    }

    /// ⟨A, target⟩_π for A given by its components, each connected: a
    /// poset element or `Edgeless(1)`.
    pub fn pi_count(&mut self, a: &[CoverTerm], target: CoverTerm) -> Result<u64> {
        let mut comps: Vec<CoverTerm> = a.iter().map(|&t| self.normalize(t)).collect();
        comps.sort_unstable();
        if comps.iter().any(|t| matches!(t, CoverTerm::Edgeless(m) if *m != 1)) {
            return Err(Error::Precondition("π-count components must be connected".into()));
        }
        let v: usize = comps.iter().map(|&t| self.vertices(t)).sum();
        let target = self.normalize(target);
        if comps.iter().all(|&t| t == CoverTerm::Edgeless(1)) {
            return Ok(binom(self.vertices(target) as u64, v as u64));
        }
        let mut total: u128 = 0;
        for h in 0..self.p.len() {
            let c = self.induced_count(CoverTerm::Element(h), target);
            if self.shape.vertices[h] != v || c == 0 {
                continue;
            }
            total += self.vcov_sorted(comps.clone(), CoverTerm::Element(h))? as u128 * c as u128;
        }
        let mut sym: u128 = 1;
        let mut run = 1u128;
        for i in 1..comps.len() {
            if comps[i] == comps[i - 1] {
                run += 1;
                sym *= run;
            } else {
                run = 1;
            }
        }
        if total % sym != 0 {
            return Err(Error::Inconsistent("ordered covers not divisible by component symmetries".into()));
        }
        u64::try_from(total / sym).map_err(|_| Error::Overflow("pi_count"))
    }
}

/// Covers of (K_1)^k by a tuple: zero unless every part is edgeless, then
/// inclusion–exclusion over the uncovered vertices.
fn edgeless_covers(s: &[CoverTerm], k: usize) -> Result<u64> {
    let mut sizes = Vec::with_capacity(s.len());
    for &t in s {
        match t {
            CoverTerm::Edgeless(m) => sizes.push(m as u64),
            CoverTerm::Element(_) => return Ok(0),
        }
    }
    let k = k as u64;
    let mut total: i128 = 0;
    for j in 0..=k {
        let mut term = binom(k, j) as i128;
        for &m in &sizes {
            term *= binom(k - j, m) as i128;
        }
        total += if j % 2 == 0 { term } else { -term };
    }
    u64::try_from(total).map_err(|_| Error::Inconsistent("negative edgeless cover count".into()))
}

fn locate(p: &LabeledPoset, f: &Graph) -> Option<CoverTerm> {
    if f.vertex_count() == 0 {
        return None;
    }
    if f.edge_count() == 0 {
        return Some(CoverTerm::Edgeless(f.vertex_count()));
    }
    let code = canonical_code(f);
    p.elements().iter().position(|e| e.code.as_ref() == Some(&code)).map(CoverTerm::Element)
}

/// vcov(S, G) on a coded poset of G. A tuple member that is not an induced
/// subgraph of G makes the count zero.
pub fn vcov_from_poset(s: &[Graph], p: &LabeledPoset) -> Result<u64> {
    let mut c = CoverCounter::new(p)?;
    let top = CoverTerm::Element(c.shape.top);
    let mut terms = Vec::with_capacity(s.len());
    for f in s {
        match locate(p, f) {
            Some(t) => terms.push(t),
            None if f.vertex_count() == 0 => return Err(Error::NullGraph("vcov_from_poset tuple member")),
            None => return Ok(0),
        }
    }
    c.vcov(&terms, top)
}

/// ⟨A, G⟩_π on a coded poset of G.
pub fn pisub_from_poset(a: &Graph, p: &LabeledPoset) -> Result<u64> {
    let mut c = CoverCounter::new(p)?;
    let top = CoverTerm::Element(c.shape.top);
    let mut terms = Vec::new();
    for m in a.component_masks() {
        match locate(p, &a.induced(m)) {
            Some(t) => terms.push(t),
            None => return Ok(0),
        }
    }
    if terms.is_empty() {
        return Ok(1);
    }
    c.pi_count(&terms, top)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::poset::build_induced_poset;

    #[test]
    fn small_direct_counts() {
        let k1 = named::empty(1);
        let k2 = named::path(2);
        assert_eq!(vcov_direct(&[k2.clone()], &k2), 1);
        assert_eq!(vcov_direct(&[k1.clone(), k1], &k2), 2);
        assert_eq!(vcov_direct(&[named::star(2)], &named::path(4)), 0);
    }

    #[test]
    fn poset_counts_on_k2_and_c4() {
        let p = build_induced_poset(&named::path(2)).unwrap();
        assert_eq!(vcov_from_poset(&[named::path(2)], &p).unwrap(), 1);
        assert_eq!(vcov_from_poset(&[named::empty(2), named::empty(2)], &p).unwrap(), 0);
        let c4 = build_induced_poset(&named::cycle(4)).unwrap();
        assert_eq!(pisub_from_poset(&named::matching(2), &c4).unwrap(), 2);
        assert_eq!(pisub_from_poset(&named::star(2), &c4).unwrap(), 4);
    }
}
