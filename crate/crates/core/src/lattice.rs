//! Folded connected partition lattices L^c(G), partition decks and
//! Möbius values μ(0̂, Λ).
//!
//! A lattice carries π-counts on every related pair. Element labels come in
//! four strengths: full (canonical codes), partial (component-name
//! multisets), types (cell-size partitions) and abstract (nothing). Each
//! stronger mode keeps everything the weaker ones carry.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cache::SubgraphCache;
use crate::canon::{canonical_order, dense_colors, isomorphisms, Matrix};
use crate::error::{Error, Result};
use crate::graph::{canonical_code, components, connected_partitions, CanonicalCode, Graph, IntPartition};

/// Multiset of component names H_j, stored sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(from = "Vec<u32>", into = "Vec<u32>")]
pub struct TypeLabel(Vec<u32>);

impl TypeLabel {
    pub fn new(mut names: Vec<u32>) -> TypeLabel {
        names.sort_unstable();
        TypeLabel(names)
    }

    pub fn names(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, name: u32) -> usize {
        self.0.iter().filter(|&&x| x == name).count()
    }

    /// `(name, multiplicity)` pairs in name order.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &x in &self.0 {
            match out.last_mut() {
                Some((y, m)) if *y == x => *m += 1,
                _ => out.push((x, 1)),
            }
        }
        out
    }

    /// Copy with one occurrence of `name` removed, if present.
    pub fn without_one(&self, name: u32) -> Option<TypeLabel> {
        let i = self.0.iter().position(|&x| x == name)?;
        let mut v = self.0.clone();
        v.remove(i);
        Some(TypeLabel(v))
    }

    pub fn with(&self, name: u32, times: usize) -> TypeLabel {
        let mut v = self.0.clone();
        v.extend(std::iter::repeat(name).take(times));
        TypeLabel::new(v)
    }
}

impl From<Vec<u32>> for TypeLabel {
    fn from(v: Vec<u32>) -> TypeLabel {
        TypeLabel::new(v)
    }
}

impl From<TypeLabel> for Vec<u32> {
    fn from(t: TypeLabel) -> Vec<u32> {
        t.0
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "Φ");
        }
        for (i, (name, m)) in self.multiplicities().into_iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            write!(f, "H{name}")?;
            if m > 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

/// How much is known about each lattice element. Ordered weakest first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LabelMode {
    Abstract,
    Types,
    Partial,
    Full,
}

impl LabelMode {
    pub fn name(self) -> &'static str {
        match self {
            LabelMode::Abstract => "abstract",
            LabelMode::Types => "types",
            LabelMode::Partial => "partial",
            LabelMode::Full => "full",
        }
    }
}

impl std::str::FromStr for LabelMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<LabelMode> {
        match s {
            "abstract" => Ok(LabelMode::Abstract),
            "types" => Ok(LabelMode::Types),
            "partial" => Ok(LabelMode::Partial),
            "full" => Ok(LabelMode::Full),
            _ => Err(Error::Precondition(format!("unknown label mode {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LatticeElement {
    pub code: Option<CanonicalCode>,
    pub type_label: Option<TypeLabel>,
    /// Cell-size partition λ(Λ).
    pub shape: Option<IntPartition>,
}

/// Folded connected partition lattice with π-counts on related pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldedLattice {
    mode: LabelMode,
    elements: Vec<LatticeElement>,
    labels: Vec<u64>,
    rank: Vec<usize>,
}

impl FoldedLattice {
    /// Validates the label matrix (`0` = unrelated) and the element labels
    /// required by `mode`. Rank is the length of the longest chain from the
    /// unique minimal element.
    pub fn from_parts(mode: LabelMode, elements: Vec<LatticeElement>, labels: Vec<u64>) -> Result<FoldedLattice> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::MalformedLattice("no elements".into()));
        }
        if labels.len() != n * n {
            return Err(Error::MalformedLattice("label matrix has the wrong size".into()));
        }
        let raw = |a: usize, b: usize| labels[a * n + b];
        for a in 0..n {
            if raw(a, a) != 1 {
                return Err(Error::MalformedLattice(format!("label({a},{a}) must be 1")));
            }
            for b in 0..n {
                if a != b && raw(a, b) > 0 && raw(b, a) > 0 {
                    return Err(Error::MalformedLattice(format!("{a} and {b} are mutually related")));
                }
                if raw(a, b) == 0 {
                    continue;
                }
                for c in 0..n {
                    if raw(b, c) > 0 && raw(a, c) == 0 {
                        return Err(Error::MalformedLattice(format!("relation not transitive at {a},{b},{c}")));
                    }
                }
            }
        }
        for (i, e) in elements.iter().enumerate() {
            let ok = match mode {
                LabelMode::Abstract => true,
                LabelMode::Types => e.shape.is_some(),
                LabelMode::Partial => e.shape.is_some() && e.type_label.is_some(),
                LabelMode::Full => e.shape.is_some() && e.type_label.is_some() && e.code.is_some(),
            };
            if !ok {
                return Err(Error::MalformedLattice(format!("element {i} lacks {} labels", mode.name())));
            }
        }
        let mins: Vec<usize> = (0..n).filter(|&a| (0..n).all(|b| b == a || raw(b, a) == 0)).collect();
        if mins.len() != 1 {
            return Err(Error::MalformedLattice(format!("{} minimal elements, expected one", mins.len())));
        }
        let maxs = (0..n).filter(|&a| (0..n).all(|b| b == a || raw(a, b) == 0)).count();
        if maxs != 1 {
            return Err(Error::MalformedLattice(format!("{maxs} maximal elements, expected one")));
        }
        // Longest chain from the bottom; the strict order is acyclic, so
        // processing by down-set size is a topological order.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&b| (0..n).filter(|&a| raw(a, b) > 0).count());
        let mut rank = vec![0usize; n];
        for &b in &order {
            rank[b] = (0..n).filter(|&a| a != b && raw(a, b) > 0).map(|a| rank[a] + 1).max().unwrap_or(0);
        }
        Ok(FoldedLattice { mode, elements, labels, rank })
    }

    pub fn mode(&self) -> LabelMode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[LatticeElement] {
        &self.elements
    }

    #[inline]
    pub(crate) fn raw(&self, a: usize, b: usize) -> u64 {
        self.labels[a * self.elements.len() + b]
    }

    pub(crate) fn label_matrix(&self) -> &[u64] {
        &self.labels
    }

    /// ⟨Λ_a, Λ_b⟩_π, or `None` when unrelated.
    pub fn label(&self, a: usize, b: usize) -> Option<u64> {
        Some(self.raw(a, b)).filter(|&x| x > 0)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.raw(a, b) > 0
    }

    pub fn rank(&self, a: usize) -> usize {
        self.rank[a]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    pub fn bottom(&self) -> usize {
        self.rank.iter().position(|&r| r == 0).expect("validated lattice has a bottom")
    }

    pub fn top(&self) -> usize {
        let n = self.len();
        (0..n).find(|&a| (0..n).all(|b| b == a || !self.leq(a, b))).expect("validated lattice has a top")
    }

    /// Cover pairs `(a, b, label)`.
    pub fn covers(&self) -> Vec<(usize, usize, u64)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && self.leq(a, b) && !(0..n).any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b)) {
                    out.push((a, b, self.raw(a, b)));
                }
            }
        }
        out
    }

    /// Elements below or equal to `a`, in their original order.
    pub fn down_set(&self, a: usize) -> Vec<usize> {
        (0..self.len()).filter(|&b| self.leq(b, a)).collect()
    }

    /// Sub-lattice on `keep`, which must contain a unique bottom and top.
    pub fn restrict(&self, keep: &[usize]) -> Result<FoldedLattice> {
        let elements = keep.iter().map(|&i| self.elements[i].clone()).collect();
        let mut labels = Vec::with_capacity(keep.len() * keep.len());
        for &a in keep {
            for &b in keep {
                labels.push(self.raw(a, b));
            }
        }
        FoldedLattice::from_parts(self.mode, elements, labels)
    }

    fn weight_matrix(&self) -> Result<Matrix<(u64, u32)>> {
        let n = self.len();
        let mut m = Matrix::from_fn(n, |i, j| (self.raw(i, j), 0u32));
        if self.mode == LabelMode::Partial {
            // Name j is pinned to the element typed H_j plus isolated
            // vertices; arcs record multiplicities, so the comparison does
            // not depend on how names are numbered.
            let reps = self.name_elements()?;
            for i in 0..n {
                let t = self.elements[i].type_label.as_ref().expect("partial lattice");
                for (name, mult) in t.multiplicities() {
                    let r = reps[&name];
                    let (l, _) = m.at(i, r);
                    m.set(i, r, (l, mult as u32));
                }
            }
        }
        Ok(m)
    }

    /// Name of the single component of the bottom element (K_1).
    pub fn isolated_name(&self) -> Option<u32> {
        let t = self.elements[self.bottom()].type_label.as_ref()?;
        t.names().first().copied()
    }

    /// For each name, the element typed by that name plus isolated vertices.
    pub fn name_elements(&self) -> Result<BTreeMap<u32, usize>> {
        let h0 = self.isolated_name().ok_or_else(|| Error::MalformedLattice("no type labels".into()))?;
        let mut reps = BTreeMap::new();
        reps.insert(h0, self.bottom());
        for (i, e) in self.elements.iter().enumerate() {
            let t = e.type_label.as_ref().ok_or_else(|| Error::MalformedLattice("missing type label".into()))?;
            let others: Vec<u32> = t.names().iter().copied().filter(|&x| x != h0).collect();
            if others.len() == 1 && reps.insert(others[0], i).is_some() {
                return Err(Error::MalformedLattice(format!("two elements typed by name H{}", others[0])));
            }
        }
        for e in &self.elements {
            for &name in e.type_label.as_ref().expect("checked above").names() {
                if !reps.contains_key(&name) {
                    return Err(Error::MalformedLattice(format!("name H{name} has no element of its own")));
                }
            }
        }
        Ok(reps)
    }

    fn element_keys(&self) -> Vec<(Option<IntPartition>, Option<CanonicalCode>)> {
        self.elements
            .iter()
            .map(|e| match self.mode {
                LabelMode::Abstract => (None, None),
                LabelMode::Types | LabelMode::Partial => (e.shape.clone(), None),
                LabelMode::Full => (e.shape.clone(), e.code.clone()),
            })
            .collect()
    }
}

/// Canonical form of a lattice at its own label mode. Equal keys mean
/// isomorphic lattices; names and element order do not matter.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LatticeKey {
    mode: LabelMode,
    weights: Vec<(u64, u32)>,
    keys: Vec<(Option<IntPartition>, Option<CanonicalCode>)>,
}

pub fn lattice_key(l: &FoldedLattice) -> Result<LatticeKey> {
    let m = l.weight_matrix()?;
    let keys = l.element_keys();
    let (order, weights) = canonical_order(&m, &dense_colors(&keys));
    let keys = order.iter().map(|&i| keys[i].clone()).collect();
    Ok(LatticeKey { mode: l.mode, weights, keys })
}

/// Least isomorphism `a -> b` respecting labels at the weaker of the two modes.
pub fn lattice_isomorphism(a: &FoldedLattice, b: &FoldedLattice) -> Result<Option<Vec<usize>>> {
    let mode = a.mode.min(b.mode);
    let (a, b) = (relabel(a, mode)?, relabel(b, mode)?);
    let (ma, mb) = (a.weight_matrix()?, b.weight_matrix()?);
    Ok(isomorphisms(&ma, &a.element_keys(), &mb, &b.element_keys(), true).into_iter().next())
}

/// All automorphisms at the lattice's own mode, identity first.
pub fn lattice_automorphisms(l: &FoldedLattice) -> Result<Vec<Vec<usize>>> {
    let m = l.weight_matrix()?;
    let k = l.element_keys();
    Ok(isomorphisms(&m, &k, &m, &k, false))
}

/// Drops element labels down to `mode`.
pub fn relabel(l: &FoldedLattice, mode: LabelMode) -> Result<FoldedLattice> {
    if mode > l.mode {
        return Err(Error::CannotStrengthen { from: l.mode.name(), to: mode.name() });
    }
    let elements = l
        .elements
        .iter()
        .map(|e| LatticeElement {
            code: if mode >= LabelMode::Full { e.code.clone() } else { None },
            type_label: if mode >= LabelMode::Partial { e.type_label.clone() } else { None },
            shape: if mode >= LabelMode::Types { e.shape.clone() } else { None },
        })
        .collect();
    Ok(FoldedLattice { mode, elements, labels: l.labels.clone(), rank: l.rank.clone() })
}

/// Fully labelled L^c(g). Elements are sorted by non-increasing component
/// count, then code; component names H_0, H_1, .. follow (vertex count, code).
pub fn build_folded_lattice(g: &Graph) -> Result<FoldedLattice> {
    build_folded_lattice_with(g, &SubgraphCache::new())
}

pub fn build_folded_lattice_with(g: &Graph, cache: &SubgraphCache) -> Result<FoldedLattice> {
    if g.vertex_count() == 0 {
        return Err(Error::NullGraph("build_folded_lattice"));
    }
    let top = canonical_code(g);
    let mut keyed: Vec<(std::cmp::Reverse<usize>, CanonicalCode, Vec<Graph>)> = cache
        .partition(&top)
        .keys()
        .map(|c| {
            let comps = components(&c.graph());
            (std::cmp::Reverse(comps.len()), c.clone(), comps)
        })
        .collect();
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    let mut names: Vec<(usize, CanonicalCode)> = keyed
        .iter()
        .flat_map(|(_, _, comps)| comps.iter().map(|h| (h.vertex_count(), canonical_code(h))))
        .collect();
    names.sort();
    names.dedup();
    let name_of: BTreeMap<CanonicalCode, u32> = names.iter().enumerate().map(|(i, (_, c))| (c.clone(), i as u32)).collect();
    let n = keyed.len();
    let mut labels = vec![0u64; n * n];
    for (b, (_, cb, _)) in keyed.iter().enumerate() {
        let h = cache.partition(cb);
        for (a, (_, ca, _)) in keyed.iter().enumerate() {
            labels[a * n + b] = h.get(ca).copied().unwrap_or(0);
        }
    }
    let v = g.vertex_count();
    let mut rank = Vec::with_capacity(n);
    let elements = keyed
        .into_iter()
        .map(|(c, code, comps)| {
            rank.push(v - c.0);
            let shape = IntPartition::new(comps.iter().map(|h| h.vertex_count() as u32).collect()).expect("non-empty components");
            let type_label = TypeLabel::new(comps.iter().map(|h| name_of[&canonical_code(h)]).collect());
            LatticeElement { code: Some(code), type_label: Some(type_label), shape: Some(shape) }
        })
        .collect();
    Ok(FoldedLattice { mode: LabelMode::Full, elements, labels, rank })
}

/// Histogram of cell-size partitions over connected partitions, written k_λ.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct PartitionDeck(BTreeMap<IntPartition, u64>);

impl PartitionDeck {
    pub fn from_map(m: BTreeMap<IntPartition, u64>) -> PartitionDeck {
        PartitionDeck(m.into_iter().filter(|&(_, k)| k > 0).collect())
    }

    pub fn get(&self, l: &IntPartition) -> u64 {
        self.0.get(l).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IntPartition, u64)> {
        self.0.iter().map(|(l, &k)| (l, k))
    }

    pub fn as_map(&self) -> &BTreeMap<IntPartition, u64> {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    /// Vertex count, read off any key.
    pub fn vertex_count(&self) -> Option<u32> {
        self.0.keys().next().map(|l| l.size())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn partition_deck(g: &Graph) -> Result<PartitionDeck> {
    let mut m = BTreeMap::new();
    for p in connected_partitions(g)? {
        *m.entry(p.shape()).or_insert(0) += 1;
    }
    Ok(PartitionDeck(m))
}

/// Partition deck read off a lattice carrying cell-size types:
/// k_λ = Σ ⟨Λ, top⟩_π over elements with λ(Λ) = λ.
pub fn deck_from_lattice(l: &FoldedLattice) -> Result<PartitionDeck> {
    let top = l.top();
    let mut m = BTreeMap::new();
    for (i, e) in l.elements.iter().enumerate() {
        let shape = e.shape.clone().ok_or_else(|| Error::MalformedLattice("missing partition types".into()))?;
        *m.entry(shape).or_insert(0) += l.raw(i, top);
    }
    Ok(PartitionDeck(m))
}

/// μ(0̂, Λ) for every element, indexed like the lattice.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MobiusTable(Vec<i64>);

impl MobiusTable {
    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }
}

/// Solves Σ_{Λ_k ≼ Λ_i} μ(0̂,Λ_k)⟨Λ_k,Λ_i⟩_π = 0 in rank order.
pub fn mobius_table(l: &FoldedLattice) -> Result<MobiusTable> {
    let n = l.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| l.rank[i]);
    let mut mu = vec![0i64; n];
    mu[order[0]] = 1;
    for &i in &order[1..] {
        let mut s: i64 = 0;
        for k in 0..n {
            if k != i && l.leq(k, i) {
                let lab = i64::try_from(l.raw(k, i)).map_err(|_| Error::Overflow("mobius_table"))?;
                let t = mu[k].checked_mul(lab).ok_or(Error::Overflow("mobius_table"))?;
                s = s.checked_add(t).ok_or(Error::Overflow("mobius_table"))?;
            }
        }
        mu[i] = -s;
    }
    Ok(MobiusTable(mu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn type_label_display() {
        assert_eq!(TypeLabel::new(vec![2, 0, 0]).to_string(), "H0^2·H2");
        assert_eq!(TypeLabel::new(vec![1]).to_string(), "H1");
    }

    #[test]
    fn k2_lattice_is_a_two_chain() {
        let l = build_folded_lattice(&named::path(2)).unwrap();
        assert_eq!(l.len(), 2);
        assert_eq!(l.label(0, 1), Some(1));
        assert_eq!(l.ranks(), &[0, 1]);
        assert_eq!(mobius_table(&l).unwrap().values(), &[1, -1]);
    }

    #[test]
    fn cannot_strengthen() {
        let l = build_folded_lattice(&named::path(3)).unwrap();
        let a = relabel(&l, LabelMode::Abstract).unwrap();
        assert_eq!(relabel(&a, LabelMode::Partial).unwrap_err().code(), "cannot-strengthen");
    }
}
