//! Constructions between the induced subgraph poset P_v(G) and the folded
//! connected partition lattice L^c(G).
//!
//! Component names are lattice-local: in a partially labelled lattice H_0 is
//! the name carried by the bottom element and every other name H_j is pinned
//! by the element typed H_j plus isolated vertices.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

use crate::cover::{CoverCounter, CoverTerm};
use crate::error::{Error, Result};
use crate::graph::{named, Graph, IntPartition};
use crate::lattice::{
    build_folded_lattice, lattice_automorphisms, lattice_isomorphism, lattice_key, relabel, FoldedLattice,
    LabelMode, LatticeElement, LatticeKey, TypeLabel,
};
use crate::poset::{AbstractPoset, LabeledPoset, PosetElement};

/// Partially labelled L^c(G) from an abstract P_v(G).
pub fn pv_to_lc(p: &LabeledPoset) -> Result<FoldedLattice> {
    let mut c = CoverCounter::new(p)?;
    let shape = c.shape().clone();
    let d = shape.vertices[shape.top];
    // Names: connected elements by (vertex count, id); K_1 becomes H_0.
    let mut conn: Vec<usize> = (0..p.len()).filter(|&i| shape.connected[i]).collect();
    conn.sort_by_key(|&i| (shape.vertices[i], i));
    if conn.first() != Some(&shape.k1) {
        return Err(Error::MalformedPoset("K_1 is not the smallest connected element".into()));
    }
    let size: Vec<usize> = conn.iter().map(|&i| shape.vertices[i]).collect();
    let term = |name: usize| CoverTerm::Element(conn[name]);
    let top = CoverTerm::Element(shape.top);

    // Multisets of non-trivial names occurring as π-subgraphs of G. A
    // multiset absent from G has no occurring extension, so the search prunes.
    let mut types: Vec<Vec<usize>> = vec![Vec::new()];
    let mut stack: Vec<(Vec<usize>, usize, usize)> = vec![(Vec::new(), 1, 0)];
    while let Some((cur, start, used)) = stack.pop() {
        for name in start..conn.len() {
            if used + size[name] > d {
                continue;
            }
            let mut next = cur.clone();
            next.push(name);
            let terms: Vec<CoverTerm> = next.iter().map(|&x| term(x)).collect();
            if c.pi_count(&terms, top)? > 0 {
                types.push(next.clone());
                stack.push((next, name, used + size[name]));
            }
        }
    }
    let padded: Vec<Vec<usize>> = types
        .iter()
        .map(|t| {
            let used: usize = t.iter().map(|&x| size[x]).sum();
            let mut v = vec![0; d - used];
            v.extend(t);
            v
        })
        .collect();
    let mut order: Vec<usize> = (0..padded.len()).collect();
    order.sort_by(|&a, &b| (std::cmp::Reverse(padded[a].len()), &padded[a]).cmp(&(std::cmp::Reverse(padded[b].len()), &padded[b])));
    let padded: Vec<Vec<usize>> = order.into_iter().map(|i| padded[i].clone()).collect();

    let n = padded.len();
    let mut memo: HashMap<(Vec<usize>, usize), u64> = HashMap::new();
    let mut labels = vec![0u64; n * n];
    for a in 0..n {
        for b in 0..n {
            labels[a * n + b] = pi_between(&padded[a], &padded[b], &size, &mut |m: &[usize], bin: usize| {
                if let Some(&v) = memo.get(&(m.to_vec(), bin)) {
                    return Ok(v);
                }
                let terms: Vec<CoverTerm> = m.iter().map(|&x| term(x)).collect();
                let v = c.pi_count(&terms, term(bin))?;
                memo.insert((m.to_vec(), bin), v);
                Ok(v)
            })?;
        }
    }
    let elements = padded
        .iter()
        .map(|t| LatticeElement {
            code: None,
            type_label: Some(TypeLabel::new(t.iter().map(|&x| x as u32).collect())),
            shape: Some(IntPartition::new(t.iter().map(|&x| size[x] as u32).collect()).expect("positive sizes")),
        })
        .collect();
    FoldedLattice::from_parts(LabelMode::Partial, elements, labels)
}

/// ⟨A, B⟩_π for name multisets spanning the same vertex count (name 0 is
/// H_0). B's components are bins: each H_0 bin takes an H_0 of A, and the
/// rest of A is split among B's non-trivial bins with exact vertex sums.
fn pi_between(
    a: &[usize],
    b: &[usize],
    size: &[usize],
    spanning: &mut dyn FnMut(&[usize], usize) -> Result<u64>,
) -> Result<u64> {
    let a_h0 = a.iter().filter(|&&x| x == 0).count();
    let b_h0 = b.iter().filter(|&&x| x == 0).count();
    if a_h0 < b_h0 || a.len() < b.len() {
        return Ok(0);
    }
    let bins: Vec<usize> = b.iter().copied().filter(|&x| x != 0).collect();
    let mut rest: BTreeMap<usize, usize> = BTreeMap::new();
    for &x in a.iter().filter(|&&x| x != 0) {
        *rest.entry(x).or_insert(0) += 1;
    }
    if a_h0 > b_h0 {
        rest.insert(0, a_h0 - b_h0);
    }
    let kinds: Vec<usize> = rest.keys().copied().collect();
    let mut avail: Vec<usize> = rest.values().copied().collect();
    distribute(&bins, &kinds, &mut avail, size, spanning)
}

fn distribute(
    bins: &[usize],
    kinds: &[usize],
    avail: &mut Vec<usize>,
    size: &[usize],
    spanning: &mut dyn FnMut(&[usize], usize) -> Result<u64>,
) -> Result<u64> {
    let Some((&bin, others)) = bins.split_first() else {
        return Ok(u64::from(avail.iter().all(|&x| x == 0)));
    };
    let mut total = 0u64;
    let mut take = vec![0usize; kinds.len()];
    // Enumerate sub-multisets of what is left with vertex sum size[bin].
    #[allow(clippy::too_many_arguments)]
    fn pick(
        k: usize,
        room: usize,
        bin: usize,
        others: &[usize],
        kinds: &[usize],
        avail: &mut Vec<usize>,
        take: &mut Vec<usize>,
        size: &[usize],
        spanning: &mut dyn FnMut(&[usize], usize) -> Result<u64>,
        total: &mut u64,
    ) -> Result<()> {
        if k == kinds.len() {
            if room != 0 {
                return Ok(());
            }
            let m: Vec<usize> = kinds.iter().zip(take.iter()).flat_map(|(&x, &t)| std::iter::repeat(x).take(t)).collect();
            let here = spanning(&m, bin)?;
            if here == 0 {
                return Ok(());
            }
            for (a, t) in avail.iter_mut().zip(take.iter()) {
                *a -= t;
            }
            let below = distribute(others, kinds, avail, size, spanning);
            for (a, t) in avail.iter_mut().zip(take.iter()) {
                *a += t;
            }
            *total = total
                .checked_add(here.checked_mul(below?).ok_or(Error::Overflow("pi_between"))?)
                .ok_or(Error::Overflow("pi_between"))?;
            return Ok(());
        }
        let s = size[kinds[k]];
        for t in 0..=avail[k] {
            if t * s > room {
                break;
            }
            take[k] = t;
            pick(k + 1, room - t * s, bin, others, kinds, avail, take, size, spanning, total)?;
        }
        take[k] = 0;
        Ok(())
    }
    pick(0, size[bin], bin, others, kinds, avail, &mut take, size, spanning, &mut total)?;
    Ok(total)
}

type Histogram = Arc<BTreeMap<TypeLabel, u64>>;

/// Induced subgraph structure recovered from a partially labelled lattice.
struct Recovery<'l> {
    l: &'l FoldedLattice,
    d: usize,
    h0: u32,
    reps: BTreeMap<u32, usize>,
    size: BTreeMap<u32, usize>,
    memo: HashMap<TypeLabel, Histogram>,
}

impl<'l> Recovery<'l> {
    fn new(l: &'l FoldedLattice) -> Result<Recovery<'l>> {
        if l.mode() < LabelMode::Partial {
            return Err(Error::MalformedLattice("lc_to_pv needs a partially labelled lattice".into()));
        }
        let reps = l.name_elements()?;
        let h0 = l.isolated_name().expect("partial lattice");
        let bottom = l.elements()[l.bottom()].type_label.clone().expect("partial lattice");
        if bottom.names().iter().any(|&x| x != h0) {
            return Err(Error::MalformedLattice("bottom element must be typed H_0^d".into()));
        }
        let d = bottom.len();
        let mut size = BTreeMap::new();
        for (&name, &e) in &reps {
            let t = l.elements()[e].type_label.as_ref().expect("partial lattice");
            size.insert(name, if name == h0 { 1 } else { d - t.count(h0) });
        }
        Ok(Recovery { l, d, h0, reps, size, memo: HashMap::new() })
    }

    fn vertices(&self, t: &TypeLabel) -> usize {
        t.names().iter().map(|x| self.size[x]).sum()
    }

    fn type_of(&self, i: usize) -> &TypeLabel {
        self.l.elements()[i].type_label.as_ref().expect("partial lattice")
    }

    /// Histogram of induced subgraph types over all vertex subsets
    /// (the empty set included) of the graph of type `t`.
    fn induced_types(&mut self, t: &TypeLabel) -> Result<Histogram> {
        if let Some(h) = self.memo.get(t) {
            return Ok(h.clone());
        }
        let h = match t.names() {
            [] => Arc::new([(TypeLabel::default(), 1)].into_iter().collect()),
            [x] if *x == self.h0 => {
                Arc::new([(TypeLabel::default(), 1), (t.clone(), 1)].into_iter().collect())
            }
            [x] => self.connected_types(*x)?,
            names => {
                let mut acc: BTreeMap<TypeLabel, u64> = [(TypeLabel::default(), 1)].into_iter().collect();
                for &x in names {
                    let part = self.induced_types(&TypeLabel::new(vec![x]))?;
                    let mut next = BTreeMap::new();
                    for (a, &ca) in &acc {
                        for (b, &cb) in part.iter() {
                            let mut v = a.names().to_vec();
                            v.extend_from_slice(b.names());
                            let k = ca.checked_mul(cb).ok_or(Error::Overflow("induced_types"))?;
                            *next.entry(TypeLabel::new(v)).or_insert(0) += k;
                        }
                    }
                    acc = next;
                }
                Arc::new(acc)
            }
        };
        self.memo.insert(t.clone(), h.clone());
        Ok(h)
    }

    /// Connected H_j: vertex-deleted subgraph counts from the down-set of
    /// E_j, then smaller subgraphs by Kelly's lemma.
    fn connected_types(&mut self, name: u32) -> Result<Histogram> {
        let e = self.reps[&name];
        let dj = self.size[&name];
        let pad = self.d - dj;
        let l = self.l;
        // Local types (padding stripped) with at least one H_0, coarsest first.
        let mut locals: Vec<(usize, TypeLabel, usize)> = Vec::new();
        for i in l.down_set(e) {
            let t = self.type_of(i);
            if t.count(self.h0) < pad {
                return Err(Error::Inconsistent("element below E_j has too few H_0".into()));
            }
            let mut local = t.clone();
            for _ in 0..pad {
                local = local.without_one(self.h0).expect("counted above");
            }
            let k0 = local.count(self.h0);
            if k0 >= 1 {
                locals.push((i, local, k0));
            }
        }
        locals.sort_by_key(|(_, t, _)| t.len());
        let mut deleted: Vec<(usize, TypeLabel, u64)> = Vec::with_capacity(locals.len());
        for (i, local, k0) in &locals {
            let mut v = (*k0 as i128) * l.raw(*i, e) as i128;
            for (j, _, n) in &deleted {
                if j != i {
                    v -= l.raw(*i, *j) as i128 * *n as i128;
                }
            }
            if v < 0 {
                return Err(Error::Inconsistent("negative vertex-deleted count".into()));
            }
            let x = local.without_one(self.h0).expect("k0 >= 1");
            deleted.push((*i, x, v as u64));
        }
        let mut out: BTreeMap<TypeLabel, u64> = BTreeMap::new();
        out.insert(TypeLabel::default(), 1);
        out.insert(TypeLabel::new(vec![name]), 1);
        let mut smaller: BTreeMap<TypeLabel, u128> = BTreeMap::new();
        for (_, x, n) in &deleted {
            if *n == 0 {
                continue;
            }
            *out.entry(x.clone()).or_insert(0) += n;
            let hx = self.induced_types(x)?;
            for (f, &c) in hx.iter() {
                if self.vertices(f) + 1 < dj && !f.is_empty() {
                    *smaller.entry(f.clone()).or_insert(0) += c as u128 * *n as u128;
                }
            }
        }
        for (f, s) in smaller {
            let k = (dj - self.vertices(&f)) as u128;
            if s % k != 0 {
                return Err(Error::Inconsistent("subgraph counts not divisible in Kelly's lemma".into()));
            }
            out.insert(f, u64::try_from(s / k).map_err(|_| Error::Overflow("induced_types"))?);
        }
        Ok(Arc::new(out))
    }

    fn edges(&mut self, t: &TypeLabel) -> Result<u64> {
        let k2 = self.size.iter().find(|(&n, &s)| s == 2 && n != self.h0).map(|(&n, _)| n);
        let Some(k2) = k2 else { return Ok(0) };
        let key = TypeLabel::new(vec![k2]);
        Ok(self.induced_types(t)?.get(&key).copied().unwrap_or(0))
    }
}

/// Abstract P_v(G), elements carrying name types, from a partially
/// labelled L^c(G). A one-element lattice belongs to an edgeless graph and
/// gives the one-element poset {K_1}.
pub fn lc_to_pv(l: &FoldedLattice) -> Result<LabeledPoset> {
    let mut r = Recovery::new(l)?;
    let top = r.type_of(l.top()).clone();
    let hist = r.induced_types(&top)?;
    let h0 = TypeLabel::new(vec![r.h0]);
    let mut keep: Vec<(usize, u64, TypeLabel)> = Vec::new();
    for t in hist.keys() {
        if t.is_empty() {
            continue;
        }
        let e = r.edges(t)?;
        if e > 0 || *t == h0 {
            keep.push((r.vertices(t), e, t.clone()));
        }
    }
    keep.sort();
    let hists: Vec<Histogram> = keep.iter().map(|(_, _, t)| r.induced_types(t)).collect::<Result<_>>()?;
    let n = keep.len();
    let mut labels = vec![0u64; n * n];
    for a in 0..n {
        for b in 0..n {
            labels[a * n + b] = hists[b].get(&keep[a].2).copied().unwrap_or(0);
        }
    }
    let elements = keep.into_iter().map(|(_, _, t)| PosetElement { code: None, type_label: Some(t) }).collect();
    LabeledPoset::from_labels(elements, labels)
}

/// Names every element from the labels to the connected elements E_j
/// (given with their vertex counts d_j): n_j = ⟨E_j, Λ⟩_π − Σ_{d_l > d_j}
/// ⟨H_j, H_l⟩_v n_l, largest d_j first. `d` defaults to Σ n_j(top) d_j,
/// which is right when G has no isolated vertices.
fn name_from_connected(l: &FoldedLattice, conn: &[(usize, usize)], d: Option<usize>) -> Result<FoldedLattice> {
    let mut by_size: Vec<(usize, usize)> = conn.to_vec();
    by_size.sort_by_key(|&(e, dj)| (std::cmp::Reverse(dj), e));
    let mut name_order: Vec<(usize, usize)> = conn.to_vec();
    name_order.sort_by_key(|&(e, dj)| (dj, e));
    let name_of: HashMap<usize, u32> = name_order.iter().enumerate().map(|(i, &(e, _))| (e, i as u32 + 1)).collect();
    let n = l.len();
    let mut counts: Vec<Vec<(u32, usize, i128)>> = vec![Vec::new(); n];
    for (x, row) in counts.iter_mut().enumerate() {
        let mut solved: Vec<(usize, usize, i128)> = Vec::new();
        for &(e, dj) in &by_size {
            let mut v = l.raw(e, x) as i128;
            for &(f, dl, nl) in &solved {
                if dl > dj {
                    v -= l.raw(e, f) as i128 * nl;
                }
            }
            if v < 0 {
                return Err(Error::MalformedLattice("negative component count".into()));
            }
            solved.push((e, dj, v));
        }
        *row = solved.into_iter().map(|(e, dj, v)| (name_of[&e], dj, v)).collect();
    }
    let used = |row: &[(u32, usize, i128)]| row.iter().map(|&(_, dj, v)| dj as i128 * v).sum::<i128>();
    let d = match d {
        Some(d) => d as i128,
        None => used(&counts[l.top()]),
    };
    let mut elements = Vec::with_capacity(n);
    for row in &counts {
        let n0 = d - used(row);
        if n0 < 0 {
            return Err(Error::MalformedLattice("components exceed the vertex count".into()));
        }
        let mut names = vec![0u32; n0 as usize];
        let mut parts = vec![1u32; n0 as usize];
        for &(name, dj, v) in row {
            for _ in 0..v {
                names.push(name);
                parts.push(dj as u32);
            }
        }
        elements.push(LatticeElement {
            code: None,
            type_label: Some(TypeLabel::new(names)),
            shape: Some(IntPartition::new(parts)?),
        });
    }
    FoldedLattice::from_parts(LabelMode::Partial, elements, l.label_matrix().to_vec())
}

/// Abstract P_v(G) from L^c(G) whose elements carry cell-size types.
pub fn lc_types_to_pv(l: &FoldedLattice) -> Result<LabeledPoset> {
    if l.mode() < LabelMode::Types {
        return Err(Error::MalformedLattice("lc_types_to_pv needs partition types".into()));
    }
    let shapes: Vec<&IntPartition> = l.elements().iter().map(|e| e.shape.as_ref().expect("types mode")).collect();
    let bottom = shapes[l.bottom()];
    if bottom.parts().iter().any(|&p| p != 1) {
        return Err(Error::MalformedLattice("bottom element must have type (1,..,1)".into()));
    }
    let conn: Vec<(usize, usize)> = shapes
        .iter()
        .enumerate()
        .filter(|(_, s)| s.parts()[0] >= 2 && s.parts()[1..].iter().all(|&p| p == 1))
        .map(|(i, s)| (i, s.parts()[0] as usize))
        .collect();
    let named = name_from_connected(l, &conn, Some(bottom.len()))?;
    for (i, e) in named.elements().iter().enumerate() {
        if e.shape.as_ref() != Some(shapes[i]) {
            return Err(Error::Inconsistent(format!("element {i} does not match its partition type")));
        }
    }
    lc_to_pv(&named)
}

/// Result of reading P_v(G) off an abstract lattice.
#[derive(Clone, Debug)]
pub enum AbstractAnswer {
    Poset(LabeledPoset),
    /// G is determined although not every element can be named.
    Graph(Graph),
}

struct Reference {
    key: LatticeKey,
    lattice: FoldedLattice,
    /// Index of the (K_2)^2 element in `lattice`, if present.
    matching: Option<usize>,
    graph: Graph,
}

struct References {
    anchors: Vec<Reference>,
    special: Vec<Reference>,
}

fn reference(g: Graph) -> Reference {
    let full = build_folded_lattice(&g).expect("reference graph is non-null");
    let m2 = crate::graph::canonical_code(&named::matching(2));
    let matching = full.elements().iter().position(|e| {
        e.code.as_ref().map(|c| crate::graph::canonical_code(&c.graph().without_isolated()) == m2).unwrap_or(false)
    });
    let lattice = relabel(&full, LabelMode::Abstract).expect("weakening");
    let key = lattice_key(&lattice).expect("abstract key");
    Reference { key, lattice, matching, graph: g }
}

/// The eight anchor graphs used to tell K_{1,2} from (K_2)^2.
pub fn anchor_graphs() -> Vec<Graph> {
    let k2 = named::path(2);
    vec![
        named::paw(),
        named::cycle(4),
        named::union(&[named::complete(3), k2.clone()]),
        named::union(&[named::star(3), k2.clone()]),
        named::union(&[named::path(4), k2.clone()]),
        named::union(&[named::star(2), named::star(2)]),
        named::union(&[named::star(2), k2.clone(), k2]),
        named::complete(4),
    ]
}

/// Graphs returned directly: K_2, K_3 and the three anchor-free graphs.
pub fn special_graphs() -> Vec<Graph> {
    vec![named::path(2), named::complete(3), named::diamond(), named::path(5), named::cycle(5)]
}

fn references() -> &'static References {
    static REFS: OnceLock<References> = OnceLock::new();
    REFS.get_or_init(|| References {
        anchors: anchor_graphs().into_iter().map(reference).collect(),
        special: special_graphs().into_iter().map(reference).collect(),
    })
}

fn is_chain(l: &FoldedLattice) -> bool {
    (0..l.len()).all(|a| (0..l.len()).all(|b| l.leq(a, b) || l.leq(b, a)))
}

/// Finds the (K_2)^2 element through an anchor whose reference lattice
/// matches a down-set and has no automorphism moving that element.
fn matching_via_anchor(l: &FoldedLattice) -> Result<Option<usize>> {
    let refs = references();
    let mut order: Vec<usize> = (0..l.len()).collect();
    order.sort_by_key(|&i| l.rank(i));
    for x in order {
        let down = l.down_set(x);
        let sub = relabel(&l.restrict(&down)?, LabelMode::Abstract)?;
        let key = lattice_key(&sub)?;
        for r in &refs.anchors {
            if r.key != key {
                continue;
            }
            let Some(m) = r.matching else { continue };
            if lattice_automorphisms(&r.lattice)?.iter().any(|a| a[m] != m) {
                continue;
            }
            let iso = lattice_isomorphism(&sub, &r.lattice)?.expect("equal keys");
            let local = iso.iter().position(|&y| y == m).expect("bijection");
            return Ok(Some(down[local]));
        }
    }
    Ok(None)
}

/// P_v(G) from the abstract L^c(G) of a graph without isolated vertices.
///
/// The anchor fixes which rank-2 element is (K_2)^2. Each choice of that
/// element is carried through and kept only if the poset it gives
/// rebuilds the input lattice; two surviving posets that differ mean the
/// lattice does not determine P_v(G).
pub fn lc_abstract_to_pv(l: &FoldedLattice) -> Result<AbstractAnswer> {
    let l = relabel(l, LabelMode::Abstract)?;
    if l.len() == 1 {
        return Err(Error::Precondition("a one-element lattice belongs to an edgeless graph".into()));
    }
    let key = lattice_key(&l)?;
    for r in &references().special {
        if r.key == key {
            return Ok(AbstractAnswer::Graph(r.graph.clone()));
        }
    }
    if is_chain(&l) {
        return Err(Error::AmbiguousStarMatching);
    }
    let rank1: Vec<usize> = (0..l.len()).filter(|&i| l.rank(i) == 1).collect();
    if rank1.len() != 1 {
        return Err(Error::MalformedLattice("expected one element of rank 1".into()));
    }
    let k2 = rank1[0];
    let pairs: Vec<usize> = (0..l.len()).filter(|&x| l.rank(x) == 2 && l.raw(k2, x) == 2).collect();
    let mut choices: Vec<Option<usize>> = Vec::new();
    if pairs.is_empty() {
        choices.push(None);
    } else {
        let anchored = matching_via_anchor(&l)?;
        choices.push(anchored);
        choices.extend(pairs.iter().filter(|&&m| anchored != Some(m)).map(|&m| Some(m)));
        choices.retain(Option::is_some);
    }
    let mut found: Vec<(AbstractPoset, LabeledPoset)> = Vec::new();
    for m2 in choices {
        let Ok(p) = label_from_matching(&l, k2, m2) else { continue };
        let Ok(back) = pv_to_lc(&p) else { continue };
        if lattice_key(&relabel(&back, LabelMode::Abstract)?)? != key {
            continue;
        }
        let abs = AbstractPoset::new(&p);
        if !found.iter().any(|(a, _)| *a == abs) {
            found.push((abs, p));
        }
    }
    match found.len() {
        0 => Err(Error::UnrecognizedAnchor),
        1 => Ok(AbstractAnswer::Poset(found.pop().expect("one").1)),
        _ => Err(Error::AmbiguousLattice),
    }
}

/// Names every element once the (K_2)^2 element is fixed: single
/// non-trivial component elements by induction on rank, then component
/// counts from those.
fn label_from_matching(l: &FoldedLattice, k2: usize, m2: Option<usize>) -> Result<LabeledPoset> {
    let n = l.len();
    let ranks = l.ranks();
    let max_rank = ranks.iter().copied().max().unwrap_or(0);
    let at = |r: usize| (0..n).filter(move |&i| ranks[i] == r);
    let mut single = vec![false; n];
    single[k2] = true;
    for x in at(2) {
        single[x] = Some(x) != m2;
    }
    let edges = |x: usize| l.raw(k2, x);
    let pairs_in = |x: usize| m2.map_or(0, |m| l.raw(m, x));
    for r in 3..=max_rank {
        for x in at(r).collect::<Vec<_>>() {
            let below: Vec<usize> = at(r - 1).filter(|&y| single[y] && l.leq(y, x)).collect();
            let weight: u64 = below.iter().map(|&y| l.raw(y, x)).sum();
            // H_j K_2: one edge off a single-component element, meeting no other edge.
            let plus_edge = below.iter().any(|&y| edges(y) + 1 == edges(x) && pairs_in(x) == pairs_in(y) + edges(y));
            single[x] = weight >= 2 && !plus_edge;
        }
    }
    let conn: Vec<(usize, usize)> = (0..n).filter(|&x| single[x]).map(|x| (x, ranks[x] + 1)).collect();
    let named = name_from_connected(l, &conn, None)?;
    lc_to_pv(&named)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::build_induced_poset;

    #[test]
    fn k2_round_trip() {
        let p = build_induced_poset(&named::path(2)).unwrap();
        let l = pv_to_lc(&p).unwrap();
        assert_eq!(l.len(), 2);
        let q = lc_to_pv(&l).unwrap();
        assert_eq!(AbstractPoset::new(&q), AbstractPoset::new(&p));
    }

    #[test]
    fn one_element_lattice_gives_k1() {
        let l = relabel(&build_folded_lattice(&named::empty(2)).unwrap(), LabelMode::Partial).unwrap();
        assert_eq!(lc_to_pv(&l).unwrap().len(), 1);
    }
}
