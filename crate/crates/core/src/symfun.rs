//! Chromatic symmetric function X_G and its bad-edge refinement X_G(t), in
//! the single-monomial convention: the coefficient stored at λ is that of
//! x_1^{λ_1} x_2^{λ_2} ⋯ x_l^{λ_l}, not of the symmetrised m_λ.

use std::collections::BTreeMap;

use crate::cover::{CoverCounter, CoverTerm};
use crate::error::{Error, Result};
use crate::graph::{mask_iter, Graph, IntPartition};
use crate::lattice::{FoldedLattice, MobiusTable};
use crate::poset::LabeledPoset;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialSymFn {
    degree: u32,
    coeffs: BTreeMap<IntPartition, u64>,
}

impl MonomialSymFn {
    /// Zero coefficients are dropped; every key must partition `degree`.
    pub fn new(degree: u32, coeffs: BTreeMap<IntPartition, u64>) -> Result<MonomialSymFn> {
        if coeffs.keys().any(|l| l.size() != degree) {
            return Err(Error::Precondition(format!("every partition must have size {degree}")));
        }
        Ok(MonomialSymFn { degree, coeffs: coeffs.into_iter().filter(|&(_, c)| c > 0).collect() })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn get(&self, l: &IntPartition) -> u64 {
        self.coeffs.get(l).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &BTreeMap<IntPartition, u64> {
        &self.coeffs
    }
}

/// Σ c_{λ,j} (1+t)^j x^λ.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TutteSymFn {
    degree: u32,
    coeffs: BTreeMap<(IntPartition, u32), u64>,
}

impl TutteSymFn {
    pub fn new(degree: u32, coeffs: BTreeMap<(IntPartition, u32), u64>) -> Result<TutteSymFn> {
        if coeffs.keys().any(|(l, _)| l.size() != degree) {
            return Err(Error::Precondition(format!("every partition must have size {degree}")));
        }
        Ok(TutteSymFn { degree, coeffs: coeffs.into_iter().filter(|&(_, c)| c > 0).collect() })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn get(&self, l: &IntPartition, j: u32) -> u64 {
        self.coeffs.get(&(l.clone(), j)).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &BTreeMap<(IntPartition, u32), u64> {
        &self.coeffs
    }

    /// The t = −1 specialisation, which is X_G.
    pub fn at_minus_one(&self) -> MonomialSymFn {
        let coeffs = self.coeffs.iter().filter(|((_, j), _)| *j == 0).map(|((l, _), &c)| (l.clone(), c)).collect();
        MonomialSymFn { degree: self.degree, coeffs }
    }

    /// Re-expanded in powers of t: coefficient of t^i x^λ.
    pub fn t_powers(&self) -> BTreeMap<(IntPartition, u32), u128> {
        let mut out = BTreeMap::new();
        for ((l, j), &c) in &self.coeffs {
            for i in 0..=*j {
                *out.entry((l.clone(), i)).or_insert(0) += c as u128 * binom(*j as u64, i as u64) as u128;
            }
        }
        out
    }
}

/// Σ c_λ p_λ.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct PowerSumExpansion {
    pub degree: u32,
    pub coeffs: BTreeMap<IntPartition, i128>,
}

pub(crate) fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r as u64
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Π m_j(λ)!, the number of ways to give equal-sized blocks distinct slots.
pub(crate) fn slot_symmetry(l: &IntPartition) -> u64 {
    l.multiplicities().iter().map(|&(_, m)| factorial(m)).product()
}

/// Calls `f(blocks)` for every set partition of `0..n`.
pub(crate) fn for_each_set_partition(n: usize, mut f: impl FnMut(&[u64])) {
    fn go(rem: u64, blocks: &mut Vec<u64>, f: &mut dyn FnMut(&[u64])) {
        if rem == 0 {
            f(blocks);
            return;
        }
        let low = rem & rem.wrapping_neg();
        let rest = rem & !low;
        let mut s = rest;
        loop {
            blocks.push(s | low);
            go(rest & !s, blocks, f);
            blocks.pop();
            if s == 0 {
                break;
            }
            s = (s - 1) & rest;
        }
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    go(full, &mut Vec::new(), &mut f);
}

fn block_shape(blocks: &[u64]) -> IntPartition {
    IntPartition::new(blocks.iter().map(|b| b.count_ones()).collect()).expect("blocks are non-empty")
}

fn inner_edges(g: &Graph, block: u64) -> u32 {
    mask_iter(block).map(|v| (g.row(v) & block).count_ones()).sum::<u32>() / 2
}

pub fn xg_direct(g: &Graph) -> Result<MonomialSymFn> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::NullGraph("xg_direct"));
    }
    let mut coeffs = BTreeMap::new();
    for_each_set_partition(n, |blocks| {
        if blocks.iter().all(|&b| inner_edges(g, b) == 0) {
            let l = block_shape(blocks);
            let w = slot_symmetry(&l);
            *coeffs.entry(l).or_insert(0) += w;
        }
    });
    MonomialSymFn::new(n as u32, coeffs)
}

pub fn xgt_direct(g: &Graph) -> Result<TutteSymFn> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::NullGraph("xgt_direct"));
    }
    let mut coeffs = BTreeMap::new();
    for_each_set_partition(n, |blocks| {
        let bad: u32 = blocks.iter().map(|&b| inner_edges(g, b)).sum();
        let l = block_shape(blocks);
        let w = slot_symmetry(&l);
        *coeffs.entry((l, bad)).or_insert(0) += w;
    });
    TutteSymFn::new(n as u32, coeffs)
}

/// X_G from an abstract induced subgraph poset: the coefficient at λ is the
/// number of ordered covers of G by independent sets of sizes λ_1, λ_2, ...
pub fn xg_from_poset(p: &LabeledPoset) -> Result<MonomialSymFn> {
    let mut c = CoverCounter::new(p)?;
    let top = CoverTerm::Element(c.shape().top);
    let d = c.shape().vertices[c.shape().top] as u32;
    let mut coeffs = BTreeMap::new();
    for l in IntPartition::all(d) {
        let s: Vec<CoverTerm> = l.parts().iter().map(|&k| CoverTerm::Edgeless(k as usize)).collect();
        coeffs.insert(l, c.vcov(&s, top)?);
    }
    MonomialSymFn::new(d, coeffs)
}

/// X_G(t) from an abstract induced subgraph poset, summing vcov(S,G) over
/// tuples S of induced classes whose sizes follow λ slot by slot.
pub fn xgt_from_poset(p: &LabeledPoset) -> Result<TutteSymFn> {
    let mut c = CoverCounter::new(p)?;
    let top = CoverTerm::Element(c.shape().top);
    let d = c.shape().vertices[c.shape().top];
    let mut by_size: Vec<Vec<CoverTerm>> = vec![Vec::new(); d + 1];
    for k in 1..=d {
        by_size[k].push(CoverTerm::Edgeless(k));
    }
    for i in 0..p.len() {
        if c.shape().edges[i] > 0 {
            by_size[c.shape().vertices[i]].push(CoverTerm::Element(i));
        }
    }
    let mut coeffs = BTreeMap::new();
    for l in IntPartition::all(d as u32) {
        let mut tuple = Vec::with_capacity(l.len());
        slot_tuples(&mut c, &l, &by_size, top, &mut tuple, &mut coeffs)?;
    }
    TutteSymFn::new(d as u32, coeffs)
}

fn slot_tuples(
    c: &mut CoverCounter,
    l: &IntPartition,
    by_size: &[Vec<CoverTerm>],
    top: CoverTerm,
    tuple: &mut Vec<CoverTerm>,
    out: &mut BTreeMap<(IntPartition, u32), u64>,
) -> Result<()> {
    if tuple.len() == l.len() {
        let n = c.vcov(tuple, top)?;
        if n > 0 {
            let j: u64 = tuple.iter().map(|&t| c.edges(t)).sum();
            *out.entry((l.clone(), j as u32)).or_insert(0) += n;
        }
        return Ok(());
    }
    let k = l.parts()[tuple.len()] as usize;
    for &t in &by_size[k] {
        tuple.push(t);
        slot_tuples(c, l, by_size, top, tuple, out)?;
        tuple.pop();
    }
    Ok(())
}

/// a(λ′, λ): maps from the parts of λ′ to the slots of λ whose fibre sums
/// reproduce λ.
pub fn assignment_count(from: &IntPartition, to: &IntPartition) -> u64 {
    fn go(parts: &[u32], room: &mut [u32]) -> u64 {
        let Some((&p, rest)) = parts.split_first() else {
            return u64::from(room.iter().all(|&r| r == 0));
        };
        let mut n = 0;
        for i in 0..room.len() {
            if room[i] >= p {
                room[i] -= p;
                n += go(rest, room);
                room[i] += p;
            }
        }
        n
    }
    if from.size() != to.size() {
        return 0;
    }
    go(from.parts(), &mut to.parts().to_vec())
}

pub fn power_to_monomial(e: &PowerSumExpansion) -> Result<MonomialSymFn> {
    let mut coeffs = BTreeMap::new();
    for l in IntPartition::all(e.degree) {
        let mut c: i128 = 0;
        for (from, &k) in &e.coeffs {
            c += k * assignment_count(from, &l) as i128;
        }
        if c < 0 {
            return Err(Error::Inconsistent(format!("negative monomial coefficient at {l}")));
        }
        coeffs.insert(l, u64::try_from(c).map_err(|_| Error::Overflow("power_to_monomial"))?);
    }
    MonomialSymFn::new(e.degree, coeffs)
}

/// Inverse of [`power_to_monomial`], solved from the finest partition up;
/// a(λ,λ) = Π m_j(λ)! must divide each remainder.
pub fn monomial_to_power(x: &MonomialSymFn) -> Result<PowerSumExpansion> {
    let mut parts = IntPartition::all(x.degree);
    parts.sort_by_key(|l| std::cmp::Reverse(l.len()));
    let mut coeffs: BTreeMap<IntPartition, i128> = BTreeMap::new();
    for l in &parts {
        let mut rem = x.get(l) as i128;
        for (finer, &k) in &coeffs {
            if finer.len() > l.len() {
                rem -= k * assignment_count(finer, l) as i128;
            }
        }
        let diag = slot_symmetry(l) as i128;
        if rem % diag != 0 {
            return Err(Error::Inconsistent(format!("no integral power-sum coefficient at {l}")));
        }
        if rem != 0 {
            coeffs.insert(l.clone(), rem / diag);
        }
    }
    Ok(PowerSumExpansion { degree: x.degree, coeffs })
}

/// X_G = Σ ⟨Λ,G⟩_π μ(0̂,Λ) p_{λ(Λ)}, needing cell-size types on the lattice.
pub fn xg_from_lattice(l: &FoldedLattice, mu: &MobiusTable) -> Result<MonomialSymFn> {
    let top = l.top();
    let mut e = PowerSumExpansion::default();
    for (i, el) in l.elements().iter().enumerate() {
        let shape = el.shape.clone().ok_or_else(|| Error::MalformedLattice("missing partition types".into()))?;
        e.degree = shape.size();
        *e.coeffs.entry(shape).or_insert(0) += l.raw(i, top) as i128 * mu.get(i) as i128;
    }
    e.coeffs.retain(|_, c| *c != 0);
    power_to_monomial(&e)
}

/// Integer polynomial in k, coefficients by ascending power.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChromaticPolynomial(pub Vec<i128>);

impl ChromaticPolynomial {
    pub fn eval(&self, k: i128) -> i128 {
        self.0.iter().rev().fold(0, |acc, &c| acc * k + c)
    }
}

/// P(k) = Σ_λ c_λ/Π m_j! · k(k−1)⋯(k−l+1): each stable partition of type λ
/// receives l distinct colours.
pub fn chromatic_polynomial(x: &MonomialSymFn) -> Result<ChromaticPolynomial> {
    let d = x.degree as usize;
    let mut falling = vec![0i128; d + 1];
    for (l, &c) in &x.coeffs {
        let sym = slot_symmetry(l);
        if c % sym != 0 {
            return Err(Error::Inconsistent(format!("coefficient at {l} is not a multiple of {sym}")));
        }
        falling[l.len()] += (c / sym) as i128;
    }
    let mut poly = vec![0i128; d + 1];
    // k(k−1)⋯(k−i+1), built up one factor at a time.
    let mut ff = vec![1i128];
    for (i, &b) in falling.iter().enumerate() {
        for (j, &a) in ff.iter().enumerate() {
            poly[j] += b * a;
        }
        let mut next = vec![0i128; ff.len() + 1];
        for (j, &a) in ff.iter().enumerate() {
            next[j + 1] += a;
            next[j] -= a * i as i128;
        }
        ff = next;
    }
    Ok(ChromaticPolynomial(poly))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn p(v: &[u32]) -> IntPartition {
        IntPartition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_assignment_counts() {
        assert_eq!(assignment_count(&p(&[1, 1]), &p(&[1, 1])), 2);
        assert_eq!(assignment_count(&p(&[2]), &p(&[2])), 1);
        assert_eq!(assignment_count(&p(&[1, 1, 1]), &p(&[2, 1])), 3);
    }

    #[test]
    fn k2_polynomial() {
        let x = xg_direct(&named::path(2)).unwrap();
        assert_eq!(chromatic_polynomial(&x).unwrap().0, vec![0, -1, 1]);
    }
}
