//! Tree-specific conversions between X_T, the partition deck, the bad-edge
//! table f(q̄, k̄), X_T(t) and subtree degree counts.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::IntPartition;
use crate::lattice::PartitionDeck;
use crate::symfun::{binom, chromatic_polynomial, monomial_to_power, power_to_monomial, MonomialSymFn, PowerSumExpansion, TutteSymFn};

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn sign(v: u32, l: usize) -> i128 {
    if (v as usize - l) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Whether `x` is the chromatic symmetric function of a tree. The
/// coefficient at (2,1^{d−2}) is (C(d,2) − m)(d−2)!, which gives the edge
/// count m; a graph with d−1 edges and 2^{d−1} acyclic orientations is a tree.
pub fn recognize_tree_from_symfun(x: &MonomialSymFn) -> Result<bool> {
    let d = x.degree() as u64;
    if d == 0 {
        return Err(Error::Inconsistent("degree zero".into()));
    }
    if x.get(&IntPartition::ones(d as usize)) != factorial(d) {
        return Err(Error::Inconsistent("all-ones coefficient is not d!".into()));
    }
    if d == 1 {
        return Ok(true);
    }
    let mut parts = vec![2];
    parts.extend(std::iter::repeat(1).take(d as usize - 2));
    let c = x.get(&IntPartition::new(parts)?);
    let w = factorial(d - 2);
    if c % w != 0 || c / w > binom(d, 2) {
        return Err(Error::Inconsistent("coefficient at (2,1,..,1) is malformed".into()));
    }
    let m = binom(d, 2) - c / w;
    if m != d - 1 {
        return Ok(false);
    }
    let at_minus_one = chromatic_polynomial(x)?.eval(-1);
    Ok(at_minus_one.unsigned_abs() == 1u128 << (d - 1))
}

/// Vertex count from the all-ones key, edge count from k_{(2,1,..,1)},
/// component count from the shortest key.
pub fn recognize_tree_from_deck(d: &PartitionDeck) -> Result<bool> {
    let v = d.vertex_count().ok_or_else(|| Error::Inconsistent("empty deck".into()))? as usize;
    if d.get(&IntPartition::ones(v)) != 1 {
        return Err(Error::Inconsistent("deck lacks the all-ones partition".into()));
    }
    let e = if v >= 2 {
        let mut parts = vec![2];
        parts.extend(std::iter::repeat(1).take(v - 2));
        d.get(&IntPartition::new(parts)?)
    } else {
        0
    };
    let c = d.iter().map(|(l, _)| l.len()).min().unwrap_or(0);
    Ok(e as usize + 1 == v && c == 1)
}

/// k_λ = (−1)^{v−l(λ)} × (p_λ coefficient of X_T).
pub fn deck_from_symfun(x: &MonomialSymFn) -> Result<PartitionDeck> {
    if !recognize_tree_from_symfun(x)? {
        return Err(Error::NotATree);
    }
    let v = x.degree();
    let e = monomial_to_power(x)?;
    let mut m = BTreeMap::new();
    for (l, &b) in &e.coeffs {
        let k = sign(v, l.len()) * b;
        if k < 0 {
            return Err(Error::NotATree);
        }
        m.insert(l.clone(), u64::try_from(k).map_err(|_| Error::Overflow("deck_from_symfun"))?);
    }
    Ok(PartitionDeck::from_map(m))
}

/// X_T = Σ k_λ (−1)^{v−l(λ)} p_λ.
pub fn symfun_from_deck(d: &PartitionDeck) -> Result<MonomialSymFn> {
    let v = d.vertex_count().ok_or_else(|| Error::Inconsistent("empty deck".into()))?;
    let coeffs = d.iter().map(|(l, k)| (l.clone(), sign(v, l.len()) * k as i128)).collect();
    power_to_monomial(&PowerSumExpansion { degree: v, coeffs })
}

/// f(q̄, k̄): ordered partitions of V(T) into classes of sizes k̄ with
/// exactly q_i edges inside class i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BadEdgeTable {
    pub classes: usize,
    pub entries: BTreeMap<(Vec<u32>, Vec<u32>), u64>,
}

impl BadEdgeTable {
    pub fn get(&self, q: &[u32], k: &[u32]) -> u64 {
        self.entries.get(&(q.to_vec(), k.to_vec())).copied().unwrap_or(0)
    }
}

/// g(p̄, k̄, λ): ways to send the (distinguishable) blocks of a partition of
/// type λ to ordered groups, group i receiving k_i − p_i blocks of total
/// size k_i.
fn groupings(groups: &[(u32, u32)], sizes: &[u32], rem: &mut [u32]) -> u128 {
    let Some((&(count, sum), rest)) = groups.split_first() else {
        return u128::from(rem.iter().all(|&r| r == 0));
    };
    fn pick(s: usize, count: u32, sum: u32, sizes: &[u32], rem: &mut [u32], rest: &[(u32, u32)]) -> u128 {
        if s == sizes.len() {
            return if count == 0 && sum == 0 { groupings(rest, sizes, rem) } else { 0 };
        }
        let mut total = 0;
        let have = rem[s];
        for n in 0..=have.min(count) {
            if n * sizes[s] > sum {
                break;
            }
            rem[s] = have - n;
            let sub = pick(s + 1, count - n, sum - n * sizes[s], sizes, rem, rest);
            rem[s] = have;
            total += sub * binom(have as u64, n as u64) as u128;
        }
        total
    }
    pick(0, count, sum, sizes, rem, rest)
}

/// Box 0 ≤ q_i ≤ k_i − 1 in decreasing lexicographic order.
fn box_desc(k: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &ki in k {
        out = out
            .into_iter()
            .flat_map(|pre| {
                (0..ki).rev().map(move |q| {
                    let mut v = pre.clone();
                    v.push(q);
                    v
                })
            })
            .collect();
    }
    out
}

/// One row f(·, k̄), keyed by q̄.
pub fn bad_edge_row(d: &PartitionDeck, k: &[u32]) -> Result<BTreeMap<Vec<u32>, u64>> {
    let v: u32 = k.iter().sum();
    if d.vertex_count() != Some(v) || k.iter().any(|&x| x == 0) {
        return Err(Error::Precondition("class sizes must be positive and sum to v(T)".into()));
    }
    let mut row: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    for p in box_desc(k) {
        let blocks = k.iter().zip(&p).map(|(&ki, &pi)| ki - pi).sum::<u32>() as usize;
        let groups: Vec<(u32, u32)> = k.iter().zip(&p).map(|(&ki, &pi)| (ki - pi, ki)).collect();
        let mut s: i128 = 0;
        for (l, kl) in d.iter().filter(|(l, _)| l.len() == blocks) {
            let mult = l.multiplicities();
            let sizes: Vec<u32> = mult.iter().map(|&(s, _)| s).collect();
            let mut rem: Vec<u32> = mult.iter().map(|&(_, m)| m as u32).collect();
            s += groupings(&groups, &sizes, &mut rem) as i128 * kl as i128;
        }
        for (q, &f) in &row {
            if q.iter().zip(&p).all(|(a, b)| a >= b) {
                let w: u128 = q.iter().zip(&p).map(|(&a, &b)| binom(a as u64, b as u64) as u128).product();
                s -= (w * f as u128) as i128;
            }
        }
        if s < 0 {
            return Err(Error::Inconsistent(format!("negative bad-edge count at q={p:?}, k={k:?}")));
        }
        if s > 0 {
            row.insert(p, u64::try_from(s).map_err(|_| Error::Overflow("bad_edge_row"))?);
        }
    }
    Ok(row)
}

fn compositions(v: u32, r: usize) -> Vec<Vec<u32>> {
    if r == 0 {
        return if v == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 1..=v {
        for mut rest in compositions(v - first, r - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// f(q̄, k̄) for every composition k̄ of v(T) into `r` parts.
pub fn bad_edge_table(d: &PartitionDeck, r: usize) -> Result<BadEdgeTable> {
    if !recognize_tree_from_deck(d)? {
        return Err(Error::NotATree);
    }
    if r == 0 {
        return Err(Error::Precondition("at least one class".into()));
    }
    let v = d.vertex_count().expect("recognised deck");
    let mut entries = BTreeMap::new();
    for k in compositions(v, r) {
        for (q, f) in bad_edge_row(d, &k)? {
            entries.insert((q, k.clone()), f);
        }
    }
    Ok(BadEdgeTable { classes: r, entries })
}

/// X_T(t) from X_T: the coefficient of (1+t)^j x^{k̄} for non-increasing k̄
/// is Σ_{Σq_i = j} f(q̄, k̄).
pub fn xgt_from_symfun_tree(x: &MonomialSymFn) -> Result<TutteSymFn> {
    let d = deck_from_symfun(x)?;
    let v = x.degree();
    let mut coeffs = BTreeMap::new();
    for l in IntPartition::all(v) {
        for (q, f) in bad_edge_row(&d, l.parts())? {
            *coeffs.entry((l.clone(), q.iter().sum::<u32>())).or_insert(0) += f;
        }
    }
    TutteSymFn::new(v, coeffs)
}

/// Number of subtrees with k vertices and d′ edges leaving them, keyed
/// (k, d′): f((k−1, v−k−d′), (k, v−k)).
pub fn subtree_degree_counts(x: &MonomialSymFn) -> Result<BTreeMap<(u32, u32), u64>> {
    let d = deck_from_symfun(x)?;
    let v = x.degree();
    let mut out = BTreeMap::new();
    if v == 1 {
        out.insert((1, 0), 1);
        return Ok(out);
    }
    for k in 1..v {
        for (q, f) in bad_edge_row(&d, &[k, v - k])? {
            if q[0] == k - 1 {
                out.insert((k, v - k - q[1]), f);
            }
        }
    }
    Ok(out)
}

/// Degree sequence, non-increasing, from the k = 1 slice.
pub fn degree_sequence_from_symfun(x: &MonomialSymFn) -> Result<Vec<u32>> {
    let counts = subtree_degree_counts(x)?;
    let mut seq = Vec::new();
    for (&(k, deg), &n) in counts.iter().rev() {
        if k == 1 {
            seq.extend(std::iter::repeat(deg).take(n as usize));
        }
    }
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::lattice::partition_deck;

    #[test]
    fn k2_rows() {
        let d = partition_deck(&named::path(2)).unwrap();
        assert_eq!(bad_edge_table(&d, 1).unwrap().get(&[1], &[2]), 1);
        assert_eq!(bad_edge_table(&d, 2).unwrap().get(&[0, 0], &[1, 1]), 2);
    }

    #[test]
    fn box_order_is_decreasing() {
        assert_eq!(box_desc(&[2, 2]), vec![vec![1, 1], vec![1, 0], vec![0, 1], vec![0, 0]]);
    }
}
