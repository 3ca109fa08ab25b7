//! Individualisation-refinement engine over dense weighted digraphs.
//!
//! Graphs, labelled posets, folded lattices and hom matrices are all fed
//! through this module as an `n x n` weight matrix plus initial vertex colours.

use std::hash::Hash;

pub(crate) trait Weight: Copy + Ord + Default + Hash {}
impl<T: Copy + Ord + Default + Hash> Weight for T {}

#[derive(Clone, Debug)]
pub(crate) struct Matrix<W> {
    pub n: usize,
    pub w: Vec<W>,
}

impl<W: Weight> Matrix<W> {
    pub fn new(n: usize) -> Self {
        Matrix { n, w: vec![W::default(); n * n] }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> W) -> Self {
        let mut w = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                w.push(f(i, j));
            }
        }
        Matrix { n, w }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> W {
        self.w[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: W) {
        self.w[i * self.n + j] = x;
    }

    /// Matrix with rows and columns taken in `order`.
    pub fn permuted(&self, order: &[usize]) -> Vec<W> {
        let n = self.n;
        let mut out = Vec::with_capacity(n * n);
        for &p in order {
            for &q in order {
                out.push(self.at(p, q));
            }
        }
        out
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        if self.at(u, v) != self.at(v, u) || self.at(u, u) != self.at(v, v) {
            return false;
        }
        (0..self.n)
            .filter(|&x| x != u && x != v)
            .all(|x| self.at(u, x) == self.at(v, x) && self.at(x, u) == self.at(x, v))
    }
}

/// Dense colour ids (0..k) from arbitrary ordered keys.
pub(crate) fn dense_colors<K: Ord>(keys: &[K]) -> Vec<u32> {
    let mut idx: Vec<usize> = (0..keys.len()).collect();
    idx.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut out = vec![0u32; keys.len()];
    let mut c = 0u32;
    for (pos, &i) in idx.iter().enumerate() {
        if pos > 0 && keys[idx[pos - 1]] != keys[i] {
            c += 1;
        }
        out[i] = c;
    }
    out
}

fn color_count(colors: &[u32]) -> usize {
    colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0)
}

/// Refine `colors` to the coarsest equitable partition finer than it.
/// Colour ids stay dense and the result depends only on the isomorphism type.
pub(crate) fn refine<W: Weight>(m: &Matrix<W>, colors: &mut Vec<u32>) {
    let n = m.n;
    let zero = W::default();
    let mut k = color_count(colors);
    let mut sigs: Vec<(u32, W, Vec<(u32, W, W)>)> = Vec::with_capacity(n);
    loop {
        if k == n {
            return;
        }
        sigs.clear();
        for v in 0..n {
            let mut s = Vec::new();
            for u in 0..n {
                if u == v {
                    continue;
                }
                let (a, b) = (m.at(v, u), m.at(u, v));
                if a != zero || b != zero {
                    s.push((colors[u], a, b));
                }
            }
            s.sort_unstable();
            sigs.push((colors[v], m.at(v, v), s));
        }
        let next = dense_colors(&sigs);
        let nk = color_count(&next);
        *colors = next;
        if nk == k {
            return;
        }
        k = nk;
    }
}

fn individualize(colors: &[u32], target: u32, v: usize) -> Vec<u32> {
    colors
        .iter()
        .enumerate()
        .map(|(x, &c)| {
            if c > target || (c == target && x != v) {
                c + 1
            } else {
                c
            }
        })
        .collect()
}

fn target_cell(colors: &[u32]) -> Option<(u32, Vec<usize>)> {
    let k = color_count(colors);
    let mut size = vec![0usize; k];
    for &c in colors {
        size[c as usize] += 1;
    }
    let t = size.iter().position(|&s| s >= 2)? as u32;
    let cell = (0..colors.len()).filter(|&x| colors[x] == t).collect();
    Some((t, cell))
}

/// Canonical labelling: returns `order` (position -> vertex) and the permuted
/// matrix, which is the certificate. Initial colours must be dense and
/// isomorphism-invariant.
pub(crate) fn canonical_order<W: Weight>(m: &Matrix<W>, initial: &[u32]) -> (Vec<usize>, Vec<W>) {
    let mut colors = initial.to_vec();
    refine(m, &mut colors);
    let mut best: Option<(Vec<W>, Vec<usize>)> = None;
    search(m, colors, &mut best);
    let (cert, order) = best.unwrap_or_default();
    (order, cert)
}

fn search<W: Weight>(m: &Matrix<W>, colors: Vec<u32>, best: &mut Option<(Vec<W>, Vec<usize>)>) {
    let Some((t, cell)) = target_cell(&colors) else {
        let mut order = vec![0usize; m.n];
        for (v, &c) in colors.iter().enumerate() {
            order[c as usize] = v;
        }
        let cert = m.permuted(&order);
        if best.as_ref().map_or(true, |(b, _)| cert > *b) {
            *best = Some((cert, order));
        }
        return;
    };
    let mut reps: Vec<usize> = Vec::new();
    for &v in &cell {
        if !reps.iter().any(|&r| m.twins(r, v)) {
            reps.push(v);
        }
    }
    for v in reps {
        let mut next = individualize(&colors, t, v);
        refine(m, &mut next);
        search(m, next, best);
    }
}

/// All isomorphisms `a -> b` (as maps from a's indices to b's), in
/// lexicographic order. With `first_only` the search stops at the least one.
pub(crate) fn isomorphisms<W: Weight, K: Ord + Clone>(
    a: &Matrix<W>,
    ka: &[K],
    b: &Matrix<W>,
    kb: &[K],
    first_only: bool,
) -> Vec<Vec<usize>> {
    let n = a.n;
    if b.n != n {
        return Vec::new();
    }
    // Refine the disjoint union so colours are comparable across a and b.
    let mut union = Matrix::new(2 * n);
    for i in 0..n {
        for j in 0..n {
            union.set(i, j, a.at(i, j));
            union.set(n + i, n + j, b.at(i, j));
        }
    }
    let keys: Vec<K> = ka.iter().chain(kb.iter()).cloned().collect();
    let mut colors = dense_colors(&keys);
    refine(&union, &mut colors);
    let (ca, cb) = colors.split_at(n);
    let mut ha = ca.to_vec();
    let mut hb = cb.to_vec();
    ha.sort_unstable();
    hb.sort_unstable();
    if ha != hb {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    backtrack(a, b, ca, cb, 0, &mut map, &mut used, first_only, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn backtrack<W: Weight>(
    a: &Matrix<W>,
    b: &Matrix<W>,
    ca: &[u32],
    cb: &[u32],
    i: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    first_only: bool,
    out: &mut Vec<Vec<usize>>,
) -> bool {
    let n = a.n;
    if i == n {
        out.push(map.clone());
        return first_only;
    }
    for j in 0..n {
        if used[j] || cb[j] != ca[i] || a.at(i, i) != b.at(j, j) {
            continue;
        }
        let ok = (0..i).all(|p| a.at(i, p) == b.at(j, map[p]) && a.at(p, i) == b.at(map[p], j));
        if !ok {
            continue;
        }
        map[i] = j;
        used[j] = true;
        let stop = backtrack(a, b, ca, cb, i + 1, map, used, first_only, out);
        used[j] = false;
        map[i] = usize::MAX;
        if stop {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Matrix<u8> {
        Matrix::from_fn(n, |i, j| u8::from((i + 1) % n == j || (j + 1) % n == i))
    }

    #[test]
    fn relabelled_cycles_share_certificate() {
        let a = cycle(6);
        let perm = [3, 0, 5, 1, 4, 2];
        let b = Matrix::from_fn(6, |i, j| a.at(perm[i], perm[j]));
        let z = vec![0; 6];
        assert_eq!(canonical_order(&a, &z).1, canonical_order(&b, &z).1);
    }

    #[test]
    fn automorphisms_of_cycle() {
        let a = cycle(5);
        let z = vec![0u8; 5];
        let autos = isomorphisms(&a, &z, &a, &z, false);
        assert_eq!(autos.len(), 10);
        assert_eq!(autos[0], vec![0, 1, 2, 3, 4]);
    }
}
