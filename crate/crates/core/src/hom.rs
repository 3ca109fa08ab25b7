//! Homomorphism and monomorphism counts, and a finite check of whether a
//! bijection of small graphs can preserve every homomorphism count without
//! being the identity.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, canonical_code, graphs_on, mask_iter, CanonicalCode, Graph};
use crate::symfun::for_each_set_partition;

/// Largest universe bound accepted by [`conjecture_scan`] and [`HomProfile::new`].
pub const SCAN_CAP: usize = 6;

/// Number of maps V(g) → V(h) sending edges to edges.
pub fn count_hom(g: &Graph, h: &Graph) -> u64 {
    count_maps(g, h, false)
}

fn count_maps(g: &Graph, h: &Graph, injective: bool) -> u64 {
    fn go(v: usize, g: &Graph, h: &Graph, image: &mut Vec<usize>, used: u64, injective: bool) -> u64 {
        if v == g.vertex_count() {
            return 1;
        }
        // Earlier neighbours of v restrict its image to their common neighbourhood.
        let mut allowed = if h.vertex_count() == 64 { u64::MAX } else { (1u64 << h.vertex_count()) - 1 };
        for u in mask_iter(g.row(v) & (bit(v) - 1)) {
            allowed &= h.row(image[u]);
        }
        if injective {
            allowed &= !used;
        }
        let mut total = 0;
        for w in mask_iter(allowed) {
            image.push(w);
            total += go(v + 1, g, h, image, used | bit(w), injective);
            image.pop();
        }
        total
    }
    go(0, g, h, &mut Vec::with_capacity(g.vertex_count()), 0, injective)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonoMethod {
    Direct,
    Inversion,
}

/// Injective homomorphisms g → h.
pub fn count_mono(g: &Graph, h: &Graph, method: MonoMethod) -> u64 {
    match method {
        MonoMethod::Direct => count_maps(g, h, true),
        MonoMethod::Inversion => mono_by_inversion(g, h),
    }
}

/// mon(g→h) = Σ_Θ μ(0̂,Θ) hom(g/Θ → h) over partitions of V(g) into
/// independent sets; a block holding an edge makes a loop, which has no
/// image in a simple graph.
fn mono_by_inversion(g: &Graph, h: &Graph) -> u64 {
    let mut total: i128 = 0;
    for_each_set_partition(g.vertex_count(), |blocks| {
        if blocks.iter().any(|&b| mask_iter(b).any(|v| g.row(v) & b != 0)) {
            return;
        }
        let mut mu: i128 = 1;
        for &b in blocks {
            let s = b.count_ones() as i128;
            let f: i128 = (1..s).product();
            mu *= if s % 2 == 1 { f } else { -f };
        }
        total += mu * count_hom(&quotient(g, blocks), h) as i128;
    });
    u64::try_from(total).expect("monomorphism count is non-negative")
}

/// g/Θ with parallel edges merged. Blocks must be independent sets.
pub fn quotient(g: &Graph, blocks: &[u64]) -> Graph {
    let mut edges = Vec::new();
    for i in 0..blocks.len() {
        let reach: u64 = mask_iter(blocks[i]).fold(0, |acc, v| acc | g.row(v));
        for (j, &b) in blocks.iter().enumerate().skip(i + 1) {
            if reach & b != 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(blocks.len(), &edges).expect("distinct blocks")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Compare hom(g_i → H).
    Left,
    /// Compare hom(H → g_i).
    Right,
}

/// All graphs on at most `n` vertices, the null graph first, in
/// enumeration order.
pub fn universe(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for k in 0..=n {
        out.extend(graphs_on(k)?);
    }
    Ok(out)
}

/// First H in [`universe`]`(max_n)` on which the two graphs' hom counts differ.
pub fn distinguishing_witness(g1: &Graph, g2: &Graph, direction: Direction, max_n: usize) -> Result<Option<Graph>> {
    if canonical_code(g1) == canonical_code(g2) {
        return Err(Error::Precondition("the two graphs are isomorphic".into()));
    }
    for h in universe(max_n)? {
        let differs = match direction {
            Direction::Left => count_hom(g1, &h) != count_hom(g2, &h),
            Direction::Right => count_hom(&h, g1) != count_hom(&h, g2),
        };
        if differs {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

/// hom(G → H) over a universe of small graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomProfile {
    graphs: Vec<Graph>,
    counts: Vec<u64>,
}

impl HomProfile {
    pub fn new(n: usize) -> Result<HomProfile> {
        if n > SCAN_CAP {
            return Err(Error::Precondition(format!("hom profile bound {n} exceeds {SCAN_CAP}")));
        }
        let graphs = universe(n)?;
        let counts = graphs.iter().flat_map(|g| graphs.iter().map(move |h| count_hom(g, h))).collect();
        Ok(HomProfile { graphs, counts })
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    /// hom(graphs[g] → graphs[h]).
    pub fn get(&self, g: usize, h: usize) -> u64 {
        self.counts[g * self.graphs.len() + h]
    }

    pub fn position(&self, g: &Graph) -> Option<usize> {
        let c = canonical_code(g);
        self.graphs.iter().position(|h| canonical_code(h) == c)
    }
}

pub const SCAN_CAVEAT: &str = "finite restriction only: the bijection is taken over graphs with at most n vertices \
and hom counts are compared only between graphs in that set, so a clean result is not a proof for all graphs";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub universe_size: usize,
    /// Candidates per graph after the (v, e) signature cut.
    pub candidates: usize,
    /// Non-identity bijections preserving every hom count, as
    /// (graph, image) pairs for the graphs they move.
    pub survivors: Vec<Vec<(CanonicalCode, CanonicalCode)>>,
    pub caveat: String,
}

impl ConjectureReport {
    pub fn only_identity(&self) -> bool {
        self.survivors.is_empty()
    }
}

/// Searches all bijections π of the graphs on at most `n` vertices with
/// hom(G→H) = hom(π(G)→π(H)) for every pair, keeping the non-identity ones.
pub fn conjecture_scan(n: usize) -> Result<ConjectureReport> {
    let profile = HomProfile::new(n)?;
    let m = profile.len();
    // hom(K_1 → G) = v(G) and hom(K_2 → G) = 2e(G) are preserved, so π keeps (v, e).
    let sig: Vec<(usize, usize)> = profile.graphs().iter().map(|g| (g.vertex_count(), g.edge_count())).collect();
    let mut classes: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, s) in sig.iter().enumerate() {
        classes.entry(*s).or_default().push(i);
    }
    let options: Vec<Vec<usize>> = sig.iter().map(|s| classes[s].clone()).collect();
    let candidates = options.iter().map(Vec::len).sum();

    let mut survivors = Vec::new();
    let mut image = vec![usize::MAX; m];
    let mut used = vec![false; m];
    fn go(
        i: usize,
        p: &HomProfile,
        options: &[Vec<usize>],
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == image.len() {
            if image.iter().enumerate().any(|(a, &b)| a != b) {
                out.push(image.clone());
            }
            return;
        }
        for &j in &options[i] {
            if used[j] {
                continue;
            }
            image[i] = j;
            let ok = (0..=i).all(|k| p.get(i, k) == p.get(j, image[k]) && p.get(k, i) == p.get(image[k], j));
            if ok {
                used[j] = true;
                go(i + 1, p, options, image, used, out);
                used[j] = false;
            }
        }
        image[i] = usize::MAX;
    }
    let mut found = Vec::new();
    go(0, &profile, &options, &mut image, &mut used, &mut found);
    let codes: Vec<CanonicalCode> = profile.graphs().iter().map(canonical_code).collect();
    for pi in found {
        survivors.push(
            pi.iter()
                .enumerate()
                .filter(|(a, b)| a != *b)
                .map(|(a, &b)| (codes[a].clone(), codes[b].clone()))
                .collect(),
        );
    }
    Ok(ConjectureReport { n, universe_size: m, candidates, survivors, caveat: SCAN_CAVEAT.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn null_graph_maps_once() {
        assert_eq!(count_hom(&named::empty(0), &named::path(3)), 1);
        assert_eq!(count_hom(&named::empty(1), &named::empty(0)), 0);
    }

    #[test]
    fn monomorphisms_into_edges_and_triangles() {
        for method in [MonoMethod::Direct, MonoMethod::Inversion] {
            assert_eq!(count_mono(&named::path(2), &named::complete(3), method), 6);
            assert_eq!(count_mono(&named::path(2), &named::path(2), method), 2);
        }
    }

    #[test]
    fn isomorphic_pair_is_rejected() {
        assert!(distinguishing_witness(&named::path(3), &named::star(2), Direction::Left, 3).is_err());
    }
}
