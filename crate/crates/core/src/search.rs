//! Exhaustive grouping of small graphs by an abstract invariant, a check
//! for the (K_3)^p (K_{1,3})^q families, and the 2^{e-1} ≤ v! bound.

use std::collections::HashMap;
use std::hash::Hash;
use std::path::PathBuf;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::cache::SubgraphCache;
use crate::error::{Error, Result};
use crate::graph::{canonical_code, enumerate_graphs, named, trees_up_to, CanonicalCode, Graph, GraphQuery};
use crate::lattice::{build_folded_lattice_with, lattice_isomorphism, lattice_key, partition_deck, relabel};
use crate::poset::{build_edge_poset_with, poset_isomorphic, AbstractPoset};
use crate::symfun::xg_direct;
use crate::LabelMode;

pub const PE_EDGE_CAP: usize = 7;
pub const LC_VERTEX_CAP: usize = 8;
pub const XG_VERTEX_CAP: usize = 6;
pub const XG_TREE_CAP: usize = 9;
pub const FAMILY_EDGE_CAP: usize = 12;

/// Non-singleton classes of graphs sharing an invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollisionReport {
    pub invariant: String,
    pub bound: usize,
    pub graphs_scanned: usize,
    pub classes: Vec<Vec<CanonicalCode>>,
    /// Per class, whether all members have the same partition deck.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decks_equal: Option<Vec<bool>>,
}

impl CollisionReport {
    pub fn class_containing(&self, g: &Graph) -> Option<&[CanonicalCode]> {
        let c = canonical_code(g);
        self.classes.iter().find(|k| k.contains(&c)).map(Vec::as_slice)
    }
}

/// Groups by `key`, then splits each bucket by the exact `same` test so a
/// key collision cannot merge different classes.
fn group<K: Hash + Eq, V>(
    graphs: &[Graph],
    mut value: impl FnMut(&Graph) -> Result<V>,
    key: impl Fn(&V) -> K,
    same: impl Fn(&V, &V) -> bool,
) -> Result<Vec<Vec<CanonicalCode>>> {
    let mut buckets: HashMap<K, Vec<(usize, V)>> = HashMap::new();
    for (i, g) in graphs.iter().enumerate() {
        let v = value(g)?;
        buckets.entry(key(&v)).or_default().push((i, v));
    }
    let mut classes = Vec::new();
    for (_, bucket) in buckets {
        let mut parts: Vec<Vec<(usize, V)>> = Vec::new();
        for (i, v) in bucket {
            match parts.iter_mut().find(|p| same(&p[0].1, &v)) {
                Some(p) => p.push((i, v)),
                None => parts.push(vec![(i, v)]),
            }
        }
        classes.extend(parts.into_iter().filter(|p| p.len() > 1).map(|p| p.into_iter().map(|(i, _)| i).collect::<Vec<_>>()));
    }
    for c in &mut classes {
        c.sort_unstable();
    }
    classes.sort();
    Ok(classes.into_iter().map(|c| c.into_iter().map(|i| canonical_code(&graphs[i])).collect()).collect())
}

/// Graphs without isolated vertices and at most `max_edges` edges with
/// isomorphic abstract edge posets. Bounds above the desk cap need `force`.
pub fn pe_collisions(max_edges: usize, force: bool) -> Result<CollisionReport> {
    if max_edges > PE_EDGE_CAP && !force {
        return Err(Error::Precondition(format!("edge bound {max_edges} exceeds {PE_EDGE_CAP}; pass force")));
    }
    let graphs = enumerate_graphs(&GraphQuery { max_vertices: None, max_edges: Some(max_edges), no_isolated: true })?;
    let cache = SubgraphCache::new();
    let classes = group(
        &graphs,
        |g| Ok(AbstractPoset::new(&build_edge_poset_with(g, &cache)?)),
        |p| p.clone(),
        |a, b| poset_isomorphic(a.poset(), b.poset()).is_some(),
    )?;
    Ok(CollisionReport { invariant: "pe".into(), bound: max_edges, graphs_scanned: graphs.len(), classes, decks_equal: None })
}

/// Graphs without isolated vertices on at most `max_vertices` vertices with
/// isomorphic abstract folded connected partition lattices.
pub fn lc_collisions(max_vertices: usize) -> Result<CollisionReport> {
    if max_vertices > LC_VERTEX_CAP {
        return Err(Error::Precondition(format!("vertex bound {max_vertices} exceeds {LC_VERTEX_CAP}")));
    }
    let graphs = enumerate_graphs(&GraphQuery { max_vertices: Some(max_vertices), max_edges: None, no_isolated: true })?;
    let graphs: Vec<Graph> = graphs.into_iter().filter(|g| g.edge_count() > 0).collect();
    let cache = SubgraphCache::new();
    let classes = group(
        &graphs,
        |g| {
            let l = relabel(&build_folded_lattice_with(g, &cache)?, LabelMode::Abstract)?;
            let k = lattice_key(&l)?;
            Ok((l, k))
        },
        |(_, k)| k.clone(),
        |(a, _), (b, _)| matches!(lattice_isomorphism(a, b), Ok(Some(_))),
    )?;
    Ok(CollisionReport { invariant: "lc".into(), bound: max_vertices, graphs_scanned: graphs.len(), classes, decks_equal: None })
}

/// Graphs with equal chromatic symmetric functions: all graphs on
/// `max_vertices` vertices (isolated vertices allowed), or all trees up to
/// that size.
pub fn xg_collisions(max_vertices: usize, trees_only: bool) -> Result<CollisionReport> {
    let cap = if trees_only { XG_TREE_CAP } else { XG_VERTEX_CAP };
    if max_vertices > cap {
        return Err(Error::Precondition(format!("vertex bound {max_vertices} exceeds {cap}")));
    }
    let graphs = if trees_only {
        trees_up_to(max_vertices)
    } else {
        enumerate_graphs(&GraphQuery { max_vertices: Some(max_vertices), max_edges: None, no_isolated: false })?
    };
    let classes = group(&graphs, xg_direct, |x| x.clone(), |a, b| a == b)?;
    let mut decks_equal = Vec::with_capacity(classes.len());
    for c in &classes {
        let decks = c.iter().map(|g| partition_deck(&g.graph())).collect::<Result<Vec<_>>>()?;
        decks_equal.push(decks.windows(2).all(|w| w[0] == w[1]));
    }
    let invariant = if trees_only { "xg-trees" } else { "xg" };
    Ok(CollisionReport {
        invariant: invariant.into(),
        bound: max_vertices,
        graphs_scanned: graphs.len(),
        classes,
        decks_equal: Some(decks_equal),
    })
}

/// Shared components of the two family members.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyComponent {
    /// Path on the given number of vertices (at least 2).
    Path(usize),
    /// Cycle on the given number of vertices (at least 3).
    Cycle(usize),
    /// The triangle with a pendant edge.
    B1,
    /// K_4 minus an edge.
    Diamond,
    K4,
}

impl FamilyComponent {
    pub fn graph(self) -> Result<Graph> {
        match self {
            FamilyComponent::Path(n) if n >= 2 => Ok(named::path(n)),
            FamilyComponent::Cycle(n) if n >= 3 => Ok(named::cycle(n)),
            FamilyComponent::B1 => Ok(named::paw()),
            FamilyComponent::Diamond => Ok(named::diamond()),
            FamilyComponent::K4 => Ok(named::complete(4)),
            other => Err(Error::Precondition(format!("{other:?} is too small to be a component"))),
        }
    }
}

/// Accepts `path:N`, `cycle:N`, `b1`, `k4-e` and `k4`.
impl FromStr for FamilyComponent {
    type Err = Error;
    fn from_str(s: &str) -> Result<FamilyComponent> {
        let size = |x: &str| x.parse::<usize>().map_err(|_| Error::Precondition(format!("bad size in {s:?}")));
        let c = match s.split_once(':') {
            Some(("path", n)) => FamilyComponent::Path(size(n)?),
            Some(("cycle", n)) => FamilyComponent::Cycle(size(n)?),
            None if s == "b1" => FamilyComponent::B1,
            None if s == "k4-e" => FamilyComponent::Diamond,
            None if s == "k4" => FamilyComponent::K4,
            _ => return Err(Error::Precondition(format!("unknown family component {s:?}"))),
        };
        c.graph()?;
        Ok(c)
    }
}

/// Whether (K_3)^p (K_{1,3})^q ΠF_i and (K_3)^r (K_{1,3})^s ΠF_i have
/// isomorphic abstract edge posets.
pub fn family_check(p: usize, q: usize, r: usize, s: usize, components: &[FamilyComponent]) -> Result<bool> {
    if p + q != r + s || (p, q) == (r, s) {
        return Err(Error::Precondition("need p + q = r + s and (p, q) != (r, s)".into()));
    }
    let shared = components.iter().map(|c| c.graph()).collect::<Result<Vec<_>>>()?;
    let build = |a: usize, b: usize| {
        let mut parts = vec![named::complete(3); a];
        parts.extend(std::iter::repeat(named::star(3)).take(b));
        parts.extend(shared.iter().cloned());
        named::union(&parts)
    };
    let (g, h) = (build(p, q), build(r, s));
    if g.edge_count() > FAMILY_EDGE_CAP {
        return Err(Error::Precondition(format!("{} edges exceeds {FAMILY_EDGE_CAP}", g.edge_count())));
    }
    let cache = SubgraphCache::new();
    let (a, b) = (build_edge_poset_with(&g, &cache)?, build_edge_poset_with(&h, &cache)?);
    Ok(poset_isomorphic(&a, &b).is_some())
}

/// 2^{e-1} ≤ v!, compared exactly.
pub fn muller_bound(g: &Graph) -> bool {
    let e = g.edge_count();
    if e == 0 {
        return true;
    }
    let lhs = BigUint::from(1u32) << (e - 1);
    let rhs: BigUint = (1..=g.vertex_count() as u64).map(BigUint::from).product();
    lhs <= rhs
}

/// Directory for cached reports, from `POSETLAB_CACHE_DIR`.
pub fn cache_dir() -> Option<PathBuf> {
    std::env::var_os("POSETLAB_CACHE_DIR").filter(|s| !s.is_empty()).map(PathBuf::from)
}

/// Returns the cached report for `(name, bound)` under `dir` when present,
/// otherwise computes and stores it. Files are keyed by crate version.
pub fn cached_report(
    dir: Option<&std::path::Path>,
    name: &str,
    bound: usize,
    compute: impl FnOnce() -> Result<CollisionReport>,
) -> Result<CollisionReport> {
    let Some(dir) = dir else { return compute() };
    let path = dir.join(format!("{name}-{bound}-v{}.json", env!("CARGO_PKG_VERSION")));
    if let Ok(text) = std::fs::read_to_string(&path) {
        if let Ok(r) = report_from_json(&serde_json::from_str(&text).map_err(|e| Error::Json(e.to_string()))?) {
            return Ok(r);
        }
    }
    let r = compute()?;
    std::fs::create_dir_all(dir).map_err(|e| Error::Io(e.to_string()))?;
    let text = serde_json::to_string_pretty(&report_to_json(&r)).expect("serializable");
    std::fs::write(&path, text).map_err(|e| Error::Io(e.to_string()))?;
    Ok(r)
}

pub fn report_to_json(r: &CollisionReport) -> serde_json::Value {
    let mut v = serde_json::to_value(r).expect("serializable");
    let obj = v.as_object_mut().expect("object");
    obj.insert("schema".into(), "posetlab/collisions".into());
    obj.insert("version".into(), crate::io::SCHEMA_VERSION.into());
    v
}

pub fn report_from_json(v: &serde_json::Value) -> Result<CollisionReport> {
    if v.get("schema").and_then(|s| s.as_str()) != Some("posetlab/collisions")
        || v.get("version").and_then(|s| s.as_u64()) != Some(u64::from(crate::io::SCHEMA_VERSION))
    {
        return Err(Error::Json("not a posetlab/collisions v1 document".into()));
    }
    serde_json::from_value(v.clone()).map_err(|e| Error::Json(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_arithmetic() {
        assert!(!muller_bound(&named::complete(4)));
        assert!(muller_bound(&named::path(4)));
        assert!(muller_bound(&named::path(2)));
        assert!(muller_bound(&named::empty(3)));
    }

    #[test]
    fn family_preconditions() {
        assert!(family_check(1, 0, 1, 0, &[]).is_err());
        assert!(family_check(2, 0, 1, 0, &[]).is_err());
        assert!("path:1".parse::<FamilyComponent>().is_err());
        assert_eq!("k4-e".parse::<FamilyComponent>().unwrap(), FamilyComponent::Diamond);
    }
}
