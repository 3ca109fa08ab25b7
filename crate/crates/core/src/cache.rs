//! Memo of per-graph subgraph histograms, keyed by canonical code and shared
//! across poset and lattice builds.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::graph::{edge_histogram, induced_histogram, partition_histogram, CanonicalCode, Graph};

type Histogram = Arc<BTreeMap<CanonicalCode, u64>>;

#[derive(Default)]
pub struct SubgraphCache {
    induced: Mutex<HashMap<CanonicalCode, Histogram>>,
    edge: Mutex<HashMap<CanonicalCode, Histogram>>,
    partition: Mutex<HashMap<CanonicalCode, Histogram>>,
}

fn lookup(
    map: &Mutex<HashMap<CanonicalCode, Histogram>>,
    code: &CanonicalCode,
    f: impl Fn(&Graph) -> BTreeMap<CanonicalCode, u64>,
) -> Histogram {
    if let Some(h) = map.lock().expect("cache lock").get(code) {
        return h.clone();
    }
    let h = Arc::new(f(&code.graph()));
    map.lock().expect("cache lock").entry(code.clone()).or_insert(h).clone()
}

impl SubgraphCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Induced subgraph classes over all non-empty vertex subsets.
    pub fn induced(&self, code: &CanonicalCode) -> Histogram {
        lookup(&self.induced, code, induced_histogram)
    }

    /// Edge subgraph classes over all non-empty edge subsets.
    pub fn edge(&self, code: &CanonicalCode) -> Histogram {
        lookup(&self.edge, code, edge_histogram)
    }

    /// Spanning π-subgraph classes over all connected partitions.
    pub fn partition(&self, code: &CanonicalCode) -> Histogram {
        lookup(&self.partition, code, partition_histogram)
    }
}
