//! Graph reconstruction from abstract subgraph posets and connected
//! partition lattices.
//!
//! The crate builds induced and edge subgraph posets, folded connected
//! partition lattices, chromatic symmetric functions and their Tutte
//! refinement, and converts between these structures using only the
//! information an abstract (unlabelled) copy carries.

pub mod cache;
mod canon;
pub mod construct;
pub mod cover;
pub mod error;
pub mod graph;
pub mod hom;
pub mod io;
pub mod lattice;
pub mod poset;
pub mod search;
pub mod symfun;
pub mod tree;

pub use error::{Error, Result};
pub use cache::SubgraphCache;
pub use graph::{CanonicalCode, Graph, IntPartition, SetPartition};
pub use lattice::{FoldedLattice, LabelMode, MobiusTable, PartitionDeck, TypeLabel};
pub use poset::{AbstractPoset, LabeledPoset};
