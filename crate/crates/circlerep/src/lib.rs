//! Circle-graph representations as circular double-occurrence words:
//! recognition, partial representation extension by split decomposition,
//! simultaneous representations, the total-ordering reduction, and the
//! brute-force oracles that cross-check all of it at small scale.

pub mod base;
pub mod extend;
pub mod graph;
pub mod oracle;
pub mod simrep;
pub mod split;
pub mod word;

pub use graph::{Graph, GraphError, Shape};
pub use word::{CircularWord, WordError};
