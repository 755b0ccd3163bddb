//! One-dimensional path homology of directed graphs.
//!
//! * [`homology_static`]: rank of `H_1` from a small generating set of
//!   boundary cycles.
//! * [`persistence`]: 1-dimensional persistent path homology of an edge
//!   filtration.
//! * [`minbasis`]: a minimal homology basis from annotations and the
//!   Horton family.
//! * [`oracle`]: brute-force references used by the tests.

pub mod boundary;
pub mod cli;
pub mod digraph;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod generate;
pub mod homology_static;
pub mod minbasis;
pub mod oracle;
pub mod persistence;
pub mod reduce;

pub use digraph::{Edge, EdgeId, FilteredDigraph, VertexId};
pub use error::{Error, Result};
pub use field::{Field, FieldMode, PrimeField, RationalField};
pub use homology_static::{h1_rank_static, StaticRanks};
pub use minbasis::minimal_basis;
pub use persistence::{persistence, Persistence, PersistenceDiagram, PersistencePair};
pub use reduce::{Chain1, ReducedBasis};
