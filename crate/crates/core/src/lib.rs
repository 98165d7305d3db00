//! Small-graph toolkit for apex graphs and their minor-minimal obstructions.
//!
//! Graphs have at most 31 vertices and are plain `Copy` values
//! ([`SmallGraph`]). On top of that sit a graph6 codec, canonical labelling,
//! a left-right planarity test, minor search with checkable witnesses, apex
//! and MMNA (minor-minimal non-apex) tests, delta-wye closures, exhaustive
//! enumeration, and batch drivers in [`pipeline`].
//!
//! ```
//! use apexion::{apex, minor, named};
//!
//! let g = named::cone_over_icosahedron();
//! assert!(apex::classify_apex(&g).is_apex());
//! assert!(minor::has_k6_minor(&g).is_none());
//! ```

pub mod apex;
pub mod canon;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod minor;
pub mod mmna;
pub mod named;
pub mod pipeline;
pub mod planarity;
pub mod transforms;

pub use apex::{apex_vertices, classify_apex, is_apex, ApexVerdict};
pub use canon::{are_isomorphic, canonical_form, canonical_graph, CanonicalForm};
pub use enumerate::{enumerate_all, EnumSpec};
pub use error::{Error, Result};
pub use graph::{Edge, SmallGraph, VertexSet, MAX_ORDER};
pub use graph6::Graph6Error;
pub use minor::{has_k6_minor, has_minor, BranchDecomposition};
pub use mmna::{is_mmna, MmnaVerdict};
pub use planarity::is_planar;
pub use transforms::{delta_wye, dy_closure, wye_delta, ClosureCaps};
