//! Workbench for graph products of groups.
//!
//! * [`graphs`]: simple graphs, opposites, contractions, doubles, holes,
//!   isomorphism, enumeration and graph6.
//! * [`words`]: elements of graph products of cyclic groups in canonical
//!   normal form, projections and the kernels `KP0`, `KPf`.
//! * [`complexes`]: the cube complexes `Z0` and (finite covers of) `Zf`,
//!   links, the flag condition and local isometries to the Salvetti complex.
//! * [`embeddings`]: generator-level homomorphisms from doubles and
//!   co-contractions, with relator and bounded injectivity checks.
//! * [`classify`]: hyperbolic surface subgroup verdicts for right-angled
//!   Coxeter and Artin groups and the small-graph census.

pub mod classify;
pub mod complexes;
pub mod embeddings;
pub mod graphs;
pub mod par;
pub mod words;

pub use graphs::{GraphError, SimpleGraph, VertexSet};
pub use par::Execution;
pub use words::{GroupSpec, NormalForm, Order, Word};
