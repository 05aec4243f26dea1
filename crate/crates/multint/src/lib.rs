//! Maximum-weight cliques in multiple-interval graphs.
//!
//! The crate covers four representation models (t-interval, t-track and
//! their circular variants), exact and approximate clique algorithms that
//! work from a representation, explicit representations of complements of
//! subdivided graphs, and the gadget graph `Q(w, l)` with its unit
//! representations.
//!
//! * [`graph`]: labeled graphs, subdivision, complement, weights.
//! * [`representation`]: pieces, validation, intersection graphs, verification.
//! * [`solvers`]: exact oracles and min-cut solvers for bipartite and co-bipartite inputs.
//! * [`approx`]: stab scanning, the `t`-approximation and the exact 2-track algorithm.
//! * [`constructions`]: representations of complements of `Subd_2(G)` and `Subd_4(G)`.
//! * [`gadgets`]: the grid `R(w, h)` and the gadget `Q(w, l)`.
//! * [`io`]: JSON, edge-list and DOT formats.
//! * [`corpus`]: seeded random instances.
//! * [`exec`]: sequential or rayon-parallel execution.

pub mod approx;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod exec;
pub mod gadgets;
pub mod graph;
pub mod io;
pub mod representation;
pub mod solvers;

pub use error::{Error, Result};
