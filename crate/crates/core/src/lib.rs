//! Verification kernels for list coloring of squares of subcubic planar graphs.
//!
//! The crate is organized around five pieces of machinery:
//!
//! * [`graph`] / [`embed`] — simple graphs, the square operator, rotation-system
//!   embeddings with face tracing, graph6 and planar_code I/O, and a planarity
//!   test that produces a witness embedding.
//! * [`catalog`] / [`detect`] — the named subgraph configurations (F1–F4,
//!   H1–H6, J1–J8, T, W1, W2) with their per-vertex list-size annotations, and
//!   occurrence detection in embedded hosts.
//! * [`poly`] / [`nullstellensatz`] — exact sparse multivariate polynomial
//!   arithmetic, graph polynomials, and target-coefficient extraction backing
//!   the nonzero-coefficient certificates.
//! * [`listcolor`] / [`lemmas`] — complete list-coloring search, canonical
//!   enumeration of list assignments up to color renaming, and the per-lemma
//!   verification driver (exhaustive or sampled).
//! * [`discharge`] / [`localcases`] — exact charge bookkeeping, the transfer
//!   rules, and mechanical replay of the local face-charge case analysis.
//!
//! [`chromatic`] and [`scan`] support corpus scanning: exact chromatic number
//! of squares at desk scale and graph6 stream filtering.

pub mod catalog;
pub mod chromatic;
pub mod detect;
pub mod discharge;
pub mod embed;
pub mod graph;
pub mod lemmas;
pub mod listcolor;
pub mod localcases;
pub mod nullstellensatz;
pub mod poly;
pub mod scan;
pub mod suite;

pub use graph::Graph;
pub use embed::PlaneGraph;
pub use poly::{Monomial, SparsePoly};
