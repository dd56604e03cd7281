//! Hermitian Randić matrix of second kind for mixed graphs.
//!
//! A mixed graph carries un-oriented edges and arcs. Its Hermitian adjacency
//! matrix puts `1` on un-oriented edges and the sixth root of unity
//! `ω = (1 + i√3)/2` (or its conjugate) on arcs; the Randić matrix normalizes
//! it by `D^{-1/2}` on both sides. This crate builds those matrices, computes
//! spectra and characteristic polynomials (numerically and by an exact
//! elementary-subgraph expansion), and checks the known spectral bounds.

pub mod bounds;
pub mod error;
pub mod gain;
pub mod graph;
pub mod matrix;
pub mod numfmt;
pub mod spectral;
pub mod suite;

pub use error::{Error, Result};
pub use graph::{parse_graph, serialize_graph, EdgeKind, EdgeRecord, MixedGraph};
pub use matrix::{build_randic, HermitianMatrix};
pub use spectral::{eigen_decompose, Spectrum};
pub use suite::{run_theorem_suite, Status, SuiteReport, TheoremRecord};
