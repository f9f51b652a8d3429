//! Decide where a graph sits on the almost-distance-regularity ladder from its
//! spectrum and distance structure.
//!
//! The crate takes a simple connected regular graph, computes its distance
//! matrices, eigenvalue spectrum and principal idempotents, builds the
//! predistance and preidempotent polynomials, and then runs the punctual,
//! partial, eigenspace and full distance-regularity characterizations,
//! including the spectral excess theorem, its dual form and the harmonic-mean
//! form. Every test is reported as a [`characterize::Verdict`] carrying the
//! measured quantities, the slack and the tolerance used.
//!
//! The crate is `no_std` + `alloc`; all file formats handled here (graph6,
//! edge-list text) are pure byte/string codecs. File IO, the CLI and JSON
//! reports live in the companion `adrg-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod analysis;
pub mod characterize;
pub mod corpus;
pub mod edgelist;
pub mod graph;
pub mod graph6;
pub mod mat;
pub mod poly;
pub mod spectral;
pub mod tol;

pub use analysis::{analyze, Analysis, AnalysisError, AnalyzeOptions};
pub use graph::{DistanceMatrices, Graph, GraphError};
pub use mat::Mat;
pub use spectral::{mat_inner, Idempotents, Spectrum};
pub use tol::Tolerances;
