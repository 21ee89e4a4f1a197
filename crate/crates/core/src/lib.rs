//! Spectral machinery for the A_α-matrix of a simple graph,
//! `A_α(G) = α·D(G) + (1 − α)·A(G)` with `α ∈ [0, 1]`.
//!
//! The crate is split along the lines of the computation:
//!
//! - [`graph`]: simple undirected graphs, parametric families, line graphs,
//!   edge-list files and small-graph enumeration.
//! - [`indices`]: Zagreb, forgotten and general Randić indices.
//! - [`linalg`]: dense symmetric matrices, two independent eigensolvers,
//!   characteristic polynomials and the closed-form spectra / identities
//!   used as cross-checks.
//! - [`bounds`]: eigenvalue bounds for `A_α(G)` and `A_α(l(G))`.
//! - [`experiments`]: table reproduction, α-sweeps, counterexample search
//!   and timing, all serialized as CSV.

pub mod bounds;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod indices;
pub mod linalg;

pub use error::{Error, Result};
pub use graph::{DegreeProfile, Family, Graph, LineGraph};
pub use linalg::{RectMatrix, Spectrum, SymMatrix};
