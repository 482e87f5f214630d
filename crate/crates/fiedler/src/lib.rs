//! Sign-pattern imbalance of Fiedler vectors.
//!
//! Spectral bisection splits a graph by the signs of a Fiedler vector. The
//! imbalance i(x) of a vector is min(#positive entries, #negative
//! entries); i(G) minimizes this over all Fiedler vectors. This crate
//! decides and certifies i(G) for small graphs (exactly for i in {0, 1}
//! on all graphs and for i = 2 on regular graphs), computes the
//! associated multiplicity formulas and extremal constructions, and
//! validates every structural result against an independent brute-force
//! eigenspace oracle.
//!
//! Module map:
//! - [`graph`]: graph type, named families, combinatorial primitives
//! - [`graph6`]: graph6 text codec
//! - [`spectra`]: dense symmetric eigensolver, grouped spectra, sign profiles
//! - [`sign_oracle`]: brute-force sign-pattern enumeration over eigenspaces
//! - [`join_theory`]: join factorization, imbalance classification, k-join
//!   recognition, multiplicity formulas and extremal generators
//! - [`threshold`]: threshold graphs and conjugate degree sequences
//! - [`three_eigs`]: graphs with exactly three distinct Laplacian eigenvalues
//! - [`regular`]: imbalance-2 characterization for regular graphs
//! - [`enumerate`]: corpus generation for the verification harness
//! - [`harness`]: named verification suites shared by tests and the CLI

pub mod enumerate;
mod error;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod join_theory;
pub mod regular;
pub mod sign_oracle;
pub mod spectra;
pub mod three_eigs;
pub mod threshold;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use join_theory::{Certificate, Check, KJoinDecomposition, Verdict, Witness};
pub use sign_oracle::{BisectionReport, CellEnumeration};
pub use spectra::{AlgebraicConnectivity, SignProfile, Spectrum};
