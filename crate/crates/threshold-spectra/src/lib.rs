//! Exact Laplacian spectra of threshold hypergraphs.
//!
//! A threshold hypergraph is grown from a single vertex by repeatedly
//! adding isolated vertices or k-dominating sets, and is encoded by an
//! integer string `0^{m_1} k_1 ... 0^{m_d} k_d`. This crate
//!
//! * parses those strings and materializes the hypergraphs
//!   ([`code`], [`hypergraph`]);
//! * assembles the weighted hypergraph Laplacian in exact rational
//!   arithmetic ([`laplacian`]);
//! * evaluates its complete spectrum through three independent closed
//!   forms — directly from the string, incrementally one domination at
//!   a time, and from the Ferrers diagram of the degree sequence
//!   ([`closedform`], [`ferrers`]);
//! * extends the calculus to complements, disjoint unions, and
//!   co-expressions over them ([`closedform`]);
//! * certifies r-integrality of the resulting spectra ([`integrality`]);
//! * cross-validates everything against a dense Jacobi eigensolver
//!   ([`oracle`]).
//!
//! The `thspec` binary exposes all of this on the command line.

pub mod closedform;
pub mod code;
pub mod error;
pub mod ferrers;
pub mod hypergraph;
pub mod integrality;
pub mod laplacian;
pub mod matrix;
pub mod oracle;
pub mod rational;
pub mod spectrum;

pub use closedform::{
    add_isolated, complement_spectrum, dominate_spectrum, incremental_spectrum,
    k_threshold_spectrum, phi, threshold_spectrum, union_spectrum, CoExpr,
};
pub use code::{random_code, RandomCodeParams, ThresholdCode};
pub use error::{Error, Result};
pub use ferrers::{dominator_widths, ferrers_spectrum, recover_code, FerrersDiagram};
pub use hypergraph::{Hypergraph, Uniformity};
pub use integrality::{certify, predicted_ratio, rational_gcd, verify_integral};
pub use laplacian::{apply, laplacian_matrix};
pub use matrix::SquareMatrix;
pub use oracle::{compare_spectra, symmetric_eigenvalues};
pub use rational::Rational;
pub use spectrum::Spectrum;
