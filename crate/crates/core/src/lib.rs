//! Laplacian-spectral bounds on the vertex congestion of tensor-network
//! contraction, together with the contraction-tree constructions that
//! realize them.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function of its inputs (and an explicit seed where randomness is
//! involved), so the same graph always produces the same spectrum, the same
//! clustering and the same tree.
//!
//! Overview:
//!
//! - [`graph`]: weighted undirected multigraphs, cuts, volumes, Laplacians.
//! - [`linalg`] / [`spectra`]: dense symmetric eigensolver and the named
//!   spectral quantities (`λ2`, `λn`, `μ2`, `μn`, Fiedler vector).
//! - [`clustering`]: k-means, spectral clustering, sweep cuts, balance `ε(G)`.
//! - [`contraction`]: contraction trees, congestion, the tree builders and an
//!   exact subset-DP oracle for small graphs.
//! - [`bounds`]: closed-form congestion bounds and family-specific formulas.
//! - [`generators`]: seeded generators for every experiment family.
#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod clustering;
pub mod contraction;
mod error;
pub mod generators;
pub mod graph;
pub mod linalg;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::Graph;
pub use linalg::SymMatrix;
