//! Exact distance-matrix spectra for small connected graphs.
//!
//! The crate is organised in four layers:
//!
//! * [`graph`]: bit-row graphs, the pendant-clique / clique-pair / friendship
//!   families, breadth-first distance matrices, induced-subgraph and
//!   isomorphism search, and the graph6 codec.
//! * [`charpoly`]: exact integer characteristic polynomials of distance
//!   matrices (two independent routes), the closed-form family polynomials and
//!   their sign conditions.
//! * [`spectral`]: Jacobi eigenvalues, interlacing, Sturm-sequence root
//!   counting and exact eigenvalue-location claims.
//! * [`ds`]: fixture catalog, exhaustive enumeration, cospectral-mate search,
//!   census and forbidden-subgraph checks.

pub mod charpoly;
pub mod ds;
mod error;
pub mod graph;
pub mod json;
pub mod spectral;
pub mod sweep;

pub use charpoly::{dist_charpoly, IntPolynomial};
pub use error::{Error, Result};
pub use graph::{apsp, DistanceMatrix, FamilySpec, Graph};
pub use spectral::{eigenvalues, Spectrum};

/// Exact rationals used for sign evaluation and root bracketing.
pub type Rational = num_rational::BigRational;
