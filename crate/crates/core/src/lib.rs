//! Executable invariants for the typical structure of sparse `H`-free graphs.
//!
//! * [`graph`]: small bitset graphs, graph6, containment, girth, χ.
//! * [`criticality`]: critical vertices and stars, simple/plain labels.
//! * [`density`]: `m₂`, `d_k`, η/ζ and the threshold `m_H(n)`.
//! * [`partition`]: r-colourings as complete r-partite graphs, `G(r,k)`.
//! * [`census`]: exact labelled counts of `H`-free graphs.
//! * [`sampler`]: rejection and edge-swap sampling from `F_{n,m}(H)`.
//! * [`bounds`]: hypergeometric Janson/Harris/tail bounds and exact oracles.
//!
//! Exact arithmetic is generic over [`scalar::ExactScalar`]; the aliases
//! below fix the defaults used by the reports.

pub mod bounds;
pub mod census;
pub mod criticality;
pub mod density;
pub mod error;
pub mod graph;
pub mod partition;
pub mod sampler;
pub mod scalar;

pub use error::{Error, Result};
pub use graph::{Graph, MAX_VERTICES};

/// Exact density values.
pub type Density = num_rational::Ratio<i64>;
/// Arbitrary-precision rationals for probabilities and fractions.
pub type BigRational = num_rational::BigRational;
/// Arbitrary-precision counts.
pub type Count = num_bigint::BigUint;
/// Floating-point type of the bound evaluators and samplers.
pub type Real = f64;
