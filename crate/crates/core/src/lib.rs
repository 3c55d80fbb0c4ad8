//! Exact Moore-Penrose inverses of signed-graph incidence and Laplacian
//! matrices, computed from spanning trees and TU-subgraphs and checked
//! against a rank-factorization oracle.
//!
//! All arithmetic is exact. The matrix kernel is generic over [`Scalar`];
//! [`Rational`] and [`RatMatrix`] are the arbitrary-precision defaults.

pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod mpinv;
pub mod ratmat;
pub mod scalar;
pub mod sgraph;
pub mod verify;

pub use enumerate::{spanning_trees, tu_subgraphs, vol_squared, EdgeCap, SpanningTree, TuSubgraph};
pub use error::{Error, Result};
pub use mpinv::{pinv, Method, MethodChoice, PinvReport};
pub use ratmat::{penrose_verify, Matrix, PenroseFlags};
pub use scalar::Scalar;
pub use sgraph::{Sign, SignedEdge, SignedGraph};

/// Arbitrary-precision rational, always in lowest terms.
pub type Rational = num_rational::BigRational;

/// Dense matrix of [`Rational`] entries.
pub type RatMatrix = Matrix<Rational>;
