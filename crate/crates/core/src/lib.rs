//! Exact Ehrhart theory for lattice polytopes: lattice-point counts,
//! boundary volumes, δ-vectors, reflexivity, smooth f-vectors, order
//! polytopes and the Birkhoff polytope.

pub mod birkhoff;
pub mod boundary;
pub mod count;
pub mod ehrhart;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod order;
pub mod polytope;
pub mod reflexive;
pub mod smooth;

pub use error::{Error, Result};
pub use exact::Rational;
pub use polytope::{FVector, Facet, LatticePolytope, PolytopeInput, RationalPolytope};
