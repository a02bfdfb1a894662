//! Exact construction, enumeration and certification of multi-splits of
//! hypersimplices `Δ(d, n)` and products of simplices, with the matroid
//! kernel (partition and nested matroids, corank vectors), the tropical
//! Stiefel map, and a lower-hull engine for regular subdivisions.
//!
//! The geometric kernels are generic over an exact scalar ([`Field`] or
//! [`Weight`]); the aliases below fix the arbitrary-precision defaults.

pub mod engine;
pub mod error;
pub mod io;
pub mod linalg;
pub mod matroid;
pub mod multisplit;
pub mod scalar;
pub mod stiefel;
pub mod subset;

pub use engine::{
    corank_subdivision, is_matroid_subdivision, is_tropical_plucker, plucker_violation, regular_subdivision,
    secondary_linearity_dimension, subdivisions_equal, verify_corank_covering, Affine, ConfigKind,
    Lifting, LinearityDimension, PointConfiguration, Subdivision,
};
pub use error::{Error, Result};
pub use matroid::{is_matroid, Components, Matroid, RankedChain, RankedPartition};
pub use multisplit::{MultiSplit, MultiSplitCells, ProductSplit};
pub use scalar::{Field, Weight};
pub use stiefel::ProductLifting;
pub use subset::Subset;

/// Arbitrary-precision rational; the default scalar everywhere.
pub type Rational = num_rational::BigRational;
/// Machine-word rational, for small hand-sized inputs only.
pub type Rational64 = num_rational::Rational64;

pub type RationalLifting = Lifting<Rational>;
pub type RationalSubdivision = Subdivision<Rational>;
pub type RationalConfiguration = PointConfiguration<Rational>;
pub type RationalProductLifting = ProductLifting<Rational>;
