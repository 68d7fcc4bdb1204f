//! Exact barycenter criterion for Kähler-Einstein metrics on bi-equivariant
//! group compactifications of rank two (and custom root systems).
//!
//! The core is generic over a [`numeric::Scalar`]; the aliases below fix the
//! exact rational instantiation used by the catalog and the CLI.

pub mod catalog;
pub mod cli;
pub mod criterion;
pub mod error;
pub mod hessian;
pub mod numeric;
pub mod oracle;
pub mod poly;
pub mod polyint;
pub mod polytope;
pub mod rootsys;

pub use catalog::{get_entry, verify, CatalogEntry, VerifyReport};
pub use criterion::{ke_verdict, Membership, Verdict};
pub use error::{Error, Result};
pub use hessian::{BlockHessian, EvalPoint};
pub use numeric::{Matrix, NumberFormat, Scalar, Vector};
pub use oracle::{mc_moments, McEstimate};
pub use polytope::{HalfSpace, Polytope};
pub use rootsys::{Cone, RootSystem, WeylGroup};

pub type Rational = num_rational::BigRational;
pub type RatVector = Vector<Rational>;
pub type RatMatrix = Matrix<Rational>;
pub type RatPolytope = Polytope<Rational>;
pub type RatPolynomial = poly::Polynomial<Rational>;
pub type RatReport = criterion::Report<Rational>;
pub type FloatBlockHessian = BlockHessian<f64>;
