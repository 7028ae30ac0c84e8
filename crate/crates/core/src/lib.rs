//! Exact invariants of towers of P^1-bundles over P^1 and of the double
//! covers built on them.
//!
//! Everything is exact: divisor classes carry arbitrary-precision
//! rationals, intersection numbers come from reducing square-free
//! monomials in the Chow ring, and `h^0` is counted through the
//! projection-formula recursion.

pub mod chow;
pub mod cohomology;
pub mod covers;
mod error;
pub mod format;
pub mod wps;

pub use chow::{CycleExpression, DivisorClass, FreenessCertificate, IndexSet, TowerSpec};
pub use cohomology::DifferenceTable;
pub use covers::{CoverSpec, IdentityCheck, InvariantReport};
pub use error::{Error, Result};
pub use wps::WeightedHypersurface;

/// Exact rational scalar used throughout.
pub type Q = num_rational::BigRational;
