//! Exact computer algebra for quadratic operads generated by one binary
//! operation.
//!
//! Relations live in the weight-3 space Γ(E)(3): twelve monomials
//! `(x_i·x_j)·x_k`, `x_i·(x_j·x_k)` for an operation without symmetry, or
//! three comb monomials `m1, m2, m3` for a commutative or anticommutative
//! one. On top of exact rational linear algebra the crate computes orbit
//! spans, ranks, Koszul duals, the tilde operad P̃, and decides
//! symbolically whether a mixed product on `A ⊗ B` stays inside a given
//! operad.
//!
//! ```
//! use operad_forge::{catalog, operad};
//!
//! let ass = catalog::preset("ass").unwrap();
//! assert!(operad::operads_equal(&operad::dual(&ass), &ass));
//! assert_eq!(ass.relations().dim(), 6);
//! ```

pub mod catalog;
pub mod cli;
pub mod closure;
pub mod dsl;
pub mod error;
pub mod group;
pub mod instance;
pub mod linalg;
pub mod operad;
pub mod report;
pub mod weight;

pub use error::{Error, ParseError, Result};
pub use group::{GroupVector, IsotypicProfile, Perm3};
pub use linalg::{Rational, Subspace};
pub use operad::{PresentationPair, QuadraticOperad, RelationModule};
pub use weight::{Monomial3, Side, SymmetryClass, Weight3Element};
