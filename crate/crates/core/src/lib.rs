//! Exact computation and cross-verification of signed bigrassmannian
//! polynomials `B_n(q)`, the bigrassmannian determinant `bdet`, tournament
//! expansions of weighted Vandermonde products, and weighted condensation.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! every headline quantity can be reached by at least two independent routes.

pub mod bdet;
pub mod bpoly;
pub mod error;
pub mod perm;
pub mod poly;
pub mod tournament;
pub mod vandermonde;

pub use bdet::{Deformation, PolyMatrix};
pub use bpoly::{BnResult, Route};
pub use error::{Error, Result};
pub use perm::{BetaMethod, Permutation};
pub use poly::{HalfExp, Monomial, Polynomial, RationalFunction, Substitution};
pub use tournament::Tournament;
