//! Exact computer algebra for Nambu n-brackets.
//!
//! Everything in this crate works over polynomials with arbitrary-precision
//! rational coefficients; there are no floating-point numbers anywhere, so a
//! quantity is zero exactly when the algebra says it is.  The crate provides
//!
//! * sparse multivariate polynomials over `Q` ([`scalar`]),
//! * exterior calculus for multi-vector fields and differential forms on
//!   increasing multi-indices ([`exterior`]),
//! * the Nambu bracket of an `n`-vector field together with Hamiltonian
//!   vector fields, musical maps and the Schouten–Nijenhuis bracket
//!   ([`bracket`]),
//! * batch checkers for the fundamental identity and its algebraic,
//!   weighted and higher relatives, with exact residual witnesses
//!   ([`identity`]),
//! * structure theory: Darboux/Weinstein models, decomposability tests,
//!   pointwise pre-combing and the weight-constraint kernel ([`structure`]).

pub mod bracket;
pub mod error;
pub mod exterior;
pub mod identity;
pub mod json;
pub mod linalg;
pub mod perm;
pub mod scalar;
pub mod structure;

pub use bracket::BracketStructure;
pub use error::NambuError;
pub use exterior::{DifferentialForm, MultiIndex, MultiVectorField, VectorField};
pub use identity::{EnumerationStrategy, Verdict, Witness};
pub use scalar::{Point, Polynomial, Rational};
