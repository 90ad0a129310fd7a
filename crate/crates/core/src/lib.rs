//! Exact arithmetic for solvable polynomial algebras given by finite
//! presentations.
//!
//! The kernel multiplies in PBW normal form, decides whether a presentation
//! is graded or filtered with respect to a weight vector, synthesizes
//! degree-first monomial orderings, and builds the associated graded algebra
//! and the Rees algebra as new presentations.

pub mod degree;
pub mod error;
pub mod format;
pub mod fourier_motzkin;
pub mod monomial;
pub mod ordering;
pub mod par;
pub mod poly;
pub mod presentation;
pub mod rewrite;
pub mod sample;
pub mod scalar;
pub mod transform;
pub mod verify;

pub use degree::DegreeFunction;
pub use error::{AlgebraError, Result};
pub use monomial::Monomial;
pub use ordering::{GradedCheck, MonomialOrdering};
pub use par::Exec;
pub use poly::Polynomial;
pub use presentation::{AlgebraPresentation, Relation};
pub use rewrite::{
    check_associativity, check_pbw_confluence, check_solvable, ConfluenceReport, Multiplier, SolvableReport,
    DEFAULT_BUDGET,
};
pub use scalar::{Field, Scalar};
