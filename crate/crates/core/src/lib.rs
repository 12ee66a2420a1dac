//! Exact distributions of quadrant marked mesh patterns over up-down and
//! down-up permutations.
//!
//! Every distribution polynomial is available three ways: exhaustive
//! enumeration ([`dist::brute`]), positional recursions on the location of
//! the maximum ([`dist::recursion`]), and term-by-term expansion of the
//! exponential generating functions ([`dist::generating`]). The
//! [`laws`] module explains individual coefficients, and [`suites`] ties
//! everything into verification reports.

pub mod algebra;
pub mod alternating;
pub mod cli;
pub mod dist;
pub mod error;
pub mod laws;
pub mod pattern;
pub mod perm;
pub mod render;
pub mod report;
pub mod suites;

pub use algebra::{BigRational, EgfSeries, NPolynomial, XPolynomial};
pub use alternating::{enumerate_alternating, AlternatingClass, Classification};
pub use dist::{Family, Provenance};
pub use error::{Error, Result};
pub use pattern::{QuadrantRequirement, QuadrantSpec};
pub use perm::Permutation;
