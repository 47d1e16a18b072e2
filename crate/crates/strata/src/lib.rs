//! Exact-arithmetic toolkit around the simply-laced diagrams `A_n`, `D_n`,
//! `E6`, `E7`, `E8` and the structures they control:
//!
//! - [`diagram`]: diagram construction, parsing, and classification of
//!   labeled trees into the admitted families.
//! - [`weyl`]: Weyl groups in simple-root coordinates; longest elements,
//!   descent sets, Coxeter numbers, and invariant degrees recovered from the
//!   characteristic polynomial of a Coxeter element.
//! - [`garside`]: Garside normal form for the corresponding Artin groups,
//!   with the word problem, the degree homomorphism, centrality tests, and
//!   equality in the inner-automorphism quotient.
//! - [`poly`] / [`ideal`]: sparse bivariate polynomials over `Q` with a
//!   round-tripping parser, and Buchberger's algorithm for the ideal
//!   membership questions used by the smoothness tests.
//! - [`milnor`]: Milnor numbers and monomial bases of plane-curve germs by
//!   truncation and exact row reduction, versal deformation families, and
//!   smoothness of fibers.
//! - [`semigroup`]: numerical semigroups, gap sequences, spin parity, and
//!   the genus-4 classifier.
//! - [`transvection`]: symplectic transvection representations attached to
//!   an oriented diagram, defining relations, the image of the Garside
//!   element, and a budgeted kernel search certified through normal forms.
//!
//! All computations are exact: integer matrices, `BigRational`
//! coefficients, and cyclotomic factorizations, never floating point.
//! Results are deterministic given identical inputs and budgets.
//!
//! The `examples/` directory is the guided tour; each example is a runnable
//! walkthrough of one capability. A thin `strata` binary exposes the same
//! operations as subcommands emitting stable JSON reports.

#![forbid(unsafe_code)]

pub mod diagram;
pub mod error;
pub mod garside;
pub mod ideal;
pub mod milnor;
pub mod poly;
pub mod report;
pub mod semigroup;
pub mod transvection;
pub mod weyl;

pub mod cli;

pub use diagram::{DynkinDiagram, Family};
pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
