//! Exact computation with Appell polynomial families over the rationals:
//! reciprocal and palindromic structure, reflection relations, rank/shift
//! reciprocity, Faulhaber-type decompositions A_n(x) = (u')^{δ_n} F_n(u)
//! under u = x(x-1), and power sums.
//!
//! Everything is computed in arbitrary-precision rational arithmetic, and
//! every central object is available by at least two independent routes so
//! the identities relating them can be tested exactly.
//!
//! ```
//! use appell::{AppellFamily, Route};
//! use appell::faulhaber::decompose;
//! use appell::arith::rat;
//!
//! let bernoulli = AppellFamily::bernoulli();
//! // B_3(x) = (2x - 1)·F_3(u) with u = x(x-1) and F_3(u) = u/2
//! let f3 = decompose(&bernoulli, 3, Route::Recurrence)?;
//! assert_eq!(f3.coeffs(), &[rat(0, 1), rat(1, 2)]);
//! assert_eq!(f3.reconstruct(), bernoulli.appell(3)?);
//! # Ok::<(), appell::Error>(())
//! ```

pub mod arith;
mod error;
pub mod family;
pub mod faulhaber;
pub mod poly;
pub mod powersum;
pub mod report;
pub mod umbral;
pub mod verify;

pub use arith::{QuadRational, Rational};
pub use error::{Error, Result};
pub use family::{AppellFamily, SigmaTable};
pub use faulhaber::{FaulhaberPoly, LambdaTable, Route};
pub use poly::{
    BivariatePolynomial, LaurentPolynomial, PalindromeClass, PolyOrSeries, Polynomial,
    TruncatedSeries,
};
pub use powersum::ClassicalFaulhaber;
pub use report::{Case, Report};
pub use verify::Suite;
