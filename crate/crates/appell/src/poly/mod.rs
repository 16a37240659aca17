//! Polynomial arithmetic: dense univariate polynomials with an explicit
//! index, sparse Laurent and bivariate polynomials, and truncated power
//! series, all over exact rationals.

mod bivariate;
mod dense;
mod laurent;
mod series;

pub use bivariate::{power_table, BivariatePolynomial};
pub use dense::{PalindromeClass, Polynomial};
pub use laurent::LaurentPolynomial;
pub use series::{times_binomial_power, PolyOrSeries, TruncatedSeries};
