//! Truncated power series over the rationals: coefficients of x^0 … x^order
//! are exact, and arithmetic truncates to the smaller order.

use num_traits::Zero;

use crate::arith::{binom_rat, Rational};
use crate::poly::dense::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    /// Exactly order + 1 entries.
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_poly(p: &Polynomial, order: usize) -> Self {
        TruncatedSeries::new(p.coeffs().to_vec(), order)
    }

    /// (x + 1)^c = Σ_{v≥0} C(c, v) x^v, truncated. Exact for any integer c.
    pub fn binomial_series(c: i64, order: usize) -> Self {
        TruncatedSeries {
            coeffs: (0..=order as i64).map(|v| binom_rat(c, v)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, l: usize) -> Option<Rational> {
        self.coeffs.get(l).cloned()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn mul(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += &(a * b);
            }
        }
        TruncatedSeries { coeffs: out }
    }

    pub fn add(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
                .collect(),
        }
    }
}

/// Result of multiplying a polynomial by (x + 1)^c: a polynomial when
/// c >= 0, a truncated series when c < 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyOrSeries {
    Poly(Polynomial),
    Series(TruncatedSeries),
}

impl PolyOrSeries {
    pub fn coeff(&self, l: usize) -> Option<Rational> {
        match self {
            PolyOrSeries::Poly(p) => Some(p.coeff(l)),
            PolyOrSeries::Series(s) => s.coeff(l),
        }
    }

    pub fn as_poly(&self) -> Option<&Polynomial> {
        match self {
            PolyOrSeries::Poly(p) => Some(p),
            PolyOrSeries::Series(_) => None,
        }
    }

    pub fn as_series(&self) -> Option<&TruncatedSeries> {
        match self {
            PolyOrSeries::Series(s) => Some(s),
            PolyOrSeries::Poly(_) => None,
        }
    }
}

/// P(x)·(x+1)^c: exact polynomial for c >= 0 (the order argument is then
/// irrelevant), truncated series for c < 0.
pub fn times_binomial_power(p: &Polynomial, c: i64, order: usize) -> PolyOrSeries {
    if c >= 0 {
        let row = Polynomial::binomial_row(c as u32);
        PolyOrSeries::Poly(&row * p)
    } else {
        let s = TruncatedSeries::from_poly(p, order);
        PolyOrSeries::Series(s.mul(&TruncatedSeries::binomial_series(c, order)))
    }
}
