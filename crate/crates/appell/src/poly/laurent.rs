//! Sparse Laurent polynomials: finite sums of integer powers of x, possibly
//! negative, over the rationals. No zero coefficients are stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::arith::{format_rational, parse_rational, rat_big, rat_pow, Rational};
use crate::error::{Error, Result};
use crate::poly::dense::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(iter: I) -> Self {
        let mut p = LaurentPolynomial::zero();
        for (e, c) in iter {
            p.insert_add(e, c);
        }
        p
    }

    /// Embed a dense polynomial with exponents 0, 1, 2, …
    pub fn from_poly(p: &Polynomial) -> Self {
        LaurentPolynomial::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64, c.clone())),
        )
    }

    /// P(1/x): the coefficient of x^i moves to exponent -i.
    pub fn from_poly_inverse_x(p: &Polynomial) -> Self {
        LaurentPolynomial::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (-(i as i64), c.clone())),
        )
    }

    fn insert_add(&mut self, e: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiply by x^s.
    pub fn mul_xpow(&self, s: i64) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, c)| (e + s, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return LaurentPolynomial::zero();
        }
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, t)| (*e, t * c)).collect(),
        }
    }

    /// Symbolic d/dx: c·x^e ↦ c·e·x^{e-1}.
    pub fn derivative(&self) -> Self {
        LaurentPolynomial::from_terms(
            self.terms
                .iter()
                .filter(|(e, _)| **e != 0)
                .map(|(e, c)| (e - 1, c * &rat_big((*e).into()))),
        )
    }

    pub fn derivative_iter(&self, ell: usize) -> Self {
        let mut p = self.clone();
        for _ in 0..ell {
            p = p.derivative();
        }
        p
    }

    /// Exact evaluation. Evaluation at 0 is a pole error when negative
    /// exponents are present; otherwise it returns the constant term.
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        if x.is_zero() {
            if self.min_exp().is_some_and(|e| e < 0) {
                return Err(Error::PoleAtZero);
            }
            return Ok(self.coeff(0));
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            acc += &(c * &rat_pow(x, *e));
        }
        Ok(acc)
    }

    /// Sum of all coefficients, i.e. the value at x = 1.
    pub fn eval_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |a, c| &a + c)
    }

    /// Convert to a dense polynomial when no negative exponents are present.
    pub fn to_polynomial(&self, index: usize) -> Result<Polynomial> {
        if self.min_exp().is_some_and(|e| e < 0) {
            return Err(Error::InvalidArgument(
                "Laurent polynomial with negative exponents is not a polynomial".into(),
            ));
        }
        let top = self.max_exp().unwrap_or(0).max(0) as usize;
        let mut coeffs = vec![Rational::zero(); top + 1];
        for (e, c) in &self.terms {
            coeffs[*e as usize] = c.clone();
        }
        Ok(Polynomial::new(coeffs, index))
    }

    pub fn to_json(&self) -> Value {
        let map: serde_json::Map<String, Value> = self
            .terms
            .iter()
            .map(|(e, c)| (e.to_string(), Value::String(format_rational(c))))
            .collect();
        json!({ "terms": map })
    }

    pub fn from_json(v: &Value) -> Result<LaurentPolynomial> {
        let bad = |m: &str| Error::InvalidArgument(format!("laurent JSON: {m}"));
        let map = v
            .get("terms")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("missing terms"))?;
        let mut p = LaurentPolynomial::zero();
        for (e, c) in map {
            let exp: i64 = e.parse().map_err(|_| bad("bad exponent"))?;
            let coeff = c
                .as_str()
                .ok_or_else(|| bad("coefficient must be a string"))
                .and_then(parse_rational)?;
            p.insert_add(exp, coeff);
        }
        Ok(p)
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(*e, -c);
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.insert_add(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one() && *e != 0;
            if !unit {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "{}x", if unit { "" } else { "*" })?,
                _ => write!(f, "{}x^{}", if unit { "" } else { "*" }, e)?,
            }
        }
        Ok(())
    }
}
