//! Sparse bivariate polynomials in x and y over the rationals, with exact
//! composition for the substitutions the reciprocity identities need.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::{rat_pow, Rational};
use crate::poly::dense::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BivariatePolynomial {
    /// (x exponent, y exponent) -> coefficient; zero coefficients are never stored.
    terms: BTreeMap<(usize, usize), Rational>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        BivariatePolynomial::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = BivariatePolynomial::zero();
        p.insert_add(0, 0, c);
        p
    }

    pub fn one() -> Self {
        BivariatePolynomial::constant(Rational::one())
    }

    /// The variable x.
    pub fn x() -> Self {
        let mut p = BivariatePolynomial::zero();
        p.insert_add(1, 0, Rational::one());
        p
    }

    /// The variable y.
    pub fn y() -> Self {
        let mut p = BivariatePolynomial::zero();
        p.insert_add(0, 1, Rational::one());
        p
    }

    /// Embed a univariate polynomial in x.
    pub fn from_poly_in_x(p: &Polynomial) -> Self {
        let mut out = BivariatePolynomial::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.insert_add(i, 0, c.clone());
        }
        out
    }

    pub fn insert_add(&mut self, i: usize, j: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &Rational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return BivariatePolynomial::zero();
        }
        BivariatePolynomial {
            terms: self.terms.iter().map(|(k, t)| (*k, t * c)).collect(),
        }
    }

    /// Multiply by y^j.
    pub fn mul_ypow(&self, j: usize) -> Self {
        BivariatePolynomial {
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| ((*a, b + j), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = BivariatePolynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute x := sub_x, y := sub_y by exact composition.
    pub fn compose(&self, sub_x: &Self, sub_y: &Self) -> Self {
        let max_i = self.terms.keys().map(|(i, _)| *i).max().unwrap_or(0);
        let max_j = self.terms.keys().map(|(_, j)| *j).max().unwrap_or(0);
        self.compose_with(&power_table(sub_x, max_i), &power_table(sub_y, max_j))
    }

    /// Composition against precomputed power tables of the substitution
    /// targets (see [`power_table`]); lets a caller amortize the tables over
    /// many compositions.
    pub fn compose_with(&self, pow_x: &[Self], pow_y: &[Self]) -> Self {
        let mut out = BivariatePolynomial::zero();
        for ((i, j), c) in &self.terms {
            for ((i1, j1), c1) in &pow_x[*i].terms {
                for ((i2, j2), c2) in &pow_y[*j].terms {
                    out.insert_add(i1 + i2, j1 + j2, &(c1 * c2) * c);
                }
            }
        }
        out
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for ((i, j), c) in &self.terms {
            acc += &(&(c * &rat_pow(x, *i as i64)) * &rat_pow(y, *j as i64));
        }
        acc
    }

    /// Substitute a constant for y; returns the x-coefficient vector.
    pub fn substitute_y(&self, y: &Rational) -> Vec<Rational> {
        let max_i = self.terms.keys().map(|(i, _)| *i).max().unwrap_or(0);
        let mut coeffs = vec![Rational::zero(); max_i + 1];
        for ((i, j), c) in &self.terms {
            coeffs[*i] += &(c * &rat_pow(y, *j as i64));
        }
        coeffs
    }
}

/// base^0, base^1, …, base^up_to.
pub fn power_table(base: &BivariatePolynomial, up_to: usize) -> Vec<BivariatePolynomial> {
    let mut pows = Vec::with_capacity(up_to + 1);
    pows.push(BivariatePolynomial::one());
    for i in 1..=up_to {
        pows.push(&pows[i - 1] * base);
    }
    pows
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for ((i, j), c) in &rhs.terms {
            out.insert_add(*i, *j, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for ((i, j), c) in &rhs.terms {
            out.insert_add(*i, *j, -c);
        }
        out
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &rhs.terms {
                out.insert_add(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}
