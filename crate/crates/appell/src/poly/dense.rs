//! Dense univariate polynomials over the rationals, carrying an explicit
//! index n. The index drives the star (reciprocal) operator and the
//! palindromic predicates; it may exceed the degree, and trailing zero
//! coefficients are preserved.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::arith::{binom_rat, falling_factorial, format_rational, parse_rational, rat_big, rat_i, QuadRational, Rational};
use crate::error::{Error, Result};

/// Coefficient symmetry of a polynomial relative to its index n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PalindromeClass {
    /// c_v = c_{n-v} for all v.
    Palindromic,
    /// c_v = -c_{n-v} for all v.
    AntiPalindromic,
    /// |c_v| = |c_{n-v}| for all v, but neither of the above.
    QuasiPalindromic,
    /// No coefficient symmetry.
    None,
}

impl fmt::Display for PalindromeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PalindromeClass::Palindromic => "palindromic",
            PalindromeClass::AntiPalindromic => "anti-palindromic",
            PalindromeClass::QuasiPalindromic => "quasi-palindromic",
            PalindromeClass::None => "none",
        };
        f.write_str(s)
    }
}

/// Dense polynomial: `coeffs[i]` is the coefficient of x^i.
///
/// Equality compares coefficient sequences (zero-extended); the index is
/// bookkeeping consulted by the star operator and the palindromic
/// classifier, not part of the value.
#[derive(Clone, Debug)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
    index: usize,
}

impl Polynomial {
    pub fn new(coeffs: Vec<Rational>, index: usize) -> Self {
        Polynomial { coeffs, index }
    }

    /// Convenience constructor from small integers.
    pub fn from_i64s(coeffs: &[i64], index: usize) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| rat_i(c)).collect(), index)
    }

    pub fn zero(index: usize) -> Self {
        Polynomial::new(Vec::new(), index)
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c], 0)
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    /// The polynomial x.
    pub fn x() -> Self {
        Polynomial::new(vec![Rational::zero(), Rational::one()], 1)
    }

    /// (x + 1)^c expanded from the binomial row, with index c.
    pub fn binomial_row(c: u32) -> Self {
        let coeffs = (0..=c).map(|v| binom_rat(c as i64, v as i64)).collect();
        Polynomial::new(coeffs, c as usize)
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn with_index(mut self, index: usize) -> Self {
        self.index = index;
        self
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Highest position with a nonzero coefficient, if any.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    /// Coefficients 0..=index as an owned, zero-padded vector.
    pub fn window(&self) -> Vec<Rational> {
        (0..=self.index).map(|i| self.coeff(i)).collect()
    }

    /// Horner evaluation, exact.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Horner evaluation in Q(√5).
    pub fn eval_quad(&self, x: &QuadRational) -> QuadRational {
        let mut acc = QuadRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &QuadRational::from_rational(c.clone());
        }
        acc
    }

    /// Exact ℓ-th derivative. The index decreases by ℓ, floored at 0.
    pub fn derivative(&self, ell: usize) -> Polynomial {
        if ell >= self.coeffs.len() {
            return Polynomial::zero(self.index.saturating_sub(ell));
        }
        let coeffs = (ell..self.coeffs.len())
            .map(|i| &self.coeffs[i] * &rat_big(falling_factorial(i as i64, ell as u32)))
            .collect();
        Polynomial::new(coeffs, self.index.saturating_sub(ell))
    }

    /// P(a + b·x), expanded exactly; the index is preserved.
    pub fn compose_linear(&self, a: &Rational, b: &Rational) -> Polynomial {
        let mut acc: Vec<Rational> = Vec::new();
        for c in self.coeffs.iter().rev() {
            let mut next = vec![Rational::zero(); acc.len() + 1];
            for (i, t) in acc.iter().enumerate() {
                next[i] += &(t * a);
                next[i + 1] += &(t * b);
            }
            next[0] += c;
            acc = next;
        }
        Polynomial::new(acc, self.index)
    }

    /// P(x + c) by exact binomial expansion; the index is preserved.
    pub fn shift(&self, c: &Rational) -> Polynomial {
        self.compose_linear(c, &Rational::one())
    }

    /// P(1 - x), the reflection substitution.
    pub fn reflect(&self) -> Polynomial {
        self.compose_linear(&Rational::one(), &-Rational::one())
    }

    /// P(-x).
    pub fn negate_argument(&self) -> Polynomial {
        self.compose_linear(&Rational::zero(), &-Rational::one())
    }

    /// P(q(x)). The caller supplies the index of the result.
    pub fn compose(&self, q: &Polynomial, index: usize) -> Polynomial {
        let mut acc = Polynomial::zero(0);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Polynomial::constant(c.clone());
        }
        acc.with_index(index)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|t| t * c).collect(), self.index)
    }

    pub fn pow(&self, e: usize) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn check_within_index(&self) -> Result<()> {
        if let Some(pos) = self.coeffs.iter().rposition(|c| !c.is_zero()) {
            if pos > self.index {
                return Err(Error::CoefficientAboveIndex {
                    pos,
                    index: self.index,
                });
            }
        }
        Ok(())
    }

    /// The reciprocal (star) polynomial x^n·P(1/x): the coefficient window
    /// 0..=n reversed, same index. Rejects coefficients above the index.
    pub fn reciprocal_star(&self) -> Result<Polynomial> {
        self.check_within_index()?;
        let mut rev = self.window();
        rev.reverse();
        Ok(Polynomial::new(rev, self.index))
    }

    /// Classify the coefficient symmetry c_v vs c_{n-v} over the index
    /// window. The zero polynomial classifies as palindromic.
    pub fn palindrome_class(&self) -> Result<PalindromeClass> {
        self.check_within_index()?;
        let w = self.window();
        let n = self.index;
        let mut pal = true;
        let mut anti = true;
        let mut quasi = true;
        for v in 0..=n / 2 {
            let a = &w[v];
            let b = &w[n - v];
            pal &= a == b;
            anti &= *a == -b;
            quasi &= a.abs() == b.abs();
        }
        Ok(if pal {
            PalindromeClass::Palindromic
        } else if anti {
            PalindromeClass::AntiPalindromic
        } else if quasi {
            PalindromeClass::QuasiPalindromic
        } else {
            PalindromeClass::None
        })
    }

    /// Whether c_v = -c_{n-v} holds for every v (true for the zero
    /// polynomial, which the exclusive classifier reports as palindromic).
    pub fn is_anti_palindromic_relation(&self) -> Result<bool> {
        self.check_within_index()?;
        let w = self.window();
        let n = self.index;
        Ok((0..=n / 2).all(|v| w[v] == -&w[n - v]))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "index": self.index,
            "coeffs": self.coeffs.iter().map(format_rational).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Polynomial> {
        let bad = |m: &str| Error::InvalidArgument(format!("polynomial JSON: {m}"));
        let index = v
            .get("index")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing index"))? as usize;
        let coeffs = v
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing coeffs"))?
            .iter()
            .map(|c| c.as_str().ok_or_else(|| bad("coefficient must be a string")))
            .map(|c| c.and_then(parse_rational))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::new(coeffs, index))
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Rational::zero();
        (0..n).all(|i| {
            self.coeffs.get(i).unwrap_or(&zero) == other.coeffs.get(i).unwrap_or(&zero)
        })
    }
}

impl Eq for Polynomial {}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| &self.coeff(i) + &rhs.coeff(i))
            .collect();
        Polynomial::new(coeffs, self.index.max(rhs.index))
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| &self.coeff(i) - &rhs.coeff(i))
            .collect();
        Polynomial::new(coeffs, self.index.max(rhs.index))
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect(), self.index)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        // the index of a product is the sum of the indices
        let index = self.index + rhs.index;
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Polynomial::zero(index);
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        Polynomial::new(coeffs, index)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
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
            let unit = mag.is_one() && i > 0;
            if !unit {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}x", if unit { "" } else { "*" })?,
                _ => write!(f, "{}x^{}", if unit { "" } else { "*" }, i)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
