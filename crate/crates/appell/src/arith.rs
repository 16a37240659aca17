//! Exact scalar kernels: arbitrary-precision rationals, generalized binomial
//! coefficients, falling factorials, signed Lah numbers, Fibonacci numbers,
//! and arithmetic in Q(√5).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The universal scalar. `num_rational` keeps every value canonical:
/// positive denominator, lowest terms, zero stored as 0/1.
pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat_i(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational n/d. Panics on d = 0; use [`parse_rational`] for untrusted input.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// x^e for any integer e; e < 0 takes the reciprocal (x must be nonzero).
pub fn rat_pow(x: &Rational, e: i64) -> Rational {
    if e < 0 {
        return rat_pow(x, -e).recip();
    }
    let mut acc = Rational::one();
    let mut base = x.clone();
    let mut e = e as u64;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// Parse the text form "p/q" (q > 0 after normalization) or a bare integer "p".
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::InvalidRational(s.to_string());
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), Some(b.trim())),
        None => (t, None),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = match den {
        Some(b) => b.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Canonical text form: "p/q" in lowest terms with q > 0, or "p" when q = 1.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Generalized binomial coefficient with any integer upper index:
/// m(m-1)···(m-j+1)/j! for j >= 0, and 0 for j < 0. Always an integer.
pub fn binomial(m: i64, j: i64) -> BigInt {
    if j < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for t in 0..j {
        acc *= BigInt::from(m - t);
        // exact: the prefix product of a falling factorial over (t+1)! is a binomial
        acc /= BigInt::from(t + 1);
    }
    acc
}

pub fn binom_rat(m: i64, j: i64) -> Rational {
    rat_big(binomial(m, j))
}

/// Falling factorial (n)_k = n(n-1)···(n-k+1); empty product for k = 0.
pub fn falling_factorial(n: i64, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for t in 0..k as i64 {
        acc *= BigInt::from(n - t);
    }
    acc
}

pub fn factorial(k: u32) -> BigInt {
    falling_factorial(k as i64, k)
}

pub fn factorial_rat(k: u32) -> Rational {
    rat_big(factorial(k))
}

/// Signed Lah number L_{n,k} = (-1)^n (n!/k!) C(n-1, k-1) for n >= k >= 1.
pub fn lah(n: u32, k: u32) -> Result<BigInt> {
    if k < 1 || n < k {
        return Err(Error::LahIndex { n, k });
    }
    let mut v = falling_factorial(n as i64, n - k) * binomial(n as i64 - 1, k as i64 - 1);
    if n % 2 == 1 {
        v = -v;
    }
    Ok(v)
}

/// Fibonacci number by the additive recurrence, F_0 = 0, F_1 = 1.
pub fn fibonacci(n: u32) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

pub fn fibonacci_rat(n: u32) -> Rational {
    rat_big(fibonacci(n))
}

/// An element a + b√5 of Q(√5). Supports exactly the operations the golden
/// ratio identities need: +, -, ×, integer powers, and component extraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadRational {
    a: Rational,
    b: Rational,
}

impl QuadRational {
    pub fn new(a: Rational, b: Rational) -> Self {
        QuadRational { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        QuadRational {
            a,
            b: Rational::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn sqrt5() -> Self {
        QuadRational {
            a: Rational::zero(),
            b: Rational::one(),
        }
    }

    /// The golden ratio φ = (1 + √5)/2.
    pub fn phi() -> Self {
        QuadRational {
            a: rat(1, 2),
            b: rat(1, 2),
        }
    }

    /// 1 - φ = (1 - √5)/2, the algebraic conjugate of φ.
    pub fn one_minus_phi() -> Self {
        QuadRational {
            a: rat(1, 2),
            b: rat(-1, 2),
        }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn sqrt5_part(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = QuadRational::from_rational(Rational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl From<Rational> for QuadRational {
    fn from(a: Rational) -> Self {
        QuadRational::from_rational(a)
    }
}

impl Add for &QuadRational {
    type Output = QuadRational;
    fn add(self, rhs: &QuadRational) -> QuadRational {
        QuadRational {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub for &QuadRational {
    type Output = QuadRational;
    fn sub(self, rhs: &QuadRational) -> QuadRational {
        QuadRational {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Mul for &QuadRational {
    type Output = QuadRational;
    fn mul(self, rhs: &QuadRational) -> QuadRational {
        // (a + b√5)(c + d√5) = (ac + 5bd) + (ad + bc)√5
        let five = rat_i(5);
        QuadRational {
            a: &(&self.a * &rhs.a) + &(&(&self.b * &rhs.b) * &five),
            b: &(&self.a * &rhs.b) + &(&self.b * &rhs.a),
        }
    }
}

impl Neg for &QuadRational {
    type Output = QuadRational;
    fn neg(self) -> QuadRational {
        QuadRational {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl fmt::Display for QuadRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}*sqrt(5)", self.b);
        }
        if self.b.is_negative() {
            write!(f, "{} - {}*sqrt(5)", self.a, -&self.b)
        } else {
            write!(f, "{} + {}*sqrt(5)", self.a, self.b)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(4, 0), BigInt::from(1));
        // (-1)(-2)/2 by the falling-factorial definition
        assert_eq!(binomial(-1, 2), BigInt::from(1));
        assert_eq!(binomial(7, -3), BigInt::zero());
        assert_eq!(binomial(-3, 4), BigInt::from(15));
    }

    #[test]
    fn pascal_holds_for_negative_upper_index() {
        for m in -8i64..=8 {
            for j in 1i64..=8 {
                assert_eq!(
                    binomial(m, j),
                    binomial(m - 1, j - 1) + binomial(m - 1, j),
                    "m={m} j={j}"
                );
            }
        }
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(5, 2), BigInt::from(20));
        assert_eq!(falling_factorial(3, 0), BigInt::from(1));
        // the product passes through zero
        assert_eq!(falling_factorial(2, 3), BigInt::zero());
    }

    #[test]
    fn falling_factorial_is_k_factorial_times_binomial() {
        for n in 0i64..=12 {
            for k in 0..=n as u32 {
                assert_eq!(falling_factorial(n, k), factorial(k) * binomial(n, k as i64));
            }
        }
    }

    #[test]
    fn lah_examples() {
        assert_eq!(lah(1, 1).unwrap(), BigInt::from(-1));
        assert_eq!(lah(2, 1).unwrap(), BigInt::from(2));
        assert_eq!(lah(3, 2).unwrap(), BigInt::from(-6));
        assert!(lah(2, 3).is_err());
        assert!(lah(2, 0).is_err());
    }

    #[test]
    fn fibonacci_examples() {
        assert_eq!(fibonacci(0), BigInt::zero());
        assert_eq!(fibonacci(1), BigInt::one());
        assert_eq!(fibonacci(10), BigInt::from(55));
    }

    #[test]
    fn fibonacci_matches_golden_ratio_closed_form() {
        // F_n = (φ^n - (1-φ)^n)/√5: the difference is a pure √5 component
        // whose coefficient is F_n.
        for n in 0..=30u32 {
            let diff = &QuadRational::phi().pow(n) - &QuadRational::one_minus_phi().pow(n);
            assert!(diff.rational_part().is_zero(), "n={n}");
            assert_eq!(diff.sqrt5_part(), &fibonacci_rat(n), "n={n}");
        }
    }

    #[test]
    fn quad_rational_basics() {
        let phi = QuadRational::phi();
        // φ² = φ + 1
        let sq = &phi * &phi;
        let expect = &phi + &QuadRational::from_rational(rat_i(1));
        assert_eq!(sq, expect);
        assert_eq!(&QuadRational::sqrt5() * &QuadRational::sqrt5(),
                   QuadRational::from_rational(rat_i(5)));
    }

    #[test]
    fn rational_text_forms() {
        assert_eq!(format_rational(&rat(-4, 6)), "-2/3");
        assert_eq!(format_rational(&rat_i(7)), "7");
        assert_eq!(parse_rational("3/9").unwrap(), rat(1, 3));
        assert_eq!(parse_rational("-5").unwrap(), rat_i(-5));
        assert_eq!(parse_rational(" 1/-2 ").unwrap(), rat(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn rat_pow_handles_negative_exponents() {
        assert_eq!(rat_pow(&rat_i(2), 10), rat_i(1024));
        assert_eq!(rat_pow(&rat_i(2), -3), rat(1, 8));
        assert_eq!(rat_pow(&rat(-3, 2), 2), rat(9, 4));
        assert_eq!(rat_pow(&rat(5, 7), 0), rat_i(1));
    }
}
