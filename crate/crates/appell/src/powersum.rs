//! Power sums S_n(m) = Σ_{v=0}^{m-1} v^n by three exact routes: direct
//! summation, the Bernoulli closed form, and — for odd n — the classical
//! Faulhaber polynomial in y = C(m, 2) obtained by integrating F_n(u).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{binom_rat, rat_big, rat_i, rat_pow, Rational};
use crate::error::{Error, Result};
use crate::family::AppellFamily;
use crate::faulhaber::{decompose, Route};

/// Direct summation with the convention 0^0 = 1, so S_0(m) = m.
pub fn power_sum_direct(n: u32, m: u32) -> Rational {
    let mut acc = BigInt::zero();
    for v in 0..m {
        if v == 0 {
            if n == 0 {
                acc += BigInt::one();
            }
        } else {
            acc += BigInt::from(v).pow(n);
        }
    }
    rat_big(acc)
}

/// S_n(m) = (B_{n+1}(m) - B_{n+1})/(n+1).
pub fn power_sum_bernoulli(n: u32, m: u32) -> Rational {
    let f = AppellFamily::bernoulli();
    let b = f.appell(n as usize + 1).expect("built-in coefficients are total");
    let b_next = f.alpha(n as usize + 1).expect("built-in coefficients are total");
    (b.eval(&rat_i(m as i64)) - b_next) / rat_i(n as i64 + 1)
}

/// The classical Faulhaber polynomial FF_n(y) for odd n, with
/// S_n(m) = FF_n(y) at y = C(m, 2). No constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalFaulhaber {
    pub n: u32,
    /// Coefficients of y^0, y^1, …; the constant entry is always zero.
    pub coeffs: Vec<Rational>,
}

impl ClassicalFaulhaber {
    pub fn eval(&self, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * y) + c;
        }
        acc
    }
}

/// Integrate the Bernoulli-family F_n(u) from 0 to 2y:
/// FF_n(y) = Σ_k f_{n,k}·(2y)^{k+1}/(k+1). Odd n only.
pub fn classical_faulhaber(n: u32) -> Result<ClassicalFaulhaber> {
    if n % 2 == 0 {
        return Err(Error::EvenPowerSum);
    }
    let f = AppellFamily::bernoulli();
    let fp = decompose(&f, n as usize, Route::Subst)?;
    let mut coeffs = vec![Rational::zero(); fp.d() + 2];
    for k in 0..=fp.d() {
        coeffs[k + 1] =
            fp.coeff(k) * rat_pow(&rat_i(2), k as i64 + 1) / rat_i(k as i64 + 1);
    }
    Ok(ClassicalFaulhaber { n, coeffs })
}

/// S_n(m) through FF_n(y) at y = C(m, 2). Odd n only.
pub fn power_sum_faulhaber(n: u32, m: u32) -> Result<Rational> {
    let ff = classical_faulhaber(n)?;
    Ok(ff.eval(&binom_rat(m as i64, 2)))
}
