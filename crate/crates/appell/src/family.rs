//! Appell polynomial families generated by a coefficient sequence α_0, α_1, …
//! with A_n(x) = Σ C(n,v) α_{n-v} x^v, together with the reciprocal variants
//! A_R, A_G, A_S, the reflection-relation checker, and the exact derivative
//! formulas for the Laurent forms.

use std::fmt;
use std::path::Path;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Deserialize;

use crate::arith::{
    binom_rat, factorial_rat, parse_rational, rat, rat_big, rat_i, Rational,
};
use crate::error::{Error, Result};
use crate::poly::{times_binomial_power, LaurentPolynomial, PolyOrSeries, Polynomial};
use crate::report::Report;

#[derive(Clone, Debug)]
enum AlphaSource {
    Bernoulli,
    Euler,
    Explicit(Vec<Rational>),
}

/// A family handle: a memoized coefficient provider plus a flag recording
/// whether the family asserts the reflection relation A_n(1-x) = (-1)^n A_n(x).
///
/// Concurrent `alpha` calls are safe: the memo is guarded by a mutex and the
/// values are deterministic, so readers always observe identical results.
#[derive(Debug)]
pub struct AppellFamily {
    name: String,
    asserts_reflection: bool,
    source: AlphaSource,
    /// Bernoulli numbers B_0, B_1, … shared by both built-in sources.
    bernoulli_memo: Mutex<Vec<Rational>>,
}

/// On-disk description of a custom family:
/// `{"name": str, "reflection": bool, "alpha": ["p/q", …]}`.
#[derive(Debug, Deserialize)]
struct FamilyFile {
    name: String,
    reflection: bool,
    alpha: Vec<String>,
}

impl AppellFamily {
    /// Bernoulli numbers via the defining recurrence
    /// Σ_{k=0}^{n} C(n+1, k) B_k = 0 with B_0 = 1 (so B_1 = -1/2).
    pub fn bernoulli() -> Self {
        AppellFamily {
            name: "bernoulli".into(),
            asserts_reflection: true,
            source: AlphaSource::Bernoulli,
            bernoulli_memo: Mutex::new(vec![Rational::one()]),
        }
    }

    /// α_n = E_n(0) = G_{n+1}/(n+1) with the Genocchi numbers
    /// G_n = 2(1 - 2^n) B_n.
    pub fn euler() -> Self {
        AppellFamily {
            name: "euler".into(),
            asserts_reflection: true,
            source: AlphaSource::Euler,
            bernoulli_memo: Mutex::new(vec![Rational::one()]),
        }
    }

    /// A finite user-supplied coefficient list. Requests beyond the list are
    /// out-of-range errors.
    pub fn from_alphas(
        name: impl Into<String>,
        alphas: Vec<Rational>,
        asserts_reflection: bool,
    ) -> Self {
        AppellFamily {
            name: name.into(),
            asserts_reflection,
            source: AlphaSource::Explicit(alphas),
            bernoulli_memo: Mutex::new(vec![Rational::one()]),
        }
    }

    /// Resolve "bernoulli", "euler", or a path to a family JSON file.
    pub fn resolve(spec: &str) -> Result<Self> {
        match spec {
            "bernoulli" => Ok(AppellFamily::bernoulli()),
            "euler" => Ok(AppellFamily::euler()),
            path => AppellFamily::from_file(Path::new(path)),
        }
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let err = |reason: String| Error::FamilyFile {
            path: path.display().to_string(),
            reason,
        };
        let text = std::fs::read_to_string(path).map_err(|e| err(e.to_string()))?;
        let file: FamilyFile =
            serde_json::from_str(&text).map_err(|e| err(e.to_string()))?;
        let alphas = file
            .alpha
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| err(e.to_string()))?;
        Ok(AppellFamily::from_alphas(file.name, alphas, file.reflection))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn asserts_reflection(&self) -> bool {
        self.asserts_reflection
    }

    /// Number of available coefficients for finite families; None when the
    /// family is generated by a recurrence.
    pub fn alpha_limit(&self) -> Option<usize> {
        match &self.source {
            AlphaSource::Explicit(list) => Some(list.len()),
            _ => None,
        }
    }

    fn bernoulli_number(&self, n: usize) -> Rational {
        let mut memo = self.bernoulli_memo.lock().expect("memo poisoned");
        while memo.len() <= n {
            let m = memo.len(); // computing B_m
            let mut acc = Rational::zero();
            for (k, b) in memo.iter().enumerate() {
                acc += &(&binom_rat(m as i64 + 1, k as i64) * b);
            }
            let b_m = -acc / rat_i(m as i64 + 1);
            memo.push(b_m);
        }
        memo[n].clone()
    }

    /// The n-th coefficient α_n.
    pub fn alpha(&self, n: usize) -> Result<Rational> {
        match &self.source {
            AlphaSource::Bernoulli => Ok(self.bernoulli_number(n)),
            AlphaSource::Euler => {
                // G_{n+1}/(n+1) with G_m = 2(1 - 2^m) B_m
                let b = self.bernoulli_number(n + 1);
                let g = (rat_i(1) - rat_big(BigInt::one() << (n + 1))) * rat_i(2) * b;
                Ok(g / rat_i(n as i64 + 1))
            }
            AlphaSource::Explicit(list) => {
                list.get(n).cloned().ok_or_else(|| Error::AlphaOutOfRange {
                    family: self.name.clone(),
                    n,
                    len: list.len(),
                })
            }
        }
    }

    /// A_n(x) = Σ_{v=0}^{n} C(n,v) α_{n-v} x^v, index n.
    pub fn appell(&self, n: usize) -> Result<Polynomial> {
        let coeffs = (0..=n)
            .map(|v| Ok(binom_rat(n as i64, v as i64) * self.alpha(n - v)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::new(coeffs, n))
    }

    /// A_R,n(x) = Σ_{v=0}^{n} C(n,v) α_v x^v, the star of A_n at index n.
    pub fn reciprocal(&self, n: usize) -> Result<Polynomial> {
        let coeffs = (0..=n)
            .map(|v| Ok(binom_rat(n as i64, v as i64) * self.alpha(v)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::new(coeffs, n))
    }

    /// A_G,n,k(x) = x^{k-n}·A_R,n(x), a Laurent polynomial when k < n.
    pub fn generalized_reciprocal(&self, n: usize, k: i64) -> Result<LaurentPolynomial> {
        Ok(LaurentPolynomial::from_poly(&self.reciprocal(n)?).mul_xpow(k - n as i64))
    }

    /// The ℓ-th derivative of A_G,n,k in closed form:
    /// ℓ! Σ_{v=0}^{ℓ} (-1)^v C(k-v, k-ℓ) C(n,v) A_G,{n-v},{k-ℓ-v}(x).
    pub fn ag_derivative(&self, n: usize, k: i64, ell: usize) -> Result<LaurentPolynomial> {
        if (ell as i64) > k || ell > n {
            return Err(Error::DerivativeOrder { n, k, ell });
        }
        let ell_i = ell as i64;
        let mut out = LaurentPolynomial::zero();
        for v in 0..=ell {
            let v_i = v as i64;
            let mut c = factorial_rat(ell as u32)
                * binom_rat(k - v_i, k - ell_i)
                * binom_rat(n as i64, v_i);
            if v % 2 == 1 {
                c = -c;
            }
            let term = self
                .generalized_reciprocal(n - v, k - ell_i - v_i)?
                .scale(&c);
            out = &out + &term;
        }
        Ok(out)
    }

    /// A_G,n,k^{(ℓ)}(1) under the reflection relation:
    /// (-1)^n ℓ! Σ_{v=0}^{ℓ} C(k-v, k-ℓ) C(n,v) α_{n-v}.
    pub fn ag_derivative_at_one(&self, n: usize, k: i64, ell: usize) -> Result<Rational> {
        if !self.asserts_reflection {
            return Err(Error::ReflectionNotAsserted(self.name.clone()));
        }
        if (ell as i64) > k || ell > n {
            return Err(Error::DerivativeOrder { n, k, ell });
        }
        let ell_i = ell as i64;
        let mut acc = Rational::zero();
        for v in 0..=ell {
            let v_i = v as i64;
            acc += &(binom_rat(k - v_i, k - ell_i)
                * binom_rat(n as i64, v_i)
                * self.alpha(n - v)?);
        }
        acc *= factorial_rat(ell as u32);
        if n % 2 == 1 {
            acc = -acc;
        }
        Ok(acc)
    }

    /// A_R,n^{(ℓ)}(1) under the reflection relation (the k = n case).
    pub fn ar_derivative_at_one(&self, n: usize, ell: usize) -> Result<Rational> {
        self.ag_derivative_at_one(n, n as i64, ell)
    }

    /// σ_{n,k} = Σ_{v=k}^{n} C(n,v) C(v,k) α_v for 0 <= k <= n.
    pub fn sigma(&self, n: usize) -> Result<SigmaTable> {
        let mut sigma = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = Rational::zero();
            for v in k..=n {
                acc += &(binom_rat(n as i64, v as i64)
                    * binom_rat(v as i64, k as i64)
                    * self.alpha(v)?);
            }
            sigma.push(acc);
        }
        Ok(SigmaTable { n, sigma })
    }

    /// A_S,n(x) = Σ σ_{n,k} x^k, computed from the defining sums and
    /// cross-checked against the independent route A_R,n(x+1).
    pub fn as_poly(&self, n: usize) -> Result<(Polynomial, SigmaTable)> {
        let table = self.sigma(n)?;
        let poly = Polynomial::new(table.sigma.clone(), n);
        let shifted = self.reciprocal(n)?.shift(&Rational::one());
        if poly != shifted {
            return Err(Error::CrossCheck(format!(
                "A_S,{n} sigma sums disagree with A_R,{n}(x+1) for family `{}`",
                self.name
            )));
        }
        Ok((poly, table))
    }

    /// A_S,n,k(x) = A_S,n(x)·(x+1)^{k-n}: an exact polynomial with index k
    /// when k >= n, otherwise a series truncated at `order`.
    pub fn as_nk(&self, n: usize, k: i64, order: Option<usize>) -> Result<PolyOrSeries> {
        let (as_n, _) = self.as_poly(n)?;
        let c = k - n as i64;
        if c >= 0 {
            match times_binomial_power(&as_n, c, 0) {
                PolyOrSeries::Poly(p) => Ok(PolyOrSeries::Poly(p)),
                PolyOrSeries::Series(_) => unreachable!("c >= 0 yields a polynomial"),
            }
        } else {
            let order = order.ok_or(Error::OrderRequired { k, n })?;
            Ok(times_binomial_power(&as_n, c, order))
        }
    }

    /// Verify the reflection relation (R) and its equivalent forms
    /// (R2)–(R5) for every n <= n_max, plus the claim that (R), (R2) and
    /// (R3) hold together or fail together over the range.
    pub fn check_reflection(&self, n_max: usize) -> Result<Report> {
        if n_max < 1 {
            return Err(Error::InvalidArgument(
                "check_reflection requires n_max >= 1".into(),
            ));
        }
        let mut rep = Report::new("reflection");
        let p = |n: usize| format!("family={} n={}", self.name, n);
        let (mut all_r, mut all_r2, mut all_r3) = (true, true, true);
        for n in 0..=n_max {
            let a_n = self.appell(n)?;
            let alpha_n = self.alpha(n)?;
            let sign = if n % 2 == 1 { rat_i(-1) } else { rat_i(1) };

            // (R) A_n(1-x) = (-1)^n A_n(x)
            let lhs = a_n.reflect();
            let rhs = a_n.scale(&sign);
            let pass = lhs == rhs;
            all_r &= pass;
            rep.push(
                "reflection.R",
                p(n),
                pass,
                if pass { String::new() } else { format!("A_{n}(1-x) = {lhs}, (-1)^{n} A_{n}(x) = {rhs}") },
            );

            // (R2) A_n(1) = (-1)^n α_n
            let v = a_n.eval(&Rational::one());
            let want = &sign * &alpha_n;
            let pass = v == want;
            all_r2 &= pass;
            rep.push(
                "reflection.R2",
                p(n),
                pass,
                if pass { String::new() } else { format!("A_{n}(1) = {v}, expected {want}") },
            );

            // (R3) A_n(1/2) = 0 for odd n
            if n % 2 == 1 {
                let v = a_n.eval(&rat(1, 2));
                let pass = v.is_zero();
                all_r3 &= pass;
                rep.push(
                    "reflection.R3",
                    p(n),
                    pass,
                    if pass { String::new() } else { format!("A_{n}(1/2) = {v}") },
                );
            }

            // (R5) A_R,n(1) = (-1)^n α_n, and A_R,n(2) = 0 for odd n
            let ar = self.reciprocal(n)?;
            let v = ar.eval(&Rational::one());
            let pass = v == want;
            rep.push(
                "reflection.R5",
                format!("{} part=value_at_1", p(n)),
                pass,
                if pass { String::new() } else { format!("A_R,{n}(1) = {v}, expected {want}") },
            );
            if n % 2 == 1 {
                let v = ar.eval(&rat_i(2));
                let pass = v.is_zero();
                rep.push(
                    "reflection.R5",
                    format!("{} part=value_at_2", p(n)),
                    pass,
                    if pass { String::new() } else { format!("A_R,{n}(2) = {v}") },
                );
            }
        }

        // (R4) α_1 = -α_0/2
        let a0 = self.alpha(0)?;
        let a1 = self.alpha(1)?;
        let pass = a1 == -&a0 / rat_i(2);
        rep.push(
            "reflection.R4",
            format!("family={}", self.name),
            pass,
            if pass { String::new() } else { format!("alpha_1 = {a1}, expected {}", -&a0 / rat_i(2)) },
        );

        // (R), (R2), (R3) are equivalent over the whole range
        let equiv = all_r == all_r2 && all_r2 == all_r3;
        rep.push(
            "reflection.equivalence",
            format!("family={} n_max={}", self.name, n_max),
            equiv,
            if equiv {
                String::new()
            } else {
                format!("R={all_r} R2={all_r2} R3={all_r3}")
            },
        );
        Ok(rep)
    }
}

impl fmt::Display for AppellFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// The coefficient row σ_{n,0} … σ_{n,n} of A_S,n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaTable {
    pub n: usize,
    pub sigma: Vec<Rational>,
}

/// B_n as a standalone value (fresh recurrence run; families memoize).
pub fn bernoulli_number(n: usize) -> Rational {
    AppellFamily::bernoulli()
        .alpha(n)
        .expect("built-in coefficients are total")
}

/// Genocchi number G_n = 2(1 - 2^n) B_n.
pub fn genocchi_number(n: usize) -> Rational {
    (rat_i(1) - rat_big(BigInt::one() << n)) * rat_i(2) * bernoulli_number(n)
}

/// Euler number E_n = E_R,n(2) = 2^n E_n(1/2).
pub fn euler_number(n: usize) -> Rational {
    AppellFamily::euler()
        .reciprocal(n)
        .expect("built-in coefficients are total")
        .eval(&rat_i(2))
}
