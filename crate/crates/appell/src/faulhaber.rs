//! Faulhaber-type polynomials F_n(u) under the quadratic substitution
//! u = x(x-1): for a family satisfying the reflection relation,
//! A_n(x) = (u')^{δ_n} F_n(u) with u' = 2x - 1 and δ_n = n mod 2.
//!
//! The coefficients f_{n,k} are computed by three independent routes — the
//! half-shift substitution, the closed forms in reciprocal-polynomial values,
//! and the coefficient recurrences — which must agree exactly.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::arith::{
    binom_rat, factorial_rat, falling_factorial, fibonacci_rat, rat_big, rat_i, rat_pow,
    QuadRational, Rational,
};
use crate::error::{Error, Result};
use crate::family::AppellFamily;
use crate::poly::Polynomial;
use crate::report::Report;

/// d_n = floor(n/2), the number of stored coefficients minus one.
pub fn d_n(n: usize) -> usize {
    n / 2
}

/// δ_n = n mod 2.
pub fn delta_n(n: usize) -> usize {
    n % 2
}

/// F_n(u) = Σ_{k=0}^{d_n} f_{n,k} u^k with the parity tag δ_n. Entries
/// beyond d_n are identically zero and are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaulhaberPoly {
    n: usize,
    fp: Vec<Rational>,
}

impl FaulhaberPoly {
    fn new(n: usize, fp: Vec<Rational>) -> Self {
        debug_assert_eq!(fp.len(), d_n(n) + 1);
        FaulhaberPoly { n, fp }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn delta(&self) -> usize {
        delta_n(self.n)
    }

    pub fn d(&self) -> usize {
        d_n(self.n)
    }

    /// f_{n,k}; zero beyond d_n.
    pub fn coeff(&self, k: usize) -> Rational {
        self.fp.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.fp
    }

    /// h_{n,k} = k!·f_{n,k}; zero beyond d_n.
    pub fn fh(&self, k: usize) -> Rational {
        self.coeff(k) * factorial_rat(k as u32)
    }

    pub fn fh_vec(&self) -> Vec<Rational> {
        (0..self.fp.len()).map(|k| self.fh(k)).collect()
    }

    /// F_n(1) = Σ_k f_{n,k}.
    pub fn value_at_one(&self) -> Rational {
        self.fp.iter().fold(Rational::zero(), |a, c| &a + c)
    }

    /// F_n as a dense polynomial in u (index d_n).
    pub fn to_u_poly(&self) -> Polynomial {
        Polynomial::new(self.fp.clone(), self.d())
    }

    /// Substitute u := x² - x and multiply by (2x-1)^{δ_n}; the independent
    /// reconstruction of A_n(x), returned with index n.
    pub fn reconstruct(&self) -> Polynomial {
        let u = Polynomial::from_i64s(&[0, -1, 1], 2);
        let mut p = self.to_u_poly().compose(&u, self.n);
        if self.delta() == 1 {
            p = &p * &Polynomial::from_i64s(&[-1, 2], 1);
        }
        p.with_index(self.n)
    }
}

impl fmt::Display for FaulhaberPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let in_u = Polynomial::new(self.fp.clone(), self.d()).to_string();
        write!(f, "F_{}(u) = {}", self.n, in_u.replace('x', "u"))
    }
}

/// Computation route for the coefficients f_{n,k}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Half-shift expansion: f_{n,k} = 2^{2k-n} Σ C(n,2v) C(d_n-v, k) A_S,2v(1).
    Subst,
    /// Closed form in α (odd n), lifted to even n by f_{n,k} = (n/k)·f_{n-1,k-1}.
    Reciprocal,
    /// Seeded h_{n,k} recurrence over the odd rows, even rows from the row below.
    Recurrence,
}

impl FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "subst" => Ok(Route::Subst),
            "reciprocal" => Ok(Route::Reciprocal),
            "recurrence" => Ok(Route::Recurrence),
            other => Err(Error::InvalidArgument(format!("unknown route `{other}`"))),
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Subst => "subst",
            Route::Reciprocal => "reciprocal",
            Route::Recurrence => "recurrence",
        })
    }
}

fn require_reflection_at(family: &AppellFamily, n: usize) -> Result<()> {
    if !family.asserts_reflection() {
        return Err(Error::ReflectionNotAsserted(family.name().to_string()));
    }
    let a_n = family.appell(n)?;
    let lhs = a_n.reflect();
    let rhs = if n % 2 == 1 { -&a_n } else { a_n.clone() };
    if lhs != rhs {
        return Err(Error::ReflectionViolated {
            family: family.name().to_string(),
            n,
            identity: "A_n(1-x) = (-1)^n A_n(x)".into(),
        });
    }
    Ok(())
}

/// The even-subscript values A_S,2v(1) = A_R,2v(2) = 2^{2v}·A_2v(1/2) for
/// 0 <= v <= d_n, with the two expansions of A_n they generate — the
/// (x - 1/2)-power form and the (4u+1)-power form — verified against A_n(x)
/// in the monomial basis.
pub fn half_shift_expand(family: &AppellFamily, n: usize) -> Result<Vec<Rational>> {
    require_reflection_at(family, n)?;
    let d = d_n(n);
    let delta = delta_n(n);

    // three expressions of the same value, asserted equal
    let mut values = Vec::with_capacity(d + 1);
    for v in 0..=d {
        let via_as = family.as_poly(2 * v)?.0.eval(&Rational::one());
        let via_ar = family.reciprocal(2 * v)?.eval(&rat_i(2));
        let via_half = rat_pow(&rat_i(2), 2 * v as i64)
            * family.appell(2 * v)?.eval(&crate::arith::rat(1, 2));
        if via_as != via_ar || via_ar != via_half {
            return Err(Error::CrossCheck(format!(
                "A_S,{m}(1), A_R,{m}(2), 2^{m}·A_{m}(1/2) disagree for family `{name}`",
                m = 2 * v,
                name = family.name()
            )));
        }
        values.push(via_as);
    }

    let a_n = family.appell(n)?;

    // expansion in powers of (x - 1/2), even subscripts only
    let x_minus_half = Polynomial::new(vec![crate::arith::rat(-1, 2), Rational::one()], 1);
    let mut half_form = Polynomial::zero(n);
    for v in (0..=n).step_by(2) {
        let a_v_half = family.appell(v)?.eval(&crate::arith::rat(1, 2));
        let term = x_minus_half
            .pow(n - v)
            .scale(&(binom_rat(n as i64, v as i64) * a_v_half));
        half_form = &half_form + &term;
    }
    if half_form != a_n {
        return Err(Error::CrossCheck(format!(
            "(x-1/2)-power expansion of A_{n} disagrees for family `{}`",
            family.name()
        )));
    }

    // expansion in powers of 4u+1 where u = x² - x, with a u' factor when n is odd
    let four_u_plus_one = Polynomial::from_i64s(&[1, -4, 4], 2);
    let mut subst_form = Polynomial::zero(n);
    for (v, s) in values.iter().enumerate() {
        let term = four_u_plus_one
            .pow(d - v)
            .scale(&(binom_rat(n as i64, 2 * v as i64) * s));
        subst_form = &subst_form + &term;
    }
    subst_form = subst_form.scale(&rat_pow(&rat_i(2), -(n as i64)));
    if delta == 1 {
        subst_form = &subst_form * &Polynomial::from_i64s(&[-1, 2], 1);
    }
    if subst_form.with_index(n) != a_n {
        return Err(Error::CrossCheck(format!(
            "(4u+1)-power expansion of A_{n} disagrees for family `{}`",
            family.name()
        )));
    }

    Ok(values)
}

fn decompose_subst(family: &AppellFamily, n: usize) -> Result<Vec<Rational>> {
    let d = d_n(n);
    let mut s = Vec::with_capacity(d + 1);
    for v in 0..=d {
        s.push(family.reciprocal(2 * v)?.eval(&rat_i(2)));
    }
    let mut fp = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let mut acc = Rational::zero();
        for v in 0..=d - k {
            acc += &(&(binom_rat(n as i64, 2 * v as i64)
                * binom_rat((d - v) as i64, k as i64))
                * &s[v]);
        }
        fp.push(acc * rat_pow(&rat_i(2), 2 * k as i64 - n as i64));
    }
    Ok(fp)
}

fn decompose_reciprocal(family: &AppellFamily, n: usize) -> Result<Vec<Rational>> {
    let d = d_n(n);
    if n % 2 == 1 {
        // f_{n,k} = (-1)^{k+1} Σ_{v=0}^{k} C(2k-v, k) C(n,v) α_{n-v}
        let mut fp = Vec::with_capacity(d + 1);
        for k in 0..=d {
            let mut acc = Rational::zero();
            for v in 0..=k {
                acc += &(binom_rat(2 * k as i64 - v as i64, k as i64)
                    * binom_rat(n as i64, v as i64)
                    * family.alpha(n - v)?);
            }
            if k % 2 == 0 {
                acc = -acc;
            }
            fp.push(acc);
        }
        Ok(fp)
    } else if n == 0 {
        Ok(vec![family.alpha(0)?])
    } else {
        // even n: constant term α_n, leading coefficient α_0, and the
        // interior lifted from the odd row below by f_{n,k} = (n/k) f_{n-1,k-1}
        let prev = decompose_reciprocal(family, n - 1)?;
        let mut fp = Vec::with_capacity(d + 1);
        fp.push(family.alpha(n)?);
        for k in 1..d {
            fp.push(&rat_i(n as i64) / &rat_i(k as i64) * &prev[k - 1]);
        }
        fp.push(family.alpha(0)?);
        Ok(fp)
    }
}

fn decompose_recurrence(family: &AppellFamily, n: usize) -> Result<Vec<Rational>> {
    if n == 0 {
        return Ok(vec![family.alpha(0)?]);
    }
    let n_odd = if n % 2 == 1 { n } else { n - 1 };

    // odd rows m = 1, 3, …, n_odd; rows[i] holds h_{2i+1, ·}
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for m in (1..=n_odd).step_by(2) {
        let d = d_n(m);
        let mut cur = Vec::with_capacity(d + 1);
        cur.push(-family.alpha(m)?); // h_{m,0} = (-1)^m α_m, m odd
        if d >= 1 {
            // h_{m,1} = (-1)^{m+1}(2 α_m + m α_{m-1}), m odd
            cur.push(
                rat_i(2) * family.alpha(m)? + rat_i(m as i64) * family.alpha(m - 1)?,
            );
            // h_{m,k+2} = -(4k+6) h_{m,k+1} + (m)_2 h_{m-2,k}
            let prev = &rows[rows.len() - 1];
            let m2 = rat_big(falling_factorial(m as i64, 2));
            for k in 0..=d as i64 - 2 {
                let k = k as usize;
                let v = &(-rat_i(4 * k as i64 + 6) * &cur[k + 1]) + &(&m2 * &prev[k]);
                cur.push(v);
            }
        }
        rows.push(cur);
    }

    let h: Vec<Rational> = if n % 2 == 1 {
        rows.pop().expect("odd row computed")
    } else {
        // even n: h_{n,0} = α_n and h_{n,k+1} = n·h_{n-1,k}
        let below = rows.pop().expect("odd row computed");
        let mut cur = Vec::with_capacity(d_n(n) + 1);
        cur.push(family.alpha(n)?);
        for k in 0..=d_n(n - 1) {
            cur.push(rat_i(n as i64) * &below[k]);
        }
        cur
    };

    Ok(h
        .into_iter()
        .enumerate()
        .map(|(k, v)| v / factorial_rat(k as u32))
        .collect())
}

/// Compute F_n by the requested route. Requires the family to assert the
/// reflection relation and verifies it at this n; a violation is reported as
/// an error naming the broken identity.
pub fn decompose(family: &AppellFamily, n: usize, route: Route) -> Result<FaulhaberPoly> {
    require_reflection_at(family, n)?;
    let fp = match route {
        Route::Subst => decompose_subst(family, n)?,
        Route::Reciprocal => decompose_reciprocal(family, n)?,
        Route::Recurrence => decompose_recurrence(family, n)?,
    };
    Ok(FaulhaberPoly::new(n, fp))
}

/// Λ_{n,k}(α) = Σ_{v=0}^{k} C(n,v) (2k-v)_k α_{n-v}. Defined for any
/// coefficient sequence; no reflection hypothesis.
pub fn lambda_sum(family: &AppellFamily, n: usize, k: usize) -> Result<Rational> {
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "lambda_sum requires n >= k >= 0 (got n={n}, k={k})"
        )));
    }
    let mut acc = Rational::zero();
    for v in 0..=k {
        acc += &(binom_rat(n as i64, v as i64)
            * rat_big(falling_factorial(2 * k as i64 - v as i64, k as u32))
            * family.alpha(n - v)?);
    }
    Ok(acc)
}

/// Λ_{n,k} for 0 <= k <= n together with a_{n,k} = (-1)^n Λ_{n,k}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaTable {
    pub n: usize,
    pub lambda: Vec<Rational>,
    pub a: Vec<Rational>,
}

pub fn lambda_table(family: &AppellFamily, n: usize) -> Result<LambdaTable> {
    let lambda = (0..=n)
        .map(|k| lambda_sum(family, n, k))
        .collect::<Result<Vec<_>>>()?;
    let a = lambda
        .iter()
        .map(|l| if n % 2 == 1 { -l } else { l.clone() })
        .collect();
    Ok(LambdaTable { n, lambda, a })
}

/// a_{n,k} = A_G,n,2k^{(k)}(1) = (-1)^n k! Σ_{v=0}^{k} C(2k-v,k) C(n,v) α_{n-v},
/// valid under the reflection relation for n >= k >= 0.
pub fn a_nk(family: &AppellFamily, n: usize, k: usize) -> Result<Rational> {
    if !family.asserts_reflection() {
        return Err(Error::ReflectionNotAsserted(family.name().to_string()));
    }
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "a_nk requires n >= k >= 0 (got n={n}, k={k})"
        )));
    }
    let mut acc = Rational::zero();
    for v in 0..=k {
        acc += &(binom_rat(2 * k as i64 - v as i64, k as i64)
            * binom_rat(n as i64, v as i64)
            * family.alpha(n - v)?);
    }
    acc *= factorial_rat(k as u32);
    if n % 2 == 1 {
        acc = -acc;
    }
    Ok(acc)
}

/// Value identities tying F_n(1) to the golden ratio and the Fibonacci
/// numbers: A_n(φ) = (√5)^{δ_n} F_n(1) in Q(√5), and the umbral sum
/// Σ C(n,v) α_{n-v} F_v equals 2 F_n(1) for odd n and 0 for even n.
pub fn value_identities(family: &AppellFamily, n: usize) -> Result<Report> {
    let mut rep = Report::new("faulhaber");
    let params = format!("family={} n={}", family.name(), n);
    let fp = decompose(family, n, Route::Subst)?;
    let fp_one = fp.value_at_one();

    let lhs = family.appell(n)?.eval_quad(&QuadRational::phi());
    let rhs = if fp.delta() == 1 {
        QuadRational::new(Rational::zero(), fp_one.clone())
    } else {
        QuadRational::from_rational(fp_one.clone())
    };
    let pass = lhs == rhs;
    rep.push(
        "faulhaber.phi_value",
        &params,
        pass,
        if pass { String::new() } else { format!("A_{n}(phi) = {lhs}, expected {rhs}") },
    );

    let mut sum = Rational::zero();
    for v in 0..=n {
        sum += &(binom_rat(n as i64, v as i64)
            * family.alpha(n - v)?
            * fibonacci_rat(v as u32));
    }
    let want = if n % 2 == 1 {
        rat_i(2) * &fp_one
    } else {
        Rational::zero()
    };
    let pass = sum == want;
    rep.push(
        "faulhaber.fibonacci_sum",
        &params,
        pass,
        if pass { String::new() } else { format!("umbral Fibonacci sum = {sum}, expected {want}") },
    );
    Ok(rep)
}

/// The symmetry cascade for odd n and (n+1)/2 <= k <= n: A_S,n,2k is an
/// anti-palindromic polynomial, its x^k coefficient vanishes, the k-th
/// derivative of A_G,n,2k at 1 vanishes, f_{n,k} = 0, and the three
/// associated zero-sums hold.
pub fn symmetry_cascade(family: &AppellFamily, n: usize, k: usize) -> Result<Report> {
    if !family.asserts_reflection() {
        return Err(Error::ReflectionNotAsserted(family.name().to_string()));
    }
    if n % 2 == 0 || k < (n + 1) / 2 || k > n {
        return Err(Error::InvalidArgument(format!(
            "symmetry cascade requires odd n and (n+1)/2 <= k <= n (got n={n}, k={k})"
        )));
    }
    let mut rep = Report::new("faulhaber");
    let params = format!("family={} n={} k={}", family.name(), n, k);

    // 2k > n, so A_S,n,2k is a polynomial of index 2k
    let as_poly = family.as_nk(n, 2 * k as i64, None)?;
    let p = as_poly
        .as_poly()
        .expect("2k > n yields a polynomial")
        .clone();
    rep.push(
        "faulhaber.cascade_anti_palindromic",
        &params,
        p.is_anti_palindromic_relation()?,
        String::new(),
    );
    rep.check(
        "faulhaber.cascade_central_coeff",
        &params,
        &p.coeff(k),
        &Rational::zero(),
    );

    let deriv_at_one = family
        .ag_derivative(n, 2 * k as i64, k)?
        .eval(&Rational::one())?;
    rep.check(
        "faulhaber.cascade_ag_deriv",
        &params,
        &deriv_at_one,
        &Rational::zero(),
    );
    rep.check(
        "faulhaber.cascade_a_nk",
        &params,
        &a_nk(family, n, k)?,
        &Rational::zero(),
    );

    // f_{n,k} for k > d_n via the closed form: (-1)^{k+1} Σ C(2k-v,k) C(n,v) α_{n-v}
    let mut sum3 = Rational::zero();
    for v in 0..=k {
        sum3 += &(binom_rat(2 * k as i64 - v as i64, k as i64)
            * binom_rat(n as i64, v as i64)
            * family.alpha(n - v)?);
    }
    let fnk = if k % 2 == 0 { -&sum3 } else { sum3.clone() };
    rep.check("faulhaber.cascade_fp_zero", &params, &fnk, &Rational::zero());

    // zero-sums
    let (_, table) = family.as_poly(n)?;
    let mut sum1 = Rational::zero();
    let mut sum2 = Rational::zero();
    for v in 0..=k {
        let b = binom_rat(2 * k as i64 - n as i64, (k - v) as i64);
        sum1 += &(&b * &table.sigma[v]);
        sum2 += &(&(&b * &binom_rat(n as i64, v as i64))
            * &crate::umbral::alpha_rs(family, n - v, v)?);
    }
    rep.check("faulhaber.cascade_sum_sigma", &params, &sum1, &Rational::zero());
    rep.check("faulhaber.cascade_sum_alpha_rs", &params, &sum2, &Rational::zero());
    rep.check("faulhaber.cascade_sum_alpha", &params, &sum3, &Rational::zero());
    Ok(rep)
}

/// Recurrences tying F_n to F_{n-1} and F_{n-2} (polynomial and coefficient
/// forms), plus the chain-rule derivative identities expanded in x.
pub fn recurrence_check(family: &AppellFamily, n: usize) -> Result<Report> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "recurrence check requires n >= 2".into(),
        ));
    }
    let mut rep = Report::new("faulhaber");
    let params = format!("family={} n={}", family.name(), n);

    let f_n = decompose(family, n, Route::Subst)?;
    let f_n1 = decompose(family, n - 1, Route::Subst)?;
    let f_n2 = decompose(family, n - 2, Route::Subst)?;

    let u_poly = f_n.to_u_poly();
    let d1 = u_poly.derivative(1);
    let d2 = u_poly.derivative(2);
    let four_u_plus_one = Polynomial::from_i64s(&[1, 4], 1);
    let even = n % 2 == 0;

    // n·F_{n-1} and (n)_2·F_{n-2} in terms of F_n derivatives
    let lhs1 = f_n1.to_u_poly().scale(&rat_i(n as i64));
    let rhs1 = if even {
        d1.clone()
    } else {
        &u_poly.scale(&rat_i(2)) + &(&four_u_plus_one * &d1)
    };
    rep.check("faulhaber.recur_first", &params, &lhs1, &rhs1);

    let lhs2 = f_n2
        .to_u_poly()
        .scale(&rat_big(falling_factorial(n as i64, 2)));
    let rhs2 = if even {
        &d1.scale(&rat_i(2)) + &(&four_u_plus_one * &d2)
    } else {
        &d1.scale(&rat_i(6)) + &(&four_u_plus_one * &d2)
    };
    rep.check("faulhaber.recur_second", &params, &lhs2, &rhs2);

    // coefficient recurrences on h_{n,k}
    let mut h_first = true;
    for k in 0..=f_n1.d() {
        let lhs = rat_i(n as i64) * f_n1.fh(k);
        let rhs = if even {
            f_n.fh(k + 1)
        } else {
            rat_i(4 * k as i64 + 2) * f_n.fh(k) + f_n.fh(k + 1)
        };
        h_first &= lhs == rhs;
    }
    rep.push("faulhaber.recur_h_first", &params, h_first, String::new());

    let mut h_second = true;
    for k in 0..=f_n2.d() {
        let lhs = rat_big(falling_factorial(n as i64, 2)) * f_n2.fh(k);
        let rhs = if even {
            rat_i(4 * k as i64 + 2) * f_n.fh(k + 1) + f_n.fh(k + 2)
        } else {
            rat_i(4 * k as i64 + 6) * f_n.fh(k + 1) + f_n.fh(k + 2)
        };
        h_second &= lhs == rhs;
    }
    rep.push("faulhaber.recur_h_second", &params, h_second, String::new());

    // chain-rule identities for d/dx of F(u) and u'·F(u), expanded in x
    let u = Polynomial::from_i64s(&[0, -1, 1], 2);
    let u_prime = Polynomial::from_i64s(&[-1, 2], 1);
    let f_in_x = u_poly.compose(&u, n);
    let d1_in_x = d1.compose(&u, n);
    let d2_in_x = d2.compose(&u, n);
    let q_in_x = four_u_plus_one.compose(&u, n);

    rep.check(
        "faulhaber.deriv_lemma_1",
        &params,
        &f_in_x.derivative(1),
        &(&u_prime * &d1_in_x),
    );
    rep.check(
        "faulhaber.deriv_lemma_2",
        &params,
        &f_in_x.derivative(2),
        &(&d1_in_x.scale(&rat_i(2)) + &(&q_in_x * &d2_in_x)),
    );
    let g = &u_prime * &f_in_x;
    rep.check(
        "faulhaber.deriv_lemma_3",
        &params,
        &g.derivative(1),
        &(&f_in_x.scale(&rat_i(2)) + &(&q_in_x * &d1_in_x)),
    );
    rep.check(
        "faulhaber.deriv_lemma_4",
        &params,
        &g.derivative(2),
        &(&u_prime * &(&d1_in_x.scale(&rat_i(6)) + &(&q_in_x * &d2_in_x))),
    );
    Ok(rep)
}
