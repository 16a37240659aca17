//! The verification driver: runs every identity check of the library over a
//! configurable depth and collects one pass/fail case per (identity,
//! parameters) pair. Random spot checks (translation at random y, bivariate
//! reciprocity at random points) draw from a seeded generator, so a report
//! is deterministic for fixed inputs and seed.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{
    binom_rat, factorial_rat, falling_factorial, lah, rat, rat_big, rat_i, rat_pow, Rational,
};
use crate::error::{Error, Result};
use crate::family::AppellFamily;
use crate::faulhaber::{
    self, a_nk, d_n, decompose, half_shift_expand, lambda_sum, lambda_table, Route,
};
use crate::poly::{LaurentPolynomial, PalindromeClass, Polynomial};
use crate::powersum;
use crate::report::Report;
use crate::umbral::{self, alpha_rs, ap_rs, ap_rs_bivariate};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Reflection,
    Reciprocal,
    Umbral,
    Faulhaber,
    Powersum,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "reflection" => Ok(Suite::Reflection),
            "reciprocal" => Ok(Suite::Reciprocal),
            "umbral" => Ok(Suite::Umbral),
            "faulhaber" => Ok(Suite::Faulhaber),
            "powersum" => Ok(Suite::Powersum),
            "all" => Ok(Suite::All),
            other => Err(Error::InvalidArgument(format!("unknown suite `{other}`"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Reflection => "reflection",
            Suite::Reciprocal => "reciprocal",
            Suite::Umbral => "umbral",
            Suite::Faulhaber => "faulhaber",
            Suite::Powersum => "powersum",
            Suite::All => "all",
        })
    }
}

/// Highest n for which α_n is available, given a requested depth.
fn depth(family: &AppellFamily, want: usize) -> usize {
    match family.alpha_limit() {
        Some(len) => want.min(len.saturating_sub(1)),
        None => want,
    }
}

fn rand_rat(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-99i64..=99), rng.gen_range(1i64..=20))
}

/// Whether A_n(1-x) = (-1)^n A_n(x) actually holds at this n.
fn reflects_at(family: &AppellFamily, n: usize) -> Result<bool> {
    let a_n = family.appell(n)?;
    let rhs = if n % 2 == 1 { -&a_n } else { a_n.clone() };
    Ok(a_n.reflect() == rhs)
}

/// Run the named suite for every family at depth `max_n`. Cases are sorted
/// by identity id and parameters, so the report is independent of execution
/// order. Identities that require the reflection relation are only scheduled
/// for families asserting it; a family that asserts the relation but breaks
/// it shows up as failing cases, never as a fatal error.
pub fn run(suite: Suite, max_n: usize, families: &[AppellFamily], seed: u64) -> Result<Report> {
    if max_n < 1 {
        return Err(Error::InvalidArgument("max_n must be at least 1".into()));
    }
    let mut rep = Report::new(suite.to_string());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for family in families {
        if matches!(suite, Suite::Reflection | Suite::All) {
            suite_reflection(&mut rep, family, max_n)?;
        }
        if matches!(suite, Suite::Reciprocal | Suite::All) {
            suite_reciprocal(&mut rep, family, max_n, &mut rng)?;
        }
        if matches!(suite, Suite::Umbral | Suite::All) {
            suite_umbral(&mut rep, family, max_n, &mut rng)?;
        }
        if matches!(suite, Suite::Faulhaber | Suite::All) {
            suite_faulhaber(&mut rep, family, max_n, &mut rng)?;
        }
    }
    if matches!(suite, Suite::Powersum | Suite::All) {
        suite_powersum(&mut rep, max_n)?;
    }
    rep.sort_cases();
    Ok(rep)
}

fn suite_reflection(rep: &mut Report, family: &AppellFamily, max_n: usize) -> Result<()> {
    let n_max = depth(family, max_n);
    if n_max < 1 {
        return Ok(());
    }
    rep.merge(family.check_reflection(n_max)?);
    Ok(())
}

fn suite_reciprocal(
    rep: &mut Report,
    family: &AppellFamily,
    max_n: usize,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    let name = family.name().to_string();
    let n_max = depth(family, max_n);
    let p = |n: usize| format!("family={name} n={n}");

    for n in 0..=n_max {
        // A_R,n = star(A_n) and the special values at -1, 0, 1
        let a_n = family.appell(n)?;
        let ar = family.reciprocal(n)?;
        let star = a_n.reciprocal_star()?;
        rep.check("reciprocal.star_agree", p(n), &ar, &star);

        let sign = if n % 2 == 1 { rat_i(-1) } else { rat_i(1) };
        let ok = ar.eval(&rat_i(-1)) == &sign * &a_n.eval(&rat_i(-1))
            && ar.eval(&Rational::zero()) == family.alpha(0)?
            && ar.eval(&Rational::one()) == a_n.eval(&Rational::one());
        rep.push("reciprocal.special_values", p(n), ok, String::new());

        // A_n^{(v)} = (n)_v A_{n-v}
        let mut ok = true;
        let mut detail = String::new();
        for v in 0..=n {
            let lhs = a_n.derivative(v);
            let rhs = family
                .appell(n - v)?
                .scale(&rat_big(falling_factorial(n as i64, v as u32)));
            if lhs != rhs {
                ok = false;
                detail = format!("fails at v={v}");
                break;
            }
        }
        rep.push("reciprocal.ap_deriv", p(n), ok, detail);

        // x·A_R,n' = n (A_R,n - A_R,n-1)
        if n >= 1 {
            let lhs = &Polynomial::x() * &ar.derivative(1);
            let rhs = (&ar - &family.reciprocal(n - 1)?).scale(&rat_i(n as i64));
            rep.check("reciprocal.ar_first_order", p(n), &lhs, &rhs);
        }

        // A_S,n agrees with A_R,n(x+1) (internal cross-check) and σ_{n,0} = A_n(1)
        let (_, table) = family.as_poly(n)?;
        rep.check(
            "reciprocal.as_sigma0",
            p(n),
            &table.sigma[0],
            &a_n.eval(&Rational::one()),
        );
    }

    // translation formula at seeded random y
    for n in 0..=n_max.min(15) {
        let a_n = family.appell(n)?;
        let mut ok = true;
        let mut detail = String::new();
        for _ in 0..5 {
            let y = rand_rat(rng);
            let lhs = a_n.shift(&y);
            let mut rhs = Polynomial::zero(n);
            let mut ypow = Rational::one();
            for v in 0..=n {
                let c = binom_rat(n as i64, v as i64) * &ypow;
                rhs = &rhs + &family.appell(n - v)?.scale(&c);
                ypow *= &y;
            }
            if lhs != rhs {
                ok = false;
                detail = format!("fails at y={y}");
                break;
            }
        }
        rep.push("reciprocal.ap_trans", p(n), ok, detail);
    }

    // composite-derivative expansion of A_n(1/x) through signed Lah numbers
    for n in 1..=n_max.min(10) {
        let inv = LaurentPolynomial::from_poly_inverse_x(&family.appell(n)?);
        let mut ok = true;
        let mut detail = String::new();
        for ell in 1..=n {
            let lhs = inv.derivative_iter(ell);
            let mut rhs = LaurentPolynomial::zero();
            for v in 1..=ell {
                let c = rat_big(lah(ell as u32, v as u32)?)
                    * rat_big(falling_factorial(n as i64, v as u32));
                let term = LaurentPolynomial::from_poly_inverse_x(&family.appell(n - v)?)
                    .mul_xpow(-((ell + v) as i64))
                    .scale(&c);
                rhs = &rhs + &term;
            }
            if lhs != rhs {
                ok = false;
                detail = format!("fails at l={ell}");
                break;
            }
        }
        rep.push("reciprocal.lah_composite", p(n), ok, detail);
    }

    // closed-form derivatives of A_G,n,k against the symbolic ones
    for n in 0..=n_max.min(10) {
        let mut sym_ok = true;
        let mut first_ok = true;
        let mut detail = String::new();
        for k in 0..=n_max.min(10) as i64 {
            let g = family.generalized_reciprocal(n, k)?;
            for ell in 0..=n.min(k.max(0) as usize) {
                let closed = family.ag_derivative(n, k, ell)?;
                if closed != g.derivative_iter(ell) {
                    sym_ok = false;
                    detail = format!("fails at k={k} l={ell}");
                }
            }
            if n >= 1 && k >= 1 {
                let closed = family.ag_derivative(n, k, 1)?;
                let first = &family
                    .generalized_reciprocal(n, k - 1)?
                    .scale(&rat_i(k))
                    - &family
                        .generalized_reciprocal(n - 1, k - 2)?
                        .scale(&rat_i(n as i64));
                first_ok &= closed == first;
            }
        }
        rep.push("reciprocal.ag_deriv_symbolic", p(n), sym_ok, detail);
        rep.push("reciprocal.ag_deriv_first", p(n), first_ok, String::new());

        // values of A_G,n,k at 0: pole for k < n, alpha_0 at k = n, zero beyond
        let pole = if n >= 1 {
            matches!(
                family
                    .generalized_reciprocal(n, n as i64 - 1)?
                    .eval(&Rational::zero()),
                Err(Error::PoleAtZero)
            )
        } else {
            true
        };
        let at_n = family
            .generalized_reciprocal(n, n as i64)?
            .eval(&Rational::zero())?
            == family.alpha(0)?;
        let above = family
            .generalized_reciprocal(n, n as i64 + 2)?
            .eval(&Rational::zero())?
            .is_zero();
        rep.push(
            "reciprocal.ag_at_zero",
            p(n),
            pole && at_n && above,
            String::new(),
        );
    }

    if family.asserts_reflection() {
        for n in 0..=n_max.min(10) {
            // evaluated derivative formulas need the reflection relation
            let mut ok = true;
            let mut detail = String::new();
            for k in 0..=n_max.min(10) as i64 {
                for ell in 0..=n.min(k.max(0) as usize) {
                    let direct = family.ag_derivative_at_one(n, k, ell)?;
                    let via_poly = family.ag_derivative(n, k, ell)?.eval(&Rational::one())?;
                    if direct != via_poly {
                        ok = false;
                        detail = format!("fails at k={k} l={ell}");
                    }
                }
            }
            rep.push("reciprocal.ag_deriv_at_one", p(n), ok, detail);

            let mut ok = true;
            for ell in 0..=n {
                let direct = family.ar_derivative_at_one(n, ell)?;
                let via_poly = family.reciprocal(n)?.derivative(ell).eval(&Rational::one());
                ok &= direct == via_poly;
            }
            rep.push("reciprocal.ar_deriv_at_one", p(n), ok, String::new());
        }

        // palindromic structure of A_S,n by parity
        for n in 0..=n_max.min(25) {
            let (as_n, table) = family.as_poly(n)?;
            let class = as_n.palindrome_class()?;
            let want = if n % 2 == 0 {
                PalindromeClass::Palindromic
            } else {
                PalindromeClass::AntiPalindromic
            };
            let symm = (0..=n).all(|k| {
                let s = &table.sigma[n - k];
                table.sigma[k] == if n % 2 == 1 { -s } else { s.clone() }
            });
            rep.push(
                "reciprocal.as_classify",
                p(n),
                class == want && symm,
                if class == want { String::new() } else { format!("classified {class}") },
            );
        }

        // A_S,n,k coefficients three ways, and the vanishing central
        // coefficient for odd n, even k >= n
        for n in 0..=n_max.min(8) {
            let (_, table) = family.as_poly(n)?;
            let mut ok = true;
            let mut detail = String::new();
            for k in 0..=(n as i64 + 4) {
                for ell in 0..=n.min(k.max(0) as usize) {
                    let order = n + ell;
                    let c = family.as_nk(n, k, Some(order))?.coeff(ell).unwrap();
                    let via_deriv = family.ag_derivative(n, k, ell)?.eval(&Rational::one())?
                        / factorial_rat(ell as u32);
                    let mut via_sigma = Rational::zero();
                    for v in 0..=ell {
                        via_sigma += &(binom_rat(k - n as i64, (ell - v) as i64)
                            * &table.sigma[v]);
                    }
                    if c != via_deriv || c != via_sigma {
                        ok = false;
                        detail = format!("fails at k={k} l={ell}");
                    }
                }
            }
            rep.push("reciprocal.as_nk_coeff", p(n), ok, detail);

            if n % 2 == 1 {
                let mut ok = true;
                for k in ((n + 1)..=(n + 6)).filter(|k| k % 2 == 0) {
                    let poly = family.as_nk(n, k as i64, None)?;
                    ok &= poly.coeff(k / 2).unwrap().is_zero();
                }
                rep.push("reciprocal.as_central_zero", p(n), ok, String::new());
            }
        }
    }
    Ok(())
}

fn suite_umbral(
    rep: &mut Report,
    family: &AppellFamily,
    max_n: usize,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    let name = family.name().to_string();
    // rank/shift sums reach alpha_{r+s}
    let rmax = match family.alpha_limit() {
        Some(len) => max_n.min(len.saturating_sub(1) / 2),
        None => max_n,
    };
    let mut recip = umbral::check_reciprocity(family, rmax, true)?;
    if !family.asserts_reflection() {
        // only the unconditional identity is scheduled for such families
        recip.cases.retain(|c| c.identity_id == "umbral.ap_biv_1");
    }
    rep.merge(recip);

    let ladder_r = rmax.min(8);
    let ladder_step = match family.alpha_limit() {
        Some(len) => 4.min(len.saturating_sub(1).saturating_sub(2 * ladder_r)),
        None => 4,
    };
    if ladder_step >= 1 {
        rep.merge(umbral::check_ladders(family, ladder_r, ladder_step)?);
    }

    for n in 0..=depth(family, max_n.min(12)) {
        rep.merge(umbral::sigma_crosscheck(family, n)?);
    }

    // A_{r,s}(0) = α_{r,s}, and the rank recurrence on a grid that stays
    // within the family's coefficient range (r + s + 1 <= 2·small - 1)
    let small = rmax.min(8);
    let mut values_ok = true;
    let mut recur_ok = true;
    for r in 0..=small {
        for s in 0..=small {
            values_ok &= ap_rs(family, r, s)?.eval(&Rational::zero()) == alpha_rs(family, r, s)?;
            if r < small && s < small {
                recur_ok &= ap_rs(family, r + 1, s)?
                    == &ap_rs(family, r, s)? + &ap_rs(family, r, s + 1)?;
            }
        }
    }
    rep.push(
        "umbral.value_at_zero",
        format!("family={name} rmax={small}"),
        values_ok,
        String::new(),
    );
    rep.push(
        "umbral.rank_recurrence",
        format!("family={name} rmax={small}"),
        recur_ok,
        String::new(),
    );

    // spot evaluation of the unconditional bivariate reciprocity at random points
    let tiny = rmax.min(6);
    let mut ok = true;
    for r in 0..=tiny {
        for s in 0..=tiny.saturating_sub(r) {
            let brs = ap_rs_bivariate(family, r, s)?;
            let bsr = ap_rs_bivariate(family, s, r)?;
            for _ in 0..3 {
                let (x, y) = (rand_rat(rng), rand_rat(rng));
                ok &= brs.eval(&x, &y) == bsr.eval(&(&x + &y), &-&y);
            }
        }
    }
    rep.push(
        "umbral.biv1_random_points",
        format!("family={name} rmax={tiny}"),
        ok,
        String::new(),
    );
    Ok(())
}

fn suite_faulhaber(
    rep: &mut Report,
    family: &AppellFamily,
    max_n: usize,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    let name = family.name().to_string();
    let n_max = depth(family, max_n);
    let p = |n: usize| format!("family={name} n={n}");

    // the Λ recurrence holds for arbitrary coefficients: once with a random
    // sequence, and below with the family's own
    let rand_depth = max_n.min(20);
    let random_alphas: Vec<Rational> = (0..=rand_depth).map(|_| rand_rat(rng)).collect();
    let random_family = AppellFamily::from_alphas("random", random_alphas, false);
    let mut ok = true;
    for n in 2..=rand_depth {
        for k in 0..=n - 2 {
            let lhs =
                rat_big(falling_factorial(n as i64, 2)) * lambda_sum(&random_family, n - 2, k)?;
            let rhs = lambda_sum(&random_family, n, k + 2)?
                - rat_i(4 * k as i64 + 6) * lambda_sum(&random_family, n, k + 1)?;
            ok &= lhs == rhs;
        }
    }
    rep.push(
        "faulhaber.lambda_recurrence_random",
        format!("family={name} n_max={rand_depth}"),
        ok,
        String::new(),
    );

    for n in 2..=n_max {
        let mut ok = true;
        for k in 0..=n - 2 {
            let lhs = rat_big(falling_factorial(n as i64, 2)) * lambda_sum(family, n - 2, k)?;
            let rhs = lambda_sum(family, n, k + 2)?
                - rat_i(4 * k as i64 + 6) * lambda_sum(family, n, k + 1)?;
            ok &= lhs == rhs;
        }
        rep.push("faulhaber.lambda_recurrence", p(n), ok, String::new());
    }

    if !family.asserts_reflection() {
        return Ok(());
    }

    // where the asserted reflection relation actually holds
    let mut reflect_ok = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        reflect_ok.push(reflects_at(family, n)?);
    }
    let ok_up_to = |n: usize| reflect_ok[..=n].iter().all(|&b| b);

    for n in 0..=n_max {
        if !reflect_ok[n] {
            rep.push(
                "faulhaber.routes_agree",
                p(n),
                false,
                format!("reflection relation fails at n={n}: A_n(1-x) != (-1)^n A_n(x)"),
            );
            continue;
        }
        // three routes, identical coefficients; reconstruction; endpoints
        let subst = decompose(family, n, Route::Subst)?;
        let reci = decompose(family, n, Route::Reciprocal)?;
        let recur = decompose(family, n, Route::Recurrence)?;
        rep.push(
            "faulhaber.routes_agree",
            p(n),
            subst == reci && subst == recur,
            String::new(),
        );
        rep.check("faulhaber.reconstruct", p(n), &subst.reconstruct(), &family.appell(n)?);

        let sign = if n % 2 == 1 { rat_i(-1) } else { rat_i(1) };
        let lead = if n % 2 == 1 { rat(1, 2) } else { rat_i(1) };
        let ok = subst.coeff(0) == sign * family.alpha(n)?
            && subst.coeff(subst.d()) == lead * family.alpha(0)?;
        rep.push("faulhaber.endpoints", p(n), ok, String::new());

        // a_{n,k} = (-1)^n Λ_{n,k} = A_G,n,2k^{(k)}(1), and h_{n,k} = (-1)^k a_{n,k} for odd n
        let table = lambda_table(family, n)?;
        let mut bridge = true;
        for k in 0..=n {
            let a = a_nk(family, n, k)?;
            bridge &= a == table.a[k];
            bridge &= a
                == family
                    .ag_derivative(n, 2 * k as i64, k)?
                    .eval(&Rational::one())?;
        }
        rep.push("faulhaber.lambda_bridge", p(n), bridge, String::new());
        if n % 2 == 1 {
            let mut hb = true;
            for k in 0..=subst.d() {
                let a = a_nk(family, n, k)?;
                hb &= subst.fh(k) == if k % 2 == 1 { -a } else { a };
            }
            rep.push("faulhaber.h_bridge", p(n), hb, String::new());
        }
    }

    for n in (0..=n_max.min(25)).filter(|&n| reflect_ok[n]) {
        rep.merge(faulhaber::value_identities(family, n)?);
    }

    for n in (1..=n_max.min(15)).step_by(2).filter(|&n| reflect_ok[n]) {
        for k in (n + 1) / 2..=n {
            rep.merge(faulhaber::symmetry_cascade(family, n, k)?);
        }
        // vanishing tail beyond d_n through the closed form
        let mut ok = true;
        for k in d_n(n) + 1..=n {
            let mut acc = Rational::zero();
            for v in 0..=k {
                acc += &(binom_rat(2 * k as i64 - v as i64, k as i64)
                    * binom_rat(n as i64, v as i64)
                    * family.alpha(n - v)?);
            }
            ok &= acc.is_zero();
        }
        rep.push("faulhaber.vanishing_tail", p(n), ok, String::new());
    }

    for n in (2..=n_max).filter(|&n| ok_up_to(n)) {
        rep.merge(faulhaber::recurrence_check(family, n)?);
    }

    for n in (0..=n_max.min(12)).filter(|&n| reflect_ok[n]) {
        let ok = half_shift_expand(family, n).is_ok();
        rep.push("faulhaber.half_shift", p(n), ok, String::new());
    }
    Ok(())
}

fn suite_powersum(rep: &mut Report, max_n: usize) -> Result<()> {
    for n in 0..=max_n.min(21) as u32 {
        let mut two_way = true;
        let mut three_way = true;
        for m in 0..=50u32 {
            let direct = powersum::power_sum_direct(n, m);
            two_way &= direct == powersum::power_sum_bernoulli(n, m);
            if n % 2 == 1 {
                three_way &= direct == powersum::power_sum_faulhaber(n, m)?;
            }
        }
        rep.push(
            "powersum.direct_vs_bernoulli",
            format!("family=bernoulli n={n} m<=50"),
            two_way,
            String::new(),
        );
        if n % 2 == 1 {
            rep.push(
                "powersum.three_way",
                format!("family=bernoulli n={n} m<=50"),
                three_way,
                String::new(),
            );
            let ff = powersum::classical_faulhaber(n)?;
            let fp = decompose(&AppellFamily::bernoulli(), n as usize, Route::Subst)?;
            let d = fp.d();
            let lead_ok = ff.coeffs[0].is_zero()
                && ff.coeffs.last().unwrap().clone()
                    == fp.coeff(d) * rat_pow(&rat_i(2), d as i64 + 1) / rat_i(d as i64 + 1);
            rep.push(
                "powersum.ff_shape",
                format!("family=bernoulli n={n}"),
                lead_ok,
                String::new(),
            );
        }
    }
    Ok(())
}
