//! Rank/shift combinations of an Appell family and their reciprocity
//! identities. Umbral expressions are evaluated by linear extension over the
//! monomial basis (A(x)^m ↦ A_m(x)), so every identity here is a concrete
//! binomial sum over Appell polynomials — no symbolic umbra engine.

use crate::arith::{binom_rat, rat_i, Rational};
use crate::error::Result;
use crate::family::AppellFamily;
use crate::poly::{power_table, BivariatePolynomial, Polynomial};
use crate::report::Report;

/// A_{r,s}(x) = Σ_{v=0}^{r} C(r,v) A_{s+v}(x), with index r + s.
pub fn ap_rs(family: &AppellFamily, r: usize, s: usize) -> Result<Polynomial> {
    let mut acc = Polynomial::zero(0);
    for v in 0..=r {
        acc = &acc + &family.appell(s + v)?.scale(&binom_rat(r as i64, v as i64));
    }
    Ok(acc.with_index(r + s))
}

/// α_{r,s} = Σ_{v=0}^{r} C(r,v) α_{s+v} = A_{r,s}(0).
pub fn alpha_rs(family: &AppellFamily, r: usize, s: usize) -> Result<Rational> {
    let mut acc = Rational::from_integer(0.into());
    for v in 0..=r {
        acc += &(binom_rat(r as i64, v as i64) * family.alpha(s + v)?);
    }
    Ok(acc)
}

/// A_{r,s}(x,y) = Σ_{j=0}^{r} C(r,j) y^{r-j} A_{s+j}(x).
pub fn ap_rs_bivariate(family: &AppellFamily, r: usize, s: usize) -> Result<BivariatePolynomial> {
    let mut acc = BivariatePolynomial::zero();
    for j in 0..=r {
        let p = family.appell(s + j)?.scale(&binom_rat(r as i64, j as i64));
        acc = &acc + &BivariatePolynomial::from_poly_in_x(&p).mul_ypow(r - j);
    }
    Ok(acc)
}

/// Exact reciprocity checks for all r, s <= rmax:
///   (i)   (-1)^r A_{r,s}(x)   = (-1)^s A_{s,r}(-x)        (needs reflection)
///   (ii)  A_{r,s}(x,y)        = A_{s,r}(x+y, -y)          (unconditional)
///   (iii) (-1)^r A_{r,s}(x,y) = (-1)^s A_{s,r}(1-x-y, y)  (needs reflection)
///   (iv)  (-1)^r α_{r,s}      = (-1)^s α_{s,r}            (needs reflection)
///
/// Every identity is evaluated regardless of the family's reflection flag;
/// for non-reflecting families the conditional ones simply show up as
/// failures in the report. `bivariate` gates (ii) and (iii).
pub fn check_reciprocity(
    family: &AppellFamily,
    rmax: usize,
    bivariate: bool,
) -> Result<Report> {
    let mut rep = Report::new("umbral");

    // power tables of the substitution targets, shared across all (r, s)
    let sub_x_shift = &BivariatePolynomial::x() + &BivariatePolynomial::y();
    let sub_x_refl = &(&BivariatePolynomial::one() - &BivariatePolynomial::x())
        - &BivariatePolynomial::y();
    let (pow_shift, pow_refl, pow_y_neg, pow_y_id) = if bivariate {
        (
            power_table(&sub_x_shift, 2 * rmax),
            power_table(&sub_x_refl, 2 * rmax),
            power_table(&-&BivariatePolynomial::y(), rmax),
            power_table(&BivariatePolynomial::y(), rmax),
        )
    } else {
        Default::default()
    };

    for r in 0..=rmax {
        for s in 0..=rmax {
            let params = format!("family={} r={} s={}", family.name(), r, s);
            let sign_r = if r % 2 == 1 { rat_i(-1) } else { rat_i(1) };
            let sign_s = if s % 2 == 1 { rat_i(-1) } else { rat_i(1) };

            // (i)
            let lhs = ap_rs(family, r, s)?.scale(&sign_r);
            let rhs = ap_rs(family, s, r)?.negate_argument().scale(&sign_s);
            rep.check("umbral.ap_recip", &params, &lhs, &rhs);

            // (iv)
            let lhs = &sign_r * &alpha_rs(family, r, s)?;
            let rhs = &sign_s * &alpha_rs(family, s, r)?;
            rep.check("umbral.ac_recip", &params, &lhs, &rhs);

            if bivariate {
                let brs = ap_rs_bivariate(family, r, s)?;
                let bsr = ap_rs_bivariate(family, s, r)?;

                // (ii)
                let rhs = bsr.compose_with(&pow_shift, &pow_y_neg);
                rep.check("umbral.ap_biv_1", &params, &brs, &rhs);

                // (iii)
                let lhs = brs.scale(&sign_r);
                let rhs = bsr.compose_with(&pow_refl, &pow_y_id).scale(&sign_s);
                rep.check("umbral.ap_biv_2", &params, &lhs, &rhs);
            }
        }
    }
    Ok(rep)
}

/// Ladder identities generated by the binomial recurrence, for
/// r, s <= rmax and 1 <= n <= step_max:
///   A_{r+n,s} = Σ C(n,v) A_{r,s+v}
///   A_{r,s+n} = Σ C(n,v) (-1)^{n-v} A_{r+v,s}
pub fn check_ladders(
    family: &AppellFamily,
    rmax: usize,
    step_max: usize,
) -> Result<Report> {
    let mut rep = Report::new("umbral");
    for r in 0..=rmax {
        for s in 0..=rmax {
            for n in 1..=step_max {
                let params = format!("family={} r={} s={} n={}", family.name(), r, s, n);

                let mut up = Polynomial::zero(0);
                let mut down = Polynomial::zero(0);
                for v in 0..=n {
                    up = &up + &ap_rs(family, r, s + v)?.scale(&binom_rat(n as i64, v as i64));
                    let mut c = binom_rat(n as i64, v as i64);
                    if (n - v) % 2 == 1 {
                        c = -c;
                    }
                    down = &down + &ap_rs(family, r + v, s)?.scale(&c);
                }
                rep.check(
                    "umbral.ladder_up",
                    &params,
                    &ap_rs(family, r + n, s)?,
                    &up,
                );
                rep.check(
                    "umbral.ladder_down",
                    &params,
                    &ap_rs(family, r, s + n)?,
                    &down,
                );
            }
        }
    }
    Ok(rep)
}

/// σ_{n,v} = C(n,v)·α_{n-v,v} for 0 <= v <= n: the bridge between the A_S
/// coefficients and the rank/shift numbers.
pub fn sigma_crosscheck(family: &AppellFamily, n: usize) -> Result<Report> {
    let mut rep = Report::new("umbral");
    let (_, table) = family.as_poly(n)?;
    for v in 0..=n {
        let params = format!("family={} n={} v={}", family.name(), n, v);
        let rhs = binom_rat(n as i64, v as i64) * alpha_rs(family, n - v, v)?;
        rep.check("umbral.sigma_rs", &params, &table.sigma[v], &rhs);
    }
    Ok(rep)
}
