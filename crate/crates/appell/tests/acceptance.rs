//! Acceptance suite: the end-to-end guarantees of the library, one test per
//! criterion, each printing a single pass/fail line. Every comparison is an
//! exact equality of rationals — there are no tolerances anywhere.
//!
//! Run with `cargo test -p appell --test acceptance -- --nocapture` to see
//! the per-criterion lines.

use std::time::Instant;

use appell::arith::{
    binom_rat, factorial_rat, falling_factorial, fibonacci_rat, lah, rat, rat_big, rat_i,
    QuadRational, Rational,
};
use appell::family::{genocchi_number, AppellFamily};
use appell::faulhaber::{a_nk, d_n, decompose, lambda_sum, lambda_table, Route};
use appell::poly::{LaurentPolynomial, PalindromeClass};
use appell::powersum;
use appell::umbral;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn criterion(name: &str, body: impl FnOnce() -> Result<(), String>) {
    match body() {
        Ok(()) => println!("acceptance {name}: PASS"),
        Err(e) => {
            println!("acceptance {name}: FAIL - {e}");
            panic!("acceptance criterion `{name}` failed: {e}");
        }
    }
}

fn builtin_families() -> [AppellFamily; 2] {
    [AppellFamily::bernoulli(), AppellFamily::euler()]
}

const ROUTES: [Route; 3] = [Route::Subst, Route::Reciprocal, Route::Recurrence];

#[test]
fn criterion_01_route_equivalence() {
    criterion("01 route-equivalence (n <= 41, < 10s)", || {
        let start = Instant::now();
        for f in builtin_families() {
            for n in 0..=41 {
                let subst = decompose(&f, n, Route::Subst).map_err(|e| e.to_string())?;
                let reci = decompose(&f, n, Route::Reciprocal).map_err(|e| e.to_string())?;
                let recur = decompose(&f, n, Route::Recurrence).map_err(|e| e.to_string())?;
                if subst != reci || subst != recur {
                    return Err(format!("routes disagree for {} at n={n}", f.name()));
                }
            }
        }
        let elapsed = start.elapsed();
        if elapsed.as_secs_f64() >= 10.0 {
            return Err(format!("took {elapsed:?}, expected under 10s"));
        }
        Ok(())
    });
}

#[test]
fn criterion_02_reconstruction() {
    criterion("02 reconstruction (n <= 40)", || {
        for f in builtin_families() {
            for n in 0..=40 {
                for route in ROUTES {
                    let back = decompose(&f, n, route).map_err(|e| e.to_string())?.reconstruct();
                    let direct = f.appell(n).map_err(|e| e.to_string())?;
                    if back != direct {
                        return Err(format!(
                            "reconstruction mismatch for {} at n={n} route={route}",
                            f.name()
                        ));
                    }
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_03_endpoint_coefficients() {
    criterion("03 endpoint-coefficients (n <= 40)", || {
        for f in builtin_families() {
            for n in 0..=40usize {
                let fp = decompose(&f, n, Route::Recurrence).map_err(|e| e.to_string())?;
                let alpha_n = f.alpha(n).map_err(|e| e.to_string())?;
                let alpha_0 = f.alpha(0).map_err(|e| e.to_string())?;
                let constant = if n % 2 == 1 { -&alpha_n } else { alpha_n.clone() };
                let leading = if n % 2 == 1 { rat(1, 2) * &alpha_0 } else { alpha_0.clone() };
                if fp.coeff(0) != constant {
                    return Err(format!("f_(n,0) wrong for {} at n={n}", f.name()));
                }
                if fp.coeff(fp.d()) != leading {
                    return Err(format!("f_(n,d_n) wrong for {} at n={n}", f.name()));
                }
            }
        }
        Ok(())
    });
}

/// Exact Gaussian elimination for the small interpolation system.
fn solve_exact(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Result<Vec<Rational>, String> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or("singular system")?;
        a.swap(col, piv);
        b.swap(col, piv);
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = &a[r][col] / &a[col][col];
                for c in col..n {
                    let t = &a[col][c] * &factor;
                    a[r][c] -= t;
                }
                let t = &b[col] * &factor;
                b[r] -= t;
            }
        }
    }
    Ok((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

#[test]
fn criterion_04_power_sums() {
    criterion("04 power-sums (n <= 21, m <= 50, FF_5 oracle)", || {
        for n in 0..=21u32 {
            for m in 0..=50u32 {
                let direct = powersum::power_sum_direct(n, m);
                if direct != powersum::power_sum_bernoulli(n, m) {
                    return Err(format!("direct vs bernoulli mismatch at n={n} m={m}"));
                }
                if n % 2 == 1 {
                    let via_ff = powersum::power_sum_faulhaber(n, m).map_err(|e| e.to_string())?;
                    if direct != via_ff {
                        return Err(format!("faulhaber route mismatch at n={n} m={m}"));
                    }
                }
            }
        }
        if powersum::power_sum_direct(5, 4) != rat_i(276) {
            return Err("S_5(4) != 276".into());
        }

        // interpolate S_5(m) against powers of y = C(m,2) over m = 2..6;
        // FF_5 has no constant term and degree 3, so three unknowns
        let ms = [2i64, 3, 4];
        let mut a = Vec::new();
        let mut b = Vec::new();
        for &m in &ms {
            let y = binom_rat(m, 2);
            a.push(vec![y.clone(), &y * &y, &(&y * &y) * &y]);
            b.push(powersum::power_sum_direct(5, m as u32));
        }
        let c = solve_exact(a, b)?;
        // the oracle pins FF_5(y) = (4y^3 - y^2)/3
        if c != vec![rat_i(0), rat(-1, 3), rat(4, 3)] {
            return Err(format!("interpolated FF_5 coefficients {c:?}"));
        }
        // the interpolant must also explain the remaining sample points
        for m in [5i64, 6] {
            let y = binom_rat(m, 2);
            let val = &(&c[0] * &y) + &(&(&c[1] * &y) * &y) + &(&(&(&c[2] * &y) * &y) * &y);
            if val != powersum::power_sum_direct(5, m as u32) {
                return Err(format!("interpolant misses S_5({m})"));
            }
        }
        let ff5 = powersum::classical_faulhaber(5).map_err(|e| e.to_string())?;
        if ff5.coeffs != vec![rat_i(0), c[0].clone(), c[1].clone(), c[2].clone()] {
            return Err("classical_faulhaber(5) disagrees with the interpolation oracle".into());
        }
        Ok(())
    });
}

#[test]
fn criterion_05_reflection_suite() {
    criterion("05 reflection-suite (n <= 30, plus violating family)", || {
        for f in builtin_families() {
            let rep = f.check_reflection(30).map_err(|e| e.to_string())?;
            if !rep.all_pass() {
                return Err(format!("{} reflection failures:\n{rep}", f.name()));
            }
        }
        let violator = AppellFamily::from_alphas("violator", vec![rat_i(1), rat_i(0)], true);
        let rep = violator.check_reflection(1).map_err(|e| e.to_string())?;
        if rep.all_pass() {
            return Err("constructed violating family was not flagged".into());
        }
        if !rep.failures().any(|c| c.identity_id == "reflection.R4") {
            return Err("R4 violation not reported".into());
        }
        Ok(())
    });
}

#[test]
fn criterion_06_derivative_theorems() {
    criterion("06 derivative-theorems (n,k <= 10)", || {
        for f in builtin_families() {
            for n in 0..=10usize {
                for k in 0..=10i64 {
                    let g = f.generalized_reciprocal(n, k).map_err(|e| e.to_string())?;
                    for ell in 0..=n.min(k.max(0) as usize) {
                        let closed = f.ag_derivative(n, k, ell).map_err(|e| e.to_string())?;
                        if closed != g.derivative_iter(ell) {
                            return Err(format!(
                                "closed-form derivative mismatch for {} at n={n} k={k} l={ell}",
                                f.name()
                            ));
                        }
                    }
                }
                // composite-derivative lemma through signed Lah numbers
                let inv = LaurentPolynomial::from_poly_inverse_x(
                    &f.appell(n).map_err(|e| e.to_string())?,
                );
                for ell in 1..=n {
                    let lhs = inv.derivative_iter(ell);
                    let mut rhs = LaurentPolynomial::zero();
                    for v in 1..=ell {
                        let c = rat_big(lah(ell as u32, v as u32).map_err(|e| e.to_string())?)
                            * rat_big(falling_factorial(n as i64, v as u32));
                        let term = LaurentPolynomial::from_poly_inverse_x(
                            &f.appell(n - v).map_err(|e| e.to_string())?,
                        )
                        .mul_xpow(-((ell + v) as i64))
                        .scale(&c);
                        rhs = &rhs + &term;
                    }
                    if lhs != rhs {
                        return Err(format!(
                            "Lah composite-derivative mismatch for {} at n={n} l={ell}",
                            f.name()
                        ));
                    }
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_07_palindromic_structure() {
    criterion("07 palindromic-structure (A_S,n <= 25; A_S,n,2k odd n <= 21)", || {
        for f in builtin_families() {
            for n in 0..=25usize {
                let (as_n, _) = f.as_poly(n).map_err(|e| e.to_string())?;
                let class = as_n.palindrome_class().map_err(|e| e.to_string())?;
                let want = if n % 2 == 0 {
                    PalindromeClass::Palindromic
                } else {
                    PalindromeClass::AntiPalindromic
                };
                if class != want {
                    return Err(format!(
                        "A_S,{n} for {} classified {class}, expected {want}",
                        f.name()
                    ));
                }
            }
            for n in (1..=21usize).step_by(2) {
                for k in (n + 1) / 2..=n {
                    let poly = f
                        .as_nk(n, 2 * k as i64, None)
                        .map_err(|e| e.to_string())?;
                    let p = poly.as_poly().ok_or("expected a polynomial for 2k > n")?;
                    if p.palindrome_class().map_err(|e| e.to_string())?
                        != PalindromeClass::AntiPalindromic
                    {
                        return Err(format!(
                            "A_S,{n},{} for {} is not anti-palindromic",
                            2 * k,
                            f.name()
                        ));
                    }
                    if !p.coeff(k).is_zero() {
                        return Err(format!(
                            "central coefficient of A_S,{n},{} nonzero for {}",
                            2 * k,
                            f.name()
                        ));
                    }
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_08_umbral_suite() {
    criterion("08 umbral-suite (r,s <= 10)", || {
        for f in builtin_families() {
            let rep = umbral::check_reciprocity(&f, 10, true).map_err(|e| e.to_string())?;
            if !rep.all_pass() {
                return Err(format!("{} reciprocity failures:\n{rep}", f.name()));
            }
            let ladders = umbral::check_ladders(&f, 10, 6).map_err(|e| e.to_string())?;
            if !ladders.all_pass() {
                return Err(format!("{} ladder failures:\n{ladders}", f.name()));
            }
        }
        // the unconditional bivariate identity holds for a random family
        // that does not satisfy the reflection relation
        let mut rng = ChaCha8Rng::seed_from_u64(0xA99E11);
        let alphas: Vec<Rational> = (0..=24)
            .map(|_| rat(rng.gen_range(-99i64..=99), rng.gen_range(1i64..=20)))
            .collect();
        let random = AppellFamily::from_alphas("random-nonreflecting", alphas, false);
        let rep = umbral::check_reciprocity(&random, 10, true).map_err(|e| e.to_string())?;
        let biv1: Vec<_> = rep
            .cases
            .iter()
            .filter(|c| c.identity_id == "umbral.ap_biv_1")
            .collect();
        if biv1.is_empty() || biv1.iter().any(|c| !c.pass) {
            return Err("ap_biv_1 failed for the random non-reflecting family".into());
        }
        // sanity: that family really is non-reflecting
        if rep.cases.iter().filter(|c| c.identity_id == "umbral.ap_recip").all(|c| c.pass) {
            return Err("random family unexpectedly satisfies the reflection identity".into());
        }
        Ok(())
    });
}

#[test]
fn criterion_09_lambda_machinery() {
    criterion("09 lambda-machinery (random alphas n <= 20; bridges; zero-sums n <= 15)", || {
        // Λ-recurrence for arbitrary coefficient sequences
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let alphas: Vec<Rational> = (0..=20)
            .map(|_| rat(rng.gen_range(-99i64..=99), rng.gen_range(1i64..=20)))
            .collect();
        let random = AppellFamily::from_alphas("random", alphas, false);
        for n in 2..=20usize {
            for k in 0..=n - 2 {
                let lhs = rat_big(falling_factorial(n as i64, 2))
                    * lambda_sum(&random, n - 2, k).map_err(|e| e.to_string())?;
                let rhs = lambda_sum(&random, n, k + 2).map_err(|e| e.to_string())?
                    - rat_i(4 * k as i64 + 6)
                        * lambda_sum(&random, n, k + 1).map_err(|e| e.to_string())?;
                if lhs != rhs {
                    return Err(format!("lambda recurrence fails at n={n} k={k}"));
                }
            }
        }

        for f in builtin_families() {
            // a_{n,k} = (-1)^n Λ_{n,k}
            for n in 0..=20usize {
                let table = lambda_table(&f, n).map_err(|e| e.to_string())?;
                for k in 0..=n {
                    if a_nk(&f, n, k).map_err(|e| e.to_string())? != table.a[k] {
                        return Err(format!("a != (-1)^n lambda for {} n={n} k={k}", f.name()));
                    }
                }
            }
            // h_{n,k} = (-1)^k a_{n,k} for odd n
            for n in (1..=21usize).step_by(2) {
                let fp = decompose(&f, n, Route::Subst).map_err(|e| e.to_string())?;
                for k in 0..=fp.d() {
                    let a = a_nk(&f, n, k).map_err(|e| e.to_string())?;
                    let signed = if k % 2 == 1 { -&a } else { a.clone() };
                    if fp.fh(k) != signed {
                        return Err(format!("h != (-1)^k a for {} n={n} k={k}", f.name()));
                    }
                }
            }
            // the three zero-sums for odd n, (n+1)/2 <= k <= n
            for n in (1..=15usize).step_by(2) {
                let (_, table) = f.as_poly(n).map_err(|e| e.to_string())?;
                for k in (n + 1) / 2..=n {
                    let mut s1 = Rational::zero();
                    let mut s2 = Rational::zero();
                    let mut s3 = Rational::zero();
                    for v in 0..=k {
                        let b = binom_rat(2 * k as i64 - n as i64, (k - v) as i64);
                        s1 += &(&b * &table.sigma[v]);
                        s2 += &(&(&b * &binom_rat(n as i64, v as i64))
                            * &umbral::alpha_rs(&f, n - v, v).map_err(|e| e.to_string())?);
                        s3 += &(binom_rat(2 * k as i64 - v as i64, k as i64)
                            * binom_rat(n as i64, v as i64)
                            * f.alpha(n - v).map_err(|e| e.to_string())?);
                    }
                    if !s1.is_zero() || !s2.is_zero() || !s3.is_zero() {
                        return Err(format!("zero-sum fails for {} n={n} k={k}", f.name()));
                    }
                }
            }
        }

        // Genocchi instance: Σ C(2k-v,k) C(n,v) G_{n+1-v}/(n+1-v) = 0
        for n in (1..=15usize).step_by(2) {
            for k in (n + 1) / 2..=n {
                let mut acc = Rational::zero();
                for v in 0..=k {
                    let m = n + 1 - v;
                    acc += &(binom_rat(2 * k as i64 - v as i64, k as i64)
                        * binom_rat(n as i64, v as i64)
                        * (genocchi_number(m) / rat_i(m as i64)));
                }
                if !acc.is_zero() {
                    return Err(format!("Genocchi zero-sum fails at n={n} k={k}"));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_10_fibonacci_phi_values() {
    criterion("10 fibonacci-phi-values (n <= 25)", || {
        for f in builtin_families() {
            for n in 0..=25usize {
                let fp = decompose(&f, n, Route::Subst).map_err(|e| e.to_string())?;
                let fp_one = fp.value_at_one();

                // A_n(φ) = (√5)^{δ_n} F_n(1) in Q(√5)
                let lhs = f
                    .appell(n)
                    .map_err(|e| e.to_string())?
                    .eval_quad(&QuadRational::phi());
                let rhs = if n % 2 == 1 {
                    QuadRational::new(Rational::zero(), fp_one.clone())
                } else {
                    QuadRational::from_rational(fp_one.clone())
                };
                if lhs != rhs {
                    return Err(format!("phi value mismatch for {} at n={n}", f.name()));
                }

                // umbral Fibonacci sum
                let mut sum = Rational::zero();
                for v in 0..=n {
                    sum += &(binom_rat(n as i64, v as i64)
                        * f.alpha(n - v).map_err(|e| e.to_string())?
                        * fibonacci_rat(v as u32));
                }
                let want = if n % 2 == 1 {
                    rat_i(2) * &fp_one
                } else {
                    Rational::zero()
                };
                if sum != want {
                    return Err(format!("Fibonacci sum mismatch for {} at n={n}", f.name()));
                }
            }
        }
        Ok(())
    });
}

// keep the imported helpers exercised even when individual criteria evolve
#[test]
fn helper_sanity() {
    assert_eq!(factorial_rat(4), rat_i(24));
    assert_eq!(d_n(9), 4);
    assert_eq!(Rational::one(), rat_i(1));
}
