//! Property tests for the arithmetic and polynomial layers.

use appell::arith::{parse_rational, rat, Rational};
use appell::poly::{times_binomial_power, PalindromeClass, Polynomial, TruncatedSeries};
use num_traits::Zero;
use proptest::prelude::*;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-999i64..=999, 1i64..=99).prop_map(|(n, d)| rat(n, d))
}

fn arb_poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(arb_rational(), 1..=max_len)
        .prop_map(|coeffs| {
            let index = coeffs.len() - 1;
            Polynomial::new(coeffs, index)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    // exactness of the scalar layer: (a + c) - c = a, always
    #[test]
    fn rational_addition_is_exact(a in arb_rational(), c in arb_rational()) {
        prop_assert_eq!(&(&a + &c) - &c, a);
    }
}

proptest! {
    #[test]
    fn rational_text_round_trip(a in arb_rational()) {
        prop_assert_eq!(parse_rational(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn star_is_an_involution(p in arb_poly(9)) {
        prop_assume!(!p.coeff(0).is_zero());
        let twice = p.reciprocal_star().unwrap().reciprocal_star().unwrap();
        prop_assert_eq!(twice, p);
    }

    #[test]
    fn star_distributes_over_products(p in arb_poly(7), q in arb_poly(7)) {
        // star(P·Q at index m+n) = star(P at m)·star(Q at n)
        let prod = &p * &q;
        let lhs = prod.reciprocal_star().unwrap();
        let rhs = &p.reciprocal_star().unwrap() * &q.reciprocal_star().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn shifts_compose_additively(p in arb_poly(8), a in arb_rational(), b in arb_rational()) {
        let twice = p.shift(&a).shift(&b);
        let once = p.shift(&(&a + &b));
        prop_assert_eq!(&twice, &once);
        prop_assert_eq!(twice.index(), p.index());
    }

    #[test]
    fn eval_is_a_ring_homomorphism(p in arb_poly(6), q in arb_poly(6), x in arb_rational()) {
        prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
        prop_assert_eq!((&p + &q).eval(&x), p.eval(&x) + q.eval(&x));
    }

    #[test]
    fn series_product_matches_polynomial_product(p in arb_poly(6), q in arb_poly(6)) {
        let order = 8usize;
        let sp = TruncatedSeries::from_poly(&p, order);
        let sq = TruncatedSeries::from_poly(&q, order);
        let series = sp.mul(&sq);
        let exact = &p * &q;
        for l in 0..=order {
            prop_assert_eq!(series.coeff(l).unwrap(), exact.coeff(l));
        }
    }

    #[test]
    fn negative_binomial_power_matches_geometric_expansion(p in arb_poly(5)) {
        // multiplying the series for (x+1)^-1 by (x+1) recovers the polynomial
        let order = p.coeffs().len() + 4;
        let inv = match times_binomial_power(&p, -1, order) {
            appell::poly::PolyOrSeries::Series(s) => s,
            _ => unreachable!(),
        };
        let back = inv.mul(&TruncatedSeries::from_poly(&Polynomial::from_i64s(&[1, 1], 1), order));
        for l in 0..=order {
            prop_assert_eq!(back.coeff(l).unwrap(), p.coeff(l));
        }
    }
}

#[test]
fn binomial_rows_are_palindromic() {
    for c in 0..=20u32 {
        let row = Polynomial::binomial_row(c);
        assert_eq!(
            row.palindrome_class().unwrap(),
            PalindromeClass::Palindromic,
            "c={c}"
        );
    }
}

#[test]
fn translation_formula_at_twenty_random_offsets() {
    use appell::arith::{binom_rat, Rational};
    use appell::AppellFamily;
    use num_traits::One;
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for f in [AppellFamily::bernoulli(), AppellFamily::euler()] {
        for n in 0..=10usize {
            let a_n = f.appell(n).unwrap();
            for _ in 0..20 {
                let y = rat(rng.gen_range(-99i64..=99), rng.gen_range(1i64..=20));
                let mut rhs = Polynomial::zero(n);
                let mut ypow = Rational::one();
                for v in 0..=n {
                    let c = binom_rat(n as i64, v as i64) * &ypow;
                    rhs = &rhs + &f.appell(n - v).unwrap().scale(&c);
                    ypow *= &y;
                }
                assert_eq!(a_n.shift(&y), rhs, "family={} n={n} y={y}", f.name());
            }
        }
    }
}
