//! Cross-checks of the window-sum triangle against independent routes.

use knomial::identities::{closed_form_coefficient, expand_power, DensePolynomial};
use knomial::{
    coefficient, make_params, next_row, row, triangle, BigInt, BigUint, CoefficientQuery, Row,
};
use num_traits::{Pow, Zero};
use proptest::prelude::*;

fn big(s: &str) -> BigUint {
    s.parse().unwrap()
}

#[test]
fn triple_agreement_small_orders() {
    for k in 2..=6 {
        let params = make_params(k).unwrap();
        for n in 0..=12usize {
            let line = Row::generate(&params, n);
            let oracle = expand_power(&params, n);
            assert_eq!(oracle.degree(), Some((k as usize - 1) * n));
            assert!(oracle.is_positive());
            for h in 0..line.len() {
                let window = BigInt::from(line.coefficients()[h].clone());
                let expanded = oracle.coefficients()[h].clone();
                let closed = BigInt::from(closed_form_coefficient(&params, n, h as i64).unwrap());
                assert_eq!(window, expanded, "k={k} n={n} h={h}");
                assert_eq!(window, closed, "k={k} n={n} h={h}");
            }
        }
    }
}

// Frozen from a symbolic expansion of (1 + x + ... + x^(k-1))^n.
#[test]
fn frozen_large_coefficients() {
    let cases = [
        (3, 40, 40, "934837217271732457"),
        (7, 15, 45, "241958082737"),
        (4, 30, 45, "74683398325804080"),
        (2, 100, 50, "100891344545564193334812497256"),
        (
            3,
            100,
            100,
            "25134265191388162956642519120384003897467908119",
        ),
    ];
    for (k, n, h, expected) in cases {
        let q = CoefficientQuery::new(k, n, h);
        assert_eq!(coefficient(q).unwrap(), big(expected), "{q}");
        assert_eq!(row(k, n).unwrap().get(h), big(expected), "{q}");
        let params = make_params(k).unwrap();
        assert_eq!(
            closed_form_coefficient(&params, n as usize, h).unwrap(),
            big(expected),
            "{q}"
        );
    }
}

#[test]
fn entries_outgrow_machine_words() {
    // Line 5000 of order 3 sums to 3^5000, a 2386-digit number.
    let line = row(3, 5000).unwrap();
    let total: BigUint = line.coefficients().iter().sum();
    assert_eq!(total, Pow::pow(BigUint::from(3u32), 5000u32));
    assert_eq!(total.to_string().len(), 2386);
}

#[test]
fn alternating_sum_is_p_at_minus_one_to_the_n() {
    let minus_one = BigInt::from(-1);
    for k in 2..=9 {
        let params = make_params(k).unwrap();
        let base = DensePolynomial::knomial(&params).eval(&minus_one);
        for (n, line) in triangle(k, 15).unwrap().enumerate() {
            let alt: BigInt = line
                .coefficients()
                .iter()
                .enumerate()
                .map(|(h, c)| {
                    if h % 2 == 0 {
                        BigInt::from(c.clone())
                    } else {
                        -BigInt::from(c.clone())
                    }
                })
                .sum();
            assert_eq!(alt, Pow::pow(&base, n as u32), "k={k} n={n}");
        }
    }
}

#[test]
fn vandermonde_holds_for_every_h() {
    for k in 2..=5 {
        let lines: Vec<Row> = triangle(k, 12).unwrap().collect();
        let top = (k - 1) * 12;
        for n in 0..=6usize {
            for m in 0..=6usize {
                for h in -3..=top + 3 {
                    let lhs: BigUint = (0..=h.max(0))
                        .map(|i| lines[n].get(i) * lines[m].get(h - i))
                        .sum();
                    assert_eq!(lhs, lines[n + m].get(h), "k={k} n={n} m={m} h={h}");
                }
            }
        }
    }
}

#[test]
fn square_sum_target_is_the_midpoint_of_line_2n() {
    for k in 2..=8i64 {
        for n in 0..=10usize {
            let doubled = row(k, 2 * n as i64).unwrap();
            assert_eq!(doubled.len() % 2, 1);
            assert_eq!(doubled.last_index() / 2, (k as usize - 1) * n);
        }
    }
}

proptest! {
    #[test]
    fn width_matches_formula(k in 2i64..12, n in 0i64..40) {
        prop_assert_eq!(row(k, n).unwrap().len() as i64, (k - 1) * n + 1);
    }

    #[test]
    fn recurrence_by_naive_sum(k in 2i64..9, n in 1i64..26, h in -10i64..220) {
        let above = row(k, n - 1).unwrap();
        let naive: BigUint = (0..k).map(|i| above.get(h - i)).sum();
        prop_assert_eq!(coefficient(CoefficientQuery::new(k, n, h)).unwrap(), naive);
    }

    #[test]
    fn lines_are_palindromes(k in 2i64..10, n in 0i64..30) {
        let line = row(k, n).unwrap();
        let c = line.coefficients();
        prop_assert!(c.iter().eq(c.iter().rev()));
        prop_assert!(c.iter().all(|x| !x.is_zero()));
    }

    #[test]
    fn lines_start_with_one_then_n(k in 2i64..10, n in 1i64..40) {
        let line = row(k, n).unwrap();
        prop_assert_eq!(line.get(0), BigUint::from(1u32));
        prop_assert_eq!(line.get(1), BigUint::from(n as u64));
        prop_assert_eq!(line.get(line.last_index() as i64), BigUint::from(1u32));
    }

    #[test]
    fn streaming_matches_independent_rows(k in 2i64..8, n_max in 0i64..20) {
        let params = make_params(k).unwrap();
        let mut stepped = Row::first(&params);
        for (n, line) in triangle(k, n_max).unwrap().enumerate() {
            prop_assert_eq!(&line, &row(k, n as i64).unwrap());
            prop_assert_eq!(&line, &stepped);
            stepped = next_row(&params, &stepped);
        }
    }

    #[test]
    fn off_line_queries_are_zero(k in 2i64..8, n in 0i64..15, past in 1i64..1000) {
        let last = (k - 1) * n;
        prop_assert!(coefficient(CoefficientQuery::new(k, n, -past)).unwrap().is_zero());
        prop_assert!(coefficient(CoefficientQuery::new(k, n, last + past)).unwrap().is_zero());
    }
}
