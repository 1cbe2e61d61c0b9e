use slitpath_core::exact::ratio;
use slitpath_core::genfun::{denominator, g_term, genfun, genfun_a2_zero, min_terms};
use slitpath_core::oracles::{enumerate_paths, interior_charpoly, matrix_series};
use slitpath_core::{Poly, SlitSpec, Weights};

fn standard_weights() -> Vec<Weights> {
    vec![
        Weights::from_integers(1, 1, 1).unwrap(),
        Weights::from_integers(1, 3, 2).unwrap(),
        Weights::from_integers(1, 0, 2).unwrap(),
        Weights::from_integers(2, 1, 1).unwrap(),
        Weights::new(ratio(1, 2), ratio(1, 3), ratio(1, 6)).unwrap(),
    ]
}

#[test]
fn series_matches_matrix_and_enumeration() {
    for m in 2..=10 {
        let spec = SlitSpec::new(m).unwrap();
        let order = (m - 1 + 16).min(22);
        for w in standard_weights() {
            let gf = genfun(&spec, &w, order).unwrap();
            let mat = matrix_series(&spec, &w, order);
            assert_eq!(gf.series(), mat.as_slice(), "matrix m={m} w={w}");
            let en = enumerate_paths(&spec, &w, order).unwrap();
            assert_eq!(gf.series(), en.as_slice(), "enumeration m={m} w={w}");
        }
    }
}

#[test]
fn series_matches_matrix_at_longer_orders() {
    for m in 11..=12 {
        let spec = SlitSpec::new(m).unwrap();
        for w in standard_weights() {
            let order = m - 1 + 16;
            assert_eq!(
                genfun(&spec, &w, order).unwrap().series(),
                matrix_series(&spec, &w, order).as_slice(),
                "m={m} w={w}"
            );
        }
    }
}

#[test]
fn denominator_is_interior_charpoly() {
    for m in 2..=12 {
        let spec = SlitSpec::new(m).unwrap();
        for w in standard_weights() {
            let d = denominator(&spec, &w);
            assert_eq!(d, interior_charpoly(&spec, &w), "m={m} w={w}");
            assert!(d.degree().unwrap() < m);
            assert_eq!(d.coeff(0), ratio(1, 1));
        }
    }
}

#[test]
fn genfun_invariants() {
    for m in 2..=12 {
        let spec = SlitSpec::new(m).unwrap();
        for w in standard_weights() {
            let gf = genfun(&spec, &w, m + 5).unwrap();
            assert!(gf.series()[..m - 1].iter().all(|c| *c == ratio(0, 1)));
            let lead = num_traits::pow(w.a1().clone(), m - 1);
            assert_eq!(gf.coefficient(m - 1), lead);
            assert_eq!(gf.numerator_shift(), m - 1);
        }
    }
}

#[test]
fn a2_zero_closed_form_agrees() {
    let zero_a2 = [
        Weights::from_integers(1, 0, 2).unwrap(),
        Weights::from_integers(1, 0, 1).unwrap(),
        Weights::new(ratio(2, 3), ratio(0, 1), ratio(5, 4)).unwrap(),
    ];
    for m in 2..=12 {
        let spec = SlitSpec::new(m).unwrap();
        for w in &zero_a2 {
            let order = m + 15;
            assert_eq!(
                genfun_a2_zero(&spec, w, order).unwrap().series(),
                genfun(&spec, w, order).unwrap().series(),
                "m={m} w={w}"
            );
        }
    }
}

#[test]
fn even_terms_reduce_to_single_binomial_when_a2_vanishes() {
    let w = Weights::from_integers(1, 0, 1).unwrap();
    for m in 2..=30 {
        let spec = SlitSpec::new(m).unwrap();
        for n in (1..).take_while(|n| 2 * n < m) {
            let expected = Poly::monomial(
                slitpath_core::BigRat::from_integer(slitpath_core::binom(
                    3 * n as i64 - m as i64,
                    n,
                )),
                3 * n,
            );
            assert_eq!(g_term(2 * n, &spec, &w).unwrap(), expected, "m={m} n={n}");
            if 2 * n + 1 < m {
                assert!(g_term(2 * n + 1, &spec, &w).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn last_term_reaches_top_degree_and_next_term_vanishes() {
    for v in 1..=10usize {
        for m in [3 * v, 3 * v + 1, 3 * v + 2] {
            let spec = SlitSpec::new(m).unwrap();
            // without +1 steps only multiples of 3 occur, so a2 = 0 is excluded
            for w in standard_weights()
                .into_iter()
                .filter(|w| w.a2() != &ratio(0, 1))
            {
                let n = min_terms(m);
                let g = g_term(n, &spec, &w).unwrap();
                assert_eq!(g.degree(), Some(m - 1), "m={m} w={w}");
                if n + 1 < m {
                    assert!(g_term(n + 1, &spec, &w).unwrap().is_zero());
                }
            }
        }
    }
}
