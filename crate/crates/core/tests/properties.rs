use proptest::prelude::*;

use qeuler_core::exactnum::{rat_pow, real_pow};
use qeuler_core::par::{map_ordered, ExecMode};
use qeuler_core::qeuler::{
    alt_q_power_sum, alt_q_power_sum_closed, distribution_lhs, q_euler_poly, q_euler_poly_via_numbers,
    weighted_alt_q_power_sum, weighted_alt_q_power_sum_closed,
};
use qeuler_core::verify::{run_suite, Bounds, Suite};
use qeuler_core::{QBase, QPower, Rational, RealP};

/// Positive rationals other than 1 with small numerator and denominator.
fn q_strategy() -> impl Strategy<Value = Rational> {
    (1i64..12, 1i64..12)
        .prop_filter("q != 1", |(n, d)| n != d)
        .prop_map(|(n, d)| Rational::frac(n, d))
}

fn zeta_q_strategy() -> impl Strategy<Value = Rational> {
    (1i64..12, 2i64..13)
        .prop_filter("q < 1", |(n, d)| n < d)
        .prop_map(|(n, d)| Rational::frac(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rat_pow_of_a_perfect_power_inverts(b in q_strategy(), a in -4i64..5, f in 1u32..5) {
        let q = b.pow(f as i64).unwrap();
        let r = Rational::frac(a, f as i64);
        let t = rat_pow(&q, &r).unwrap();
        prop_assert_eq!(t.pow(f as i64).unwrap(), q.pow(a).unwrap());
        prop_assert_eq!(t, b.pow(a).unwrap());
    }

    #[test]
    fn rat_pow_agrees_with_real_pow(b in q_strategy(), a in -4i64..5, f in 1u32..5) {
        let p = 40;
        let q = b.pow(f as i64).unwrap();
        let r = Rational::frac(a, f as i64);
        let exact = RealP::from_rational(&rat_pow(&q, &r).unwrap(), p);
        let approx = real_pow(&RealP::from_rational(&q, p), &RealP::from_rational(&r, p)).unwrap();
        prop_assert!((&exact - &approx).abs() <= RealP::tolerance(p));
    }

    #[test]
    fn alt_q_power_sum_closed_form(q in q_strategy(), m in 0u32..8, n in 0u64..15) {
        let base = QBase::new(q).unwrap();
        prop_assert_eq!(alt_q_power_sum_closed(m, n, &base), alt_q_power_sum(m, n, &base));
    }

    #[test]
    fn weighted_alt_q_power_sum_closed_form(q in q_strategy(), m in 0u32..8, n in 0u64..15) {
        let base = QBase::new(q).unwrap();
        prop_assert_eq!(weighted_alt_q_power_sum_closed(m, n, &base), weighted_alt_q_power_sum(m, n, &base));
    }

    #[test]
    fn polynomial_forms_agree(q in q_strategy(), n in 0u32..8, x in -3i64..6) {
        let base = QBase::new(q).unwrap();
        let qp = QPower::at_integer(&base, x);
        prop_assert_eq!(q_euler_poly(n, &qp), q_euler_poly_via_numbers(n, &qp));
    }

    #[test]
    fn distribution_relation(q in q_strategy(), m in 0u32..6, f in prop::sample::select(vec![1u32, 3, 5]), x in -2i64..4) {
        let base = QBase::new(q).unwrap();
        prop_assert_eq!(
            distribution_lhs(m, f, x, &base).unwrap(),
            q_euler_poly(m, &QPower::at_integer(&base, x))
        );
    }

    #[test]
    fn distribution_rejects_even_f(q in q_strategy(), f in (0u32..8).prop_map(|k| 2 * k)) {
        let base = QBase::new(q).unwrap();
        prop_assert!(distribution_lhs(1, f, 0, &base).is_err());
    }

    #[test]
    fn rational_display_round_trips(n in -10_000i64..10_000, d in 1i64..10_000) {
        let r = Rational::frac(n, d);
        let shown = r.to_string();
        prop_assert!(shown.contains('/'));
        prop_assert_eq!(shown.parse::<Rational>().unwrap(), r);
    }

    #[test]
    fn map_ordered_preserves_order(items in prop::collection::vec(any::<i32>(), 0..200)) {
        let f = |x: &i32| i64::from(*x) * 3 - 1;
        let expected: Vec<i64> = items.iter().map(f).collect();
        prop_assert_eq!(map_ordered(ExecMode::Parallel, &items, f), expected.clone());
        prop_assert_eq!(map_ordered(ExecMode::Sequential, &items, f), expected);
    }

    #[test]
    fn zeta_domain_is_open_unit_interval(q in q_strategy()) {
        let below_one = q < Rational::one();
        prop_assert_eq!(QBase::zeta(q).is_ok(), below_one);
    }

    #[test]
    fn zeta_q_values_are_accepted(q in zeta_q_strategy()) {
        prop_assert!(QBase::zeta(q).unwrap().is_zeta_domain());
    }
}

#[test]
fn reports_are_identical_across_modes() {
    let bounds = Bounds { max_m: Some(4), max_n: Some(6), ..Bounds::default() };
    for suite in [Suite::Thm3, Suite::Weighted, Suite::Thm2] {
        let mut seq = run_suite(suite, &bounds, ExecMode::Sequential).unwrap();
        let mut par = run_suite(suite, &bounds, ExecMode::Parallel).unwrap();
        seq.elapsed_ms = 0;
        par.elapsed_ms = 0;
        assert_eq!(serde_json::to_string(&seq).unwrap(), serde_json::to_string(&par).unwrap());
    }
}

#[test]
fn report_serializes_with_expected_fields() {
    let report = run_suite(Suite::Characters, &Bounds::default(), ExecMode::Parallel).unwrap();
    let value = serde_json::to_value(&report).unwrap();
    for key in ["suite", "grid", "cases_run", "failures", "max_deviation", "elapsed_ms"] {
        assert!(value.get(key).is_some(), "missing {key}");
    }
    assert_eq!(value["suite"], "characters");
}
