//! Acceptance criteria, one line per criterion.
//!
//! Run with `cargo test -p qeuler-core --test acceptance`. Exits nonzero if
//! any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qeuler_core::classical::euler_number;
use qeuler_core::dirichlet::{characters_mod, generalized_q_euler, l_function};
use qeuler_core::par::{map_ordered, ExecMode};
use qeuler_core::qeuler::{
    alt_q_power_sum, alt_q_power_sum_closed, distribution_lhs, weighted_alt_q_power_sum,
    weighted_alt_q_power_sum_closed,
};
use qeuler_core::qzeta::{
    interpolate_check, partial_zeta, partial_zeta_special_value, zeta, zeta_euler_transform, ZetaQuery,
};
use qeuler_core::verify::{limit_gap, run_suite, Bounds, Suite};
use qeuler_core::{QBase, Rational, RealP};

const P: u32 = 50;

fn r(n: i64, d: i64) -> Rational {
    Rational::frac(n, d)
}

fn tol() -> RealP {
    // 10^-40 at P = 50.
    RealP::pow10_neg(40, P)
}

fn zq(q: i64, qd: i64) -> QBase {
    QBase::zeta(r(q, qd)).unwrap()
}

fn base(q: i64, qd: i64) -> QBase {
    QBase::new(r(q, qd)).unwrap()
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

// Exact suites: every case must agree with zero deviation.
fn suite_ok(suite: Suite, expected_cases: usize) -> (bool, String) {
    let report = run_suite(suite, &Bounds::default(), ExecMode::Parallel).unwrap();
    let ok = report.passed && report.cases_run == expected_cases && report.max_deviation == "exact";
    let detail = format!(
        "{} cases, {} failures, max deviation {}",
        report.cases_run,
        report.failures.len(),
        report.max_deviation
    );
    (ok, detail)
}

fn criterion_1() -> Outcome {
    let (ok, detail) = suite_ok(Suite::Thm3, 1000);
    let q = base(1, 2);
    let anchors = alt_q_power_sum_closed(2, 3, &q) == r(5, 4)
        && alt_q_power_sum(2, 3, &q) == r(5, 4)
        && alt_q_power_sum_closed(2, 2, &q) == r(-1, 1)
        && alt_q_power_sum(2, 2, &q) == r(-1, 1);
    outcome(ok && anchors, format!("{detail}; anchors {anchors}"))
}

fn criterion_2() -> Outcome {
    let (ok, detail) = suite_ok(Suite::Weighted, 1000);
    let q = base(1, 2);
    let anchors = weighted_alt_q_power_sum_closed(1, 2, &q) == r(-1, 2)
        && weighted_alt_q_power_sum(1, 2, &q) == r(-1, 2)
        && weighted_alt_q_power_sum_closed(1, 3, &q) == r(-1, 8)
        && weighted_alt_q_power_sum(1, 3, &q) == r(-1, 8);
    outcome(ok && anchors, format!("{detail}; anchors {anchors}"))
}

fn criterion_3() -> Outcome {
    let (ok, detail) = suite_ok(Suite::Thm2, 11 * 9 * 4);
    outcome(ok, detail)
}

fn criterion_4() -> Outcome {
    let (ok, detail) = suite_ok(Suite::Thm4, 9 * 3 * 6 * 3);
    let anchor = distribution_lhs(1, 3, 0, &base(1, 2)).unwrap() == r(-2, 3);
    outcome(ok && anchor, format!("{detail}; anchor {anchor}"))
}

fn criterion_5() -> Outcome {
    let (ok, detail) = suite_ok(Suite::Classical, 12 * 50 * 2 + 3);
    let anchors = euler_number(1) == r(-1, 2) && euler_number(3) == r(1, 4) && euler_number(7) == r(17, 8);
    outcome(ok && anchors, format!("{detail}; anchors {anchors}"))
}

fn criterion_6() -> Outcome {
    let eps = [r(1, 100), r(1, 1000), r(1, 10000)];
    let mut ok = true;
    let mut worst = 0.0f64;
    for n in 0..=8u32 {
        let gaps: Vec<Rational> = eps.iter().map(|e| limit_gap(n, e).unwrap()).collect();
        let ratios: Vec<Rational> = gaps.iter().zip(&eps).map(|(g, e)| g / e).collect();
        ok &= gaps.windows(2).all(|w| w[1] <= w[0]);
        let bound = &ratios[0] * r(2, 1);
        ok &= ratios.iter().all(|x| *x <= bound);
        if !ratios[0].is_zero() {
            for x in &ratios {
                worst = worst.max((x / &ratios[0]).to_f64());
            }
        }
    }
    outcome(ok, format!("n <= 8, worst (gap/eps) / (gap/eps at 1e-2) = {worst:.4}"))
}

fn criterion_7() -> Outcome {
    let mut points = Vec::new();
    for q in [(1, 3), (1, 2), (2, 3)] {
        for n in 0..=8u32 {
            for x in 1..=5u64 {
                points.push((q, n, x));
            }
        }
    }
    let devs = map_ordered(ExecMode::Parallel, &points, |&((a, b), n, x)| {
        interpolate_check(n, x, &zq(a, b), P).unwrap().deviation
    });
    let max = devs.iter().fold(RealP::zero(P), |m, d| if *d > m { d.clone() } else { m });
    let at = |s: i64, x: i64, q: Rational| zeta(&ZetaQuery::from_rationals(&r(s, 1), &r(x, 1), &q, P).unwrap()).unwrap();
    let a1 = (&at(-1, 1, r(1, 2)) - &RealP::from_rational(&r(1, 3), P)).abs() <= tol();
    let a2 = (&at(-2, 2, r(1, 2)) - &RealP::from_rational(&r(13, 15), P)).abs() <= tol();
    outcome(max <= tol() && a1 && a2, format!("{} points, max deviation {}; anchors {}", points.len(), max, a1 && a2))
}

fn criterion_8() -> Outcome {
    let ss = ["-3", "-2", "-1", "-1/2", "0", "1/2", "1", "2"];
    let xs = ["1/2", "1", "2", "7/2"];
    let qs = ["1/5", "1/2", "4/5"];
    let mut points = Vec::new();
    for s in ss {
        for x in xs {
            for q in qs {
                points.push((s.parse::<Rational>().unwrap(), x.parse::<Rational>().unwrap(), q.parse::<Rational>().unwrap()));
            }
        }
    }
    let devs = map_ordered(ExecMode::Parallel, &points, |(s, x, q)| {
        let query = ZetaQuery::from_rationals(s, x, q, P).unwrap();
        (&zeta(&query).unwrap() - &zeta_euler_transform(&query).unwrap()).abs()
    });
    let max = devs.iter().fold(RealP::zero(P), |m, d| if *d > m { d.clone() } else { m });
    outcome(points.len() == 96 && max <= tol(), format!("{} points, max |continuation - euler transform| {}", points.len(), max))
}

fn criterion_9() -> Outcome {
    let q = zq(1, 2);
    let minus_one = RealP::from_i64(-1, P);
    let h1 = partial_zeta(&minus_one, 1, 3, &q, P).unwrap();
    let h2 = partial_zeta(&minus_one, 2, 3, &q, P).unwrap();
    let anchors_h = partial_zeta_special_value(1, 1, 3, &q).unwrap() == r(-1, 9)
        && partial_zeta_special_value(1, 2, 3, &q).unwrap() == r(5, 9)
        && (&h1 - &RealP::from_rational(&r(-1, 9), P)).abs() <= tol()
        && (&h2 - &RealP::from_rational(&r(5, 9), P)).abs() <= tol();

    let mut h_points = Vec::new();
    for qv in [(1, 3), (1, 2)] {
        for f in [3u64, 5] {
            for a in 1..f {
                for n in 1..=6u32 {
                    h_points.push((qv, f, a, n));
                }
            }
        }
    }
    let h_ok = map_ordered(ExecMode::Parallel, &h_points, |&((qa, qb), f, a, n)| {
        let base = zq(qa, qb);
        let series = partial_zeta(&RealP::from_i64(-(n as i64), P), a, f, &base, P).unwrap();
        let exact = partial_zeta_special_value(n, a, f, &base).unwrap();
        (&series - &RealP::from_rational(&exact, P)).abs() <= tol()
    });

    let mut l_points = Vec::new();
    for d in [3u64, 5] {
        let count = characters_mod(d).unwrap().len();
        for index in 0..count {
            for qv in [(1, 3), (1, 2)] {
                for n in 0..=6u32 {
                    l_points.push((d, index, qv, n));
                }
            }
        }
    }
    let l_ok = map_ordered(ExecMode::Parallel, &l_points, |&(d, index, (qa, qb), n)| {
        let group = characters_mod(d).unwrap();
        let chi = group.get(index).unwrap();
        let base = zq(qa, qb);
        let l = l_function(&RealP::from_i64(-(n as i64), P), chi, &base, P).unwrap();
        let e = generalized_q_euler(n, chi, &base).unwrap().halved().to_complex(P);
        (&l - &e).abs().unwrap() <= tol()
    });

    let chi3 = characters_mod(3).unwrap().get(1).unwrap().clone();
    let l_anchor = l_function(&minus_one, &chi3, &q, P).unwrap();
    let anchors_l = (&l_anchor.re - &RealP::from_rational(&r(-2, 3), P)).abs() <= tol()
        && l_anchor.im.abs() <= tol()
        && generalized_q_euler(1, &chi3, &q).unwrap().as_rational() == Some(r(-4, 3));

    let h_pass = h_ok.iter().filter(|&&b| b).count();
    let l_pass = l_ok.iter().filter(|&&b| b).count();
    outcome(
        anchors_h && anchors_l && h_pass == h_ok.len() && l_pass == l_ok.len(),
        format!(
            "H_q special values {h_pass}/{}, l-function special values {l_pass}/{}, anchors {}",
            h_ok.len(),
            l_ok.len(),
            anchors_h && anchors_l
        ),
    )
}

fn criterion_10() -> Outcome {
    let mut ok = true;
    let mut sizes = Vec::new();
    for (d, phi) in [(3u64, 2usize), (5, 4), (9, 6), (15, 8)] {
        let g = characters_mod(d).unwrap();
        sizes.push(format!("phi({d})={}", g.len()));
        ok &= g.len() == phi;
        ok &= g.characters().iter().all(|c| c.is_multiplicative());
        ok &= g.characters().iter().all(|c| c.is_principal() || c.sums_to_zero());
        ok &= g.characters().iter().filter(|c| c.is_principal()).count() == 1;
    }
    outcome(ok, sizes.join(", "))
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 alternating q-power sums (closed vs brute force)", Duration::from_secs(5), criterion_1),
        ("2 weighted alternating q-power sums", Duration::from_secs(5), criterion_2),
        ("3 two forms of the q-Euler polynomials", Duration::from_secs(2), criterion_3),
        ("4 distribution relation", Duration::from_secs(5), criterion_4),
        ("5 classical power sums and Euler numbers", Duration::from_secs(2), criterion_5),
        ("6 q -> 1 limit of E_{n,q}", Duration::from_secs(2), criterion_6),
        ("7 zeta interpolation at negative integers", Duration::from_secs(10), criterion_7),
        ("8 dual-route zeta agreement", Duration::from_secs(30), criterion_8),
        ("9 partial zeta and q-L-function special values", Duration::from_secs(30), criterion_9),
        ("10 character groups", Duration::from_secs(1), criterion_10),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= limit;
        let ok = result.ok && in_time;
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {name}: {} ({}; {:.2}s of {}s)",
            if ok { "PASS" } else { "FAIL" },
            result.detail,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        ExitCode::FAILURE
    } else {
        println!("all acceptance criteria passed");
        ExitCode::SUCCESS
    }
}
