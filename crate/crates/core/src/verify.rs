//! Identity verification suites.
//!
//! Each suite expands a parameter grid into independent cases, evaluates
//! both sides of an identity for every case (in parallel when available),
//! and folds the results, in grid order, into a [`VerificationReport`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::classical;
use crate::dirichlet::{characters_mod, generalized_q_euler, l_function, l_function_special_value};
use crate::error::{domain, Error, Result};
use crate::exactnum::{ComplexP, Rational, RealP, DEFAULT_PRECISION};
use crate::par::{map_ordered, ExecMode};
use crate::qeuler::{self, QBase, QPower};
use crate::qzeta::{self, ZetaQuery};

pub const MAX_M: u32 = 30;
pub const MAX_N: u32 = 60;
pub const MAX_K: u64 = 500;
pub const MAX_X: u32 = 20;
pub const MAX_F: u32 = 15;
pub const MAX_MODULUS: u64 = 105;
pub const MIN_PRECISION: u32 = 15;
pub const MAX_PRECISION: u32 = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Thm2,
    Thm3,
    Thm4,
    Weighted,
    Classical,
    Limit,
    Zeta,
    PartialZeta,
    Lfunction,
    Characters,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Classical,
        Suite::Thm2,
        Suite::Thm3,
        Suite::Weighted,
        Suite::Thm4,
        Suite::Limit,
        Suite::Zeta,
        Suite::PartialZeta,
        Suite::Lfunction,
        Suite::Characters,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm2 => "thm2",
            Suite::Thm3 => "thm3",
            Suite::Thm4 => "thm4",
            Suite::Weighted => "weighted",
            Suite::Classical => "classical",
            Suite::Limit => "limit",
            Suite::Zeta => "zeta",
            Suite::PartialZeta => "partial-zeta",
            Suite::Lfunction => "lfunction",
            Suite::Characters => "characters",
        }
    }

    /// Parses a suite name, with `all` expanding to every suite.
    pub fn parse_selection(name: &str) -> Result<Vec<Suite>> {
        if name == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        name.parse().map(|s| vec![s])
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite {s:?}")))
    }
}

/// Overrides for the default grids. `None` keeps the suite's default.
#[derive(Clone, Debug)]
pub struct Bounds {
    pub max_m: Option<u32>,
    pub max_n: Option<u32>,
    pub max_k: Option<u64>,
    pub max_x: Option<u32>,
    pub qs: Option<Vec<Rational>>,
    pub fs: Option<Vec<u32>>,
    pub moduli: Option<Vec<u64>>,
    pub precision: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            max_m: None,
            max_n: None,
            max_k: None,
            max_x: None,
            qs: None,
            fs: None,
            moduli: None,
            precision: DEFAULT_PRECISION,
        }
    }
}

impl Bounds {
    /// Rejects bounds outside the documented maxima or outside a suite's domain.
    pub fn validate(&self, suite: Suite) -> Result<()> {
        let check = |name: &str, v: Option<u64>, max: u64| match v {
            Some(v) if v > max => domain(format!("{name} = {v} exceeds the maximum {max}")),
            _ => Ok(()),
        };
        check("max-m", self.max_m.map(u64::from), MAX_M as u64)?;
        check("max-n", self.max_n.map(u64::from), MAX_N as u64)?;
        check("max-k", self.max_k, MAX_K)?;
        check("max-x", self.max_x.map(u64::from), MAX_X as u64)?;
        if !(MIN_PRECISION..=MAX_PRECISION).contains(&self.precision) {
            return domain(format!("precision must be in {MIN_PRECISION}..={MAX_PRECISION}"));
        }
        for &f in self.fs.iter().flatten() {
            if f == 0 || f % 2 == 0 || f > MAX_F {
                return domain(format!("f must be odd and in 1..={MAX_F}, got {f}"));
            }
        }
        for &d in self.moduli.iter().flatten() {
            if d == 0 || d % 2 == 0 || d > MAX_MODULUS {
                return domain(format!("modulus must be odd and in 1..={MAX_MODULUS}, got {d}"));
            }
        }
        let zeta_like = matches!(suite, Suite::Zeta | Suite::PartialZeta | Suite::Lfunction);
        for q in self.qs.iter().flatten() {
            if zeta_like {
                QBase::zeta(q.clone())?;
            } else {
                QBase::new(q.clone())?;
            }
        }
        Ok(())
    }

    fn qs_or(&self, default: &[(i64, i64)]) -> Vec<Rational> {
        self.qs
            .clone()
            .unwrap_or_else(|| default.iter().map(|&(n, d)| Rational::frac(n, d)).collect())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub inputs: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
    pub deviation: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub grid: BTreeMap<String, String>,
    pub cases_run: usize,
    pub failures: Vec<Failure>,
    /// `"exact"` when every comparison was an exact rational equality that held.
    pub max_deviation: String,
    pub tolerance: String,
    pub passed: bool,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug)]
enum Deviation {
    Exact(Rational),
    Real(RealP),
    /// Structural checks with no numeric deviation.
    None,
}

#[derive(Clone, Debug)]
struct Case {
    inputs: Vec<(&'static str, String)>,
    lhs: String,
    rhs: String,
    deviation: Deviation,
    passed: bool,
}

type Inputs = Vec<(&'static str, String)>;

impl Case {
    fn exact(inputs: Inputs, lhs: Rational, rhs: Rational) -> Self {
        let dev = (&lhs - &rhs).abs();
        Self { inputs, passed: dev.is_zero(), lhs: lhs.to_string(), rhs: rhs.to_string(), deviation: Deviation::Exact(dev) }
    }

    fn real(inputs: Inputs, lhs: RealP, rhs: RealP) -> Self {
        let dev = (&lhs - &rhs).abs();
        let passed = dev <= RealP::tolerance(lhs.precision().min(rhs.precision()));
        Self { inputs, passed, lhs: lhs.to_string(), rhs: rhs.to_string(), deviation: Deviation::Real(dev) }
    }

    fn complex(inputs: Inputs, lhs: ComplexP, rhs: ComplexP) -> Result<Self> {
        let dev = (&lhs - &rhs).abs()?;
        let passed = dev <= RealP::tolerance(lhs.precision().min(rhs.precision()));
        Ok(Self { inputs, passed, lhs: lhs.to_string(), rhs: rhs.to_string(), deviation: Deviation::Real(dev) })
    }

    fn predicate(inputs: Inputs, lhs: String, rhs: String, passed: bool) -> Self {
        Self { inputs, lhs, rhs, deviation: Deviation::None, passed }
    }

    fn error(inputs: Inputs, err: &Error) -> Self {
        Self { inputs, lhs: format!("error: {err}"), rhs: String::new(), deviation: Deviation::None, passed: false }
    }
}

type Job = Box<dyn Fn() -> Result<Case> + Send + Sync>;

fn q_str(q: &Rational) -> String {
    q.to_string()
}

fn list<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

struct Plan {
    grid: BTreeMap<String, String>,
    jobs: Vec<Job>,
    exact_only: bool,
}

impl Plan {
    fn new(exact_only: bool) -> Self {
        Self { grid: BTreeMap::new(), jobs: Vec::new(), exact_only }
    }

    fn grid(&mut self, key: &str, value: impl Into<String>) {
        self.grid.insert(key.to_string(), value.into());
    }

    fn push(&mut self, job: impl Fn() -> Result<Case> + Send + Sync + 'static) {
        self.jobs.push(Box::new(job));
    }
}

fn plan_thm3(b: &Bounds, weighted: bool) -> Plan {
    let max_m = b.max_m.unwrap_or(10);
    let max_n = b.max_n.unwrap_or(20);
    let qs = b.qs_or(&[(1, 3), (1, 2), (2, 3), (3, 2), (5, 2)]);
    let mut plan = Plan::new(true);
    plan.grid("m", format!("1..={max_m}"));
    plan.grid("n", format!("1..={max_n}"));
    plan.grid("q", list(&qs));
    for q in qs {
        for m in 1..=max_m {
            for n in 1..=max_n as u64 {
                let q = q.clone();
                plan.push(move || {
                    let base = QBase::new(q.clone())?;
                    let inputs = vec![("m", m.to_string()), ("n", n.to_string()), ("q", q_str(&q))];
                    Ok(if weighted {
                        Case::exact(
                            inputs,
                            qeuler::weighted_alt_q_power_sum_closed(m, n, &base),
                            qeuler::weighted_alt_q_power_sum(m, n, &base),
                        )
                    } else {
                        Case::exact(inputs, qeuler::alt_q_power_sum_closed(m, n, &base), qeuler::alt_q_power_sum(m, n, &base))
                    })
                });
            }
        }
    }
    plan
}

fn plan_thm2(b: &Bounds) -> Plan {
    let max_n = b.max_n.unwrap_or(10);
    let max_x = b.max_x.unwrap_or(8);
    let qs = b.qs_or(&[(1, 3), (1, 2), (2, 3), (3, 2)]);
    let mut plan = Plan::new(true);
    plan.grid("n", format!("0..={max_n}"));
    plan.grid("x", format!("0..={max_x}"));
    plan.grid("q", list(&qs));
    for q in qs {
        for n in 0..=max_n {
            for x in 0..=max_x as i64 {
                let q = q.clone();
                plan.push(move || {
                    let qp = QPower::at_integer(&QBase::new(q.clone())?, x);
                    let inputs = vec![("n", n.to_string()), ("x", x.to_string()), ("q", q_str(&q))];
                    Ok(Case::exact(inputs, qeuler::q_euler_poly(n, &qp), qeuler::q_euler_poly_via_numbers(n, &qp)))
                });
            }
        }
    }
    plan
}

fn plan_thm4(b: &Bounds) -> Plan {
    let max_m = b.max_m.unwrap_or(8);
    let max_x = b.max_x.unwrap_or(5);
    let fs = b.fs.clone().unwrap_or_else(|| vec![1, 3, 5]);
    let qs = b.qs_or(&[(1, 3), (1, 2), (2, 3)]);
    let mut plan = Plan::new(true);
    plan.grid("m", format!("0..={max_m}"));
    plan.grid("f", list(&fs));
    plan.grid("x", format!("0..={max_x}"));
    plan.grid("q", list(&qs));
    for q in qs {
        for &f in &fs {
            for m in 0..=max_m {
                for x in 0..=max_x as i64 {
                    let q = q.clone();
                    plan.push(move || {
                        let base = QBase::new(q.clone())?;
                        let inputs =
                            vec![("m", m.to_string()), ("f", f.to_string()), ("x", x.to_string()), ("q", q_str(&q))];
                        let lhs = qeuler::distribution_lhs(m, f, x, &base)?;
                        Ok(Case::exact(inputs, lhs, qeuler::q_euler_poly(m, &QPower::at_integer(&base, x))))
                    });
                }
            }
        }
    }
    plan
}

fn plan_classical(b: &Bounds) -> Plan {
    let max_m = b.max_m.unwrap_or(12);
    let max_k = b.max_k.unwrap_or(50);
    let mut plan = Plan::new(true);
    plan.grid("m", format!("1..={max_m}"));
    plan.grid("k", format!("1..={max_k}"));
    for m in 1..=max_m {
        for k in 1..=max_k {
            plan.push(move || {
                let inputs = vec![("identity", "power-sum".into()), ("n", m.to_string()), ("k", k.to_string())];
                Ok(Case::exact(inputs, classical::power_sum_closed(m, k), classical::power_sum(m, k)))
            });
            plan.push(move || {
                let inputs = vec![("identity", "alternating".into()), ("m", m.to_string()), ("k", k.to_string())];
                Ok(Case::exact(inputs, classical::alt_power_sum_closed(m, k), classical::alt_power_sum(m, k)))
            });
        }
    }
    for (n, num, den) in [(1usize, -1, 2), (3, 1, 4), (7, 17, 8)] {
        plan.push(move || {
            Ok(Case::exact(
                vec![("identity", "euler-number".into()), ("n", n.to_string())],
                classical::euler_number(n),
                Rational::frac(num, den),
            ))
        });
    }
    plan
}

/// Exact `|E_{n,1-eps} - E_n|`.
pub fn limit_gap(n: u32, eps: &Rational) -> Result<Rational> {
    let q = QBase::new(Rational::one() - eps)?;
    Ok((qeuler::q_euler_number(n, &q) - classical::euler_number(n as usize)).abs())
}

fn plan_limit(b: &Bounds) -> Plan {
    let max_n = b.max_n.unwrap_or(8);
    let mut plan = Plan::new(false);
    plan.grid("n", format!("0..={max_n}"));
    plan.grid("eps", "1/100,1/1000,1/10000".to_string());
    for n in 0..=max_n {
        plan.push(move || {
            let eps: Vec<Rational> = [100, 1000, 10000].iter().map(|&d| Rational::frac(1, d)).collect();
            let gaps = eps.iter().map(|e| limit_gap(n, e)).collect::<Result<Vec<_>>>()?;
            let ratios: Vec<Rational> = gaps.iter().zip(&eps).map(|(g, e)| g / e).collect();
            let monotone = gaps.windows(2).all(|w| w[1] <= w[0]);
            let bound = &ratios[0] * Rational::integer(2);
            let bounded = ratios.iter().all(|r| *r <= bound);
            let show = |v: &[Rational]| v.iter().map(|x| format!("{:.3e}", x.to_f64())).collect::<Vec<_>>().join(",");
            Ok(Case::predicate(
                vec![("n", n.to_string())],
                format!("gaps [{}], gap/eps [{}]", show(&gaps), show(&ratios)),
                format!("non-increasing, gap/eps <= {:.3e}", bound.to_f64()),
                monotone && bounded,
            ))
        });
    }
    plan
}

fn plan_zeta(b: &Bounds) -> Plan {
    let p = b.precision;
    let qs = b.qs_or(&[(1, 5), (1, 2), (4, 5)]);
    let ss: Vec<Rational> = ["-3", "-2", "-1", "-1/2", "0", "1/2", "1", "2"].iter().map(|s| s.parse().unwrap()).collect();
    let xs: Vec<Rational> = ["1/2", "1", "2", "7/2"].iter().map(|s| s.parse().unwrap()).collect();
    let interp_qs = b.qs_or(&[(1, 3), (1, 2), (2, 3)]);
    let max_n = b.max_n.unwrap_or(8);
    let max_x = b.max_x.unwrap_or(5);
    let mut plan = Plan::new(false);
    plan.grid("dual-route.s", list(&ss));
    plan.grid("dual-route.x", list(&xs));
    plan.grid("dual-route.q", list(&qs));
    plan.grid("interpolation.n", format!("0..={max_n}"));
    plan.grid("interpolation.x", format!("1..={max_x}"));
    plan.grid("interpolation.q", list(&interp_qs));
    plan.grid("precision", p.to_string());
    for q in &qs {
        for s in &ss {
            for x in &xs {
                let (q, s, x) = (q.clone(), s.clone(), x.clone());
                plan.push(move || {
                    let inputs = vec![("check", "dual-route".into()), ("s", q_str(&s)), ("x", q_str(&x)), ("q", q_str(&q))];
                    let zq = ZetaQuery::from_rationals(&s, &x, &q, p)?;
                    Ok(Case::real(inputs, qzeta::zeta(&zq)?, qzeta::zeta_euler_transform(&zq)?))
                });
            }
        }
    }
    for q in &interp_qs {
        for n in 0..=max_n {
            for x in 1..=max_x as u64 {
                let q = q.clone();
                plan.push(move || {
                    let inputs = vec![("check", "interpolation".into()), ("n", n.to_string()), ("x", x.to_string()), ("q", q_str(&q))];
                    let c = qzeta::interpolate_check(n, x, &QBase::zeta(q.clone())?, p)?;
                    Ok(Case::real(inputs, c.series, RealP::from_rational(&c.exact, p)))
                });
            }
        }
    }
    plan
}

fn plan_partial_zeta(b: &Bounds) -> Plan {
    let p = b.precision;
    let max_n = b.max_n.unwrap_or(6);
    let fs = b.fs.clone().unwrap_or_else(|| vec![3, 5]);
    let qs = b.qs_or(&[(1, 3), (1, 2)]);
    let mut plan = Plan::new(false);
    plan.grid("n", format!("1..={max_n}"));
    plan.grid("F", list(&fs));
    plan.grid("a", "1..F".to_string());
    plan.grid("q", list(&qs));
    plan.grid("precision", p.to_string());
    for q in &qs {
        for &f in fs.iter().filter(|&&f| f >= 3) {
            for a in 1..f as u64 {
                for n in 1..=max_n {
                    let q1 = q.clone();
                    let inputs = move |check: &str| {
                        vec![("check", check.to_string()), ("n", n.to_string()), ("a", a.to_string()), ("F", f.to_string()), ("q", q_str(&q1))]
                    };
                    let q = q.clone();
                    let i1 = inputs.clone();
                    let qa = q.clone();
                    plan.push(move || {
                        let base = QBase::zeta(qa.clone())?;
                        let s = RealP::from_i64(-(n as i64), p);
                        let special = qzeta::partial_zeta_special_value(n, a, f as u64, &base)?;
                        Ok(Case::real(i1("series-vs-special"), qzeta::partial_zeta(&s, a, f as u64, &base, p)?, RealP::from_rational(&special, p)))
                    });
                    let i2 = inputs.clone();
                    let qb = q.clone();
                    plan.push(move || {
                        let base = QBase::zeta(qb.clone())?;
                        let s = RealP::from_i64(-(n as i64), p);
                        let special = qzeta::partial_zeta_special_value(n, a, f as u64, &base)?;
                        Ok(Case::real(i2("direct-series-vs-special"), qzeta::partial_zeta_direct(&s, a, f as u64, &base, p)?, RealP::from_rational(&special, p)))
                    });
                    let i3 = inputs;
                    plan.push(move || {
                        let base = QBase::zeta(q.clone())?;
                        let special = qzeta::partial_zeta_special_value(n, a, f as u64, &base)?;
                        // Right-hand side evaluated with t = q^a supplied directly.
                        let qf = base.raised(f);
                        let inner = qeuler::q_euler_poly(n, &QPower::from_value(&qf, base.pow(a as i64))?);
                        let rhs = Rational::sign_pow(a as i64) * qeuler::q_int(f as u64, &base).pow(n as i64)? * inner
                            / Rational::integer(2);
                        Ok(Case::exact(i3("special-value-formula"), special, rhs))
                    });
                }
            }
        }
    }
    plan
}

fn plan_lfunction(b: &Bounds) -> Plan {
    let p = b.precision;
    let max_n = b.max_n.unwrap_or(6);
    let moduli = b.moduli.clone().unwrap_or_else(|| vec![3, 5]);
    let qs = b.qs_or(&[(1, 3), (1, 2)]);
    let mut plan = Plan::new(false);
    plan.grid("n", format!("0..={max_n}"));
    plan.grid("modulus", list(&moduli));
    plan.grid("q", list(&qs));
    plan.grid("precision", p.to_string());
    for &d in &moduli {
        let count = characters_mod(d).map(|g| g.len()).unwrap_or(0);
        for index in 0..count {
            for q in &qs {
                for n in 0..=max_n {
                    let inputs = {
                        let q = q.clone();
                        move |check: &str| {
                            vec![("check", check.to_string()), ("n", n.to_string()), ("modulus", d.to_string()), ("char", index.to_string()), ("q", q_str(&q))]
                        }
                    };
                    let i1 = inputs.clone();
                    let q1 = q.clone();
                    plan.push(move || {
                        let group = characters_mod(d)?;
                        let chi = group.get(index).expect("index in range");
                        let base = QBase::zeta(q1.clone())?;
                        let s = RealP::from_i64(-(n as i64), p);
                        let expect = generalized_q_euler(n, chi, &base)?.halved().to_complex(p);
                        Case::complex(i1("series-vs-generalized"), l_function(&s, chi, &base, p)?, expect)
                    });
                    let q2 = q.clone();
                    plan.push(move || {
                        let group = characters_mod(d)?;
                        let chi = group.get(index).expect("index in range");
                        let base = QBase::zeta(q2.clone())?;
                        let exact = generalized_q_euler(n, chi, &base)?.halved();
                        let special = l_function_special_value(n, chi, &base)?;
                        let inputs = inputs("special-vs-generalized");
                        match (special.as_rational(), exact.as_rational()) {
                            (Some(l), Some(r)) => Ok(Case::exact(inputs, l, r)),
                            _ => Case::complex(inputs, special.to_complex(p), exact.to_complex(p)),
                        }
                    });
                }
            }
        }
    }
    plan
}

fn plan_characters(b: &Bounds) -> Plan {
    let moduli = b.moduli.clone().unwrap_or_else(|| vec![3, 5, 9, 15]);
    let mut plan = Plan::new(false);
    plan.grid("modulus", list(&moduli));
    for d in moduli {
        plan.push(move || {
            let group = characters_mod(d)?;
            let phi = (1..=d).filter(|&a| num_integer::gcd(a, d) == 1).count();
            let principal = group.characters().iter().filter(|c| c.is_principal()).count();
            let multiplicative = group.characters().iter().all(|c| c.is_multiplicative());
            let orthogonal = group.characters().iter().all(|c| c.is_principal() || c.sums_to_zero());
            let closed = group
                .characters()
                .iter()
                .all(|a| group.characters().iter().all(|b| group.contains(&a.product(b))));
            Ok(Case::predicate(
                vec![("modulus", d.to_string())],
                format!(
                    "size {}, principal {principal}, multiplicative {multiplicative}, orthogonal {orthogonal}, closed {closed}",
                    group.len()
                ),
                format!("size {phi}, principal 1, multiplicative, orthogonal, closed"),
                group.len() == phi && principal == 1 && multiplicative && orthogonal && closed,
            ))
        });
    }
    plan
}

fn plan(suite: Suite, bounds: &Bounds) -> Plan {
    match suite {
        Suite::Thm2 => plan_thm2(bounds),
        Suite::Thm3 => plan_thm3(bounds, false),
        Suite::Weighted => plan_thm3(bounds, true),
        Suite::Thm4 => plan_thm4(bounds),
        Suite::Classical => plan_classical(bounds),
        Suite::Limit => plan_limit(bounds),
        Suite::Zeta => plan_zeta(bounds),
        Suite::PartialZeta => plan_partial_zeta(bounds),
        Suite::Lfunction => plan_lfunction(bounds),
        Suite::Characters => plan_characters(bounds),
    }
}

/// Runs one suite. Bound errors are returned; per-case errors become failures.
pub fn run_suite(suite: Suite, bounds: &Bounds, mode: ExecMode) -> Result<VerificationReport> {
    bounds.validate(suite)?;
    let start = Instant::now();
    let plan = plan(suite, bounds);
    let cases: Vec<Case> = map_ordered(mode, &plan.jobs, |job| {
        job().unwrap_or_else(|e| Case::error(Vec::new(), &e))
    });
    let elapsed_ms = start.elapsed().as_millis() as u64;

    let p = bounds.precision;
    let mut failures = Vec::new();
    let mut max_exact = Rational::zero();
    let mut max_real: Option<RealP> = None;
    for case in &cases {
        let deviation = match &case.deviation {
            Deviation::Exact(d) => {
                if *d > max_exact {
                    max_exact = d.clone();
                }
                d.to_string()
            }
            Deviation::Real(d) => {
                if max_real.as_ref().is_none_or(|m| d > m) {
                    max_real = Some(d.clone());
                }
                d.to_string()
            }
            Deviation::None => "n/a".to_string(),
        };
        if !case.passed {
            failures.push(Failure {
                inputs: case.inputs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
                lhs: case.lhs.clone(),
                rhs: case.rhs.clone(),
                deviation,
            });
        }
    }
    let max_deviation = match max_real {
        Some(real) => {
            let exact_as_real = RealP::from_rational(&max_exact, p);
            if exact_as_real > real { exact_as_real } else { real }.to_string()
        }
        None if max_exact.is_zero() && plan.exact_only => "exact".to_string(),
        None if plan.exact_only => max_exact.to_string(),
        None => "n/a".to_string(),
    };
    let tolerance = if plan.exact_only { "exact".to_string() } else { format!("1e-{}", p.saturating_sub(10)) };
    Ok(VerificationReport {
        suite,
        grid: plan.grid,
        cases_run: cases.len(),
        passed: failures.is_empty(),
        failures,
        max_deviation,
        tolerance,
        elapsed_ms,
    })
}

/// Runs each suite in turn.
pub fn run_suites(suites: &[Suite], bounds: &Bounds, mode: ExecMode) -> Result<Vec<VerificationReport>> {
    suites.iter().map(|&s| run_suite(s, bounds, mode)).collect()
}
