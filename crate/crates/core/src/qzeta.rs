//! Euler q-zeta function `zeta_{E,q}(s, x) = sum_{n>=0} (-1)^n / [n+x]_q^s`
//! and the partial q-zeta function `H_q(s, a; F)`.
//!
//! The terms of the defining series tend to `(1-q)^s`, so the series is
//! only Abel/Euler summable. Two independent routes evaluate it:
//!
//! * [`zeta`] expands `[n+x]_q^(-s) = (1-q)^s sum_k C(s+k-1,k) q^((n+x)k)`
//!   and sums the alternating geometric series in `n`, giving
//!   `(1-q)^s sum_k C(s+k-1,k) q^(xk) / (1 + q^k)`.
//! * [`zeta_euler_transform`] applies the Euler transformation
//!   `sum (-1)^n a_n = sum_k (-1)^k (Delta^k a)_0 / 2^(k+1)` to the raw terms.

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::exactnum::{real_pow, Rational, RealP};
use crate::qeuler::{q_euler_poly, q_int, QBase, QPower};

/// Terms below `10^-(P + SERIES_CUTOFF_DIGITS) * (1 + |sum|)` count as negligible.
const SERIES_CUTOFF_DIGITS: u32 = 15;
/// Consecutive negligible terms required to stop.
const QUIET_RUN: usize = 3;
const MIN_TERMS: usize = 8;
const MAX_CONTINUATION_TERMS: usize = 2_000_000;

/// Validated arguments for a zeta evaluation.
#[derive(Clone, Debug, Serialize)]
pub struct ZetaQuery {
    s: RealP,
    x: RealP,
    q: QBase,
    precision: u32,
}

impl ZetaQuery {
    pub fn new(s: &RealP, x: &RealP, q: &QBase, precision: u32) -> Result<Self> {
        if precision < 15 {
            return domain(format!("precision must be at least 15, got {precision}"));
        }
        if !q.is_zeta_domain() {
            return domain("zeta evaluation needs a base with 0 < q < 1");
        }
        if !x.is_positive() {
            return domain(format!("x must be positive, got {x}"));
        }
        Ok(Self {
            s: s.with_precision(precision),
            x: x.with_precision(precision),
            q: q.clone(),
            precision,
        })
    }

    /// Convenience constructor from exact inputs.
    pub fn from_rationals(s: &Rational, x: &Rational, q: &Rational, precision: u32) -> Result<Self> {
        Self::new(
            &RealP::from_rational(s, precision),
            &RealP::from_rational(x, precision),
            &QBase::zeta(q.clone())?,
            precision,
        )
    }

    pub fn s(&self) -> &RealP {
        &self.s
    }

    pub fn x(&self) -> &RealP {
        &self.x
    }

    pub fn q(&self) -> &QBase {
        &self.q
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }
}

/// Stopping rule shared by both summation routes.
struct Cutoff {
    quiet: usize,
    seen: usize,
    digits: u32,
}

impl Cutoff {
    fn new(precision: u32) -> Self {
        Self { quiet: 0, seen: 0, digits: precision + SERIES_CUTOFF_DIGITS }
    }

    /// Records a term; true once the series may stop.
    fn done(&mut self, term: &RealP, sum: &RealP) -> bool {
        self.seen += 1;
        let threshold = &RealP::pow10_neg(self.digits, sum.precision()) * &(&RealP::one(sum.precision()) + &sum.abs());
        if term.abs() < threshold {
            self.quiet += 1;
        } else {
            self.quiet = 0;
        }
        self.seen >= MIN_TERMS && self.quiet >= QUIET_RUN
    }
}

/// `zeta_{E,q}(s, x)` by the continuation series.
pub fn zeta(zq: &ZetaQuery) -> Result<RealP> {
    let p = zq.precision;
    let q = RealP::from_rational(zq.q.q(), p);
    let u = real_pow(&q, &zq.x)?;
    let prefactor = real_pow(&(&RealP::one(p) - &q), &zq.s)?;
    let one = RealP::one(p);

    let mut coeff = RealP::one(p);
    let mut uk = RealP::one(p);
    let mut qk = RealP::one(p);
    let mut sum = RealP::zero(p);
    let mut cutoff = Cutoff::new(p);
    for k in 0..MAX_CONTINUATION_TERMS {
        let term = (&coeff * &uk).checked_div(&(&one + &qk))?;
        sum = &sum + &term;
        if cutoff.done(&term, &sum) {
            return Ok(&prefactor * &sum);
        }
        // C(s+k, k+1) = C(s+k-1, k) (s+k)/(k+1)
        coeff = (&coeff * &(&zq.s + &RealP::from_i64(k as i64, p))).div_int(k as i64 + 1);
        uk = &uk * &u;
        qk = &qk * &q;
    }
    Err(Error::NonConvergence { levels: MAX_CONTINUATION_TERMS })
}

/// Maximum number of difference levels for a given precision.
pub fn euler_transform_cap(precision: u32) -> usize {
    4 * precision as usize + 200
}

/// Sums `sum_{n>=0} (-1)^n a_n` with the Euler transformation.
fn euler_transform(precision: u32, mut term: impl FnMut(usize) -> Result<RealP>) -> Result<RealP> {
    let cap = euler_transform_cap(precision);
    // diagonal[j] = (Delta^j a)_{n-j} after reading a_n.
    let mut diagonal: Vec<RealP> = Vec::with_capacity(cap);
    let mut sum = RealP::zero(precision);
    let mut cutoff = Cutoff::new(precision);
    for n in 0..cap {
        let mut carry = term(n)?;
        for slot in diagonal.iter_mut() {
            let next = &carry - slot;
            *slot = std::mem::replace(&mut carry, next);
        }
        diagonal.push(carry);
        let mut contribution = diagonal[n].div_pow2(n as u32 + 1);
        if n % 2 == 1 {
            contribution = -contribution;
        }
        sum = &sum + &contribution;
        if cutoff.done(&contribution, &sum) {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence { levels: cap })
}

/// `[y]_q^(-s)` for `qy = q^y`.
fn inverse_q_int_power(qy: &RealP, one_minus_q: &RealP, s: &RealP) -> Result<RealP> {
    let q_int = (&RealP::one(qy.precision()) - qy).checked_div(one_minus_q)?;
    real_pow(&q_int, &-s)
}

/// `zeta_{E,q}(s, x)` by Euler-transforming the defining alternating series.
pub fn zeta_euler_transform(zq: &ZetaQuery) -> Result<RealP> {
    let p = zq.precision;
    let q = RealP::from_rational(zq.q.q(), p);
    let one_minus_q = &RealP::one(p) - &q;
    let u = real_pow(&q, &zq.x)?;
    let mut qn = RealP::one(p);
    euler_transform(p, |n| {
        if n > 0 {
            qn = &qn * &q;
        }
        inverse_q_int_power(&(&u * &qn), &one_minus_q, &zq.s)
    })
}

/// Exact and series values of `zeta_{E,q}(-n, x) = E_{n,q}(x)/2`.
#[derive(Clone, Debug, Serialize)]
pub struct InterpolationCheck {
    pub exact: Rational,
    pub series: RealP,
    pub deviation: RealP,
    pub within_tolerance: bool,
}

pub fn interpolate_check(n: u32, x: u64, q: &QBase, precision: u32) -> Result<InterpolationCheck> {
    if x == 0 {
        return domain("x must be a positive integer");
    }
    let zq = ZetaQuery::from_rationals(
        &Rational::integer(-(n as i64)),
        &Rational::integer(x),
        q.q(),
        precision,
    )?;
    let exact = q_euler_poly(n, &QPower::at_integer(q, x as i64)) / Rational::integer(2);
    let series = zeta(&zq)?;
    let deviation = (&series - &RealP::from_rational(&exact, precision)).abs();
    let within_tolerance = deviation <= RealP::tolerance(precision);
    Ok(InterpolationCheck { exact, series, deviation, within_tolerance })
}

fn check_residue(a: u64, modulus: u64) -> Result<()> {
    if modulus < 3 || modulus.is_multiple_of(2) {
        return domain(format!("F must be an odd integer >= 3, got {modulus}"));
    }
    if a == 0 || a >= modulus {
        return domain(format!("need 0 < a < F, got a = {a}, F = {modulus}"));
    }
    Ok(())
}

/// `[F]_q^(-s) (-1)^a zeta_{E,q^F}(s, a/F)` without range checks on `a`.
pub(crate) fn partial_zeta_unchecked(s: &RealP, a: u64, modulus: u64, q: &QBase, precision: u32) -> Result<RealP> {
    let qf = QBase::zeta(q.raised(modulus as u32).q().clone())?;
    let x = RealP::from_rational(&Rational::new(a, modulus)?, precision);
    let zq = ZetaQuery::new(s, &x, &qf, precision)?;
    let scale = real_pow(&RealP::from_rational(&q_int(modulus, q), precision), &-s.with_precision(precision))?;
    let value = &scale * &zeta(&zq)?;
    Ok(if a % 2 == 1 { -value } else { value })
}

/// Partial Euler q-zeta `H_q(s, a; F) = sum_{m = a mod F, m > 0} (-1)^m / [m]_q^s`,
/// evaluated as `[F]_q^(-s) (-1)^a zeta_{E,q^F}(s, a/F)`.
pub fn partial_zeta(s: &RealP, a: u64, modulus: u64, q: &QBase, precision: u32) -> Result<RealP> {
    check_residue(a, modulus)?;
    if !q.is_zeta_domain() {
        return domain("partial zeta needs a base with 0 < q < 1");
    }
    partial_zeta_unchecked(s, a, modulus, q, precision)
}

/// `H_q(s, a; F)` from its defining series `sum_n (-1)^(a+nF) / [a+nF]_q^s`,
/// Euler-transformed (for odd `F`, `(-1)^(nF) = (-1)^n`).
pub fn partial_zeta_direct(s: &RealP, a: u64, modulus: u64, q: &QBase, precision: u32) -> Result<RealP> {
    check_residue(a, modulus)?;
    if !q.is_zeta_domain() {
        return domain("partial zeta needs a base with 0 < q < 1");
    }
    let s = s.with_precision(precision);
    let qr = RealP::from_rational(q.q(), precision);
    let one_minus_q = &RealP::one(precision) - &qr;
    let step = q.pow(modulus as i64);
    let mut power = q.pow(a as i64);
    let value = euler_transform(precision, |n| {
        if n > 0 {
            power = &power * &step;
        }
        inverse_q_int_power(&RealP::from_rational(&power, precision), &one_minus_q, &s)
    })?;
    Ok(if a % 2 == 1 { -value } else { value })
}

/// Exact `H_q(-n, a; F) = (-1)^a [F]_q^n E_{n,q^F}(a/F) / 2`.
///
/// `(q^F)^(a/F) = q^a` is recovered through the exact root, so the value is
/// rational for every rational `q`.
pub fn partial_zeta_special_value(n: u32, a: u64, modulus: u64, q: &QBase) -> Result<Rational> {
    check_residue(a, modulus)?;
    if !q.is_zeta_domain() {
        return domain("partial zeta needs a base with 0 < q < 1");
    }
    let qf = q.raised(modulus as u32);
    let qp = QPower::at(&qf, &Rational::new(a, modulus)?)?;
    let value = q_int(modulus, q).pow(n as i64)? * q_euler_poly(n, &qp) / Rational::integer(2);
    Ok(Rational::sign_pow(a as i64) * value)
}
