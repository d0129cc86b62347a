use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::rational::Rational;
use super::real::RealP;
use crate::error::{domain, Error, Result};

/// Exact `q^r` for rational `r = a/f`, if the f-th root is rational.
pub fn rat_pow(q: &Rational, r: &Rational) -> Result<Rational> {
    if !q.is_positive() {
        return domain(format!("rat_pow needs a positive base, got {q}"));
    }
    let a = r
        .numer()
        .to_i64()
        .ok_or_else(|| Error::Domain(format!("exponent {r} too large")))?;
    let f = r
        .denom()
        .to_u32()
        .ok_or_else(|| Error::Domain(format!("root index of {r} too large")))?;
    let raised = q.pow(a)?;
    if f == 1 {
        return Ok(raised);
    }
    let not_exact = || Error::NotExactPower { base: q.to_string(), exponent: r.to_string() };
    let root = |n: &BigInt| -> Option<BigInt> {
        let c = n.nth_root(f);
        (num_traits::pow(c.clone(), f as usize) == *n).then_some(c)
    };
    let num = root(raised.numer()).ok_or_else(not_exact)?;
    let den = root(raised.denom()).ok_or_else(not_exact)?;
    Rational::new(num, den)
}

/// `q^r = exp(r ln q)` at the precision of the inputs.
pub fn real_pow(q: &RealP, r: &RealP) -> Result<RealP> {
    if !q.is_positive() {
        return domain("real_pow needs a positive base");
    }
    q.pow(r)
}

/// Exact integer-exponent power, any nonzero base.
pub(crate) fn int_pow(q: &Rational, k: i64) -> Rational {
    q.pow(k).expect("nonzero base")
}
