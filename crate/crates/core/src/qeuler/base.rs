use serde::Serialize;

use crate::error::{domain, Result};
use crate::exactnum::{int_pow, rat_pow, Rational};

/// A validated rational `q`.
///
/// Always `q > 0` and `q != 1`. With `zeta_domain` set, additionally
/// `0 < q < 1`, the regime where the q-series and q-zeta values converge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QBase {
    q: Rational,
    zeta_domain: bool,
}

impl QBase {
    /// A base for the exact identities (any positive `q != 1`).
    pub fn new(q: Rational) -> Result<Self> {
        if !q.is_positive() {
            return domain(format!("q must be positive, got {q}"));
        }
        if q.is_one() {
            return domain("q = 1 is the classical case; use the classical module");
        }
        Ok(Self { q, zeta_domain: false })
    }

    /// A base for zeta evaluation, `0 < q < 1`.
    pub fn zeta(q: Rational) -> Result<Self> {
        let mut base = Self::new(q)?;
        if base.q > Rational::one() {
            return domain(format!("zeta evaluation needs 0 < q < 1, got {}", base.q));
        }
        base.zeta_domain = true;
        Ok(base)
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn is_zeta_domain(&self) -> bool {
        self.zeta_domain
    }

    /// `q^k` exactly.
    pub fn pow(&self, k: i64) -> Rational {
        int_pow(&self.q, k)
    }

    /// The base `q^f` (same domain).
    pub fn raised(&self, f: u32) -> Self {
        Self { q: self.pow(f as i64), zeta_domain: self.zeta_domain }
    }

    /// `[x]_q = (1 - t)/(1 - q)` for `t = q^x`.
    pub fn q_int_of(&self, t: &Rational) -> Rational {
        (Rational::one() - t) / (Rational::one() - &self.q)
    }

    /// `1/(1 - q)`.
    pub(crate) fn inv_one_minus(&self) -> Rational {
        (Rational::one() - &self.q).recip().expect("q != 1")
    }
}

/// `t = q^y` held exactly, so polynomial values at fractional `y` stay
/// rational whenever the power is.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QPower {
    base: QBase,
    t: Rational,
    exponent: Option<Rational>,
}

impl QPower {
    /// `q^y`, failing with `NotExactPower` if it is irrational.
    pub fn at(base: &QBase, y: &Rational) -> Result<Self> {
        let t = if let Some(k) = y.to_i64() { base.pow(k) } else { rat_pow(base.q(), y)? };
        Ok(Self { base: base.clone(), t, exponent: Some(y.clone()) })
    }

    pub fn at_integer(base: &QBase, x: i64) -> Self {
        Self { base: base.clone(), t: base.pow(x), exponent: Some(Rational::integer(x)) }
    }

    /// A caller-supplied `t`, asserted to be some power of `q`.
    pub fn from_value(base: &QBase, t: Rational) -> Result<Self> {
        if !t.is_positive() {
            return domain(format!("q^x must be positive, got {t}"));
        }
        Ok(Self { base: base.clone(), t, exponent: None })
    }

    pub fn base(&self) -> &QBase {
        &self.base
    }

    pub fn q(&self) -> &Rational {
        self.base.q()
    }

    pub fn t(&self) -> &Rational {
        &self.t
    }

    pub fn exponent(&self) -> Option<&Rational> {
        self.exponent.as_ref()
    }

    /// Checks `t^f = q^a` for the exponent hint `a/f`. True without a hint.
    pub fn verify(&self) -> bool {
        let Some(y) = &self.exponent else { return true };
        let (Some(a), Some(f)) = (num_traits::ToPrimitive::to_i64(y.numer()), num_traits::ToPrimitive::to_i64(y.denom())) else {
            return false;
        };
        int_pow(&self.t, f) == self.base.pow(a)
    }

    /// `[x]_q` for this `x`.
    pub fn q_int(&self) -> Rational {
        self.base.q_int_of(&self.t)
    }
}
