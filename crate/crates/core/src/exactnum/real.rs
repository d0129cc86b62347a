//! Fixed-point decimal reals with a declared precision.
//!
//! A [`RealP`] of precision `P` stores `mant * 10^-(P + GUARD_DIGITS)`.
//! Every operation rounds to the nearest unit in the last place, so a
//! pipeline of `N` operations on bounded values accumulates at most about
//! `N` ulps of absolute error. With 20 guard digits the result is certified
//! to `10^-(P-10)` as long as pipelines stay below ~10^9 operations, which
//! every routine in this crate does by a wide margin.
//!
//! Transcendental functions (`ln`, `exp`, `sin_cos`, `pi`) evaluate at a
//! further 10 digits and round back.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::rational::Rational;
use crate::error::{Error, Result};

pub const GUARD_DIGITS: u32 = 20;
pub const DEFAULT_PRECISION: u32 = 50;
/// Extra digits used inside transcendental kernels.
const KERNEL_DIGITS: u32 = 10;

#[derive(Clone, PartialEq, Eq)]
pub struct RealP {
    mant: BigInt,
    precision: u32,
}

fn pow10(n: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u32), n as usize)
}

/// `n / d` rounded half away from zero. `d` must be nonzero.
fn div_round(n: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = n.div_rem(d);
    if (r.abs() * 2u32) >= d.abs() {
        if (n.sign() == Sign::Minus) != (d.sign() == Sign::Minus) {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

impl RealP {
    pub fn scale(&self) -> u32 {
        self.precision + GUARD_DIGITS
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn zero(precision: u32) -> Self {
        Self { mant: BigInt::zero(), precision }
    }

    pub fn one(precision: u32) -> Self {
        Self::from_i64(1, precision)
    }

    pub fn from_i64(n: i64, precision: u32) -> Self {
        Self { mant: BigInt::from(n) * pow10(precision + GUARD_DIGITS), precision }
    }

    pub fn from_rational(r: &Rational, precision: u32) -> Self {
        let scaled = r.numer() * pow10(precision + GUARD_DIGITS);
        Self { mant: div_round(&scaled, r.denom()), precision }
    }

    /// `10^-digits` at the given precision (zero if below the last place).
    pub fn pow10_neg(digits: u32, precision: u32) -> Self {
        let scale = precision + GUARD_DIGITS;
        let mant = if digits > scale { BigInt::zero() } else { pow10(scale - digits) };
        Self { mant, precision }
    }

    /// Certified absolute tolerance `10^-(P-10)` for precision `P`.
    pub fn tolerance(precision: u32) -> Self {
        Self::pow10_neg(precision.saturating_sub(10), precision)
    }

    /// The exact rational value of the stored fixed-point number.
    pub fn to_rational(&self) -> Rational {
        Rational::new(self.mant.clone(), pow10(self.scale())).expect("nonzero scale")
    }

    pub fn to_f64(&self) -> f64 {
        self.to_rational().to_f64()
    }

    /// Re-round to another precision.
    pub fn with_precision(&self, precision: u32) -> Self {
        if precision == self.precision {
            return self.clone();
        }
        let mant = if precision > self.precision {
            &self.mant * pow10(precision - self.precision)
        } else {
            div_round(&self.mant, &pow10(self.precision - precision))
        };
        Self { mant, precision }
    }

    fn aligned(&self, other: &Self) -> (BigInt, BigInt, u32) {
        let p = self.precision.min(other.precision);
        (self.with_precision(p).mant, other.with_precision(p).mant, p)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    pub fn abs(&self) -> Self {
        Self { mant: self.mant.abs(), precision: self.precision }
    }

    /// `Some(n)` when the stored value is exactly the integer `n`.
    pub fn as_integer(&self) -> Option<BigInt> {
        let (q, r) = self.mant.div_rem(&pow10(self.scale()));
        r.is_zero().then_some(q)
    }

    pub fn mul_int(&self, k: i64) -> Self {
        Self { mant: &self.mant * k, precision: self.precision }
    }

    pub fn div_int(&self, k: i64) -> Self {
        assert!(k != 0, "real division by zero");
        Self { mant: div_round(&self.mant, &BigInt::from(k)), precision: self.precision }
    }

    /// `self / 2^k`.
    pub fn div_pow2(&self, k: u32) -> Self {
        Self { mant: div_round(&self.mant, &(BigInt::one() << k)), precision: self.precision }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (a, b, p) = self.aligned(rhs);
        Ok(Self { mant: div_round(&(a * pow10(p + GUARD_DIGITS)), &b), precision: p })
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one(self.precision).checked_div(self)
    }

    pub fn sqrt(&self) -> Result<Self> {
        if self.is_negative() {
            return Err(Error::Domain("square root of a negative number".into()));
        }
        let wide = &self.mant * pow10(self.scale() + 2);
        let root = wide.sqrt();
        Ok(Self { mant: div_round(&root, &BigInt::from(10)), precision: self.precision })
    }

    /// Integer power by repeated squaring at kernel precision.
    pub fn powi(&self, exp: i64) -> Result<Self> {
        if exp == 0 {
            return Ok(Self::one(self.precision));
        }
        if exp < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Extra digits cover the relative error growth of ~log2(|exp|) squarings
        // and the magnitude of large results.
        if self.is_zero() {
            return Ok(Self::zero(self.precision));
        }
        let mag = self.to_f64().abs().log10().abs() * exp.unsigned_abs() as f64;
        let extra = KERNEL_DIGITS + mag.ceil().min(1e6) as u32;
        let wp = self.precision + extra;
        let mut base = self.with_precision(wp);
        let mut acc = Self::one(wp);
        let mut e = exp.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        if exp < 0 {
            acc = acc.recip()?;
        }
        Ok(acc.with_precision(self.precision))
    }

    /// Natural logarithm; the argument must be positive.
    pub fn ln(&self) -> Result<Self> {
        if !self.is_positive() {
            return Err(Error::Domain("logarithm of a non-positive number".into()));
        }
        let p = self.precision;
        let wp = p + KERNEL_DIGITS;
        let x = self.with_precision(wp);
        let unit = pow10(x.scale());
        // Estimate k with x ~ 2^k, then pull m = x / 2^k into [3/4, 3/2).
        let mut k = x.mant.bits() as i64 - unit.bits() as i64;
        let three_quarters = &unit * 3u32 / 4u32;
        let three_halves = &unit * 3u32 / 2u32;
        let reduce = |k: i64| -> BigInt {
            if k >= 0 {
                div_round(&x.mant, &(BigInt::one() << k as u64))
            } else {
                &x.mant << (-k) as u64
            }
        };
        let mut m = reduce(k);
        while m < three_quarters {
            k -= 1;
            m = reduce(k);
        }
        while m >= three_halves {
            k += 1;
            m = reduce(k);
        }
        let m = Self { mant: m, precision: wp };
        let one = Self::one(wp);
        let z = (&m - &one).checked_div(&(&m + &one))?;
        let mut result = atanh_series(&z).mul_int(2);
        if k != 0 {
            result = &result + &ln2(wp).mul_int(k);
        }
        Ok(result.with_precision(p))
    }

    /// Exponential function.
    pub fn exp(&self) -> Self {
        let p = self.precision;
        if self.is_zero() {
            return Self::one(p);
        }
        let approx = self.to_f64();
        let ln2_f = std::f64::consts::LN_2;
        // Results below the last place round to zero.
        if approx < -((p + GUARD_DIGITS + 2) as f64) * std::f64::consts::LN_10 {
            return Self::zero(p);
        }
        let k = (approx / ln2_f).round() as i64;
        let extra = if k > 0 { (k as f64 * std::f64::consts::LOG10_2).ceil() as u32 } else { 0 };
        let wp = p + KERNEL_DIGITS + 4 + extra;
        let x = self.with_precision(wp);
        let r = &x - &ln2(wp).mul_int(k);
        const HALVINGS: u32 = 12;
        let r = Self { mant: div_round(&r.mant, &(BigInt::one() << HALVINGS)), precision: wp };
        let mut sum = Self::one(wp);
        let mut term = Self::one(wp);
        let mut n = 1i64;
        loop {
            term = (&term * &r).div_int(n);
            if term.is_zero() {
                break;
            }
            sum = &sum + &term;
            n += 1;
        }
        for _ in 0..HALVINGS {
            sum = &sum * &sum;
        }
        let mant = if k >= 0 {
            sum.mant << k as u64
        } else {
            div_round(&sum.mant, &(BigInt::one() << (-k) as u64))
        };
        Self { mant, precision: wp }.with_precision(p)
    }

    /// `self^exponent` for a positive base.
    pub fn pow(&self, exponent: &Self) -> Result<Self> {
        if exponent.is_zero() {
            return Ok(Self::one(self.precision));
        }
        if let Some(n) = exponent.as_integer().and_then(|n| n.to_i64()) {
            if !self.is_positive() && !self.is_zero() {
                return Err(Error::Domain("power of a negative base".into()));
            }
            return self.powi(n);
        }
        if !self.is_positive() {
            return Err(Error::Domain("real power needs a positive base".into()));
        }
        let p = self.precision.min(exponent.precision);
        let ln_base = self.with_precision(p + KERNEL_DIGITS).ln()?;
        let prod = &ln_base * &exponent.with_precision(p + KERNEL_DIGITS);
        // Large results lose absolute digits; widen again based on magnitude.
        let mag = prod.to_f64() / std::f64::consts::LN_10;
        if mag > 0.0 {
            let wp = p + KERNEL_DIGITS + mag.ceil() as u32;
            let ln_base = self.with_precision(wp).ln()?;
            let prod = &ln_base * &exponent.with_precision(wp);
            return Ok(prod.exp().with_precision(p));
        }
        Ok(prod.exp().with_precision(p))
    }

    /// `pi` at the requested precision (Machin's formula, cached).
    pub fn pi(precision: u32) -> Self {
        cached(&PI_CACHE, precision, |wp| {
            let a = atan_inv(5, wp).mul_int(16);
            let b = atan_inv(239, wp).mul_int(4);
            &a - &b
        })
    }

    /// `(sin x, cos x)`.
    pub fn sin_cos(&self) -> (Self, Self) {
        let p = self.precision;
        let wp = p + KERNEL_DIGITS;
        let pi = Self::pi(wp);
        let two_pi = pi.mul_int(2);
        let mut x = self.with_precision(wp);
        // Reduce into [-pi, pi].
        let turns = (x.to_f64() / (2.0 * std::f64::consts::PI)).round() as i64;
        if turns != 0 {
            x = &x - &two_pi.mul_int(turns);
        }
        let x2 = &x * &x;
        let mut sin = x.clone();
        let mut cos = Self::one(wp);
        let mut term_s = x.clone();
        let mut term_c = Self::one(wp);
        let mut n = 1i64;
        loop {
            term_c = -((&term_c * &x2).div_int((2 * n - 1) * (2 * n)));
            term_s = -((&term_s * &x2).div_int((2 * n) * (2 * n + 1)));
            if term_c.is_zero() && term_s.is_zero() {
                break;
            }
            cos = &cos + &term_c;
            sin = &sin + &term_s;
            n += 1;
        }
        (sin.with_precision(p), cos.with_precision(p))
    }

    /// Decimal rendering with `P` significant digits, never showing more
    /// fractional digits than `P`.
    pub fn to_decimal_string(&self) -> String {
        let scale = self.scale() as i64;
        let digits = self.mant.abs().to_string();
        let len = digits.len() as i64;
        let drop = (len - self.precision as i64).max(GUARD_DIGITS as i64);
        let rounded = div_round(&self.mant.abs(), &pow10(drop as u32));
        if rounded.is_zero() {
            return "0".to_string();
        }
        let frac_digits = scale - drop;
        let mut body = rounded.to_string();
        if frac_digits > 0 {
            let fd = frac_digits as usize;
            if body.len() <= fd {
                body = format!("{}{}", "0".repeat(fd + 1 - body.len()), body);
            }
            body.insert(body.len() - fd, '.');
        } else {
            body.push_str(&"0".repeat((-frac_digits) as usize));
        }
        if self.mant.is_negative() {
            body.insert(0, '-');
        }
        body
    }
}

fn atanh_series(z: &RealP) -> RealP {
    let z2 = z * z;
    let mut power = z.clone();
    let mut sum = z.clone();
    let mut k = 1i64;
    loop {
        power = &power * &z2;
        let term = power.div_int(2 * k + 1);
        if term.is_zero() {
            break;
        }
        sum = &sum + &term;
        k += 1;
    }
    sum
}

/// `atan(1/n)` for an integer `n > 1`.
fn atan_inv(n: i64, precision: u32) -> RealP {
    let x = RealP::one(precision).div_int(n);
    let n2 = n * n;
    let mut power = x.clone();
    let mut sum = x;
    let mut k = 1i64;
    loop {
        power = power.div_int(n2);
        let term = power.div_int(2 * k + 1);
        if term.is_zero() {
            break;
        }
        if k % 2 == 1 {
            sum = &sum - &term;
        } else {
            sum = &sum + &term;
        }
        k += 1;
    }
    sum
}

type ConstCache = OnceLock<RwLock<HashMap<u32, RealP>>>;
static LN2_CACHE: ConstCache = OnceLock::new();
static PI_CACHE: ConstCache = OnceLock::new();

fn cached(cache: &ConstCache, precision: u32, compute: impl Fn(u32) -> RealP) -> RealP {
    let map = cache.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(v) = map.read().expect("constant cache poisoned").get(&precision) {
        return v.clone();
    }
    let value = compute(precision + KERNEL_DIGITS).with_precision(precision);
    map.write().expect("constant cache poisoned").insert(precision, value.clone());
    value
}

fn ln2(precision: u32) -> RealP {
    cached(&LN2_CACHE, precision, |wp| atanh_series(&RealP::one(wp).div_int(3)).mul_int(2))
}

impl fmt::Display for RealP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string())
    }
}

impl fmt::Debug for RealP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (P={})", self.to_decimal_string(), self.precision)
    }
}

impl Serialize for RealP {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("RealP", 2)?;
        st.serialize_field("value", &self.to_decimal_string())?;
        st.serialize_field("precision", &self.precision)?;
        st.end()
    }
}

impl PartialOrd for RealP {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let (a, b, _) = self.aligned(other);
        Some(a.cmp(&b))
    }
}

impl Neg for RealP {
    type Output = RealP;
    fn neg(self) -> RealP {
        RealP { mant: -self.mant, precision: self.precision }
    }
}

impl Neg for &RealP {
    type Output = RealP;
    fn neg(self) -> RealP {
        RealP { mant: -&self.mant, precision: self.precision }
    }
}

impl Add for &RealP {
    type Output = RealP;
    fn add(self, rhs: &RealP) -> RealP {
        let (a, b, p) = self.aligned(rhs);
        RealP { mant: a + b, precision: p }
    }
}

impl Sub for &RealP {
    type Output = RealP;
    fn sub(self, rhs: &RealP) -> RealP {
        let (a, b, p) = self.aligned(rhs);
        RealP { mant: a - b, precision: p }
    }
}

impl Mul for &RealP {
    type Output = RealP;
    fn mul(self, rhs: &RealP) -> RealP {
        let (a, b, p) = self.aligned(rhs);
        RealP { mant: div_round(&(a * b), &pow10(p + GUARD_DIGITS)), precision: p }
    }
}

impl Div for &RealP {
    type Output = RealP;
    fn div(self, rhs: &RealP) -> RealP {
        self.checked_div(rhs).expect("real division by zero")
    }
}

macro_rules! owned_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait for RealP {
            type Output = RealP;
            fn $method(self, rhs: RealP) -> RealP {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RealP> for RealP {
            type Output = RealP;
            fn $method(self, rhs: &RealP) -> RealP {
                (&self).$method(rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul, Div div);

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn close(a: &RealP, b: &RealP, digits: u32) -> bool {
        (a - b).abs() <= RealP::pow10_neg(digits, a.precision())
    }

    #[test]
    fn rational_roundtrip_and_rounding() {
        let third = RealP::from_rational(&r(1, 3), 5);
        assert_eq!(third.to_decimal_string(), "0.33333");
        let two_thirds = RealP::from_rational(&r(-2, 3), 5);
        assert_eq!(two_thirds.to_decimal_string(), "-0.66667");
        let big = RealP::from_rational(&r(125, 1), 5);
        assert_eq!(big.to_decimal_string(), "125.00");
        assert_eq!(RealP::zero(5).to_decimal_string(), "0");
    }

    #[test]
    fn ln_and_exp_known_values() {
        let p = 60;
        let ln2 = RealP::from_i64(2, p).ln().unwrap();
        let known = "0.693147180559945309417232121458176568075500134360255254120680";
        assert!(ln2.to_decimal_string().starts_with(&known[..55]), "{ln2}");
        let e = RealP::one(p).exp();
        let known_e = "2.71828182845904523536028747135266249775724709369995957496697";
        assert!(e.to_decimal_string().starts_with(&known_e[..55]), "{e}");
        // exp(ln x) == x
        for x in [r(1, 7), r(5, 2), r(1000, 3), r(1, 100000)] {
            let v = RealP::from_rational(&x, p);
            assert!(close(&v.ln().unwrap().exp(), &v, p + 5), "{x}");
        }
        assert!(RealP::zero(p).ln().is_err());
        assert!(RealP::from_i64(-1, p).ln().is_err());
    }

    #[test]
    fn pi_and_trig() {
        let pi = RealP::pi(50);
        assert!(pi.to_decimal_string().starts_with("3.14159265358979323846264338327950288419716939937"));
        let (s, c) = RealP::pi(50).div_int(3).sin_cos();
        let half = RealP::from_rational(&r(1, 2), 50);
        assert!(close(&c, &half, 60));
        let three_quarters = RealP::from_rational(&r(3, 4), 50);
        assert!(close(&(&s * &s), &three_quarters, 60));
    }

    #[test]
    fn powers() {
        let p = 50;
        let four = RealP::from_i64(4, p);
        let half = RealP::from_rational(&r(1, 2), p);
        assert!(close(&four.pow(&half).unwrap(), &RealP::from_i64(2, p), 60));
        assert_eq!(half.pow(&RealP::zero(p)).unwrap(), RealP::one(p));
        assert_eq!(half.powi(-3).unwrap(), RealP::from_i64(8, p));
        assert!(RealP::from_i64(-2, p).pow(&half).is_err());
        let big = RealP::from_i64(10, p).pow(&RealP::from_rational(&r(61, 2), p)).unwrap();
        let expect = RealP::from_i64(10, p + 40).powi(30).unwrap()
            * RealP::from_i64(10, p + 40).sqrt().unwrap();
        assert!(close(&big, &expect.with_precision(p), 35));
    }

    #[test]
    fn sqrt_exact_square() {
        let v = RealP::from_rational(&r(9, 4), 30);
        assert_eq!(v.sqrt().unwrap(), RealP::from_rational(&r(3, 2), 30));
    }
}
