use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::Serialize;

use super::real::RealP;
use crate::error::Result;

/// Complex number with [`RealP`] parts.
#[derive(Clone, PartialEq, Serialize)]
pub struct ComplexP {
    pub re: RealP,
    pub im: RealP,
}

impl ComplexP {
    pub fn new(re: RealP, im: RealP) -> Self {
        Self { re, im }
    }

    pub fn real(re: RealP) -> Self {
        let p = re.precision();
        Self { re, im: RealP::zero(p) }
    }

    pub fn zero(precision: u32) -> Self {
        Self::real(RealP::zero(precision))
    }

    pub fn precision(&self) -> u32 {
        self.re.precision().min(self.im.precision())
    }

    /// `exp(2 pi i * num / den)`.
    pub fn root_of_unity(num: u64, den: u64, precision: u32) -> Self {
        let num = num % den;
        // Exact on the axes so real characters stay free of rounding.
        if num == 0 {
            return Self::real(RealP::one(precision));
        }
        if 2 * num == den {
            return Self::real(RealP::from_i64(-1, precision));
        }
        if 4 * num == den {
            return Self::new(RealP::zero(precision), RealP::one(precision));
        }
        if 4 * num == 3 * den {
            return Self::new(RealP::zero(precision), RealP::from_i64(-1, precision));
        }
        let angle = RealP::pi(precision + 5).mul_int(2 * num as i64).div_int(den as i64);
        let (s, c) = angle.sin_cos();
        Self::new(c.with_precision(precision), s.with_precision(precision))
    }

    pub fn scale(&self, k: &RealP) -> Self {
        Self::new(&self.re * k, &self.im * k)
    }

    pub fn abs(&self) -> Result<RealP> {
        (&(&self.re * &self.re) + &(&self.im * &self.im)).sqrt()
    }
}

impl Add for &ComplexP {
    type Output = ComplexP;
    fn add(self, rhs: &ComplexP) -> ComplexP {
        ComplexP::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &ComplexP {
    type Output = ComplexP;
    fn sub(self, rhs: &ComplexP) -> ComplexP {
        ComplexP::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &ComplexP {
    type Output = ComplexP;
    fn mul(self, rhs: &ComplexP) -> ComplexP {
        ComplexP::new(
            &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        )
    }
}

impl fmt::Display for ComplexP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{} - {}i", self.re, self.im.abs())
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for ComplexP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (P={})", self.precision())
    }
}
