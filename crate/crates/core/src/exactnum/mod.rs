//! Exact rationals, precision-tagged reals, and the combinatorial and power
//! kernels shared by the rest of the crate.

mod combinatorics;
mod complex;
mod powers;
mod rational;
mod real;

pub use combinatorics::{binom, gen_binom};
pub use complex::ComplexP;
pub use powers::{rat_pow, real_pow};
pub(crate) use powers::int_pow;
pub use rational::Rational;
pub use real::{RealP, DEFAULT_PRECISION, GUARD_DIGITS};
