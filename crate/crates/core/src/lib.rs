//! Exact q-Euler numbers and polynomials, alternating sums of powers of
//! q-integers, and Euler q-zeta / q-L-function evaluation.
//!
//! Identity-level quantities are [`Rational`]; values at non-integer `s`
//! are [`RealP`] with an absolute error of at most `10^-(P-10)`.

pub mod classical;
pub mod dirichlet;
pub mod error;
pub mod exactnum;
pub mod par;
pub mod qeuler;
pub mod qzeta;
pub mod verify;

pub use error::{Error, Result};
pub use exactnum::{ComplexP, Rational, RealP, DEFAULT_PRECISION};

pub use qeuler::{QBase, QPower};
