//! Modified q-Euler numbers and polynomials, the star variant with weight
//! `q^l`, alternating sums of powers of q-integers, and the distribution
//! relation over odd moduli.
//!
//! Every function here is exact. Arguments `x` enter only through
//! `t = q^x` carried by [`QPower`].

mod base;
mod distribution;
mod numbers;
mod sums;

pub use base::{QBase, QPower};
pub use distribution::distribution_lhs;
pub use numbers::{
    q_euler_number, q_euler_numbers, q_euler_poly, q_euler_poly_via_numbers, q_euler_star_number,
    q_euler_star_poly, q_int,
};
pub use sums::{alt_q_power_sum, alt_q_power_sum_closed, weighted_alt_q_power_sum, weighted_alt_q_power_sum_closed};
