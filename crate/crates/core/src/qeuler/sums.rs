use super::base::{QBase, QPower};
use super::numbers::{q_euler_number, q_euler_poly, q_euler_star_number, q_euler_star_poly, q_int};
use crate::exactnum::Rational;

/// `sum_{l=0}^{n-1} (-1)^l [l]_q^m`, summed term by term.
pub fn alt_q_power_sum(m: u32, n: u64, q: &QBase) -> Rational {
    (0..n)
        .map(|l| Rational::sign_pow(l as i64) * q_int(l, q).pow(m as i64).expect("nonnegative"))
        .sum()
}

/// `(E_{m,q} + (-1)^(n+1) E_{m,q}(n)) / 2`.
pub fn alt_q_power_sum_closed(m: u32, n: u64, q: &QBase) -> Rational {
    let tail = q_euler_poly(m, &QPower::at_integer(q, n as i64));
    (q_euler_number(m, q) + Rational::sign_pow(n as i64 + 1) * tail) / Rational::integer(2)
}

/// `sum_{l=0}^{n-1} (-1)^l q^l [l]_q^m`, summed term by term.
pub fn weighted_alt_q_power_sum(m: u32, n: u64, q: &QBase) -> Rational {
    (0..n)
        .map(|l| {
            Rational::sign_pow(l as i64) * q.pow(l as i64) * q_int(l, q).pow(m as i64).expect("nonnegative")
        })
        .sum()
}

/// `(E*_{m,q} + (-1)^(n+1) q^n E*_{m,q}(n)) / [2]_q`.
pub fn weighted_alt_q_power_sum_closed(m: u32, n: u64, q: &QBase) -> Rational {
    let tail = q.pow(n as i64) * q_euler_star_poly(m, &QPower::at_integer(q, n as i64));
    (q_euler_star_number(m, q) + Rational::sign_pow(n as i64 + 1) * tail) / q_int(2, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn anchors() {
        let q = QBase::new(r(1, 2)).unwrap();
        assert_eq!(alt_q_power_sum(2, 3, &q), r(5, 4));
        assert_eq!(alt_q_power_sum(2, 2, &q), r(-1, 1));
        assert_eq!(alt_q_power_sum_closed(2, 3, &q), r(5, 4));
        assert_eq!(alt_q_power_sum_closed(2, 2, &q), r(-1, 1));
        assert_eq!(weighted_alt_q_power_sum(1, 2, &q), r(-1, 2));
        assert_eq!(weighted_alt_q_power_sum(1, 3, &q), r(-1, 8));
        assert_eq!(weighted_alt_q_power_sum_closed(1, 2, &q), r(-1, 2));
        assert_eq!(weighted_alt_q_power_sum_closed(1, 3, &q), r(-1, 8));
    }

    #[test]
    fn single_term_sums_vanish() {
        for q in [r(1, 3), r(5, 2)] {
            let q = QBase::new(q).unwrap();
            for m in 1..6 {
                assert!(alt_q_power_sum(m, 1, &q).is_zero());
                assert!(alt_q_power_sum_closed(m, 1, &q).is_zero());
                assert!(weighted_alt_q_power_sum(m, 1, &q).is_zero());
                assert!(weighted_alt_q_power_sum_closed(m, 1, &q).is_zero());
            }
        }
    }

    #[test]
    fn power_dependent_sign_fails() {
        // (-1)^(m+1) in place of (-1)^(n+1) misses brute force at m=2, n=3.
        let q = QBase::new(r(1, 2)).unwrap();
        let tail = q_euler_poly(2, &QPower::at_integer(&q, 3));
        let wrong = (q_euler_number(2, &q) - tail) / r(2, 1);
        assert_ne!(wrong, alt_q_power_sum(2, 3, &q));
    }

    #[test]
    fn weighted_needs_q_power_factor() {
        let q = QBase::new(r(1, 2)).unwrap();
        let m = 2;
        let n = 3;
        let no_factor = (q_euler_star_number(m, &q)
            + Rational::sign_pow(n as i64 + 1) * q_euler_star_poly(m, &QPower::at_integer(&q, n as i64)))
            / q_int(2, &q);
        assert_ne!(no_factor, weighted_alt_q_power_sum(m, n, &q));
    }
}
