use num_bigint::BigInt;
use num_traits::One;

use super::rational::Rational;
use super::real::RealP;

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binom(n: u64, k: u64) -> Rational {
    Rational::integer(binom_int(n, k))
}

fn binom_int(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `C(s + k - 1, k) = prod_{i<k} (s + i) / k!`, the coefficient of `u^k` in
/// `(1 - u)^(-s)`.
pub fn gen_binom(s: &RealP, k: u64) -> RealP {
    let p = s.precision();
    let mut acc = RealP::one(p);
    for i in 0..k {
        acc = (&acc * &(s + &RealP::from_i64(i as i64, p))).div_int(i as i64 + 1);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binom(4, 2), Rational::integer(6));
        assert_eq!(binom(7, 0), Rational::integer(1));
        assert_eq!(binom(10, 4), Rational::integer(210));
        assert_eq!(binom(3, 5), Rational::zero());
    }

    #[test]
    fn pascal_rule() {
        for n in 1..=30u64 {
            for k in 1..=n {
                assert_eq!(binom(n, k), binom(n - 1, k - 1) + binom(n - 1, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn generalized_coefficients() {
        let p = 50;
        assert_eq!(gen_binom(&RealP::from_i64(2, p), 3), RealP::from_i64(4, p));
        assert_eq!(gen_binom(&RealP::from_i64(-2, p), 3), RealP::zero(p));
        assert_eq!(gen_binom(&RealP::from_i64(-2, p), 1), RealP::from_i64(-2, p));
        assert_eq!(gen_binom(&RealP::from_i64(5, p), 0), RealP::one(p));
    }

    #[test]
    fn negative_integer_matches_signed_binomial() {
        let p = 50;
        let tol = RealP::tolerance(p);
        for m in 0..=12u64 {
            let s = RealP::from_i64(-(m as i64), p);
            for k in 0..=40u64 {
                let expect = RealP::from_rational(&(Rational::sign_pow(k as i64) * binom(m, k)), p);
                assert!((&gen_binom(&s, k) - &expect).abs() <= tol, "m={m} k={k}");
            }
        }
    }
}
