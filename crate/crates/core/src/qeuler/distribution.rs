use super::base::{QBase, QPower};
use super::numbers::{q_euler_poly, q_int};
use crate::error::{domain, Result};
use crate::exactnum::Rational;

/// `[f]_q^m sum_{a=0}^{f-1} (-1)^a E_{m,q^f}((x+a)/f)` for odd `f`.
///
/// Each inner value uses base `q^f` with `(q^f)^((x+a)/f) = q^(x+a)`, so the
/// whole expression is exact for integer `x`. Equals `E_{m,q}(x)`.
pub fn distribution_lhs(m: u32, f: u32, x: i64, q: &QBase) -> Result<Rational> {
    if f == 0 || f.is_multiple_of(2) {
        return domain(format!("distribution relation needs an odd positive f, got {f}"));
    }
    let qf = q.raised(f);
    let sum: Rational = (0..f as i64)
        .map(|a| {
            let qp = QPower::from_value(&qf, q.pow(x + a)).expect("positive power");
            Rational::sign_pow(a) * q_euler_poly(m, &qp)
        })
        .sum();
    Ok(q_int(f as u64, q).pow(m as i64)? * sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qeuler::q_euler_number;

    fn r(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn anchors() {
        let q = QBase::new(r(1, 2)).unwrap();
        assert_eq!(distribution_lhs(1, 3, 0, &q).unwrap(), r(-2, 3));
        assert_eq!(distribution_lhs(2, 3, 0, &q).unwrap(), q_euler_number(2, &q));
        assert_eq!(distribution_lhs(2, 3, 0, &q).unwrap(), r(-4, 15));
    }

    #[test]
    fn f_one_is_identity() {
        let q = QBase::new(r(2, 3)).unwrap();
        for m in 0..5 {
            for x in -2..4 {
                assert_eq!(distribution_lhs(m, 1, x, &q).unwrap(), q_euler_poly(m, &QPower::at_integer(&q, x)));
            }
        }
    }

    #[test]
    fn even_f_rejected() {
        let q = QBase::new(r(1, 2)).unwrap();
        assert!(distribution_lhs(1, 2, 0, &q).is_err());
        assert!(distribution_lhs(1, 0, 0, &q).is_err());
    }

    #[test]
    fn inner_arguments_are_exact_fractional_powers() {
        let q = QBase::new(r(1, 2)).unwrap();
        let qf = q.raised(3);
        // (1/8)^(1/3) = 1/2 through the exact root path as well.
        let via_root = QPower::at(&qf, &r(1, 3)).unwrap();
        assert_eq!(via_root.t(), &q.pow(1));
    }
}
