use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::base::{QBase, QPower};
use crate::exactnum::{binom, Rational};

/// q-integer `[k]_q = (1 - q^k)/(1 - q)`.
pub fn q_int(k: u64, q: &QBase) -> Rational {
    q.q_int_of(&q.pow(k as i64))
}

/// `scale * (1/(1-q))^n * sum_j C(n,j) (-1)^j t^j / (1 + q^(j + shift))`,
/// the common shape of the four closed forms below.
fn closed_sum(n: u32, q: &QBase, t: &Rational, shift: i64, scale: Rational) -> Rational {
    let mut tj = Rational::one();
    let mut qj = q.pow(shift);
    let mut acc = Rational::zero();
    for j in 0..=n as u64 {
        let term = binom(n as u64, j) * &tj / (Rational::one() + &qj);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= &term;
        }
        tj *= t;
        qj *= q.q();
    }
    scale * q.inv_one_minus().pow(n as i64).expect("nonzero") * acc
}

type Memo = RwLock<HashMap<Rational, Vec<Rational>>>;
static NUMBERS: OnceLock<Memo> = OnceLock::new();

/// Modified q-Euler number
/// `E_{n,q} = 2 (1/(1-q))^n sum_{j=0}^{n} C(n,j) (-1)^j / (1 + q^j)`.
pub fn q_euler_number(n: u32, q: &QBase) -> Rational {
    q_euler_numbers(n, q).swap_remove(n as usize)
}

/// `E_{0,q}..=E_{n,q}`, memoized per `q`.
pub fn q_euler_numbers(n: u32, q: &QBase) -> Vec<Rational> {
    let memo = NUMBERS.get_or_init(|| RwLock::new(HashMap::new()));
    let len = n as usize + 1;
    if let Some(v) = memo.read().expect("memo poisoned").get(q.q()) {
        if v.len() >= len {
            return v[..len].to_vec();
        }
    }
    let mut guard = memo.write().expect("memo poisoned");
    let table = guard.entry(q.q().clone()).or_default();
    let one = Rational::one();
    while table.len() < len {
        let k = table.len() as u32;
        table.push(closed_sum(k, q, &one, 0, Rational::integer(2)));
    }
    table[..len].to_vec()
}

/// q-Euler polynomial
/// `E_{n,q}(x) = 2 (1/(1-q))^n sum_j C(n,j) (-1)^j q^(xj) / (1 + q^j)`.
pub fn q_euler_poly(n: u32, qp: &QPower) -> Rational {
    closed_sum(n, qp.base(), qp.t(), 0, Rational::integer(2))
}

/// `E_{n,q}(x) = sum_{k=0}^{n} C(n,k) q^(kx) E_{k,q} [x]_q^(n-k)`.
pub fn q_euler_poly_via_numbers(n: u32, qp: &QPower) -> Rational {
    let numbers = q_euler_numbers(n, qp.base());
    let x_int = qp.q_int();
    let mut tk = Rational::one();
    let mut acc = Rational::zero();
    for (k, e) in numbers.iter().enumerate() {
        let k = k as u32;
        acc += binom(n as u64, k as u64) * &tk * e * x_int.pow((n - k) as i64).expect("nonnegative");
        tk *= qp.t();
    }
    acc
}

/// `E*_{n,q} = [2]_q (1/(1-q))^n sum_l C(n,l) (-1)^l / (1 + q^(l+1))`, the
/// q-Euler numbers with weight `q^l` in the alternating series.
pub fn q_euler_star_number(n: u32, q: &QBase) -> Rational {
    closed_sum(n, q, &Rational::one(), 1, q_int(2, q))
}

/// `E*_{n,q}(x) = [2]_q (1/(1-q))^n sum_j C(n,j) (-1)^j q^(xj) / (1 + q^(j+1))`.
pub fn q_euler_star_poly(n: u32, qp: &QPower) -> Rational {
    closed_sum(n, qp.base(), qp.t(), 1, q_int(2, qp.base()))
}
